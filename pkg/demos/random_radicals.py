"""Compare the trace-form radical with a brute-force nilpotent scan on a few random algebras."""

import random

from fanoqh import qalgebra as qa
from fanoqh.randalg import nilpotent_scan, random_algebra

rng = random.Random(7)
for _ in range(8):
    sample = random_algebra(rng)
    radical = qa.radical(sample.algebra)
    scan = nilpotent_scan(sample.algebra, radical.basis)
    print(f"{' x '.join(sample.blocks):<40} dim R = {radical.dim}  nilpotent points {scan.nilpotent}/{scan.points}  agree {scan.agree}")
