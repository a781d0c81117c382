"""Build QH(IG(2,6)) from its Chevalley row, inspect the radical, then deform along the point class."""

from fanoqh import qalgebra as qa
from fanoqh.qring import format_element
from fanoqh.rings import coadjoint_ring

ring = coadjoint_ring("C3")
print(f"{ring.name}: {ring.dim} Schubert classes, c1 = {ring.c1}")

algebra = ring.specialize()
report = qa.theorem1_report(algebra)
for vector, order in report.radical.witnesses:
    element = {(i, 0): c for i, c in enumerate(vector) if c}
    print(f"radical element {format_element(ring, element)} squares to zero: {order == 2}")
print(f"Q_Y positive definite: {report.qx.positive_definite}")
factors = qa.polys.factor_rational(qa.h_subalgebra_minimal_polynomial(algebra))
print("h minimal polynomial factors:", ", ".join(f"({qa.polys.format_poly(f)})^{m}" for f, m in factors))

point = ring.basis_element(ring.point_index)
verdict = qa.order2_nilpotent_obstruction(ring, point, surviving=[(ring.unit_index, 4)])
for name in ("C0", "D0", "W"):
    print(f"{name} = {format_element(ring, verdict.elements[name])}")
print(verdict.summary())
