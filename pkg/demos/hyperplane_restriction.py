"""Restrict Gr(2,8) to its hyperplane section IG(2,8) and check that multiplication by h commutes with J."""

from fanoqh import verify
from fanoqh.qring import format_element
from fanoqh.rings import bundled_ring, grassmannian2

grass, section = grassmannian2(8), bundled_ring("IG(2,8)")
J = verify.hyperplane_restriction(grass, section)
for i in sorted(J.images, key=lambda i: grass.degrees[i]):
    image = {(k, 0): c for k, c in enumerate(J.images[i]) if c}
    print(f"J {grass.labels[i]:>6} = {format_element(section, image)}")

print(verify.corest_check(grass, section, J).detail)
i, j = verify.negative_control_pair(J)
print("after swapping", grass.labels[i], "and", grass.labels[j], "->", verify.corest_check(grass, section, J.swapped(i, j)).status)
