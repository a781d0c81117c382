import pytest

from fanoqh import catalog
from fanoqh.catalog import HomogeneousSpace, homogeneous_dimension, homogeneous_index


def test_fiber_identity_all_rows():
    rep = catalog.fiber_dimension_check()
    assert rep.ok and len(rep.entries) > 20


def test_adjoint_dimension_identity():
    rep = catalog.adjoint_dimension_check()
    assert rep.ok
    # type C is compared through c1 = dim + 1
    assert {e.quantity for e in rep.entries if e.name.startswith("P")} == {"c1 - dim"}


def test_rows_agree_with_root_data():
    rows = catalog.cominuscule_catalog() + catalog.adjoint_catalog()
    assert catalog.root_system_check(rows).ok


@pytest.mark.parametrize(
    "group,node,dim,c1",
    [("A3", 2, 4, 4), ("C3", 3, 6, 4), ("E6", 6, 16, 12), ("E7", 7, 27, 18), ("C3", 2, 7, 5), ("F4", 4, 15, 11)],
)
def test_dimension_and_index_from_roots(group, node, dim, c1):
    space = HomogeneousSpace(group, (node,))
    assert homogeneous_dimension(space) == dim
    assert homogeneous_index(space) == c1


def test_codimension_bounds_differ_only_on_quadrics():
    rep = catalog.codimension_bound_check()
    assert {e.name[0] for e in rep.failures} == {"Q"}
    assert all(e.expected == e.found + 1 for e in rep.failures)


def test_gamma2_bound():
    assert catalog.gamma2_check().ok


def test_bad_rows_rejected():
    with pytest.raises(ValueError):
        catalog.cominuscule_row("Gr", 4, 5)
    with pytest.raises(ValueError):
        catalog.adjoint_row("H3")
