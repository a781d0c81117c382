from fractions import Fraction

import pytest

from fanoqh import verify
from fanoqh.rings import bundled_ring, grassmannian2, projective_space


@pytest.fixture(scope="module")
def main_suite_results():
    return verify.run_suite("paper")


def test_default_suite_passes(main_suite_results):
    failed = [c.check_id for c in main_suite_results if c.status != verify.PASS]
    assert not failed


def test_report_is_order_independent(main_suite_results):
    parallel = verify.run_suite("paper", parallel=True)
    assert verify.format_report("paper", parallel) == verify.format_report("paper", main_suite_results)


def test_report_ids_sorted(main_suite_results):
    ids = [c.check_id for c in main_suite_results]
    assert ids == sorted(ids) and len(set(ids)) == len(ids)


def test_swapped_correspondence_fails_with_witness():
    X, Y = grassmannian2(6), bundled_ring("IG(2,6)")
    J = verify.hyperplane_restriction(X, Y)
    i, j = verify.negative_control_pair(J)
    res = verify.corest_check(X, Y, J.swapped(i, j))
    assert res.status == verify.FAIL and res.witness["failures"]
    assert "witness failures" in verify.format_report("x", [res])


def test_pullback_hyperplane_section():
    X, Y = grassmannian2(8), bundled_ring("IG(2,8)")
    J = verify.hyperplane_restriction(X, Y)
    h = [Fraction(0)] * Y.dim
    h[Y.hyperplane_index] = Fraction(1)
    assert J.images[X.hyperplane_index] == h


def test_missing_dictionary_entry_is_skipped():
    X, Y = grassmannian2(6), bundled_ring("IG(2,6)")
    J = verify.hyperplane_restriction(X, Y)
    J.images.pop(X.hyperplane_index)
    assert verify.corest_check(X, Y, J).status == verify.SKIPPED
    assert verify.corest_check(X, Y, None).status == verify.SKIPPED


def test_graded_dimension_mismatch_fails():
    r = grassmannian2(6)
    bad = dict(verify.grassmannian_even_dimensions(3))
    bad[0] += 1
    assert verify.graded_dimension_check(r, bad).status == verify.FAIL


def test_radical_check_on_projective_space():
    assert verify.radical_structure_check(projective_space(6)).status == verify.PASS


def test_kernel_profile_closed_form():
    for t in ("C3", "C4", "C5", "F4"):
        assert verify.chevalley_kernel_profile(t) == verify.expected_kernel_profile(t)


def test_unknown_suite():
    with pytest.raises(ValueError):
        verify.run_suite("nope")


def test_property_suite_small():
    res = verify.property_suite(count=15, seed=3)
    assert all(c.status == verify.PASS for c in res)
