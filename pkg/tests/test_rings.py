from fractions import Fraction
from math import comb

import pytest
import sympy

from fanoqh import linalg
from fanoqh import qalgebra as qa
from fanoqh.completion import PartialTable, Underdetermined, associativity_complete
from fanoqh.qring import RingValidationError
from fanoqh.rings import (
    bundled_ring,
    chevalley_operator,
    coadjoint_chevalley,
    coadjoint_ring,
    complete_intersection,
    grassmannian2,
    projective_space,
    quantum_power,
    rim_hook_reduce,
    two_row_partitions,
)

x, y = sympy.symbols("x y")


def schur(a, b):
    """Two-variable Schur polynomial s_(a,b)(x, y)."""
    return sympy.expand(sympy.cancel((x ** (a + 1) * y**b - y ** (a + 1) * x**b) / (x - y)))


def schur_expand(poly):
    """Expand a symmetric polynomial in x, y into two-row Schur functions."""
    poly = sympy.Poly(sympy.expand(poly), x, y)
    out = {}
    while not poly.is_zero:
        (i, j), c = max(poly.terms())  # lex-leading monomial x^i y^j, i >= j
        out[(i, j)] = int(c)
        poly = poly - sympy.Poly(c * schur(i, j), x, y)
    return out


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_grassmannian_classical_part_matches_schur_oracle(n):
    r = grassmannian2(n)
    parts = two_row_partitions(n)
    for i, p in enumerate(parts):
        for j in range(i, len(parts)):
            expected = {
                lam: c for lam, c in schur_expand(schur(*p) * schur(*parts[j])).items() if lam[0] <= n - 2
            }
            got = {parts[k]: int(c) for (k, d), c in r.product(i, j).items() if d == 0}
            assert got == expected, (p, parts[j])


@pytest.mark.parametrize("n", range(4, 11))
def test_grassmannian_invariants(n):
    r = grassmannian2(n)
    parts = two_row_partitions(n)
    m = n - 2
    assert r.q_degree == 2 * n
    # Poincare duality pairs (a, b) with (m - b, m - a)
    for i, (a, b) in enumerate(parts):
        for j, p in enumerate(parts):
            assert r.classical_pairing(i, j) == (1 if p == (m - b, m - a) else 0)
    s11 = r.basis_element(r.index("(1,1)"))
    power = r.basis_element(r.unit_index)
    for _ in range(n - 2):
        power = r.multiply(power, s11)
    assert power == {(r.index(f"({m},{m})"), 0): Fraction(1)}
    assert qa.qx_form(r.specialize()).positive_definite


def test_grassmannian_degree_is_catalan():
    # deg Gr(2, n) = Catalan(n - 2)
    for n in range(4, 9):
        r = grassmannian2(n)
        top = quantum_power(r, 2 * (n - 2))
        catalan = comb(2 * (n - 2), n - 2) // (n - 1)
        assert top.get((r.point_index, 0)) == catalan


def test_quantum_pieri_gr24():
    r = grassmannian2(4)
    h = r.basis_element(r.hyperplane_index)
    pt = r.basis_element(r.point_index)
    assert r.multiply(h, pt) == {(r.index("(1,0)"), 1): Fraction(1)}


def test_rim_hook_reduce_examples():
    # in Gr(2,4): sigma_1 * sigma_2 has no q-term, sigma_1 * sigma_(2,1) = sigma_(2,2) + q
    assert rim_hook_reduce((3, 0), 4) is None
    assert rim_hook_reduce((3, 1), 4) == (1, 1, (0, 0))
    assert rim_hook_reduce((2, 2), 4) == (1, 0, (2, 2))


@pytest.mark.parametrize("n", range(1, 13))
def test_projective_space(n):
    r = projective_space(n)
    h = r.basis_element(1)
    assert quantum_power(r, n + 1) == {(0, 1): Fraction(1)}
    assert r.multiply(h, r.basis_element(n)) == {(0, 1): Fraction(1)}


# 20 admissible (n, degrees) pairs
CI_CASES = (
    [(n, [2]) for n in range(2, 9)]
    + [(n, [3]) for n in range(3, 9)]
    + [(n, [2, 2]) for n in range(3, 7)]
    + [(5, [4]), (6, [4]), (5, [2, 3])]
)


@pytest.mark.parametrize("n,degrees", CI_CASES)
def test_complete_intersection_identities(n, degrees):
    r = complete_intersection(n, degrees)
    c1 = r.c1
    big_d = 1
    for d in degrees:
        big_d *= d**d
    A = r.specialize()
    hc = quantum_power(r, c1)
    sq = r.multiply(hc, hc)
    spec = lambda z: [sum((c for (k, _), c in z.items() if k == i), Fraction(0)) for i in range(r.dim)]
    assert spec(sq) == [big_d * c for c in spec(hc)]
    hv = qa.hyperplane_vector(A)
    z = [a - big_d * b for a, b in zip(spec(quantum_power(r, c1 + 1)), hv)]
    assert qa.nilpotency_order(A, z) is not None
    assert qa.qx_form(A).positive_definite


def test_complete_intersection_rejects_low_dimension():
    with pytest.raises(ValueError):
        complete_intersection(2, [3])


def test_cubic_fourfold_h_subalgebra_not_semisimple():
    # s = 2: the minimal polynomial of h is X^2 (X^3 - 27), with a repeated factor
    A = complete_intersection(4, [3]).specialize()
    assert not qa.radical(A).is_semisimple


# --- coadjoint Chevalley data ------------------------------------------------


@pytest.mark.parametrize("t,degree", [("C3", 14), ("C4", 132), ("C5", 1430), ("F4", 78)])
def test_chevalley_degree_oracle(t, degree):
    """Classical part of h^dim on the unit gives the degree of the variety."""
    d = coadjoint_chevalley(t)
    m = chevalley_operator(d, q=0)
    v = [Fraction(int(deg == 0)) for deg in d.degrees]
    dim = max(d.degrees) // 2
    for _ in range(dim):
        v = linalg.matvec(m, v)
    top = d.degrees.index(max(d.degrees))
    assert v[top] == degree


@pytest.mark.parametrize("t", ["C3", "C4", "F4"])
def test_coadjoint_completion_matches_bundled(t):
    name = {"C3": "IG(2,6)", "C4": "IG(2,8)", "F4": "F4/P4"}[t]
    r = coadjoint_ring(t)
    assert r.same_table(bundled_ring(name))


def test_pt_identity_c3():
    r = bundled_ring("IG(2,6)")
    pt = r.basis_element(r.point_index)
    # pt * pt = q^2 sigma_{a1+a2+a3-theta}, theta = a1 + 2 a2 + a3
    assert r.multiply(pt, pt) == {(r.index("s:-a2"), 2): Fraction(1)}


def test_underdetermined_toy_has_one_free_parameter():
    # P^3-shaped grading with only the h^2 row known: h^3 = x pt stays free
    row = {0: {(2, 0): 1}, 1: {(3, 0): 1}, 2: {(0, 1): 1}, 3: {(1, 1): 1}}
    p = PartialTable("toy", ["1", "h", "h^2", "pt"], [0, 2, 4, 6], 4, [3, 2, 1, 0], {2: row})
    res = associativity_complete(p)
    assert isinstance(res, Underdetermined) and res.free == 1


def test_completion_is_idempotent():
    r = grassmannian2(5)
    rows = {i: {j: r.product(i, j) for j in range(r.dim)} for i in range(r.dim)}
    dual = [next(j for j in range(r.dim) if r.classical_pairing(i, j)) for i in range(r.dim)]
    p = PartialTable(r.name, r.labels, r.degrees, r.c1, dual, rows)
    assert associativity_complete(p).same_table(r)


def test_completion_from_hyperplane_row_recovers_p3():
    row = {0: {(1, 0): 1}, 1: {(2, 0): 1}, 2: {(3, 0): 1}, 3: {(0, 1): 1}}
    p = PartialTable("P3", ["1", "h", "h^2", "h^3"], [0, 2, 4, 6], 4, [3, 2, 1, 0], {1: row})
    assert associativity_complete(p).same_table(projective_space(3))


def test_validation_rejects_non_associative_table():
    from fanoqh.qring import QRing

    # a * a = 1 and a * b = a, b * b = b cannot be associative with unit 1 ... (a a) b = b, a (a b) = 1
    constants = {(0, 0): {(0, 0): 1}, (0, 1): {(1, 0): 1}, (0, 2): {(2, 0): 1}, (1, 1): {(0, 0): 1}, (1, 2): {(1, 0): 1}, (2, 2): {(2, 0): 1}}
    r = QRing("bad", ["1", "a", "b"], [0, 0, 0], 1, constants)
    with pytest.raises(RingValidationError):
        r.validate()
