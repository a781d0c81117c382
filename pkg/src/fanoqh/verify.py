"""
Named verification checks replayed against constructed and bundled rings.

Checks are registered by id into suites ("paper" for structural statements
about specific varieties, "props" for randomized algebraic properties).  Each
check returns a :class:`CheckResult`; the runner sorts results by id so the
report does not depend on execution order.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import sympy

from . import catalog, linalg, polys
from . import qalgebra as qa
from .qring import QRing, format_element
from .randalg import nilpotent_scan, random_algebra
from .rings import (
    BUNDLED,
    bundled_ring,
    chevalley_operator,
    coadjoint_chevalley,
    complete_intersection,
    grassmannian2,
    projective_space,
)

PASS, FAIL, SKIPPED = "PASS", "FAIL", "SKIPPED"


@dataclass
class CheckResult:
    check_id: str
    anchor: str
    status: str
    detail: str = ""
    witness: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status != FAIL


def _result(check_id, anchor, ok, detail="", witness=None) -> CheckResult:
    return CheckResult(check_id, anchor, PASS if ok else FAIL, detail, witness or {})


# ---------------------------------------------------------------------------
# ring access


def load_bundled(name: str) -> QRing | None:
    """Bundled table, or None when the file is absent."""
    try:
        return bundled_ring(name)
    except FileNotFoundError:
        return None


def _skipped(check_id, anchor, name) -> CheckResult:
    return CheckResult(check_id, anchor, SKIPPED, f"missing data: no table for {name}")


# ---------------------------------------------------------------------------
# graded dimensions


def graded_census(r: QRing) -> dict:
    """Number of basis classes in each residue of the degree modulo deg q."""
    out: dict = {}
    for d in r.degrees:
        k = d % r.q_degree
        out[k] = out.get(k, 0) + 1
    return dict(sorted(out.items()))


def grassmannian_even_dimensions(n: int) -> dict:
    """A_{2a} for Gr(2,2n): n for a even, n - 1 for a odd."""
    return {2 * a: (n if a % 2 == 0 else n - 1) for a in range(2 * n)}


def isotropic_dimensions(n: int) -> dict:
    """A_{2a} for IG(2,2n), a in [0, 2n - 2]."""
    out = {}
    for a in range(2 * n - 1):
        if a == 2 * n - 2 or a % 2:
            out[2 * a] = n - 1
        else:
            out[2 * a] = n
    return out


def graded_dimension_check(r: QRing, expected: dict, check_id="dims", anchor="graded dimensions") -> CheckResult:
    found = graded_census(r)
    return _result(check_id, anchor, found == dict(sorted(expected.items())), f"{r.name}: {found}", {"expected": expected, "found": found})


# ---------------------------------------------------------------------------
# restriction to a hyperplane section


@dataclass
class Correspondence:
    """Linear map J from basis classes of X to elements of A(Y) at q = 1.

    ``images[i]`` is a dense vector over the basis of Y.  ``k`` is the codimension.
    """

    source: QRing
    target: QRing
    k: int
    images: dict

    def apply(self, v) -> list:
        out = [Fraction(0)] * self.target.dim
        for i, c in enumerate(v):
            if not c:
                continue
            if i not in self.images:
                raise KeyError(self.source.labels[i])
            for j, x in enumerate(self.images[i]):
                out[j] += c * x
        return out

    def swapped(self, i: int, j: int) -> "Correspondence":
        imgs = dict(self.images)
        imgs[i], imgs[j] = imgs[j], imgs[i]
        return Correspondence(self.source, self.target, self.k, imgs)


def identity_correspondence(r: QRing) -> Correspondence:
    return Correspondence(r, r, 0, {i: r.specialize(check=False).basis_vector(i) for i in range(r.dim)})


def _classical(r: QRing, a: dict, b: dict) -> dict:
    out: dict = {}
    for i, x in a.items():
        for j, y in b.items():
            for (k, d), c in r.product(i, j).items():
                if d == 0:
                    out[k] = out.get(k, 0) + x * y * c
    return {k: v for k, v in out.items() if v != 0}


def _pairing_matrix(r: QRing) -> list:
    return [[r.classical_pairing(i, j) for j in range(r.dim)] for i in range(r.dim)]


def _parse_partition(label: str) -> tuple:
    a, b = label.strip("()").split(",")
    return int(a), int(b)


def hyperplane_restriction(grass: QRing, section: QRing) -> Correspondence:
    """J for a hyperplane section Y of X = Gr(2, N).

    The pullback j^* is the ring map fixed by j^* sigma_1 = h and a value of
    j^* sigma_(1,1) in degree 4, solved from the two Grassmannian relations;
    the solution must be unique.  The pushforward j_* is the adjoint of j^*
    for the two Poincare pairings.  J is j^* below degree 2 c1(X) and the
    inverse of j_* from there on.
    """
    n_big = grass.c1
    deg4 = [i for i, d in enumerate(section.degrees) if d == 4]
    ts = sympy.symbols(f"t0:{len(deg4)}")
    y = {i: t for i, t in zip(deg4, ts)}
    h = {section.hyperplane_index: 1}
    unit = {section.unit_index: 1}

    def complete(y):
        # complete homogeneous polynomials in two variables from e1 = h, e2 = y
        out = [unit, h]
        for _ in range(2, n_big + 1):
            a, b = _classical(section, h, out[-1]), _classical(section, y, out[-2])
            out.append({k: a.get(k, 0) - b.get(k, 0) for k in set(a) | set(b)})
        return out

    rels = complete(y)
    eqs = [sympy.expand(e) for rel in (rels[n_big - 1], rels[n_big]) for e in rel.values()]
    eqs = [e for e in eqs if e != 0]
    sols = sympy.solve(eqs, ts, dict=True)
    if len(sols) != 1 or any(t not in sols[0] or not sols[0][t].is_Rational for t in ts):
        raise ValueError(f"pullback of sigma_(1,1) not uniquely determined: {sols}")
    y_val = {i: Fraction(int(sols[0][t].p), int(sols[0][t].q)) for i, t in zip(deg4, ts)}
    hs = complete(y_val)
    pull = linalg.zeros(section.dim, grass.dim)
    for col, lab in enumerate(grass.labels):
        a, b = _parse_partition(lab)
        img = hs[a - b]
        for _ in range(b):
            img = _classical(section, img, y_val)
        for k, c in img.items():
            pull[k][col] = Fraction(c)
    px, py = _pairing_matrix(grass), _pairing_matrix(section)
    push = linalg.matmul(linalg.matmul(linalg.inverse(px), linalg.transpose(pull)), py)
    # j_* j^* = cup with the hyperplane class
    sig1 = {grass.hyperplane_index: Fraction(1)}
    for col in range(grass.dim):
        lhs = linalg.matvec(push, [row[col] for row in pull])
        rhs = _classical(grass, sig1, {col: Fraction(1)})
        if lhs != [Fraction(rhs.get(i, 0)) for i in range(grass.dim)]:
            raise ArithmeticError(f"j_* j^* differs from cup with sigma_1 on {grass.labels[col]}")
    images = {}
    top_x = 2 * grass.c1
    for col, d in enumerate(grass.degrees):
        if d < top_x:
            images[col] = [row[col] for row in pull]
            continue
        src = [i for i, e in enumerate(section.degrees) if e == d - 2]
        tgt = [i for i, e in enumerate(grass.degrees) if e == d]
        m = [[push[t][s] for s in src] for t in tgt]
        if len(src) != len(tgt) or linalg.rank(m) != len(src):
            continue
        x = linalg.solve(m, [Fraction(int(t == col)) for t in tgt])
        vec = [Fraction(0)] * section.dim
        for s, c in zip(src, x):
            vec[s] = c
        images[col] = vec
    return Correspondence(grass, section, 1, images)


def corest_check(X: QRing, Y: QRing, J: Correspondence | None, check_id="corest", anchor="restriction squares") -> CheckResult:
    """Commutation of J with E_h on the stable strata, and with E_{h^{k+1}} into A_0."""
    if J is None:
        return CheckResult(check_id, anchor, SKIPPED, "missing dictionary")
    AX, AY = X.specialize(check=False), Y.specialize(check=False)
    ehx = AX.mult_operator(qa.hyperplane_vector(AX))
    ehy = AY.mult_operator(qa.hyperplane_vector(AY))
    mx, c1y, dim_y = X.q_degree, Y.c1, Y.variety_dim
    failures = []
    checked = 0
    for a in range(0, 2 * dim_y - 2 * c1y - 1, 2):
        for b, d in enumerate(X.degrees):
            if d % mx != a:
                continue
            e = AX.basis_vector(b)
            try:
                lhs = J.apply(linalg.matvec(ehx, e))
                rhs = linalg.matvec(ehy, J.apply(e))
            except KeyError as err:
                return CheckResult(check_id, anchor, SKIPPED, f"missing dictionary entry {err}")
            checked += 1
            if lhs != rhs:
                failures.append(("E_h", a, X.labels[b]))
    hk = AX.power(qa.hyperplane_vector(AX), J.k + 1)
    ehk = AX.mult_operator(hk)
    second = [b for b, d in enumerate(X.degrees) if d == 2 * c1y - 2]
    for b in second:
        e = AX.basis_vector(b)
        try:
            lhs = J.apply(linalg.matvec(ehk, e))
            rhs = linalg.matvec(ehy, J.apply(e))
        except KeyError as err:
            return CheckResult(check_id, anchor, SKIPPED, f"missing dictionary entry {err}")
        checked += 1
        if lhs != rhs:
            failures.append((f"E_h^{J.k + 1}", 2 * c1y - 2, X.labels[b]))
    detail = f"{X.name} -> {Y.name}: {checked} basis classes, {len(failures)} failures"
    return _result(check_id, anchor, checked > 0 and not failures, detail, {"failures": failures})


def negative_control_pair(J: Correspondence) -> tuple[int, int]:
    """Two same-degree classes of X in the top stable stratum whose images differ."""
    X = J.source
    by_deg: dict = {}
    for i, d in enumerate(X.degrees):
        if i in J.images:
            by_deg.setdefault(d, []).append(i)
    for d in sorted(by_deg, reverse=True):
        for i in by_deg[d]:
            for j in by_deg[d]:
                if i < j and J.images[i] != J.images[j]:
                    return i, j
    raise ValueError("no pair of distinct images to swap")


# ---------------------------------------------------------------------------
# radical localization


def radical_structure_check(r: QRing, check_id="radical", anchor="radical localization") -> CheckResult:
    """R(A) = Ker E_h intersected with the classes of degree not divisible by deg q."""
    A = r.specialize(check=False)
    rad = qa.radical(A)
    ker = qa.kernel(A.mult_operator(qa.hyperplane_vector(A)))
    off = [A.basis_vector(i) for i, d in enumerate(A.degrees) if d % A.modulus]
    rhs = linalg.subspace_intersection(ker, off, A.dim) if ker and off else []
    same = linalg.same_subspace(rad.basis, rhs) if (rad.basis or rhs) else True
    orders = sorted(k for _, k in rad.witnesses)
    degs = sorted({A.degrees[i] for v in rad.basis for i, c in enumerate(v) if c})
    detail = f"{r.name}: dim R = {rad.dim}, dim(Ker E_h off degree 0) = {len(rhs)}, radical degrees {degs}, nilpotency orders {orders}"
    return _result(check_id, anchor, same, detail, {"radical": rad.basis, "kernel_part": rhs, "orders": orders})


# ---------------------------------------------------------------------------
# semisimplicity targets


def _semisimple_target(r: QRing, expect: bool, check_id: str, anchor: str) -> CheckResult:
    A = r.specialize(check=False)
    rep = qa.theorem1_report(A)
    semisimple = rep.radical.is_semisimple
    detail = f"{r.name}: semisimple={semisimple}, dim R={rep.radical.dim}, Q positive definite={rep.qx.positive_definite}"
    return _result(check_id, anchor, semisimple == expect and rep.consistent, detail)


def _invertible_on_degree_zero(r: QRing, check_id: str, anchor: str) -> CheckResult:
    """E_h maps onto A_0, so h is invertible at q = 1."""
    A = r.specialize(check=False)
    eh = A.mult_operator(qa.hyperplane_vector(A))
    a0 = [i for i, d in enumerate(A.degrees) if d == 0]
    src = [i for i, d in enumerate(A.degrees) if d == A.modulus - 2]
    block = [[eh[i][j] for j in src] for i in a0]
    onto = bool(src) and linalg.rank(block) == len(a0)
    return _result(check_id, anchor, onto, f"{r.name}: rank {linalg.rank(block) if src else 0} onto A_0 of dim {len(a0)}")


def semisimple_targets_check() -> list:
    anchor = "semisimplicity targets"
    out = []
    for n in range(1, 13):
        out.append(_semisimple_target(projective_space(n), True, f"semisimple.P{n}", anchor))
    for n in (3, 4, 5, 6):
        out.append(_semisimple_target(complete_intersection(n, [2]), True, f"semisimple.quadric{n}.h_subalgebra", anchor))
    for n in (5, 7, 9):
        out.append(_invertible_on_degree_zero(grassmannian2(n), f"semisimple.Gr2_{n}.h_invertible", anchor))
    for name, key in (("IG(2,6)", "ig26"), ("F4/P4", "f4p4"), ("IG(2,8)", "ig28")):
        r = load_bundled(name)
        cid = f"semisimple.{key}.not_semisimple"
        if r is None:
            out.append(_skipped(cid, anchor, name))
            continue
        A = r.specialize(check=False)
        rep = qa.theorem1_report(A)
        mp = qa.h_subalgebra_minimal_polynomial(A)
        h_ss = all(m == 1 for _, m in polys.factor_rational(mp))
        ok = not rep.radical.is_semisimple and h_ss and rep.consistent
        out.append(_result(cid, anchor, ok, f"{name}: dim R={rep.radical.dim}, h-subalgebra semisimple={h_ss}"))
    return out


# ---------------------------------------------------------------------------
# big quantum cohomology obstructions


BQH_CASES = {
    # name, tau label, surviving monomials of pt *_1 pt as (label, q power) or None
    "ig26": ("IG(2,6)", "pt", [("1", 4)]),
    "f4p4": ("F4/P4", "pt", [("1", 4)]),
    "ig28": ("IG(2,8)", "s:a2+2a3+a4", None),
}


def run_bqh_case(key: str):
    name, tau_label, surviving = BQH_CASES[key]
    r = load_bundled(name)
    if r is None:
        return None, None
    tau = r.basis_element(r.index(tau_label))
    surv = None if surviving is None else [(r.index(lab), d) for lab, d in surviving]
    return r, qa.order2_nilpotent_obstruction(r, tau, surviving=surv)


def bqh_obstruction_suite() -> list:
    anchor = "order-two nilpotents in the tau-deformation"
    out = []
    for key, want in (("ig26", Fraction(2, 3)), ("f4p4", Fraction(2, 3)), ("ig28", None)):
        cid = f"bqh.{key}"
        r, v = run_bqh_case(key)
        if r is None:
            out.append(_skipped(cid, anchor, BQH_CASES[key][0]))
            continue
        if want is not None:
            ok = v.verdict == qa.OBSTRUCTED and v.mode == "candidate" and v.candidate == want
        else:
            ok = v.verdict == qa.OBSTRUCTED and v.mode == "lattice"
        out.append(_result(cid, anchor, ok, f"{r.name}: {v.summary()} (lambda={v.lam}, mode={v.mode})"))
    return out


def c_family_identities(r: QRing, n: int) -> CheckResult:
    """Product identities in IG(2,2n) used by the n >= 4 obstruction argument."""
    anchor = "isotropic Grassmannian identities"
    cid = f"identities.ig2_{2 * n}"
    h = r.basis_element(r.hyperplane_index)
    pt = r.basis_element(r.point_index)
    # sigma = sigma_{a1+a2+a3-theta}, sigma' = sigma_{a1+2a2+a3-theta}; theta = a1 + 2(a2..a_{n-1}) + a_n
    theta = [1] + [2] * (n - 2) + [1]
    sigma = tuple(x - t for x, t in zip([1, 1, 1] + [0] * (n - 3), theta))
    sigma_p = tuple(x - t for x, t in zip([1, 2, 1] + [0] * (n - 3), theta))
    from .rootsys import root_label

    i_s, i_sp = r.index("s:" + root_label(sigma)), r.index("s:" + root_label(sigma_p))
    i_pd = r.index("s:" + root_label(tuple(-x for x in sigma_p)))
    checks = {
        "pt*pt = q^2 sigma": r.multiply(pt, pt) == {(i_s, 2): Fraction(1)},
        "h*sigma' = sigma": r.multiply(h, r.basis_element(i_sp)) == {(i_s, 0): Fraction(1)},
        "pt*PD(sigma') = q^2 h": r.multiply(pt, r.basis_element(i_pd)) == {(r.hyperplane_index, 2): Fraction(1)},
    }
    if n >= 4:
        tau = r.basis_element(r.index("s:" + root_label(tuple(t - x for t, x in zip(theta, [1, 1] + [0] * (n - 2))))))
        v = qa.order2_nilpotent_obstruction(r, tau)
        d0 = v.elements.get("D0", {})
        line = [i for i, d in enumerate(r.degrees) if d == 2 * r.variety_dim - 2]
        checks["coefficient of the line class in D0 is 1 - n"] = len(line) == 1 and d0.get((line[0], 0)) == 1 - n
        hdd = r.multiply(r.multiply(h, d0), d0)
        rest = dict(hdd)
        key = (i_sp, 2)
        rest[key] = rest.get(key, 0) - n * n
        kel = {k: -c / n for k, c in rest.items() if c}
        checks["h*D0*D0 = n^2 q^2 sigma' - n K with K in Ker E_h"] = (
            bool(kel) and not r.multiply(h, kel) and kel.get(key) == 1
        )
    failed = [k for k, ok in checks.items() if not ok]
    return _result(cid, anchor, not failed, f"{r.name}: {len(checks) - len(failed)}/{len(checks)} identities", {"failed": failed})


# ---------------------------------------------------------------------------
# Chevalley operator kernels


def chevalley_kernel_profile(t: str) -> dict:
    """{residue degree: kernel dimension} of E_h at q = 1 for a coadjoint type."""
    d = coadjoint_chevalley(t)
    m = chevalley_operator(d)
    mod = 2 * d.c1
    out = {}
    for r in range(0, mod, 2):
        src = [i for i, g in enumerate(d.degrees) if g % mod == r]
        tgt = [i for i, g in enumerate(d.degrees) if g % mod == (r + 2) % mod]
        if not src:
            continue
        block = [[m[i][j] for j in src] for i in tgt]
        k = len(src) - (linalg.rank(block) if tgt else 0)
        if k:
            out[r] = k
    return out


def expected_kernel_profile(t: str) -> dict:
    """Kernel degrees 0, 4, ..., 4(n - 2) for C_n; 0 and 8 for F4."""
    if t == "F4":
        return {0: 1, 8: 1}
    n = int(t[1:])
    return {4 * i: 1 for i in range(n - 1)}


def chevalley_degree_check(t: str) -> bool:
    """E_h raises degree by 2 once q is given degree 2 c1."""
    d = coadjoint_chevalley(t)
    for j, terms in d.h_row.items():
        for (k, qd), _ in terms.items():
            if d.degrees[k] + 2 * d.c1 * qd != d.degrees[j] + 2:
                return False
    return True


def chevalley_kernel_check(t: str) -> CheckResult:
    prof = chevalley_kernel_profile(t)
    ok = chevalley_degree_check(t) and prof == expected_kernel_profile(t)
    return _result(f"chevalley.{t}", "kernel of E_h at q = 1", ok, f"{t}: nullity {sum(prof.values())}, by degree {prof}")


# ---------------------------------------------------------------------------
# property suite


def property_suite(count: int = 120, seed: int = 20240601) -> list:
    rng = random.Random(seed)
    rad_ok = contain_ok = gram_ok = 0
    contain_total = gram_total = 0
    bad = []
    for trial in range(count):
        R = random_algebra(rng)
        A = R.algebra
        rad = qa.radical(A)
        scan = nilpotent_scan(A, rad.basis)
        known = linalg.same_subspace(rad.basis, R.radical) if (rad.basis or R.radical) else True
        if scan.agree and known:
            rad_ok += 1
        else:
            bad.append(("radical", trial, R.blocks))
        # A-linear operators are multiplications; keep those with rational spectrum
        for _ in range(2):
            a = [Fraction(rng.randint(-3, 3)) for _ in range(A.dim)]
            E = A.mult_operator(a)
            dec = qa.generalized_components(E)
            if any(polys.degree(c.factor) != 1 for c in dec.components):
                continue
            contain_total += 1
            big = [v for c in dec.components if c.per_root_multiplicity > 1 for v in c.basis]
            inside = all(linalg.in_span(v, big) for v in rad.basis) if rad.basis else True
            if inside:
                contain_ok += 1
            else:
                bad.append(("containment", trial, R.blocks))
        noise = [[Fraction(rng.randint(-4, 4)) for _ in range(A.dim)] for _ in range(A.dim)]
        sym = linalg.matadd(noise, linalg.transpose(noise))
        for m in (qa.trace_form(A), sym, linalg.matmul(linalg.transpose(noise), noise)):
            gram_total += 1
            if linalg.sylvester_positive_definite(m)[0] == linalg.ldl_positive_definite(m):
                gram_ok += 1
            else:
                bad.append(("definiteness", trial, m))
    anchor = "finite algebra properties"
    return [
        _result("props.radical_vs_nilpotents", anchor, rad_ok == count, f"{rad_ok}/{count} algebras", {"bad": bad}),
        _result(
            "props.radical_in_repeated_components",
            anchor,
            contain_ok == contain_total and contain_total > 0,
            f"{contain_ok}/{contain_total} operators with rational spectrum",
        ),
        _result("props.sylvester_vs_ldl", anchor, gram_ok == gram_total and gram_total > 0, f"{gram_ok}/{gram_total} Gram matrices"),
    ]


# ---------------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class Registration:
    check_id: str
    suite: str
    run: Callable[[], list]


REGISTRY: dict = {}


def register(check_id: str, suite: str):
    def deco(fn):
        REGISTRY[check_id] = Registration(check_id, suite, fn)
        return fn

    return deco


def _as_list(x):
    return x if isinstance(x, list) else [x]


@register("dims", "paper")
def _dims():
    anchor = "graded dimensions at q = 1"
    out = [graded_dimension_check(grassmannian2(2 * n), grassmannian_even_dimensions(n), f"dims.Gr2_{2 * n}", anchor) for n in (2, 3, 4, 5)]
    for n, name in ((3, "IG(2,6)"), (4, "IG(2,8)")):
        r = load_bundled(name)
        cid = f"dims.IG2_{2 * n}"
        out.append(_skipped(cid, anchor, name) if r is None else graded_dimension_check(r, isotropic_dimensions(n), cid, anchor))
    return out


@register("corest", "paper")
def _corest():
    anchor = "hyperplane restriction squares"
    out = []
    for n, name in ((3, "IG(2,6)"), (4, "IG(2,8)")):
        Y = load_bundled(name)
        cid = f"corest.Gr2_{2 * n}"
        if Y is None:
            out.append(_skipped(cid, anchor, name))
            continue
        X = grassmannian2(2 * n)
        J = hyperplane_restriction(X, Y)
        out.append(corest_check(X, Y, J, cid, anchor))
        i, j = negative_control_pair(J)
        neg = corest_check(X, Y, J.swapped(i, j), cid + ".swapped", anchor)
        out.append(_result(cid + ".sensitivity", anchor, neg.status == FAIL, f"swapping {X.labels[i]} and {X.labels[j]}: {neg.status}"))
    p = projective_space(4)
    out.append(corest_check(p, p, identity_correspondence(p), "corest.identity.P4", anchor))
    y = load_bundled("IG(2,6)")
    if y is not None:
        out.append(corest_check(y, y, identity_correspondence(y), "corest.identity.ig26", anchor))
    return out


@register("radical", "paper")
def _radical():
    anchor = "radical localization"
    out = [radical_structure_check(projective_space(4), "radical.P4", anchor)]
    for name, key in (("IG(2,6)", "ig26"), ("F4/P4", "f4p4"), ("IG(2,8)", "ig28")):
        r = load_bundled(name)
        cid = f"radical.{key}"
        out.append(_skipped(cid, anchor, name) if r is None else radical_structure_check(r, cid, anchor))
    return out


@register("semisimple", "paper")
def _semisimple():
    return semisimple_targets_check()


@register("bqh", "paper")
def _bqh():
    return bqh_obstruction_suite()


@register("identities", "paper")
def _identities():
    r = load_bundled("IG(2,8)")
    if r is None:
        return [_skipped("identities.ig2_8", "isotropic Grassmannian identities", "IG(2,8)")]
    return [c_family_identities(r, 4)]


@register("chevalley", "paper")
def _chevalley():
    return [chevalley_kernel_check(t) for t in ("C3", "C4", "C5", "C6", "F4")]


@register("catalog", "paper")
def _catalog():
    anchor = "homogeneous space tables"
    fib = catalog.fiber_dimension_check()
    adj = catalog.adjoint_dimension_check()
    roots = catalog.root_system_check(catalog.cominuscule_catalog() + catalog.adjoint_catalog())
    gam = catalog.gamma2_check()
    return [
        _result("catalog.fiber_dimension", anchor, fib.ok, f"{len(fib.entries)} rows", {"failures": fib.failures}),
        _result("catalog.adjoint_dimension", anchor, adj.ok, f"{len(adj.entries)} rows", {"failures": adj.failures}),
        _result("catalog.root_system", anchor, roots.ok, f"{len(roots.entries)} entries", {"failures": roots.failures}),
        _result("catalog.gamma2_bound", anchor, gam.ok, f"{len(gam.entries)} rows", {"failures": gam.failures}),
    ]


@register("props", "props")
def _props():
    return property_suite()


SUITES = ("paper", "props", "all")


def run_suite(suite: str = "paper", parallel: bool = False) -> list:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    regs = [r for r in REGISTRY.values() if suite == "all" or r.suite == suite]
    if parallel:
        with ThreadPoolExecutor() as ex:
            chunks = list(ex.map(lambda reg: _as_list(reg.run()), regs))
    else:
        chunks = [_as_list(reg.run()) for reg in regs]
    return sorted((c for chunk in chunks for c in chunk), key=lambda c: c.check_id)


def format_report(suite: str, results: list) -> str:
    """Canonical text report: one block per check, sorted by id."""
    lines = [f"suite {suite}", f"checks {len(results)}"]
    for c in results:
        lines.append(f"check {c.check_id} {c.status}")
        lines.append(f"  anchor {c.anchor}")
        if c.detail:
            lines.append(f"  detail {c.detail}")
        if c.status == FAIL and c.witness:
            for k in sorted(c.witness):
                lines.append(f"  witness {k} {c.witness[k]}")
    counts = {s: sum(1 for c in results if c.status == s) for s in (PASS, FAIL, SKIPPED)}
    lines.append(f"summary pass={counts[PASS]} fail={counts[FAIL]} skipped={counts[SKIPPED]}")
    return "\n".join(lines) + "\n"


__all__ = [
    "PASS",
    "FAIL",
    "SKIPPED",
    "CheckResult",
    "Correspondence",
    "graded_census",
    "graded_dimension_check",
    "grassmannian_even_dimensions",
    "isotropic_dimensions",
    "hyperplane_restriction",
    "identity_correspondence",
    "corest_check",
    "radical_structure_check",
    "semisimple_targets_check",
    "bqh_obstruction_suite",
    "chevalley_kernel_profile",
    "property_suite",
    "run_suite",
    "format_report",
    "BUNDLED",
    "format_element",
]
