"""
Structure of graded commutative algebras: radical, the form Q_X, spectral
components of multiplication operators, the semisimplicity criteria for Fano
varieties of Picard rank one, and first-order deformations in one direction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import numpy as np
import sympy

from . import linalg, polys
from .qring import QRing, SpecializedAlgebra, format_element, lift_homogeneous

# ---------------------------------------------------------------------------
# basics


def specialize(r: QRing) -> SpecializedAlgebra:
    return r.specialize()


def multiply(alg, a, b):
    return alg.multiply(a, b)


def mult_operator(A: SpecializedAlgebra, a) -> list:
    return A.mult_operator(a)


def hyperplane_vector(A: SpecializedAlgebra) -> list:
    if A.parent is None:
        raise ValueError("algebra has no designated hyperplane class")
    return A.basis_vector(A.parent.hyperplane_index)


def kernel(m: list) -> list:
    return linalg.nullspace(m, len(m[0]) if m else 0)


def image(m: list) -> list:
    return linalg.column_space(m)


# ---------------------------------------------------------------------------
# radical


@dataclass
class RadicalReport:
    basis: list
    is_semisimple: bool
    witnesses: list  # (vector, nilpotency order)

    @property
    def dim(self) -> int:
        return len(self.basis)


def trace_form(A: SpecializedAlgebra) -> list:
    traces = [sum((m[i][i] for i in range(A.dim)), Fraction(0)) for m in A.structure_matrices]
    n = A.dim
    g = linalg.zeros(n, n)
    for i in range(n):
        for j in range(i, n):
            v = sum((c * traces[k] for k, c in A.table[i][j].items()), Fraction(0))
            g[i][j] = g[j][i] = v
    return g


def nilpotency_order(A: SpecializedAlgebra, v) -> int | None:
    """Least k with v^k = 0, or None if v is not nilpotent."""
    p = list(v)
    for k in range(1, A.dim + 2):
        if not any(p):
            return k
        p = A.multiply(p, v)
    return None


def radical(A: SpecializedAlgebra) -> RadicalReport:
    """Jacobson radical as the kernel of (a, b) -> Tr(E_{ab})."""
    if A.dim == 0:
        return RadicalReport([], True, [])
    ker = kernel(trace_form(A))
    basis = [list(r) for r in linalg.rref(ker)[0] if any(r)] if ker else []
    witnesses = []
    for v in basis:
        k = nilpotency_order(A, v)
        if k is None:
            raise ArithmeticError("trace-form kernel vector is not nilpotent; the algebra data is inconsistent")
        witnesses.append((v, k))
    return RadicalReport(basis, not basis, witnesses)


# ---------------------------------------------------------------------------
# Q_X


@dataclass
class GramReport:
    indices: list
    labels: list
    gram: list
    positive_definite: bool
    failing_minor: int | None
    ldl_agrees: bool


def degree_zero_indices(A: SpecializedAlgebra) -> list:
    return [i for i, d in enumerate(A.degrees) if d == 0]


def unit_coefficient(A: SpecializedAlgebra, v) -> Fraction:
    """phi_0: the coefficient along the cohomological degree 0 part."""
    if A.parent is None:
        return sum((c * u for c, u in zip(v, A.unit)), Fraction(0))
    return sum((v[i] for i, d in enumerate(A.parent.degrees) if d == 0), Fraction(0))


def qx_form(A: SpecializedAlgebra) -> GramReport:
    idx = degree_zero_indices(A)
    gram = [[unit_coefficient(A, A.multiply(A.basis_vector(i), A.basis_vector(j))) for j in idx] for i in idx]
    pd, fail = linalg.sylvester_positive_definite(gram)
    ldl = linalg.ldl_positive_definite(gram)
    return GramReport(idx, [A.labels[i] for i in idx], gram, pd, fail, ldl == pd)


# ---------------------------------------------------------------------------
# spectral components


@dataclass
class SpectralComponent:
    factor: list
    power: int
    basis: list
    per_root_multiplicity: int
    real_roots: int

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass
class SpectralDecomposition:
    minimal_polynomial: list
    components: list

    def component_for(self, factor: list):
        return next((c for c in self.components if c.factor == factor), None)


def generalized_components(E: list) -> SpectralDecomposition:
    n = len(E)
    mp = polys.minimal_polynomial(E)
    comps = []
    for f, m in polys.factor_rational(mp):
        pm = polys.matrix_poly(f, E)
        pm = linalg.matpow(pm, m)
        basis = kernel(pm) if n else []
        deg = polys.degree(f)
        comps.append(SpectralComponent(f, m, basis, len(basis) // deg, polys.count_real_roots(f)))
    assert sum(c.dim for c in comps) == n
    return SpectralDecomposition(mp, comps)


def generalized_kernel(E: list) -> list:
    n = len(E)
    return kernel(linalg.matpow(E, n)) if n else []


# ---------------------------------------------------------------------------
# semisimplicity criteria


@dataclass
class Theorem1Report:
    qx: GramReport
    radical: RadicalReport
    kernel_dim: int
    image_dim: int
    clause1: bool | None = None  # R(A) inside generalized 0-eigenspace of E_h
    clause2_fires: bool = False
    clause2: bool | None = None
    clause3_fires: bool = False
    clause3: bool | None = None
    details: dict = field(default_factory=dict)

    @property
    def consistent(self) -> bool:
        return all(c is not False for c in (self.clause1, self.clause2, self.clause3))


def _span_rank(vs) -> int:
    return linalg.span_rank(vs) if vs else 0


def _subspace_of(u, w) -> bool:
    return all(linalg.in_span(x, w) for x in u) if w else not any(any(x) for x in u)


def h_subalgebra_minimal_polynomial(A: SpecializedAlgebra) -> list:
    return polys.minimal_polynomial(A.mult_operator(hyperplane_vector(A)))


def divides_x_times_p_of_power(mp: list, c1: int) -> tuple[bool, list]:
    """Check mp | X * P(X^c1) with P squarefree, P(0) != 0; returns (ok, P)."""
    x = sympy.Symbol("X")
    y = sympy.Symbol("Y")
    m = polys.to_sympy(mp).as_expr()
    e = 0
    while sympy.Poly(m, x).eval(0) == 0:
        m = sympy.cancel(m / x)
        e += 1
    if e > 1:
        return False, []
    g = sympy.Poly(m, x)
    if g.degree() == 0:
        return True, [Fraction(1)]
    res = sympy.Poly(sympy.resultant(g.as_expr(), y - x**c1, x), y)
    p = sympy.Poly(sympy.sqf_part(res.as_expr()), y)
    target = sympy.Poly(x * p.as_expr().subs(y, x**c1), x)
    ok = sympy.rem(target, sympy.Poly(polys.to_sympy(mp).as_expr(), x)).is_zero and p.eval(0) != 0
    coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(p.monic().all_coeffs())]
    return bool(ok), coeffs


def theorem1_report(A: SpecializedAlgebra) -> Theorem1Report:
    Eh = A.mult_operator(hyperplane_vector(A))
    ker, img = kernel(Eh), image(Eh)
    rad = radical(A)
    rep = Theorem1Report(qx_form(A), rad, len(ker), len(img))
    if not rep.qx.positive_definite:
        return rep
    rep.clause1 = _subspace_of(rad.basis, generalized_kernel(Eh))
    if not ker:
        rep.clause2_fires = True
        rep.clause2 = rad.is_semisimple
    a0 = [A.basis_vector(i) for i in degree_zero_indices(A)]
    a0_ker = linalg.subspace_intersection(a0, ker, A.dim)
    a0_img = linalg.subspace_intersection(a0, img, A.dim)
    split = _span_rank(a0_ker + a0_img) == len(a0) and len(a0_ker) + len(a0_img) == len(a0)
    rep.details["A0_split"] = (len(a0_ker), len(a0_img), len(a0))
    if split:
        rep.clause3_fires = True
        rad_in_ker = _subspace_of(rad.basis, ker)
        direct = len(ker) + len(img) == A.dim and _span_rank(ker + img) == A.dim
        mp = h_subalgebra_minimal_polynomial(A)
        h_semisimple = all(m == 1 for _, m in polys.factor_rational(mp))
        div_ok, p = divides_x_times_p_of_power(mp, A.modulus // 2) if A.modulus else (h_semisimple, [])
        rep.details.update(
            radical_in_kernel=rad_in_ker,
            image_kernel_direct=direct,
            h_subalgebra_semisimple=h_semisimple,
            h_minimal_polynomial=mp,
            divides_x_p=div_ok,
            p_polynomial=p,
        )
        rep.clause3 = rad_in_ker and direct and h_semisimple and div_ok
    return rep


# ---------------------------------------------------------------------------
# idempotents


@dataclass
class IdempotentBasis:
    elements: list
    exact: bool
    residual: float = 0.0


def idempotent_basis(A: SpecializedAlgebra, tolerance: float = 1e-10, seed: int = 0) -> IdempotentBasis:
    """Primitive orthogonal idempotents summing to 1 for a semisimple algebra."""
    if not radical(A).is_semisimple:
        raise ValueError("algebra is not semisimple")
    n = A.dim
    rng = random.Random(seed)
    for _ in range(50):
        a = [Fraction(rng.randint(-5, 5)) for _ in range(n)]
        E = A.mult_operator(a)
        mp = polys.minimal_polynomial(E)
        if polys.degree(mp) == n:
            break
    else:
        raise ArithmeticError("no separating element found")
    facs = polys.factor_rational(mp)
    if all(polys.degree(f) == 1 for f, _ in facs):
        roots = [-f[0] for f, _ in facs]
        out = []
        for lam in roots:
            e = list(A.unit)
            for mu in roots:
                if mu != lam:
                    shifted = [x - mu * u for x, u in zip(a, A.unit)]
                    e = [x / (lam - mu) for x in A.multiply(e, shifted)]
            out.append(e)
        return IdempotentBasis(out, True)
    # numeric path: Lagrange interpolation at complex eigenvalues
    Ef = np.array([[float(x) for x in row] for row in E])
    eig = np.linalg.eigvals(Ef)
    tensor = np.array([[[float(A.table[i][j].get(k, 0)) for k in range(n)] for j in range(n)] for i in range(n)])

    def mul(u, v):
        return np.einsum("i,j,ijk->k", u, v, tensor)

    unit = np.array([float(u) for u in A.unit], dtype=complex)
    af = np.array([float(x) for x in a], dtype=complex)
    out = []
    for lam in eig:
        e = unit.copy()
        for mu in eig:
            if mu is not lam and not np.isclose(mu, lam):
                e = mul(e, af - mu * unit) / (lam - mu)
        out.append(e)
    resid = max(float(np.linalg.norm(mul(e, e) - e)) for e in out)
    resid = max(resid, float(np.linalg.norm(sum(out) - unit)))
    if resid > tolerance:
        raise ArithmeticError(f"numeric idempotents have residual {resid:.3g} above tolerance")
    return IdempotentBasis(out, False, resid)


# ---------------------------------------------------------------------------
# first-order deformation


def psi(r: QRing, x: dict) -> dict:
    """Scale each q^d term by d."""
    return {(k, d): d * c for (k, d), c in x.items() if d}


def first_order_product(r: QRing, h: dict, tau: dict, b: dict) -> tuple[dict, dict]:
    """(h * b, t-coefficient of h *_tau b) for a divisor class h."""
    degs = {r.degrees[k] + d * r.q_degree for (k, d) in h}
    if degs != {2}:
        raise ValueError("first-order shortcut needs h homogeneous of degree 2")
    return r.multiply(h, b), psi(r, r.multiply(tau, b))


def graded_basis(r: QRing, degree: int) -> list:
    out = []
    for k, dk in enumerate(r.degrees):
        diff = degree - dk
        if diff >= 0 and diff % r.q_degree == 0:
            out.append((k, diff // r.q_degree))
    return sorted(out, key=lambda kd: (kd[1], kd[0]))


def to_vector(x: dict, basis: list) -> list:
    pos = {b: i for i, b in enumerate(basis)}
    v = [Fraction(0)] * len(basis)
    for key, c in x.items():
        if key not in pos:
            raise ValueError(f"term {key} outside the graded piece")
        v[pos[key]] = c
    return v


def from_vector(v, basis: list) -> dict:
    return {b: c for b, c in zip(basis, v) if c}


def graded_operator(r: QRing, a: dict, source_degree: int, target_degree: int) -> tuple[list, list, list]:
    """Matrix of x -> a*x from QH^source to QH^target plus both bases."""
    src, tgt = graded_basis(r, source_degree), graded_basis(r, target_degree)
    cols = [to_vector(r.multiply(a, {b: Fraction(1)}), tgt) for b in src]
    m = linalg.transpose(cols) if cols else [[] for _ in tgt]
    return m, src, tgt


def homogeneous_degree(r: QRing, x: dict) -> int | None:
    degs = {r.degrees[k] + d * r.q_degree for (k, d) in x}
    if len(degs) > 1:
        raise ValueError("element is not homogeneous")
    return degs.pop() if degs else None


# ---------------------------------------------------------------------------
# order-two nilpotent obstruction

OBSTRUCTED = "OBSTRUCTED"
CONSISTENT = "CONSISTENT"
INCONCLUSIVE = "INCONCLUSIVE"
NOT_APPLICABLE = "NOT_APPLICABLE"


@dataclass
class ObstructionVerdict:
    verdict: str
    reason: str = ""
    mode: str = ""
    lam: Fraction | None = None
    candidate: Fraction | None = None
    elements: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)

    def summary(self) -> str:
        if self.verdict == OBSTRUCTED and self.candidate is not None:
            return f"{self.verdict}: 4-point candidate {self.candidate} is not a nonnegative integer"
        if self.verdict == OBSTRUCTED:
            return f"{self.verdict}: {self.reason}"
        return f"{self.verdict}: {self.reason}" if self.reason else self.verdict


def _solve_graded(r: QRing, h: dict, rhs: dict, target_degree: int):
    m, src, tgt = graded_operator(r, h, target_degree - 2, target_degree)
    surjective = linalg.rank(m) == len(tgt) if tgt else True
    if not src:
        return (None if any(to_vector(rhs, tgt)) else {}), surjective, m, src, tgt
    sol = linalg.solve(m, to_vector(rhs, tgt))
    return (None if sol is None else from_vector(sol, src)), surjective, m, src, tgt


def _quotient_functionals(m: list, nrows: int) -> list:
    """Functionals on the target vanishing exactly on the column span of m."""
    if not m or not m[0]:
        return [[Fraction(int(i == j)) for j in range(nrows)] for i in range(nrows)]
    return linalg.nullspace(linalg.transpose(m), nrows)


def _apply(funcs, v):
    return [sum((f_i * v_i for f_i, v_i in zip(f, v)), Fraction(0)) for f in funcs]


def _lattice_contains(gens: list, target: list) -> bool:
    """Is target in the Z-span of the rational vectors gens?"""
    dim = len(target)
    if dim == 0:
        return True
    den = 1
    for v in gens + [target]:
        for c in v:
            den = den * c.denominator // gcd(den, c.denominator)
    ints = [[int(c * den) for c in v] for v in gens if any(v)]
    tgt = [int(c * den) for c in target]
    if not ints:
        return not any(tgt)
    if dim == 1:
        g = 0
        for v in ints:
            g = gcd(g, v[0])
        return tgt[0] % g == 0 if g else tgt[0] == 0
    # integer row reduction to echelon form (Hermite style)
    rows = [list(v) for v in ints]
    basis = []
    col = 0
    while rows and col < dim:
        rows = [r for r in rows if any(r)]
        nz = [r for r in rows if r[col] != 0]
        if not nz:
            col += 1
            continue
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            new = [piv]
            for r in nz[1:]:
                f = r[col] // piv[col]
                new.append([a - f * b for a, b in zip(r, piv)])
            rows = [r for r in rows if r[col] == 0] + new
            nz = [r for r in rows if r[col] != 0]
        piv = nz[0]
        basis.append((col, piv))
        rows = [r for r in rows if r is not piv]
        col += 1
    t = list(tgt)
    for c, piv in basis:
        if t[c] % piv[c]:
            return False
        f = t[c] // piv[c]
        t = [a - f * b for a, b in zip(t, piv)]
    return not any(t)


def default_schedule(r: QRing, tau: dict) -> list:
    dtau = homogeneous_degree(r, tau)
    top = 2 * r.variety_dim
    return [top + dtau, top - 2 + dtau]


def order2_nilpotent_obstruction(
    r: QRing,
    tau: dict,
    schedule: list | None = None,
    surviving: list | None = None,
) -> ObstructionVerdict:
    """Replay the first-order certificate against order-two nilpotents in BQH_tau.

    ``surviving`` optionally restricts which quantum monomials of pt *_1 pt may
    carry a nonzero four-point invariant (the caller's geometric input).
    """
    A = r.specialize(check=False)
    rad = radical(A)
    if rad.is_semisimple:
        return ObstructionVerdict(NOT_APPLICABLE, "radical is trivial")
    h = r.basis_element(r.hyperplane_index)
    pt = r.point_index
    top = 2 * r.variety_dim
    dtau = homogeneous_degree(r, tau)
    schedule = schedule or default_schedule(r, tau)
    out = ObstructionVerdict(INCONCLUSIVE)

    # (1) C0: radical element in degree 2 dim Y with point coefficient 1
    residue = top % r.q_degree
    stratum = [A.basis_vector(i) for i, d in enumerate(A.degrees) if d == residue]
    c0_space = linalg.subspace_intersection(rad.basis, stratum, A.dim)
    if len(c0_space) != 1 or not c0_space[0][pt]:
        return ObstructionVerdict(INCONCLUSIVE, "radical shape mismatch: no unique radical class with a point component")
    v0 = [c / c0_space[0][pt] for c in c0_space[0]]
    C0 = lift_homogeneous(r, v0, top)
    out.elements["C0"] = C0

    # (2) C1 with h*C1 = -Psi(tau*C0)
    rhs = {k: -c for k, c in psi(r, r.multiply(tau, C0)).items()}
    C1, surj, *_ = _solve_graded(r, h, rhs, schedule[0])
    out.checks[f"E_h onto degree {schedule[0]}"] = surj
    if not surj or C1 is None:
        out.reason = f"E_h not surjective onto degree {schedule[0]}"
        return out
    out.elements["C1"] = C1
    out.checks["C0*C1 = 0"] = not r.multiply(C0, C1)

    # (3) C0 = lam*pt + v with v in Im E_h
    m, src, tgt = graded_operator(r, h, top - 2, top)
    pt_vec = to_vector({(pt, 0): Fraction(1)}, tgt)
    aug = [row + [p] for row, p in zip(m, pt_vec)]
    sol = linalg.solve(aug, to_vector(C0, tgt))
    if sol is None or not sol[-1]:
        out.reason = "point class not complementary to the image of E_h in the top degree"
        return out
    lam = sol[-1]
    out.lam = lam
    v = {k: c for k, c in C0.items()}
    v[(pt, 0)] = v.get((pt, 0), 0) - lam
    v = {k: c for k, c in v.items() if c}
    out.elements["v"] = v

    # (4) D0 with h*D0 = v, no component along Ker E_h
    D0, _, m0, src0, _ = _solve_graded(r, h, v, top)
    if D0 is None:
        out.reason = "v is not in the image of E_h"
        return out
    ker0 = kernel(m0) if m0 and m0[0] else []
    if ker0:
        mi, _, _ = graded_operator(r, h, top - 4, top - 2)
        img0 = linalg.column_space(mi) if mi and mi[0] else []
        x = to_vector(D0, src0)
        split = linalg.solve(linalg.transpose(img0 + ker0), x) if img0 else None
        if split is not None and len(img0) + len(ker0) == len(src0):
            x = [sum((c * b[i] for c, b in zip(split[: len(img0)], img0)), Fraction(0)) for i in range(len(src0))]
            D0 = from_vector(x, src0)
        out.checks["D0 kernel tie-break"] = split is not None
    out.elements["D0"] = D0

    # (5) D1 with h*D1 = -Psi(tau*D0)
    rhs = {k: -c for k, c in psi(r, r.multiply(tau, D0)).items()}
    D1, surj1, *_ = _solve_graded(r, h, rhs, schedule[1])
    out.checks[f"E_h onto degree {schedule[1]}"] = surj1
    if not surj1 or D1 is None:
        out.reason = f"E_h not surjective onto degree {schedule[1]}"
        return out
    out.elements["D1"] = D1

    # (6) W = h *_1 (h*D0*D0) = Psi(tau * h*D0*D0)
    hdd = r.multiply(r.multiply(h, D0), D0)
    W = psi(r, r.multiply(tau, hdd))
    out.elements["W"] = W
    deg_w = 2 * top - (2 - dtau)
    basis_w = graded_basis(r, deg_w)
    mw, _, _ = graded_operator(r, h, deg_w - 2, deg_w)
    funcs = _quotient_functionals(mw, len(basis_w))
    w_class = _apply(funcs, to_vector(W, basis_w)) if W else [Fraction(0)] * len(funcs)
    out.elements["W_class"] = w_class
    monomials = [b for b in basis_w if surviving is None or b in surviving]
    classes = [_apply(funcs, to_vector({b: Fraction(1)}, basis_w)) for b in monomials]
    live = [(b, c) for b, c in zip(monomials, classes) if any(c)]
    lam2 = lam * lam
    if len(live) == 1:
        out.mode = "candidate"
        (b, cls) = live[0]
        i = next(i for i, c in enumerate(cls) if c)
        cand = w_class[i] / (lam2 * cls[i])
        if [cand * lam2 * c for c in cls] != w_class:
            out.verdict, out.reason = OBSTRUCTED, "W is not a multiple of the surviving monomial modulo Im E_h"
            return out
        out.candidate = cand
        label = format_element(r, {b: Fraction(1)})
        out.elements["surviving"] = label
        if cand.denominator != 1 or cand < 0:
            out.verdict = OBSTRUCTED
            out.reason = f"{lam2} * I({label}) = {w_class[i] / cls[i]} forces I = {cand}"
        else:
            out.verdict = CONSISTENT
            out.reason = f"candidate {cand} is a nonnegative integer"
        return out
    out.mode = "lattice"
    scaled = [c / lam2 for c in w_class]
    inside = _lattice_contains(classes, scaled)
    out.checks["W in lam^2 * L"] = inside
    if inside:
        out.verdict, out.reason = CONSISTENT, "W class lies in lam^2 times the Schubert lattice"
    else:
        out.verdict = OBSTRUCTED
        out.reason = f"W class is not divisible by {lam2} in the Schubert lattice modulo Im E_h"
    return out
