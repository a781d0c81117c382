"""
Constructors for the quantum cohomology rings analyzed by this package.

Projective spaces, the hyperplane subalgebra of complete intersections and
Gr(2, n) are built from closed-form rules.  Coadjoint varieties (types C and
F) start from the quantum Chevalley formula; their full tables come from
:func:`fanoqh.completion.associativity_complete` and ship as bundled files.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from . import linalg
from .qring import QRing, RingValidationError
from .rootsys import (
    AffineRoot,
    RootSystemType,
    build_root_system,
    coroot_pairing,
    eta,
    q_degree,
    root_label,
    schubert_degree,
    short_root_basis,
    simple_reflection,
)


def _power_label(k: int) -> str:
    return "1" if k == 0 else ("h" if k == 1 else f"h^{k}")


def projective_space(n: int) -> QRing:
    if n < 1:
        raise ValueError("projective space needs n >= 1")
    return complete_intersection(n, [])


def complete_intersection_index(n: int, degrees) -> int:
    return n + 1 - sum(d - 1 for d in degrees)


def complete_intersection(n: int, degrees) -> QRing:
    """Hyperplane subalgebra of QH(X) for X a complete intersection of dimension n.

    The basis is the classical powers h^0..h^n.  In quantum powers H^k the
    relation is H^{n+1} = D q H^s with D = prod d^d and s = sum (d - 1); for
    k >= c1 the classical power is h^k = H^k - c q H^{k - c1} where c = prod d!
    counts lines through a general point.
    """
    degrees = sorted(int(d) for d in degrees)
    if any(d < 1 for d in degrees):
        raise ValueError("hypersurface degrees must be positive")
    s = sum(d - 1 for d in degrees)
    if n < 1 or (degrees and n < 2) or n < 2 * s - 1:
        raise ValueError(f"need n >= 2 and n >= 2*sum(d_i - 1) - 1, got n={n}, degrees={degrees}")
    c1 = n + 1 - s
    big_d = prod(d**d for d in degrees)
    lines = prod(factorial(d) for d in degrees) if s else 0

    def reduce_quantum(x: dict) -> dict:
        # x: {(power, qpow): coeff} in quantum powers
        out: dict = {}
        stack = list(x.items())
        while stack:
            (m, d), c = stack.pop()
            if m > n:
                stack.append(((m - c1, d + 1), c * big_d))
            else:
                out[(m, d)] = out.get((m, d), 0) + c
        return {k: v for k, v in out.items() if v}

    def to_quantum(k: int) -> dict:
        x = {(k, 0): Fraction(1)}
        if k >= c1 and lines:
            x[(k - c1, 1)] = Fraction(-lines)
        return x

    def from_quantum(x: dict) -> dict:
        out: dict = {}
        for (m, d), c in x.items():
            out[(m, d)] = out.get((m, d), 0) + c
            if m >= c1 and lines:
                # H^m = h^m + c q h^{m - c1}, and m - c1 < c1
                key = (m - c1, d + 1)
                out[key] = out.get(key, 0) + c * lines
        return {k: v for k, v in out.items() if v}

    constants = {}
    for i in range(n + 1):
        for j in range(i, n + 1):
            prodq: dict = {}
            for (a, da), ca in to_quantum(i).items():
                for (b, db), cb in to_quantum(j).items():
                    key = (a + b, da + db)
                    prodq[key] = prodq.get(key, 0) + ca * cb
            constants[(i, j)] = from_quantum(reduce_quantum(prodq))
    name = f"P{n}" if not degrees else f"CI{n}({','.join(map(str, degrees))})"
    r = QRing(name, [_power_label(k) for k in range(n + 1)], [2 * k for k in range(n + 1)], c1, constants)
    r.validate()
    return r


def quantum_power(r: QRing, k: int) -> dict:
    """h^{*k} computed in the ring r."""
    h = r.basis_element(r.hyperplane_index)
    out = r.basis_element(r.unit_index)
    for _ in range(k):
        out = r.multiply(out, h)
    return out


# --- Gr(2, n) ---------------------------------------------------------------


def two_row_partitions(n: int) -> list:
    m = n - 2
    return sorted(((a, b) for a in range(m + 1) for b in range(a + 1)), key=lambda p: (p[0] + p[1], -p[0]))


def partition_label(p) -> str:
    return f"({p[0]},{p[1]})"


def two_row_product(p, r) -> dict:
    """Classical product of two-row Schur functions in two variables."""
    a, b = p
    c, d = r
    x, y = a - b, c - d
    out = {}
    for j in range(min(x, y) + 1):
        lam = (x + y - j + b + d, j + b + d)
        out[lam] = out.get(lam, 0) + 1
    return out


def rim_hook_reduce(lam, n: int):
    """(sign, q_power, partition) after removing n-rim hooks, or None if it vanishes."""
    sign, qp = 1, 0
    b1, b2 = lam[0] + 1, lam[1]
    while b1 - 1 > n - 2:
        nb = b1 - n
        if nb < 0 or nb == b2:
            return None
        if nb > b2:
            b1 = nb
            sign = -sign
        else:
            b1, b2 = b2, nb
        qp += 1
    return sign, qp, (b1 - 1, b2)


def grassmannian2(n: int) -> QRing:
    if n < 4:
        raise ValueError("grassmannian2 needs n >= 4")
    parts = two_row_partitions(n)
    idx = {p: i for i, p in enumerate(parts)}
    constants = {}
    for i, p in enumerate(parts):
        for j in range(i, len(parts)):
            terms: dict = {}
            for lam, c in two_row_product(p, parts[j]).items():
                red = rim_hook_reduce(lam, n)
                if red is None:
                    continue
                sign, qp, mu = red
                key = (idx[mu], qp)
                terms[key] = terms.get(key, 0) + sign * c
            constants[(i, j)] = {k: v for k, v in terms.items() if v}
    r = QRing(f"Gr(2,{n})", [partition_label(p) for p in parts], [2 * (a + b) for a, b in parts], n, constants)
    r.validate()
    return r


# --- coadjoint varieties -----------------------------------------------------

COADJOINT_TYPES = ("C", "F")


@dataclass(frozen=True)
class ChevalleyData:
    root_system: object
    roots: list
    labels: list
    degrees: list
    c1: int
    hyperplane_index: int
    h_row: dict  # j -> {(k, d): coeff}


def coadjoint_label(alpha) -> str:
    return "s:" + root_label(alpha)


@lru_cache(maxsize=None)
def coadjoint_chevalley(t: RootSystemType | str) -> ChevalleyData:
    if isinstance(t, str):
        t = RootSystemType.parse(t)
    if t.family not in COADJOINT_TYPES or (t.family == "C" and t.rank < 3):
        raise ValueError(f"coadjoint Chevalley data supported for C_n (n>=3) and F4, not {t}")
    rs = build_root_system(t)
    roots = short_root_basis(rs)
    idx = {a: i for i, a in enumerate(roots)}
    degrees = [schubert_degree(rs, a) for a in roots]
    c1 = q_degree(rs) // 2
    simple = {s: i for i, s in enumerate(rs.simple_roots)}
    h_row = {}
    for a in roots:
        x = AffineRoot(a, 0)
        terms: dict = {}
        if a in simple:
            # crossing from positive to negative roots: sigma_{a_i} -> sum over short simple a_j
            i = simple[a]
            for j, aj in enumerate(rs.simple_roots):
                c = abs(rs.cartan[j][i])
                if c and rs.is_short(aj):
                    key = (idx[tuple(-v for v in aj)], 0)
                    terms[key] = terms.get(key, 0) + Fraction(c)
            h_row[idx[a]] = terms
            continue
        for i in range(rs.rank + 1):
            k = coroot_pairing(rs, i, x)
            if k > 0:
                m = eta(rs, simple_reflection(rs, i, x))
                if m.q_power < 0:
                    raise RingValidationError("nonnegative q-power", (None, idx[a], idx[m.root], m.q_power))
                key = (idx[m.root], m.q_power)
                terms[key] = terms.get(key, 0) + Fraction(k)
        h_row[idx[a]] = terms
    deg2 = [i for i, d in enumerate(degrees) if d == 2]
    assert len(deg2) == 1
    return ChevalleyData(rs, roots, [coadjoint_label(a) for a in roots], degrees, c1, deg2[0], h_row)


def chevalley_operator(data: ChevalleyData, q=1) -> list:
    """Matrix of h * - with q set to the given value."""
    n = len(data.roots)
    m = linalg.zeros(n, n)
    for j, terms in data.h_row.items():
        for (k, d), c in terms.items():
            m[k][j] += c * Fraction(q) ** d
    return m


def coadjoint_dual(data: ChevalleyData) -> list:
    idx = {a: i for i, a in enumerate(data.roots)}
    return [idx[tuple(-c for c in a)] for a in data.roots]


def coadjoint_partial_table(t: RootSystemType | str):
    from .completion import PartialTable

    data = coadjoint_chevalley(t)
    name = coadjoint_name(data.root_system.type)
    return PartialTable(
        name, data.labels, data.degrees, data.c1, coadjoint_dual(data), {data.hyperplane_index: data.h_row}, 0
    )


def coadjoint_name(t: RootSystemType) -> str:
    return f"IG(2,{2 * t.rank})" if t.family == "C" else "F4/P4"


def coadjoint_ring(t: RootSystemType | str):
    """Full QH of the coadjoint variety by associativity completion.

    Returns a QRing, or the solver's Underdetermined report.
    """
    from .completion import associativity_complete

    return associativity_complete(coadjoint_partial_table(t))


BUNDLED = {"IG(2,6)": "ig26.qring", "IG(2,8)": "ig28.qring", "F4/P4": "f4p4.qring"}


def bundled_path(name: str):
    from importlib.resources import files

    return files("fanoqh") / "data" / BUNDLED[name]


def bundled_ring(name: str) -> QRing:
    from .tableio import loads

    return loads(bundled_path(name).read_text(encoding="utf-8"))
