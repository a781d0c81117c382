"""Rational univariate polynomials: minimal polynomials, factoring, Sturm counts.

Polynomials are coefficient lists, lowest degree first.  Factoring over Q is
delegated to sympy; root counting uses a Sturm chain in exact arithmetic.
"""

from __future__ import annotations

from fractions import Fraction

import sympy

from . import linalg

_X = sympy.Symbol("X")


def trim(p: list) -> list:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p: list) -> int:
    return len(trim(p)) - 1


def evaluate(p: list, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def poly_divmod(a: list, b: list) -> tuple[list, list]:
    a, b = trim([Fraction(x) for x in a]), trim([Fraction(x) for x in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    r = list(a)
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        c = r[-1] / b[-1]
        q[shift] = c
        for i, y in enumerate(b):
            r[shift + i] -= c * y
        r = trim(r)
    return trim(q), r


def derivative(p: list) -> list:
    return trim([i * c for i, c in enumerate(p)][1:])


def to_sympy(p: list) -> sympy.Poly:
    return sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(trim(p))] or [0], _X, domain="QQ")


def from_sympy(p: sympy.Poly) -> list:
    return trim([Fraction(int(c.p), int(c.q)) for c in reversed(p.all_coeffs())])


def monic(p: list) -> list:
    p = trim(p)
    lead = p[-1]
    return [c / lead for c in p]


def factor_rational(p: list) -> list[tuple[list, int]]:
    """Monic irreducible factors over Q with multiplicities."""
    _, facs = to_sympy(p).factor_list()
    return sorted(((monic(from_sympy(f)), m) for f, m in facs), key=lambda fm: (len(fm[0]), fm[0]))


def poly_lcm(a: list, b: list) -> list:
    return monic(from_sympy(sympy.lcm(to_sympy(a), to_sympy(b))))


def minimal_polynomial(m: list) -> list:
    """Minimal polynomial of a square rational matrix, as lcm of local annihilators."""
    n = len(m)
    if n == 0:
        return [Fraction(1)]
    result = [Fraction(1)]
    covered: list = []
    for i in range(n):
        e = [Fraction(int(i == j)) for j in range(n)]
        if covered and linalg.in_span(e, covered):
            continue
        krylov = [e]
        while True:
            nxt = linalg.matvec(m, krylov[-1])
            coeffs = linalg.solve(linalg.transpose(krylov), nxt)
            if coeffs is not None:
                ann = [-c for c in coeffs] + [Fraction(1)]
                result = poly_lcm(result, ann)
                covered.extend(krylov)
                break
            krylov.append(nxt)
    return result


def matrix_poly(p: list, m: list) -> list:
    """p(M) by Horner."""
    n = len(m)
    out = linalg.zeros(n, n)
    for c in reversed(trim(p)):
        out = linalg.matmul(out, m)
        for i in range(n):
            out[i][i] += c
    return out


def sturm_chain(p: list) -> list[list]:
    p = trim([Fraction(c) for c in p])
    chain = [p, derivative(p)]
    while chain[-1] and degree(chain[-1]) > 0:
        _, r = poly_divmod(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return [c for c in chain if c]


def _sign_changes(values) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _cauchy_bound(p: list) -> Fraction:
    p = trim(p)
    lead = abs(p[-1])
    return 1 + max((abs(c) / lead for c in p[:-1]), default=Fraction(0))


def count_real_roots(p: list, lo=None, hi=None) -> int:
    """Distinct real roots of p in (lo, hi] via Sturm's theorem."""
    p = trim([Fraction(c) for c in p])
    if degree(p) <= 0:
        return 0
    bound = _cauchy_bound(p)
    lo = -bound if lo is None else Fraction(lo)
    hi = bound if hi is None else Fraction(hi)
    chain = sturm_chain(p)
    return _sign_changes([evaluate(q, lo) for q in chain]) - _sign_changes([evaluate(q, hi) for q in chain])


def format_poly(p: list, var: str = "X") -> str:
    return str(to_sympy(p).as_expr()).replace("X", var)
