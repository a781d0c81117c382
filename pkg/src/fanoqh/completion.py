"""
Fill in a structure-constant table from partial data by associativity.

The unknowns are symmetric three-point numbers I_d(a, b, c) = coefficient of
q^d e_{c*} in e_a e_b, where c* is the Poincare dual index.  Rows that are
already known (the unit and usually the hyperplane class) pin some of them;
associativity against a known row gives linear equations; associativity among
unknown rows gives quadratic ones, used only to cut down whatever freedom the
linear system leaves.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement

import sympy

from .qring import QRing, RingValidationError

CONST = None  # key of the constant term in a linear form


class InconsistentConstraints(ValueError):
    pass


@dataclass
class PartialTable:
    name: str
    labels: list
    degrees: list
    c1: int
    dual: list
    known_rows: dict  # i -> {j: {(k, d): coeff}}
    unit_index: int = 0

    @property
    def dim(self):
        return len(self.labels)

    @property
    def top(self):
        return max(self.degrees)


@dataclass
class Underdetermined:
    """Completion is not unique; ``free`` parameters remain after all constraints."""

    free: int
    linear_free: int
    notes: list = field(default_factory=list)

    def __bool__(self):
        return False


def _key(a, b, c):
    return tuple(sorted((a, b, c)))


def _add(form: dict, var, c):
    v = form.get(var, 0) + c
    if v:
        form[var] = v
    else:
        form.pop(var, None)


class _System:
    def __init__(self, p: PartialTable):
        self.p = p
        n = p.dim
        self.qdeg = 2 * p.c1
        self.known = dict(p.known_rows)
        u = p.unit_index
        self.known[u] = {j: {(j, 0): Fraction(1)} for j in range(n)}
        self.fixed: dict = {}
        for a, row in self.known.items():
            for b in range(n):
                terms = row.get(b, {})
                for c in range(n):
                    d = self._qpower(a, b, c)
                    if d is None:
                        continue
                    val = Fraction(terms.get((p.dual[c], d), 0))
                    key = (_key(a, b, c), d)
                    if key in self.fixed and self.fixed[key] != val:
                        raise InconsistentConstraints(
                            f"known rows disagree on I_{d}{tuple(p.labels[x] for x in key[0])}"
                        )
                    self.fixed[key] = val
                for (k, d), val in terms.items():
                    if self._qpower(a, b, p.dual[k]) != d:
                        raise RingValidationError("grading", (a, b, k, d))
        self.variables = []
        self.var_index = {}
        for a, b, c in combinations_with_replacement(range(n), 3):
            d = self._qpower(a, b, c)
            if d is None:
                continue
            key = ((a, b, c), d)
            if key not in self.fixed:
                self.var_index[key] = len(self.variables)
                self.variables.append(key)

    def _qpower(self, a, b, c):
        p = self.p
        s = p.degrees[a] + p.degrees[b] + p.degrees[c] - p.top
        if s < 0 or s % self.qdeg:
            return None
        return s // self.qdeg

    def coefficient(self, a, b, k, d) -> dict:
        """Linear form for the coefficient of q^d e_k in e_a e_b."""
        c = self.p.dual[k]
        if self._qpower(a, b, c) != d:
            return {}
        key = (_key(a, b, c), d)
        if key in self.fixed:
            v = self.fixed[key]
            return {CONST: v} if v else {}
        return {self.var_index[key]: Fraction(1)}

    def product_forms(self, a, b) -> dict:
        """{(k, d): linear form} for e_a e_b."""
        out = {}
        n = self.p.dim
        for k in range(n):
            d = self._qpower(a, b, self.p.dual[k])
            if d is None:
                continue
            f = self.coefficient(a, b, k, d)
            if f:
                out[(k, d)] = f
        return out

    def linear_equations(self):
        n = self.p.dim
        rows = []
        for g, grow in self.known.items():
            if g == self.p.unit_index:
                continue
            for b in range(n):
                gb = grow.get(b, {})
                for c in range(b, n):
                    acc: dict = {}
                    # (e_g e_b) e_c
                    for (m, d1), cm in gb.items():
                        for (k, d2), form in self.product_forms(m, c).items():
                            tgt = acc.setdefault((k, d1 + d2), {})
                            for v, x in form.items():
                                _add(tgt, v, cm * x)
                    # - e_g (e_b e_c)
                    for (m, d1), form in self.product_forms(b, c).items():
                        for (k, d2), cg in grow.get(m, {}).items():
                            tgt = acc.setdefault((k, d1 + d2), {})
                            for v, x in form.items():
                                _add(tgt, v, -cg * x)
                    rows.extend(f for f in acc.values() if f)
        return rows


def _eliminate(rows, nvars):
    """Sparse Gauss-Jordan; returns {pivot_var: form} with each form free of other pivots."""
    pivots: dict = {}
    for row in rows:
        r = dict(row)
        # substitute existing pivots; their forms mention free variables only
        for v in [v for v in r if v is not CONST and v in pivots]:
            c = r.pop(v)
            for w, x in pivots[v].items():
                _add(r, w, c * x)
        vars_ = [v for v in r if v is not CONST]
        if not vars_:
            if r.get(CONST, 0):
                raise InconsistentConstraints("linear associativity constraints are inconsistent")
            continue
        pv = min(vars_, key=lambda v: (len(r), v))
        c = r.pop(pv)
        # pv = -(rest)/c
        form = {w: -x / c for w, x in r.items()}
        for u, f in pivots.items():
            if pv in f:
                cu = f.pop(pv)
                for w, x in form.items():
                    _add(f, w, cu * x)
        pivots[pv] = form
    return pivots


def associativity_complete(p: PartialTable, provenance: str = "completed"):
    """Complete ``p`` to a full QRing, or return :class:`Underdetermined`."""
    sysm = _System(p)
    nvars = len(sysm.variables)
    pivots = _eliminate(sysm.linear_equations(), nvars)
    free = [v for v in range(nvars) if v not in pivots]
    values: dict = {}
    notes = []
    if free:
        params = sympy.symbols(f"t0:{len(free)}")
        sub = dict(zip(free, params))

        def value(v):
            if v in sub:
                return sub[v]
            f = pivots[v]
            expr = sympy.Rational(0)
            for w, x in f.items():
                term = sympy.Rational(x.numerator, x.denominator)
                expr += term if w is CONST else term * sub[w]
            return expr

        eqs = _quadratic_equations(sysm, value)
        sols = sympy.solve(eqs, params, dict=True) if eqs else []
        pinned = len(sols) == 1 and all(t in sols[0] and sols[0][t].is_Rational for t in params)
        if not pinned:
            # count parameters left unpinned by the best solution branch
            remaining = len(free) if not sols else min(len(params) - len([t for t in s if s[t].is_Rational]) for s in sols)
            return Underdetermined(max(remaining, 1), len(free), [str(s) for s in sols])
        sol = sols[0]
        for v in range(nvars):
            val = value(v).subs(sol)
            values[v] = Fraction(int(val.p), int(val.q))
        notes.append(f"{len(free)} linear freedoms fixed by quadratic relations")
    else:
        for v in range(nvars):
            f = pivots[v]
            values[v] = f.get(CONST, Fraction(0))
    r = _assemble(p, sysm, values, provenance)
    r.validate()
    return r


def _quadratic_equations(sysm: _System, value):
    n = sysm.p.dim
    cache = {}

    def prod(a, b):
        key = (min(a, b), max(a, b))
        if key not in cache:
            out = {}
            for (k, d), form in sysm.product_forms(*key).items():
                expr = 0
                for v, x in form.items():
                    t = sympy.Rational(x.numerator, x.denominator)
                    expr += t if v is CONST else t * value(v)
                out[(k, d)] = expr
            cache[key] = out
        return cache[key]

    eqs = set()
    unknown_rows = [i for i in range(n) if i not in sysm.known]
    for a, b, c in combinations_with_replacement(unknown_rows, 3):
        left, right = {}, {}
        for (m, d1), e1 in prod(a, b).items():
            for (k, d2), e2 in prod(m, c).items():
                left[(k, d1 + d2)] = left.get((k, d1 + d2), 0) + e1 * e2
        for (m, d1), e1 in prod(b, c).items():
            for (k, d2), e2 in prod(m, a).items():
                right[(k, d1 + d2)] = right.get((k, d1 + d2), 0) + e1 * e2
        for key in set(left) | set(right):
            e = sympy.expand(left.get(key, 0) - right.get(key, 0))
            if e != 0:
                eqs.add(e)
    return list(eqs)


def _assemble(p: PartialTable, sysm: _System, values: dict, provenance: str) -> QRing:
    n = p.dim
    constants = {}
    for a in range(n):
        for b in range(a, n):
            terms = {}
            for (k, d), form in sysm.product_forms(a, b).items():
                val = Fraction(0)
                for v, x in form.items():
                    val += x if v is CONST else x * values[v]
                if val:
                    terms[(k, d)] = val
            constants[(a, b)] = terms
    return QRing(p.name, list(p.labels), list(p.degrees), p.c1, constants, p.unit_index, provenance)


def linear_freedom(p: PartialTable) -> int:
    sysm = _System(p)
    pivots = _eliminate(sysm.linear_equations(), len(sysm.variables))
    return len(sysm.variables) - len(pivots)
