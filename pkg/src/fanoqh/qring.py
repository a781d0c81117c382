"""
Graded quantum rings given by structure constants, and their q = 1 specializations.

A :class:`QRing` stores e_i * e_j = sum c q^d e_k as a sparse map
``(i, j) -> {(k, d): c}`` with i <= j.  Elements of the ring are dicts
``{(k, d): c}``; elements of a :class:`SpecializedAlgebra` are dense lists of
Fractions in the fixed basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations_with_replacement

from . import linalg

PROVENANCES = ("builtin", "completed", "external")


class RingValidationError(ValueError):
    """A structure-constant table violates a ring invariant."""

    def __init__(self, invariant: str, triple=None, detail: str = ""):
        self.invariant = invariant
        self.triple = triple
        msg = f"{invariant} violated"
        if triple is not None:
            msg += f" at (i,j,k,d)={triple}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


def _add_into(acc: dict, key, c):
    v = acc.get(key, 0) + c
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


@dataclass(eq=False)
class QRing:
    name: str
    labels: list
    degrees: list
    c1: int
    constants: dict = field(repr=False)
    unit_index: int = 0
    provenance: str = "builtin"

    def __post_init__(self):
        canon = {}
        for (i, j), terms in self.constants.items():
            key = (i, j) if i <= j else (j, i)
            clean = {(k, d): Fraction(c) for (k, d), c in terms.items() if c}
            if key in canon and canon[key] != clean:
                raise RingValidationError("commutativity", (i, j), "e_i*e_j differs from e_j*e_i")
            if clean:
                canon[key] = clean
        self.constants = canon
        self.labels = list(self.labels)
        self.degrees = list(self.degrees)

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def q_degree(self) -> int:
        return 2 * self.c1

    @property
    def variety_dim(self) -> int:
        return max(self.degrees) // 2

    @cached_property
    def label_index(self) -> dict:
        return {lab: i for i, lab in enumerate(self.labels)}

    def index(self, label: str) -> int:
        if label == "pt":
            return self.point_index
        if label == "1":
            return self.unit_index
        try:
            return self.label_index[label]
        except KeyError:
            raise KeyError(f"no basis class labelled {label!r} in {self.name}") from None

    @cached_property
    def point_index(self) -> int:
        top = max(self.degrees)
        tops = [i for i, d in enumerate(self.degrees) if d == top]
        if len(tops) != 1:
            raise ValueError("top degree is not one-dimensional")
        return tops[0]

    @cached_property
    def hyperplane_index(self) -> int:
        deg2 = [i for i, d in enumerate(self.degrees) if d == 2]
        if len(deg2) != 1:
            raise ValueError(f"{self.name} has {len(deg2)} degree-2 classes, expected exactly one")
        return deg2[0]

    def product(self, i: int, j: int) -> dict:
        return self.constants.get((i, j) if i <= j else (j, i), {})

    def basis_element(self, i: int) -> dict:
        return {(i, 0): Fraction(1)}

    def multiply(self, a: dict, b: dict) -> dict:
        out: dict = {}
        for (i, da), ca in a.items():
            for (j, db), cb in b.items():
                for (k, d), c in self.product(i, j).items():
                    _add_into(out, (k, d + da + db), ca * cb * c)
        return out

    def classical_pairing(self, i: int, j: int) -> Fraction:
        """Coefficient of the point class in the q^0 part of e_i * e_j."""
        return self.product(i, j).get((self.point_index, 0), Fraction(0))

    def validate(self, associativity: bool = True) -> None:
        n = self.dim
        if len(self.degrees) != n:
            raise RingValidationError("basis shape", None, "labels and degrees differ in length")
        if len(set(self.labels)) != n:
            raise RingValidationError("unique labels")
        if self.provenance not in PROVENANCES:
            raise RingValidationError("provenance", None, repr(self.provenance))
        if self.c1 <= 0:
            raise RingValidationError("positive c1")
        for deg in self.degrees:
            if deg < 0 or deg % 2:
                raise RingValidationError("even nonnegative degrees", None, str(deg))
        if not 0 <= self.unit_index < n or self.degrees[self.unit_index] != 0:
            raise RingValidationError("unit", None, "unit index must have degree 0")
        for (i, j), terms in self.constants.items():
            if not (0 <= i < n and 0 <= j < n):
                raise RingValidationError("index range", (i, j, None, None))
            for (k, d) in terms:
                if not 0 <= k < n:
                    raise RingValidationError("index range", (i, j, k, d))
                if d < 0:
                    raise RingValidationError("nonnegative q-power", (i, j, k, d))
                if self.degrees[k] + d * self.q_degree != self.degrees[i] + self.degrees[j]:
                    raise RingValidationError("grading", (i, j, k, d))
        u = self.unit_index
        for j in range(n):
            if self.product(u, j) != {(j, 0): 1}:
                raise RingValidationError("unit", (u, j, j, 0), f"unit times {self.labels[j]} is not {self.labels[j]}")
        if associativity:
            bad = find_associativity_failure(n, lambda a, b: self.multiply(a, b), self.basis_element)
            if bad is not None:
                raise RingValidationError("associativity", bad)

    def specialize(self, check: bool = True) -> "SpecializedAlgebra":
        return SpecializedAlgebra.from_qring(self, check=check)

    def same_table(self, other: "QRing") -> bool:
        return (
            self.labels == other.labels
            and self.degrees == other.degrees
            and self.c1 == other.c1
            and self.unit_index == other.unit_index
            and self.constants == other.constants
        )


def find_associativity_failure(n, mul, basis):
    """First triple (i, j, l) with (e_i e_j) e_l != e_i (e_j e_l), or None.

    Assumes commutativity, so each multiset is checked once against its three
    bracketings.
    """
    pair = {}

    def prod(i, j):
        key = (i, j) if i <= j else (j, i)
        if key not in pair:
            pair[key] = mul(basis(key[0]), basis(key[1]))
        return pair[key]

    for i, j, l in combinations_with_replacement(range(n), 3):
        x = mul(prod(i, j), basis(l))
        y = mul(prod(j, l), basis(i))
        if x != y:
            return (i, j, l)
        if i != j and j != l:
            z = mul(prod(i, l), basis(j))
            if x != z:
                return (i, l, j)
    return None


@dataclass(eq=False)
class SpecializedAlgebra:
    """Finite-dimensional commutative algebra over Q with a Z/m grading.

    ``table[i][j]`` is the sparse product ``{k: c}``; ``modulus`` is 2 c1 for
    specializations of a QRing and 0 (no grading) for bare algebras.
    """

    labels: list
    degrees: list
    modulus: int
    table: list = field(repr=False)
    unit: list = field(repr=False)
    parent: QRing | None = field(default=None, repr=False)

    @classmethod
    def from_qring(cls, r: QRing, check: bool = True) -> "SpecializedAlgebra":
        n = r.dim
        table = [[{} for _ in range(n)] for _ in range(n)]
        for (i, j), terms in r.constants.items():
            acc: dict = {}
            for (k, _d), c in terms.items():
                _add_into(acc, k, c)
            table[i][j] = acc
            table[j][i] = acc
        unit = [Fraction(0)] * n
        unit[r.unit_index] = Fraction(1)
        m = r.q_degree
        alg = cls(list(r.labels), [d % m for d in r.degrees], m, table, unit, r)
        if check:
            alg.check()
        return alg

    @classmethod
    def from_dense(cls, tensor, unit, labels=None, degrees=None, modulus=0, check=True) -> "SpecializedAlgebra":
        """``tensor[i][j]`` is the coefficient vector of e_i e_j."""
        n = len(tensor)
        table = [[{k: Fraction(c) for k, c in enumerate(tensor[i][j]) if c} for j in range(n)] for i in range(n)]
        labels = labels or [f"e{i}" for i in range(n)]
        degrees = degrees or [0] * n
        alg = cls(labels, degrees, modulus, table, [Fraction(c) for c in unit])
        if check:
            alg.check()
        return alg

    @property
    def dim(self) -> int:
        return len(self.labels)

    def basis_vector(self, i: int) -> list:
        v = [Fraction(0)] * self.dim
        v[i] = Fraction(1)
        return v

    def multiply(self, a, b) -> list:
        out = [Fraction(0)] * self.dim
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if not y:
                    continue
                xy = x * y
                for k, c in self.table[i][j].items():
                    out[k] += xy * c
        return out

    def power(self, a, k: int) -> list:
        out = list(self.unit)
        for _ in range(k):
            out = self.multiply(out, a)
        return out

    @cached_property
    def structure_matrices(self) -> list:
        """E_{e_i} as dense matrices (column j = e_i e_j)."""
        n = self.dim
        mats = []
        for i in range(n):
            m = linalg.zeros(n, n)
            for j in range(n):
                for k, c in self.table[i][j].items():
                    m[k][j] = c
            mats.append(m)
        return mats

    def mult_operator(self, a) -> list:
        n = self.dim
        out = linalg.zeros(n, n)
        for i, x in enumerate(a):
            if x:
                mi = self.structure_matrices[i]
                for r in range(n):
                    row, src = out[r], mi[r]
                    for c in range(n):
                        if src[c]:
                            row[c] += x * src[c]
        return out

    def check(self) -> None:
        n = self.dim
        for i in range(n):
            for j in range(i):
                if self.table[i][j] != self.table[j][i]:
                    raise RingValidationError("commutativity", (i, j, None, None))
        if self.modulus:
            for i in range(n):
                for j in range(n):
                    for k in self.table[i][j]:
                        if (self.degrees[k] - self.degrees[i] - self.degrees[j]) % self.modulus:
                            raise RingValidationError("grading", (i, j, k, None))
        for j in range(n):
            if self.multiply(self.unit, self.basis_vector(j)) != self.basis_vector(j):
                raise RingValidationError("unit", (None, j, j, None))

        def mul(a, b):
            return {k: c for k, c in enumerate(self.multiply(a, b)) if c}

        def basis(i):
            return self.basis_vector(i)

        def mul_sparse(a, b):
            va = a if isinstance(a, list) else _dense(a, n)
            vb = b if isinstance(b, list) else _dense(b, n)
            return mul(va, vb)

        bad = find_associativity_failure(n, mul_sparse, basis)
        if bad is not None:
            raise RingValidationError("associativity", bad)


def _dense(sparse: dict, n: int) -> list:
    v = [Fraction(0)] * n
    for k, c in sparse.items():
        v[k] = c
    return v


def element_from_terms(r: QRing, terms) -> dict:
    """Build a ring element from (label_or_index, q_power, coeff) triples."""
    out: dict = {}
    for key, d, c in terms:
        i = r.index(key) if isinstance(key, str) else key
        _add_into(out, (i, d), Fraction(c))
    return out


def format_element(r: QRing, x: dict) -> str:
    if not x:
        return "0"
    parts = []
    for (k, d), c in sorted(x.items(), key=lambda kv: (kv[0][1], kv[0][0])):
        qs = "" if d == 0 else ("q" if d == 1 else f"q^{d}")
        mon = "*".join(s for s in (qs, r.labels[k]) if s)
        coeff = "" if c == 1 else ("-" if c == -1 else f"{c}*")
        parts.append(f"{coeff}{mon}")
    return " + ".join(parts).replace("+ -", "- ")


def specialize_element(r: QRing, x: dict) -> list:
    v = [Fraction(0)] * r.dim
    for (k, _d), c in x.items():
        v[k] += c
    return v


def lift_homogeneous(r: QRing, v, degree: int) -> dict:
    """Lift a q = 1 vector supported in one residue class to the given degree."""
    out = {}
    for k, c in enumerate(v):
        if not c:
            continue
        diff = degree - r.degrees[k]
        if diff % r.q_degree or diff < 0:
            raise ValueError(f"component {r.labels[k]} cannot be lifted to degree {degree}")
        out[(k, diff // r.q_degree)] = Fraction(c)
    return out
