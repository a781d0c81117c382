"""
Finite root systems in Bourbaki numbering and their extended affine closure.

Roots are integer coefficient tuples in the basis of simple roots.  The affine
node is alpha_0 = delta - Theta, where Theta is the highest root, and delta has
height ht(Theta) + 1 so that deg q = 2 (ht(delta) - 1).

Short roots index the Schubert classes of the coadjoint variety: sigma_theta is
the unit, sigma_{-theta} the point class and sigma_alpha is Poincare dual to
sigma_{-alpha}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")


@dataclass(frozen=True)
class RootSystemType:
    family: str
    rank: int

    def __post_init__(self):
        f, n = self.family, self.rank
        ok = (
            (f == "A" and n >= 1)
            or (f == "B" and n >= 2)
            or (f == "C" and n >= 2)
            or (f == "D" and n >= 3)
            or (f == "E" and n in (6, 7, 8))
            or (f == "F" and n == 4)
            or (f == "G" and n == 2)
        )
        if not ok:
            raise ValueError(f"invalid root system type {f}{n}")

    @classmethod
    def parse(cls, s: str) -> "RootSystemType":
        s = s.strip()
        return cls(s[0].upper(), int(s[1:]))

    def __str__(self):
        return f"{self.family}{self.rank}"


def cartan_matrix(t: RootSystemType) -> list[list[int]]:
    """Bourbaki Cartan matrix, a[i][j] = <alpha_i^vee, alpha_j>."""
    n, f = t.rank, t.family
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):
        a[i][j], a[j][i] = aij, aji

    if f in "ABC":
        for i in range(n - 1):
            link(i, i + 1)
        if f == "B":
            link(n - 2, n - 1, -1, -2)
        elif f == "C":
            link(n - 2, n - 1, -2, -1)
    elif f == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif f == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif f == "F":
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    elif f == "G":
        link(0, 1, -3, -1)
    return a


@dataclass(frozen=True)
class AffineRoot:
    """alpha + d*delta; ``finite`` may be the zero vector (multiples of delta)."""

    finite: tuple
    delta_mult: int = 0


@dataclass(frozen=True)
class QuantumMonomial:
    """q^d sigma_alpha."""

    q_power: int
    root: tuple


@dataclass(frozen=True, eq=False)
class RootSystem:
    type: RootSystemType
    cartan: tuple = field(repr=False)
    roots: tuple = field(repr=False)

    @property
    def rank(self) -> int:
        return self.type.rank

    @cached_property
    def _symmetrizer(self) -> list[Fraction]:
        # d_i = (alpha_i, alpha_i)/2 with d_i a_ij = d_j a_ji
        n = self.rank
        d = [None] * n
        d[0] = Fraction(1)
        stack = [0]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and self.cartan[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * self.cartan[i][j] / self.cartan[j][i]
                    stack.append(j)
        m = min(d)
        return [x / m for x in d]

    @cached_property
    def _gram(self) -> tuple:
        d = self._symmetrizer
        return tuple(tuple(d[i] * self.cartan[i][j] for j in range(self.rank)) for i in range(self.rank))

    @cached_property
    def _root_norms(self) -> dict:
        return {r: self._inner(r, r) for r in self.roots}

    def _inner(self, a, b) -> Fraction:
        g = self._gram
        return sum((a[i] * b[j] * g[i][j] for i in range(self.rank) if a[i] for j in range(self.rank) if b[j]), Fraction(0))

    def inner(self, a, b) -> Fraction:
        return self._inner(a, b)

    def norm2(self, a) -> Fraction:
        a = tuple(a)
        cached = self._root_norms.get(a)
        return cached if cached is not None else self._inner(a, a)

    def pair(self, i: int, a) -> int:
        """<alpha_i^vee, a> for a finite simple index i (0-based)."""
        return sum(self.cartan[i][j] * a[j] for j in range(self.rank))

    def coroot_pair(self, beta, a) -> int:
        """<beta^vee, a> = 2 (beta, a) / (beta, beta)."""
        v = 2 * self.inner(beta, a) / self.norm2(beta)
        assert v.denominator == 1
        return int(v)

    @cached_property
    def simple_roots(self) -> tuple:
        n = self.rank
        return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))

    @cached_property
    def positive_roots(self) -> tuple:
        return tuple(r for r in self.roots if any(c > 0 for c in r))

    @cached_property
    def highest_root(self) -> tuple:
        return max(self.positive_roots, key=height)

    @cached_property
    def _lengths(self) -> tuple:
        return tuple(sorted({self.norm2(r) for r in self.roots}))

    def is_short(self, a) -> bool:
        return self.norm2(a) == self._lengths[0]

    @cached_property
    def short_roots(self) -> tuple:
        return tuple(r for r in self.roots if self.is_short(r))

    @cached_property
    def highest_short_root(self) -> tuple:
        return max((r for r in self.short_roots if height(r) > 0), key=height)

    @cached_property
    def root_set(self) -> frozenset:
        return frozenset(self.roots)

    @property
    def delta_height(self) -> int:
        return height(self.highest_root) + 1

    @property
    def zero(self) -> tuple:
        return (0,) * self.rank


def build_root_system(t: RootSystemType) -> RootSystem:
    """Enumerate all roots from the Cartan matrix by root strings."""
    a = cartan_matrix(t)
    n = t.rank
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    positive = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                # p = how far down the alpha_i string goes from beta
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in positive:
                        p += 1
                    else:
                        break
                pairing = sum(a[i][j] * beta[j] for j in range(n))
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in positive:
                        positive.add(up)
                        nxt.append(up)
        layer = nxt
    pos = sorted(positive, key=lambda r: (height(r), r))
    roots = tuple(pos) + tuple(tuple(-c for c in r) for r in pos)
    return RootSystem(t, tuple(tuple(row) for row in a), roots)


def height(x) -> int:
    if isinstance(x, AffineRoot):
        raise TypeError("use affine_height for affine roots")
    return sum(x)


def affine_height(rs: RootSystem, x: AffineRoot) -> int:
    return sum(x.finite) + x.delta_mult * rs.delta_height


def short_roots(rs: RootSystem) -> list:
    return list(rs.short_roots)


def coroot_pairing(rs: RootSystem, i: int, x) -> int:
    """<alpha_i^vee, x> for i in 0..n (1-based finite nodes, 0 the affine node).

    delta pairs to zero with every coroot, so only the finite part matters.
    """
    a = x.finite if isinstance(x, AffineRoot) else x
    if i == 0:
        return -rs.coroot_pair(rs.highest_root, a)
    if not 1 <= i <= rs.rank:
        raise ValueError(f"simple index {i} out of range")
    return rs.pair(i - 1, a)


def simple_reflection(rs: RootSystem, i: int, x: AffineRoot) -> AffineRoot:
    k = coroot_pairing(rs, i, x)
    if i == 0:
        # alpha_0 = delta - Theta
        fin = tuple(c + k * t for c, t in zip(x.finite, rs.highest_root))
        return AffineRoot(fin, x.delta_mult - k)
    fin = list(x.finite)
    fin[i - 1] -= k
    return AffineRoot(tuple(fin), x.delta_mult)


def eta(rs: RootSystem, x: AffineRoot) -> QuantumMonomial:
    """eta(alpha - d delta) = q^d sigma_alpha."""
    if not any(x.finite) or not rs.is_short(x.finite):
        raise ValueError(f"finite part {x.finite} is not a short root")
    return QuantumMonomial(-x.delta_mult, x.finite)


def eta_inv(rs: RootSystem, m: QuantumMonomial) -> AffineRoot:
    if m.root not in rs.root_set or not rs.is_short(m.root):
        raise ValueError(f"{m.root} is not a short root")
    return AffineRoot(tuple(m.root), -m.q_power)


def schubert_degree(rs: RootSystem, alpha) -> int:
    """Cohomological degree of sigma_alpha (real grading, always even)."""
    if not any(alpha):
        raise ValueError("the zero vector is not a root")
    if not rs.is_short(alpha):
        raise ValueError(f"{alpha} is not short")
    ht_theta = height(rs.highest_short_root)
    if height(alpha) > 0:
        return 2 * (ht_theta - height(alpha))
    return 2 * (ht_theta - height(alpha) - 1)


def q_degree(rs: RootSystem) -> int:
    return 2 * (rs.delta_height - 1)


def quantum_degree(rs: RootSystem, m: QuantumMonomial) -> int:
    return schubert_degree(rs, m.root) + m.q_power * q_degree(rs)


def root_label(alpha) -> str:
    """'a1+2a2+a3' / '-a1-a2' style label."""
    parts = []
    for i, c in enumerate(alpha, start=1):
        if c == 0:
            continue
        mag = abs(c)
        term = f"a{i}" if mag == 1 else f"{mag}a{i}"
        parts.append(("-" if c < 0 else "+") + term)
    s = "".join(parts)
    return s[1:] if s.startswith("+") else s


def parse_root_label(label: str, rank: int) -> tuple:
    import re

    s = label.replace(" ", "")
    if s.startswith("s:"):
        s = s[2:]
    coeffs = [0] * rank
    if not s:
        raise ValueError("empty root label")
    pos = 0
    for m in re.finditer(r"([+-]?)(\d*)a(\d+)", s):
        if m.start() != pos:
            raise ValueError(f"cannot parse root label {label!r}")
        pos = m.end()
        sign = -1 if m.group(1) == "-" else 1
        mag = int(m.group(2)) if m.group(2) else 1
        idx = int(m.group(3))
        if not 1 <= idx <= rank:
            raise ValueError(f"simple root index {idx} out of range in {label!r}")
        coeffs[idx - 1] += sign * mag
    if pos != len(s):
        raise ValueError(f"cannot parse root label {label!r}")
    return tuple(coeffs)


def short_root_basis(rs: RootSystem) -> list:
    """Short roots sorted by (degree, coefficient vector)."""
    return sorted(rs.short_roots, key=lambda a: (schubert_degree(rs, a), a))
