"""
Random finite-dimensional commutative unital Q-algebras with a known radical.

Each algebra is a product of local blocks whose nilradical is known by
construction, written in a scrambled basis obtained by an integral unimodular
change of coordinates.  Structure constants stay integral, which keeps the
brute-force nilpotency scan exact and cheap.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import linalg
from .qring import SpecializedAlgebra

# (name, dim, radical dim, residue field is Q)
_BLOCKS = [
    ("Q", 1, 0, True),
    ("Q[x]/x^2", 2, 1, True),
    ("Q[x]/x^3", 3, 2, True),
    ("Q[x]/(x-1)^2", 2, 1, True),
    ("Q[x]/(x^2-2)", 2, 0, False),
    ("Q[x]/(x^2+1)^2", 4, 2, False),
    ("Q[x,y]/(x,y)^2", 3, 2, True),
    ("Q[x,y]/(x^2,y^2)", 4, 3, True),
]


def _monogenic(f: list) -> tuple[list, list]:
    """Structure tensor of Q[x]/(f) in the basis 1..x^{k-1}; f monic, lowest degree first."""
    k = len(f) - 1

    def reduce(coeffs):
        c = list(coeffs) + [0] * max(0, 2 * k - 1 - len(coeffs))
        for d in range(len(c) - 1, k - 1, -1):
            top = c[d]
            if top:
                c[d] = 0
                for i in range(k):
                    c[d - k + i] -= top * f[i]
        return c[:k]

    tensor = [[reduce([0] * (i + j) + [1]) for j in range(k)] for i in range(k)]
    return tensor, [1] + [0] * (k - 1)


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _block(name: str):
    """(tensor, unit, radical basis) for a named block."""
    if name == "Q":
        return [[[1]]], [1], []
    if name.startswith("Q[x]/"):
        p, m = {
            "Q[x]/x^2": ([0, 1], 2),
            "Q[x]/x^3": ([0, 1], 3),
            "Q[x]/(x-1)^2": ([-1, 1], 2),
            "Q[x]/(x^2-2)": ([-2, 0, 1], 1),
            "Q[x]/(x^2+1)^2": ([1, 0, 1], 2),
        }[name]
        f = [1]
        for _ in range(m):
            f = _poly_mul(f, p)
        tensor, unit = _monogenic(f)
        k = len(f) - 1
        rad = []
        for i in range(k - (len(p) - 1)):
            v = [0] * i + p
            rad.append(v + [0] * (k - len(v)))
        return tensor, unit, rad
    if name == "Q[x,y]/(x,y)^2":
        t = [[[0] * 3 for _ in range(3)] for _ in range(3)]
        t[0][0][0] = 1
        for i in (1, 2):
            t[0][i][i] = t[i][0][i] = 1
        return t, [1, 0, 0], [[0, 1, 0], [0, 0, 1]]
    if name == "Q[x,y]/(x^2,y^2)":
        # basis 1, x, y, xy
        t = [[[0] * 4 for _ in range(4)] for _ in range(4)]
        mono = [(0, 0), (1, 0), (0, 1), (1, 1)]
        for i, (a, b) in enumerate(mono):
            for j, (c, d) in enumerate(mono):
                if a + c <= 1 and b + d <= 1:
                    t[i][j][mono.index((a + c, b + d))] = 1
        return t, [1, 0, 0, 0], [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    raise ValueError(name)


@dataclass
class RandomAlgebra:
    algebra: SpecializedAlgebra
    radical: list  # known radical basis, in the scrambled coordinates
    blocks: list
    split: bool  # every residue field is Q


def _product(blocks):
    n = sum(len(_block(b)[1]) for b in blocks)
    tensor = [[[0] * n for _ in range(n)] for _ in range(n)]
    unit = [0] * n
    rad = []
    off = 0
    for b in blocks:
        t, u, r = _block(b)
        k = len(u)
        for i in range(k):
            unit[off + i] = u[i]
            for j in range(k):
                for c in range(k):
                    tensor[off + i][off + j][off + c] = t[i][j][c]
        for v in r:
            rad.append([0] * off + v + [0] * (n - off - k))
        off += k
    return tensor, unit, rad


def _unimodular(n: int, rng: random.Random, steps: int) -> list:
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        if n < 2:
            break
        i, j = rng.sample(range(n), 2)
        c = rng.choice((-1, 1))
        for r in range(n):
            u[r][i] += c * u[r][j]
    return u


def random_algebra(rng: random.Random, max_dim: int = 5) -> RandomAlgebra:
    """A product of random local blocks of total dimension <= max_dim, in scrambled coordinates."""
    blocks, dim = [], 0
    while True:
        choices = [b for b in _BLOCKS if dim + b[1] <= max_dim]
        if not choices or (blocks and rng.random() < 0.35):
            break
        b = rng.choice(choices)
        blocks.append(b[0])
        dim += b[1]
    tensor, unit, rad = _product(blocks)
    n = dim
    # new basis f_i = sum_j u[j][i] e_j; coordinates transform by u^{-1}
    u = _unimodular(n, rng, 3 * n)
    uinv = linalg.inverse(linalg.frac_matrix(u))
    new = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for a in range(n):
        for b in range(n):
            # f_a f_b in old coordinates
            acc = [Fraction(0)] * n
            for i in range(n):
                if not u[i][a]:
                    continue
                for j in range(n):
                    if not u[j][b]:
                        continue
                    for k in range(n):
                        if tensor[i][j][k]:
                            acc[k] += u[i][a] * u[j][b] * tensor[i][j][k]
            new[a][b] = linalg.matvec(uinv, acc)
    alg = SpecializedAlgebra.from_dense(new, linalg.matvec(uinv, unit), check=True)
    radical = [linalg.matvec(uinv, v) for v in rad]
    split = all(b[3] for b in _BLOCKS if b[0] in blocks)
    return RandomAlgebra(alg, radical, blocks, split)


def brute_force_nilpotents(A: SpecializedAlgebra, box: int = 1) -> list:
    """All integer coordinate vectors with entries in [-box, box] whose power A.dim vanishes."""
    if A.dim == 0:
        return []
    grid = _box(A.dim, box)
    return [[Fraction(int(x)) for x in row] for row in grid[_nilpotent_mask(A, grid)]]


def _box(n: int, box: int):
    return np.array(np.meshgrid(*[range(-box, box + 1)] * n, indexing="ij"), dtype=object).reshape(n, -1).T


def _nilpotent_mask(A: SpecializedAlgebra, grid):
    n = A.dim
    tensor = np.zeros((n, n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            for k, c in A.table[i][j].items():
                # integral constants run as plain ints, which is much faster than Fraction
                tensor[i, j, k] = int(c) if Fraction(c).denominator == 1 else c
    flat = tensor.reshape(n, n * n)
    power = grid.copy()
    for _ in range(n - 1):
        # (power * v)_k = sum_ij power_i v_j T_ijk
        left = (power @ flat).reshape(-1, n, n)
        power = (left * grid[:, :, None]).sum(axis=1)
    return ~np.any(power != 0, axis=1)


def _span_mask(basis: list, n: int, grid):
    """Rows of grid lying in the span of basis, via functionals that cut out the span."""
    if not basis:
        return ~np.any(grid != 0, axis=1)
    funcs = linalg.nullspace(basis, n)
    if not funcs:
        return np.ones(len(grid), dtype=bool)
    f = np.array(funcs, dtype=object).T
    return ~np.any((grid @ f) != 0, axis=1)


@dataclass
class NilpotentScan:
    points: int
    nilpotent: int
    in_radical: int
    agree: bool


def nilpotent_scan(A: SpecializedAlgebra, radical_basis: list, box: int = 1) -> NilpotentScan:
    """Compare nilpotency with membership in radical_basis's span on every vector of a coordinate box."""
    n = A.dim
    if n == 0:
        return NilpotentScan(0, 0, 0, True)
    grid = _box(n, box)
    nil = _nilpotent_mask(A, grid)
    rad = _span_mask(radical_basis, n, grid)
    return NilpotentScan(len(grid), int(nil.sum()), int(rad.sum()), bool((nil == rad).all()))
