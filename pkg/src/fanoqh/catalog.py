"""
Static catalog of cominuscule and adjoint homogeneous spaces.

Rows are stored as printed in the reference tables, parametrized by rank.
Dimensions and indices can be recomputed from the root system of G and the
marked node of P, which gives an independent check on every row.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .rootsys import RootSystemType, build_root_system


@dataclass(frozen=True)
class HomogeneousSpace:
    """G/P for a maximal (or, for type A adjoint, next-to-maximal) parabolic.

    ``nodes`` are 1-based Bourbaki node numbers of the simple roots not in P.
    """

    group: str
    nodes: tuple

    def label(self) -> str:
        return f"{self.group}/P{','.join(map(str, self.nodes))}"


def _marked_roots(space: HomogeneousSpace):
    t = RootSystemType.parse(space.group)
    rs = build_root_system(t)
    idx = [k - 1 for k in space.nodes]
    return rs, [b for b in rs.positive_roots if any(b[i] > 0 for i in idx)]


def homogeneous_dimension(space: HomogeneousSpace) -> int:
    """Number of positive roots involving a marked simple root."""
    if space.group == "point":
        return 0
    return len(_marked_roots(space)[1])


def homogeneous_index(space: HomogeneousSpace) -> int:
    """c1 of G/P for a maximal parabolic: the pairing of the sum of marked roots with the marked coroot."""
    if len(space.nodes) != 1:
        raise ValueError("index as an integer needs Picard rank one")
    rs, marked = _marked_roots(space)
    k = space.nodes[0] - 1
    total = [sum(b[i] for b in marked) for i in range(rs.rank)]
    return rs.pair(k, total)


POINT = HomogeneousSpace("point", ())


@dataclass(frozen=True)
class VarietyDescriptor:
    family: str  # root system family of G
    name: str
    params: dict
    dimension: int
    index: object  # int, or a tuple for Picard rank two
    space: HomogeneousSpace
    gamma2_dim: int | None = None
    conic_space: str | None = None  # Y_2(X)
    fiber: str | None = None
    fiber_space: HomogeneousSpace | None = None
    adjoint: bool = False
    projective_space: bool = False  # d_X(2) = 1
    codim_bound: int | None = None  # largest k with Q_Y positive definite for a codim-k section
    notes: list = field(default_factory=list)


def _grassmannian(k, n):
    return HomogeneousSpace(f"A{n - 1}", (k,)) if 0 < k < n else POINT


def cominuscule_row(kind: str, n: int, k: int | None = None) -> VarietyDescriptor:
    """One row of the cominuscule table, instantiated at rank parameter n."""
    if kind == "Gr":
        if k is None or not 1 <= k <= n - 1:
            raise ValueError("Gr(k,n) needs 1 <= k <= n-1")
        proj = k in (1, n - 1)
        fiber = None
        fiber_space = None
        conic = None
        if k == 2 and not proj:
            conic, fiber, fiber_space = f"Gr(4,{n})", f"Gr(2,{n - 2})", _grassmannian(2, n - 2)
        bound = None
        if proj:
            bound = n - 1
        elif k == 2:
            bound = 3
        return VarietyDescriptor(
            "A", f"Gr({k},{n})", {"k": k, "n": n}, k * (n - k), n, _grassmannian(k, n), 4,
            conic, fiber, fiber_space, projective_space=proj, codim_bound=bound,
        )
    if kind == "Qodd":
        return VarietyDescriptor(
            "B", f"Q{2 * n - 1}", {"n": n}, 2 * n - 1, 2 * n - 1, HomogeneousSpace(f"B{n}", (1,)), 2 * n - 1,
            "point", "point", POINT, codim_bound=2 * n - 1,
        )
    if kind == "LG":
        bound = {3: 1}.get(n)
        return VarietyDescriptor(
            "C", f"LG({n},{2 * n})", {"n": n}, n * (n + 1) // 2, n + 1, HomogeneousSpace(f"C{n}", (n,)), 3,
            f"IG({n - 2},{2 * n})", f"Gr(2,{n})", _grassmannian(2, n), codim_bound=bound,
        )
    if kind == "Qeven":
        return VarietyDescriptor(
            "D", f"Q{2 * n - 2}", {"n": n}, 2 * n - 2, 2 * n - 2, HomogeneousSpace(f"D{n}", (1,)), 2 * n - 2,
            "point", "point", POINT, codim_bound=2 * n - 2,
        )
    if kind == "OG":
        bound = {5: 5, 6: 4}.get(n)
        return VarietyDescriptor(
            "D", f"OG({n},{2 * n})", {"n": n}, n * (n - 1) // 2, 2 * n - 2, HomogeneousSpace(f"D{n}", (n,)), 6,
            f"OG({n - 4},{2 * n})", f"Gr(4,{n})", _grassmannian(4, n), codim_bound=bound,
        )
    if kind == "E6":
        return VarietyDescriptor(
            "E", "OP2", {}, 16, 12, HomogeneousSpace("E6", (6,)), 8,
            "E6/P1", "Q8", HomogeneousSpace("D5", (1,)), codim_bound=7,
        )
    if kind == "E7":
        return VarietyDescriptor(
            "E", "E7/P7", {}, 27, 18, HomogeneousSpace("E7", (7,)), 10,
            "E7/P1", "E6/P1", HomogeneousSpace("E6", (1,)), codim_bound=8,
        )
    raise ValueError(f"unknown cominuscule row {kind!r}")


def adjoint_row(kind: str, n: int | None = None) -> VarietyDescriptor:
    """One row of the adjoint table.  Node numbering follows Bourbaki."""
    rows = {
        "A": lambda: ("A", f"Fl(1,{n};{n + 1})", 2 * n - 1, (n, n), HomogeneousSpace(f"A{n}", (1, n))),
        "B": lambda: ("B", f"OG(2,{2 * n + 1})", 4 * n - 5, 2 * n - 2, HomogeneousSpace(f"B{n}", (2,))),
        "C": lambda: ("C", f"P{2 * n - 1}", 2 * n - 1, 2 * n, HomogeneousSpace(f"C{n}", (1,))),
        "D": lambda: ("D", f"OG(2,{2 * n})", 4 * n - 7, 2 * n - 3, HomogeneousSpace(f"D{n}", (2,))),
        "E6": lambda: ("E", "E6/P2", 21, 11, HomogeneousSpace("E6", (2,))),
        "E7": lambda: ("E", "E7/P1", 33, 17, HomogeneousSpace("E7", (1,))),
        "E8": lambda: ("E", "E8/P8", 57, 29, HomogeneousSpace("E8", (8,))),
        "F4": lambda: ("F", "F4/P1", 15, 8, HomogeneousSpace("F4", (1,))),
        # printed as G2/P1 with the long simple root first; Bourbaki node 2
        "G2": lambda: ("G", "G2/P1", 5, 3, HomogeneousSpace("G2", (2,))),
    }
    if kind not in rows:
        raise ValueError(f"unknown adjoint row {kind!r}")
    fam, name, dim, index, space = rows[kind]()
    return VarietyDescriptor(fam, name, {} if n is None else {"n": n}, dim, index, space, adjoint=True)


def cominuscule_catalog(max_rank: int = 8) -> list:
    out = []
    for n in range(2, max_rank + 2):
        for k in range(1, n):
            out.append(cominuscule_row("Gr", n, k))
    out += [cominuscule_row("Qodd", n) for n in range(2, max_rank + 1)]
    out += [cominuscule_row("LG", n) for n in range(2, max_rank + 1)]
    out += [cominuscule_row("Qeven", n) for n in range(4, max_rank + 1)]
    out += [cominuscule_row("OG", n) for n in range(4, max_rank + 1)]
    out += [cominuscule_row("E6", 6), cominuscule_row("E7", 7)]
    return out


def adjoint_catalog(max_rank: int = 8) -> list:
    out = [adjoint_row("A", n) for n in range(2, max_rank + 1)]
    out += [adjoint_row("B", n) for n in range(3, max_rank + 1)]
    out += [adjoint_row("C", n) for n in range(2, max_rank + 1)]
    out += [adjoint_row("D", n) for n in range(4, max_rank + 1)]
    out += [adjoint_row(k) for k in ("E6", "E7", "E8", "F4", "G2")]
    return out


@dataclass
class CatalogEntryCheck:
    name: str
    quantity: str
    expected: object
    found: object

    @property
    def ok(self) -> bool:
        return self.expected == self.found


@dataclass
class CatalogReport:
    entries: list

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)

    @property
    def failures(self) -> list:
        return [e for e in self.entries if not e.ok]


def fiber_dimension_check(rows=None) -> CatalogReport:
    """dim F = 2(c1 - dim Gamma_2) for every row with a conic-fiber entry."""
    rows = cominuscule_catalog() if rows is None else rows
    entries = []
    for r in rows:
        if r.fiber_space is None:
            continue
        dim_f = homogeneous_dimension(r.fiber_space)
        entries.append(CatalogEntryCheck(r.name, "dim F", 2 * (r.index - r.gamma2_dim), dim_f))
    return CatalogReport(entries)


def adjoint_dimension_check(rows=None) -> CatalogReport:
    """dim X = 2 c1 - 1 away from type C, where the index is compared instead to dim + 1."""
    rows = adjoint_catalog() if rows is None else rows
    entries = []
    for r in rows:
        c1 = r.index[0] if isinstance(r.index, tuple) else r.index
        if r.family == "C":
            # projective space of odd dimension: c1 = dim + 1
            entries.append(CatalogEntryCheck(r.name, "c1 - dim", 1, c1 - r.dimension))
        else:
            entries.append(CatalogEntryCheck(r.name, "2 c1 - 1", r.dimension, 2 * c1 - 1))
    return CatalogReport(entries)


def root_system_check(rows) -> CatalogReport:
    """Compare tabulated dim and index with the values recomputed from roots."""
    entries = []
    for r in rows:
        entries.append(CatalogEntryCheck(r.name, "dim", r.dimension, homogeneous_dimension(r.space)))
        if not isinstance(r.index, tuple):
            entries.append(CatalogEntryCheck(r.name, "c1", r.index, homogeneous_index(r.space)))
    return CatalogReport(entries)


def codimension_bound(r: VarietyDescriptor) -> int:
    """Largest k with 2 c1(Y) > dim Y for a nonempty codimension-k linear section Y."""
    return min(2 * r.index - r.dimension - 1, r.dimension)


def codimension_bound_check(rows=None) -> CatalogReport:
    """Tabulated codimension bounds against the index inequality."""
    rows = cominuscule_catalog() if rows is None else rows
    return CatalogReport(
        [CatalogEntryCheck(r.name, "max k", r.codim_bound, codimension_bound(r)) for r in rows if r.codim_bound is not None]
    )


def gamma2_check(rows=None) -> CatalogReport:
    """Every k allowed by the index inequality satisfies k < dim Gamma_2 (projective spaces excluded)."""
    rows = cominuscule_catalog() if rows is None else rows
    entries = []
    for r in rows:
        if r.projective_space:
            continue
        entries.append(CatalogEntryCheck(r.name, "2 c1 - dim <= dim Gamma_2", True, 2 * r.index - r.dimension <= r.gamma2_dim))
    return CatalogReport(entries)


__all__ = [
    "HomogeneousSpace",
    "VarietyDescriptor",
    "cominuscule_row",
    "adjoint_row",
    "cominuscule_catalog",
    "adjoint_catalog",
    "homogeneous_dimension",
    "homogeneous_index",
    "fiber_dimension_check",
    "adjoint_dimension_check",
    "root_system_check",
    "codimension_bound",
    "codimension_bound_check",
    "gamma2_check",
    "CatalogReport",
    "CatalogEntryCheck",
]
