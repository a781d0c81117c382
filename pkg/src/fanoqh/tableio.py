"""
Text serialization of structure-constant tables (``.qring`` files).

Layout::

    name Gr(2,4)
    c1 4
    dim 6
    provenance builtin
    unit 0
    basis
    0 (0,0) 0
    ...
    products
    0 0 -> 0 0 1/1
    ...

Product lines carry i <= j and are sorted by (i, j, k, d); coefficients are
always written as num/den in lowest terms, so a save of a loaded file
reproduces it byte for byte.
"""

from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path

from .qring import PROVENANCES, QRing, RingValidationError


class TableParseError(ValueError):
    def __init__(self, line: int, column: int, message: str):
        self.line, self.column = line, column
        super().__init__(f"line {line}, column {column}: {message}")


_PRODUCT = re.compile(r"^(\d+) (\d+) -> (\d+) (\d+) (-?\d+)/(\d+)$")


def dumps(r: QRing) -> str:
    lines = [
        f"name {r.name}",
        f"c1 {r.c1}",
        f"dim {r.dim}",
        f"provenance {r.provenance}",
        f"unit {r.unit_index}",
        "basis",
    ]
    lines += [f"{i} {lab} {deg}" for i, (lab, deg) in enumerate(zip(r.labels, r.degrees))]
    lines.append("products")
    for (i, j) in sorted(r.constants):
        for (k, d), c in sorted(r.constants[(i, j)].items()):
            lines.append(f"{i} {j} -> {k} {d} {c.numerator}/{c.denominator}")
    return "\n".join(lines) + "\n"


def _header(lines, pos, key):
    if pos >= len(lines):
        raise TableParseError(pos + 1, 1, f"missing '{key}' header")
    text = lines[pos]
    if not text.startswith(key + " "):
        raise TableParseError(pos + 1, 1, f"expected '{key} <value>'")
    return text[len(key) + 1 :]


def _int(text, line, col, what):
    try:
        return int(text)
    except ValueError:
        raise TableParseError(line, col, f"{what} must be an integer, got {text!r}") from None


def loads(text: str, validate: bool = True) -> QRing:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    name = _header(lines, 0, "name")
    c1 = _int(_header(lines, 1, "c1"), 2, 4, "c1")
    dim = _int(_header(lines, 2, "dim"), 3, 5, "dim")
    prov = _header(lines, 3, "provenance")
    if prov not in PROVENANCES:
        raise TableParseError(4, 12, f"provenance must be one of {', '.join(PROVENANCES)}")
    unit = _int(_header(lines, 4, "unit"), 5, 6, "unit")
    if len(lines) < 6 or lines[5] != "basis":
        raise TableParseError(6, 1, "expected 'basis'")
    labels, degrees = [], []
    for i in range(dim):
        ln = 7 + i
        if ln - 1 >= len(lines):
            raise TableParseError(ln, 1, "basis section shorter than dim")
        parts = lines[ln - 1].split(" ")
        if len(parts) != 3:
            raise TableParseError(ln, 1, "basis line must be 'index label degree'")
        if _int(parts[0], ln, 1, "basis index") != i:
            raise TableParseError(ln, 1, f"basis index out of order, expected {i}")
        labels.append(parts[1])
        degrees.append(_int(parts[2], ln, len(parts[0]) + len(parts[1]) + 3, "degree"))
    pos = 6 + dim
    if pos >= len(lines) or lines[pos] != "products":
        raise TableParseError(pos + 1, 1, "expected 'products'")
    constants: dict = {}
    prev = None
    for idx in range(pos + 1, len(lines)):
        ln = idx + 1
        m = _PRODUCT.match(lines[idx])
        if not m:
            col = 1
            if "->" not in lines[idx]:
                col = len(lines[idx]) + 1
            raise TableParseError(ln, col, "product line must be 'i j -> k d num/den'")
        i, j, k, d, num, den = (int(g) for g in m.groups())
        if den == 0:
            raise TableParseError(ln, m.start(6) + 1, "zero denominator")
        if i > j:
            raise TableParseError(ln, 1, "product lines need i <= j")
        key = (i, j, k, d)
        if prev is not None and key <= prev:
            raise TableParseError(ln, 1, "product lines must be strictly sorted by (i, j, k, d)")
        prev = key
        constants.setdefault((i, j), {})[(k, d)] = Fraction(num, den)
    r = QRing(name, labels, degrees, c1, constants, unit, prov)
    if validate:
        r.validate()
    return r


def save_ring(r: QRing, path) -> None:
    Path(path).write_text(dumps(r), encoding="utf-8")


def load_ring(path, validate: bool = True) -> QRing:
    return loads(Path(path).read_text(encoding="utf-8"), validate=validate)


__all__ = ["TableParseError", "RingValidationError", "dumps", "loads", "save_ring", "load_ring"]
