"""Command-line front end: ``fanoqh <verb> ...``.

Exit codes: 0 success, 1 a check failed, 2 usage error, 3 bad input data.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import catalog, polys, verify
from . import qalgebra as qa
from .completion import InconsistentConstraints, Underdetermined, associativity_complete
from .qring import RingValidationError, format_element
from .rings import (
    coadjoint_partial_table,
    complete_intersection,
    grassmannian2,
    projective_space,
)
from .tableio import TableParseError, dumps, load_ring

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DATA = 0, 1, 2, 3


class UsageError(Exception):
    pass


class DataError(Exception):
    pass


def _yes(b) -> str:
    return "true" if b else "false"


# ---------------------------------------------------------------------------
# catalog


def cmd_catalog(args, out) -> int:
    rows = catalog.cominuscule_catalog(args.max_rank)
    out.write("cominuscule\n")
    for r in rows:
        out.write(
            f"  {r.name:<12} G/P={r.space.label():<10} dim={r.dimension:<4} c1={r.index:<4} "
            f"dim Gamma2={r.gamma2_dim} Y2={r.conic_space or '-'} F={r.fiber or '-'}\n"
        )
    out.write("adjoint\n")
    for r in catalog.adjoint_catalog(args.max_rank):
        c1 = ",".join(map(str, r.index)) if isinstance(r.index, tuple) else r.index
        out.write(f"  {r.name:<12} G/P={r.space.label():<10} dim={r.dimension:<4} c1={c1}\n")
    reports = {
        "dim F = 2(c1 - dim Gamma2)": catalog.fiber_dimension_check(rows),
        "adjoint dim = 2 c1 - 1 (type C: c1 = dim + 1)": catalog.adjoint_dimension_check(catalog.adjoint_catalog(args.max_rank)),
        "dim and c1 from roots": catalog.root_system_check(rows + catalog.adjoint_catalog(args.max_rank)),
    }
    ok = True
    for title, rep in reports.items():
        out.write(f"check {title}: {'PASS' if rep.ok else 'FAIL'} ({len(rep.entries)} entries)\n")
        for e in rep.failures:
            out.write(f"  {e.name} {e.quantity}: expected {e.expected}, found {e.found}\n")
        ok &= rep.ok
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------------------
# build


def parse_variety(spec: str):
    """pn:<n> | ci:<n>:<d1,..,dr> | gr2:<n> | coadj:<Cn|F4>"""
    kind, _, rest = spec.partition(":")
    try:
        if kind == "pn":
            return projective_space(int(rest))
        if kind == "ci":
            n, _, ds = rest.partition(":")
            return complete_intersection(int(n), [int(d) for d in ds.split(",") if d])
        if kind == "gr2":
            return grassmannian2(int(rest))
        if kind == "coadj":
            res = associativity_complete(coadjoint_partial_table(rest))
            if isinstance(res, Underdetermined):
                raise DataError(f"completion of {rest} is underdetermined: {res}")
            return res
    except ValueError as err:
        raise UsageError(f"bad variety {spec!r}: {err}") from None
    raise UsageError(f"unknown variety kind {kind!r}; use pn, ci, gr2 or coadj")


def cmd_build(args, out) -> int:
    r = parse_variety(args.variety)
    text = dumps(r)
    if args.output == "-":
        out.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as f:
            f.write(text)
        out.write(f"wrote {r.name} ({r.dim} classes) to {args.output}\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# analyze


def _frac(x) -> str:
    return str(Fraction(x))


def analysis(r) -> dict:
    A = r.specialize(check=False)
    rep = qa.theorem1_report(A)
    rad = rep.radical
    mp = qa.h_subalgebra_minimal_polynomial(A)
    return {
        "name": r.name,
        "provenance": r.provenance,
        "dim": r.dim,
        "c1": r.c1,
        "variety_dim": r.variety_dim,
        "radical_dim": rad.dim,
        "semisimple": rad.is_semisimple,
        "radical_basis": [format_element(r, {(i, 0): c for i, c in enumerate(v) if c}) for v in rad.basis],
        "nilpotency_orders": [k for _, k in rad.witnesses],
        "gram_labels": rep.qx.labels,
        "gram": [[_frac(x) for x in row] for row in rep.qx.gram],
        "positive_definite": rep.qx.positive_definite,
        "failing_minor": rep.qx.failing_minor,
        "ldl_agrees": rep.qx.ldl_agrees,
        "kernel_dim": rep.kernel_dim,
        "image_dim": rep.image_dim,
        "h_minimal_polynomial": polys.format_poly(mp),
        "clause1": rep.clause1,
        "clause2_fires": rep.clause2_fires,
        "clause2": rep.clause2,
        "clause3_fires": rep.clause3_fires,
        "clause3": rep.clause3,
        "consistent": rep.consistent,
    }


def _clause(v) -> str:
    return "n/a" if v is None else ("PASS" if v else "FAIL")


def format_analysis(a: dict) -> str:
    lines = [
        f"ring: {a['name']} (provenance {a['provenance']}, dim {a['dim']}, c1 {a['c1']}, variety dim {a['variety_dim']})",
        f"radical dim: {a['radical_dim']}; semisimple: {_yes(a['semisimple'])}; Q_Y positive definite: {_yes(a['positive_definite'])}",
    ]
    for b, k in zip(a["radical_basis"], a["nilpotency_orders"]):
        lines.append(f"  radical element {b} (nilpotency order {k})")
    lines.append(f"Q_Y Gram on {', '.join(a['gram_labels'])}:")
    for row in a["gram"]:
        lines.append("  [" + " ".join(row) + "]")
    minor = "none" if a["failing_minor"] is None else a["failing_minor"]
    lines.append(f"  first non-positive leading minor: {minor}; LDL agrees: {_yes(a['ldl_agrees'])}")
    lines.append(f"E_h: kernel dim {a['kernel_dim']}, image dim {a['image_dim']}")
    lines.append(f"h minimal polynomial: {a['h_minimal_polynomial']}")
    lines.append(f"clause 1 (R inside generalized kernel of E_h): {_clause(a['clause1'])}")
    lines.append(f"clause 2 (E_h injective): fires {_yes(a['clause2_fires'])}, {_clause(a['clause2'])}")
    lines.append(f"clause 3 (A_0 splits): fires {_yes(a['clause3_fires'])}, {_clause(a['clause3'])}")
    return "\n".join(lines) + "\n"


def _load(path):
    try:
        return load_ring(path)
    except FileNotFoundError:
        raise DataError(f"no such file: {path}") from None


def cmd_analyze(args, out) -> int:
    a = analysis(_load(args.file))
    out.write(json.dumps(a, indent=2, sort_keys=True) + "\n" if args.json else format_analysis(a))
    return EXIT_OK if a["consistent"] else EXIT_FAIL


# ---------------------------------------------------------------------------
# deform


def _parse_surviving(r, items):
    out = []
    for item in items:
        label, _, qpow = item.rpartition(":")
        if not label:
            raise UsageError(f"--surviving expects LABEL:QPOWER, got {item!r}")
        try:
            out.append((r.index(label), int(qpow)))
        except ValueError:
            raise UsageError(f"--surviving expects LABEL:QPOWER, got {item!r}") from None
        except KeyError as err:
            raise DataError(str(err)) from None
    return out


def default_surviving(r, tau_label: str):
    """Surviving monomials for the bundled cases, else None (lattice mode)."""
    for name, label, surviving in verify.BQH_CASES.values():
        if name == r.name and label == tau_label and surviving is not None:
            return [(r.index(lab), d) for lab, d in surviving]
    return None


def cmd_deform(args, out) -> int:
    r = _load(args.file)
    try:
        tau = r.basis_element(r.index(args.tau))
    except KeyError as err:
        raise DataError(err.args[0]) from None
    surviving = _parse_surviving(r, args.surviving) if args.surviving else None
    if surviving is None and not args.no_default_surviving:
        surviving = default_surviving(r, args.tau)
    v = qa.order2_nilpotent_obstruction(r, tau, surviving=surviving)
    out.write(f"ring: {r.name}; tau: {args.tau}\n")
    if surviving is not None:
        out.write("  surviving monomials: " + ", ".join(format_element(r, {m: Fraction(1)}) for m in surviving) + "\n")
    for key in ("C0", "C1", "v", "D0", "D1"):
        if key in v.elements:
            out.write(f"  {key} = {format_element(r, v.elements[key])}\n")
    if v.lam is not None:
        out.write(f"  lambda = {v.lam}\n")
    if "W_class" in v.elements:
        out.write(f"  class of W modulo Im E_h: {[str(c) for c in v.elements['W_class']]}\n")
    for k, ok in v.checks.items():
        out.write(f"  check {k}: {_yes(ok)}\n")
    out.write(v.summary() + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args, out) -> int:
    results = verify.run_suite(args.suite, parallel=args.parallel)
    out.write(verify.format_report(args.suite, results))
    return EXIT_FAIL if any(c.status == verify.FAIL for c in results) else EXIT_OK


# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="fanoqh", description="Quantum cohomology rings of Fano varieties: build, analyze, verify.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    c = sub.add_parser("catalog", help="print the homogeneous-space tables and their consistency checks")
    c.add_argument("--max-rank", type=int, default=8)
    c.set_defaults(fn=cmd_catalog)

    b = sub.add_parser("build", help="construct a ring and write its table")
    b.add_argument("--variety", required=True, help="pn:<n>, ci:<n>:<d1,..>, gr2:<n> or coadj:<Cn|F4>")
    b.add_argument("-o", "--output", default="-")
    b.set_defaults(fn=cmd_build)

    a = sub.add_parser("analyze", help="radical, Q_Y and E_h report for a table")
    a.add_argument("file")
    a.add_argument("--json", action="store_true")
    a.set_defaults(fn=cmd_analyze)

    d = sub.add_parser("deform", help="first-order obstruction to semisimplicity after deforming along tau")
    d.add_argument("file")
    d.add_argument("--tau", required=True, help="class label, e.g. pt or s:a2+2a3+a4")
    d.add_argument("--surviving", nargs="*", metavar="LABEL:QPOWER", help="monomials of pt *_1 pt that may be nonzero")
    d.add_argument("--no-default-surviving", action="store_true", help="ignore the built-in choice for bundled rings")
    d.set_defaults(fn=cmd_deform)

    v = sub.add_parser("verify", help="run the verification suites")
    v.add_argument("--suite", choices=verify.SUITES, default="paper")
    v.add_argument("--parallel", action="store_true")
    v.set_defaults(fn=cmd_verify)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.fn(args, out)
    except UsageError as e:
        err.write(f"usage error: {e}\n")
        return EXIT_USAGE
    except (DataError, TableParseError, RingValidationError, InconsistentConstraints) as e:
        err.write(f"data error: {e}\n")
        return EXIT_DATA


def main() -> None:
    sys.exit(run())


__all__ = ["run", "main", "build_parser", "analysis", "format_analysis", "parse_variety"]
