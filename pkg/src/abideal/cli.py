"""Command-line interface.

Subcommands: info, ideals, verify, hasse, tables, young.  All output is
deterministic — the same invocation always produces byte-identical text,
JSON or DOT.  Exit codes: 0 success, 1 a verification check failed,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Dict, List, Optional, Sequence

from .checks import TypeReport, summary_rows, verify_all, verify_type
from .hasse import build_graph, to_dot
from .ideals import (
    associated_long_root,
    catalog_of,
    enumerate_all,
    long_simple_nodes,
)
from .root_system import RootSystem, SimpleType, build, supported_types
from .young import YoungDiagram, young_encode, young_lattice

_VALID_TYPES = "A1-A11, B2-B8, C2-C8, D4-D8, E6-E8, F4, G2"


def _type_arg(text: str) -> str:
    try:
        return str(SimpleType.parse(text))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"invalid type {text!r}; valid families and ranks: {_VALID_TYPES}")


def _print(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _dump_json(obj) -> None:
    _print(json.dumps(obj, indent=2))


# ----------------------------------------------------------------------
# info

def _cmd_info(args: argparse.Namespace) -> int:
    rs = build(args.type)
    ideals = enumerate_all(rs)
    rows = [
        ("type", str(rs.simple_type)),
        ("rank", rs.rank),
        ("dimension", rs.dimension),
        ("positive roots", rs.num_positive),
        ("long positive roots", len(rs.long_positive_roots())),
        ("coxeter number", rs.coxeter_number),
        ("dual coxeter number", rs.dual_coxeter_number),
        ("exponents", " ".join(str(e) for e in rs.exponents)),
        ("marks", " ".join(str(n) for n in rs.marks)),
        ("highest root", "".join(str(n) for n in rs.theta)),
        ("long simple nodes", " ".join(str(i) for i in long_simple_nodes(rs))),
        ("abelian ideals", len(ideals)),
        ("max ideal dimension", max(a.dim for a in ideals)),
    ]
    width = max(len(k) for k, _ in rows)
    for key, value in rows:
        _print(f"{key:<{width}}  {value}")
    return 0


# ----------------------------------------------------------------------
# ideals

def _ideal_dict(rs: RootSystem, entry) -> Dict[str, object]:
    a = entry.ideal
    out: Dict[str, object] = {
        "type": str(rs.simple_type),
        "roots": [list(r) for r in sorted(a.roots)],
        "dim": a.dim,
    }
    if a.dim == 0:
        out["assoc_long_root"] = None
        out["param"] = None
    else:
        out["assoc_long_root"] = list(associated_long_root(rs, a))
        out["param"] = {"phi": list(entry.phi), "coset_word": list(entry.coset_word)}
    return out


def _cmd_ideals(args: argparse.Namespace) -> int:
    rs = build(args.type)
    cat = catalog_of(rs)
    if args.json:
        _dump_json({
            "schema": 1,
            "type": str(rs.simple_type),
            "count": len(cat),
            "ideals": [_ideal_dict(rs, e) for e in cat.entries],
        })
        return 0
    _print(f"# {len(cat)} abelian ideals of type {rs.simple_type}")
    for k, e in enumerate(cat.entries):
        a = e.ideal
        phi = "".join(str(c) for c in e.phi) if e.phi is not None else "-"
        word = ".".join(str(i) for i in e.coset_word) if e.coset_word else "-"
        roots = ",".join("".join(str(c) for c in r) for r in a.roots) or "-"
        _print(f"{k} dim={a.dim} phi={phi} coset={word} roots={roots}")
    return 0


# ----------------------------------------------------------------------
# verify

def _report_lines(report: TypeReport) -> List[str]:
    lines = [f"== {report.label} =="]
    for r in report.results:
        flag = "PASS" if r.passed else "FAIL"
        lines.append(f"{r.name:<20} {flag}  {r.details}")
    return lines


def _report_dict(report: TypeReport) -> Dict[str, object]:
    return {
        "type": report.label,
        "passed": report.passed,
        "checks": [{"name": r.name, "passed": r.passed, "details": r.details}
                   for r in report.results],
    }


def _cmd_verify(args: argparse.Namespace) -> int:
    reports = verify_all(args.max_rank) if args.all else (verify_type(args.type),)
    passed = all(r.passed for r in reports)
    if args.json:
        if args.all:
            _dump_json({"schema": 1, "passed": passed,
                        "types": [_report_dict(r) for r in reports]})
        else:
            _dump_json({"schema": 1, **_report_dict(reports[0])})
    else:
        for rep in reports:
            for line in _report_lines(rep):
                _print(line)
        total = sum(len(r.results) for r in reports)
        _print(f"result: {'PASS' if passed else 'FAIL'} "
               f"({total} checks over {len(reports)} type{'s' if len(reports) > 1 else ''})")
    return 0 if passed else 1


# ----------------------------------------------------------------------
# hasse

def _cmd_hasse(args: argparse.Namespace) -> int:
    rs = build(args.type)
    text = to_dot(build_graph(rs))
    if args.dot == "-":
        sys.stdout.write(text)
    else:
        with open(args.dot, "w", encoding="ascii") as fh:
            fh.write(text)
    return 0


# ----------------------------------------------------------------------
# tables

def _decomposition_str(d: Sequence[int]) -> str:
    g, n_hat, n_perp, _ = d
    return f"{g - 1}+{n_hat}-{n_perp}"


def _cmd_tables(args: argparse.Namespace) -> int:
    rows = summary_rows(args.max_rank)
    if args.json:
        _dump_json({"schema": 1, "rows": rows})
        return 0
    header = (f"{'type':<5} {'g-1':>4} {'roots':>6} {'long':>5} {'max':>4} "
              f"{'mult':>5}  {'decomposition':<14} {'witness':<8} {'sum1':>5} {'sum2':>5}")
    _print(header)
    _print("-" * len(header))
    for row in rows:
        decs = row["decompositions"]
        witness = ",".join(str(w) for w in row["witness_nodes"])
        _print(f"{row['type']:<5} {row['dual_coxeter_minus_one']:>4} "
               f"{row['positive_roots']:>6} {row['long_positive_roots']:>5} "
               f"{row['max_dim']:>4} {row['max_dim_multiplicity']:>5}  "
               f"{_decomposition_str(decs[0]):<14} {witness:<8} "
               f"{row['first_sum']['total']:>5} {row['second_sum']['total']:>5}")
    return 0


# ----------------------------------------------------------------------
# young

def _parse_shape(text: str) -> YoungDiagram:
    try:
        rows = tuple(int(p) for p in text.split(","))
        return YoungDiagram(rows)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad shape {text!r}: {exc}")


def _cmd_young(args: argparse.Namespace) -> int:
    n = args.rank + 1
    if args.encode is not None:
        d = args.encode
        if d.max_hook > n - 1:
            _print(f"shape {','.join(str(r) for r in d.rows)} has hook "
                   f"{d.max_hook} > {n - 1}; not in the rank-{args.rank} lattice")
            return 1
        code = young_encode(d, n)
        _print(f"{code:b} = {code}")
        return 0
    lattice = young_lattice(n)
    if args.list:
        for code, d in enumerate(lattice):
            shape = ",".join(str(r) for r in d.rows) or "-"
            _print(f"{code:>{len(str(len(lattice) - 1))}} {code:0{n - 1}b} {shape}")
        return 0
    by_size: Dict[int, int] = {}
    for d in lattice:
        by_size[d.size] = by_size.get(d.size, 0) + 1
    _print(f"diagrams with hooks at most {n - 1}: {len(lattice)} = 2^{n - 1}")
    _print("by cell count: " + " ".join(f"{k}:{by_size[k]}" for k in sorted(by_size)))
    return 0


# ----------------------------------------------------------------------
# parser assembly

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abideal",
        description="Exact-arithmetic tools for abelian ideals of a Borel subalgebra.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="headline invariants of one type")
    p.add_argument("type", type=_type_arg)
    p.set_defaults(fn=_cmd_info)

    p = sub.add_parser("ideals", help="list every abelian ideal with its parameter")
    p.add_argument("type", type=_type_arg)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--text", action="store_true", help="plain text (default)")
    p.set_defaults(fn=_cmd_ideals)

    p = sub.add_parser("verify", help="run the named invariant checks")
    p.add_argument("type", nargs="?", type=_type_arg,
                   help="one type; or use --all")
    p.add_argument("--all", action="store_true", help="all types up to --max-rank")
    p.add_argument("--max-rank", type=int, default=8, choices=range(1, 9),
                   metavar="N", help="rank bound for --all (default 8)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("hasse", help="emit the labelled cover graph as DOT")
    p.add_argument("type", type=_type_arg)
    p.add_argument("--dot", required=True, metavar="PATH",
                   help="output path, or - for stdout")
    p.set_defaults(fn=_cmd_hasse)

    p = sub.add_parser("tables", help="summary table over all types")
    p.add_argument("--max-rank", type=int, default=8, choices=range(1, 9), metavar="N")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_tables)

    p = sub.add_parser("young", help="diagram lattice for the linear family")
    p.add_argument("rank", type=int, metavar="l",
                   help="rank l of the linear type (1..11)")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--encode", type=_parse_shape, metavar="R1,R2,...",
                      help="rim-code one shape given as comma-separated row lengths")
    mode.add_argument("--list", action="store_true",
                      help="every code with its shape")
    p.set_defaults(fn=_cmd_young)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.all == (args.type is not None):
        parser.error("pass exactly one of <TYPE> or --all")
    if args.command == "young" and not 1 <= args.rank <= 11:
        parser.error("rank must be between 1 and 11")
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
