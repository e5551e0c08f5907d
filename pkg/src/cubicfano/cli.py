"""Command-line front end: ``fano <command> [options]``, JSON on stdout.

Exit codes: 0 success, 1 an ``--expect`` check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Sequence

from . import fano
from .exactmath import CycloElem
from .groebner import NotACubic, smooth_cubic
from .groups import (
    UnknownGroup,
    element_order,
    enumerate_group,
    involutions,
    linear_characters,
    pair_order_histogram,
)
from .lattice import factor_integer, lattice_invariants
from .mpoly import PolySyntaxError, format_poly, parse_poly
from .reps import RepresentationError, build_representation, eigenspace_cubics, rep_trace_table

INT64_MAX = 2**63 - 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse with usage errors raised instead of printed, so the position can be added."""

    def error(self, message):
        raise UsageError(message)


# JSON -------------------------------------------------------------------------


def _jsonable(x):
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return str(x) if abs(x) > INT64_MAX else x
    if isinstance(x, Fraction):
        return _jsonable(x.numerator) if x.denominator == 1 else str(x)
    if isinstance(x, CycloElem):
        return _jsonable(x.to_rational()) if x.is_rational() else str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return str(x)


def dumps(payload) -> str:
    return json.dumps(_jsonable(payload), sort_keys=True, indent=2)


def _factored(n: int) -> dict:
    return {str(p): e for p, e in factor_integer(abs(n)).items()}


# commands ---------------------------------------------------------------------


def cmd_group(args) -> dict:
    G = enumerate_group(args.name)
    hist = pair_order_histogram(G)
    orders = sorted({element_order(G, g) for g in G.elements})
    return {
        "name": G.name,
        "order": len(G),
        "involutions": len(involutions(G)),
        "element_orders": orders,
        "pair_orders": sorted(hist),
        "histogram": {str(k): v for k, v in hist.items()},
    }


def _parse_rule(text: str) -> fano.IntersectionRule:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4 or not all(re.fullmatch(r"-?\d+", p) for p in parts):
        raise UsageError(f"--rule expects x,y,z,w integers, got {text!r}")
    return fano.IntersectionRule.from_xyzw(*map(int, parts))


def cmd_lattice(args) -> dict:
    if args.scaled:
        return fano.scaled_lattice_report()
    rule = _parse_rule(args.rule) if args.rule else fano.GENUS2_RULE
    rule = fano.IntersectionRule(args.diag, rule.by_order)
    if rule == fano.GENUS2_RULE and args.group in ("z2", "d2", "d3", "d5", "d6", "a5"):
        report = fano.group_lattice_report(args.group)
    else:
        M = fano.gram_from_group(enumerate_group(args.group), rule)
        inv = lattice_invariants(M)
        report = {
            "group": args.group,
            "involutions": len(M),
            "rank": inv.rank,
            "signature": list(inv.signature),
            "discriminant": inv.discriminant,
        }
    report["discriminant_factored"] = _factored(report["discriminant"])
    report["rule"] = {"diag": rule.diag, **{str(k): v for k, v in sorted(rule.by_order.items())}}
    return report


def cmd_survey(args) -> dict:
    records = fano.lambda_survey()
    return {
        "records": records,
        "rank_at_most_25": [list(t) for t in fano.survey_low_rank(records, 25)],
    }


def cmd_klein(args) -> dict:
    r = fano.klein_report()
    r["disc_lambda_factored"] = _factored(r["disc_lambda"])
    r["disc_ns_factored"] = _factored(r["disc_ns"])
    return r


def cmd_identities(args) -> dict:
    r = fano.numeric_identities()
    return {"CD": r.CD, "D2": r.D2, "R2": r.R2, "CR": r.CR, "genusR": r.genusR}


def _parse_character(group, text: str | None) -> dict | None:
    if text is None:
        return None
    chars = linear_characters(group)
    if text not in chars:
        raise UsageError(f"--character must be one of {sorted(chars)}")
    return chars[text]


def cmd_invariant_cubics(args) -> dict:
    if args.group in fano.FAMILIES and args.decomposition is None:
        rep = fano.family_representation(args.group)
    else:
        rep = build_representation(args.group, args.decomposition or "standard")
    chi = _parse_character(rep.group, args.character) if args.character else None
    basis = eigenspace_cubics(rep, chi)
    out = {
        "representation": rep.label,
        "character": args.character or "T",
        "dimension": len(basis),
        "basis": [format_poly(p) for p in basis],
        "traces": [
            {"order": row.order, "trace": row.trace}
            for row in rep_trace_table(rep, strict=False)
        ],
    }
    if chi is None and args.group in ("d2", "d3", "d5", "d6", "a5") and args.decomposition is None:
        out["all_listed_polynomials_member"] = fano.family_membership_check(args.group)[
            "all_listed_polynomials_member"
        ]
    return out


def cmd_smooth(args) -> dict:
    if (args.cubic is None) == (args.family is None):
        raise UsageError("smooth needs exactly one of --cubic or --family")
    if args.cubic is not None:
        F = parse_poly(args.cubic)
        return {"cubic": format_poly(F), "status": smooth_cubic(F)}
    return fano.smoothness_scan(args.family, args.seed, args.tries)


def _parse_line(text: str):
    """'2,4,5' (vanishing coordinates) or 'p1 p2 p3 p4 p5; q1 ... q5' (spanning points)."""
    if ";" in text:
        rows = [[Fraction(x) for x in part.replace(",", " ").split()] for part in text.split(";")]
        return rows
    return [int(x) for x in text.split(",")]


def cmd_gamma(args) -> dict:
    F = parse_poly(args.cubic)
    if args.line:
        F = fano.normalize_line_coords(F, _parse_line(args.line))
    nf = fano.line_normal_form(F)
    harmonic = fano.harmonic_inversion_test(nf)
    return {
        "normal_form": {
            "C": format_poly(nf.C),
            "Q1": format_poly(nf.Q1),
            "Q2": format_poly(nf.Q2),
            "ell": format_poly(nf.ell),
        },
        "cubic": format_poly(F),
        "quintic": format_poly(fano.gamma_quintic(nf)),
        "harmonic": harmonic,
        "classification": fano.genus2_classification(nf) if harmonic else None,
    }


def cmd_scan_d4(args) -> dict:
    return fano.d4_nonexistence_scan(args.seed, args.samples)


# expectations -----------------------------------------------------------------


def _lookup(payload, key: str):
    cur = payload
    for part in key.split("."):
        if isinstance(cur, dict) and part in cur:
            cur = cur[part]
        elif isinstance(cur, list) and re.fullmatch(r"-?\d+", part) and -len(cur) <= int(part) < len(cur):
            cur = cur[int(part)]
        else:
            raise UsageError(f"--expect key {key!r} not found in the report")
    return cur


def _matches(actual, expected: str) -> bool:
    try:
        want = json.loads(expected)
    except json.JSONDecodeError:
        want = expected
    if actual == want:
        return True
    return json.dumps(actual, sort_keys=True) == json.dumps(want, sort_keys=True) or str(actual) == expected


def check_expectations(payload, expects: Sequence[str]) -> list[str]:
    failures = []
    data = _jsonable(payload)
    for item in expects:
        if "=" not in item:
            raise UsageError(f"--expect needs key=value, got {item!r}")
        key, value = item.split("=", 1)
        actual = _lookup(data, key)
        if not _matches(actual, value):
            failures.append(f"{key}: expected {value}, got {json.dumps(actual, sort_keys=True)}")
    return failures


# parser -----------------------------------------------------------------------

COMMANDS = {
    "group": cmd_group,
    "lattice": cmd_lattice,
    "survey": cmd_survey,
    "klein": cmd_klein,
    "identities": cmd_identities,
    "invariant-cubics": cmd_invariant_cubics,
    "smooth": cmd_smooth,
    "gamma": cmd_gamma,
    "scan-d4": cmd_scan_d4,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="fano",
        description="Genus-2 curve configurations on Fano surfaces of cubic threefolds.",
        allow_abbrev=False,
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text, allow_abbrev=False)
        p.add_argument("--expect", action="append", default=[], metavar="KEY=VALUE")
        return p

    p = add("group", "order, involutions and involution-pair product orders of a group")
    p.add_argument("--name", help="psl2_11, a5, z2 or dN (required)")

    p = add("lattice", "Gram lattice of the involution curves of a group")
    p.add_argument("--group", default="psl2_11")
    p.add_argument("--rule", help="x,y,z,w values for products of order 2,3,5,6 (default 0,2,1,0)")
    p.add_argument("--diag", type=int, default=-4)
    p.add_argument("--scaled", action="store_true", help="both half-scaled 55-curve lattices")

    add("survey", "ranks of all 81 lattices with x,y,z,w in {0,1,2}")
    add("klein", "Klein surface lattice, incidence class and index")
    add("identities", "intersection numbers of the split incidence divisor")

    p = add("invariant-cubics", "cubic forms in a character eigenspace")
    p.add_argument("--group", help="required")
    p.add_argument("--decomposition", help="e.g. V1/5+V2/5+T (default: the family's representation)")
    p.add_argument("--character", help="T, L, L1 or L2 (default T)")

    p = add("smooth", "smoothness of a cubic, or a seeded search in a family")
    p.add_argument("--cubic")
    p.add_argument("--family")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tries", type=int, default=10)

    p = add("gamma", "normal form along a line and the plane quintic")
    p.add_argument("--cubic", help="required")
    p.add_argument("--line", help="vanishing coordinates '1,2,3' or two points 'p;q'")

    p = add("scan-d4", "search for smooth cubics with a D4 symmetry")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=24)
    return parser


REQUIRED = {"group": ["name"], "invariant-cubics": ["group"], "gamma": ["cubic"]}


def _parse(parser, argv: list[str]):
    args, extras = parser.parse_known_args(argv)
    if extras:
        i = argv.index(extras[0])
        raise UsageError(f"unrecognized argument {extras[0]!r} at position {i + 1}")
    for name in REQUIRED.get(args.command, []):
        if getattr(args, name) is None:
            raise UsageError(f"{args.command} requires --{name}")
    return args


def _usage_position(argv: Sequence[str], message: str) -> str:
    if "position" in message:
        return message
    for i, tok in enumerate(argv):
        flag = tok.split("=", 1)[0]
        if flag.startswith("-") and flag in message:
            return f"{message} (argument {i + 1}: {tok!r})"
    return message


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    if argv and argv[0] in ("-h", "--help"):
        parser.print_help(out)
        return 0
    try:
        args = _parse(parser, argv)
        payload = COMMANDS[args.command](args)
        failures = check_expectations(payload, args.expect)
    except UsageError as e:
        print(f"fano: usage error: {_usage_position(argv, str(e))}", file=err)
        return 2
    except PolySyntaxError as e:
        print(f"fano: usage error: {e}", file=err)
        return 2
    except (UnknownGroup, KeyError, RepresentationError, NotACubic, fano.LineError) as e:
        # bad input data rather than bad flags; same exit code
        print(f"fano: invalid input: {e}", file=err)
        return 2
    print(dumps(payload), file=out)
    if failures:
        for f in failures:
            print(f"fano: expectation failed: {f}", file=err)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
