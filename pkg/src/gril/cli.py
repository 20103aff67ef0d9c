"""Command-line front end.

Exit codes: 0 when everything passes (or fails only as recorded), 1 for a
FAIL verdict or an unexpected check failure, 2 for bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .classify import PREDICATE_IDS, classify_ideal, find_triple_zeros, parse_predicate
from .errors import GrilError, SpecParseError, SpecValidationError
from .grading import validate_grading
from .ideals import enumerate_graded_ideals, graded_spectrum_tools
from .phi import parse_phi

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2


class InputError(Exception):
    """Bad command-line input; reported with exit code 2."""


# ---------------------------------------------------------------------------
# output


def _emit(args, payload, table):
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write(table(payload))


def _rows(header, rows):
    cols = [header] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[k]) for r in cols) for k in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cols]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# spec loading


def _load_spec(source):
    from .spec_io import parse_ring_spec
    from .suite.fixtures import load_catalog

    path = Path(source)
    if path.suffix == ".json" or path.exists():
        return parse_ring_spec(path)
    for fx in load_catalog():
        if fx.name == source:
            return fx.spec
    raise InputError(f"{source}: no such file or catalog fixture")


def _build(args):
    spec = _load_spec(args.spec)
    R, ideals, phis = spec.build()
    return spec, R, ideals, phis


def _ideal(ideals, name):
    if name not in ideals:
        known = ", ".join(sorted(ideals)) or "none"
        raise InputError(f"unknown ideal {name!r} (spec defines: {known})")
    return ideals[name]


def _degree(R, text):
    if text is None:
        return R.group.identity
    try:
        g = int(text)
    except ValueError:
        raise InputError(f"degree must be an integer label, got {text!r}") from None
    if g not in R.group.labels:
        raise InputError(f"degree {g} is not a label of {R.group}")
    return g


def _phi(text):
    try:
        return parse_phi(text)
    except ValueError as exc:
        raise InputError(str(exc)) from None


# ---------------------------------------------------------------------------
# commands


def cmd_validate(args):
    spec = _load_spec(args.spec)
    R, ideals, _ = spec.build(validate=False)
    verdict = validate_grading(R)
    payload = {
        "ring": spec.name,
        "size": R.size,
        "group": str(R.group),
        "valid": verdict.passed,
        "components": {str(g): int(R.component(g).size) for g in R.degrees},
        "ideals": {name: I.size for name, I in sorted(ideals.items())},
    }
    if not verdict.passed:
        payload["witness"] = {k: str(v) for k, v in verdict.witness}

    def table(p):
        out = f"{p['ring']}: {p['size']} elements, group {p['group']}, grading {'valid' if p['valid'] else 'INVALID'}\n"
        out += _rows(["degree", "component size"], sorted(p["components"].items()))
        if "witness" in p:
            out += "witness: " + ", ".join(f"{k}={v}" for k, v in p["witness"].items()) + "\n"
        return out

    _emit(args, payload, table)
    return EXIT_OK if verdict.passed else EXIT_INPUT


def cmd_ideals(args):
    spec, R, named, _ = _build(args)
    ideals = enumerate_graded_ideals(R)
    maximal = {I.key for I in graded_spectrum_tools(R).graded_maximal}
    names = {I.key: n for n, I in named.items()}
    entries = []
    for I in ideals:
        entries.append({
            "generators": [R.ring.format_index(x) for x in I.homogeneous_generators()],
            "size": I.size,
            "proper": I.is_proper(),
            "maximal": I.key in maximal,
            "name": names.get(I.key),
        })
    payload = {
        "ring": spec.name,
        "count": len(ideals),
        "proper": sum(e["proper"] for e in entries),
        "maximal": len(maximal),
        "graded_local": len(maximal) == 1,
        "ideals": entries,
    }

    def table(p):
        rows = [("<" + ", ".join(e["generators"]) + ">", e["size"],
                 "yes" if e["proper"] else "no", "yes" if e["maximal"] else "", e["name"] or "")
                for e in p["ideals"]]
        head = f"{p['ring']}: {p['count']} graded ideals ({p['proper']} proper, {p['maximal']} maximal)\n"
        return head + _rows(["ideal", "size", "proper", "maximal", "name"], rows)

    _emit(args, payload, table)
    return EXIT_OK


def cmd_classify(args):
    spec, R, ideals, _ = _build(args)
    I = _ideal(ideals, args.ideal)
    if args.predicate not in PREDICATE_IDS:
        raise InputError(f"unknown predicate {args.predicate!r}")
    phi = _phi(args.phi) if args.phi else None
    pred = parse_predicate(args.predicate, phi, _degree(R, args.degree))
    verdict = classify_ideal(I, pred)
    payload = {
        "ring": spec.name,
        "ideal": args.ideal,
        "predicate": str(pred),
        "outcome": verdict.outcome.value,
        "witness": {role: str(v) for role, v in verdict.witness},
        "notes": verdict.notes,
    }

    def table(p):
        out = f"{p['ring']}  {p['ideal']}  {p['predicate']}: {p['outcome']}\n"
        if p["witness"]:
            out += "witness: " + ", ".join(f"{k}={v}" for k, v in p["witness"].items()) + "\n"
        if p["notes"]:
            out += f"notes: {p['notes']}\n"
        return out

    _emit(args, payload, table)
    return EXIT_OK if verdict.passed else EXIT_FAIL


def cmd_triples(args):
    spec, R, ideals, _ = _build(args)
    I = _ideal(ideals, args.ideal)
    g = _degree(R, args.degree)
    zeros = find_triple_zeros(I, g, _phi(args.phi))
    payload = {
        "ring": spec.name,
        "ideal": args.ideal,
        "phi": args.phi,
        "degree": g,
        "count": len(zeros),
        "triples": [[str(z.a), str(z.b), str(z.c)] for z in zeros],
    }

    def table(p):
        head = f"{p['ring']}  {p['ideal']}  phi={p['phi']}  g={p['degree']}: {p['count']} triple zeros\n"
        return head + (_rows(["a", "b", "c"], p["triples"]) if p["triples"] else "")

    _emit(args, payload, table)
    return EXIT_OK


def _select(selector):
    from .spec_io import parse_ring_spec
    from .suite.fixtures import Fixture, load_catalog, select_fixtures

    catalog = load_catalog()
    tokens = [s.strip() for s in (selector or "all").split(",") if s.strip()]
    files = [t for t in tokens if t.endswith(".json")]
    rest = ",".join(t for t in tokens if not t.endswith(".json"))
    chosen = select_fixtures(rest, catalog) if rest else []
    chosen += [Fixture(parse_ring_spec(Path(f))) for f in files]
    return chosen


def cmd_verify(args):
    from .suite import CHECK_IDS, run_all

    checks = None
    if args.check:
        checks = [c.strip() for item in args.check for c in item.split(",") if c.strip()]
        unknown = [c for c in checks if c not in CHECK_IDS]
        if unknown:
            raise InputError(f"unknown check(s): {', '.join(unknown)}")
    report = run_all(_select(args.fixtures), checks)

    def table(p):
        rows = [(r["check_id"], r["fixture"], r["instances"], r["passed"], r["vacuous"],
                 len(r["expected_counterexamples"]), len(r["failures"]), r["premise_rejected"])
                for r in p["records"]]
        out = _rows(["check", "fixture", "instances", "passed", "vacuous", "expected", "failures", "rejected"], rows)
        for r in p["records"]:
            for f in r["failures"]:
                out += f"FAIL {r['check_id']} {r['fixture']}: {f['instance']}  {json.dumps(f['witness'])}\n"
        s = p["summary"]
        out += (f"\n{s['instances']} instances, {s['passed']} passed ({s['vacuous']} vacuous), "
                f"{s['expected_counterexamples']} expected counterexamples, {s['failures']} failures, "
                f"{s['premise_rejected']} premise-rejected\n")
        return out

    _emit(args, report, table)
    return EXIT_OK if report["summary"]["ok"] else EXIT_FAIL


def cmd_fixtures(args):
    from .suite.fixtures import load_catalog

    entries = [
        {"name": fx.name, "size": fx.size, "group": fx.spec.grading["group"], "provenance": fx.provenance,
         "ideals": sorted(fx.spec.ideals), "notes": fx.spec.notes}
        for fx in load_catalog()
    ]
    payload = {"fixtures": entries}
    if args.show:
        by_name = {fx.name: fx for fx in load_catalog()}
        if args.show not in by_name:
            raise InputError(f"unknown fixture {args.show!r}")
        from .spec_io import serialize_ring_spec

        sys.stdout.write(serialize_ring_spec(by_name[args.show].spec))
        return EXIT_OK

    def table(p):
        rows = [(e["name"], e["size"], e["group"], e["provenance"], ",".join(e["ideals"])) for e in p["fixtures"]]
        return _rows(["name", "size", "group", "provenance", "ideals"], rows)

    _emit(args, payload, table)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default="table", help="output format")

    parser = argparse.ArgumentParser(prog="gril", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"gril {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def spec_cmd(name, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("spec", help="ring-spec JSON file or catalog fixture name")
        return p

    spec_cmd("validate", "check the grading axioms of a ring spec").set_defaults(func=cmd_validate)
    spec_cmd("ideals", "enumerate the graded ideals").set_defaults(func=cmd_ideals)

    p = spec_cmd("classify", "evaluate a predicate on a named ideal")
    p.add_argument("--ideal", required=True)
    p.add_argument("--predicate", required=True, help=", ".join(PREDICATE_IDS))
    p.add_argument("--phi", help="empty, zero, identity, power:<n> or omega")
    p.add_argument("--degree", help="degree label for the component predicates")
    p.set_defaults(func=cmd_classify)

    p = spec_cmd("triples", "list the g-φ-1-triple zeros of a named ideal")
    p.add_argument("--ideal", required=True)
    p.add_argument("--phi", default="zero")
    p.add_argument("--degree")
    p.set_defaults(func=cmd_triples)

    p = sub.add_parser("verify", parents=[common], help="run the theorem checks over fixtures")
    p.add_argument("--check", action="append", help="check id (repeatable or comma-separated)")
    p.add_argument("--fixtures", default="all",
                   help="all, paper, synthetic, or comma-separated fixture names / spec files")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fixtures", parents=[common], help="list the shipped fixture catalog")
    p.add_argument("--list", action="store_true", help="list fixtures (the default)")
    p.add_argument("--show", metavar="NAME", help="print one fixture's ring spec")
    p.set_defaults(func=cmd_fixtures)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (InputError, SpecParseError, SpecValidationError) as exc:
        code = getattr(exc, "code", "INPUT_ERROR")
        print(f"gril: {code}: {exc}", file=sys.stderr)
        witness = getattr(exc, "witness", None)
        if witness:
            print("witness: " + ", ".join(f"{k}={v}" for k, v in witness.items()), file=sys.stderr)
        return EXIT_INPUT
    except GrilError as exc:
        print(f"gril: {exc.code}: {exc}", file=sys.stderr)
        return EXIT_INPUT if exc.code in ("IMPROPER_IDEAL", "SIZE_EXCEEDED", "NON_HOMOGENEOUS_GENERATOR",
                                          "UNKNOWN_CHECK", "GROUP_MISMATCH") else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
