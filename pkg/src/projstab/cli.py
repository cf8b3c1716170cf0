"""Command-line front end.

Subcommands:

    analyze <file> [--json] [--probe-primes LIST] [--seed N]
    limit <file> --c a0,...,an --b b0,...,bn
    decompose <file> [--all-blocks] [--seed N]
    verify --n N --m M --coeffs LIST [--sample K] [--seed N] [--override-budget]
    figure <file> --out PATH

Reports go to standard out (canonical JSON except for analyze's default
text view); diagnostics go to standard error.  Exit codes: 0 success,
1 parse/usage error, 2 not a morphism, 3 indeterminate resultant,
5 verification-law failures.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import documents, figures, verify as verify_mod
from .decompose import decompose_fully, splitting_types_all_blocks
from .errors import (BadPrime, BudgetExceeded, DimensionMismatch,
                     IndeterminateResultant, NotAMorphism, ParseError,
                     ProjstabError, WrongDimension)
from .resultant import DEFAULT_PROBE_PRIMES, ff_zero_probe
from .stability import classify, limit_map
from .weights import OnePS

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_NOT_MORPHISM = 2
EXIT_INDETERMINATE = 3
EXIT_LAW_FAILURES = 5


def _int_list(text: str, flag: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise ParseError(f"{flag}: expected a comma-separated integer list, "
                         f"got {text!r}") from None


def _render_text(report_dict: dict) -> str:
    lines = [
        f"classification: {report_dict['classification']}",
        f"is_morphism: {report_dict['is_morphism']}",
        f"resultant: {report_dict['resultant']}",
        f"torus_rank: {report_dict['torus_rank']}"
        + ("" if report_dict["m_gt_n_plus_1"]
           else "  (warning: m <= n+1, unipotent stabilizers not excluded)"),
    ]
    for entry in report_dict["blocks"]:
        bl, sub, lim = entry["block"], entry["subgroup"], entry["limit"]
        lines.append(
            f"block V'={bl['variables']} H'={bl['components']} "
            f"[{bl['certified_by']}]  c={sub['c']} b={sub['b']}  "
            f"K={lim['K']} dropped={lim['dropped_terms']} "
            f"limit_is_morphism={lim['limit_is_morphism']}")
    for ob in report_dict["obstructions"]:
        lines.append(f"obstruction: variables {ob['variables']} carry "
                     f"components {ob['components']} (cannot be a morphism)")
    if "probes" in report_dict:
        for pr in report_dict["probes"]:
            lines.append(f"probe p={pr['prime']}: "
                         f"{len(pr['zeros_found'])} common zero(s)")
    lines.append(f"note: {report_dict['coordinate_note']}")
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    f = documents.load_map_file(args.file)
    start = time.monotonic()
    try:
        report = classify(f, seed=args.seed)
    except IndeterminateResultant as exc:
        print(f"indeterminate resultant after {exc.retries} retries "
              f"(seed {exc.seed})", file=sys.stderr)
        return EXIT_INDETERMINATE
    out = documents.classification_to_dict(report)
    if args.probe_primes:
        primes = (list(DEFAULT_PROBE_PRIMES) if args.probe_primes == "default"
                  else _int_list(args.probe_primes, "--probe-primes"))
        probes = []
        for p in primes:
            pr = ff_zero_probe(f, p)
            probes.append({"prime": pr.prime,
                           "zeros_found": [list(z) for z in pr.zeros_found]})
        out["probes"] = probes
    out["seed"] = args.seed
    out["timing"] = {"elapsed_seconds": round(time.monotonic() - start, 3)}
    if args.json:
        sys.stdout.write(documents.dumps_canonical(out))
    else:
        print(_render_text(out))
    return EXIT_OK if report.is_morphism else EXIT_NOT_MORPHISM


def cmd_limit(args) -> int:
    f = documents.load_map_file(args.file)
    c = _int_list(args.c, "--c")
    b = _int_list(args.b, "--b")
    if len(c) != f.num_vars or len(b) != f.num_vars:
        raise DimensionMismatch(
            f"weight vectors need {f.num_vars} entries, got {len(c)} and {len(b)}")
    result = limit_map(f, OnePS(tuple(c), tuple(b)))
    sys.stdout.write(documents.dumps_canonical(documents.limit_to_dict(result)))
    return EXIT_OK


def cmd_decompose(args) -> int:
    f = documents.load_map_file(args.file)
    try:
        tree = decompose_fully(f)
    except NotAMorphism:
        print("input is not a morphism; nothing to decompose", file=sys.stderr)
        return EXIT_NOT_MORPHISM
    except IndeterminateResultant as exc:
        print(f"indeterminate resultant after {exc.retries} retries",
              file=sys.stderr)
        return EXIT_INDETERMINATE
    out = {
        "tree": documents.tree_to_dict(tree),
        "splitting_type": list(tree.splitting_type()),
    }
    if args.all_blocks:
        out["all_block_splitting_types"] = sorted(
            list(t) for t in splitting_types_all_blocks(f, check_input=False))
    sys.stdout.write(documents.dumps_canonical(out))
    return EXIT_OK


def cmd_verify(args) -> int:
    coeffs = []
    for part in args.coeffs.split(","):
        part = part.strip()
        if part:
            from fractions import Fraction
            coeffs.append(Fraction(part))
    report = verify_mod.run_verification_suite(
        args.n, args.m, coeffs, sample=args.sample, seed=args.seed,
        override_budget=args.override_budget)
    sys.stdout.write(documents.dumps_canonical(report.to_dict()))
    if report.zero_failures:
        print(f"verify: {report.morphisms} morphisms out of "
              f"{report.maps_checked} maps, zero failures", file=sys.stderr)
        return EXIT_OK
    print(f"verify: {len(report.failures)} law failure(s)", file=sys.stderr)
    return EXIT_LAW_FAILURES


def cmd_figure(args) -> int:
    f = documents.load_map_file(args.file)
    data = figures.build_figure_data(f)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(documents.dumps_canonical(data))
    print(f"figure data written to {args.out}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="projstab",
        description="Exact stability analysis of homogeneous polynomial "
                    "tuples defining projective self-maps")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="classify one map document")
    p.add_argument("file")
    p.add_argument("--json", action="store_true",
                   help="emit the full canonical JSON report")
    p.add_argument("--probe-primes", default="",
                   help="comma list of primes for the finite-field zero probe "
                        "('default' = 101,103,107)")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("limit", help="limit map under a diagonal subgroup")
    p.add_argument("file")
    p.add_argument("--c", required=True, help="source weights, comma list")
    p.add_argument("--b", required=True, help="target weights, comma list")
    p.set_defaults(func=cmd_limit)

    p = sub.add_parser("decompose", help="recursive block splitting")
    p.add_argument("file")
    p.add_argument("--all-blocks", action="store_true",
                   help="also report splitting types over every block choice")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="law-verification suite over a box")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--coeffs", required=True,
                   help="comma list of rational coefficients, e.g. -1,0,1")
    p.add_argument("--sample", type=int, default=None,
                   help="seeded sample size instead of exhaustive enumeration")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--override-budget", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("figure", help="lattice figure data (n = 2)")
    p.add_argument("file")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_figure)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (DimensionMismatch, WrongDimension, BadPrime,
            BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except IndeterminateResultant as exc:
        print(f"indeterminate resultant: {exc}", file=sys.stderr)
        return EXIT_INDETERMINATE
    except ProjstabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
