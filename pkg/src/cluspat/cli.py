"""Command-line front end.

Seed definition files go in, explorations and verification reports come
out.  Exit codes: 0 success or pass, 1 property violation (report still
written), 2 input error, 3 Laurent-phenomenon violation during mutation.

Output is deterministic: identical inputs give byte-identical output.
``GLP_THREADS`` optionally caps the worker pool used by the pairwise
positivity scan; nothing else is read from the environment.
"""

import argparse
import json
import os
import sys

from . import verify as checks
from .errors import ClusterEngineError, LaurentViolationError, \
    NotPointedError, SeedFileError
from .pattern import ExpansionTable, ExploreBudget, check_word, explore
from .seed import ExchangeMatrix, Seed, format_word

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_LAURENT = 3

_PROPERTIES = ("positive", "d-positive", "proper-laurent", "lin-indep",
               "g-injective", "g-unimodular", "g-composition")


def _strict_int(value, where):
    if isinstance(value, bool) or not isinstance(value, int):
        raise SeedFileError(f"{where} must be an integer, got {value!r}")
    return value


def load_seed_file(path):
    """Parse and validate a JSON seed file into a root seed."""
    try:
        with open(path, encoding="utf-8") as fp:
            data = json.load(fp)
    except OSError as exc:
        raise SeedFileError(f"cannot read seed file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SeedFileError(f"seed file is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise SeedFileError("seed file must be a JSON object")
    unknown = set(data) - {"n", "m", "B", "Y", "x_names", "y_names"}
    if unknown:
        raise SeedFileError(f"unknown seed file fields: {sorted(unknown)}")

    n = _strict_int(data.get("n"), "n")
    rows = data.get("B")
    if not isinstance(rows, list) or len(rows) != n or any(
            not isinstance(r, list) or len(r) != n for r in rows):
        raise SeedFileError(f"B must be an {n}x{n} array of integers")
    entries = [[_strict_int(v, "B entry") for v in row] for row in rows]

    coeffs = data.get("Y")
    if coeffs == "principal":
        if "m" in data and _strict_int(data["m"], "m") != n:
            raise SeedFileError("principal coefficients force m = n")
        matrix = ExchangeMatrix.from_rows(entries)
        seed = Seed.principal(matrix)
    else:
        m = _strict_int(data.get("m"), "m")
        if not isinstance(coeffs, list) or len(coeffs) != n or any(
                not isinstance(y, list) or len(y) != m for y in coeffs):
            raise SeedFileError(
                f"Y must be 'principal' or {n} exponent vectors of length {m}")
        coeffs = [tuple(_strict_int(e, "Y exponent") for e in y)
                  for y in coeffs]
        matrix = ExchangeMatrix.from_rows(entries)
        seed = Seed.root(matrix, coeffs)

    for field, count in (("x_names", seed.n), ("y_names", seed.m)):
        names = data.get(field)
        if names is not None and (
                not isinstance(names, list) or len(names) != count
                or any(not isinstance(v, str) for v in names)):
            raise SeedFileError(f"{field} must be {count} strings")
    return seed


def parse_cli_word(text, n):
    """Comma-separated 1-based directions; '-' or '' is the root."""
    if text in ("", "-"):
        return ()
    try:
        word = tuple(int(tok) - 1 for tok in text.split(","))
    except ValueError as exc:
        raise SeedFileError(f"malformed word {text!r}") from exc
    return check_word(word, n)


def _budget(args):
    return ExploreBudget(max_depth=args.depth, max_vertices=args.max_vertices)


def _print_matrix(kind, matrix, out):
    out.write(f"{kind}\tat={format_word(matrix.at)}\t"
              f"ref={format_word(matrix.ref)}\n")
    for row in matrix.entries:
        out.write("\t".join(str(v) for v in row) + "\n")


def _emit_report(report, args, out):
    if getattr(args, "report", None):
        with open(args.report, "w", encoding="utf-8") as fp:
            fp.write("\n".join(report.tsv_lines()) + "\n")
    out.write(json.dumps(report.json_summary(), sort_keys=True) + "\n")
    return EXIT_OK if report.passed else EXIT_VIOLATION


def _workers():
    raw = os.environ.get("GLP_THREADS", "")
    if not raw:
        return 1
    try:
        workers = int(raw)
    except ValueError as exc:
        raise SeedFileError(f"GLP_THREADS must be an integer: {raw!r}") from exc
    return max(workers, 1)


def cmd_check(args, out):
    seed = load_seed_file(args.seed)
    names = seed.matrix.symmetrizer
    out.write(f"rank {seed.n}\n")
    out.write(f"generators {seed.m}\n")
    out.write("symmetrizer " + ",".join(str(d) for d in names) + "\n")
    out.write(f"acyclic {'true' if seed.matrix.is_acyclic() else 'false'}\n")
    return EXIT_OK


def cmd_mutate(args, out):
    seed = load_seed_file(args.seed)
    word = parse_cli_word(args.word, seed.n)
    for k in word:
        seed = seed.mutate(k)
    out.write(seed.text_dump() + "\n")
    return EXIT_OK


def cmd_explore(args, out):
    seed = load_seed_file(args.seed)
    pattern = explore(seed, _budget(args))
    if args.dump:
        with open(args.dump, "w", encoding="utf-8") as fp:
            fp.write("\n".join(pattern.dump_lines()) + "\n")
    if args.table:
        with open(args.table, "w", encoding="utf-8") as fp:
            pattern.to_expansion_table().write(fp)
    out.write(json.dumps(pattern.finite_type_report(), sort_keys=True) + "\n")
    return EXIT_OK


def cmd_dvec(args, out):
    seed = load_seed_file(args.seed)
    pattern = explore(seed, _budget(args))
    at = parse_cli_word(args.at, seed.n)
    ref = parse_cli_word(args.ref, seed.n)
    _print_matrix("D", pattern.d_matrix(at, ref), out)
    return EXIT_OK


def cmd_gvec(args, out):
    seed = load_seed_file(args.seed)
    pattern = explore(seed, _budget(args))
    at = parse_cli_word(args.at, seed.n)
    ref = parse_cli_word(args.ref, seed.n)
    try:
        matrix = pattern.g_matrix(at, ref)
    except NotPointedError as exc:
        out.write(f"not-pointed\t{exc}\n")
        return EXIT_VIOLATION
    _print_matrix("G", matrix, out)
    return EXIT_OK


def cmd_verify(args, out):
    if args.table:
        if args.property != "positive":
            raise SeedFileError(
                "expansion tables only support the positive check")
        with open(args.table, encoding="utf-8") as fp:
            table = ExpansionTable.read(fp)
        return _emit_report(checks.check_positive(table), args, out)

    seed = load_seed_file(args.seed)
    pattern = explore(seed, _budget(args))
    ref = parse_cli_word(args.ref, seed.n)
    pattern.seed_at(ref)

    try:
        report = _dispatch_verify(args, pattern, ref)
    except NotPointedError as exc:
        report = checks.VerificationReport(
            args.property, {"ref": format_word(ref)}, False,
            [checks.Witness(word=format_word(exc.word or ()),
                            subject="pointedness hypothesis",
                            detail=str(exc))],
            {"checked": 0})
    return _emit_report(report, args, out)


def _dispatch_verify(args, pattern, ref):
    if args.property == "positive":
        if args.all_pairs:
            pairs = [(t, r) for t in pattern.words() for r in pattern.words()]
        else:
            pairs = [(t, ref) for t in pattern.words()]
        report = checks.check_positive(pattern, pairs, workers=_workers())
    elif args.property == "d-positive":
        refs = pattern.words() if args.all_pairs else [ref]
        report = checks.check_d_positive(pattern, refs=refs)
    elif args.property == "proper-laurent":
        monomials = pattern.monomials_up_to_degree(args.degree)
        report = checks.check_proper_laurent(pattern, ref, monomials)
    elif args.property == "lin-indep":
        monomials = pattern.monomials_up_to_degree(args.degree)
        report = checks.check_linear_independence(pattern, ref, monomials)
    elif args.property == "g-injective":
        monomials = pattern.monomials_up_to_degree(args.degree)
        report = checks.check_g_injective(pattern, ref, monomials)
    elif args.property == "g-unimodular":
        report = checks.check_g_unimodular(pattern, ref)
    else:  # g-composition over all explored ordered pairs
        witnesses = []
        count = 0
        for t in pattern.words():
            for t2 in pattern.words():
                count += 1
                step = checks.check_g_composition(pattern, ref, t, t2)
                witnesses.extend(step.witnesses)
        report = checks.VerificationReport(
            "g-composition", {"ref": format_word(ref), "pairs": count},
            not witnesses, witnesses, {"checked": count})
    return report


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cluspat",
        description="exact engine for cluster patterns of geometric type")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, seed=True):
        if seed:
            p.add_argument("seed", help="JSON seed definition file")
        p.add_argument("--depth", type=int, default=8,
                       help="exploration depth budget (default 8)")
        p.add_argument("--max-vertices", type=int, default=20000,
                       help="exploration vertex budget (default 20000)")

    p = sub.add_parser("check", help="validate a seed file")
    p.add_argument("seed")
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("mutate", help="mutate along a word and print the seed")
    p.add_argument("seed")
    p.add_argument("--word", required=True,
                   help="comma-separated 1-based directions")
    p.set_defaults(run=cmd_mutate)

    p = sub.add_parser("explore", help="explore and report closure")
    add_common(p)
    p.add_argument("--dump", help="write the pattern dump TSV here")
    p.add_argument("--table", help="write the expansion table here")
    p.set_defaults(run=cmd_explore)

    p = sub.add_parser("dvec", help="denominator vectors of a cluster")
    add_common(p)
    p.add_argument("--at", required=True)
    p.add_argument("--ref", default="-")
    p.set_defaults(run=cmd_dvec)

    p = sub.add_parser("gvec", help="g-vectors of a cluster")
    add_common(p)
    p.add_argument("--at", required=True)
    p.add_argument("--ref", default="-")
    p.set_defaults(run=cmd_gvec)

    p = sub.add_parser("verify", help="run a property check")
    p.add_argument("property", choices=_PROPERTIES)
    p.add_argument("seed", nargs="?",
                   help="JSON seed definition file (omit with --table)")
    p.add_argument("--depth", type=int, default=8)
    p.add_argument("--max-vertices", type=int, default=20000)
    p.add_argument("--ref", default="-",
                   help="reference vertex word (default root)")
    p.add_argument("--degree", type=int, default=2,
                   help="monomial degree bound where applicable")
    p.add_argument("--all-pairs", action="store_true",
                   help="quantify over all explored reference vertices")
    p.add_argument("--table", help="check an expansion table file instead")
    p.add_argument("--report", help="write the TSV report here")
    p.set_defaults(run=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and not args.table and not args.seed:
        parser.error("verify needs a seed file or --table")
    try:
        return args.run(args, sys.stdout)
    except LaurentViolationError as exc:
        print(f"laurent-violation: {exc}", file=sys.stderr)
        return EXIT_LAURENT
    except ClusterEngineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
