"""Command-line driver: inspect, check, classify, enumerate, and verify."""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from .core import (
    NumericalSemigroup,
    SemigroupError,
    format_gap_line,
    parse_gap_line,
)
from .enumeration import (
    CensusRow,
    EnumerationRequest,
    census,
    enumerate_genus,
    enumerate_kappa_sparse,
)
from .ideals import is_arf_double
from .kappa import (
    classify,
    is_kappa_sparse,
    is_pure_kappa_sparse,
    sparseness_report,
)
from .leaps import is_hyperelliptic, is_sparse, leap_profile, leap_set
from .verify import run_checks

CENSUS_COLUMNS = ("genus", "total", "arf", "sparse", "kappa_sparse", "pure_kappa_sparse")


def _profile_json(profile) -> dict[str, int]:
    return {str(jump): count for jump, count in profile.counts}


def _load_inputs(args: argparse.Namespace) -> list[NumericalSemigroup]:
    """Resolve the single input source to a list of semigroups."""
    if args.gaps is not None:
        try:
            return [parse_gap_line(args.gaps)]
        except SemigroupError as exc:
            raise SemigroupError(f"--gaps {args.gaps!r}: {exc}") from None
    if args.generators is not None:
        try:
            values = [int(token) for token in args.generators.split(",")] if args.generators.strip() else []
            return [NumericalSemigroup.from_generators(values)]
        except (ValueError, SemigroupError) as exc:
            raise SemigroupError(f"--generators {args.generators!r}: {exc}") from None
    out = []
    try:
        with open(args.file, encoding="utf-8") as handle:
            lines = handle.read().splitlines()
    except OSError as exc:
        raise SemigroupError(f"--file {args.file}: {exc}") from None
    for number, line in enumerate(lines, start=1):
        try:
            out.append(parse_gap_line(line))
        except SemigroupError as exc:
            raise SemigroupError(f"--file {args.file} line {number}: {exc}") from None
    return out


def _add_input_options(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--gaps", help="comma-separated increasing gaps ('' for the full naturals)")
    group.add_argument("--generators", help="comma-separated generators with gcd 1")
    group.add_argument("--file", help="gap-list text file, one semigroup per line")


def _cmd_info(args: argparse.Namespace) -> int:
    for semigroup in _load_inputs(args):
        print(json.dumps(semigroup.describe()))
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    if args.arf:
        name, predicate = "arf", is_arf_double
    elif args.sparse:
        name, predicate = "sparse", is_sparse
    elif args.hyperelliptic:
        name, predicate = "hyperelliptic", is_hyperelliptic
    elif args.kappa is not None:
        name, predicate = "kappa_sparse", lambda s: is_kappa_sparse(s, args.kappa)
    else:
        name, predicate = "pure_kappa_sparse", lambda s: is_pure_kappa_sparse(s, args.pure)
    kappa = args.kappa if args.kappa is not None else args.pure
    all_hold = True
    for semigroup in _load_inputs(args):
        result = predicate(semigroup)
        all_hold = all_hold and result
        record = {"predicate": name, "gaps": list(semigroup.gaps), "result": result}
        if kappa is not None:
            record["kappa"] = kappa
        print(json.dumps(record))
    return 0 if all_hold else 1


def _cmd_leaps(args: argparse.Namespace) -> int:
    for semigroup in _load_inputs(args):
        print(json.dumps(_profile_json(leap_profile(semigroup))))
        for leap in leap_set(semigroup):
            print(f"{leap.lo}\t{leap.hi}")
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    for semigroup in _load_inputs(args):
        result = classify(semigroup)
        report = sparseness_report(semigroup, result.sparseness_index)
        record = {
            "gaps": list(semigroup.gaps),
            "genus": result.genus,
            "conductor": result.conductor,
            "frobenius": result.frobenius,
            "multiplicity": result.multiplicity,
            "hyperelliptic": result.hyperelliptic,
            "arf": result.arf,
            "sparse": result.sparse,
            "sparseness_index": result.sparseness_index,
            "figure_class": result.figure_class,
            "profile": _profile_json(result.profile),
            "pure_witness": list(report.pure_witness) if report.pure_witness else None,
            "checks": report.checks_dict(),
        }
        print(json.dumps(record))
    return 0


def _census_rows_json(rows: list[CensusRow], with_profiles: bool) -> list[dict]:
    out = []
    for row in rows:
        record = {"genus": row.genus, "total": row.total, **row.per_class}
        if with_profiles:
            record["profiles"] = [
                {"profile": _profile_json(profile), "count": count}
                for profile, count in sorted(
                    row.profile_histogram.items(), key=lambda kv: kv[0].counts
                )
            ]
        out.append(record)
    return out


def _cmd_enumerate(args: argparse.Namespace) -> int:
    if args.pure and args.kappa is None:
        raise SemigroupError("--pure requires --kappa")
    if args.arf and (args.kappa is not None or args.pure):
        raise SemigroupError("--arf cannot be combined with --kappa/--pure")

    if args.census:
        mode = "all"
        if args.arf:
            mode = "arf"
        elif args.pure:
            mode = "pure_kappa_sparse"
        elif args.kappa is not None:
            mode = "kappa_sparse"
        request = EnumerationRequest(
            max_genus=args.genus,
            kappa_filter=args.kappa,
            mode=mode,
            emit="count_only" if args.count_only else "full",
            cap=args.cap,
        )
        rows = census(request)
        if args.format == "tsv":
            print("\t".join(CENSUS_COLUMNS))
            for row in rows:
                cells = [row.genus, row.total] + [row.per_class[c] for c in CENSUS_COLUMNS[2:]]
                print("\t".join(str(cell) for cell in cells))
        else:
            print(json.dumps(_census_rows_json(rows, with_profiles=request.emit == "full")))
        return 0

    if args.kappa is not None:
        stream = enumerate_kappa_sparse(args.genus, args.kappa, cap=args.cap)
        if args.pure:
            stream = (s for s in stream if is_pure_kappa_sparse(s, args.kappa))
    else:
        stream = enumerate_genus(args.genus, cap=args.cap)
        if args.arf:
            stream = (s for s in stream if is_arf_double(s))

    if args.count_only:
        print(sum(1 for _ in stream))
        return 0
    for semigroup in stream:
        if args.format == "tsv":
            # gap-list text format, so the output feeds straight back into --file
            print(format_gap_line(semigroup))
        else:
            print(json.dumps({"gaps": list(semigroup.gaps)}))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    results = run_checks(args.max_genus)
    failed = 0
    for result in results:
        if result.passed:
            print(f"PASS {result.name} ({result.instances} instances)")
        else:
            failed += 1
            print(f"FAIL {result.name}: {result.counterexample}")
    verdict = "all passed" if failed == 0 else f"{failed} failed"
    print(f"checked {len(results)} invariant families over genus <= {args.max_genus}: {verdict}")
    return 0 if failed == 0 else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sparsegroup",
        description="Numerical semigroup toolkit: gap and leap statistics, "
        "class checks, classification, and exhaustive enumeration by genus.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_info = sub.add_parser("info", help="derived quantities as a JSON object")
    _add_input_options(p_info)
    p_info.set_defaults(handler=_cmd_info)

    p_check = sub.add_parser("check", help="decide one class predicate (exit 0 iff it holds)")
    _add_input_options(p_check)
    predicate = p_check.add_mutually_exclusive_group(required=True)
    predicate.add_argument("--arf", action="store_true", help="Arf property")
    predicate.add_argument("--sparse", action="store_true", help="gap jumps at most 2")
    predicate.add_argument("--hyperelliptic", action="store_true", help="2 is a member")
    predicate.add_argument("--kappa", type=int, metavar="K", help="gap jumps at most K")
    predicate.add_argument("--pure", type=int, metavar="K", help="pure K-sparse membership")
    p_check.set_defaults(handler=_cmd_check)

    p_leaps = sub.add_parser("leaps", help="leap profile as JSON plus leap pairs as TSV")
    _add_input_options(p_leaps)
    p_leaps.set_defaults(handler=_cmd_leaps)

    p_classify = sub.add_parser("classify", help="full classification report as JSON")
    _add_input_options(p_classify)
    p_classify.set_defaults(handler=_cmd_classify)

    p_enum = sub.add_parser("enumerate", help="list or count semigroups of a given genus")
    p_enum.add_argument("--genus", type=int, required=True, metavar="G")
    p_enum.add_argument("--kappa", type=int, metavar="K", help="restrict to the K-sparse class")
    p_enum.add_argument("--pure", action="store_true", help="restrict to the pure part (needs --kappa)")
    p_enum.add_argument("--arf", action="store_true", help="restrict to Arf members")
    p_enum.add_argument("--count-only", action="store_true", help="emit counts instead of members")
    p_enum.add_argument("--census", action="store_true", help="tabulate genus levels 0..G")
    p_enum.add_argument("--format", choices=("json", "tsv"), default="json")
    p_enum.add_argument("--cap", type=int, default=None, help="override the genus cap")
    p_enum.set_defaults(handler=_cmd_enumerate)

    p_verify = sub.add_parser("verify", help="run every invariant family over a census")
    p_verify.add_argument("--max-genus", type=int, default=8, metavar="G")
    p_verify.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as exc:  # covers SemigroupError and bad numeric arguments
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
