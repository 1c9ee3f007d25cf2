"""Command line interface: ``cubicpoisson {analyze,classify,batch,normal-forms}``.

Exit codes: 0 success, 2 usage, 3 parse failure, 4 precondition failure,
5 internal inconsistency, 6 corpus file not found, 7 malformed corpus.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Sequence

from . import __version__
from .curves import NORMAL_FORMS, CurveType, classify_from_data, singular_data
from .errors import CubicPoissonError, DegreeMismatchError, InternalInconsistencyError, ParseError, PreconditionError
from .parser import parse
from .report import analyze, modes_from_flag, singular_payload

EXIT_OK = 0
EXIT_PARSE = 3
EXIT_PRECONDITION = 4
EXIT_INTERNAL = 5
EXIT_NO_CORPUS = 6
EXIT_BAD_CORPUS = 7

HEADER = f"# cubicpoisson {__version__}"


class CorpusError(CubicPoissonError):
    def __init__(self, message: str, exit_code: int):
        super().__init__(message)
        self.exit_code = exit_code


def error_kind(exc: BaseException) -> str:
    if isinstance(exc, ParseError):
        return "parse"
    if isinstance(exc, (PreconditionError, DegreeMismatchError)):
        return "precondition"
    return "internal"


_EXIT_BY_KIND = {"parse": EXIT_PARSE, "precondition": EXIT_PRECONDITION, "internal": EXIT_INTERNAL}


def dumps(payload) -> str:
    return json.dumps(payload, ensure_ascii=False, separators=(",", ":"))


def read_corpus(path: str | Path) -> list[tuple[str, str]]:
    """Records ``(id, f)`` from a JSON-lines corpus; blank lines are skipped."""
    p = Path(path)
    if not p.is_file():
        raise CorpusError(f"corpus file not found: {p}", EXIT_NO_CORPUS)
    records = []
    for lineno, line in enumerate(p.read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip():
            continue
        try:
            rec = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CorpusError(f"{p}:{lineno}: invalid JSON ({exc.msg})", EXIT_BAD_CORPUS) from None
        if not (isinstance(rec, dict) and isinstance(rec.get("id"), str) and isinstance(rec.get("f"), str)):
            raise CorpusError(f'{p}:{lineno}: expected an object with string fields "id" and "f"', EXIT_BAD_CORPUS)
        records.append((rec["id"], rec["f"]))
    return records


def analyze_record(record: tuple[str, str], mode_flag: str = "both") -> tuple[dict, str]:
    """JSON payload and text rendering for one corpus entry; bad input yields an error record."""
    rid, text = record
    try:
        report = analyze(parse(text, 3), modes_from_flag(mode_flag))
    except CubicPoissonError as exc:
        err = {"kind": error_kind(exc), "message": str(exc)}
        return {"id": rid, "error": err}, f"error ({err['kind']}): {err['message']}"
    return {"id": rid, **report.to_dict()}, report.to_text()


def run_batch(records: Sequence[tuple[str, str]], mode_flag: str = "both", jobs: int = 1) -> list[tuple[dict, str]]:
    if jobs > 1 and len(records) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(analyze_record, records, [mode_flag] * len(records)))
    return [analyze_record(r, mode_flag) for r in records]


def _cmd_analyze(args) -> int:
    report = analyze(parse(args.expr, 3), modes_from_flag(args.mode))
    if args.format == "json":
        print(json.dumps(report.to_dict(), ensure_ascii=False, indent=2))
    else:
        print(HEADER)
        print(report.to_text())
    return EXIT_OK


def _cmd_classify(args) -> int:
    f = parse(args.expr, 3)
    data = singular_data(f)
    kind = classify_from_data(f, data)
    if args.format == "json":
        payload = {"input": f.render(), "curve_type": kind.value, "index": kind.index,
                   "singular_data": singular_payload(data)}
        print(json.dumps(payload, ensure_ascii=False, indent=2))
    else:
        print(kind.value)
        print(f"reduced: {'yes' if data.reduced else 'no'}")
        print(f"repeated factor degree: {data.repeated_factor_degree}")
        print(f"singular points over the closure: {data.singular_count_over_closure}")
        if data.reduced:
            print(f"Tjurina numbers: {list(data.tjurina_numbers)}")
        for p in data.rational_singular_points:
            coords = ":".join(str(x) for x in p.coordinates)
            print(f"rational singular point [{coords}]: multiplicity {p.multiplicity}, "
                  f"{p.tangent_directions} tangent line(s), Tjurina {p.tjurina}")
    return EXIT_OK


def _cmd_batch(args) -> int:
    records = read_corpus(args.corpus)
    results = run_batch(records, args.mode, args.jobs)
    if args.format == "text":
        print(HEADER)
    for payload, text in results:
        if args.format == "json":
            print(dumps(payload))
        else:
            print(f"== {payload['id']}")
            print(text)
    return EXIT_OK


def _cmd_normal_forms(args) -> int:
    if args.format == "json":
        payload = [{"index": t.index, "curve_type": t.value, "f": NORMAL_FORMS[t]} for t in CurveType]
        print(json.dumps(payload, indent=2))
    else:
        for t in CurveType:
            print(f"{t.index}\t{t.value}\t{NORMAL_FORMS[t]}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubicpoisson",
        description="Automorphism algebras of Poisson cubics on CP^2 and the reductivity obstruction.",
    )
    parser.add_argument("--version", action="version", version=f"cubicpoisson {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    def add_mode(p):
        p.add_argument("--mode", choices=("strict", "divisor", "both"), default="both")

    p = sub.add_parser("analyze", help="full report for one cubic")
    p.add_argument("expr", help='cubic in z0, z1, z2, e.g. "z0*z1*(z0+z1)"')
    add_mode(p)
    add_format(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("classify", help="projective type of one cubic")
    p.add_argument("expr")
    add_format(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("batch", help="analyze every record of a JSON-lines corpus")
    p.add_argument("--corpus", required=True, help='file with one {"id": ..., "f": ...} object per line')
    p.add_argument("--jobs", type=int, default=1, help="worker processes (output order is preserved)")
    add_mode(p)
    add_format(p)
    p.set_defaults(func=_cmd_batch)

    p = sub.add_parser("normal-forms", help="list the nine representative cubics")
    add_format(p)
    p.set_defaults(func=_cmd_normal_forms)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CorpusError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except InternalInconsistencyError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except CubicPoissonError as exc:
        kind = error_kind(exc)
        print(f"{kind} error: {exc}", file=sys.stderr)
        return _EXIT_BY_KIND[kind]


if __name__ == "__main__":
    sys.exit(main())
