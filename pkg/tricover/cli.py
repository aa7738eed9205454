import argparse
import json
import logging
import sys

from collections.abc import Sequence
from fractions import Fraction

from tricover.config import DEFAULT_SAMPLE_DENOMINATOR
from tricover.constructions import generate
from tricover.core import (
    ConsistencyError,
    CoverageVerifier,
    DocumentError,
    GeometryError,
    InadmissibleParameterError,
    InputError,
    UnsupportedError,
    Variant,
    bound_decision,
    bound_profile,
    projection_check,
)
from tricover.core.projection import BoundVerdict, ProjectionVerdict
from tricover.interchange import SvgRenderer, document_for, pieces_table, read_document, trace_table, write_document
from tricover.interchange.documents import parse_rat


EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

USAGE_ERRORS = (InadmissibleParameterError, UnsupportedError, DocumentError, InputError, GeometryError)

logger = logging.getLogger("tricover.cli")


def rational_arg(text: str) -> Fraction:
    try:
        return parse_rat(text)
    except DocumentError as e:
        raise argparse.ArgumentTypeError(f"expected p/q, got {text!r}") from e


def cmd_generate(args: argparse.Namespace) -> int:
    covering = generate(args.construction, args.n, args.eps, force=args.force)
    document = document_for(covering, construction=args.construction, n=args.n, eps=args.eps)
    if args.out:
        write_document(document, args.out)
        print(f"{covering.label}: {len(covering.pieces)} pieces written to {args.out}")
    else:
        print(document.to_json())
    return EXIT_OK


def sample_outcome(covered: bool, sample_point: tuple | None) -> str:
    if sample_point is not None:
        return "confirms-uncovered"
    return "consistent" if covered else "inconclusive"


def cmd_verify(args: argparse.Namespace) -> int:
    covering = read_document(args.input).covering
    verifier = CoverageVerifier()
    report = verifier.verify(covering)

    sample_point = outcome = None
    if args.sample is not None:
        sample_point = verifier.sample_falsify(covering, args.sample)
        if report.covered and sample_point is not None:
            raise ConsistencyError(f"Exact verifier accepted but ({sample_point[0]}, {sample_point[1]}) is uncovered")
        outcome = sample_outcome(report.covered, sample_point)

    if args.json:
        data = report.to_dict()
        if args.sample is not None:
            data["sample"] = {
                "denominator": args.sample,
                "uncovered_point": None if sample_point is None else [str(c) for c in sample_point],
                "outcome": outcome,
            }
        print(json.dumps(data, indent=2))
    else:
        status = "covered" if report.covered else "NOT covered"
        print(f"{covering.label or args.input}: {status} ({report.slab_count} slabs)")
        if args.witness and report.witness is not None:
            w = report.witness
            print(f"witness: line y = {w.y}, uncovered x in ({w.x_lo}, {w.x_hi}), point {w.point[0]}, {w.point[1]}")
        if args.sample is not None:
            found = "none" if sample_point is None else f"({sample_point[0]}, {sample_point[1]})"
            print(f"sample falsifier (d={args.sample}): uncovered point {found} ({outcome})")
    return EXIT_OK if report.covered else EXIT_FAILED


def cmd_bound(args: argparse.Namespace) -> int:
    report = bound_decision(args.n, args.extra, args.eps)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(f"n={report.n} extra={report.extra} eps={report.eps}: {report.verdict} (threshold {report.threshold})")
        for step in report.trace:
            mark = "ok" if step.holds else "--"
            print(f"  [{mark}] {step.name}: {step.detail}")
        if report.verdict == BoundVerdict.WITHIN_BOUND:
            print(f"witness construction: {report.witness_construction}")
    if args.table:
        print(trace_table(report).to_string(index=False))
        print(pieces_table(bound_profile(args.n, args.eps)).to_string(index=False))
    return EXIT_OK


def cmd_project(args: argparse.Namespace) -> int:
    report = projection_check(read_document(args.input).covering)
    print(json.dumps(report.to_dict(), indent=2))
    if args.table:
        print(pieces_table(report.g).to_string(index=False))
    return EXIT_FAILED if report.verdict == ProjectionVerdict.REFUTED else EXIT_OK


def cmd_render(args: argparse.Namespace) -> int:
    covering = read_document(args.input).covering
    SvgRenderer().to_file(covering, args.svg)
    print(f"{covering.label or args.input}: SVG written to {args.svg}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tricover", description="Exact coverings of triangles by unit H-triangles")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress at INFO level to stderr")
    subparsers = parser.add_subparsers(dest="command", required=True)

    p = subparsers.add_parser("generate", help="write a covering document for one construction")
    p.add_argument("--construction", required=True, choices=[v.value for v in Variant])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--eps", type=rational_arg, default=Fraction(0), help="exact rational such as 1/5")
    p.add_argument("--force", action="store_true", help="skip the admissibility bound on eps")
    p.add_argument("--out", help="output path; stdout when omitted")
    p.set_defaults(handler=cmd_generate)

    p = subparsers.add_parser("verify", help="decide exactly whether a covering document covers its target")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--witness", action="store_true", help="print the uncovered line and interval")
    p.add_argument("--sample", type=int, nargs="?", const=DEFAULT_SAMPLE_DENOMINATOR, default=None, metavar="D")
    p.add_argument("--json", action="store_true", help="print the machine-readable report")
    p.set_defaults(handler=cmd_verify)

    p = subparsers.add_parser("bound", help="decide whether n^2 + extra unit triangles can cover side n + eps")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--extra", type=int, required=True)
    p.add_argument("--eps", type=rational_arg, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--table", action="store_true", help="also print the trace and g = f_T - r as tables")
    p.set_defaults(handler=cmd_bound)

    p = subparsers.add_parser("project", help="run the projection necessary condition on a document")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--table", action="store_true", help="also print the pieces of g as a table")
    p.set_defaults(handler=cmd_project)

    p = subparsers.add_parser("render", help="draw a covering document as SVG")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--svg", required=True)
    p.set_defaults(handler=cmd_render)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.verbose:
        logging.getLogger().setLevel(logging.INFO)

    try:
        return args.handler(args)
    except InadmissibleParameterError as e:
        logger.error(f"Inadmissible parameters: {e}")
        print(f"error: {e} (bound {e.bound})", file=sys.stderr)
        return EXIT_USAGE
    except USAGE_ERRORS as e:
        logger.error(f"{e.__class__.__name__}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ConsistencyError as e:
        logger.error(f"Consistency check failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILED
    except OSError as e:
        logger.error(f"I/O error: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILED
