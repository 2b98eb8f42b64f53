"""
Command-line entry point.

Results go to standard output in the format chosen with ``--format``;
log records and diagnostics go to standard error. Exit codes: 0 on
success, 1 on a domain error or a failed check, 2 on a usage error.
"""
import argparse
import logging
import sys
import time
from pathlib import Path
from typing import Any, Dict, Optional, Sequence, Tuple

from liecoh import __version__
from liecoh.core.exceptions import LieCohError, ParseError
from liecoh.core.logging import configure_logging
from liecoh.schemas.results import OutputRecord
from liecoh.services import catalog
from liecoh.services.queries import COEFFICIENTS, MULTIPLICITY_ARITY, QueryService, resolve_algebra
from liecoh.services.report import FORMATS, render

logger = logging.getLogger(__name__)

_COMMON = {"format", "threads", "no_timing", "log_level", "fast_rank", "handler", "command", "catalog_command"}


class UsageError(Exception):
    pass


# ============================================
# Commands
# ============================================

def _algebra(args: argparse.Namespace):
    if args.algebra is None and args.file is None:
        raise UsageError("one of --algebra or --file is required")
    return resolve_algebra(args.algebra, args.file, args.external)


def cmd_validate(args: argparse.Namespace, service: QueryService) -> Tuple[Any, bool]:
    return service.validate(catalog.load(args.path)), True


def cmd_cohomology(args: argparse.Namespace, service: QueryService) -> Tuple[Any, bool]:
    result = service.cohomology(
        _algebra(args), args.module, args.max_degree, args.method, with_derivations=args.derivations
    )
    ok = result.hochschild_serre is None or not result.hochschild_serre.disagreements
    return result, ok


def cmd_invariant_cohomology(args: argparse.Namespace, service: QueryService) -> Tuple[Any, bool]:
    return service.invariant_cohomology(args.m, args.coefficients, args.max_degree), True


def cmd_decompose(args: argparse.Namespace, service: QueryService) -> Tuple[Any, bool]:
    if args.tensor is not None:
        if args.exterior is not None or args.of is not None:
            raise UsageError("--tensor cannot be combined with --exterior/--of")
        return service.tensor(*args.tensor), True
    if args.exterior is None or args.of is None:
        raise UsageError("decompose needs --exterior J --of M, or --tensor A B")
    return service.exterior(args.exterior, args.of, args.method), True


def cmd_multiplicity(args: argparse.Namespace, service: QueryService) -> Tuple[Any, bool]:
    arity = MULTIPLICITY_ARITY[args.kind]
    if len(args.arguments) != arity:
        raise UsageError(f"{args.kind} takes {arity} integer arguments, got {len(args.arguments)}")
    return service.multiplicity(args.kind, args.arguments), True


def cmd_les_report(args: argparse.Namespace, service: QueryService) -> Tuple[Any, bool]:
    report = service.les_report(args.m, args.max_degree)
    return report, report.exact


def cmd_predict(args: argparse.Namespace, service: QueryService) -> Tuple[Any, bool]:
    report = service.predict(args.m)
    return report, all(c.ok for c in report.checks)


def cmd_table(args: argparse.Namespace, service: QueryService) -> Tuple[Any, bool]:
    report = service.table(args.external, include_extra=args.include_extra)
    return report, report.failed == 0


def cmd_catalog_list(args: argparse.Namespace, service: QueryService) -> Tuple[Any, bool]:
    return service.catalog(), True


def cmd_catalog_build(args: argparse.Namespace, service: QueryService) -> Tuple[Any, bool]:
    g = catalog.build(args.label, args.external)
    catalog.save(g, args.out)
    logger.info("wrote %s to %s", args.label, args.out)
    return service.validate(g), True


# ============================================
# Parser
# ============================================

def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text", help="output format (default: text)")
    common.add_argument("--threads", type=int, default=None,
                        help="worker threads, 0 = sequential (default: LIECOH_THREADS)")
    common.add_argument("--no-timing", action="store_true", help="omit timing_ms for byte-identical output")
    common.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"], default=None)
    common.add_argument("--fast-rank", action="store_true",
                        help="use the modular rank path (exact fallback on inconsistency)")
    return common


def _algebra_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--algebra", help="catalog label, sl2, sl2xVm or sl2xV{a,b,...}")
    parser.add_argument("--file", type=Path, help="AlgebraFile to load instead of --algebra")
    parser.add_argument("--external", type=Path, help="AlgebraFile for an externally supplied catalog entry")


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="liecoh",
        description="Exact Lie algebra cohomology of perfect Lie algebras sl2 ⋉ N.",
    )
    parser.add_argument("--version", action="version", version=f"liecoh {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check an AlgebraFile and describe the algebra")
    p.add_argument("path", type=Path)
    p.set_defaults(handler=cmd_validate)

    p = sub.add_parser("cohomology", parents=[common], help="Betti table of H^*(g, M)")
    _algebra_options(p)
    p.add_argument("--module", choices=["adjoint", "trivial"], default="adjoint")
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--method", choices=["direct", "hochschild-serre"], default="direct")
    p.add_argument("--derivations", action="store_true", help="also compute Der(g) and the outer derivations")
    p.set_defaults(handler=cmd_cohomology)

    p = sub.add_parser("invariant-cohomology", parents=[common], help="H^*(V_m, W)^sl2 for W in V, g, g/V")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--coefficients", choices=COEFFICIENTS, required=True)
    p.add_argument("--max-degree", type=int, default=None)
    p.set_defaults(handler=cmd_invariant_cohomology)

    p = sub.add_parser("decompose", parents=[common], help="sl2 decomposition of Λ^j(V_m) or V_a ⊗ V_b")
    p.add_argument("--exterior", type=int, metavar="J")
    p.add_argument("--of", type=int, metavar="M")
    p.add_argument("--method", choices=["formula", "brute"], default="formula")
    p.add_argument("--tensor", type=int, nargs=2, metavar=("A", "B"))
    p.set_defaults(handler=cmd_decompose)

    p = sub.add_parser("multiplicity", parents=[common], help="N, p, c, lambda3 and lambda4 queries")
    p.add_argument("kind", choices=sorted(MULTIPLICITY_ARITY))
    p.add_argument("arguments", type=int, nargs="*")
    p.set_defaults(handler=cmd_multiplicity)

    p = sub.add_parser("les-report", parents=[common], help="long exact sequence check for sl2 ⋉ V_m")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--max-degree", type=int, default=None)
    p.set_defaults(handler=cmd_les_report)

    p = sub.add_parser("predict", parents=[common], help="compare closed forms with computed values")
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(handler=cmd_predict)

    p = sub.add_parser("table", parents=[common], help="recompute the classification table")
    p.add_argument("--external", type=Path, help="AlgebraFile for L_{9,41}")
    p.add_argument("--include-extra", action="store_true", help="also verify entries outside the table")
    p.set_defaults(handler=cmd_table)

    p = sub.add_parser("catalog", help="list or export catalog algebras")
    catalog_sub = p.add_subparsers(dest="catalog_command", required=True)
    c = catalog_sub.add_parser("list", parents=[common])
    c.set_defaults(handler=cmd_catalog_list)
    c = catalog_sub.add_parser("build", parents=[common])
    c.add_argument("label")
    c.add_argument("--out", type=Path, required=True)
    c.add_argument("--external", type=Path)
    c.set_defaults(handler=cmd_catalog_build)

    return parser


def _parameters(args: argparse.Namespace) -> Dict[str, Any]:
    params = {}
    for key, value in sorted(vars(args).items()):
        if key in _COMMON or value is None or value is False:
            continue
        params[key] = str(value) if isinstance(value, Path) else value
    return params


def _command_name(args: argparse.Namespace) -> str:
    if args.command == "catalog":
        return f"catalog {args.catalog_command}"
    return args.command


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    configure_logging(args.log_level)
    if args.threads is not None and args.threads < 0:
        parser.print_usage(sys.stderr)
        print("liecoh: error: --threads must be >= 0", file=sys.stderr)
        return 2
    service = QueryService(threads=args.threads, fast=True if args.fast_rank else None)

    start = time.perf_counter()
    try:
        result, ok = args.handler(args, service)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"liecoh: error: {exc}", file=sys.stderr)
        return 2
    except ParseError as exc:
        print(f"liecoh: invalid algebra file: {exc}", file=sys.stderr)
        return 1
    except (LieCohError, ValueError) as exc:
        print(f"liecoh: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    elapsed = (time.perf_counter() - start) * 1000

    record = OutputRecord(
        command=_command_name(args),
        parameters=_parameters(args),
        result=result,
        timing_ms=None if args.no_timing else round(elapsed, 3),
    )
    sys.stdout.write(render(record, args.format))
    if not ok:
        logger.warning("%s: one or more checks failed", record.command)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
