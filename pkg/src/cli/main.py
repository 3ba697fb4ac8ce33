"""Command-line interface: argument parsing, dispatch and report output."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence, TextIO

from ..catdata import CategoryData, load_ising3, load_semisimple1, validate
from ..config.settings import Settings
from ..loaders import DatasetLoader, GroupLoader, TriangulationLoader
from ..mednykh import GroupTable, IrrepDims, bundled_groups, mednykh_report
from ..pachner import calibrate_symmetry, spot_check, verify
from ..statesum import Coloring, evaluate, evaluate_sharded
from ..surfacecalc import gram_report, handle_basis
from ..utils.errors import AlterfoldError, ContractError
from ..utils.logger import logger
from .selftest import run_selftest

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class UsageError(Exception):
    """Bad flags or unreadable input; exit status 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        raise UsageError(f"{self.prog}: {message}")


def load_dataset(spec: Optional[str]) -> CategoryData:
    """
    Resolve a dataset specifier: 'ising3', 'semisimple:d1,d2,...' or a .cat path.

    Raises:
        UsageError: If the specifier cannot be parsed
        FileNotFoundError: If the path does not exist
    """
    spec = spec or Settings.DEFAULT_DATASET
    if spec == "ising3":
        return load_ising3()
    if spec.startswith("semisimple:"):
        try:
            dims = [int(x) for x in spec.split(":", 1)[1].split(",")]
        except ValueError:
            raise UsageError(f"Bad semisimple dataset {spec!r}; expected semisimple:1,2,...")
        return load_semisimple1(dims)
    return DatasetLoader().load(Path(spec))


def load_group(spec: str) -> tuple[str, GroupTable, IrrepDims]:
    groups = bundled_groups()
    if spec in groups:
        table, dims = groups[spec]
        return spec, table, dims
    path = Path(spec)
    table, dims = GroupLoader().load(path)
    return path.stem, table, dims


def parse_move(text: str, d: CategoryData) -> int:
    """'k,l' with k + l = n + 3; returns k."""
    try:
        k, l_ = (int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"Bad move {text!r}; expected k,l such as 1,5")
    if k < 1 or l_ < 1 or k + l_ != d.n + 3:
        raise UsageError(f"Move {text} does not split a {d.n + 2}-simplex boundary")
    return k


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="alterfold",
        description="Exact state sums, Pachner-move checks and surface calculus",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  alterfold verify-pachner --move 1,5 --data ising3
  alterfold eval --triangulation sphere.tri --data ising3
  alterfold gram --circles 3 --kernel --psd
  alterfold mednykh --group S3 --genus 2
  alterfold selftest --jobs 4
        """,
    )
    common = _Parser(add_help=False)
    common.add_argument("--machine", action="store_true", help="Tab-separated records")
    common.add_argument("--jobs", type=_positive, default=None, help="Worker processes")

    data = _Parser(add_help=False)
    data.add_argument(
        "--data", default=None, help="ising3, semisimple:d1,d2,... or a .cat file"
    )

    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("eval", parents=[common, data], help="Evaluate a triangulation")
    p.add_argument("--triangulation", required=True, help="A .tri file")
    p.add_argument("--boundary-row", default=None, help="Color a one-facet boundary from a row")

    p = sub.add_parser("verify-pachner", parents=[common, data], help="Check Pachner equations")
    p.add_argument("--move", action="append", default=None, help="k,l; repeatable")
    p.add_argument("--sample", type=_non_negative, default=None, help="Spot-check N equations")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--max-failures", type=_non_negative, default=None)

    p = sub.add_parser("gram", parents=[common], help="Gram matrix of surface types")
    p.add_argument("--circles", type=_positive, required=True)
    p.add_argument("--kernel", action="store_true")
    p.add_argument("--handle", action="store_true", help="Put a handle on the all-disks type")
    p.add_argument("--psd", action="store_true")

    p = sub.add_parser("mednykh", parents=[common], help="Check Mednykh's formula")
    p.add_argument("--group", required=True, help="A .grp file or a bundled group name")
    p.add_argument("--genus", type=_non_negative, action="append", default=None)

    sub.add_parser("validate-data", parents=[common, data], help="Check dataset invariants")

    p = sub.add_parser("selftest", parents=[common, data], help="Run the fast acceptance suites")
    p.add_argument("--sample", type=_non_negative, default=None)
    p.add_argument("--seed", type=int, default=None)

    p = sub.add_parser(
        "calibrate-symmetry", parents=[common, data], help="Equation totals per symmetry action"
    )
    p.add_argument("--move", action="append", default=None)
    return parser


def _emit(report, args, out: TextIO) -> None:
    out.write((report.render_machine() if args.machine else report.render()) + "\n")


def _cmd_eval(args, out: TextIO) -> int:
    d = load_dataset(args.data)
    t, coloring = TriangulationLoader().load(Path(args.triangulation))
    if args.boundary_row:
        if len(t.boundary().facets) != d.n + 2:
            raise UsageError("--boundary-row needs the boundary of a single top simplex")
        facet = tuple(sorted(t.boundary().vertices))
        # explicit boundary-color lines win over the row
        from_row = Coloring.from_row(d, args.boundary_row, facet)
        coloring = Coloring({**from_row.labels, **coloring.labels})
    jobs = args.jobs or Settings.JOBS
    if jobs > 1:
        result = evaluate_sharded(t, d, coloring, shards=jobs, jobs=jobs)
    else:
        result = evaluate(t, d, coloring)
    _emit(result, args, out)
    return EXIT_OK


def _cmd_verify(args, out: TextIO) -> int:
    d = load_dataset(args.data)
    moves = args.move or [f"{k},{d.n + 3 - k}" for k in range(1, (d.n + 3) // 2 + 1)]
    ks = [parse_move(m, d) for m in moves]
    ok = True
    for k in ks:
        if args.sample is not None:
            report = spot_check(d, k, sample_size=args.sample, seed=args.seed, jobs=args.jobs)
        else:
            report = verify(d, k, max_failures=args.max_failures, jobs=args.jobs)
        _emit(report, args, out)
        ok = ok and report.ok
    return EXIT_OK if ok else EXIT_FAILED


def _cmd_gram(args, out: TextIO) -> int:
    basis = handle_basis(args.circles) if args.handle else None
    report = gram_report(args.circles, with_kernel=args.kernel, with_psd=args.psd, basis=basis)
    _emit(report, args, out)
    return EXIT_OK if report.ok else EXIT_FAILED


def _cmd_mednykh(args, out: TextIO) -> int:
    name, table, dims = load_group(args.group)
    ok = True
    for genus in args.genus or [0, 1, 2, 3]:
        report = mednykh_report(table, dims, genus, name=name)
        _emit(report, args, out)
        ok = ok and report.holds
    return EXIT_OK if ok else EXIT_FAILED


def _cmd_validate(args, out: TextIO) -> int:
    report = validate(load_dataset(args.data))
    _emit(report, args, out)
    return EXIT_OK if report.ok else EXIT_FAILED


def _cmd_selftest(args, out: TextIO) -> int:
    report = run_selftest(
        load_dataset(args.data), sample_size=args.sample, seed=args.seed, jobs=args.jobs
    )
    _emit(report, args, out)
    return EXIT_OK if report.ok else EXIT_FAILED


def _cmd_calibrate(args, out: TextIO) -> int:
    d = load_dataset(args.data)
    ks = [parse_move(m, d) for m in args.move] if args.move else None
    report = calibrate_symmetry(d, moves=ks, jobs=args.jobs)
    _emit(report, args, out)
    return EXIT_OK if report.ok else EXIT_FAILED


COMMANDS = {
    "eval": _cmd_eval,
    "verify-pachner": _cmd_verify,
    "gram": _cmd_gram,
    "mednykh": _cmd_mednykh,
    "validate-data": _cmd_validate,
    "selftest": _cmd_selftest,
    "calibrate-symmetry": _cmd_calibrate,
}


def run(
    argv: Optional[Sequence[str]] = None,
    out: Optional[TextIO] = None,
    err: Optional[TextIO] = None,
) -> int:
    """
    Parse argv, run one command and write its report.

    Returns:
        0 on success, 1 when a verification fails, 2 on usage or input errors
    """
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        Settings.validate()
        args = parser.parse_args(argv)
    except UsageError as exc:
        err.write(parser.format_usage())
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except ValueError as exc:
        err.write(f"alterfold: invalid configuration: {exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:
        # --help
        return EXIT_OK if not exc.code else EXIT_USAGE

    logger.info("cli", f"Running {args.command}", context={"argv": list(argv or [])})
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except (OSError, ContractError, AlterfoldError, ValueError, KeyError) as exc:
        logger.error("cli", f"{args.command} failed", error=exc)
        err.write(f"alterfold {args.command}: {type(exc).__name__}: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))
