"""Command line front end.

Subcommands::

    dist   distance between two series (optionally early-abandoning)
    path   optimal alignment path and full cost matrix
    tune   leave-one-out parameter search on a training split
    bench  multi-dataset comparison with CSV + SVG report output
    synth  write the bundled synthetic dataset suite in UCR layout

Exit codes: 0 success, 1 usage error, 2 data/parameter error from the
inputs, 3 unexpected failure. Results go to stdout or to requested files;
progress and diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from pathlib import Path

import numpy as np

from .classify import evaluate
from .core import (
    DatasetError,
    LengthMismatchError,
    ParseError,
    UndefinedWindowError,
    as_series,
)
from .benchmark import canonical_families, run_benchmark
from .distances import (
    DistanceSpec,
    Family,
    cost_matrix,
    distance,
    distance_ea,
    format_cost_matrix,
    warping_path,
)
from .tuning import TuningConfig, tune
from .ucr import load_dataset, load_split

__all__ = ["main", "build_parser"]


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # noqa: D102 - argparse hook
        raise _UsageError(message)


def _parse_series(text: str) -> np.ndarray:
    """Series from an inline comma/space list or an ``@file`` reference."""
    if text.startswith("@"):
        path = Path(text[1:])
        try:
            content = path.read_text()
        except OSError as exc:
            raise DatasetError(f"cannot read series file {path}: {exc}") from exc
        tokens = content.replace("−", "-").replace(",", " ").split()
        if not tokens:
            raise ParseError("no values in series file", path)
        values = []
        for tok in tokens:
            try:
                values.append(float(tok))
            except ValueError:
                raise ParseError(f"bad value {tok!r}", path) from None
        try:
            return as_series(values)
        except ValueError as exc:
            raise ParseError(str(exc), path) from None
    tokens = text.replace("−", "-").replace(",", " ").split()
    if not tokens:
        raise _UsageError("empty series argument")
    values = []
    for tok in tokens:
        try:
            values.append(float(tok))
        except ValueError:
            raise _UsageError(f"bad series value {tok!r}") from None
    try:
        return as_series(values)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None


def _tuning_config(args) -> TuningConfig:
    try:
        return TuningConfig(
            exponent=args.exponent,
            pair_sample_size=args.pairs,
            rng_seed=args.seed,
        )
    except ValueError as exc:
        raise _UsageError(str(exc)) from None


def _build_spec(args) -> DistanceSpec:
    """DistanceSpec from --measure/--param, tuning adtw when asked to."""
    measure = args.measure
    param = getattr(args, "param", None)
    if measure in ("sqed", "dtw"):
        if param is not None:
            raise _UsageError(f"{measure} takes no parameter")
        return DistanceSpec(measure)
    if param is None:
        raise _UsageError(f"{measure} requires --param")
    if measure == "adtw" and param == "auto":
        train_path = getattr(args, "train", None)
        if train_path is None:
            raise _UsageError("--param auto requires --train")
        train = load_split(train_path)
        result = tune(train, Family.ADTW, _tuning_config(args))
        print(f"tuned penalty: {result.chosen.param!r}", file=sys.stderr)
        return result.chosen
    try:
        if measure == "cdtw":
            value: object = int(param)
        else:
            value = float(param)
        return DistanceSpec(measure, value)
    except ValueError as exc:
        raise _UsageError(f"bad parameter for {measure}: {exc}") from None


def _cmd_dist(args) -> int:
    spec = _build_spec(args)
    s = _parse_series(args.a)
    t = _parse_series(args.b)
    if args.cutoff is not None:
        if not (args.cutoff >= 0.0):
            raise _UsageError("--cutoff must be a finite non-negative number")
        d = distance_ea(spec, s, t, args.cutoff)
        print("pruned" if math.isinf(d) else repr(d))
    else:
        print(repr(distance(spec, s, t)))
    return 0


def _cmd_path(args) -> int:
    spec = _build_spec(args)
    s = _parse_series(args.a)
    t = _parse_series(args.b)
    path, dist = warping_path(spec, s, t)
    lines = ["step,i,j"]
    lines += [f"{k},{i},{j}" for k, (i, j) in enumerate(path.steps, start=1)]
    path_text = "\n".join(lines) + "\n"
    matrix_text = None
    if args.matrix_out is not None:
        matrix_text = format_cost_matrix(cost_matrix(spec, s, t))
    print(repr(dist))
    if args.path_out is not None:
        Path(args.path_out).write_text(path_text)
    else:
        sys.stdout.write(path_text)
    if args.matrix_out is not None:
        Path(args.matrix_out).write_text(matrix_text)
    return 0


def _cmd_tune(args) -> int:
    train = load_split(args.train)
    result = tune(train, args.family, _tuning_config(args))
    Path(args.out).write_text(result.to_csv())
    chosen = result.chosen.param
    print(f"chosen_param={chosen!r}" if isinstance(chosen, float) else f"chosen_param={chosen}")
    if result.omega_prime is not None:
        print(f"omega_prime={result.omega_prime!r}")
    print(f"loocv_accuracy={result.best_accuracy!r}")
    return 0


def _cmd_eval(args) -> int:
    spec = _build_spec(args)
    train = load_split(args.train)
    test = load_split(args.test)
    outcome = evaluate(train, test, spec)
    if args.out is not None:
        Path(args.out).write_text(outcome.to_csv())
    print(f"accuracy={outcome.accuracy!r}")
    return 0


def _discover_datasets(root: Path) -> list[str]:
    names = sorted(
        p.name
        for p in root.iterdir()
        if p.is_dir() and (p / f"{p.name}_TRAIN.tsv").is_file()
    )
    if not names:
        raise DatasetError(f"no datasets found under {root}")
    return names


def _cmd_bench(args) -> int:
    root_text = args.data_root or os.environ.get("ELASTIC_DTW_DATA")
    if not root_text:
        raise _UsageError("--data-root or ELASTIC_DTW_DATA is required")
    root = Path(root_text)
    if not root.is_dir():
        raise DatasetError(f"data root {root} is not a directory")
    if args.datasets.strip().lower() == "all":
        names = _discover_datasets(root)
    else:
        names = [part.strip() for part in args.datasets.split(",") if part.strip()]
        if not names:
            raise _UsageError("--datasets must name at least one dataset")
    if args.families.strip().lower() == "all":
        families = list(Family)
    else:
        try:
            families = canonical_families(
                part.strip() for part in args.families.split(",") if part.strip()
            )
        except ValueError as exc:
            raise _UsageError(str(exc)) from None
        if not families:
            raise _UsageError("--families must name at least one measure")
    if args.jobs < 1:
        raise _UsageError("--jobs must be at least 1")
    pairs = [load_dataset(root, name) for name in names]

    def progress(name: str, message: str) -> None:
        print(f"{name} {message}", file=sys.stderr)

    result = run_benchmark(
        pairs,
        families,
        _tuning_config(args),
        alpha=args.alpha,
        jobs=args.jobs,
        progress=progress,
    )
    from .report import write_report

    written = write_report(result, args.out_dir, figures=not args.no_figures)
    print(f"wrote {len(written)} files to {args.out_dir}", file=sys.stderr)
    for name in written:
        print(name)
    return 0


def _cmd_synth(args) -> int:
    from .synth import write_suite

    for name in write_suite(args.out_dir, seed=args.seed):
        print(name)
    return 0


def _add_series_options(cmd: argparse.ArgumentParser) -> None:
    cmd.add_argument("--a", required=True, help="series: comma list or @file")
    cmd.add_argument("--b", required=True, help="series: comma list or @file")


def _add_measure_options(cmd: argparse.ArgumentParser) -> None:
    cmd.add_argument(
        "--measure",
        required=True,
        choices=[f.value for f in Family],
        help="distance family",
    )
    cmd.add_argument(
        "--param",
        help="window (cdtw), weight steepness (wdtw), or warp penalty (adtw); "
        "adtw also accepts 'auto' with --train",
    )


def _add_tuning_options(cmd: argparse.ArgumentParser) -> None:
    cmd.add_argument("--seed", type=int, default=0, help="sampling seed")
    cmd.add_argument("--exponent", type=float, default=5.0, help="penalty ladder exponent")
    cmd.add_argument("--pairs", type=int, default=4000, help="pair sample budget")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="elastic-dtw", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", metavar="command")

    dist = sub.add_parser("dist", help="distance between two series")
    _add_measure_options(dist)
    _add_series_options(dist)
    dist.add_argument("--cutoff", type=float, help="abandon above this value")
    dist.add_argument("--train", help="training split for --param auto")
    _add_tuning_options(dist)
    dist.set_defaults(func=_cmd_dist)

    path = sub.add_parser("path", help="alignment path and cost matrix")
    _add_measure_options(path)
    _add_series_options(path)
    path.add_argument("--path-out", help="write the path CSV here instead of stdout")
    path.add_argument("--matrix-out", help="write the accumulated cost matrix CSV here")
    path.add_argument("--train", help="training split for --param auto")
    _add_tuning_options(path)
    path.set_defaults(func=_cmd_path)

    tune_cmd = sub.add_parser("tune", help="leave-one-out parameter search")
    tune_cmd.add_argument(
        "--family",
        required=True,
        choices=["cdtw", "wdtw", "adtw"],
        help="tunable distance family",
    )
    tune_cmd.add_argument("--train", required=True, help="training split file")
    tune_cmd.add_argument("--out", required=True, help="candidate table CSV path")
    _add_tuning_options(tune_cmd)
    tune_cmd.set_defaults(func=_cmd_tune)

    ev = sub.add_parser("eval", help="train/test nearest neighbor evaluation")
    _add_measure_options(ev)
    ev.add_argument("--train", required=True, help="training split file")
    ev.add_argument("--test", required=True, help="test split file")
    ev.add_argument("--out", help="per-item prediction CSV path")
    _add_tuning_options(ev)
    ev.set_defaults(func=_cmd_eval)

    bench = sub.add_parser("bench", help="multi-dataset comparison report")
    bench.add_argument("--data-root", help="UCR-layout root (or ELASTIC_DTW_DATA)")
    bench.add_argument("--datasets", default="all", help="comma list or 'all'")
    bench.add_argument("--families", default="all", help="comma list or 'all'")
    bench.add_argument("--out-dir", required=True, help="report directory")
    bench.add_argument("--alpha", type=float, default=0.05, help="significance level")
    bench.add_argument("--jobs", type=int, default=1, help="worker processes")
    bench.add_argument(
        "--no-figures", action="store_true", help="skip SVG rendering, keep CSV output"
    )
    _add_tuning_options(bench)
    bench.set_defaults(func=_cmd_bench)

    synth = sub.add_parser("synth", help="write the synthetic dataset suite")
    synth.add_argument("--out-dir", required=True, help="destination root")
    synth.add_argument("--seed", type=int, default=0, help="generation seed")
    synth.set_defaults(func=_cmd_synth)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "func", None) is None:
        parser.print_usage(sys.stderr)
        return 1
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ParseError, DatasetError, LengthMismatchError, UndefinedWindowError) as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - safety net
        print(f"failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
