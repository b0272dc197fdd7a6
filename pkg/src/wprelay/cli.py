"""wpr-opt command line interface.

    wpr-opt optimize --config scenario.cfg [--out report.txt] [--seed S]
    wpr-opt sweep    --config scenario.cfg [--out table.csv] [--seed S]
                     [--trials T] [--no-plot]

Exit codes: 0 success, 2 configuration/parse error, 3 numeric domain
error, 4 I/O error. Outputs embed a manifest comment and are byte-stable
for identical config and seed.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, replace

from . import __version__
from .beamforming import optimal_beamformer
from .config import ParsedConfig, parse_config
from .errors import ConfigError, DomainError
from .model import effective_channels, sample_channels
from .simulator import SweepResult, sweep
from .timesplit import optimal_tau

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_DOMAIN = 3
EXIT_IO = 4


@dataclass(frozen=True)
class RunManifest:
    command: str
    config_path: str
    out_path: str
    seed: int
    trials: int
    version: str
    duration_s: float | None = None

    def serialize(self) -> str:
        # duration is excluded so identical runs emit identical bytes
        payload = {
            "command": self.command,
            "config": self.config_path,
            "out": self.out_path,
            "seed": self.seed,
            "trials": self.trials,
            "tool": f"wprelay {self.version}",
        }
        return "# manifest: " + json.dumps(payload, sort_keys=True)


def _fmt(value: float) -> str:
    return format(value, ".9g")


def format_optimize_report(parsed: ParsedConfig, seed: int, manifest: RunManifest) -> str:
    """Single-realization report: beamformer, case, gains, time split, rate."""
    cfg = parsed.config
    ch = sample_channels(cfg, seed)
    eff = effective_channels(cfg, ch)
    sol = optimal_beamformer(eff)
    ts = optimal_tau(2.0 * cfg.eta * cfg.P / cfg.N0 * sol.z_m)

    lines = [manifest.serialize()]
    for i, entry in enumerate(sol.w):
        lines.append(f"w[{i}] = {entry.real:.12g}{entry.imag:+.12g}j")
    lines.append(f"x_bar = {sol.x_bar:.12g}")
    lines.append(f"case = {sol.case.value}")
    lines.append(f"z_m = {sol.z_m:.12g}")
    lines.append(f"tau_hat = {ts.tau_hat:.12g}")
    lines.append(f"rate = {ts.rate:.12g}")
    return "\n".join(lines) + "\n"


def format_sweep_csv(result: SweepResult, manifest: RunManifest) -> str:
    lines = [",".join(result.columns)]
    for row in result.rows:
        lines.append(",".join(_fmt(v) for v in row))
    lines.append(manifest.serialize())
    return "\n".join(lines) + "\n"


def _write_output(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wpr-opt",
        description="Throughput-optimal energy beamforming and time split "
        "for a PB-powered DF relay link.",
    )
    parser.add_argument("--version", action="version", version=f"wpr-opt {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", required=True, help="key = value scenario file")
    common.add_argument("--out", default=None, help="output path (default: stdout)")
    common.add_argument("--seed", type=int, default=None, help="override the config seed")

    sub.add_parser("optimize", parents=[common], help="solve one seeded realization")
    p_sweep = sub.add_parser("sweep", parents=[common], help="run a Monte Carlo sweep")
    p_sweep.add_argument("--trials", type=int, default=None, help="override config trials")
    p_sweep.add_argument(
        "--no-plot",
        dest="plot",
        action="store_false",
        help="skip rendering the companion figure next to --out",
    )
    return parser


def _run(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    try:
        with open(args.config, "r", encoding="utf-8") as handle:
            parsed = parse_config(handle.read())
    except OSError as exc:
        print(f"wpr-opt: cannot read config: {exc}", file=sys.stderr)
        return EXIT_IO

    seed = args.seed if args.seed is not None else parsed.seed
    trials = getattr(args, "trials", None)
    if trials is None:
        trials = parsed.trials
    if trials < 1:
        raise ConfigError(f"trials must be >= 1, got {trials}")
    if seed < 0:
        raise ConfigError(f"seed must be >= 0, got {seed}")

    manifest = RunManifest(
        command=args.command,
        config_path=args.config,
        out_path=args.out or "-",
        seed=seed,
        trials=trials,
        version=__version__,
    )

    if args.command == "optimize":
        text = format_optimize_report(parsed, seed, manifest)
        _write_output(text, args.out)
    else:
        if parsed.sweep is None:
            raise ConfigError("sweep command requires a 'sweep' key in the config")
        spec = replace(parsed.sweep, trials=trials, base_seed=seed)
        result = sweep(spec, parsed.config)
        _write_output(format_sweep_csv(result, manifest), args.out)
        if args.out is not None and args.plot:
            from .plotting import render_sweep_figure

            png_path = _figure_path(args.out)
            render_sweep_figure(result, png_path)
            print(f"wpr-opt: figure written to {png_path}", file=sys.stderr)

    elapsed = time.perf_counter() - started
    print(f"wpr-opt: {args.command} finished in {elapsed:.2f} s", file=sys.stderr)
    return EXIT_OK


def _figure_path(out_path: str) -> str:
    stem = out_path[: -len(".csv")] if out_path.endswith(".csv") else out_path
    return stem + ".png"


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _run(args)
    except ConfigError as exc:
        print(f"wpr-opt: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except DomainError as exc:
        print(f"wpr-opt: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"wpr-opt: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
