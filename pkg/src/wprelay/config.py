"""Flat key-value experiment configuration.

One ``key = value`` per line, ``#`` starts a comment. Scenario keys: p,
n0, eta, alpha, n, d1, d2, d3, d4, d_sd; run keys: trials, seed; sweep
keys: sweep (variable name) and values (comma-separated list).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConfigError
from .model import SystemConfig
from .simulator import DEFAULT_PLACEMENT_VALUES, SWEEP_VARIABLES, SweepSpec

REQUIRED_KEYS = ("p", "n0", "n", "d1", "d2", "d3", "d4")

_FLOAT_KEYS = {"p", "n0", "eta", "alpha", "d1", "d2", "d3", "d4", "d_sd"}
_INT_KEYS = {"n", "trials", "seed"}
_KNOWN_KEYS = _FLOAT_KEYS | _INT_KEYS | {"sweep", "values"}

DEFAULTS = {"eta": 0.4, "alpha": 3.0, "trials": 1000, "seed": 42}

# (low, high, low_open, high_open); None bound = unbounded
_RANGES = {
    "p": (0.0, None, True, False),
    "n0": (0.0, None, True, False),
    "eta": (0.0, 1.0, True, True),
    "alpha": (0.0, None, True, False),
    "n": (1, None, False, False),
    "d1": (0.0, None, True, False),
    "d2": (0.0, None, True, False),
    "d3": (0.0, None, True, False),
    "d4": (0.0, None, True, False),
    "d_sd": (0.0, None, True, False),
    "trials": (1, None, False, False),
    "seed": (0, None, False, False),
}


@dataclass(frozen=True)
class ParsedConfig:
    config: SystemConfig
    sweep: SweepSpec | None
    seed: int
    trials: int


def _check_range(key: str, value, line: int) -> None:
    lo, hi, lo_open, hi_open = _RANGES[key]
    ok = (value > lo if lo_open else value >= lo) and (
        hi is None or (value < hi if hi_open else value <= hi)
    )
    if not ok:
        lo_b = "(" if lo_open else "["
        hi_b = ")" if hi_open else "]"
        hi_s = "inf" if hi is None else hi
        raise ConfigError(
            f"{key} must be in {lo_b}{lo}, {hi_s}{hi_b}, got {value}", key=key, line=line
        )


def _parse_scalar(key: str, raw: str, line: int):
    try:
        if key in _INT_KEYS:
            return int(raw)
        return float(raw)
    except ValueError:
        kind = "an integer" if key in _INT_KEYS else "a number"
        raise ConfigError(f"{key} expects {kind}, got {raw!r}", key=key, line=line) from None


def parse_config(text: str) -> ParsedConfig:
    """Parse and validate a configuration document.

    Raises ConfigError naming the offending key and line for unknown keys,
    out-of-range values, and missing required keys.
    """
    entries: dict[str, object] = {}
    for ln, raw_line in enumerate(text.splitlines(), start=1):
        stripped = raw_line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if "=" not in stripped:
            raise ConfigError(f"expected 'key = value', got {stripped!r}", line=ln)
        key, raw = (part.strip() for part in stripped.split("=", 1))
        if key not in _KNOWN_KEYS:
            raise ConfigError(f"unknown key {key!r}", key=key, line=ln)
        if key in entries:
            raise ConfigError(f"duplicate key {key!r}", key=key, line=ln)

        if key == "sweep":
            if raw not in SWEEP_VARIABLES:
                raise ConfigError(
                    f"sweep must be one of {', '.join(SWEEP_VARIABLES)}, got {raw!r}",
                    key=key,
                    line=ln,
                )
            entries[key] = raw
        elif key == "values":
            parts = [p.strip() for p in raw.split(",") if p.strip()]
            if not parts:
                raise ConfigError("values must be a nonempty list", key=key, line=ln)
            try:
                entries[key] = tuple(float(p) for p in parts)
            except ValueError:
                raise ConfigError(
                    f"values expects comma-separated numbers, got {raw!r}", key=key, line=ln
                ) from None
        else:
            value = _parse_scalar(key, raw, ln)
            _check_range(key, value, ln)
            entries[key] = value

    missing = [k for k in REQUIRED_KEYS if k not in entries]
    if missing:
        raise ConfigError(f"missing required keys: {', '.join(missing)}")

    cfg = SystemConfig(
        P=entries["p"],
        N0=entries["n0"],
        N=entries["n"],
        d1=entries["d1"],
        d2=entries["d2"],
        d3=entries["d3"],
        d4=entries["d4"],
        eta=entries.get("eta", DEFAULTS["eta"]),
        alpha=entries.get("alpha", DEFAULTS["alpha"]),
        d_sd=entries.get("d_sd"),
    )
    seed = entries.get("seed", DEFAULTS["seed"])
    trials = entries.get("trials", DEFAULTS["trials"])

    spec = None
    if "sweep" in entries:
        variable = entries["sweep"]
        values = entries.get("values")
        if values is None:
            if variable != "placement_grid":
                raise ConfigError(f"sweep {variable!r} requires a values list", key="values")
            values = DEFAULT_PLACEMENT_VALUES
        spec = SweepSpec(variable=variable, values=values, trials=trials, base_seed=seed)
    elif "values" in entries:
        raise ConfigError("values given without a sweep variable", key="values")

    return ParsedConfig(config=cfg, sweep=spec, seed=seed, trials=trials)


def emit_config(parsed: ParsedConfig) -> str:
    """Serialize a ParsedConfig so that parse_config round-trips it."""
    cfg = parsed.config
    lines = [
        f"p = {cfg.P!r}",
        f"n0 = {cfg.N0!r}",
        f"n = {cfg.N}",
        f"d1 = {cfg.d1!r}",
        f"d2 = {cfg.d2!r}",
        f"d3 = {cfg.d3!r}",
        f"d4 = {cfg.d4!r}",
        f"eta = {cfg.eta!r}",
        f"alpha = {cfg.alpha!r}",
    ]
    if cfg.d_sd is not None:
        lines.append(f"d_sd = {cfg.d_sd!r}")
    lines.append(f"seed = {parsed.seed}")
    lines.append(f"trials = {parsed.trials}")
    if parsed.sweep is not None:
        lines.append(f"sweep = {parsed.sweep.variable}")
        lines.append("values = " + ", ".join(repr(v) for v in parsed.sweep.values))
    return "\n".join(lines) + "\n"
