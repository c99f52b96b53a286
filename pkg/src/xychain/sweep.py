"""Parameter sweeps over the free-fermion pipeline and their CSV output."""

from __future__ import annotations

import csv
import dataclasses
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from importlib import resources
from typing import Iterable, Optional, Sequence

import numpy as np

from .config import ChainSpec, ProfileParams, couplings, disorder_profile, fields
from .correlations import PairCorrelators, pair_correlators
from .entanglement import ConcurrenceResult, XStateDensity, concurrence_xstate, pair_density_matrix
from .quadratic import from_spec
from .solver import correlation_matrix, diagonalize

VARY_PARAMS = ("none", "zeta2", "xi2", "zeta_all", "xi_all", "epsilon")
CSV_COLUMNS = ("lambda", "vary_value", "l", "m", "concurrence",
               "sxx", "syy", "szz", "mz_l", "mz_m", "degenerate")


class SweepError(RuntimeError):
    def __init__(self, lam: float, vary_value: float, cause):
        super().__init__(f"pipeline failed at lambda={lam!r}, vary_value={vary_value!r}: {cause}")
        self.lam = lam
        self.vary_value = vary_value
        self.cause = str(cause)

    def __reduce__(self):
        # survives the trip back from worker processes
        return type(self), (self.lam, self.vary_value, self.cause)


@dataclass(frozen=True)
class PairResult:
    correlators: PairCorrelators
    density: XStateDensity
    concurrence: ConcurrenceResult


def ground_state_g(spec: ChainSpec, method: str = "lapack"):
    """Correlation matrix and quasiparticle modes of ``spec``'s ground state."""
    modes = diagonalize(from_spec(spec), method=method)
    return correlation_matrix(modes), modes


def pair_entanglement(spec: ChainSpec, pairs: Iterable[tuple[int, int]],
                      method: str = "lapack") -> list[PairResult]:
    """Run the full pipeline for each ``(l, m)`` in ``pairs`` with a single solve."""
    g, modes = ground_state_g(spec, method)
    out = []
    for l, m in pairs:
        pc = pair_correlators(g, l, m)
        x = pair_density_matrix(pc)
        out.append(PairResult(pc, x, concurrence_xstate(x, degenerate=modes.degenerate)))
    return out


def concurrence(spec: ChainSpec, l: int, m: int) -> float:
    return pair_entanglement(spec, [(l, m)])[0].concurrence.c


def lambda_grid(start: float, stop: float, step: float) -> np.ndarray:
    """Inclusive grid ``start, start+step, ..., stop`` free of accumulated drift."""
    if step <= 0 or stop < start:
        raise ValueError(f"invalid grid {start}:{stop}:{step}")
    count = int(np.floor((stop - start) / step + 1e-9)) + 1
    return np.round(start + step * np.arange(count), 12)


def apply_vary(base: ChainSpec, param: str, value: float) -> ChainSpec:
    """Return ``base`` with one sweep parameter set to ``value``."""
    rep = dataclasses.replace
    if param == "none":
        return base
    if param == "zeta2":
        return rep(base, alpha=rep(base.alpha, strength_2=value))
    if param == "xi2":
        return rep(base, beta=rep(base.beta, strength_2=value))
    if param == "zeta_all":
        return rep(base, alpha=rep(base.alpha, strength_1=value, strength_2=value))
    if param == "xi_all":
        return rep(base, beta=rep(base.beta, strength_1=value, strength_2=value))
    if param == "epsilon":
        return rep(base, alpha=rep(base.alpha, width=value), beta=rep(base.beta, width=value))
    raise ValueError(f"unknown sweep parameter {param!r}; expected one of {VARY_PARAMS}")


@dataclass(frozen=True)
class SweepConfig:
    base: ChainSpec
    lambda_grid: tuple[float, ...]
    vary: str = "none"
    values: tuple[float, ...] = (0.0,)
    pairs: Optional[tuple[tuple[int, int], ...]] = None
    method: str = "lapack"

    def __post_init__(self):
        grid = np.asarray(self.lambda_grid, dtype=float)
        if grid.size == 0 or np.any(np.diff(grid) <= 0):
            raise ValueError("lambda grid must be non-empty and strictly increasing")
        if self.vary not in VARY_PARAMS:
            raise ValueError(f"unknown sweep parameter {self.vary!r}; expected one of {VARY_PARAMS}")
        if not self.values:
            raise ValueError("need at least one vary value")
        object.__setattr__(self, "lambda_grid", tuple(float(x) for x in grid))
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        if self.pairs is None:
            n = self.base.n_sites
            mid = (n + 1) // 2
            default = ((mid - 2, mid - 1), (mid - 1, mid)) if n >= 4 else ((1, 2),)
            object.__setattr__(self, "pairs", default)
        n = self.base.n_sites
        for l, m in self.pairs:
            if not (1 <= l < m <= n):
                raise ValueError(f"pair ({l}, {m}) invalid for {n} sites")

    @classmethod
    def from_dict(cls, d: dict) -> "SweepConfig":
        """Build from the JSON preset layout (see ``presets/*.json``)."""
        chain = d["chain"]
        base = ChainSpec(
            n_sites=chain["n_sites"],
            lam=0.0,
            gamma=chain.get("gamma", 1.0),
            boundary=chain.get("boundary", "periodic"),
            alpha=_profile_from_dict(chain.get("alpha")),
            beta=_profile_from_dict(chain.get("beta")),
        )
        grid = d["lambda"]
        return cls(
            base=base,
            lambda_grid=tuple(lambda_grid(grid["start"], grid["stop"], grid["step"])),
            vary=d.get("vary", "none"),
            values=tuple(d.get("values", (0.0,))),
            pairs=tuple(tuple(p) for p in d["pairs"]) if "pairs" in d else None,
        )


def _profile_from_dict(d: Optional[dict]) -> ProfileParams:
    if not d:
        return ProfileParams()
    d = dict(d)
    kind = d.pop("dist", None)
    if kind is None:
        return ProfileParams(**d)
    return ProfileParams.preset(kind, **d)


@dataclass(frozen=True)
class SweepRow:
    lam: float
    vary_value: float
    l: int
    m: int
    concurrence: float
    sxx: float
    syy: float
    szz: float
    mz_l: float
    mz_m: float
    degenerate: bool

    def correlators(self) -> PairCorrelators:
        return PairCorrelators(self.sxx, self.syy, self.szz, self.mz_l, self.mz_m, self.l, self.m)


def _evaluate(task):
    config, value, lam = task
    spec = apply_vary(config.base, config.vary, value).replace(lam=lam)
    try:
        results = pair_entanglement(spec, config.pairs, config.method)
    except Exception as exc:
        raise SweepError(lam, value, exc) from exc
    return [
        SweepRow(lam, value, r.correlators.l, r.correlators.m, r.concurrence.c,
                 r.correlators.sxx, r.correlators.syy, r.correlators.szz,
                 r.correlators.mz_l, r.correlators.mz_m, r.concurrence.degenerate_flag)
        for r in results
    ]


def run_sweep(config: SweepConfig, jobs: int = 1) -> list[SweepRow]:
    """Evaluate every (vary value, lambda, pair) combination.

    Rows come out grouped by vary value (in the given order), then by
    ascending lambda, then by pair, whatever ``jobs`` is.
    """
    tasks = [(config, v, lam) for v in config.values for lam in config.lambda_grid]
    if jobs == 1:
        chunks = map(_evaluate, tasks)
        return [row for chunk in chunks for row in chunk]
    with ProcessPoolExecutor(max_workers=jobs or None) as pool:
        chunks = pool.map(_evaluate, tasks, chunksize=max(1, len(tasks) // (4 * (jobs or os.cpu_count() or 1))))
        return [row for chunk in chunks for row in chunk]


def _fmt(x) -> str:
    if isinstance(x, (bool, np.bool_)):
        return "1" if x else "0"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    x = float(x)
    if x == 0.0:
        x = 0.0  # drop the sign of negative zero
    return format(x, ".12g")


def format_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(["" if v is None else _fmt(v) for v in row])
    return buf.getvalue()


def emit_csv(rows: Sequence[SweepRow], destination) -> None:
    """Write sweep rows as CSV to a path or an open text stream."""
    if not rows:
        raise ValueError("no rows to write")
    text = format_csv(CSV_COLUMNS, (
        (r.lam, r.vary_value, r.l, r.m, r.concurrence, r.sxx, r.syy, r.szz,
         r.mz_l, r.mz_m, r.degenerate) for r in rows))
    _write(text, destination)


def dump_profile(spec: ChainSpec, destination) -> None:
    """Write per-index ``alpha, beta, J, h``; bond columns are blank past the last bond."""
    prof = disorder_profile(spec)
    J = couplings(spec)
    h = fields(spec)
    rows = []
    for i in range(spec.n_sites):
        bond = i < spec.n_bonds
        rows.append((i + 1, prof.alpha[i] if bond else None, prof.beta[i],
                     J[i] if bond else None, h[i]))
    _write(format_csv(("index", "alpha", "beta", "J", "h"), rows), destination)


def _write(text: str, destination) -> None:
    if hasattr(destination, "write"):
        destination.write(text)
    else:
        with open(destination, "w", newline="") as fh:
            fh.write(text)


def preset_names() -> list[str]:
    files = resources.files("xychain").joinpath("presets").iterdir()
    return sorted(f.name[:-5] for f in files if f.name.endswith(".json"))


def load_preset(name: str) -> SweepConfig:
    path = resources.files("xychain").joinpath("presets", f"{name}.json")
    if not path.is_file():
        raise ValueError(f"unknown preset {name!r}; available: {', '.join(preset_names())}")
    return SweepConfig.from_dict(json.loads(path.read_text()))
