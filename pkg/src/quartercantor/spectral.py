"""Spectral functions ``c(t) = sum_gamma |mu_hat(t - gamma)|**2`` on real grids.

A frequency set is a spectrum exactly when its spectral function is
identically 1.  Only finitely many frequencies and finitely many product
factors are ever used, so what gets measured is

* the *deficiency* ``max(1 - c)``, caused by dropping frequencies, and
* the *overshoot* ``max(c - 1)``, caused by truncating the product; it is
  bounded by ``len(set) * 2 * tail_bound`` because each squared term moves
  by at most ``2 * tail_bound``.

Sums use :func:`math.fsum`, which is exactly rounded.  Adding nonnegative
terms can therefore never decrease a computed value, and sums over the same
multiset of terms are bit-identical regardless of ordering.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
import io
import json
import math
import re

import numpy as np

from .digits import DigitSystem, LevelSet, canonical, enumerate_level
from .numerics import ProductConfig, check_frequencies, muhat_at_offsets, tail_bound

_CHUNK = 64
_LABEL = re.compile(r"c(\d+)")


def _offsets(elements) -> np.ndarray:
    if isinstance(elements, LevelSet):
        return elements.elements
    return check_frequencies(np.atleast_1d(elements))


def _check_cover(t, offsets: np.ndarray, cfg: ProductConfig):
    t = np.atleast_1d(np.asarray(t, dtype=np.float64))
    if not np.all(np.isfinite(t)):
        raise ValueError("t must be finite")
    need = np.abs(t).max() + (np.abs(offsets).max() if offsets.size else 0)
    if need > cfg.domain_radius:
        raise ValueError(
            f"|t| + max|gamma| = {need} exceeds domain_radius {cfg.domain_radius}"
        )


def bessel_slack(n_terms: int, cfg: ProductConfig) -> float:
    """Allowance above 1 for a truncated spectral sum of ``n_terms`` terms."""
    return n_terms * 2 * tail_bound(cfg)


def _sums(t: np.ndarray, offsets: np.ndarray, factors: int, workers: int | None = None):
    def block(lo):
        terms = muhat_at_offsets(t[lo:lo + _CHUNK], offsets, factors) ** 2
        return [math.fsum(row) for row in terms]

    starts = range(0, len(t), _CHUNK)
    if workers and workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            parts = list(pool.map(block, starts))
    else:
        parts = [block(lo) for lo in starts]
    return np.array([v for part in parts for v in part], dtype=np.float64)


def spectral_fn(elements, t, cfg: ProductConfig):
    """``sum_{gamma in elements} mu_hat_K(t - gamma)**2`` at scalar or array t."""
    offsets = _offsets(elements)
    _check_cover(t, offsets, cfg)
    out = _sums(np.atleast_1d(np.asarray(t, dtype=np.float64)), offsets, cfg.factors)
    return float(out[0]) if np.ndim(t) == 0 else out


def residue_offsets(residue: int, m: int) -> np.ndarray:
    """The frequencies ``4 gamma + residue`` for gamma in Gamma_m."""
    if int(residue) != residue or residue < 0:
        raise ValueError("residue must be a nonnegative integer")
    return check_frequencies(4 * enumerate_level(canonical(), m).elements + int(residue))


def residue_component(residue: int, t, m: int, cfg: ProductConfig):
    """``c_residue(t) = sum_{gamma in Gamma_m} mu_hat_K(t - 4 gamma - residue)**2``."""
    return spectral_fn(residue_offsets(residue, m), t, cfg)


def make_grid(t_from: float, t_to: float, step: float) -> np.ndarray:
    """Uniform grid ``t_from, t_from + step, ..., t_to`` (endpoint included when it lands)."""
    if not (math.isfinite(t_from) and math.isfinite(t_to) and math.isfinite(step)):
        raise ValueError("grid bounds must be finite")
    if step <= 0:
        raise ValueError("step must be positive")
    if t_to < t_from:
        raise ValueError("empty or inverted range")
    count = int(math.floor((t_to - t_from) / step + 1e-9)) + 1
    return np.round(t_from + step * np.arange(count), 12)


def parse_component(label: str) -> list[int]:
    """``"c1"`` -> [1]; ``"c0+c1"`` -> [0, 1]."""
    parts = label.split("+")
    out = []
    for part in parts:
        match = _LABEL.fullmatch(part.strip())
        if not match:
            raise ValueError(f"bad component label {label!r}; expected e.g. 'c1' or 'c0+c1'")
        out.append(int(match.group(1)))
    return out


@dataclass
class SpectralSample:
    grid: np.ndarray
    per_residue: dict[str, np.ndarray]
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        for label, values in self.per_residue.items():
            if len(values) != len(self.grid):
                raise ValueError(f"column {label!r} does not match the grid length")

    def __getitem__(self, label: str) -> np.ndarray:
        return self.per_residue[label]

    def to_csv(self) -> str:
        """Header ``t,<labels>``; 12 significant digits; LF line endings."""
        buf = io.StringIO()
        labels = list(self.per_residue)
        buf.write(",".join(["t", *labels]) + "\n")
        cols = [self.per_residue[label] for label in labels]
        for i, t in enumerate(self.grid):
            row = [_fmt(t)] + [_fmt(col[i]) for col in cols]
            buf.write(",".join(row) + "\n")
        return buf.getvalue()


def _fmt(x: float) -> str:
    s = f"{float(x):.12g}"
    return "0" if s == "-0" else s


def sample_grid(
    components,
    t_from: float,
    t_to: float,
    step: float,
    m: int,
    cfg: ProductConfig | None = None,
    *,
    factors: int = 16,
    workers: int | None = None,
) -> SpectralSample:
    """Evaluate residue components such as ``["c0", "c1", "c0+c1"]`` on a grid.

    Each ``c<r>`` sums over Gamma_m.  When ``cfg`` is omitted, one covering
    the grid and every requested offset is built with ``factors`` factors.
    """
    grid = make_grid(t_from, t_to, step)
    labels = list(components)
    if not labels:
        raise ValueError("no components requested")
    residues = sorted({r for label in labels for r in parse_component(label)})
    offsets = {r: residue_offsets(r, m) for r in residues}
    t_max = float(np.abs(grid).max())
    if cfg is None:
        cfg = ProductConfig.covering(factors, t_max, np.concatenate(list(offsets.values())))
    values = {}
    for r in residues:
        _check_cover(grid, offsets[r], cfg)
        values[r] = _sums(grid, offsets[r], cfg.factors, workers)
    columns = {}
    for label in labels:
        parts = parse_component(label)
        col = values[parts[0]].copy()
        for r in parts[1:]:
            col = col + values[r]
        columns[label] = col
    meta = {
        "factors": cfg.factors,
        "domain_radius": cfg.domain_radius,
        "level": m,
        "terms_per_component": 2**m,
        "tail_bound": tail_bound(cfg),
        "step": step,
    }
    return SpectralSample(grid, columns, meta)


def periodicity_defect(sample: SpectralSample, component: str = "c1", period: float = 2.0) -> float:
    """``max |c(t + period) - c(t)|`` over grid pairs spaced exactly ``period`` apart."""
    grid = sample.grid
    values = sample[component]
    j = np.searchsorted(grid, grid + period - 1e-9)
    ok = j < len(grid)
    ok[ok] = np.abs(grid[j[ok]] - grid[ok] - period) < 1e-9
    if not ok.any():
        raise ValueError(f"grid has no pairs spaced by {period}")
    return float(np.abs(values[j[ok]] - values[ok]).max())


@dataclass
class CompletenessReport:
    system: str
    level: int
    factors: int
    domain_radius: float
    max_deficiency: float
    max_overshoot: float
    argmax_t: float
    overshoot_bound: float
    threshold: float | None
    values: np.ndarray = field(repr=False, default=None)

    @property
    def passed(self) -> bool:
        ok = self.max_overshoot <= self.overshoot_bound
        if self.threshold is not None:
            ok = ok and self.max_deficiency < self.threshold
        return ok

    def to_dict(self) -> dict:
        return {
            "config": {
                "set": self.system,
                "m": self.level,
                "factors": self.factors,
                "domain_radius": self.domain_radius,
                "threshold": self.threshold,
                "overshoot_bound": self.overshoot_bound,
            },
            "maxDeficiency": self.max_deficiency,
            "maxOvershoot": self.max_overshoot,
            "argmaxT": self.argmax_t,
            "pass": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def completeness_defect(
    ds: DigitSystem,
    grid,
    m: int,
    cfg: ProductConfig | None = None,
    *,
    factors: int = 20,
    threshold: float | None = None,
    workers: int | None = None,
) -> CompletenessReport:
    """Deficiency and overshoot of the spectral function of ``enumerate_level(ds, m)``."""
    grid = np.atleast_1d(np.asarray(grid, dtype=np.float64))
    if grid.size == 0:
        raise ValueError("empty grid")
    levels = enumerate_level(ds, m)
    if cfg is None:
        cfg = ProductConfig.covering(factors, float(np.abs(grid).max()), levels.elements)
    _check_cover(grid, levels.elements, cfg)
    c = _sums(grid, levels.elements, cfg.factors, workers)
    short = np.maximum(1.0 - c, 0.0)
    over = np.maximum(c - 1.0, 0.0)
    i = int(np.argmax(short))
    return CompletenessReport(
        system=ds.describe(),
        level=m,
        factors=cfg.factors,
        domain_radius=cfg.domain_radius,
        max_deficiency=float(short[i]),
        max_overshoot=float(over.max()),
        argmax_t=float(grid[i]),
        overshoot_bound=bessel_slack(len(levels), cfg),
        threshold=threshold,
        values=c,
    )
