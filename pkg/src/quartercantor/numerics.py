"""Fourier transform of the 1/4 Cantor measure.

The transform is the infinite cosine product

    mu_hat(t) = prod_{k >= 1} cos(2 pi t / 4**k)

evaluated here with a finite number of factors and a certified bound on the
omitted tail.  A second, independent route sums over the 2**L atoms of the
level-L approximation of the measure, which is analytically equal to the
L-factor product.

Zero set
--------
``cos(2 pi n / 4**k)`` vanishes iff ``n / 4**k`` is an odd multiple of 1/4,
i.e. ``n = 4**(k-1) * odd``.  Hence for an integer n, ``mu_hat(n) == 0`` iff
``n != 0`` and ``n / 4**v4(n)`` is odd, and the vanishing factor is the one
with ``k = v4(n) + 1``.  All the other factors are nonzero, so the product
vanishes only through that single factor.
"""
from __future__ import annotations

from dataclasses import dataclass
import math

import numpy as np

BASE = 4

#: Frequencies are plain Python ints with ``|n| < FREQUENCY_CAP``.
FREQUENCY_CAP = 4**30

MAX_ATOM_LEVEL = 24

# 4**31 is the largest power of four that fits in int64.
_INT64_POWERS = 31


class FrequencyOverflowError(OverflowError):
    """A frequency label left the supported range ``|n| < 4**30``."""


def check_frequency(n) -> int:
    """Return ``n`` as an int, raising if it is not a valid frequency label."""
    if isinstance(n, (bool, np.bool_)) or not isinstance(n, (int, np.integer)):
        raise TypeError(f"frequency must be an integer, got {n!r}")
    n = int(n)
    if abs(n) >= FREQUENCY_CAP:
        raise FrequencyOverflowError(f"|{n}| exceeds the frequency cap 4**30")
    return n


def check_frequencies(values) -> np.ndarray:
    """Vectorized :func:`check_frequency`; returns an int64 array."""
    arr = np.asarray(values)
    if arr.size and not np.issubdtype(arr.dtype, np.integer):
        raise TypeError("frequencies must be integers")
    arr = arr.astype(np.int64)
    if arr.size and np.abs(arr).max() >= FREQUENCY_CAP:
        raise FrequencyOverflowError("frequency array exceeds the cap 4**30")
    return arr


@dataclass(frozen=True)
class ProductConfig:
    """Truncation of the cosine product.

    ``factors`` is the number K of cosine factors kept and ``domain_radius``
    the largest ``|t|`` the caller intends to evaluate; the tail bound is
    only valid inside that radius.
    """

    factors: int = 16
    domain_radius: float = 4.0

    def __post_init__(self):
        if int(self.factors) != self.factors or self.factors < 1:
            raise ValueError(f"factors must be a positive integer, got {self.factors!r}")
        if not self.domain_radius > 0 or not math.isfinite(self.domain_radius):
            raise ValueError(f"domain_radius must be positive, got {self.domain_radius!r}")

    @classmethod
    def covering(cls, factors: int, t_max: float, offsets=()) -> "ProductConfig":
        """Smallest config that covers ``t - n`` for ``|t| <= t_max`` and n in offsets."""
        shift = int(np.abs(np.asarray(offsets, dtype=np.int64)).max()) if len(offsets) else 0
        return cls(factors=factors, domain_radius=max(float(t_max) + shift, 1.0))

    def tail_bound(self) -> float:
        return tail_bound(self)


def v4(n) -> int:
    """4-adic valuation: the largest m with ``4**m`` dividing n."""
    n = check_frequency(n)
    if n == 0:
        raise ValueError("v4(0) is undefined")
    m = 0
    while n % 4 == 0:
        n //= 4
        m += 1
    return m


def is_zero_of_muhat(n) -> bool:
    """Exact test for ``mu_hat(n) == 0`` at an integer frequency n."""
    n = check_frequency(n)
    if n == 0:
        return False
    return (n // 4 ** v4(n)) % 2 == 1


def zero_mask(values) -> np.ndarray:
    """Vectorized :func:`is_zero_of_muhat` using int64 arithmetic only."""
    n = check_frequencies(values).copy()
    nonzero = n != 0
    for _ in range(30):
        strip = nonzero & (n % 4 == 0)
        if not strip.any():
            break
        n[strip] //= 4
    return nonzero & (n % 2 != 0)


def tail_bound(cfg: ProductConfig, factors: int | None = None) -> float:
    """Upper bound on ``|muhat_trunc(t, cfg) - mu_hat(t)|`` for ``|t| <= cfg.domain_radius``.

    Uses ``|1 - prod a_k| <= sum |1 - a_k|`` for ``|a_k| <= 1`` together with
    ``1 - cos x <= x**2 / 2``, which sums to ``(2 pi T)**2 / 2 * 16**-K / 15``.
    ``factors`` overrides ``cfg.factors`` (``factors=0`` gives the vacuous bound).
    """
    k = cfg.factors if factors is None else factors
    if k < 0:
        raise ValueError("factors must be nonnegative")
    return (2 * math.pi * cfg.domain_radius) ** 2 / 2 * 16.0 ** (-k) / 15


def _cos_product(frac, shift, factors: int) -> np.ndarray:
    """``prod_{k=1}^{K} cos(2 pi (frac + shift) / 4**k)`` with integer ``shift``.

    The integer part enters through ``shift mod 4**k`` computed exactly, so
    accuracy does not degrade with the size of the frequency.
    """
    frac = np.asarray(frac, dtype=np.float64)
    shift = np.asarray(shift, dtype=np.int64)
    out = np.ones(np.broadcast_shapes(frac.shape, shift.shape))
    for k in range(1, factors + 1):
        if k <= _INT64_POWERS:
            q = BASE**k
            phase = (shift % q).astype(np.float64) / q
        else:
            # |shift| < 4**30 < 4**k: the float division is already accurate
            phase = shift.astype(np.float64) / 4.0**k
        phase = phase + frac / 4.0**k
        phase = phase - np.round(phase)
        out = out * np.cos(2 * np.pi * phase)
    return out


def _split(t) -> tuple[np.ndarray, np.ndarray]:
    t = np.asarray(t)
    if np.issubdtype(t.dtype, np.integer):
        whole = check_frequencies(t)
        return np.zeros(whole.shape), whole
    t = t.astype(np.float64)
    whole = np.round(t)
    return t - whole, whole.astype(np.int64)


def _check_radius(t, cfg: ProductConfig):
    t = np.asarray(t)
    if np.issubdtype(t.dtype, np.integer):
        t = check_frequencies(t)
        if t.size and np.abs(t).max() > cfg.domain_radius:
            raise ValueError(f"|t| = {np.abs(t).max()} exceeds domain_radius {cfg.domain_radius}")
        return
    t = t.astype(np.float64)
    if not np.all(np.isfinite(t)):
        raise ValueError("t must be finite")
    if t.size and np.abs(t).max() > cfg.domain_radius:
        raise ValueError(
            f"|t| = {np.abs(t).max()} exceeds domain_radius {cfg.domain_radius}; "
            "the tail bound would not hold"
        )


def muhat_trunc(t, cfg: ProductConfig | None = None):
    """Truncated product ``prod_{k=1}^{K} cos(2 pi t / 4**k)``.

    Accepts a scalar or an array of t.  Integer input is treated as an exact
    frequency label.  Agrees with the exact transform to within
    :func:`tail_bound`.
    """
    cfg = ProductConfig() if cfg is None else cfg
    _check_radius(t, cfg)
    frac, whole = _split(t)
    out = _cos_product(frac, whole, cfg.factors)
    return float(out) if out.ndim == 0 else out


def muhat_at_offsets(t, offsets, factors: int) -> np.ndarray:
    """``mu_hat_K(t_i - n_j)`` as a ``(len(t), len(offsets))`` matrix.

    The integer offsets are subtracted exactly before any rounding happens,
    so shifting t and the offsets by the same integer gives bit-identical
    results.  No radius check; callers validate through their config.
    """
    frac, whole = _split(np.atleast_1d(t))
    offsets = check_frequencies(np.atleast_1d(offsets))
    shift = whole[:, None] - offsets[None, :]
    return _cos_product(frac[:, None], shift, factors)


def atoms(level: int) -> np.ndarray:
    """The 2**L atoms ``sum_{k<=L} eps_k 4**-k`` of the level-L measure.

    Built by iterating the two contractions ``x -> (x + 1)/4`` and
    ``x -> (x - 1)/4``, each carrying half the mass.
    """
    if int(level) != level or level < 0:
        raise ValueError("level must be a nonnegative integer")
    if level > MAX_ATOM_LEVEL:
        raise ValueError(f"level {level} exceeds {MAX_ATOM_LEVEL} (2**L atoms)")
    x = np.zeros(1)
    for _ in range(level):
        x = np.concatenate(((x + 1) / 4, (x - 1) / 4))
    return x


def muhat_atoms(t, level: int, *, chunk: int = 1 << 20):
    """Fourier transform of the level-L atomic measure at t (scalar or array).

    Independent of :func:`muhat_trunc`: it integrates ``exp(2 pi i t x)``
    against the equal-weight atoms directly.  The measure is symmetric, so
    only the real part is returned; the imaginary part is checked under
    ``__debug__``.
    """
    if level < 1:
        raise ValueError("level must be positive")
    x = atoms(level)
    ts = np.atleast_1d(np.asarray(t, dtype=np.float64))
    out = np.empty(ts.shape)
    for i, ti in enumerate(ts):
        re = 0.0
        im = 0.0
        for lo in range(0, x.size, chunk):
            arg = 2 * np.pi * ti * x[lo:lo + chunk]
            re += np.cos(arg).sum()
            if __debug__:
                im += np.sin(arg).sum()
        out[i] = re / x.size
        if __debug__:
            assert abs(im / x.size) < 1e-12, f"imaginary part {im / x.size} at t={ti}"
    return float(out[0]) if np.ndim(t) == 0 else out.reshape(np.shape(t))
