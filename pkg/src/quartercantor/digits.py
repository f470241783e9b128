"""Frequency sets generated by radix-4 digit rules.

The canonical spectrum ``Gamma = {sum a_i 4**i : a_i in {0, 1}}``, the scaled
set ``p * Gamma`` and the additive set ``4 Gamma u (4 Gamma + p)`` are all
finite-digit expansions in base 4 where each position draws its digit from a
two-element set containing 0.  A :class:`DigitSystem` records one digit set
per low position plus a tail digit set for every higher position.
"""
from __future__ import annotations

from dataclasses import dataclass
import json

import numpy as np

from .numerics import BASE, FrequencyOverflowError, check_frequency, zero_mask
from .reports import CheckReport

MAX_LEVEL = 14


@dataclass(frozen=True)
class DigitSystem:
    position_digits: tuple[tuple[int, ...], ...]
    tail_digits: tuple[int, ...]
    name: str = ""
    base: int = BASE

    def __post_init__(self):
        if self.base != BASE:
            raise ValueError("only base 4 is supported")
        object.__setattr__(
            self, "position_digits", tuple(tuple(int(d) for d in ds) for ds in self.position_digits)
        )
        object.__setattr__(self, "tail_digits", tuple(int(d) for d in self.tail_digits))
        for ds in (*self.position_digits, self.tail_digits):
            if len(ds) != 2 or 0 not in ds:
                raise ValueError(f"digit set {ds} must have exactly two elements, one of them 0")
            if any(d < 0 for d in ds):
                raise ValueError(f"digit set {ds} has a negative digit")
            if len({d % BASE for d in ds}) != len(ds):
                raise ValueError(f"digits in {ds} are not distinct mod 4")

    def digits_at(self, position: int) -> tuple[int, ...]:
        if position < len(self.position_digits):
            return self.position_digits[position]
        return self.tail_digits

    def describe(self) -> str:
        return self.name or f"digits{list(map(list, self.position_digits))}+{list(self.tail_digits)}"

    def level(self, m: int) -> "LevelSet":
        return enumerate_level(self, m)

    def __contains__(self, n) -> bool:
        return contains(self, n)


@dataclass(frozen=True, eq=False)
class LevelSet:
    """All expansions of length m of a digit system, sorted ascending."""

    system: DigitSystem
    level: int
    elements: np.ndarray

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return (int(x) for x in self.elements)

    def __contains__(self, n):
        i = np.searchsorted(self.elements, n)
        return bool(i < len(self.elements) and self.elements[i] == n)

    def __eq__(self, other):
        if isinstance(other, LevelSet):
            return np.array_equal(self.elements, other.elements)
        return NotImplemented

    __hash__ = None

    def as_set(self) -> set[int]:
        return set(self)

    def to_json(self) -> str:
        return json.dumps(self.elements.tolist())


def canonical() -> DigitSystem:
    return DigitSystem((), (0, 1), name="canonical")


def _check_odd(p) -> int:
    if isinstance(p, bool) or int(p) != p or p < 1 or p % 2 == 0:
        raise ValueError(f"p must be an odd positive integer, got {p!r}")
    return int(p)


def scaled(p: int) -> DigitSystem:
    """``p * Gamma``: every position uses the digit set {0, p}."""
    p = _check_odd(p)
    if p == 1:
        return canonical()
    return DigitSystem((), (0, p), name=f"scaled({p})")


def additive(p: int) -> DigitSystem:
    """``4 Gamma u (4 Gamma + p)``: digit set {0, p} at position 0, {0, 1} above."""
    p = _check_odd(p)
    if p == 1:
        return canonical()
    return DigitSystem(((0, p),), (0, 1), name=f"additive({p})")


def enumerate_level(ds: DigitSystem, m: int) -> LevelSet:
    """Every ``sum_{i<m} d_i 4**i`` with ``d_i`` drawn from position i's digit set."""
    if int(m) != m or m < 0:
        raise ValueError(f"level must be a nonnegative integer, got {m!r}")
    if m > MAX_LEVEL:
        raise ValueError(f"level {m} exceeds the maximum {MAX_LEVEL}")
    values = [0]
    for i in range(m):
        scale = BASE**i
        values = [v + d * scale for d in ds.digits_at(i) for v in values]
    try:
        for v in (min(values), max(values)):
            check_frequency(v)
    except FrequencyOverflowError as exc:
        raise FrequencyOverflowError(f"{ds.describe()} at level {m}: {exc}") from None
    elements = np.array(sorted(values), dtype=np.int64)
    if len(elements) != 2**m or np.any(np.diff(elements) == 0):
        raise AssertionError(f"digit expansions of {ds.describe()} at level {m} are not unique")
    elements.setflags(write=False)
    return LevelSet(ds, m, elements)


def contains(ds: DigitSystem, n) -> bool:
    """Membership by peeling base-4 digits off the bottom of n."""
    n = check_frequency(n)
    position = 0
    while n != 0:
        if n < 0:
            return False
        match = [d for d in ds.digits_at(position) if (n - d) % BASE == 0]
        if not match:
            return False
        n = (n - match[0]) // BASE
        position += 1
    return True


def invariance_check(m: int) -> CheckReport:
    """``Gamma_m = 4 Gamma_{m-1}  disjoint-union  (4 Gamma_{m-1} + 1)``."""
    if m < 1:
        raise ValueError("invariance_check needs m >= 1")
    params = {"m": m}
    whole = enumerate_level(canonical(), m)
    prev = enumerate_level(canonical(), m - 1).elements
    left, right = set((4 * prev).tolist()), set((4 * prev + 1).tolist())
    overlap = left & right
    if overlap:
        n = min(overlap)
        return CheckReport("invariance", params, False, (n,), "4G and 4G+1 overlap")
    union = left | right
    diff = union.symmetric_difference(whole.as_set())
    if diff:
        n = min(diff)
        return CheckReport("invariance", params, False, (n,), "union differs from Gamma_m")
    return CheckReport(
        "invariance", params, True, None, f"{len(whole)} elements split {len(left)}+{len(right)}"
    )


def orthogonality_check(levels: LevelSet) -> CheckReport:
    """Exact pairwise orthogonality: ``mu_hat(b - a) == 0`` for all distinct a, b."""
    elems = levels.elements
    params = {"set": levels.system.describe(), "m": levels.level}
    for i in range(len(elems) - 1):
        diffs = elems[i + 1:] - elems[i]
        bad = np.flatnonzero(~zero_mask(diffs))
        if bad.size:
            a, b = int(elems[i]), int(elems[i + 1 + bad[0]])
            return CheckReport("orthogonality", params, False, (a, b), f"mu_hat({b - a}) != 0")
    n = len(elems)
    return CheckReport("orthogonality", params, True, None, f"{n * (n - 1) // 2} pairs")
