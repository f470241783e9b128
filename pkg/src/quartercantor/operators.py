"""Isometries of L^2(mu) acting on exponential labels.

Every operator here sends a basis exponential ``e_n`` either to another
exponential ``e_{n'}`` or to zero, so it is represented exactly by a partial
map on integer labels:

* ``S0: n -> 4n`` and ``S1: n -> 4n + 1`` (total on the integers),
* their adjoints, defined on Gamma only: ``S0*`` undoes ``S0`` on ``4 Gamma``
  and kills ``4 Gamma + 1``, symmetrically for ``S1*``,
* ``M_k: n -> n + k`` (multiplication by ``e_k``),
* ``U_p: gamma -> p gamma`` on Gamma,
* ``W~ = S0 S0* + M_{p-1} S1 S1*``, which fixes ``4 Gamma`` and sends
  ``4 gamma + 1`` to ``4 gamma + p``.

Identities between such operators are then finite set computations with no
tolerance involved.
"""
from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
import functools
import inspect
import math

from .digits import DigitSystem, additive, canonical, contains, enumerate_level
from .numerics import check_frequency
from .reports import CheckReport

MAX_CHECK_LEVEL = 12


class DomainError(ValueError):
    """A label was fed to an operator outside the domain it is defined on."""

    def __init__(self, message, label=None):
        super().__init__(message)
        self.counterexample = (label,)


class CollisionError(ValueError):
    """Two summands of a formal sum produced output for the same input or target."""

    def __init__(self, message, counterexample):
        super().__init__(message)
        self.counterexample = counterexample


@dataclass(frozen=True)
class Branch:
    """``n -> (alpha n + beta) / delta`` on ``{n : n = residue mod modulus}``."""

    alpha: int = 1
    beta: int = 0
    delta: int = 1
    modulus: int = 1
    residue: int = 0

    def __post_init__(self):
        if self.delta < 1 or self.modulus < 1:
            raise ValueError("delta and modulus must be positive")
        if not 0 <= self.residue < self.modulus:
            raise ValueError("residue must lie in [0, modulus)")
        # integrality on the whole residue class
        if (self.alpha * self.residue + self.beta) % self.delta or (self.alpha * self.modulus) % self.delta:
            raise ValueError(f"{self} does not map its residue class into the integers")

    def applies(self, n: int) -> bool:
        return n % self.modulus == self.residue

    def __call__(self, n: int) -> int:
        return check_frequency((self.alpha * n + self.beta) // self.delta)

    def overlaps(self, other: "Branch") -> bool:
        return (self.residue - other.residue) % math.gcd(self.modulus, other.modulus) == 0


class IndexOp:
    """Operator on exponentials, viewed as a partial map of labels.

    ``op(n)`` returns the image label, or None when ``e_n`` is sent to zero.
    Labels outside ``domain`` (when set) raise :class:`DomainError`.
    """

    name = "op"
    domain: DigitSystem | None = None

    def __call__(self, n) -> int | None:
        n = check_frequency(n)
        if self.domain is not None and not contains(self.domain, n):
            raise DomainError(f"{self.name} is only defined on {self.domain.describe()}; got {n}", n)
        return self._apply(n)

    def _apply(self, n: int) -> int | None:
        raise NotImplementedError

    def image(self, labels: Iterable[int]) -> dict[int, int | None]:
        return {int(n): self(int(n)) for n in labels}

    def act(self, coeffs: Mapping[int, complex]) -> dict[int, complex]:
        """Apply linearly to a finite combination ``sum c_n e_n``."""
        out: dict[int, complex] = {}
        for n, c in coeffs.items():
            for target in self._targets(n):
                out[target] = out.get(target, 0) + c
        return {k: v for k, v in out.items() if v != 0}

    def _targets(self, n) -> list[int]:
        target = self(n)
        return [] if target is None else [target]

    def __repr__(self):
        return f"<IndexOp {self.name}>"


class AffineOp(IndexOp):
    def __init__(self, name: str, branches: Iterable[Branch], domain: DigitSystem | None = None):
        self.name = name
        self.branches = tuple(branches)
        self.domain = domain
        for i, a in enumerate(self.branches):
            for b in self.branches[i + 1:]:
                if a.overlaps(b):
                    raise ValueError(f"{name}: branch domains {a} and {b} overlap")

    def _apply(self, n):
        for branch in self.branches:
            if branch.applies(n):
                return branch(n)
        return None


class Composition(IndexOp):
    """``outer o inner``: apply ``inner`` first."""

    def __init__(self, outer: IndexOp, inner: IndexOp):
        self.outer, self.inner = outer, inner
        self.name = f"{outer.name}.{inner.name}"
        self.domain = inner.domain

    def _apply(self, n):
        mid = self.inner._apply(n)
        return None if mid is None else self.outer(mid)


class FormalSum(IndexOp):
    """``f + g`` for operators whose supports are disjoint on the labels used.

    On a single basis vector at most one summand may be nonzero, otherwise
    the result is not a label map and :class:`CollisionError` is raised.
    """

    def __init__(self, *terms: IndexOp):
        self.terms = terms
        self.name = "(" + " + ".join(t.name for t in terms) + ")"
        domains = {t.domain for t in terms}
        self.domain = domains.pop() if len(domains) == 1 else None

    def _apply(self, n):
        hits = [(t, t(n)) for t in self.terms]
        hits = [(t, v) for t, v in hits if v is not None]
        if len(hits) > 1:
            raise CollisionError(
                f"{self.name}: summands {[t.name for t, _ in hits]} all act on {n}", (n,)
            )
        return hits[0][1] if hits else None

    def _targets(self, n):
        return [v for v in (t(n) for t in self.terms) if v is not None]


def compose(f: IndexOp, g: IndexOp) -> IndexOp:
    return Composition(f, g)


def add(f: IndexOp, g: IndexOp, labels: Iterable[int] | None = None) -> FormalSum:
    """Formal sum; with ``labels``, verify up front that the ranges stay disjoint."""
    total = FormalSum(f, g)
    if labels is not None:
        hit_by: dict[int, tuple[int, IndexOp]] = {}
        for n in labels:
            for term in (f, g):
                target = term(n)
                if target is None:
                    continue
                if target in hit_by and hit_by[target][1] is not term:
                    raise CollisionError(
                        f"{f.name} and {g.name} both reach label {target}",
                        (hit_by[target][0], n),
                    )
                hit_by[target] = (n, term)
    return total


def s0() -> AffineOp:
    return AffineOp("S0", [Branch(alpha=4)])


def s1() -> AffineOp:
    return AffineOp("S1", [Branch(alpha=4, beta=1)])


def s0_adj() -> AffineOp:
    return AffineOp("S0*", [Branch(delta=4, modulus=4, residue=0)], domain=canonical())


def s1_adj() -> AffineOp:
    return AffineOp("S1*", [Branch(beta=-1, delta=4, modulus=4, residue=1)], domain=canonical())


def m_shift(k: int) -> AffineOp:
    k = check_frequency(k)
    return AffineOp(f"M{k}", [Branch(beta=k)])


def _odd(p) -> int:
    if isinstance(p, bool) or int(p) != p or p < 1 or p % 2 == 0:
        raise ValueError(f"p must be an odd positive integer, got {p!r}")
    return int(p)


def u_p(p: int) -> AffineOp:
    p = _odd(p)
    return AffineOp(f"U{p}", [Branch(alpha=p)], domain=canonical())


def w_tilde(p: int) -> FormalSum:
    """``S0 S0* + M_{p-1} S1 S1*`` built from its factors."""
    p = _odd(p)
    op = add(compose(s0(), s0_adj()), compose(m_shift(p - 1), compose(s1(), s1_adj())))
    op.name = f"W~{p}"
    return op


def _reporting(check_name: str):
    """Turn an operator blowing up mid-check into a failing report."""

    def wrap(check):
        sig = inspect.signature(check)

        @functools.wraps(check)
        def run(*args, **kwargs):
            try:
                return check(*args, **kwargs)
            except (DomainError, CollisionError) as exc:
                params = dict(sig.bind(*args, **kwargs).arguments)
                return CheckReport(check_name, params, False, exc.counterexample, str(exc))

        return run

    return wrap


def _check_level(m: int):
    if int(m) != m or m < 0 or m > MAX_CHECK_LEVEL:
        raise ValueError(f"check level must be in [0, {MAX_CHECK_LEVEL}], got {m!r}")


def _first_mismatch(labels, lhs: IndexOp, rhs) -> tuple | None:
    for n in labels:
        a = lhs(n)
        b = rhs(n)
        if a != b:
            return (n, a, b)
    return None


@_reporting("cuntz")
def cuntz_check(m: int) -> CheckReport:
    """Cuntz relations for S0, S1 restricted to the labels Gamma_m."""
    if m < 1:
        raise ValueError("cuntz_check needs m >= 1")
    _check_level(m)
    params = {"m": m}
    labels = list(enumerate_level(canonical(), m))
    next_level = enumerate_level(canonical(), m + 1).as_set()
    ops = {0: (s0(), s0_adj()), 1: (s1(), s1_adj())}

    ranges = {}
    for i, (fwd, _) in ops.items():
        img = [fwd(n) for n in labels]
        seen: dict[int, int] = {}
        for n, v in zip(labels, img):
            if v in seen:
                return CheckReport("cuntz", params, False, (seen[v], n), f"S{i} not injective")
            seen[v] = n
        ranges[i] = seen
    both = ranges[0].keys() & ranges[1].keys()
    if both:
        v = min(both)
        return CheckReport("cuntz", params, False, (ranges[0][v], ranges[1][v]), "ranges of S0, S1 meet")
    union = ranges[0].keys() | ranges[1].keys()
    if union != next_level:
        n = min(union ^ next_level)
        return CheckReport("cuntz", params, False, (n,), "S0 and S1 ranges do not tile Gamma_{m+1}")

    identity = lambda n: n  # noqa: E731
    zero = lambda n: None  # noqa: E731
    for i, (_, adj) in ops.items():
        for j, (fwd, _) in ops.items():
            bad = _first_mismatch(labels, compose(adj, fwd), identity if i == j else zero)
            if bad:
                return CheckReport("cuntz", params, False, bad, f"S{i}* S{j} != delta_{i}{j} I")

    projections = add(compose(s0(), s0_adj()), compose(s1(), s1_adj()))
    bad = _first_mismatch(sorted(next_level), projections, identity)
    if bad:
        return CheckReport("cuntz", params, False, bad, "S0 S0* + S1 S1* != I")
    return CheckReport(
        "cuntz", params, True, None,
        f"injective, disjoint ranges tiling Gamma_{m + 1}, Si* Sj = delta_ij, sum of projections = I",
    )


@_reporting("lemma_us1")
def lemma_us1_check(p: int, m: int) -> CheckReport:
    """``U_p S1 = M_{p-1} S1 U_p`` and ``U_p S0 = S0 U_p`` on Gamma_m."""
    p = _odd(p)
    _check_level(m)
    params = {"p": p, "m": m}
    labels = list(enumerate_level(canonical(), m))
    up = u_p(p)
    pairs = [
        ("U_p S1 = M_{p-1} S1 U_p", compose(up, s1()), compose(m_shift(p - 1), compose(s1(), up))),
        ("U_p S0 = S0 U_p", compose(up, s0()), compose(s0(), up)),
    ]
    for label, lhs, rhs in pairs:
        bad = _first_mismatch(labels, lhs, rhs)
        if bad:
            return CheckReport("lemma_us1", params, False, bad, f"{label} fails")
    return CheckReport("lemma_us1", params, True, None, f"both identities hold on {len(labels)} labels")


@_reporting("w_tilde_bijection")
def w_tilde_bijection_check(p: int, m: int) -> CheckReport:
    """``W~`` fixes ``4 Gamma_m`` and maps ``4 Gamma_m + 1`` onto ``4 Gamma_m + p``.

    Also checks that ``W~(Gamma_{m+1})`` equals the additive set at level m + 1.
    """
    p = _odd(p)
    _check_level(m)
    params = {"p": p, "m": m}
    w = w_tilde(p)
    base = list(enumerate_level(canonical(), m))
    for g in base:
        if w(4 * g) != 4 * g:
            return CheckReport("w_tilde_bijection", params, False, (4 * g, w(4 * g)), "4 Gamma not fixed")
    images = {}
    for g in base:
        v = w(4 * g + 1)
        if v in images:
            return CheckReport("w_tilde_bijection", params, False, (images[v], 4 * g + 1), "not injective")
        images[v] = 4 * g + 1
    target = {4 * g + p for g in base}
    if images.keys() != target:
        n = min(images.keys() ^ target)
        return CheckReport("w_tilde_bijection", params, False, (n,), "image of 4 Gamma + 1 is not 4 Gamma + p")
    full = {w(n) for n in enumerate_level(canonical(), m + 1)}
    expected = enumerate_level(additive(p), m + 1).as_set()
    if full != expected:
        n = min(full ^ expected)
        return CheckReport("w_tilde_bijection", params, False, (n,), "W~(Gamma_{m+1}) != additive set")
    return CheckReport(
        "w_tilde_bijection", params, True, None,
        f"fixes {len(base)} labels of 4 Gamma, maps 4 Gamma + 1 onto 4 Gamma + {p}",
    )
