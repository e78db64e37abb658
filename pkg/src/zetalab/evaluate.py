"""Hurwitz, progression, Dirichlet-L and Lerch zeta values and their
s-derivatives for Re(s) > 0.

Each evaluator assembles the same Euler-summation representation with a
free split parameter x (or X): a finite Dirichlet-type sum up to x, a
pole-term derivative, a sawtooth boundary term at the split, and
rigorously bounded sawtooth tail integrals.  The representation is exact
for every split, which the test suite exploits as its master property.

Derivative order r differentiates everything term by term:

    d^r/ds^r (n+a)^{-s}       = (n+a)^{-s} (-log(n+a))^r
    d^r/ds^r (s u^{-s})       = u^{-s} (-log u)^{r-1} (r - s log u)
    d^r/ds^r (x^{1-s}/(s-1))  = sum_l C(r,l) (-log x)^{r-l} x^{1-s} (-1)^l l!/(s-1)^{l+1}
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .characters import DirichletCharacter
from .sawtooth import EvalResult, psi_osc_tail_powers, psi_tail_powers, pure_osc_tail_powers

__all__ = [
    "HurwitzArgs",
    "LerchArgs",
    "MAX_ORDER",
    "hurwitz_deriv",
    "z_deriv",
    "l_deriv",
    "lerch_deriv",
    "direct_series_oracle",
    "pole_term_derivs",
    "default_split",
]

MAX_ORDER = 24  # binary64 cancellation in (-log u)^{r-1}(r - s log u) grows beyond


def _check_order(r: int) -> None:
    if not 0 <= r <= MAX_ORDER:
        raise ValueError(f"derivative order must lie in 0..{MAX_ORDER}")


def _check_alpha(alpha: float) -> None:
    if not 0.0 < alpha <= 1.0:
        raise ValueError("alpha must lie in (0, 1]")


@dataclass(frozen=True)
class HurwitzArgs:
    """Arguments for a Hurwitz zeta derivative in the half-plane Re(s) > 0."""

    s: complex
    alpha: float
    order: int = 0
    split: float | None = None

    def __post_init__(self):
        s = complex(self.s)
        if s.real <= 0.0:
            raise ValueError("evaluation requires Re(s) > 0")
        if s == 1:
            raise ValueError("s = 1 is the pole; use the coefficient operations instead")
        _check_alpha(self.alpha)
        _check_order(self.order)
        if self.split is not None and not self.split > 0.0:
            raise ValueError("split parameter must be positive")


@dataclass(frozen=True)
class LerchArgs:
    """Arguments for a Lerch zeta derivative; oscillation strictly inside (0,1)."""

    lam: float
    alpha: float
    s: complex
    order: int = 0
    split: float | None = None

    def __post_init__(self):
        if not 0.0 < self.lam < 1.0:
            raise ValueError("lambda must lie strictly inside (0, 1); integer lambda is the Hurwitz case")
        _check_alpha(self.alpha)
        if complex(self.s).real <= 0.0:
            raise ValueError("evaluation requires Re(s) > 0")
        _check_order(self.order)
        if self.split is not None and not self.split > 0.0:
            raise ValueError("split parameter must be positive")


def default_split(s: complex, alpha: float) -> float:
    """Keeps the finite sum short while the tail integrand decays."""
    return max(1.0, abs(complex(s).imag) / (2.0 * math.pi)) + alpha


_SNAP = 1e-9


def _split_floor(v: float) -> int:
    """Endpoint count at the split: ties (and float dust below them) included."""
    return math.floor(v + _SNAP)


def _psi_at_split(v: float) -> float:
    """Sawtooth at the split with the same integer part the sum count used.

    Keeps the finite-sum jump and the boundary-term jump cancelling exactly
    even when v sits within rounding dust of an integer.
    """
    return v - _split_floor(v) - 0.5


def pole_term_derivs(s: complex, x: float, rmax: int) -> list[complex]:
    """d^r/ds^r (x^{1-s}/(s-1)) for r = 0..rmax by the Leibniz closed form."""
    s = complex(s)
    lx = math.log(x)
    xp = cmath.exp((1.0 - s) * lx)
    out = []
    for r in range(rmax + 1):
        acc = 0.0 + 0.0j
        for l in range(r + 1):
            acc += (
                math.comb(r, l)
                * (-lx) ** (r - l)
                * (-1.0) ** l
                * math.factorial(l)
                / (s - 1.0) ** (l + 1)
            )
        out.append(xp * acc)
    return out


def _finite_power_sum(points: np.ndarray, s: complex, r: int, weights: np.ndarray | None = None) -> complex:
    """sum w_n p_n^{-s} (-log p_n)^r over the given points."""
    if points.size == 0:
        return 0.0 + 0.0j
    logs = np.log(points)
    terms = np.exp(-s * logs) * (-logs) ** r if r else np.exp(-s * logs)
    if weights is not None:
        terms = terms * weights
    return complex(terms.sum())


def _hurwitz_core(s: complex, alpha: float, r: int, x: float) -> tuple[complex, float]:
    """Representation without the pole term: finite sum + boundary + tail."""
    nmax = _split_floor(x - alpha)
    pts = alpha + np.arange(0, nmax + 1, dtype=float) if nmax >= 0 else np.empty(0)
    val = _finite_power_sum(pts, s, r)
    lx = math.log(x)
    val += _psi_at_split(x - alpha) * cmath.exp(-s * lx) * (-lx) ** r
    tails, terrs = psi_tail_powers(x, alpha, -s - 1.0, r)
    sign = (-1.0) ** r
    tail = sign * (r * tails[r - 1] - s * tails[r]) if r else -s * tails[0]
    err = r * terrs[r - 1] + abs(s) * terrs[r] if r else abs(s) * terrs[0]
    return val + tail, err


def hurwitz_deriv(args: HurwitzArgs) -> EvalResult:
    """d^r/ds^r zeta(s, alpha) via the split-sum representation."""
    s = complex(args.s)
    x = args.split if args.split is not None else default_split(s, args.alpha)
    core, err = _hurwitz_core(s, args.alpha, args.order, x)
    pole = pole_term_derivs(s, x, args.order)[args.order]
    return EvalResult(core + pole, err)


def _z_core(s: complex, a: int, q: int, r: int, X: float) -> tuple[complex, float]:
    """Z-representation without its pole term (1/q) d^r (X^{1-s}/(s-1))."""
    kmax = _split_floor((X - a) / q)
    pts = a + q * np.arange(0, kmax + 1, dtype=float) if kmax >= 0 else np.empty(0)
    val = _finite_power_sum(pts, s, r)
    lX = math.log(X)
    val += _psi_at_split((X - a) / q) * cmath.exp(-s * lX) * (-lX) ** r
    tails, terrs = psi_tail_powers(X / q, a / q, -s - 1.0, r)
    lq = math.log(q)
    qs = cmath.exp(-s * lq)
    sign = (-1.0) ** r
    acc = 0.0 + 0.0j
    err = 0.0
    for m in range(r + 1):
        cm = 0.0 + 0.0j
        if r and m <= r - 1:
            cm += r * math.comb(r - 1, m) * lq ** (r - 1 - m)
        cm -= s * math.comb(r, m) * lq ** (r - m)
        acc += cm * tails[m]
        err += abs(cm) * terrs[m]
    return val + sign * qs * acc, abs(qs) * err


def z_deriv(s: complex, a: int, q: int, r: int, X: float | None = None) -> EvalResult:
    """d^r/ds^r Z(s, a, q) with Z(s, a, q) = q^{-s} zeta(s, a/q)."""
    s = complex(s)
    if s.real <= 0.0:
        raise ValueError("evaluation requires Re(s) > 0")
    if s == 1:
        raise ValueError("s = 1 is the pole; use the coefficient operations instead")
    if q < 1 or not 1 <= a <= q:
        raise ValueError("need 1 <= a <= q")
    _check_order(r)
    if X is None:
        X = q * default_split(s, a / q)
    core, err = _z_core(s, a, q, r, X)
    pole = pole_term_derivs(s, X, r)[r] / q
    return EvalResult(core + pole, err)


def l_deriv(s: complex, chi: DirichletCharacter, r: int, X: float | None = None) -> EvalResult:
    """d^r/ds^r L(s, chi) for non-principal chi; s = 1 is allowed (entire)."""
    if chi.is_principal:
        raise ValueError("the series representation needs a non-principal character")
    s = complex(s)
    if s.real <= 0.0:
        raise ValueError("evaluation requires Re(s) > 0")
    _check_order(r)
    q = chi.modulus
    if X is None:
        X = q * default_split(s, 1.0)
    val = 0.0 + 0.0j
    err = 0.0
    for a in range(1, q + 1):
        ca = chi(a)
        if ca == 0:
            continue
        core, cerr = _z_core(s, a, q, r, X)
        val += ca * core
        err += cerr
    return EvalResult(val, err)


def lerch_deriv(args: LerchArgs) -> EvalResult:
    """d^r/ds^r phi(lambda, alpha, s) via the oscillatory split representation."""
    lam, alpha, r = args.lam, args.alpha, args.order
    s = complex(args.s)
    x = args.split if args.split is not None else default_split(s, alpha)
    nmax = _split_floor(x - alpha)
    val = 0.0 + 0.0j
    if nmax >= 0:
        n = np.arange(0, nmax + 1, dtype=float)
        pts = alpha + n
        val += _finite_power_sum(pts, s, r, weights=np.exp(2j * np.pi * lam * n))
    lx = math.log(x)
    val += (
        cmath.exp(2j * math.pi * lam * (x - alpha))
        * _psi_at_split(x - alpha)
        * cmath.exp(-s * lx)
        * (-lx) ** r
    )
    sign = (-1.0) ** r
    pure, perr = pure_osc_tail_powers(lam, -s, r, x)
    phase = cmath.exp(-2j * math.pi * lam * alpha)
    val += sign * phase * pure[r]
    err = perr[r]
    w1, w1err = psi_osc_tail_powers(lam, alpha, -s, r, x)
    val += 2j * math.pi * lam * sign * w1[r]
    err += 2.0 * math.pi * lam * w1err[r]
    w2, w2err = psi_osc_tail_powers(lam, alpha, -s - 1.0, r, x)
    tail2 = sign * (r * w2[r - 1] - s * w2[r]) if r else -s * w2[0]
    val += tail2
    err += (r * w2err[r - 1] if r else 0.0) + abs(s) * w2err[r]
    return EvalResult(val, err)


def direct_series_oracle(s: complex, alpha: float, lam: float, r: int, N: int) -> complex:
    """(-1)^r sum_{n=0}^{N} e^{2 pi i lam n} (n+alpha)^{-s} log^r(n+alpha).

    Plain partial sum for Re(s) > 1; the caller chooses N for the target
    accuracy.  lam = 0 gives the Hurwitz case.
    """
    s = complex(s)
    if s.real <= 1.0:
        raise ValueError("the direct series needs Re(s) > 1")
    _check_alpha(alpha)
    if N < 0:
        raise ValueError("N must be nonnegative")
    total = 0.0 + 0.0j
    chunk = 1_000_000
    for lo in range(0, N + 1, chunk):
        hi = min(lo + chunk, N + 1)
        n = np.arange(lo, hi, dtype=float)
        logs = np.log(n + alpha)
        terms = np.exp(-s * logs)
        if r:
            terms = terms * logs**r
        if lam:
            terms = terms * np.exp(2j * np.pi * lam * n)
        total += complex(terms.sum())
    return (-1.0) ** r * total
