"""Hybrid (approximate-functional-equation) evaluation in the critical
strip, mixing a truncated Dirichlet-type sum with a truncated dual sum
of gamma factors Gamma(1-s)(2 pi i n)^{s-1} and explicit corrections.

For split x > 0 and cutoff y = t/(2 pi x), the representation is

    zeta^{(r)}(s, alpha) = (x^{1-s}/(s-1))^{(r)}
      + sum_{0<=n<=x-alpha} ((n+alpha)^{-s})^{(r)}
      + sum_{1<=|n|<=y} e^{2 pi i n alpha} (Gamma(1-s)(2 pi i n)^{s-1})^{(r)}
      + (x^{-s})^{(r)} [ psi(x-alpha) + sum_{1<=|n|<=y} e^{2 pi i n(x-alpha)}/(2 pi i n) ]
      - sum_{1<=|n|<=y} int_0^x e^{2 pi i n(u-alpha)} (u^{-s})^{(r)} du
      - int_x^inf (psi(u-alpha)/u)(s u^{-s})^{(r)} du
      - sum_{1<=|n|<=y} (e^{-2 pi i n alpha}/(2 pi i n))
            int_x^inf e^{2 pi i n u} u^{-1} (s u^{-s})^{(r)} du,

where the two |n| > y series have been folded into the sawtooth terms
through psi(v) = -sum_{|n|>=1} e^{2 pi i n v}/(2 pi i n).  When y < 1
every n-indexed piece is empty and the assembly coincides term by term
with the plain split representation.

The L-function variant applies the same core per residue class through
Z^{(r)}(s,a,q) = sum_l C(r,l)(-log q)^{r-l} q^{-s} zeta^{(l)}(s, a/q)
with split X/q, so the cutoff becomes y = q t/(2 pi X).

Gamma-factor derivatives are analytic (digamma/trigamma log-derivatives),
which caps the order at r <= 2.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .characters import DirichletCharacter
from .evaluate import _psi_at_split, _split_floor, pole_term_derivs
from .gammafn import complex_gamma, digamma, trigamma
from .sawtooth import (
    EvalResult,
    psi_tail_powers,
    pure_osc_tail_powers,
    segment_osc_power_log,
)

__all__ = ["AfeConfig", "GammaFactor", "afe_hurwitz", "afe_l", "gamma_factor_derivs"]

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class AfeConfig:
    """Split parameter, derivative order and the derived cutoff y."""

    split: float
    derivative_order: int
    cutoff: float

    @classmethod
    def for_point(cls, s: complex, split: float, order: int, q: int = 1) -> "AfeConfig":
        return cls(split=split, derivative_order=order, cutoff=q * complex(s).imag / (_TWO_PI * split))


def gamma_factor_derivs(s: complex, n: int, rmax: int, scale: float = 1.0) -> list[complex]:
    """d^r/ds^r of Gamma(1-s)(2 pi i n / scale)^{s-1} for r = 0..rmax (rmax <= 2).

    log(2 pi i n) takes the principal branch log(2 pi |n|/scale) +
    i (pi/2) sign(n); derivatives multiply by powers of the log-derivative
    -psi0(1-s) + log(2 pi i n / scale) plus the trigamma correction.
    """
    if n == 0:
        raise ValueError("gamma factors are indexed by nonzero n")
    if rmax > 2:
        raise ValueError("analytic gamma-factor derivatives are provided for r <= 2")
    ln = math.log(_TWO_PI * abs(n) / scale) + 1j * math.copysign(math.pi / 2.0, n)
    base = complex_gamma(1.0 - s) * cmath.exp((s - 1.0) * ln)
    out = [base]
    if rmax >= 1:
        d1 = -digamma(1.0 - s) + ln
        out.append(base * d1)
    if rmax >= 2:
        out.append(base * (d1 * d1 + trigamma(1.0 - s)))
    return out


@dataclass(frozen=True)
class GammaFactor:
    """Gamma(1-s)(2 pi i n)^{s-1} with its s-derivatives up to order 2."""

    s: complex
    n: int
    value: complex
    derivatives: tuple[complex, ...]

    @classmethod
    def compute(cls, s: complex, n: int, order: int = 2) -> "GammaFactor":
        d = gamma_factor_derivs(complex(s), n, order)
        return cls(s=complex(s), n=n, value=d[0], derivatives=tuple(d))


def _afe_core(s: complex, alpha: float, r: int, x: float) -> tuple[complex, float]:
    """The strip representation without its pole term."""
    t = s.imag
    y = t / (_TWO_PI * x)
    nmid = math.floor(y + 1e-12)
    if nmid >= 1 and s.real >= 1.0:
        raise ValueError("a nonempty dual sum needs Re(s) < 1 (singular segment integrals at Re(s) = 1)")
    val = 0.0 + 0.0j
    err = 0.0
    # finite (n + alpha)-sum
    nmax = _split_floor(x - alpha)
    for n in range(0, nmax + 1):
        w = n + alpha
        lw = math.log(w)
        val += cmath.exp(-s * lw) * (-lw) ** r
    # sawtooth boundary, with the |n| > y Fourier remainder folded in
    lx = math.log(x)
    xs = cmath.exp(-s * lx) * (-lx) ** r
    four = sum(math.sin(_TWO_PI * n * (x - alpha)) / (math.pi * n) for n in range(1, nmid + 1))
    val += xs * (_psi_at_split(x - alpha) + four)
    # plain sawtooth tail
    tails, terrs = psi_tail_powers(x, alpha, -s - 1.0, r)
    sign = (-1.0) ** r
    val += sign * (r * tails[r - 1] - s * tails[r]) if r else -s * tails[0]
    err += (r * terrs[r - 1] if r else 0.0) + abs(s) * terrs[r]
    # dual gamma-factor sum, segment integrals, and oscillatory tails
    for n in range(1, nmid + 1):
        for nn in (n, -n):
            g = gamma_factor_derivs(s, nn, r)[r]
            val += cmath.exp(2j * math.pi * nn * alpha) * g
            seg = segment_osc_power_log(nn, -s, r, x)
            val -= cmath.exp(-2j * math.pi * nn * alpha) * sign * seg[r]
            pv, pe = pure_osc_tail_powers(nn, -s - 1.0, r, x)
            combo = -sign * (r * pv[r - 1] - s * pv[r]) if r else s * pv[0]
            cerr = (r * pe[r - 1] if r else 0.0) + abs(s) * pe[r]
            w = cmath.exp(-2j * math.pi * nn * alpha) / (2j * math.pi * nn)
            val -= w * combo
            err += abs(w) * cerr + 1e-15 * abs(seg[r])
    return val, err


def afe_hurwitz(s: complex, alpha: float, r: int, x: float) -> EvalResult:
    """zeta^{(r)}(s, alpha) in the strip 0 <= Re(s) <= 1 via the hybrid form."""
    s = complex(s)
    if not 0.0 <= s.real <= 1.0:
        raise ValueError("the hybrid representation is stated for 0 <= Re(s) <= 1")
    if s.imag < 0.0:
        raise ValueError("needs Im(s) >= 0; conjugate the result for Im(s) < 0")
    if s == 1:
        raise ValueError("s = 1 is the pole; use the coefficient operations instead")
    if not 0.0 < alpha <= 1.0:
        raise ValueError("alpha must lie in (0, 1]")
    if not 0 <= r <= 2:
        raise ValueError("derivative order is capped at 2 (analytic gamma-factor derivatives)")
    if not x > 0.0:
        raise ValueError("split must be positive")
    core, err = _afe_core(s, alpha, r, x)
    pole = pole_term_derivs(s, x, r)[r]
    return EvalResult(core + pole, err)


def afe_l(s: complex, chi: DirichletCharacter, r: int, X: float) -> EvalResult:
    """L^{(r)}(s, chi) in the strip for non-principal chi, cutoff y = qt/(2 pi X).

    Assembled per residue class from the Hurwitz core with split X/q; the
    pole terms cancel against sum_a chi(a) = 0 and are never computed.
    """
    if chi.is_principal:
        raise ValueError("needs a non-principal character")
    s = complex(s)
    if not 0.0 <= s.real <= 1.0:
        raise ValueError("the hybrid representation is stated for 0 <= Re(s) <= 1")
    if s.imag < 0.0:
        raise ValueError("needs Im(s) >= 0; conjugate the result for Im(s) < 0")
    if not 0 <= r <= 2:
        raise ValueError("derivative order is capped at 2 (analytic gamma-factor derivatives)")
    if not X > 0.0:
        raise ValueError("split must be positive")
    q = chi.modulus
    lq = math.log(q)
    qs = cmath.exp(-s * lq)
    val = 0.0 + 0.0j
    err = 0.0
    for a in range(1, q + 1):
        ca = chi(a)
        if ca == 0:
            continue
        parts = [_afe_core(s, a / q, l, X / q) for l in range(r + 1)]
        acc = 0.0 + 0.0j
        eacc = 0.0
        for l in range(r + 1):
            c = math.comb(r, l) * (-lq) ** (r - l)
            acc += c * parts[l][0]
            eacc += abs(c) * parts[l][1]
        val += ca * qs * acc
        err += abs(qs) * eacc
    return EvalResult(val, err)
