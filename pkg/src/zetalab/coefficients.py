"""Taylor/Laurent coefficient extraction at s = 1 and s = 0.

Conventions.  stieltjes_gamma returns the classical generalized
Stieltjes constant

    gamma_r(alpha) = lim_N { sum_{n=0}^{N} log^r(n+alpha)/(n+alpha)
                             - log^{r+1}(N+alpha)/(r+1) },

so the Laurent expansion reads

    zeta(s, alpha) - 1/(s-1) = sum_r (-1)^r gamma_r(alpha)/r! (s-1)^r.

Progression constants gamma_r(a, q) follow the analogous limit over
n = a (mod q) and satisfy the exact convolution

    gamma_r(a, q) = (1/q)[ sum_l C(r,l) log^l q * gamma_{r-l}(a/q)
                           - log^{r+1} q / (r+1) ],

whose trailing term comes from expanding (q^{-s} - q^{-1})/(s-1); it is
independent of a and therefore drops out of every character sum
L^{(r)}(1, chi) = sum_a chi(a) (-1)^r gamma_r(a, q).

beta_coefficient and the L-values at s = 0 use the evaluated pole term
d^r/ds^r (1/(s-1))|_{s=0} = -r!, and lerch_taylor_at_1 returns the
Taylor coefficient phi^{(r)}(lambda, alpha, 1)/r!.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .characters import DirichletCharacter
from .evaluate import MAX_ORDER, _psi_at_split, _split_floor
from .sawtooth import (
    EvalResult,
    psi,
    psi_osc_tail_powers,
    psi_tail_powers,
    pure_osc_tail_powers,
)

__all__ = [
    "CoefficientEntry",
    "CoefficientTable",
    "ConvolutionCoefficient",
    "stieltjes_gamma",
    "stieltjes_gamma_all",
    "limit_oracle_gamma",
    "limit_gamma_extrapolated",
    "richardson_fit",
    "beta_coefficient",
    "beta_coefficient_all",
    "gamma_aq",
    "convolution_coefficient",
    "limit_oracle_gamma_aq",
    "limit_gamma_aq_extrapolated",
    "l_deriv_at_1_exact",
    "l_deriv_at_1_truncated",
    "l_deriv_at_0",
    "l_deriv_at_0_truncated",
    "lerch_taylor_at_1",
    "coefficient_table",
    "reconstruct_series",
]


def _check_order(r: int) -> None:
    if not 0 <= r <= MAX_ORDER:
        raise ValueError(f"order must lie in 0..{MAX_ORDER}")


def _check_alpha(alpha: float) -> None:
    if not 0.0 < alpha <= 1.0:
        raise ValueError("alpha must lie in (0, 1]")


# ---------------------------------------------------------------------------
# Stieltjes constants gamma_r(alpha)
# ---------------------------------------------------------------------------


def stieltjes_gamma_all(rmax: int, alpha: float) -> list[EvalResult]:
    """gamma_r(alpha) for r = 0..rmax from one pass of tail integrals.

    gamma_0 follows the x = 1 split representation 1/alpha (or 1 at
    alpha = 1) + psi(1-alpha) - int_1^inf psi(u-alpha)/u^2 du; for r >= 1,

        gamma_r(alpha) = log^r alpha / alpha
                         + r A_{r-1} - A_r,
        A_m = int_1^inf psi(u-alpha) u^{-2} log^m u du.
    """
    _check_order(rmax)
    _check_alpha(alpha)
    tails, terrs = psi_tail_powers(1.0, alpha, -2.0, max(rmax, 1))
    la = math.log(alpha)
    out = []
    g0 = 1.0 / alpha + psi(1.0 - alpha) - tails[0].real
    out.append(EvalResult(complex(g0), terrs[0]))
    for r in range(1, rmax + 1):
        val = la**r / alpha + r * tails[r - 1].real - tails[r].real
        out.append(EvalResult(complex(val), r * terrs[r - 1] + terrs[r]))
    return out


def stieltjes_gamma(r: int, alpha: float) -> EvalResult:
    """Classical generalized Stieltjes constant gamma_r(alpha)."""
    return stieltjes_gamma_all(r, alpha)[r]


def limit_oracle_gamma(r: int, alpha: float, N: int) -> float:
    """Partial value of the defining limit at cutoff N (no corrections).

    Returns sum_{n=0}^{N} log^r(n+alpha)/(n+alpha) - log^{r+1}(N+alpha)/(r+1);
    convergence is O(log^r N / N), so callers extrapolate.
    """
    _check_alpha(alpha)
    if N < 10:
        raise ValueError("need N >= 10")
    total = 0.0
    chunk = 2_000_000
    for lo in range(0, N + 1, chunk):
        hi = min(lo + chunk, N + 1)
        w = np.arange(lo, hi, dtype=float) + alpha
        if r:
            total += float(np.sum(np.log(w) ** r / w))
        else:
            total += float(np.sum(1.0 / w))
    return total - math.log(N + alpha) ** (r + 1) / (r + 1)


def richardson_fit(values, shapes):
    """Solve value_j = L + sum_i c_i * shapes[j][i] for the limit L.

    values: sequence of partial values; shapes: per-value sequence of the
    assumed error shapes (one fewer than the number of values).
    """
    values = list(values)
    n = len(values)
    a = np.ones((n, n))
    for j, sh in enumerate(shapes):
        if len(sh) != n - 1:
            raise ValueError("need one shape fewer than values")
        a[j, 1:] = sh
    sol = np.linalg.solve(a, np.asarray(values, dtype=float))
    return float(sol[0])


def _endpoint_corrections(r: int, w: float, step: float) -> float:
    """Euler-Maclaurin boundary terms g(w)/2 + step g'(w)/12 - step^3 g'''(w)/720
    for g(w) = log^r w / w (the O(1/N) part of the defining limits)."""
    lw = math.log(w)

    def gk(k: int) -> float:
        # k-th derivative of u^{-1} log^r u, evaluated at w
        coeffs = [0.0] * (r + 1)
        coeffs[r] = 1.0
        for j in range(k):
            nxt = [0.0] * (r + 1)
            for i in range(r + 1):
                nxt[i] = (-1.0 - j) * coeffs[i]
                if i + 1 <= r:
                    nxt[i] += (i + 1) * coeffs[i + 1]
            coeffs = nxt
        return sum(c * lw**i for i, c in enumerate(coeffs)) * w ** (-1.0 - k)

    return gk(0) / 2.0 + step * gk(1) / 12.0 - step**3 * gk(3) / 720.0


def limit_gamma_extrapolated(r: int, alpha: float, N: int = 400_000) -> float:
    """Limit-definition value with Euler-Maclaurin endpoint corrections.

    Residual error is O(log^r N / N^5), far below the double-precision
    scale of the constants themselves for N >= 1e5.
    """
    raw = limit_oracle_gamma(r, alpha, N)
    return raw - _endpoint_corrections(r, N + alpha, 1.0)


# ---------------------------------------------------------------------------
# Taylor coefficients at s = 0
# ---------------------------------------------------------------------------


def beta_coefficient_all(rmax: int, alpha: float) -> list[EvalResult]:
    """beta_r(alpha) = zeta^{(r)}(0, alpha)/r! for r = 0..rmax.

    beta_0 = 1/2 - alpha; for r >= 1,

        zeta^{(r)}(0, alpha) = -r! + (-1)^r [ log^r alpha
                                + r int_1^inf psi(u-alpha)/u log^{r-1} u du ].
    """
    _check_order(rmax)
    _check_alpha(alpha)
    out = [EvalResult(complex(0.5 - alpha), 0.0)]
    if rmax == 0:
        return out
    tails, terrs = psi_tail_powers(1.0, alpha, -1.0, max(rmax - 1, 0))
    la = math.log(alpha)
    for r in range(1, rmax + 1):
        zr = -math.factorial(r) + (-1.0) ** r * (la**r + r * tails[r - 1].real)
        out.append(EvalResult(complex(zr / math.factorial(r)), r * terrs[r - 1] / math.factorial(r)))
    return out


def beta_coefficient(r: int, alpha: float) -> EvalResult:
    """Taylor coefficient of zeta(s, alpha) at s = 0."""
    return beta_coefficient_all(r, alpha)[r]


# ---------------------------------------------------------------------------
# progression constants gamma_r(a, q)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConvolutionCoefficient:
    """c_n(q, alpha) = sum_{j=0}^{n} gammaL_{n-j}(alpha) (-1)^j log^j q / j!,
    with gammaL the Laurent coefficients (-1)^m gamma_m(alpha)/m!."""

    n: int
    value: float


def convolution_coefficient(n: int, q: int, alpha: float) -> ConvolutionCoefficient:
    gam = stieltjes_gamma_all(n, alpha)
    lq = math.log(q)
    acc = 0.0
    for j in range(n + 1):
        m = n - j
        laurent = (-1.0) ** m * gam[m].value.real / math.factorial(m)
        acc += laurent * (-1.0) ** j * lq**j / math.factorial(j)
    return ConvolutionCoefficient(n=n, value=acc)


def gamma_aq(r: int, a: int, q: int) -> EvalResult:
    """gamma_r(a, q) by the convolution over gamma_{r-l}(a/q).

    Computed twice -- once from the binomial form over classical
    constants, once through the Laurent-coefficient convolution
    c_r(q, a/q) -- and cross-checked to 1e-12 relative as a refactoring
    guard before returning.
    """
    if q < 1 or not 1 <= a <= q:
        raise ValueError("need 1 <= a <= q")
    _check_order(r)
    gam = stieltjes_gamma_all(r, a / q)
    lq = math.log(q)
    acc = 0.0
    err = 0.0
    for l in range(r + 1):
        c = math.comb(r, l) * lq**l
        acc += c * gam[r - l].value.real
        err += c * gam[r - l].error_bound
    val = (acc - lq ** (r + 1) / (r + 1)) / q
    # second route: (-1)^r gamma_r(a,q) = (r!/q) c_r(q, a/q) + pole-mismatch term
    cr = convolution_coefficient(r, q, a / q).value
    val2 = (-1.0) ** r * (
        math.factorial(r) / q * cr + (-1.0) ** (r + 1) * lq ** (r + 1) / (q * (r + 1))
    )
    scale = max(abs(val), abs(val2), 1e-6)
    if abs(val - val2) > 1e-12 * scale + err:
        raise AssertionError(
            f"convolution routes disagree for gamma_{r}({a},{q}): {val} vs {val2}"
        )
    return EvalResult(complex(val), err / q)


def limit_oracle_gamma_aq(r: int, a: int, q: int, N: int) -> float:
    """Partial value of the progression limit at cutoff N (no corrections):
    sum_{n = a (mod q), n <= N} log^r n / n - log^{r+1} N / (q (r+1))."""
    if q < 1 or not 1 <= a <= q:
        raise ValueError("need 1 <= a <= q")
    if N < q:
        raise ValueError("need N >= q")
    total = 0.0
    pts = np.arange(a if a >= 1 else q, N + 1, q, dtype=float)
    pts = pts[pts >= 1.0]
    logs = np.log(pts)
    if r:
        total = float(np.sum(logs**r / pts))
    else:
        total = float(np.sum(1.0 / pts))
    return total - math.log(N) ** (r + 1) / (q * (r + 1))


def limit_gamma_aq_extrapolated(r: int, a: int, q: int, N: int = 400_000) -> float:
    """Progression limit with the cutoff snapped to n = a (mod q) and
    Euler-Maclaurin endpoint corrections (residual O(log^r N / N^5)).

    Snapping pins the sawtooth boundary term psi((N-a)/q) at its integer
    value, which plain shape-based extrapolation cannot follow.
    """
    ns = N - ((N - a) % q)
    raw = limit_oracle_gamma_aq(r, a, q, ns)
    return raw - _endpoint_corrections(r, float(ns), float(q))


# ---------------------------------------------------------------------------
# L-function values at s = 1 and s = 0
# ---------------------------------------------------------------------------


def _log_binomial_tail_combo(tails, terrs, r: int, s_at: float, lq: float):
    """sum over m of [r C(r-1,m) log^{r-1-m} q - s C(r,m) log^{r-m} q] tails[m],
    the expansion of int psi * u^{-s-1} log^{r-1}(qu) (r - s log(qu)) du."""
    acc = 0.0 + 0.0j
    err = 0.0
    for m in range(r + 1):
        cm = 0.0
        if r and m <= r - 1:
            cm += r * math.comb(r - 1, m) * lq ** (r - 1 - m)
        cm -= s_at * math.comb(r, m) * lq ** (r - m)
        acc += cm * tails[m]
        err += abs(cm) * terrs[m]
    return acc, err


def l_deriv_at_1_exact(r: int, chi: DirichletCharacter, X: float | None = None) -> EvalResult:
    """L^{(r)}(1, chi) for non-principal chi via the split representation

    (-1)^r L^{(r)}(1,chi) = sum_{n<=X} chi(n) log^r n / n
        + (log^r X / X) sum_a chi(a) psi((X-a)/q)
        + (1/q) sum_a chi(a) int_{X/q}^inf psi(u-a/q) u^{-2}
                                 log^{r-1}(qu) (r - log(qu)) du.
    """
    if chi.is_principal:
        raise ValueError("needs a non-principal character")
    _check_order(r)
    q = chi.modulus
    if X is None:
        X = 4.0 * q
    lX = math.log(X)
    lq = math.log(q)
    main = 0.0 + 0.0j
    bnd = 0.0 + 0.0j
    tail = 0.0 + 0.0j
    err = 0.0
    for a in range(1, q + 1):
        ca = chi(a)
        if ca == 0:
            continue
        kmax = _split_floor((X - a) / q)
        if kmax >= 0:
            n = a + q * np.arange(0, kmax + 1, dtype=float)
            logs = np.log(n)
            main += ca * complex(np.sum((logs**r if r else 1.0) / n))
        bnd += ca * _psi_at_split((X - a) / q)
        tails, terrs = psi_tail_powers(X / q, a / q, -2.0, r)
        combo, cerr = _log_binomial_tail_combo(tails, terrs, r, 1.0, lq)
        tail += ca * combo
        err += cerr
    value = (-1.0) ** r * (main + (lX**r / X) * bnd + tail / q)
    return EvalResult(value, err / q)


def l_deriv_at_1_truncated(r: int, chi: DirichletCharacter) -> EvalResult:
    """Truncated main term (-1)^r sum_{n <= q e^{r/2}} chi(n) log^r n / n.

    For a primitive character mod q >= 3 and r >= 1 the discarded part is
    O(q^{-1/2} e^{-r/2} log q (log q + r/2)^r); the reported bound carries
    the empirical guard constant 10.
    """
    if r < 1:
        raise ValueError("the truncated form is stated for r >= 1")
    if not chi.is_primitive or chi.modulus < 3:
        raise ValueError("truncation bound requires a primitive character mod q >= 3")
    _check_order(r)
    q = chi.modulus
    X = q * math.exp(r / 2.0)
    n = np.arange(1, math.floor(X + 1e-12) + 1)
    vals = np.asarray(chi.values, dtype=complex)[n % q]
    logs = np.log(n.astype(float))
    main = complex(np.sum(vals * logs**r / n))
    bound = 10.0 * q**-0.5 * math.exp(-r / 2.0) * math.log(q) * (math.log(q) + r / 2.0) ** r
    return EvalResult((-1.0) ** r * main, bound)


def l_deriv_at_0(r: int, chi: DirichletCharacter, X: float | None = None) -> EvalResult:
    """L^{(r)}(0, chi) for non-principal chi via

    (-1)^r L^{(r)}(0,chi) = sum_{n<=X} chi(n) log^r n
        + log^r X sum_a chi(a) psi((X-a)/q)
        + r sum_a chi(a) int_{X/q}^inf psi(u-a/q) u^{-1} log^{r-1}(qu) du.
    """
    if chi.is_principal:
        raise ValueError("needs a non-principal character")
    _check_order(r)
    q = chi.modulus
    if X is None:
        X = 4.0 * q
    lX = math.log(X)
    lq = math.log(q)
    main = 0.0 + 0.0j
    bnd = 0.0 + 0.0j
    val = 0.0 + 0.0j
    err = 0.0
    for a in range(1, q + 1):
        ca = chi(a)
        if ca == 0:
            continue
        kmax = _split_floor((X - a) / q)
        if kmax >= 0:
            n = a + q * np.arange(0, kmax + 1, dtype=float)
            main += ca * complex(np.sum(np.log(n) ** r if r else np.ones_like(n)))
        bnd += ca * _psi_at_split((X - a) / q)
        if r:
            tails, terrs = psi_tail_powers(X / q, a / q, -1.0, r - 1)
            combo = sum(
                math.comb(r - 1, mm) * lq ** (r - 1 - mm) * tails[mm] for mm in range(r)
            )
            val += ca * r * combo
            err += r * sum(
                math.comb(r - 1, mm) * lq ** (r - 1 - mm) * terrs[mm] for mm in range(r)
            )
    val += main + (lX**r if r else 1.0) * bnd
    return EvalResult((-1.0) ** r * val, err)


def l_deriv_at_0_truncated(r: int, chi: DirichletCharacter) -> EvalResult:
    """Truncated main term (-1)^r sum_{n <= q e^{r-1}} chi(n) log^r n with
    the O(q^{1/2} log q (log q + r)^r) bound (guard constant 10)."""
    if r < 1:
        raise ValueError("the truncated form is stated for r >= 1")
    if not chi.is_primitive or chi.modulus < 3:
        raise ValueError("truncation bound requires a primitive character mod q >= 3")
    _check_order(r)
    q = chi.modulus
    X = q * math.exp(r - 1.0)
    n = np.arange(1, math.floor(X + 1e-12) + 1)
    vals = np.asarray(chi.values, dtype=complex)[n % q]
    logs = np.log(n.astype(float))
    main = complex(np.sum(vals * logs**r))
    bound = 10.0 * math.sqrt(q) * math.log(q) * (math.log(q) + r) ** r
    return EvalResult((-1.0) ** r * main, bound)


# ---------------------------------------------------------------------------
# Lerch Taylor coefficients at s = 1
# ---------------------------------------------------------------------------


def lerch_taylor_at_1(r: int, lam: float, alpha: float) -> EvalResult:
    """Taylor coefficient phi^{(r)}(lambda, alpha, 1)/r! for lambda in (0,1).

    Split representation at x = 1:

        phi^{(r)}(lambda, alpha, 1) = (-1)^r [ log^r alpha / alpha
            + int_1^inf e^{2 pi i lam (u-alpha)} u^{-1} log^r u du
            + 2 pi i lam int_1^inf psi(u-alpha) e^{...} u^{-1} log^r u du
            + r int_1^inf psi(u-alpha) e^{...} u^{-2} log^{r-1} u du
            -   int_1^inf psi(u-alpha) e^{...} u^{-2} log^r u du ]
        + [r = 0 only]  e^{2 pi i lam (1-alpha)} psi(1-alpha).
    """
    if not 0.0 < lam < 1.0:
        raise ValueError("lambda must lie in (0, 1); integer lambda is the Stieltjes case")
    _check_alpha(alpha)
    _check_order(r)
    la = math.log(alpha)
    head = (1.0 / alpha) if r == 0 else la**r / alpha
    pure, perr = pure_osc_tail_powers(lam, -1.0, r, 1.0)
    phase = cmath.exp(-2j * math.pi * lam * alpha)
    w1, w1err = psi_osc_tail_powers(lam, alpha, -1.0, r, 1.0)
    w2, w2err = psi_osc_tail_powers(lam, alpha, -2.0, r, 1.0)
    inner = head + phase * pure[r] + 2j * math.pi * lam * w1[r] - w2[r]
    err = perr[r] + 2.0 * math.pi * lam * w1err[r] + w2err[r]
    if r:
        inner += r * w2[r - 1]
        err += r * w2err[r - 1]
    val = (-1.0) ** r * inner
    if r == 0:
        val += cmath.exp(2j * math.pi * lam * (1.0 - alpha)) * psi(1.0 - alpha)
    return EvalResult(val / math.factorial(r), err / math.factorial(r))


# ---------------------------------------------------------------------------
# coefficient tables and series round trips
# ---------------------------------------------------------------------------

_KINDS = ("stieltjes_gamma", "beta_at_zero", "gamma_aq", "gamma_chi", "lerch_at_one", "l_deriv_at_zero")


@dataclass(frozen=True)
class CoefficientEntry:
    order: int
    value: complex
    error: float
    route: str


@dataclass(frozen=True)
class CoefficientTable:
    kind: str
    parameters: dict
    entries: tuple[CoefficientEntry, ...]

    def values(self) -> list[complex]:
        return [e.value for e in self.entries]


def coefficient_table(
    kind: str,
    r_max: int,
    *,
    alpha: float | None = None,
    a: int | None = None,
    q: int | None = None,
    chi: DirichletCharacter | None = None,
    lam: float | None = None,
) -> CoefficientTable:
    """Build a contiguous table of expansion coefficients for r = 0..r_max."""
    if kind not in _KINDS:
        raise ValueError(f"unknown coefficient kind {kind!r}")
    entries = []
    if kind == "stieltjes_gamma":
        res = stieltjes_gamma_all(r_max, alpha)
        entries = [
            CoefficientEntry(r, res[r].value, res[r].error_bound, "closed_form")
            for r in range(r_max + 1)
        ]
        params = {"alpha": alpha}
    elif kind == "beta_at_zero":
        res = beta_coefficient_all(r_max, alpha)
        entries = [
            CoefficientEntry(r, res[r].value, res[r].error_bound, "closed_form")
            for r in range(r_max + 1)
        ]
        params = {"alpha": alpha}
    elif kind == "gamma_aq":
        res = [gamma_aq(r, a, q) for r in range(r_max + 1)]
        entries = [
            CoefficientEntry(r, res[r].value, res[r].error_bound, "proposition")
            for r in range(r_max + 1)
        ]
        params = {"a": a, "q": q}
    elif kind == "gamma_chi":
        res = [l_deriv_at_1_exact(r, chi) for r in range(r_max + 1)]
        entries = [
            CoefficientEntry(
                r, res[r].value / math.factorial(r), res[r].error_bound / math.factorial(r), "closed_form"
            )
            for r in range(r_max + 1)
        ]
        params = {"q": chi.modulus, "label": chi.label}
    elif kind == "lerch_at_one":
        res = [lerch_taylor_at_1(r, lam, alpha) for r in range(r_max + 1)]
        entries = [
            CoefficientEntry(r, res[r].value, res[r].error_bound, "closed_form")
            for r in range(r_max + 1)
        ]
        params = {"lam": lam, "alpha": alpha}
    else:  # l_deriv_at_zero
        res = [l_deriv_at_0(r, chi) for r in range(r_max + 1)]
        entries = [
            CoefficientEntry(r, res[r].value, res[r].error_bound, "closed_form")
            for r in range(r_max + 1)
        ]
        params = {"q": chi.modulus, "label": chi.label}
    return CoefficientTable(kind=kind, parameters=params, entries=tuple(entries))


def reconstruct_series(table: CoefficientTable, s: complex) -> complex:
    """Partial sum of the expansion the table encodes, at the point s.

    Hurwitz tables add the pole 1/(s-1) and convert the stored classical
    constants to Laurent coefficients (-1)^r gamma_r/r!; beta tables
    expand around 0; the chi/lerch tables are Taylor series around 1.
    """
    s = complex(s)
    kind = table.kind
    if kind in ("stieltjes_gamma", "gamma_chi", "lerch_at_one", "gamma_aq"):
        center = 1.0
    elif kind in ("beta_at_zero", "l_deriv_at_zero"):
        center = 0.0
    else:
        raise ValueError(f"cannot reconstruct kind {table.kind!r}")
    if abs(s - center) > 0.5:
        raise ValueError("reconstruction is supported within |s - center| <= 1/2")
    h = s - center
    acc = 0.0 + 0.0j
    for e in table.entries:
        r = e.order
        if kind == "stieltjes_gamma":
            coeff = (-1.0) ** r * e.value / math.factorial(r)
        elif kind == "gamma_aq":
            coeff = (-1.0) ** r * e.value / math.factorial(r)
        elif kind == "l_deriv_at_zero":
            coeff = e.value / math.factorial(r)
        else:
            coeff = e.value
        acc += coeff * h**r
    if kind == "stieltjes_gamma":
        acc += 1.0 / (s - 1.0)
    if kind == "gamma_aq":
        acc += 1.0 / (table.parameters["q"] * (s - 1.0))
    return acc
