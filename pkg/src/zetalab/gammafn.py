"""Complex gamma, digamma and trigamma in double precision.

Gamma uses the Lanczos rational approximation (g = 7, nine terms) with
the reflection formula for Re(z) < 1/2.  Digamma and trigamma shift the
argument up with the recurrence until the Bernoulli-number asymptotic
series applies, and reflect first when Re(z) < 0.  Accuracy is about 13
significant digits on |z| <= 50 away from the poles, which is what the
gamma-factor assemblies downstream budget for.
"""

from __future__ import annotations

import cmath
import math

__all__ = ["complex_gamma", "digamma", "trigamma"]

_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

# B_{2k} for the asymptotic tails of psi0 / psi1.
_B2K = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
)

_ASYMPT_RE = 14.0


def _is_nonpositive_int(z: complex) -> bool:
    return z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real)


def complex_gamma(z: complex) -> complex:
    """Gamma(z) for complex z, poles at z = 0, -1, -2, ... raise ValueError."""
    z = complex(z)
    if _is_nonpositive_int(z):
        raise ValueError(f"gamma pole at z = {z}")
    if z.real < 0.5:
        # Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return math.pi / (cmath.sin(math.pi * z) * complex_gamma(1.0 - z))
    z -= 1.0
    acc = complex(_LANCZOS[0])
    for i in range(1, len(_LANCZOS)):
        acc += _LANCZOS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (z + 0.5) * cmath.exp(-t) * acc


def digamma(z: complex) -> complex:
    """psi_0(z), the logarithmic derivative of gamma."""
    z = complex(z)
    if _is_nonpositive_int(z):
        raise ValueError(f"digamma pole at z = {z}")
    if z.real < 0.0:
        # psi(z) = psi(1-z) - pi cot(pi z)
        return digamma(1.0 - z) - math.pi / cmath.tan(math.pi * z)
    acc = 0.0 + 0.0j
    while z.real < _ASYMPT_RE:
        acc -= 1.0 / z
        z += 1.0
    w = 1.0 / (z * z)
    tail = 0.0 + 0.0j
    wk = w
    for k, b in enumerate(_B2K, start=1):
        tail += b / (2.0 * k) * wk
        wk *= w
    return acc + cmath.log(z) - 0.5 / z - tail


def trigamma(z: complex) -> complex:
    """psi_1(z) = d/dz psi_0(z)."""
    z = complex(z)
    if _is_nonpositive_int(z):
        raise ValueError(f"trigamma pole at z = {z}")
    if z.real < 0.0:
        # psi_1(z) + psi_1(1-z) = pi^2 / sin^2(pi z)
        s = cmath.sin(math.pi * z)
        return math.pi * math.pi / (s * s) - trigamma(1.0 - z)
    acc = 0.0 + 0.0j
    while z.real < _ASYMPT_RE:
        acc += 1.0 / (z * z)
        z += 1.0
    w = 1.0 / (z * z)
    tail = 0.0 + 0.0j
    wk = w / z
    for b in _B2K:
        tail += b * wk
        wk *= w
    return acc + 1.0 / z + 0.5 * w + tail
