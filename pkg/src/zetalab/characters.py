"""Dirichlet character arithmetic for small moduli.

A character mod q is stored as a full value table of length q (entry n
is chi(n)), built from a generator decomposition of the unit group
(Z/qZ)*: CRT over prime-power factors, with (Z/2^k)* for k >= 3 split
as <-1> x <5>.  Values are kept both as complex doubles and as exact
exponents k with chi(n) = e^{2 pi i k / E}, E the unit-group exponent,
so that conductor and parity tests are exact integer arithmetic.

Labels index the dual group lexicographically over generator exponents;
the principal character is always label 0 and enumeration order is
deterministic.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

import numpy as np

__all__ = [
    "DirichletCharacter",
    "GaussSumValue",
    "enumerate_characters",
    "conductor",
    "gauss_sum",
    "partial_character_sum",
    "euler_phi",
    "factorize",
    "divisors",
]


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization by trial division, ascending primes."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def euler_phi(n: int) -> int:
    phi = 1
    for p, e in factorize(n):
        phi *= (p - 1) * p ** (e - 1)
    return phi


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def _primitive_root_mod_pk(p: int, e: int) -> int:
    """Generator of the cyclic group (Z/p^e)*, p an odd prime."""
    # find a primitive root mod p, then fix the lift if needed
    fac = [f for f, _ in factorize(p - 1)]
    g = 2
    while True:
        if all(pow(g, (p - 1) // f, p) != 1 for f in fac):
            break
        g += 1
    if e == 1:
        return g
    if pow(g, p - 1, p * p) == 1:
        g += p
    return g


def _crt_lift(residue: int, modulus: int, q: int) -> int:
    """x = residue mod modulus, x = 1 mod (q // modulus)."""
    m2 = q // modulus
    if m2 == 1:
        return residue % q
    inv = pow(modulus, -1, m2)
    return (residue + modulus * ((1 - residue) * inv % m2)) % q


@lru_cache(maxsize=None)
def _unit_group(q: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Generators and their orders for (Z/qZ)* as a product of cyclic groups."""
    gens: list[int] = []
    orders: list[int] = []
    for p, e in factorize(q):
        pk = p**e
        if p == 2:
            if e == 1:
                continue
            if e == 2:
                gens.append(_crt_lift(3, 4, q))
                orders.append(2)
            else:
                gens.append(_crt_lift(pk - 1, pk, q))
                orders.append(2)
                gens.append(_crt_lift(5, pk, q))
                orders.append(pk // 4)
        else:
            g = _primitive_root_mod_pk(p, e)
            gens.append(_crt_lift(g, pk, q))
            orders.append((p - 1) * p ** (e - 1))
    return tuple(gens), tuple(orders)


@dataclass(frozen=True)
class DirichletCharacter:
    """A fully tabulated Dirichlet character mod q.

    values[n] is chi(n) for residues n = 0..q-1; value_logs[n] holds the
    exact exponent k with chi(n) = e^{2 pi i k / group_exponent}, or -1
    where chi vanishes (gcd(n, q) > 1).
    """

    modulus: int
    values: tuple[complex, ...]
    value_logs: tuple[int, ...]
    group_exponent: int
    gen_exponents: tuple[int, ...]
    is_principal: bool
    conductor: int
    parity: int
    label: int

    def __call__(self, n: int) -> complex:
        return self.values[n % self.modulus]

    @property
    def is_primitive(self) -> bool:
        return self.conductor == self.modulus

    def conjugate(self) -> "DirichletCharacter":
        """The complex-conjugate character (inverse in the dual group)."""
        gens, orders = _unit_group(self.modulus)
        neg = tuple((-k) % d for k, d in zip(self.gen_exponents, orders))
        return _build_character(self.modulus, gens, orders, neg)

    def __repr__(self) -> str:  # keep tables out of test failure output
        return (
            f"DirichletCharacter(q={self.modulus}, label={self.label}, "
            f"conductor={self.conductor}, parity={self.parity:+d})"
        )


@dataclass(frozen=True)
class GaussSumValue:
    """tau(chi, n) = sum_{a=1}^{q} chi(a) e^{2 pi i n a / q}."""

    chi: DirichletCharacter
    shift: int
    value: complex

    @classmethod
    def compute(cls, chi: DirichletCharacter, shift: int) -> "GaussSumValue":
        return cls(chi=chi, shift=shift, value=gauss_sum(chi, shift))


def _conductor_from_logs(q: int, value_logs: tuple[int, ...]) -> int:
    # smallest f | q with chi(n) = 1 for every n = 1 (mod f) coprime to q
    for f in divisors(q):
        ok = True
        for n in range(1, q + 1):
            if n % f == 1 % f and math.gcd(n, q) == 1:
                if value_logs[n % q] != 0:
                    ok = False
                    break
        if ok:
            return f
    return q  # unreachable: f = q always passes


def _build_character(
    q: int,
    gens: tuple[int, ...],
    orders: tuple[int, ...],
    kexp: tuple[int, ...],
) -> DirichletCharacter:
    exponent = 1
    for d in orders:
        exponent = exponent * d // math.gcd(exponent, d)
    logs = [-1] * q
    if q == 1:
        logs[0] = 0
    else:
        # walk the whole group once: element = prod gens[i]^{e_i}
        for evec in product(*(range(d) for d in orders)):
            n = 1
            for g, e in zip(gens, evec):
                n = n * pow(g, e, q) % q
            logs[n] = (
                sum(e * k * (exponent // d) for e, k, d in zip(evec, kexp, orders))
                % exponent
            )
        if not orders:  # q = 2: trivial unit group
            logs[1 % q] = 0
    roots = [cmath.exp(2j * math.pi * k / exponent) for k in range(exponent)]
    values = tuple(roots[k] if k >= 0 else 0.0 + 0.0j for k in logs)
    logs_t = tuple(logs)
    label = 0
    for k, d in zip(kexp, orders):
        label = label * d + k
    parity_log = logs_t[(q - 1) % q]
    parity = 1 if parity_log == 0 else -1
    return DirichletCharacter(
        modulus=q,
        values=values,
        value_logs=logs_t,
        group_exponent=exponent,
        gen_exponents=tuple(kexp),
        is_principal=all(k == 0 for k in kexp),
        conductor=_conductor_from_logs(q, logs_t),
        parity=parity,
        label=label,
    )


def enumerate_characters(q: int) -> list[DirichletCharacter]:
    """All phi(q) characters mod q in a fixed, reproducible order."""
    if q < 1:
        raise ValueError("modulus must be a positive integer")
    gens, orders = _unit_group(q)
    out = []
    for kexp in product(*(range(d) for d in orders)):
        out.append(_build_character(q, gens, orders, tuple(kexp)))
    return out


def conductor(chi: DirichletCharacter) -> int:
    """Smallest f | q such that chi is induced by a character mod f."""
    return _conductor_from_logs(chi.modulus, chi.value_logs)


def gauss_sum(chi: DirichletCharacter, n: int) -> complex:
    """sum_{a=1}^{q} chi(a) e^{2 pi i n a / q}, computed as the finite sum."""
    q = chi.modulus
    a = np.arange(q)
    vals = np.asarray(chi.values, dtype=complex)
    phases = np.exp(2j * np.pi * ((n % q) * a % q) / q)
    # a = q term equals the a = 0 table entry (chi(0) e^0)
    return complex(np.dot(vals, phases))


def partial_character_sum(chi: DirichletCharacter, x: float) -> complex:
    """sum_{1 <= a <= x} chi(a) for a non-principal character."""
    if chi.is_principal:
        raise ValueError("partial character sums are only tracked for non-principal characters")
    m = int(math.floor(x))
    if m < 1:
        return 0.0 + 0.0j
    q = chi.modulus
    vals = np.asarray(chi.values, dtype=complex)
    full, rem = divmod(m, q)
    total = full * np.sum(vals)
    if rem:
        total += np.sum(vals[np.arange(1, rem + 1) % q])
    return complex(total)
