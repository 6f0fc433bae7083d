"""Irreducibility and primitivity of polynomials over GF(2).

A degree-n polynomial is primitive when it is irreducible and the order
of x modulo the polynomial is the full 2^n - 1. The order test needs the
prime factorization of 2^n - 1, which trial division delivers instantly
at the supported sizes (n <= 32). Nothing is looked up: the list of
primitive polynomials for any n is generated on demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .gf2poly import Gf2Poly, gcd, pow_x_mod

__all__ = [
    "MAX_FACTOR_N",
    "MersenneFactorization",
    "factorize_mersenne",
    "is_irreducible",
    "is_primitive",
    "enumerate_primitive",
    "primitive_count",
]

# Trial division on 2^n - 1 is instantaneous up to here; larger n would
# need real factoring machinery and is out of scope.
MAX_FACTOR_N = 32

_ONE = Gf2Poly(1)
_X = Gf2Poly(2)


def _factorize(value: int) -> tuple[tuple[int, int], ...]:
    # Trial division up to sqrt; returns ascending (prime, multiplicity).
    factors = []
    rest = value
    d = 2
    while d * d <= rest:
        if rest % d == 0:
            e = 0
            while rest % d == 0:
                rest //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if rest > 1:
        factors.append((rest, 1))
    return tuple(factors)


@dataclass(frozen=True)
class MersenneFactorization:
    """Prime factorization of 2^n - 1, the period of an n-cell maximum
    length automaton."""

    n: int
    value: int
    prime_factors: tuple[tuple[int, int], ...]

    def distinct_primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.prime_factors)

    def euler_phi(self) -> int:
        """Euler's totient of 2^n - 1, from the factorization."""
        phi = 1
        for p, e in self.prime_factors:
            phi *= (p - 1) * p ** (e - 1)
        return phi


@lru_cache(maxsize=None)
def factorize_mersenne(n: int) -> MersenneFactorization:
    """Complete prime factorization of 2^n - 1 by trial division."""
    if not 1 <= n <= MAX_FACTOR_N:
        raise ValueError(f"n must be in 1..{MAX_FACTOR_N}, got {n}")
    value = (1 << n) - 1
    return MersenneFactorization(n=n, value=value, prime_factors=_factorize(value))


def is_irreducible(p: Gf2Poly) -> bool:
    """True iff p has no nontrivial factor over GF(2).

    Standard criterion: x^(2^n) = x (mod p), and for every prime q
    dividing n, gcd(x^(2^(n/q)) - x, p) = 1.
    """
    n = p.degree
    if n is None or n < 1:
        raise ValueError("irreducibility needs degree >= 1")
    if n == 1:
        return True
    if pow_x_mod(1 << n, p) != _X % p:
        return False
    for q, _ in _factorize(n):
        probe = pow_x_mod(1 << (n // q), p) + (_X % p)
        if gcd(probe, p).degree != 0:
            return False
    return True


def is_primitive(p: Gf2Poly, f: MersenneFactorization | None = None) -> bool:
    """True iff p is irreducible and x has order 2^n - 1 modulo p.

    Checks x^(2^n - 1) = 1 and x^((2^n - 1)/q) != 1 for every distinct
    prime q of the factorization.
    """
    n = p.degree
    if n is None or n < 1:
        raise ValueError("primitivity needs degree >= 1")
    if f is None:
        f = factorize_mersenne(n)
    elif f.n != n:
        raise ValueError(f"factorization is for n={f.n}, polynomial has degree {n}")
    if not is_irreducible(p):
        return False
    if pow_x_mod(f.value, p) != _ONE:
        return False
    for q in f.distinct_primes():
        if pow_x_mod(f.value // q, p) == _ONE:
            return False
    return True


def order_of_x(p: Gf2Poly, f: MersenneFactorization | None = None) -> int:
    """Multiplicative order of x modulo an irreducible p.

    Starts from 2^n - 1 and strips every prime that can be stripped;
    useful as a diagnostic for irreducible but non-primitive inputs.
    """
    n = p.degree
    if n is None or n < 1:
        raise ValueError("order needs degree >= 1")
    if not is_irreducible(p):
        raise ValueError("order of x is only defined here for irreducible polynomials")
    if f is None:
        f = factorize_mersenne(n)
    order = f.value
    for q, e in f.prime_factors:
        for _ in range(e):
            if order % q == 0 and pow_x_mod(order // q, p) == _ONE:
                order //= q
    return order


def primitive_count(n: int) -> int:
    """Number of degree-n primitive polynomials: phi(2^n - 1) / n."""
    return factorize_mersenne(n).euler_phi() // n


def enumerate_primitive(n: int) -> list[Gf2Poly]:
    """All primitive polynomials of degree n, ascending by binary value.

    Candidates are restricted to odd weight with nonzero constant term,
    which every primitive polynomial satisfies; each survivor then takes
    the full order test.
    """
    if not 2 <= n <= MAX_FACTOR_N:
        raise ValueError(f"n must be in 2..{MAX_FACTOR_N}, got {n}")
    f = factorize_mersenne(n)
    found = []
    hi_lo = (1 << n) | 1
    for inner in range(1 << (n - 1)):
        bits = hi_lo | (inner << 1)
        if bits.bit_count() % 2 == 0:
            continue
        p = Gf2Poly(bits)
        if is_primitive(p, f):
            found.append(p)
    return found
