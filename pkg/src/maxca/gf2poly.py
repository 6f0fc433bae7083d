"""Exact polynomial arithmetic over GF(2).

A polynomial is a bit vector packed into a Python int: bit i holds the
coefficient of x^i, so 0b111 is x^2 + x + 1. Addition is XOR,
multiplication is carry-less, division is shift-and-XOR long division;
every operation is exact.

The text format is the MSB-first binary string used throughout the
rule tables: "100011101" is x^8 + x^4 + x^3 + x^2 + 1, "0" is the zero
polynomial. No separators, no "0b" prefix.
"""

from __future__ import annotations

__all__ = [
    "MAX_DEGREE",
    "DegreeOverflowError",
    "Gf2Poly",
    "add",
    "mul",
    "mod_reduce",
    "pow_x_mod",
    "gcd",
    "parse_poly",
    "format_poly",
    "weight",
]

# Hard cap on the degree of any stored polynomial. 64 covers automata of
# up to 32 cells with full product headroom (deg a + deg b <= 64).
# Exceeding it is an error, never silent truncation.
MAX_DEGREE = 64


class DegreeOverflowError(ValueError):
    """An operation would produce a polynomial of degree > MAX_DEGREE."""


class Gf2Poly:
    """Immutable polynomial over GF(2), bit i = coefficient of x^i.

    Values are canonical by construction (an int has no spare leading
    zeros), so equality and hashing are plain int comparisons.
    """

    __slots__ = ("bits",)

    bits: int

    def __init__(self, bits: int = 0):
        if bits < 0:
            raise ValueError("coefficient bits must be non-negative")
        object.__setattr__(self, "bits", bits)

    @property
    def degree(self) -> int | None:
        """Degree of the polynomial, or None for the zero polynomial."""
        return self.bits.bit_length() - 1 if self.bits else None

    def is_zero(self) -> bool:
        return self.bits == 0

    def __setattr__(self, name, value):
        raise AttributeError("Gf2Poly is immutable")

    def __eq__(self, other) -> bool:
        if isinstance(other, Gf2Poly):
            return self.bits == other.bits
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.bits)

    def __bool__(self) -> bool:
        return bool(self.bits)

    # Operator sugar; the module-level functions are the canonical API.
    def __add__(self, other: "Gf2Poly") -> "Gf2Poly":
        return add(self, other)

    __xor__ = __add__
    __sub__ = __add__

    def __mul__(self, other: "Gf2Poly") -> "Gf2Poly":
        return mul(self, other)

    def __mod__(self, other: "Gf2Poly") -> "Gf2Poly":
        return mod_reduce(self, other)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Gf2Poly({format_poly(self)!r})"


ZERO = Gf2Poly(0)
ONE = Gf2Poly(1)
X = Gf2Poly(2)


def add(a: Gf2Poly, b: Gf2Poly) -> Gf2Poly:
    """Sum of two polynomials: coefficient-wise XOR."""
    return Gf2Poly(a.bits ^ b.bits)


def _mul(a: int, b: int) -> int:
    # Carry-less product of raw bit vectors.
    if a < b:
        a, b = b, a
    acc = 0
    while b:
        if b & 1:
            acc ^= a
        a <<= 1
        b >>= 1
    return acc


def mul(a: Gf2Poly, b: Gf2Poly) -> Gf2Poly:
    """Carry-less product; degree adds for nonzero operands."""
    if a.bits and b.bits:
        if (a.bits.bit_length() - 1) + (b.bits.bit_length() - 1) > MAX_DEGREE:
            raise DegreeOverflowError(
                f"product degree exceeds MAX_DEGREE={MAX_DEGREE}"
            )
    return Gf2Poly(_mul(a.bits, b.bits))


def _mod(a: int, m: int) -> int:
    # Shift-and-XOR long division, remainder only.
    dm = m.bit_length()
    while True:
        da = a.bit_length()
        if da < dm:
            return a
        a ^= m << (da - dm)


def mod_reduce(a: Gf2Poly, m: Gf2Poly) -> Gf2Poly:
    """Remainder of a modulo m, with degree(result) < degree(m)."""
    if not m.bits:
        raise ZeroDivisionError("reduction modulo the zero polynomial")
    return Gf2Poly(_mod(a.bits, m.bits))


def _pow_x_mod(e: int, m: int) -> int:
    # x^e mod m by square-and-multiply on raw bit vectors.
    result = 1
    base = _mod(2, m)
    while e:
        if e & 1:
            result = _mod(_mul(result, base), m)
        e >>= 1
        if e:
            base = _mod(_mul(base, base), m)
    return result


def pow_x_mod(e: int, m: Gf2Poly) -> Gf2Poly:
    """x^e mod m for e >= 0.

    Square-and-multiply, O(log e) reductions; the workhorse behind the
    primitivity test, where e runs up to 2^n - 1.
    """
    if e < 0:
        raise ValueError("exponent must be non-negative")
    if m.bits.bit_length() < 2:
        raise ZeroDivisionError("modulus must have degree >= 1")
    return Gf2Poly(_pow_x_mod(e, m.bits))


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _mod(a, b)
    return a


def gcd(a: Gf2Poly, b: Gf2Poly) -> Gf2Poly:
    """Greatest common divisor; gcd(0, 0) is 0."""
    return Gf2Poly(_gcd(a.bits, b.bits))


def parse_poly(s: str) -> Gf2Poly:
    """Parse an MSB-first binary string ("111" -> x^2 + x + 1)."""
    if not s:
        raise ValueError("empty polynomial string")
    if set(s) - {"0", "1"}:
        raise ValueError(f"polynomial string must be over 0/1: {s!r}")
    if len(s) > 1 and s[0] == "0":
        raise ValueError(f"leading zero in polynomial string: {s!r}")
    if len(s) - 1 > MAX_DEGREE:
        raise DegreeOverflowError(
            f"degree {len(s) - 1} exceeds MAX_DEGREE={MAX_DEGREE}"
        )
    return Gf2Poly(int(s, 2))


def format_poly(p: Gf2Poly) -> str:
    """MSB-first binary string; inverse of parse_poly ("0" for zero)."""
    return format(p.bits, "b")


def weight(p: Gf2Poly) -> int:
    """Number of nonzero coefficients."""
    return p.bits.bit_count()
