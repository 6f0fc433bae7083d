"""Exhaustive search for maximum-length rule vectors.

Scans every one of the 2^n main diagonals of the tridiagonal transition
matrix, computes the characteristic polynomial, and keeps the diagonals
whose polynomial is primitive. Two cheap rejection filters run first:
even coefficient weight and zero constant term, neither of which a
primitive polynomial can have. The expensive order test only sees the
survivors.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .charpoly import RuleVector, _charpoly_bits, reverse
from .gf2poly import Gf2Poly, format_poly
from .primitivity import factorize_mersenne, is_primitive

__all__ = [
    "EXHAUSTIVE_CAP",
    "MaxLenEntry",
    "FilterStats",
    "enumerate_maxlen",
    "rule_vectors_for",
    "filter_stats",
]

# 2^n diagonals at O(n^2) each stays comfortable up to here; beyond it
# callers must opt in explicitly.
EXHAUSTIVE_CAP = 20


@dataclass(frozen=True)
class MaxLenEntry:
    """One (rule vector, primitive characteristic polynomial) pair."""

    n: int
    rule_vector: RuleVector
    polynomial: Gf2Poly

    def is_palindrome(self) -> bool:
        """True when the rule vector is its own mirror image."""
        return self.rule_vector == reverse(self.rule_vector)


@dataclass(frozen=True)
class FilterStats:
    """How the 2^n diagonals fell through the rejection cascade."""

    n: int
    total: int
    even_weight: int
    zero_constant: int
    not_primitive: int
    survivors: int


def _check_n(n: int, force: bool) -> None:
    if n < 2:
        raise ValueError(f"need at least 2 cells, got {n}")
    if n > EXHAUSTIVE_CAP and not force:
        raise ValueError(
            f"exhaustive scan of 2^{n} diagonals exceeds the n<={EXHAUSTIVE_CAP} "
            "cap; use the force override to go beyond it"
        )


def _scan_range(n: int, start: int, stop: int) -> list[tuple[int, int]]:
    # Survivors in [start, stop) as (diagonal mask, polynomial bits).
    f = factorize_mersenne(n)
    out = []
    for mask in range(start, stop):
        bits = _charpoly_bits(mask, n)
        if bits.bit_count() % 2 == 0:
            continue
        if bits & 1 == 0:
            continue
        if is_primitive(Gf2Poly(bits), f):
            out.append((mask, bits))
    return out


def _rv_sort_key(mask: int, n: int) -> int:
    # Unsigned value of the text form (cell 0 is the most significant
    # character), so output order matches the printed tables.
    v = 0
    for i in range(n):
        v = (v << 1) | ((mask >> i) & 1)
    return v


def enumerate_maxlen(n: int, *, jobs: int = 1, force: bool = False) -> list[MaxLenEntry]:
    """Every n-cell maximum-length rule vector with its polynomial.

    Output is sorted by (polynomial binary value, rule-vector text
    value) and is identical regardless of jobs.
    """
    _check_n(n, force)
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    total = 1 << n
    if jobs == 1 or total < 4 * jobs:
        hits = _scan_range(n, 0, total)
    else:
        chunk = -(-total // jobs)
        bounds = [(lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]
        hits = []
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_scan_range, n, lo, hi) for lo, hi in bounds]
            for fut in futures:
                hits.extend(fut.result())
    hits.sort(key=lambda t: (t[1], _rv_sort_key(t[0], n)))
    return [
        MaxLenEntry(n=n, rule_vector=RuleVector.from_mask(mask, n), polynomial=Gf2Poly(bits))
        for mask, bits in hits
    ]


def rule_vectors_for(p: Gf2Poly, *, force: bool = False) -> list[RuleVector]:
    """All rule vectors whose characteristic polynomial is the given
    primitive p; closed under mirror reversal.

    Raises if p is not primitive (caller contract).
    """
    if not is_primitive(p):
        raise ValueError(f"{format_poly(p)} is not primitive")
    n = p.degree
    _check_n(n, force)
    found = [
        RuleVector.from_mask(mask, n)
        for mask in range(1 << n)
        if _charpoly_bits(mask, n) == p.bits
    ]
    found.sort(key=lambda rv: _rv_sort_key(rv.mask, n))
    return found


def filter_stats(n: int, *, force: bool = False) -> FilterStats:
    """Count how many diagonals each rejection step removed."""
    _check_n(n, force)
    f = factorize_mersenne(n)
    even_weight = zero_constant = not_primitive = survivors = 0
    for mask in range(1 << n):
        bits = _charpoly_bits(mask, n)
        if bits.bit_count() % 2 == 0:
            even_weight += 1
        elif bits & 1 == 0:
            zero_constant += 1
        elif not is_primitive(Gf2Poly(bits), f):
            not_primitive += 1
        else:
            survivors += 1
    return FilterStats(
        n=n,
        total=1 << n,
        even_weight=even_weight,
        zero_constant=zero_constant,
        not_primitive=not_primitive,
        survivors=survivors,
    )
