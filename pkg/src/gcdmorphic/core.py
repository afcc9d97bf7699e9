"""Exact integer arithmetic, divisor machinery, and the prefix types.

Sequences and codes are finite 1-indexed prefixes of positive integers.
Values are plain Python ints, so arbitrary precision comes for free; the
Fibonacci and Mersenne reference sequences exceed 64 bits well inside the
lengths exercised by the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt  # noqa: F401  (gcd is part of the public surface)
from typing import Iterable, Iterator


class LengthMismatch(ValueError):
    """Two prefixes that must align index-by-index have different lengths."""


def _validated(values: Iterable[int], what: str) -> tuple[int, ...]:
    out = tuple(values)
    if not out:
        raise ValueError(f"{what} needs at least one value")
    for i, v in enumerate(out, start=1):
        if not isinstance(v, int) or v < 1:
            raise ValueError(f"{what}[{i}] must be a positive integer, got {v!r}")
    return out


@dataclass(frozen=True)
class SeqPrefix:
    """Finite prefix (F_1, ..., F_L) of a positive-integer sequence.

    Indexing is 1-based throughout: ``term(n)`` is F_n. The raw tuple is
    available as ``terms`` with the usual 0-based offsets.
    """

    terms: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", _validated(self.terms, "terms"))

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[int]:
        return iter(self.terms)

    def term(self, n: int) -> int:
        """F_n (1-based)."""
        if not 1 <= n <= len(self.terms):
            raise IndexError(f"index {n} outside 1..{len(self.terms)}")
        return self.terms[n - 1]


@dataclass(frozen=True)
class CodePrefix:
    """Finite prefix (c_1, ..., c_L) of an encoding sequence, 1-indexed."""

    codes: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "codes", _validated(self.codes, "codes"))

    def __len__(self) -> int:
        return len(self.codes)

    def __iter__(self) -> Iterator[int]:
        return iter(self.codes)

    def code(self, n: int) -> int:
        """c_n (1-based)."""
        if not 1 <= n <= len(self.codes):
            raise IndexError(f"index {n} outside 1..{len(self.codes)}")
        return self.codes[n - 1]


@dataclass(frozen=True)
class PrimarySpec:
    """A primary sequence: ``value`` at every multiple of ``period``, 1 elsewhere."""

    value: int
    period: int

    def __post_init__(self) -> None:
        if not isinstance(self.value, int) or self.value < 1:
            raise ValueError(f"value must be a positive integer, got {self.value!r}")
        if not isinstance(self.period, int) or self.period < 1:
            raise ValueError(f"period must be a positive integer, got {self.period!r}")


def divisors(n: int) -> list[int]:
    """All positive divisors of n in ascending order, including 1 and n.

    Trial division up to sqrt(n); ample for the index ranges this library
    works at (prefix lengths up to ~1e5).
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    small: list[int] = []
    large: list[int] = []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            q = n // d
            if q != d:
                large.append(q)
    large.reverse()
    return small + large


def primary_term(spec: PrimarySpec, n: int) -> int:
    """n-th term of the primary sequence: spec.value if period | n, else 1."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return spec.value if n % spec.period == 0 else 1


def primary_prefix(spec: PrimarySpec, length: int) -> SeqPrefix:
    """First ``length`` terms of the primary sequence described by ``spec``."""
    if length < 1:
        raise ValueError(f"length must be positive, got {length}")
    terms = [1] * length
    for i in range(spec.period, length + 1, spec.period):
        terms[i - 1] = spec.value
    return SeqPrefix(tuple(terms))


def pointwise_product(a: SeqPrefix, b: SeqPrefix) -> SeqPrefix:
    """Index-wise product of two equal-length prefixes."""
    if len(a) != len(b):
        raise LengthMismatch(f"prefix lengths differ: {len(a)} vs {len(b)}")
    return SeqPrefix(tuple(x * y for x, y in zip(a.terms, b.terms)))


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (intended for small n)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def first_primes(count: int) -> tuple[int, ...]:
    """The first ``count`` primes, ascending."""
    if count < 1:
        raise ValueError(f"count must be positive, got {count}")
    primes: list[int] = [2]
    candidate = 3
    while len(primes) < count:
        if is_prime(candidate):
            primes.append(candidate)
        candidate += 2
    return tuple(primes)


def distinct_prime_factors(n: int) -> list[int]:
    """Distinct primes dividing n, ascending; empty for n = 1."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    out: list[int] = []
    rest = n
    if rest % 2 == 0:
        out.append(2)
        while rest % 2 == 0:
            rest //= 2
    d = 3
    while d * d <= rest:
        if rest % d == 0:
            out.append(d)
            while rest % d == 0:
                rest //= d
        d += 2
    if rest > 1:
        out.append(rest)
    return out


def smallest_prime_factor(n: int, *, bound: int | None = None) -> int | None:
    """Smallest prime factor of n, or None if there is none below ``bound``.

    With ``bound`` set, only candidates <= bound are tried, so the call stays
    cheap on huge values (None then means "no small factor found", not "n is
    prime").
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n == 1:
        return None
    if n % 2 == 0:
        return 2
    limit = isqrt(n)
    if bound is not None:
        limit = min(limit, bound)
    for d in range(3, limit + 1, 2):
        if n % d == 0:
            return d
    if bound is None or n <= bound:
        return n  # no factor up to sqrt(n): n itself is prime
    return None
