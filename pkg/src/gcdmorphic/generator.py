"""Seeded construction of codes that satisfy the coprimality condition.

For a single prime, the largest support the coprimality condition allows
across a code is a set of indices totally ordered by divisibility. The
generator therefore assigns each drawn prime one divisibility chain of
indices (start anywhere, repeatedly multiply by a factor in [2, 4] until the
length is exceeded) and multiplies a bounded power of the prime into every
chain member. Two incomparable indices then never share a prime, so the
decoded sequence is GCD-morphic by construction.

``corrupt`` is the negative-test factory: it plants a shared prime on one
incomparable pair, which breaks the condition at exactly that pair.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .core import CodePrefix, first_primes, is_prime, smallest_prime_factor

RNG_ALGORITHM = "mt19937"  # stdlib random.Random; identifier for output metadata
MAX_SEED = 2**64 - 1

DEFAULT_PRIME_POOL = first_primes(20)
_PLANT_PRIMES = (2, 3, 5, 7, 11, 13)
_FACTOR_BOUND = 1000  # trial-division cap when corrupting arbitrary codes


@dataclass(frozen=True)
class GenParams:
    """Knobs for ``generate``; identical params give byte-identical output."""

    length: int
    seed: int
    prime_pool: tuple[int, ...] = DEFAULT_PRIME_POOL
    chains: int = 10
    max_exponent: int = 2

    def __post_init__(self) -> None:
        if self.length < 1:
            raise ValueError(f"length must be positive, got {self.length}")
        if not 0 <= self.seed <= MAX_SEED:
            raise ValueError(f"seed must fit in 64 unsigned bits, got {self.seed}")
        pool = tuple(self.prime_pool)
        object.__setattr__(self, "prime_pool", pool)
        if not pool:
            raise ValueError("prime_pool must not be empty")
        if len(set(pool)) != len(pool):
            raise ValueError("prime_pool entries must be distinct")
        for p in pool:
            if not is_prime(p):
                raise ValueError(f"prime_pool entry {p} is not prime")
        if self.chains < 1:
            raise ValueError(f"chains must be positive, got {self.chains}")
        if self.max_exponent < 1:
            raise ValueError(f"max_exponent must be positive, got {self.max_exponent}")


class PoolExhausted(ValueError):
    """More chains requested than primes available to draw without replacement."""


def generate(params: GenParams) -> CodePrefix:
    """Pseudo-random code of the requested length that passes check_c1.

    Each of ``params.chains`` rounds draws a fresh prime from the pool and a
    divisibility chain of indices, then multiplies prime powers (exponents in
    1..max_exponent) into the chain members. Untouched codes stay 1, matching
    the sparse shape of the reference encodings.
    """
    if params.chains > len(params.prime_pool):
        raise PoolExhausted(
            f"{params.chains} chains from a pool of {len(params.prime_pool)} primes"
        )
    rng = random.Random(params.seed)
    length = params.length
    codes = [1] * length
    pool = list(params.prime_pool)
    for _ in range(params.chains):
        q = pool.pop(rng.randrange(len(pool)))
        idx = rng.randint(1, length)
        while idx <= length:
            codes[idx - 1] *= q ** rng.randint(1, params.max_exponent)
            idx *= rng.randint(2, 4)
    return CodePrefix(tuple(codes))


def corrupt(c: CodePrefix, seed: int) -> CodePrefix:
    """Copy of ``c`` with one code multiplied so that check_c1 must fail.

    Picks an index k >= 2 and an index incomparable with it, then multiplies
    c_k by a prime already carried by the partner (planting a fresh prime at
    both positions when no cheaply-found factor exists). The changed pair is
    incomparable, so it violates the coprimality condition outright.
    """
    length = len(c)
    if length < 3:
        raise ValueError(f"need at least 3 codes to corrupt, got {length}")
    if not 0 <= seed <= MAX_SEED:
        raise ValueError(f"seed must fit in 64 unsigned bits, got {seed}")
    rng = random.Random(seed)
    codes = list(c.codes)

    k = rng.randint(2, length)
    # k+1 (or length-1 when k == length) is always incomparable, so this is
    # never empty for length >= 3.
    partners = [n for n in range(2, length + 1) if n != k and n % k and k % n]

    carrying: list[tuple[int, int]] = []
    for n in partners:
        p = smallest_prime_factor(codes[n - 1], bound=_FACTOR_BOUND)
        if p is not None:
            carrying.append((n, p))
    if carrying:
        _, q = carrying[rng.randrange(len(carrying))]
        codes[k - 1] *= q
    else:
        n0 = partners[rng.randrange(len(partners))]
        q = _PLANT_PRIMES[rng.randrange(len(_PLANT_PRIMES))]
        codes[n0 - 1] *= q
        codes[k - 1] *= q
    return CodePrefix(tuple(codes))
