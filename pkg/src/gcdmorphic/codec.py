"""The bijection between sequences and their codes.

A code (c_1, ..., c_L) determines the sequence F_n = prod of c_j over j | n,
i.e. the pointwise product of the primary sequences (c_j at multiples of j).
``encode`` inverts that product one index at a time via

    c_n = F_n / (prod of c_k over k | n, k < n)

and fails fast at the first inexact division. ``peel_primary`` factors a
single primary sequence out of a prefix whose leading terms are already 1;
iterating it over n = 1..L reproduces the encoder term-by-term.

Encode success alone does NOT certify that the input is GCD-morphic: the
factorial sequence encodes cleanly yet fails the coprimality condition on
codes. Certification is encode + validator.check_c1 (see validator.certify).
"""

from __future__ import annotations

from .core import CodePrefix, PrimarySpec, SeqPrefix


class EncodeFailure(ArithmeticError):
    """Raised when F_n is not an exact multiple of the accumulated divisor
    product, i.e. the input is not a product of primary sequences and hence
    not GCD-morphic.
    """

    def __init__(self, index: int, numerator: int, denominator: int):
        super().__init__(
            f"term {index}: {numerator} is not divisible by {denominator}"
        )
        self.index = index
        self.numerator = numerator
        self.denominator = denominator


class HypothesisViolated(ValueError):
    """Peeling at n requires every term before position n to equal 1."""

    def __init__(self, n: int, index: int, value: int):
        super().__init__(
            f"peel at {n} requires terms 1..{n - 1} to be 1, but term {index} is {value}"
        )
        self.n = n
        self.index = index
        self.value = value


class NotDivisible(ArithmeticError):
    """Term at a multiple of n is not divisible by the term at n.

    For a GCD-morphic prefix, F_n | F_k whenever n | k, so hitting this
    certifies the input is not GCD-morphic.
    """

    def __init__(self, n: int, index: int, value: int, base: int):
        super().__init__(f"term {index} ({value}) is not divisible by term {n} ({base})")
        self.n = n
        self.index = index
        self.value = value
        self.base = base


def encode(f: SeqPrefix) -> CodePrefix:
    """Compute the code of ``f``; raise EncodeFailure at the first inexact division.

    Evaluates n in ascending order so failures are deterministic. Success
    means ``f`` is a product of primary sequences up to its length, not that
    it is GCD-morphic.
    """
    length = len(f)
    codes: list[int] = []
    # denoms[n] accumulates the product of c_k over proper divisors k of n.
    denoms = [1] * (length + 1)
    for n, fn in enumerate(f.terms, start=1):
        q, r = divmod(fn, denoms[n])
        if r:
            raise EncodeFailure(n, fn, denoms[n])
        codes.append(q)
        if q != 1:
            for m in range(2 * n, length + 1, n):
                denoms[m] *= q
    return CodePrefix(tuple(codes))


def decode(c: CodePrefix) -> SeqPrefix:
    """Sequence determined by the code: F_n = prod of c_j over j | n.

    Equivalently the pointwise product over j <= L of the primary sequences
    (c_j, j); the product at each index is finite because only divisors of
    the index contribute.
    """
    length = len(c)
    terms = [1] * length
    for j, cj in enumerate(c.codes, start=1):
        if cj != 1:
            for m in range(j, length + 1, j):
                terms[m - 1] *= cj
    return SeqPrefix(tuple(terms))


def peel_primary(f: SeqPrefix, n: int) -> tuple[PrimarySpec, SeqPrefix]:
    """Factor the primary sequence (f_n, n) out of ``f``.

    Requires f_1 .. f_{n-1} to all equal 1. The peeled prefix has term k

        1            if k <= n,
        f_k / f_n    if n | k,
        f_k          otherwise,

    so that pointwise_product(primary_prefix((f_n, n), L), peeled) == f.

    Raises HypothesisViolated if a leading term differs from 1, and
    NotDivisible if f_n does not divide some f_k with n | k (which certifies
    the input is not GCD-morphic). A peel that succeeds is arithmetic only;
    it does not certify anything about the input.
    """
    length = len(f)
    if not 1 <= n <= length:
        raise ValueError(f"peel index {n} outside 1..{length}")
    terms = f.terms
    for k in range(1, n):
        if terms[k - 1] != 1:
            raise HypothesisViolated(n, k, terms[k - 1])
    base = terms[n - 1]
    peeled = list(terms)
    for k in range(1, n + 1):
        peeled[k - 1] = 1
    if base != 1:
        for k in range(2 * n, length + 1, n):
            q, r = divmod(terms[k - 1], base)
            if r:
                raise NotDivisible(n, k, terms[k - 1], base)
            peeled[k - 1] = q
    return PrimarySpec(base, n), SeqPrefix(tuple(peeled))
