"""Decide GCD-morphicity two independent ways and report counterexamples.

``check_gcd_morphic`` is the ground-truth oracle: it scans every index pair
of the prefix against gcd(F_n, F_m) == F_{gcd(n, m)} and uses no encoding
machinery. ``check_c1`` decides the same property on the code side: for
every pair k < n with k not dividing n, gcd(c_n, c_k) must be 1. The two
verdicts agree for any prefix (that equivalence is what ``certify`` asserts
via its consistency flag; a False flag means an implementation bug).

Both checkers return None on pass, otherwise the lexicographically smallest
witness (outer index ascending, then inner ascending), so failures reproduce
byte-for-byte.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .codec import EncodeFailure, encode
from .core import CodePrefix, SeqPrefix


@dataclass(frozen=True)
class C1Witness:
    """Pair of incomparable indices whose codes share a factor g >= 2."""

    n: int
    k: int
    g: int


@dataclass(frozen=True)
class MorphicWitness:
    """Index pair where gcd(F_n, F_m) != F_{gcd(n, m)}."""

    n: int
    m: int
    got: int
    expected: int


def check_c1(c: CodePrefix) -> C1Witness | None:
    """First violation of the coprimality condition on codes, or None.

    Scans pairs k < n with k not dividing n; a shared factor >= 2 at such a
    pair is exactly what makes the decoded sequence non-GCD-morphic.
    """
    codes = c.codes
    for n in range(2, len(codes) + 1):
        cn = codes[n - 1]
        if cn == 1:
            continue  # gcd(1, x) = 1, no pair at this n can violate
        for k in range(1, n):
            if n % k and gcd(cn, codes[k - 1]) > 1:
                return C1Witness(n, k, gcd(cn, codes[k - 1]))
    return None


def check_gcd_morphic(f: SeqPrefix) -> MorphicWitness | None:
    """Brute-force check of gcd(F_n, F_m) == F_{gcd(n, m)} over all pairs.

    Examines every ordered pair 1 <= m <= n <= L (L(L+1)/2 of them); this is
    the defining property itself, so a None result is ground truth for the
    prefix.
    """
    terms = f.terms
    for n in range(1, len(terms) + 1):
        fn = terms[n - 1]
        for m in range(1, n + 1):
            got = gcd(fn, terms[m - 1])
            expected = terms[gcd(n, m) - 1]
            if got != expected:
                return MorphicWitness(n, m, got, expected)
    return None


@dataclass(frozen=True)
class Certificate:
    """Joint verdict of the encoder route and the brute-force route.

    ``consistent`` asserts (encode succeeded AND C1 passed) iff the brute
    force passed; False here is an implementation bug, never a property of
    the input.
    """

    code: CodePrefix | None
    encode_failure: EncodeFailure | None
    c1_witness: C1Witness | None
    morphic_witness: MorphicWitness | None
    consistent: bool

    @property
    def ok(self) -> bool:
        """True iff the prefix is certified GCD-morphic by both routes."""
        return (
            self.code is not None
            and self.c1_witness is None
            and self.morphic_witness is None
        )


def certify(f: SeqPrefix) -> Certificate:
    """Run both decision routes on ``f`` and bundle the outcomes.

    Encode success alone is a known false positive (the factorial sequence
    encodes cleanly but is not GCD-morphic), so callers should rely on this
    rather than on encode by itself. Failures are recorded as data, not
    raised.
    """
    code: CodePrefix | None = None
    failure: EncodeFailure | None = None
    try:
        code = encode(f)
    except EncodeFailure as exc:
        failure = exc
    c1w = check_c1(code) if code is not None else None
    mw = check_gcd_morphic(f)
    encoded_and_coprime = code is not None and c1w is None
    return Certificate(
        code=code,
        encode_failure=failure,
        c1_witness=c1w,
        morphic_witness=mw,
        consistent=encoded_and_coprime == (mw is None),
    )
