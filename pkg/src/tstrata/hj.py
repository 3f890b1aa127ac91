"""Hirzebruch-Jung continued fractions and T-chain combinatorics.

A chain ``[e_1, ..., e_r]`` (all entries >= 2) encodes a string of rational
curves with self-intersections ``-e_i``, consecutive curves meeting once.
Such a chain resolves the cyclic quotient singularity ``1/n (1, q)`` where
``n/q = e_1 - 1/(e_2 - 1/(... - 1/e_r))``.

Orientation convention: we expand ``n/q`` (value > 1, every entry >= 2).
With this convention ``[4]`` is the resolution of ``1/4 (1,1)`` and
``[3, 2^k, 3]`` resolves ``1/(4(k+2)) (1, 2k+3)``; the reciprocal
orientation ``q'/n`` that sometimes appears in displayed formulas is
inconsistent with those worked cases, so it is not used here.

T-singularities are the cyclic quotients ``1/(dm^2) (1, dma-1)`` with
``gcd(m, a) = 1`` and ``m >= 2`` (``d`` is written ``delta`` below).  Their
chains are generated from the seeds ``[4]`` and ``[3, 2^k, 3]`` by the two
growth moves

    [e_1, ..., e_r]  ->  [2, e_1, ..., e_{r-1}, e_r + 1]
    [e_1, ..., e_r]  ->  [e_1 + 1, e_2, ..., e_r, 2]

both of which preserve delta.  Strings of 2's (the A_k resolutions) are
classified as Du Val, not T; callers wanting the convention in which Du Val
counts as T can apply the ``du_val_counts_as_t`` view flag at render time.

All arithmetic is exact: integers and :class:`fractions.Fraction` only.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd

from .errors import DomainError, InvariantError


class ChainKind(Enum):
    DU_VAL = "DuVal"
    T = "T"
    NOT_T = "NotT"


@dataclass(frozen=True)
class Chain:
    """A nonempty tuple of integers, each >= 2."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        if not entries:
            raise DomainError("chain must be nonempty")
        if any(e < 2 for e in entries):
            raise DomainError(f"chain entries must all be >= 2, got {entries}")
        object.__setattr__(self, "entries", entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def reversed(self) -> "Chain":
        return Chain(self.entries[::-1])

    def __str__(self):
        return "[" + ",".join(str(e) for e in self.entries) + "]"


@dataclass(frozen=True)
class CyclicQuotientSingularity:
    """The cyclic quotient singularity 1/n (1, q), with 0 < q < n coprime."""

    n: int
    q: int

    def __post_init__(self):
        if not (0 < self.q < self.n):
            raise DomainError(f"need 0 < q < n, got (n, q) = ({self.n}, {self.q})")
        if gcd(self.n, self.q) != 1:
            raise DomainError(f"(n, q) = ({self.n}, {self.q}) not coprime")

    def __str__(self):
        return f"1/{self.n}(1,{self.q})"


@dataclass(frozen=True)
class ChainClassification:
    """Verdict of the T-singularity recognizers.

    For kind T the parameters satisfy n = delta*m^2, q = delta*m*a - 1 with
    gcd(m, a) = 1, m >= 2, 1 <= a < m, and they are unique.
    ``two_gorenstein`` marks the chains [4] and [3, 2^k, 3] (equivalently
    m = 2), whose singularities have 2-torsion canonical class.
    """

    kind: ChainKind
    delta: int | None = None
    m: int | None = None
    a: int | None = None
    two_gorenstein: bool = False


# ----------------------------------------------------------------------
# continued fractions
# ----------------------------------------------------------------------

def _expand_raw(n: int, q: int) -> list[int]:
    entries = []
    while q > 0:
        e = -((-n) // q)  # ceil(n/q)
        entries.append(e)
        n, q = q, e * q - n
    return entries


def _eval_raw(entries) -> tuple[int, int]:
    """Numerator/denominator of the nested fraction, via the continuant
    recurrence p_k = e_k * p_{k-1} - p_{k-2} run from the right."""
    num, den = entries[-1], 1
    for e in entries[-2::-1]:
        num, den = e * num - den, num
    return num, den


def hj_expand(s: CyclicQuotientSingularity) -> Chain:
    """The unique chain with continued-fraction value n/q."""
    return Chain(tuple(_expand_raw(s.n, s.q)))


def hj_eval(c: Chain) -> Fraction:
    """Exact value of the nested fraction; numerator and denominator coprime."""
    num, den = _eval_raw(c.entries)
    if gcd(num, den) != 1:
        raise InvariantError(f"continuants of {c} not coprime")
    return Fraction(num, den)


# ----------------------------------------------------------------------
# recognizers
# ----------------------------------------------------------------------

def classify_singularity(s: CyclicQuotientSingularity) -> ChainClassification:
    """Classify 1/n (1, q) as Du Val, T (returning delta, m, a) or neither.

    If n = delta*m^2 and q + 1 = delta*m*a with gcd(m, a) = 1 then
    (q+1)/n = a/m in lowest terms, so m and a are forced by one gcd and the
    triple is unique; it remains to check that n/m^2 is a positive integer.
    """
    n, q = s.n, s.q
    if q == n - 1:
        return ChainClassification(ChainKind.DU_VAL)
    g = gcd(n, q + 1)
    m, a = n // g, (q + 1) // g
    if m >= 2 and n % (m * m) == 0:
        delta = n // (m * m)
        if q + 1 == delta * m * a:
            return ChainClassification(ChainKind.T, delta, m, a, two_gorenstein=(m == 2))
    return ChainClassification(ChainKind.NOT_T)


def _seed_delta(entries) -> int | None:
    """delta of a seed chain ([4] or [3, 2^k, 3]), else None."""
    if entries == (4,):
        return 1
    if (
        len(entries) >= 2
        and entries[0] == 3
        and entries[-1] == 3
        and all(e == 2 for e in entries[1:-1])
    ):
        return len(entries)
    return None


def reduction_classification(c: Chain) -> tuple[ChainKind, int | None, bool]:
    """Recognize a T-chain by undoing growth moves until a seed appears.

    Returns (kind, delta, two_gorenstein).  A chain starting with 2 shrinks
    by stripping that 2 and decrementing the last entry; symmetrically for a
    trailing 2.  Growth never produces a chain with 2 at both ends, so at
    most one move applies and the reduction is deterministic.  Strings of
    2's are Du Val; anything else that gets stuck is not a T-chain.
    """
    entries = c.entries
    if all(e == 2 for e in entries):
        return ChainKind.DU_VAL, None, False
    steps = 0
    while True:
        delta = _seed_delta(entries)
        if delta is not None:
            return ChainKind.T, delta, steps == 0
        if len(entries) >= 2 and entries[0] == 2 and entries[-1] >= 3:
            entries = entries[1:-1] + (entries[-1] - 1,)
        elif len(entries) >= 2 and entries[-1] == 2 and entries[0] >= 3:
            entries = (entries[0] - 1,) + entries[1:-1]
        else:
            return ChainKind.NOT_T, None, False
        steps += 1


def value_classification(c: Chain) -> ChainClassification:
    """Recognize a T-chain through the singularity 1/n (1, q) it resolves."""
    num, den = _eval_raw(c.entries)
    return classify_singularity(CyclicQuotientSingularity(num, den))


def classify_chain(c: Chain) -> ChainClassification:
    """Classify a chain, running both recognizers and insisting they agree."""
    by_value = value_classification(c)
    kind, delta, two_g = reduction_classification(c)
    if (kind, delta, two_g) != (by_value.kind, by_value.delta, by_value.two_gorenstein):
        raise InvariantError(
            f"recognizers disagree on {c}: reduction gives "
            f"({kind}, {delta}, {two_g}), value route gives {by_value}"
        )
    return by_value


# ----------------------------------------------------------------------
# growth, enumeration, K^2
# ----------------------------------------------------------------------

def grow_chain(c: Chain, side: str) -> Chain:
    """Apply one growth move; T-chains stay T-chains with the same delta."""
    e = c.entries
    if side == "left":
        return Chain((2,) + e[:-1] + (e[-1] + 1,))
    if side == "right":
        return Chain((e[0] + 1,) + e[1:] + (2,))
    raise DomainError(f"side must be 'left' or 'right', got {side!r}")


def enumerate_t_chains(
    max_length: int,
    only_two_gorenstein: bool = False,
    dedupe_reversals: bool = False,
) -> list[Chain]:
    """All T-chains of length <= max_length, sorted by (length, entries).

    The closure of the seeds under both growth moves; each chain appears
    exactly once.  A chain and its reversal resolve the mutually inverse
    singularities 1/n (1, q) and 1/n (1, q') with qq' = 1 mod n, and both
    are emitted unless ``dedupe_reversals`` keeps the lexicographically
    smaller one.  ``only_two_gorenstein`` restricts to the seeds.
    """
    if max_length < 1:
        raise DomainError(f"max_length must be >= 1, got {max_length}")
    seeds = []
    if max_length >= 1:
        seeds.append((4,))
    for k in range(0, max_length - 1):
        seeds.append((3,) + (2,) * k + (3,))
    if only_two_gorenstein:
        found = set(seeds)
    else:
        found = set(seeds)
        frontier = list(seeds)
        while frontier:
            nxt = []
            for entries in frontier:
                if len(entries) >= max_length:
                    continue
                c = Chain(entries)
                for side in ("left", "right"):
                    grown = grow_chain(c, side).entries
                    if grown not in found:
                        found.add(grown)
                        nxt.append(grown)
            frontier = nxt
    if dedupe_reversals:
        found = {min(e, e[::-1]) for e in found}
    return [Chain(e) for e in sorted(found, key=lambda e: (len(e), e))]


def k2_contribution(c: Chain) -> int:
    """Gain of K^2 when the chain is contracted to its T-singularity:
    r - delta + 1.  Equals 1 exactly for the 2-Gorenstein seeds, and each
    growth move raises it by 1."""
    cls = classify_chain(c)
    if cls.kind is not ChainKind.T:
        raise DomainError(f"{c} is not a T-chain (classified {cls.kind.value})")
    return len(c) - cls.delta + 1
