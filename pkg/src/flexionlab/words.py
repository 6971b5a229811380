"""Exact rational scalars, bi-letter words, flexions and word transforms.

Scalars are `fractions.Fraction` (exact, lowest terms, positive denominator).
A word is a tuple of bi-letters (u; v); the empty word is ().  The four
flexions ful/fur/fll/flr modify one neighbor of a factorization w = a·b and
are the building blocks of every flexion operator downstream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple, Sequence, Union

Rat = Fraction

RatLike = Union[Rat, int, str]


class DivByZero(ZeroDivisionError):
    """Division by an exactly-zero rational during mould evaluation.

    Carries a trail of (node name, word) frames identifying the offending
    sub-expression; the outermost frame is appended last.
    """

    def __init__(self, message: str):
        super().__init__(message)
        self.trail: list[tuple[str, "Word"]] = []

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        base = super().__str__()
        if self.trail:
            path = " <- ".join(name for name, _ in self.trail)
            return f"{base} [at {path}]"
        return base


def rat(x: RatLike, den: int | None = None) -> Rat:
    """Coerce ints, 'p/q' strings or Fractions to an exact rational."""
    if den is not None:
        return Fraction(x, den)
    return Fraction(x)


def rat_str(x: Rat) -> str:
    """Serialize a rational as 'p' or 'p/q' in lowest terms."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class Biletter(NamedTuple):
    u: Rat
    v: Rat


Word = tuple  # tuple[Biletter, ...]

EMPTY: Word = ()


def bl(u: RatLike, v: RatLike) -> Biletter:
    return Biletter(Fraction(u), Fraction(v))


def word(pairs: Iterable[tuple[RatLike, RatLike]]) -> Word:
    """Build a word from (u, v) pairs."""
    return tuple(bl(u, v) for u, v in pairs)


def usum(w: Word) -> Rat:
    return sum((x.u for x in w), Fraction(0))


def word_to_json(w: Word) -> list[list[str]]:
    return [[rat_str(x.u), rat_str(x.v)] for x in w]


def word_from_json(data: Sequence[Sequence[str]]) -> Word:
    return tuple(Biletter(Fraction(u), Fraction(v)) for u, v in data)


# ---------------------------------------------------------------------------
# Flexions
# ---------------------------------------------------------------------------
#
# For a factorization w = a·b the flexion marks one factor and lets the
# other act on it:
#   ful(a, b): b with its first u increased by the u-sum of a
#   fur(a, b): a with its last u increased by the u-sum of b
#   fll(a, b): b with every v decreased by the last v of a
#   flr(a, b): a with every v decreased by the first v of b
# An empty neighbor acts as the identity; an empty subject stays empty.


def ful(a: Word, b: Word) -> Word:
    if not a or not b:
        return b
    first = b[0]
    return (Biletter(usum(a) + first.u, first.v),) + b[1:]


def fur(a: Word, b: Word) -> Word:
    if not b or not a:
        return a
    last = a[-1]
    return a[:-1] + (Biletter(last.u + usum(b), last.v),)


def fll(a: Word, b: Word) -> Word:
    if not a or not b:
        return b
    shift = a[-1].v
    return tuple(Biletter(x.u, x.v - shift) for x in b)


def flr(a: Word, b: Word) -> Word:
    if not b or not a:
        return a
    shift = b[0].v
    return tuple(Biletter(x.u, x.v - shift) for x in a)


_FLEXIONS = {"ful": ful, "fur": fur, "fll": fll, "flr": flr}


def flexion(kind: str, a: Word, b: Word) -> Word:
    return _FLEXIONS[kind](a, b)


# ---------------------------------------------------------------------------
# Word transforms
# ---------------------------------------------------------------------------


def reverse(w: Word) -> Word:
    return w[::-1]


def negate(w: Word) -> Word:
    return tuple(Biletter(-x.u, -x.v) for x in w)


def swap_pullback(w: Word) -> Word:
    """The involutive change of variables behind the swap operator.

    sigma(w) = ((v_r; u1+...+u_r), (v_{r-1}-v_r; u1+...+u_{r-1}), ...,
    (v1-v2; u1)); a mould is swapped by precomposing with sigma.
    """
    r = len(w)
    if r == 0:
        return EMPTY
    prefix = [Fraction(0)]
    for x in w:
        prefix.append(prefix[-1] + x.u)
    out = []
    for i in range(r, 0, -1):
        v_next = w[i].v if i < r else Fraction(0)
        out.append(Biletter(w[i - 1].v - v_next, prefix[i]))
    return tuple(out)


_TRANSFORMS = {"reverse": reverse, "negate": negate, "swap_pullback": swap_pullback}


def word_transform(kind: str, w: Word) -> Word:
    return _TRANSFORMS[kind](w)


# ---------------------------------------------------------------------------
# Shuffles
# ---------------------------------------------------------------------------


def shuffles(a: Word, b: Word) -> list[Word]:
    """All interleavings of a and b, with multiplicity (C(la+lb, la) words)."""

    def gen(x: Word, y: Word) -> Iterator[Word]:
        if not x:
            yield y
            return
        if not y:
            yield x
            return
        for tail in gen(x[1:], y):
            yield (x[0],) + tail
        for tail in gen(x, y[1:]):
            yield (y[0],) + tail

    return list(gen(a, b))


# ---------------------------------------------------------------------------
# Sampling and binomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Bounds:
    """Magnitude limits for random letters: p/q with p in [-P,P]\\{0}, q in [1,Q]."""

    max_num: int = 30
    max_den: int = 10


def sample_rat(rng, bounds: Bounds = Bounds()) -> Rat:
    p = 0
    while p == 0:
        p = rng.randint(-bounds.max_num, bounds.max_num)
    q = rng.randint(1, bounds.max_den)
    return Fraction(p, q)


def sample_word(rng, r: int, bounds: Bounds = Bounds()) -> Word:
    """r independent bi-letters with nonzero rational entries; deterministic per seed."""
    return tuple(Biletter(sample_rat(rng, bounds), sample_rat(rng, bounds)) for _ in range(r))


def binom(n: int, k: int) -> int:
    """Exact binomial coefficient; 0 outside the triangle (k<0, k>n or n<0)."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)
