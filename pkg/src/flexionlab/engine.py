"""Bimould expression graphs with exact memoized evaluation.

A mould is an immutable node in an expression DAG; evaluating (node, word)
through an EvalContext yields an exact rational and is memoized on the
node's identity.  Every node carries an empty-word class: group (value 1 at
the empty word), lie (value 0) or free.  The identity checker samples random
words per length, compares two graphs exactly, and resamples on division by
zero up to a retry cap.
"""

from __future__ import annotations

import hashlib
import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional

from .words import (
    Biletter,
    Bounds,
    DivByZero,
    Rat,
    Word,
    EMPTY,
    negate,
    rat_str,
    reverse,
    sample_word,
    swap_pullback,
    word_to_json,
)

GROUP = "group"
LIE = "lie"
FREE = "free"

_uid_counter = itertools.count(1)


def _lift(x) -> "Mould":
    if isinstance(x, Mould):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar(Fraction(x))
    raise TypeError(f"cannot use {x!r} as a mould")


class Mould:
    """Base node.  Subclasses implement _eval(ctx, w) and set empty_class."""

    __slots__ = ("uid", "name", "empty_class")

    def __init__(self, name: str, empty_class: str):
        self.uid = next(_uid_counter)
        self.name = name
        self.empty_class = empty_class

    def _eval(self, ctx: "EvalContext", w: Word) -> Rat:
        raise NotImplementedError

    # -- arithmetic sugar: + and - are pointwise, scalars act by scaling ----

    def __add__(self, other):
        return Add(self, _lift(other))

    def __radd__(self, other):
        return Add(_lift(other), self)

    def __sub__(self, other):
        return Sub(self, _lift(other))

    def __rsub__(self, other):
        return Sub(_lift(other), self)

    def __neg__(self):
        return SMul(Fraction(-1), self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SMul(Fraction(other), self)
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self):
        return f"<{self.name}#{self.uid}:{self.empty_class}>"


class EvalContext:
    """Memo table plus counters; one per worker process."""

    def __init__(self, retry_cap: int = 8):
        self.memo: dict[tuple[int, Word], Rat] = {}
        self.retry_cap = retry_cap
        self.stats = {"evals": 0, "memo_hits": 0, "div_by_zero": 0}

    def eval(self, A: Mould, w: Word) -> Rat:
        key = (A.uid, w)
        hit = self.memo.get(key)
        if hit is not None:
            self.stats["memo_hits"] += 1
            return hit
        self.stats["evals"] += 1
        try:
            val = A._eval(self, w)
        except DivByZero as exc:
            self.stats["div_by_zero"] += 1
            exc.trail.append((A.name, w))
            raise
        if not w:
            if A.empty_class == GROUP and val != 1:
                raise RuntimeError(f"group mould {A.name} evaluated to {val} at the empty word")
            if A.empty_class == LIE and val != 0:
                raise RuntimeError(f"lie mould {A.name} evaluated to {val} at the empty word")
        self.memo[key] = val
        return val


def eval_mould(ctx: EvalContext, A: Mould, w: Word) -> Rat:
    return ctx.eval(A, w)


# ---------------------------------------------------------------------------
# Primitives
# ---------------------------------------------------------------------------


class Scalar(Mould):
    """c at the empty word, 0 elsewhere (the unit mould for c=1)."""

    __slots__ = ("c",)

    def __init__(self, c):
        c = Fraction(c)
        cls = LIE if c == 0 else (GROUP if c == 1 else FREE)
        super().__init__(f"scalar[{rat_str(c)}]", cls)
        self.c = c

    def _eval(self, ctx, w):
        return self.c if not w else Fraction(0)


def one() -> Mould:
    return Scalar(1)


def zero() -> Mould:
    return Scalar(0)


class LetterMould(Mould):
    """Length-1 concentrated mould given by a function of a single bi-letter."""

    __slots__ = ("fn",)

    def __init__(self, name: str, fn: Callable[[Biletter], Rat]):
        super().__init__(name, LIE)
        self.fn = fn

    def _eval(self, ctx, w):
        if len(w) != 1:
            return Fraction(0)
        return self.fn(w[0])


class FuncMould(Mould):
    """General mould defined by an explicit word function."""

    __slots__ = ("fn",)

    def __init__(self, name: str, fn: Callable[[Word], Rat], empty_class: str):
        super().__init__(name, empty_class)
        self.fn = fn

    def _eval(self, ctx, w):
        return self.fn(w)


class DigestMould(Mould):
    """Deterministic pseudorandom lie-class mould: a seeded digest of the word.

    Values are bounded rationals depending on the exact word, stable across
    processes (blake2b, not Python's salted hash).
    """

    __slots__ = ("seed",)

    def __init__(self, seed: int, tag: str = ""):
        super().__init__(f"generic[{seed}{',' + tag if tag else ''}]", LIE)
        self.seed = (seed, tag)

    def _eval(self, ctx, w):
        if not w:
            return Fraction(0)
        h = hashlib.blake2b(digest_size=16)
        h.update(repr(self.seed).encode())
        for x in w:
            h.update(f"{x.u.numerator}/{x.u.denominator};{x.v.numerator}/{x.v.denominator}|".encode())
        d = int.from_bytes(h.digest(), "big")
        num = d % 41 - 20
        den = (d >> 16) % 7 + 1
        return Fraction(num, den)


# ---------------------------------------------------------------------------
# Unary operators
# ---------------------------------------------------------------------------


class Anti(Mould):
    __slots__ = ("A",)

    def __init__(self, A: Mould):
        super().__init__("anti", A.empty_class)
        self.A = A

    def _eval(self, ctx, w):
        return ctx.eval(self.A, reverse(w))


class Neg(Mould):
    __slots__ = ("A",)

    def __init__(self, A: Mould):
        super().__init__("neg", A.empty_class)
        self.A = A

    def _eval(self, ctx, w):
        return ctx.eval(self.A, negate(w))


class Swap(Mould):
    __slots__ = ("A",)

    def __init__(self, A: Mould):
        super().__init__("swap", A.empty_class)
        self.A = A

    def _eval(self, ctx, w):
        return ctx.eval(self.A, swap_pullback(w))


class Pari(Mould):
    __slots__ = ("A",)

    def __init__(self, A: Mould):
        super().__init__("pari", A.empty_class)
        self.A = A

    def _eval(self, ctx, w):
        s = -1 if len(w) % 2 else 1
        return s * ctx.eval(self.A, w)


class Der(Mould):
    __slots__ = ("A",)

    def __init__(self, A: Mould):
        super().__init__("der", LIE)
        self.A = A

    def _eval(self, ctx, w):
        return len(w) * ctx.eval(self.A, w)


class LengR(Mould):
    __slots__ = ("A", "r")

    def __init__(self, A: Mould, r: int):
        super().__init__(f"leng_{r}", A.empty_class if r == 0 else LIE)
        self.A = A
        self.r = r

    def _eval(self, ctx, w):
        if len(w) != self.r:
            return Fraction(0)
        return ctx.eval(self.A, w)


class Mantar(Mould):
    """mantar(A)(w) = (-1)^(len(w)-1) A(reverse(w)), i.e. -pari o anti."""

    __slots__ = ("A",)

    def __init__(self, A: Mould):
        cls = LIE if A.empty_class == LIE else FREE
        super().__init__("mantar", cls)
        self.A = A

    def _eval(self, ctx, w):
        s = 1 if len(w) % 2 else -1
        return s * ctx.eval(self.A, reverse(w))


def anti(A: Mould) -> Mould:
    return Anti(A)


def pari(A: Mould) -> Mould:
    return Pari(A)


def neg(A: Mould) -> Mould:
    return Neg(A)


def swap(A: Mould) -> Mould:
    return Swap(A)


def der(A: Mould) -> Mould:
    return Der(A)


def leng_r(A: Mould, r: int) -> Mould:
    return LengR(A, r)


def mantar(A: Mould) -> Mould:
    return Mantar(A)


def push(A: Mould) -> Mould:
    """push := neg o anti o swap o anti o swap (the defining conjugation)."""
    return Neg(Anti(Swap(Anti(Swap(A)))))


def push_inv(A: Mould) -> Mould:
    return Swap(Anti(Swap(Anti(Neg(A)))))


def gantar(A: Mould) -> Mould:
    """gantar := anti o pari o invmu; defined on group-class moulds."""
    return Anti(Pari(invmu(A)))


def unary(kind: str, A: Mould, r: int | None = None) -> Mould:
    if kind == "leng_r":
        if r is None:
            raise ValueError("leng_r needs the length r")
        return LengR(A, r)
    table = {
        "anti": anti,
        "pari": pari,
        "neg": neg,
        "swap": swap,
        "push": push,
        "push_inv": push_inv,
        "mantar": mantar,
        "der": der,
        "gantar": gantar,
    }
    return table[kind](A)


# ---------------------------------------------------------------------------
# Pointwise sums and the mu product
# ---------------------------------------------------------------------------


def _add_class(a: str, b: str) -> str:
    if a == LIE:
        return b
    if b == LIE:
        return a
    return FREE


class Add(Mould):
    __slots__ = ("A", "B")

    def __init__(self, A: Mould, B: Mould):
        super().__init__("add", _add_class(A.empty_class, B.empty_class))
        self.A = A
        self.B = B

    def _eval(self, ctx, w):
        return ctx.eval(self.A, w) + ctx.eval(self.B, w)


class Sub(Mould):
    __slots__ = ("A", "B")

    def __init__(self, A: Mould, B: Mould):
        if A.empty_class == B.empty_class and A.empty_class in (LIE, GROUP):
            cls = LIE
        elif B.empty_class == LIE:
            cls = A.empty_class
        else:
            cls = FREE
        super().__init__("sub", cls)
        self.A = A
        self.B = B

    def _eval(self, ctx, w):
        return ctx.eval(self.A, w) - ctx.eval(self.B, w)


class SMul(Mould):
    __slots__ = ("c", "A")

    def __init__(self, c: Fraction, A: Mould):
        if A.empty_class == LIE or c == 0:
            cls = LIE
        elif c == 1:
            cls = A.empty_class
        else:
            cls = FREE
        super().__init__(f"smul[{rat_str(Fraction(c))}]", cls)
        self.c = Fraction(c)
        self.A = A

    def _eval(self, ctx, w):
        return self.c * ctx.eval(self.A, w)


class Mu(Mould):
    """mu(A,B)(w) = sum over two-block factorizations w = a.b of A(a)B(b)."""

    __slots__ = ("A", "B")

    def __init__(self, A: Mould, B: Mould):
        ca, cb = A.empty_class, B.empty_class
        if LIE in (ca, cb):
            cls = LIE
        elif ca == GROUP and cb == GROUP:
            cls = GROUP
        else:
            cls = FREE
        super().__init__("mu", cls)
        self.A = A
        self.B = B

    def _eval(self, ctx, w):
        total = Fraction(0)
        for i in range(len(w) + 1):
            total += ctx.eval(self.A, w[:i]) * ctx.eval(self.B, w[i:])
        return total


class MuLeftProper(Mould):
    """sum over w = a.b with a nonempty of A(a)B(b); internal to solvers."""

    __slots__ = ("A", "B")

    def __init__(self, A: Mould, B: Mould):
        super().__init__("mu'", LIE)
        self.A = A
        self.B = B

    def _eval(self, ctx, w):
        total = Fraction(0)
        for i in range(1, len(w) + 1):
            total += ctx.eval(self.A, w[:i]) * ctx.eval(self.B, w[i:])
        return total


class MuProper(Mould):
    """sum over w = a.b with both parts nonempty of A(a)B(b).

    Equals Mu(A, B) when both operands vanish on the empty word, but never
    evaluates either operand at the full word - which keeps self-referential
    length recursions well founded.
    """

    __slots__ = ("A", "B")

    def __init__(self, A: Mould, B: Mould):
        super().__init__("mu''", LIE)
        self.A = A
        self.B = B

    def _eval(self, ctx, w):
        total = Fraction(0)
        for i in range(1, len(w)):
            total += ctx.eval(self.A, w[:i]) * ctx.eval(self.B, w[i:])
        return total


def mu(*ms) -> Mould:
    """Associative mu product of one or more moulds."""
    ms = [_lift(m) for m in ms]
    out = ms[0]
    for m in ms[1:]:
        out = Mu(out, m)
    return out


def lu(A: Mould, B: Mould) -> Mould:
    return Sub(Mu(A, B), Mu(B, A))


class Invmu(Mould):
    """mu-inverse: X(empty)=1, X(w) = -sum_{w=ab, a nonempty} A(a) X(b)."""

    __slots__ = ("A",)

    def __init__(self, A: Mould):
        if A.empty_class != GROUP:
            raise ValueError(f"invmu needs a group-class mould, got {A.empty_class} ({A.name})")
        super().__init__("invmu", GROUP)
        self.A = A

    def _eval(self, ctx, w):
        if not w:
            return Fraction(1)
        total = Fraction(0)
        for i in range(1, len(w) + 1):
            total += ctx.eval(self.A, w[:i]) * ctx.eval(self, w[i:])
        return -total


def invmu(A: Mould) -> Mould:
    return Invmu(A)


# ---------------------------------------------------------------------------
# Identity checking
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SamplePlan:
    max_length: int = 4
    samples_per_length: int = 4
    seed: int = 0
    bounds: Bounds = Bounds()

    def __post_init__(self):
        if self.max_length < 0 or self.samples_per_length < 1:
            raise ValueError("need max_length >= 0 and samples_per_length >= 1")


def derived_rng(*parts) -> random.Random:
    """Deterministic child RNG from a tuple of seeds/labels (process stable)."""
    h = hashlib.blake2b(":".join(str(p) for p in parts).encode(), digest_size=8)
    return random.Random(int.from_bytes(h.digest(), "big"))


@dataclass
class PointRecord:
    identity: str
    length: int
    word: Word
    lhs: Optional[Rat]
    rhs: Optional[Rat]
    status: str  # pass | fail | skipped
    split: Optional[int] = None  # prefix length, for paired-word checks
    detail: Optional[str] = None  # e.g. the division-by-zero path on a skip

    def to_json(self) -> dict:
        rec = {
            "identity": self.identity,
            "length": self.length,
            "word": word_to_json(self.word),
            "lhs": None if self.lhs is None else rat_str(self.lhs),
            "rhs": None if self.rhs is None else rat_str(self.rhs),
            "status": self.status,
        }
        if self.split is not None:
            rec["split"] = self.split
        if self.detail is not None:
            rec["detail"] = self.detail
        return rec


@dataclass
class Report:
    identity: str
    points: list[PointRecord] = field(default_factory=list)
    note: str = ""

    @property
    def counterexample(self) -> Optional[PointRecord]:
        for p in self.points:
            if p.status == "fail":
                return p
        return None

    @property
    def status(self) -> str:
        if any(p.status == "fail" for p in self.points):
            return "fail"
        # a length whose every point was skipped means the identity was
        # never actually exercised there: treat as failure of the check
        by_length: dict[int, list[str]] = {}
        for p in self.points:
            by_length.setdefault(p.length, []).append(p.status)
        for r, statuses in by_length.items():
            if statuses and all(s == "skipped" for s in statuses):
                return "fail"
        return "pass"

    def to_json(self) -> dict:
        out = {
            "identity": self.identity,
            "status": self.status,
            "points": [p.to_json() for p in self.points],
        }
        if self.note:
            out["note"] = self.note
        return out


def check_identity(
    lhs: Mould,
    rhs: Mould,
    plan: SamplePlan,
    name: str = "identity",
    ctx: Optional[EvalContext] = None,
) -> Report:
    """Compare two moulds exactly at N seeded random words per length 0..L.

    Division by zero at a sample point triggers resampling (up to the
    context's retry cap); a point that keeps hitting singular words is
    recorded as skipped.
    """
    ctx = ctx if ctx is not None else EvalContext()
    report = Report(identity=name)
    for r in range(plan.max_length + 1):
        n_samples = 1 if r == 0 else plan.samples_per_length
        for i in range(n_samples):
            rec = None
            last_exc = None
            for attempt in range(ctx.retry_cap + 1):
                rng = derived_rng(plan.seed, name, r, i, attempt)
                w = sample_word(rng, r, plan.bounds)
                try:
                    a = ctx.eval(lhs, w)
                    b = ctx.eval(rhs, w)
                except DivByZero as exc:
                    last_exc = exc
                    continue
                rec = PointRecord(name, r, w, a, b, "pass" if a == b else "fail")
                break
            if rec is None:
                detail = None if last_exc is None else str(last_exc)
                rec = PointRecord(name, r, w, None, None, "skipped", detail=detail)
            report.points.append(rec)
    return report
