"""Seeded structured bimoulds and exact symmetry checkers.

The generators here produce bimoulds with a prescribed structure (alternal,
symmetral, push-invariant, ...) from nothing but a seed, so every suite run
can replay the exact same objects.  The checkers mirror
``engine.check_identity``: exact rational comparison at seeded random words,
with division-by-zero points resampled up to the retry cap and recorded as
skipped when exhausted.

Alternality and symmetrality are shuffle-sum conditions: for every splitting
of a word into two nonempty halves ``a`` and ``b``,

    sum over s in shuffles(a, b) of M(s)   equals   0          (alternal)
    sum over s in shuffles(a, b) of M(s)   equals   M(a)M(b)   (symmetral)

O-alternality of ``A`` means ``ganit(oz)^(-1)(A)`` is alternal; an equivalent
route via ``gamit(oz)^(-1)(A)`` is available for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .canonical import FlexionUnit, ess, ganit_oz_inv, mould_oz
from .engine import (
    LIE,
    DigestMould,
    EvalContext,
    Mould,
    PointRecord,
    Report,
    SamplePlan,
    check_identity,
    derived_rng,
    gantar,
    leng_r,
    mantar,
    neg,
    push,
)
from .flexion import adari, ari, expari, gamit_inv
from .senary import e_negpush, e_push, e_sena, o_mantar
from .words import DivByZero, sample_word, shuffles

__all__ = [
    "PROFILE_KINDS",
    "Profile",
    "PushSym",
    "pushsym",
    "gen_bimould",
    "check_alternal",
    "check_symmetral",
    "check_o_alternal",
    "o_alternal_routes_agree",
    "INVARIANT_OPS",
    "check_invariant",
    "check_push_order",
]


# ---------------------------------------------------------------------------
# Push symmetrization
# ---------------------------------------------------------------------------


class PushSym(Mould):
    """Average of the r+1 push-iterates of a lie-class bimould at length r.

    Since push has order r+1 on length-r words, the average is exactly
    push-invariant, and it fixes every bimould that is already push-invariant.
    """

    __slots__ = ("A", "_iters")

    def __init__(self, A: Mould):
        if A.empty_class != LIE:
            raise ValueError("pushsym expects a lie-class bimould")
        super().__init__("pushsym", LIE)
        self.A = A
        self._iters = [A]

    def _eval(self, ctx, w):
        r = len(w)
        while len(self._iters) <= r:
            self._iters.append(push(self._iters[-1]))
        total = Fraction(0)
        for k in range(r + 1):
            total += ctx.eval(self._iters[k], w)
        return total / (r + 1)


def pushsym(A: Mould) -> Mould:
    return PushSym(A)


# ---------------------------------------------------------------------------
# Structured generators
# ---------------------------------------------------------------------------

PROFILE_KINDS = (
    "generic",
    "even_length1",
    "alternal",
    "symmetral",
    "push_invariant",
    "al_al_seed",
    "al_ol",
)


@dataclass(frozen=True)
class Profile:
    """Recipe for a seeded structured bimould."""

    kind: str
    seed: int = 0
    depth: int = 3

    def __post_init__(self):
        if self.kind not in PROFILE_KINDS:
            raise ValueError(f"unknown profile kind {self.kind!r}; known: {PROFILE_KINDS}")
        if self.depth < 0:
            raise ValueError("need depth >= 0")


def _length1_gen(seed: int, tag: str) -> Mould:
    return leng_r(DigestMould(seed, tag=tag), 1)


def _even_length1_gen(seed: int, tag: str) -> Mould:
    D = DigestMould(seed, tag=tag)
    return leng_r(D + neg(D), 1)


def _iterated_ari(gens: list[Mould]) -> Mould:
    # g0 + ari(g0,g1) + ari(ari(g0,g1),g2) + ...  Length-1 bimoulds are
    # alternal for free (shuffle sums land in length >= 2), and ari preserves
    # alternality, so the total is alternal with support up to len(gens).
    acc = gens[0]
    total = gens[0]
    for g in gens[1:]:
        acc = ari(acc, g)
        total = total + acc
    return total


def _gen_generic(profile: Profile, unit: Optional[FlexionUnit]) -> Mould:
    return DigestMould(profile.seed, tag="generic")


def _gen_even_length1(profile: Profile, unit: Optional[FlexionUnit]) -> Mould:
    return _even_length1_gen(profile.seed, "even-1")


def _gen_alternal(profile: Profile, unit: Optional[FlexionUnit]) -> Mould:
    gens = [_length1_gen(profile.seed, f"alternal-{i}") for i in range(profile.depth + 1)]
    return _iterated_ari(gens)


def _gen_symmetral(profile: Profile, unit: Optional[FlexionUnit]) -> Mould:
    gens = [_length1_gen(profile.seed, f"symmetral-{i}") for i in range(profile.depth + 1)]
    return expari(_iterated_ari(gens))


def _gen_push_invariant(profile: Profile, unit: Optional[FlexionUnit]) -> Mould:
    return pushsym(DigestMould(profile.seed, tag="push-invariant"))


def _al_al(profile: Profile, tag_prefix: str) -> Mould:
    gens = [
        _even_length1_gen(profile.seed, f"{tag_prefix}-{i}") for i in range(profile.depth + 1)
    ]
    return _iterated_ari(gens)


def _gen_al_al_seed(profile: Profile, unit: Optional[FlexionUnit]) -> Mould:
    return _al_al(profile, "al-al")


def _gen_al_ol(profile: Profile, unit: Optional[FlexionUnit]) -> Mould:
    if unit is None:
        raise ValueError("profile 'al_ol' needs a flexion unit")
    return adari(ess(unit), _al_al(profile, "al-ol"))


_GENERATORS: dict[str, Callable[[Profile, Optional[FlexionUnit]], Mould]] = {
    "generic": _gen_generic,
    "even_length1": _gen_even_length1,
    "alternal": _gen_alternal,
    "symmetral": _gen_symmetral,
    "push_invariant": _gen_push_invariant,
    "al_al_seed": _gen_al_al_seed,
    "al_ol": _gen_al_ol,
}


def gen_bimould(profile: Profile, unit: Optional[FlexionUnit] = None) -> Mould:
    return _GENERATORS[profile.kind](profile, unit)


# ---------------------------------------------------------------------------
# Shuffle-sum checkers
# ---------------------------------------------------------------------------


def _shape_pairs(max_length: int):
    for total in range(2, max_length + 1):
        for p in range(1, total // 2 + 1):
            yield p, total - p


def _check_shuffle(
    A: Mould,
    plan: SamplePlan,
    name: str,
    ctx: Optional[EvalContext],
    symmetral: bool,
) -> Report:
    ctx = ctx if ctx is not None else EvalContext()
    report = Report(identity=name)
    for p, q in _shape_pairs(plan.max_length):
        for i in range(plan.samples_per_length):
            rec = None
            for attempt in range(ctx.retry_cap + 1):
                rng = derived_rng(plan.seed, name, p, q, i, attempt)
                a = sample_word(rng, p, plan.bounds)
                b = sample_word(rng, q, plan.bounds)
                try:
                    lhs = Fraction(0)
                    for s in shuffles(a, b):
                        lhs += ctx.eval(A, s)
                    rhs = ctx.eval(A, a) * ctx.eval(A, b) if symmetral else Fraction(0)
                except DivByZero:
                    continue
                status = "pass" if lhs == rhs else "fail"
                rec = PointRecord(name, p + q, a + b, lhs, rhs, status, split=p)
                break
            if rec is None:
                rec = PointRecord(name, p + q, a + b, None, None, "skipped", split=p)
            report.points.append(rec)
    return report


def check_alternal(
    A: Mould,
    plan: SamplePlan,
    name: str = "alternal",
    ctx: Optional[EvalContext] = None,
) -> Report:
    """Shuffle sums vanish for every split into two nonempty halves."""
    return _check_shuffle(A, plan, name, ctx, symmetral=False)


def check_symmetral(
    A: Mould,
    plan: SamplePlan,
    name: str = "symmetral",
    ctx: Optional[EvalContext] = None,
) -> Report:
    """Shuffle sums factor as M(a)M(b) for every split into nonempty halves."""
    return _check_shuffle(A, plan, name, ctx, symmetral=True)


def check_o_alternal(
    unit: FlexionUnit,
    A: Mould,
    plan: SamplePlan,
    name: str = "o-alternal",
    ctx: Optional[EvalContext] = None,
    both_routes: bool = False,
) -> Report:
    """O-alternality: ganit(oz)^(-1)(A) is alternal.

    With ``both_routes`` the equivalent gamit-route condition
    (gamit(oz)^(-1)(A) alternal) is checked as well and the point lists are
    merged, so a disagreement between the routes fails the report.
    """
    report = check_alternal(ganit_oz_inv(unit, A), plan, name=name, ctx=ctx)
    if both_routes:
        gamit_route = check_alternal(
            gamit_inv(mould_oz(unit), A), plan, name=name + "#gamit", ctx=ctx
        )
        report = Report(
            identity=name,
            points=report.points + gamit_route.points,
            note="ganit- and gamit-route points merged",
        )
    return report


def o_alternal_routes_agree(
    unit: FlexionUnit,
    A: Mould,
    plan: SamplePlan,
    name: str = "o-alternal-routes",
    ctx: Optional[EvalContext] = None,
) -> Report:
    """Single-point report: both O-alternality routes reach the same verdict.

    This holds whether or not A is O-alternal, so it stays meaningful on
    bimoulds that fail the symmetry itself.
    """
    ganit_route = check_alternal(ganit_oz_inv(unit, A), plan, name=name + "#ganit", ctx=ctx)
    gamit_route = check_alternal(gamit_inv(mould_oz(unit), A), plan, name=name + "#gamit", ctx=ctx)
    verdicts = (ganit_route.status, gamit_route.status)
    point = PointRecord(
        identity=name,
        length=0,
        word=(),
        lhs=Fraction(1 if verdicts[0] == "pass" else 0),
        rhs=Fraction(1 if verdicts[1] == "pass" else 0),
        status="pass" if verdicts[0] == verdicts[1] else "fail",
    )
    return Report(
        identity=name,
        points=[point],
        note=f"ganit-route={verdicts[0]}, gamit-route={verdicts[1]}",
    )


# ---------------------------------------------------------------------------
# Invariance checks
# ---------------------------------------------------------------------------

INVARIANT_OPS: dict[str, Callable[[Optional[FlexionUnit], Mould], Mould]] = {
    "push": lambda unit, A: push(A),
    "neg": lambda unit, A: neg(A),
    "mantar": lambda unit, A: mantar(A),
    "gantar": lambda unit, A: gantar(A),
    "o-mantar": o_mantar,
    "e-negpush": e_negpush,
    "e-push": e_push,
    "e-sena": e_sena,
}

_UNIT_OPS = frozenset({"o-mantar", "e-negpush", "e-push", "e-sena"})


def check_invariant(
    op_name: str,
    A: Mould,
    plan: SamplePlan,
    unit: Optional[FlexionUnit] = None,
    name: Optional[str] = None,
    ctx: Optional[EvalContext] = None,
) -> Report:
    """Check op(A) = A pointwise for a named operator."""
    if op_name not in INVARIANT_OPS:
        raise ValueError(f"unknown invariance {op_name!r}; known: {sorted(INVARIANT_OPS)}")
    if op_name in _UNIT_OPS and unit is None:
        raise ValueError(f"invariance {op_name!r} needs a flexion unit")
    if name is None:
        name = f"{op_name}-invariance"
    transformed = INVARIANT_OPS[op_name](unit, A)
    return check_identity(transformed, A, plan, name=name, ctx=ctx)


def check_push_order(
    A: Mould,
    plan: SamplePlan,
    name: str = "push-order",
    ctx: Optional[EvalContext] = None,
) -> Report:
    """push^(r+1) restores every bimould on length-r words."""
    ctx = ctx if ctx is not None else EvalContext()
    report = Report(identity=name)
    iters = [A]
    for r in range(plan.max_length + 1):
        while len(iters) <= r + 1:
            iters.append(push(iters[-1]))
        n_samples = 1 if r == 0 else plan.samples_per_length
        for i in range(n_samples):
            rec = None
            for attempt in range(ctx.retry_cap + 1):
                rng = derived_rng(plan.seed, name, r, i, attempt)
                w = sample_word(rng, r, plan.bounds)
                try:
                    lhs = ctx.eval(iters[r + 1], w)
                    rhs = ctx.eval(A, w)
                except DivByZero:
                    continue
                rec = PointRecord(name, r, w, lhs, rhs, "pass" if lhs == rhs else "fail")
                break
            if rec is None:
                rec = PointRecord(name, r, w, None, None, "skipped")
            report.points.append(rec)
    return report
