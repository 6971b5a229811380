"""Flexion units and the canonical bimoulds built from them.

A flexion unit is a one-letter function E satisfying the tripartite
relation, with conjugate O exchanging the roles of u and v.  From a unit we
build the named moulds oz/ez (geometric mu-inverses), os/es (closed
products), the redistributed weight components ro_r with their generating
series To, the dilator D, the dilator-flow solution S of der(S) =
preari(S, D), and finally the secondary pair: dotted = invgari(S) and
plain = swap(dotted).

Everything is cached per unit so expression graphs (and hence memo entries)
are shared across identities in a run.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .engine import (
    GROUP,
    LIE,
    FuncMould,
    LetterMould,
    Mould,
    Sub,
    derived_rng,
    invmu,
    one,
    pari,
    swap,
)
from .flexion import arit, ganit, ganit_inv, invgari
from .words import Biletter, DivByZero, Rat, Word, fll, flr, ful, fur

UnitFn = Callable[[Biletter], Rat]


def recip(x: Rat) -> Rat:
    """Exact reciprocal; zero raises the trailed division error."""
    if x == 0:
        raise DivByZero("reciprocal of exact zero")
    return 1 / Fraction(x)


class FlexionUnit:
    """A named flexion unit: letter functions E and its conjugate O."""

    def __init__(self, name: str, E: UnitFn, O: UnitFn):
        self.name = name
        self.E = E
        self.O = O
        self._conjugate: FlexionUnit | None = None
        self._moulds: dict[str, Mould] = {}
        self._pair: SecondaryPair | None = None

    def __repr__(self):
        return f"FlexionUnit({self.name!r})"

    def conjugate(self) -> "FlexionUnit":
        if self._conjugate is None:
            conj = FlexionUnit(f"{self.name}-conjugate", self.O, self.E)
            conj._conjugate = self
            self._conjugate = conj
        return self._conjugate

    def _cached(self, key: str, build: Callable[[], Mould]) -> Mould:
        m = self._moulds.get(key)
        if m is None:
            m = build()
            self._moulds[key] = m
        return m


def check_tripartite(U: FlexionUnit, seed: int = 0, samples: int = 20) -> bool:
    """E(w1)E(w2) = E(w1+w2 ; v1)E(u2 ; v2-v1) + E(u1+u2 ; v2)E(u1 ; v1-v2)
    at sampled letters; resamples singular configurations."""
    rng = derived_rng("tripartite", U.name, seed)
    checked = 0
    attempts = 0
    while checked < samples:
        attempts += 1
        if attempts > 50 * samples:
            raise RuntimeError(f"could not sample {samples} regular tripartite points for {U.name}")
        vals = [Fraction(rng.randint(-12, 12), rng.randint(1, 6)) for _ in range(4)]
        u1, v1, u2, v2 = vals
        try:
            lhs = U.E(Biletter(u1, v1)) * U.E(Biletter(u2, v2))
            rhs = U.E(Biletter(u1 + u2, v1)) * U.E(Biletter(u2, v2 - v1)) + U.E(
                Biletter(u1 + u2, v2)
            ) * U.E(Biletter(u1, v1 - v2))
        except DivByZero:
            continue
        if lhs != rhs:
            return False
        checked += 1
    return True


_REGISTRY: dict[str, FlexionUnit] = {}


def register_unit(U: FlexionUnit) -> FlexionUnit:
    """Add a unit to the named registry after validating the tripartite relation."""
    if not check_tripartite(U):
        raise ValueError(f"unit {U.name} fails the tripartite relation")
    _REGISTRY[U.name] = U
    return U


def unit_polar() -> FlexionUnit:
    """The polar unit: E(u;v) = 1/u with conjugate O(u;v) = 1/v."""
    return get_unit("polar")


def unit_conjugate(U: FlexionUnit) -> FlexionUnit:
    return U.conjugate()


def get_unit(name: str) -> FlexionUnit:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown unit {name!r}; registered: {sorted(_REGISTRY)}") from None


_polar = FlexionUnit("polar", lambda x: recip(x.u), lambda x: recip(x.v))
register_unit(_polar)
_REGISTRY["polar-conjugate"] = _polar.conjugate()


# ---------------------------------------------------------------------------
# Named moulds
# ---------------------------------------------------------------------------


def mould_E(U: FlexionUnit) -> Mould:
    """The unit as a length-1 mould (0 at every other length)."""
    return U._cached("E", lambda: LetterMould(f"E[{U.name}]", U.E))


def mould_O(U: FlexionUnit) -> Mould:
    return U._cached("O", lambda: LetterMould(f"O[{U.name}]", U.O))


def mould_oz(U: FlexionUnit) -> Mould:
    """oz := invmu(1 - O); equals the letterwise product of O over the word."""
    return U._cached("oz", lambda: invmu(Sub(one(), mould_O(U))))


def mould_ez(U: FlexionUnit) -> Mould:
    return U._cached("ez", lambda: invmu(Sub(one(), mould_E(U))))


def oz_closed(U: FlexionUnit) -> Mould:
    """Independent closed form of oz: the plain product of O over the letters."""

    def fn(w: Word) -> Rat:
        total = Fraction(1)
        for x in w:
            total *= U.O(x)
        return total

    return U._cached("oz_closed", lambda: FuncMould(f"oz_closed[{U.name}]", fn, GROUP))


def mould_os(U: FlexionUnit) -> Mould:
    """os(w) = prod_i O(u1+...+ui ; v_i - v_{i-1}) with v_0 := 0."""

    def fn(w: Word) -> Rat:
        total = Fraction(1)
        acc_u = Fraction(0)
        prev_v = Fraction(0)
        for x in w:
            acc_u += x.u
            total *= U.O(Biletter(acc_u, x.v - prev_v))
            prev_v = x.v
        return total

    return U._cached("os", lambda: FuncMould(f"os[{U.name}]", fn, GROUP))


def mould_es(U: FlexionUnit) -> Mould:
    """es := swap(oz)."""
    return U._cached("es", lambda: swap(mould_oz(U)))


def es_closed(U: FlexionUnit) -> Mould:
    """Derived closed form of es: prod_i E(u1+...+ui ; v_i - v_{i+1}), v_{r+1} := 0."""

    def fn(w: Word) -> Rat:
        total = Fraction(1)
        acc_u = Fraction(0)
        r = len(w)
        for i, x in enumerate(w):
            acc_u += x.u
            next_v = w[i + 1].v if i + 1 < r else Fraction(0)
            total *= U.E(Biletter(acc_u, x.v - next_v))
        return total

    return U._cached("es_closed", lambda: FuncMould(f"es_closed[{U.name}]", fn, GROUP))


# ---------------------------------------------------------------------------
# Redistributed weights and the dilator
# ---------------------------------------------------------------------------


class RoComponent(Mould):
    """Length-r weight component: sum over the marked letter j of
    (r+1-j) oz(flr(p, m)) O(ful(p, fur(m, q))) oz(fll(m, q)) where
    w = p.m.q with m the single letter at position j."""

    __slots__ = ("unit", "r", "oz")

    def __init__(self, U: FlexionUnit, r: int):
        if r < 1:
            raise ValueError("ro components start at length 1")
        super().__init__(f"ro[{U.name},{r}]", LIE)
        self.unit = U
        self.r = r
        self.oz = mould_oz(U)

    def _eval(self, ctx, w):
        if len(w) != self.r:
            return Fraction(0)
        r = self.r
        total = Fraction(0)
        for j in range(1, r + 1):
            p, m, q = w[: j - 1], w[j - 1 : j], w[j:]
            left = ctx.eval(self.oz, flr(p, m))
            mid_letter = ful(p, fur(m, q))[0]
            mid = self.unit.O(mid_letter)
            right = ctx.eval(self.oz, fll(m, q))
            total += (r + 1 - j) * left * mid * right
        return total


def ro_component(U: FlexionUnit, r: int) -> Mould:
    return U._cached(f"ro[{r}]", lambda: RoComponent(U, r))


class ToSeries(Mould):
    """Sum over r of ro_r / (r (r+1)); finite at each length."""

    __slots__ = ("unit",)

    def __init__(self, U: FlexionUnit):
        super().__init__(f"To[{U.name}]", LIE)
        self.unit = U

    def _eval(self, ctx, w):
        r = len(w)
        if r == 0:
            return Fraction(0)
        return Fraction(1, r * (r + 1)) * ctx.eval(ro_component(self.unit, r), w)


def To_series(U: FlexionUnit) -> Mould:
    return U._cached("To", lambda: ToSeries(U))


def ganit_oz_inv(U: FlexionUnit, A: Mould) -> Mould:
    """Inverse of ganit(oz) applied to A, solved length-by-length.

    The solver route is valid for every unit.  When the conjugate letter
    function depends on v alone (the polar unit), the inverse is also the
    conjugation ganit(pari(os)); see ganit_oz_inv_closed.
    """
    return ganit_inv(mould_oz(U), A)


def ganit_oz_inv_closed(U: FlexionUnit, A: Mould) -> Mould:
    """Closed-form inverse of ganit(oz): conjugation by pari(os).

    Only valid when O is a function of v alone (it fails for the
    conjugate polar unit, whose O depends on u); the identity suites
    cross-check it against the solver route under the polar unit.
    """
    return ganit(U._cached("ganit_oz_inv_arg", lambda: pari(mould_os(U))), A)


def dilator_D(U: FlexionUnit) -> Mould:
    """The dilator: ganit(oz)^{-1} applied to the To series."""
    return U._cached("D", lambda: ganit_oz_inv(U, To_series(U)))


class DilatorFlow(Mould):
    """The unique group-class S with S(empty)=1 and der(S) = preari(S, D).

    At length r the equation reads r S(w) = arit(D)(S)(w) + sum_{w=ab}
    S(a) D(b); every S on the right is at a shorter word except the a=w
    term, which carries D(empty)=0 and is dropped.
    """

    __slots__ = ("D", "inner")

    def __init__(self, D: Mould):
        if D.empty_class != LIE:
            raise ValueError(f"dilator flow needs a lie-class dilator, got {D.empty_class}")
        super().__init__("dilator_flow", GROUP)
        self.D = D
        self.inner = arit(D, self)

    def _eval(self, ctx, w):
        r = len(w)
        if r == 0:
            return Fraction(1)
        total = ctx.eval(self.inner, w)
        for i in range(r):
            total += ctx.eval(self, w[:i]) * ctx.eval(self.D, w[i:])
        return total / r


def solve_dilator_ode(D: Mould) -> Mould:
    return DilatorFlow(D)


# ---------------------------------------------------------------------------
# Secondary pair
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SecondaryPair:
    unit: FlexionUnit
    dotted: Mould  # invgari of the dilator-flow solution
    plain: Mould  # swap of dotted


def secondary_pair(U: FlexionUnit) -> SecondaryPair:
    if U._pair is None:
        flow = U._cached("flow", lambda: solve_dilator_ode(dilator_D(U)))
        dotted = U._cached("dotted", lambda: invgari(flow))
        plain = U._cached("plain", lambda: swap(dotted))
        U._pair = SecondaryPair(U, dotted, plain)
    return U._pair


def oess(U: FlexionUnit) -> Mould:
    """The dotted secondary mould of the base unit (swap of ess)."""
    return secondary_pair(U).dotted


def ess(U: FlexionUnit) -> Mould:
    """The plain secondary mould: bisymmetral, drives the twisted transport."""
    return secondary_pair(U).plain


def eess(U: FlexionUnit) -> Mould:
    """Mirror dotted mould: the dilator chain applied to the conjugate unit."""
    return secondary_pair(U.conjugate()).dotted


def oss(U: FlexionUnit) -> Mould:
    """Mirror plain mould: swap of eess."""
    return secondary_pair(U.conjugate()).plain
