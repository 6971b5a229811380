"""Tests for the mould engine: evaluation, unary operators, mu/invmu, checker."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from conftest import plan, words_of_length
from oracles import mu2_value, mu3_value, push_image_r1
from flexionlab.engine import (
    FREE,
    GROUP,
    LIE,
    DigestMould,
    EvalContext,
    FuncMould,
    LetterMould,
    Report,
    SamplePlan,
    Scalar,
    anti,
    check_identity,
    der,
    gantar,
    invmu,
    leng_r,
    lu,
    mantar,
    mu,
    neg,
    one,
    pari,
    push,
    push_inv,
    swap,
    zero,
)
from flexionlab.words import (
    EMPTY,
    DivByZero,
    bl,
    negate,
    reverse,
    swap_pullback,
    word,
)

W1 = word([("2", "3")])
W2 = word([("1", "2"), ("3", "4")])
W3 = word([("1/2", "-3"), ("5", "1/4"), ("-2", "7")])


# -- primitives ---------------------------------------------------------------

def test_unit_mould_values(ev):
    assert ev(one(), EMPTY) == 1
    assert ev(one(), W1) == 0
    assert ev(zero(), EMPTY) == 0
    assert ev(zero(), W2) == 0


def test_scalar_classes():
    assert one().empty_class == GROUP
    assert zero().empty_class == LIE
    assert Scalar(Fraction(2, 3)).empty_class == FREE


def test_letter_mould_concentrated_at_length_1(ev):
    L = LetterMould("u-part", lambda x: x.u)
    assert ev(L, W1) == 2
    assert ev(L, EMPTY) == 0
    assert ev(L, W2) == 0
    assert L.empty_class == LIE


def test_digest_mould_deterministic_and_lie(ev):
    A = DigestMould(7, tag="t")
    B = DigestMould(7, tag="t")
    C = DigestMould(8, tag="t")
    assert ev(A, W2) == ev(B, W2)
    assert ev(A, EMPTY) == 0
    # different seeds disagree somewhere on a small word set
    ws = words_of_length(2, 6, seed=3)
    assert any(ev(A, w) != ev(C, w) for w in ws)


def test_memoized_evaluation_is_stable():
    ctx = EvalContext()
    A = DigestMould(3)
    first = ctx.eval(A, W3)
    evals_before = ctx.stats["evals"]
    second = ctx.eval(A, W3)
    assert first == second
    assert ctx.stats["evals"] == evals_before
    assert ctx.stats["memo_hits"] >= 1


def test_arithmetic_sugar(ev):
    A = DigestMould(1)
    B = DigestMould(2)
    w = W2
    assert ev(A + B, w) == ev(A, w) + ev(B, w)
    assert ev(A - B, w) == ev(A, w) - ev(B, w)
    assert ev(Fraction(2, 3) * A, w) == Fraction(2, 3) * ev(A, w)
    assert ev(-A, w) == -ev(A, w)
    assert ev(A + 1, EMPTY) == 1


# -- unary operators ----------------------------------------------------------

def test_unary_coordinate_actions(ev):
    A = DigestMould(5)
    assert ev(anti(A), W3) == ev(A, reverse(W3))
    assert ev(neg(A), W3) == ev(A, negate(W3))
    assert ev(swap(A), W3) == ev(A, swap_pullback(W3))
    assert ev(pari(A), W3) == -ev(A, W3)
    assert ev(pari(A), W2) == ev(A, W2)
    assert ev(der(A), W3) == 3 * ev(A, W3)
    assert ev(leng_r(A, 2), W2) == ev(A, W2)
    assert ev(leng_r(A, 2), W3) == 0


def test_push_at_length_1_negates_the_letter(ev):
    A = DigestMould(6)
    for w in words_of_length(1, 5, seed=1):
        assert ev(push(A), w) == ev(A, (push_image_r1(w[0]),))


def test_mantar_at_length_2_is_negated_reversal(ev):
    A = DigestMould(6)
    assert ev(mantar(A), W2) == -ev(A, reverse(W2))
    assert ev(mantar(A), W1) == ev(A, W1)


def test_anti_mantar_chain_is_minus_pari(ev):
    A = DigestMould(16)
    for w in (W1, W2, W3):
        assert ev(anti(mantar(A)), w) == ev(-pari(A), w)


def test_involutions(ctx):
    A = DigestMould(9)
    for op in (anti, neg, swap, pari, mantar):
        rep = check_identity(op(op(A)), A, plan(L=4, N=3), "involution", ctx)
        assert rep.status == "pass"


def test_push_order_is_length_plus_one(ev):
    A = DigestMould(10)
    for r in range(1, 5):
        for w in words_of_length(r, 2, seed=r):
            rotated = A
            for _ in range(r + 1):
                rotated = push(rotated)
            assert ev(rotated, w) == ev(A, w)


def test_push_inverse_roundtrip_up_to_length_5(ctx):
    A = DigestMould(11)
    rep = check_identity(push(push_inv(A)), A, plan(L=5, N=3), "push-inverse", ctx)
    assert rep.status == "pass"
    rep = check_identity(push_inv(push(A)), A, plan(L=5, N=3), "inverse-push", ctx)
    assert rep.status == "pass"


def test_der_of_length_projection(ctx):
    A = DigestMould(12)
    rep = check_identity(der(leng_r(A, 3)), 3 * leng_r(A, 3), plan(), "der-leng", ctx)
    assert rep.status == "pass"


def test_gantar_requires_group_class():
    with pytest.raises(ValueError):
        gantar(DigestMould(1))


# -- mu / invmu -----------------------------------------------------------------

def test_mu_small_expansions(ev):
    A = one() + DigestMould(21)
    B = one() + DigestMould(22)
    assert ev(mu(A, B), EMPTY) == ev(A, EMPTY) * ev(B, EMPTY)
    assert ev(mu(A, B), W1) == ev(A, EMPTY) * ev(B, W1) + ev(A, W1) * ev(B, EMPTY)


def test_mu_matches_two_block_oracle(ev):
    A = DigestMould(23)
    B = one() + DigestMould(24)
    for r in range(4):
        for w in words_of_length(r, 3, seed=r + 40):
            assert ev(mu(A, B), w) == mu2_value(ev, A, B, w)


def test_mu_associativity_against_triple_sum_oracle(ev):
    A = one() + DigestMould(25)
    B = DigestMould(26)
    C = one() + DigestMould(27)
    count = 0
    for r in range(5):
        for w in words_of_length(r, 5 if r else 1, seed=r + 50):
            expected = mu3_value(ev, A, B, C, w)
            assert ev(mu(mu(A, B), C), w) == expected
            assert ev(mu(A, mu(B, C)), w) == expected
            assert ev(mu(A, B, C), w) == expected
            count += 1
    assert count >= 20


def test_mu_unit_neutral(ctx):
    A = DigestMould(28)
    assert check_identity(mu(one(), A), A, plan(), "left-unit", ctx).status == "pass"
    assert check_identity(mu(A, one()), A, plan(), "right-unit", ctx).status == "pass"


def test_mu_not_commutative_first_at_length_2(ctx):
    A, B = DigestMould(29), DigestMould(30)
    rep = check_identity(mu(A, B), mu(B, A), plan(), "mu-comm", ctx)
    assert rep.status == "fail"
    cex = rep.counterexample
    # length 0 and 1 agree for any two moulds (the two-block sum is symmetric
    # there), so the first possible disagreement is at length 2
    assert cex.length == 2


def test_invmu_of_unit(ctx):
    assert check_identity(invmu(one()), one(), plan(L=3), "invmu-1", ctx).status == "pass"


def test_invmu_length_2_closed_form(ev):
    A = one() + DigestMould(31)
    for w in words_of_length(2, 5, seed=61):
        x, y = (w[0],), (w[1],)
        assert ev(invmu(A), w) == ev(A, x) * ev(A, y) - ev(A, w)


def test_mu_invmu_roundtrip(ctx):
    A = one() + DigestMould(32)
    rep = check_identity(mu(A, invmu(A)), one(), plan(), "invmu-right", ctx)
    assert rep.status == "pass"
    rep = check_identity(mu(invmu(A), A), one(), plan(), "invmu-left", ctx)
    assert rep.status == "pass"


def test_pari_distributes_over_mu_and_invmu(ctx):
    A, B = DigestMould(33), DigestMould(34)
    G = one() + DigestMould(35)
    assert check_identity(pari(mu(A, B)), mu(pari(A), pari(B)), plan(), "pari-mu", ctx).status == "pass"
    assert check_identity(pari(invmu(G)), invmu(pari(G)), plan(), "pari-invmu", ctx).status == "pass"


def test_class_propagation():
    A, B = DigestMould(36), DigestMould(37)
    G = one() + A
    assert G.empty_class == GROUP
    assert mu(G, one() + B).empty_class == GROUP
    assert lu(A, B).empty_class == LIE
    assert invmu(G).empty_class == GROUP
    assert (A + B).empty_class == LIE
    assert (G + one()).empty_class == FREE


def test_lu_antisymmetric(ctx):
    A, B = DigestMould(38), DigestMould(39)
    rep = check_identity(lu(A, B), -lu(B, A), plan(), "lu-antisym", ctx)
    assert rep.status == "pass"


# -- identity checker ------------------------------------------------------------

def test_check_identity_pass_point_count(ctx):
    A = DigestMould(41)
    p = SamplePlan(max_length=3, samples_per_length=4, seed=5)
    rep = check_identity(A, A, p, "self", ctx)
    assert rep.status == "pass"
    # one point at length 0, N points per positive length
    assert len(rep.points) == 1 + 3 * 4
    assert all(pt.status == "pass" for pt in rep.points)


def test_check_identity_fail_reports_counterexample(ctx):
    A, B = DigestMould(42), DigestMould(43)
    rep = check_identity(A, B, plan(), "diff", ctx)
    assert rep.status == "fail"
    cex = rep.counterexample
    assert cex is not None
    assert cex.lhs != cex.rhs
    assert cex.status == "fail"


def test_check_identity_length_0_only(ctx):
    A, B = DigestMould(44), DigestMould(45)  # lie: agree at the empty word
    rep = check_identity(A, B, SamplePlan(max_length=0, samples_per_length=2, seed=1), "empty", ctx)
    assert rep.status == "pass"
    assert len(rep.points) == 1


def test_check_identity_skip_semantics_and_detail(ctx):
    def singular(w):
        raise DivByZero("always singular")

    S = FuncMould("always-singular", singular, LIE)
    rep = check_identity(S, zero(), SamplePlan(max_length=1, samples_per_length=2, seed=2), "sing", ctx)
    # every length-1 point exhausts its retries: skipped points, failing report
    assert rep.status == "fail"
    skipped = [pt for pt in rep.points if pt.status == "skipped"]
    assert skipped and all("always singular" in pt.detail for pt in skipped)
    assert all(pt.lhs is None and pt.rhs is None for pt in skipped)


def test_report_json_shape(ctx):
    A = DigestMould(46)
    rep = check_identity(A, A, plan(L=2, N=2), "shape", ctx)
    data = rep.to_json()
    assert data["identity"] == "shape"
    assert data["status"] == "pass"
    for pt in data["points"]:
        assert set(pt) >= {"identity", "length", "word", "lhs", "rhs", "status"}
        assert "detail" not in pt and "split" not in pt


def test_report_all_skipped_length_fails():
    # a report whose length-2 points are all skipped must fail overall
    pts = [
        dict(identity="x", length=0, word=EMPTY, lhs=Fraction(0), rhs=Fraction(0), status="pass"),
        dict(identity="x", length=2, word=W2, lhs=None, rhs=None, status="skipped"),
    ]
    from flexionlab.engine import PointRecord

    rep = Report("x", [PointRecord(**p) for p in pts])
    assert rep.status == "fail"


def test_check_identity_resamples_on_div_by_zero(ctx):
    # singular exactly at the first length-1 word it meets: the checker must
    # retry that point with a fresh word and end up passing
    first_bad: dict = {"word": None}

    def sometimes(w):
        if len(w) == 1 and first_bad["word"] in (None, w):
            first_bad["word"] = w
            raise DivByZero("unlucky draw")
        return Fraction(0)

    S = FuncMould("first-draw-singular", sometimes, LIE)
    rep = check_identity(S, zero(), SamplePlan(max_length=1, samples_per_length=2, seed=3), "retry", ctx)
    assert rep.status == "pass"
    passed_words = [pt.word for pt in rep.points if pt.length == 1]
    assert first_bad["word"] is not None
    assert first_bad["word"] not in passed_words
