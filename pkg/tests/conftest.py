"""Shared fixtures for the flexionlab test suite."""

from __future__ import annotations

import random

import pytest

from flexionlab.engine import EvalContext, SamplePlan
from flexionlab.canonical import get_unit
from flexionlab.words import Bounds, sample_word


@pytest.fixture
def ctx() -> EvalContext:
    return EvalContext()


@pytest.fixture(scope="session")
def polar():
    return get_unit("polar")


@pytest.fixture(scope="session")
def conj():
    return get_unit("polar-conjugate")


@pytest.fixture
def ev(ctx):
    """Shorthand evaluator: ev(A, w) -> exact Fraction."""

    def _ev(A, w):
        return ctx.eval(A, w)

    return _ev


def plan(L: int = 4, N: int = 3, seed: int = 0) -> SamplePlan:
    return SamplePlan(max_length=L, samples_per_length=N, seed=seed)


def words_of_length(r: int, count: int, seed: int = 0,
                    bounds: Bounds = Bounds(max_num=12, max_den=6)):
    rng = random.Random(seed)
    return [sample_word(rng, r, bounds) for _ in range(count)]
