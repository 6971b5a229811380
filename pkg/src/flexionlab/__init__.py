"""flexionlab: exact verification of bimould flexion identities.

Bimoulds are per-length functions of words whose letters carry a pair of
exact rational coordinates.  This package evaluates them lazily as
expression DAGs over ``fractions.Fraction``, builds the canonical bimoulds
attached to a flexion unit, implements the unit-twisted operator family, and
verifies the algebraic identities relating them at seeded random words.

Entry points:

- :mod:`flexionlab.words`: letters, words, flexions, shuffles, sampling.
- :mod:`flexionlab.engine`: the evaluation engine and mould combinators.
- :mod:`flexionlab.flexion`: derivations and automorphisms (arit/garit/...).
- :mod:`flexionlab.canonical`: flexion units and their canonical bimoulds.
- :mod:`flexionlab.senary`: unit-twisted operators and the senary relation.
- :mod:`flexionlab.symmetry`: structured generators and symmetry checkers.
- :mod:`flexionlab.negelon`: exact binomial scans.
- :mod:`flexionlab.suites`: named verification suites.
- :mod:`flexionlab.cli`: the ``flexionlab`` command line.
"""

from .engine import (
    EvalContext,
    Mould,
    Report,
    SamplePlan,
    check_identity,
)
from .canonical import FlexionUnit, get_unit, register_unit
from .words import Biletter, Word, bl, rat, word

__all__ = [
    "Biletter",
    "EvalContext",
    "FlexionUnit",
    "Mould",
    "Report",
    "SamplePlan",
    "Word",
    "bl",
    "check_identity",
    "get_unit",
    "rat",
    "register_unit",
    "word",
]

__version__ = "0.1.0"
