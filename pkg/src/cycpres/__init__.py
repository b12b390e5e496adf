"""Verification toolkit for cyclically presented groups with positive
length-three relators: hyperbolicity classification by congruence
conditions, exact abelianization and coset-enumeration order checks, and
mechanical verification of the star-graph / curvature machinery behind the
classification.
"""

from .abelian import AbelianInvariants, abelian_invariants, relation_matrix, smith_normal_form
from .classify import ClassificationRecord, ConditionVector, classify, conditions, reduce_triple
from .coset import EnumerationResult, FinitePresentation, cyclic_presentation, todd_coxeter
from .curvature import KQuantity, curvature, positive_triangles, run_ledger
from .rewrite import (
    RelativePresentation,
    boundary_word,
    element_A,
    element_B,
    tietze_e24_check,
    verify_consequences,
    verify_script,
)
from .stargraph import LabelQuery, MSolution, enumerate_labels, lemma32_report, solve_m
from .words import CyclicWord, TExp, Word, canonical_cyclic, exponent_sum, free_reduce

__version__ = "0.1.0"

__all__ = [
    "AbelianInvariants",
    "ClassificationRecord",
    "ConditionVector",
    "CyclicWord",
    "EnumerationResult",
    "FinitePresentation",
    "KQuantity",
    "LabelQuery",
    "MSolution",
    "RelativePresentation",
    "TExp",
    "Word",
    "abelian_invariants",
    "boundary_word",
    "canonical_cyclic",
    "classify",
    "conditions",
    "curvature",
    "cyclic_presentation",
    "element_A",
    "element_B",
    "enumerate_labels",
    "exponent_sum",
    "free_reduce",
    "lemma32_report",
    "positive_triangles",
    "reduce_triple",
    "relation_matrix",
    "run_ledger",
    "smith_normal_form",
    "solve_m",
    "tietze_e24_check",
    "todd_coxeter",
    "verify_consequences",
    "verify_script",
]
