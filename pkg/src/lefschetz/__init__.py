"""Hilbert functions forcing the Lefschetz and maximal rank properties,
with exact rank tests on graded artinian quotients over QQ and F_p."""

from .classify import ForcingVerdict, expected_quotient_hf, forces_slp_mrp, forces_wlp
from .errors import (
    DimensionMismatch,
    ExhaustiveTooLarge,
    FormInIdeal,
    LefschetzError,
    NotAnOSequence,
    NotArtinianByCap,
    NotHomogeneous,
    NotMonomialIdeal,
    PolynomialSyntaxError,
    UnknownVariable,
    ZeroPolynomial,
)
from .fields import FieldSpec, PrimeField, Rationals
from .hpbound import hp_upper_bound, verify_hp_theorem, verify_key_identity
from .linalg import ExactMatrix, rank, rank_of_stacked
from .macaulay import (
    BinomialExpansion,
    HilbertFunction,
    binom_ext,
    double_bracket,
    expand,
    is_o_sequence,
    macaulay_next_max,
    shift,
    t_index,
)
from .ring import (
    GradedIdeal,
    Polynomial,
    colon_slice_dim,
    hilbert_function,
    ideal_slice_span,
    is_stable,
    is_strongly_stable,
    lex_segment_ideal,
    monomials_of_degree,
    parse_polynomial,
)
from .tester import (
    AllOnesLinear,
    ExhaustiveFiniteField,
    LastVariablePower,
    Property,
    PropertyReport,
    RandomInt,
    Verdict,
    multiplication_rank,
    socle_colon_check,
    test_mrp,
    test_slp,
    test_wlp,
    verify_exact_sequence_decomposition,
)

__version__ = "0.1.0"
