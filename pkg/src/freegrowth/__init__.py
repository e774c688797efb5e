"""Reduced-word arithmetic, word periodicity and product-set growth in free
groups of finite rank."""

from .errors import (
    AlphabetError,
    FreeGrowthError,
    PreconditionViolation,
    SizeCapExceeded,
    VerificationFailure,
)
from .words import (
    Alphabet,
    Letter,
    Word,
    commutes,
    concat,
    conjugate,
    find_noncommuting_pair,
    format_word,
    invert,
    parse_word,
    primitive_root,
    reduce,
)
from .periodicity import PeriodDecomposition, left_period, lemma5_check, overlap_lemma, right_period
from .setops import (
    GrowthReport,
    WordSet,
    all_products_reduced,
    conjugate_set,
    growth_table,
    power,
    product,
    word_set,
)
from .extraction import ExtractionResult, classify, lemma1_extract, split_shortest_longest, verify_extraction
from .bounds import (
    Dichotomy,
    MultiplicityReport,
    StarForm,
    TheoremReport,
    free_generation_check,
    lemma2_dichotomy,
    lemma3_witness,
    lemma4_bound,
    lemma6_check,
    representation_multiplicity,
    star_case,
    theorem_check,
)
from .generators import GeneratorConfig, enumerate_words, extremal_family, random_set

__all__ = [
    "PeriodDecomposition",
    "left_period",
    "lemma5_check",
    "overlap_lemma",
    "right_period",
    "ExtractionResult",
    "classify",
    "lemma1_extract",
    "split_shortest_longest",
    "verify_extraction",
    "AlphabetError",
    "FreeGrowthError",
    "PreconditionViolation",
    "SizeCapExceeded",
    "VerificationFailure",
    "Alphabet",
    "Letter",
    "Word",
    "commutes",
    "concat",
    "conjugate",
    "find_noncommuting_pair",
    "format_word",
    "invert",
    "parse_word",
    "primitive_root",
    "reduce",
    "GrowthReport",
    "WordSet",
    "all_products_reduced",
    "conjugate_set",
    "growth_table",
    "power",
    "product",
    "word_set",
    "Dichotomy",
    "MultiplicityReport",
    "StarForm",
    "TheoremReport",
    "free_generation_check",
    "lemma2_dichotomy",
    "lemma3_witness",
    "lemma4_bound",
    "lemma6_check",
    "representation_multiplicity",
    "star_case",
    "theorem_check",
    "GeneratorConfig",
    "enumerate_words",
    "extremal_family",
    "random_set",
]

__version__ = "0.1.0"
