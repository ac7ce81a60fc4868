"""palfact: minimal palindromic factorizations of binary words.

Every binary word w splits into nonempty palindromic blocks; m(w) is the
least number of blocks needed and measures how far w is from being
symmetric.  The package computes m with an explicit witness, enumerates
the worst case K(n) = max m and the exact average kbar(n) = 2^-n sum m
over all words of length n, replays the computer-checkable steps behind
the closed form for K(n), and evaluates the constants bounding the limit
of kbar(n)/n.
"""

from .asymptotics import (
    AsymptoticsReport,
    CountingBounds,
    bounds_report,
    counting_bounds,
    f_theta,
    g_prime_roots,
    g_theta,
    theta_prime,
)
from .distribution import (
    AverageRow,
    CountingBoundReport,
    MHistogram,
    SubadditivityReport,
    counting_bound_check,
    histogram,
    histogram_rows,
    k_bar,
    k_bar_rows,
    subadditivity_check,
)
from .extremal import (
    ExtremalRow,
    Orbit,
    Theorem1Report,
    k_formula,
    k_max,
    k_max_rows,
    verify_theorem1,
    worst_words,
)
from .factorization import Factorization, IncrementalState, measure, min_factorization, reachable_k
from .lemmas import (
    LemmaReport,
    M_CONSTANTS,
    ksum_property,
    verify_case_lemma,
    verify_lemma1,
    verify_lemma7,
    verify_lemma8,
    verify_lemma9,
)
from .words import (
    PalTable,
    Word,
    WordError,
    family,
    is_palindrome,
    longest_palindromic_factor,
    orbit,
    parse_word,
    symmetries,
    word_from_bits,
)

__version__ = "0.1.0"

__all__ = [
    "AsymptoticsReport",
    "AverageRow",
    "CountingBoundReport",
    "CountingBounds",
    "ExtremalRow",
    "Factorization",
    "IncrementalState",
    "LemmaReport",
    "MHistogram",
    "M_CONSTANTS",
    "Orbit",
    "PalTable",
    "SubadditivityReport",
    "Theorem1Report",
    "Word",
    "WordError",
    "bounds_report",
    "counting_bound_check",
    "counting_bounds",
    "f_theta",
    "family",
    "g_prime_roots",
    "g_theta",
    "histogram",
    "histogram_rows",
    "is_palindrome",
    "k_bar",
    "k_bar_rows",
    "k_formula",
    "k_max",
    "k_max_rows",
    "ksum_property",
    "longest_palindromic_factor",
    "measure",
    "min_factorization",
    "orbit",
    "parse_word",
    "reachable_k",
    "subadditivity_check",
    "symmetries",
    "theta_prime",
    "verify_case_lemma",
    "verify_lemma1",
    "verify_lemma7",
    "verify_lemma8",
    "verify_lemma9",
    "verify_theorem1",
    "word_from_bits",
    "worst_words",
]
