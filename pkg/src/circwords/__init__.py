"""Balanced and abelian-3-bounded circular words over binary and ternary alphabets."""
from .words import (
    Alphabet,
    CircularWord,
    PrimitiveDecomposition,
    Word,
    apply_permutation,
    canonicalize,
    invert,
    is_palindrome,
    letter_split,
    orbit,
    permutation_orbit,
    primitive_decomposition,
    rotations,
)
from .abelian import (
    Spectrum,
    abelian_complexity,
    balanced_complexity_bound,
    circular_spectrum,
    complexity_profile,
    is_abelian_bounded,
    is_balanced,
    is_balanced_linear,
    max_complexity,
    minimal_nonbalanced_scale,
    parikh,
    word_report,
)
from .christoffel import Slope, christoffel, classify_binary, enumerate_christoffel, is_christoffel, palindrome_factor
from .ternary import (
    ClassificationResult,
    Label,
    TwistSpec,
    classify,
    d3_words,
    enumerate_B3,
    enumerate_M3,
    fraenkel,
    m3_pieces,
    phi,
    phi_prime,
    twisted,
)

__version__ = "0.1.0"
