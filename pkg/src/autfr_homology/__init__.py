"""Exact computation of the Aut(F_r) action on H_*(G^r; Q) for compact semisimple G."""

from .catalog import (
    GroupSpec,
    SimpleFactor,
    degrees_of,
    dimension_of,
    parse_group,
    poincare_polynomial,
)
from .grassmann import Context, HomologyClass, basis_of_degree, canonicalize
from .freegroup import (
    AutMap,
    Letter,
    Word,
    abelianization_matrix,
    is_IA,
    letter_to_autmap,
    magnus_ia_generators,
    parse_letters,
    word_to_autmap,
)
from .action import (
    RepMatrix,
    RingEndomorphism,
    act_path_a,
    act_path_b,
    diagonal_class,
    endo_of_letter,
    full_matrix,
    representation_matrix,
)
from .verify import verify_theorems  # noqa: E402

__all__ = [
    "AutMap",
    "Context",
    "GroupSpec",
    "HomologyClass",
    "Letter",
    "RepMatrix",
    "RingEndomorphism",
    "SimpleFactor",
    "Word",
    "abelianization_matrix",
    "act_path_a",
    "act_path_b",
    "basis_of_degree",
    "canonicalize",
    "degrees_of",
    "diagonal_class",
    "dimension_of",
    "endo_of_letter",
    "full_matrix",
    "is_IA",
    "letter_to_autmap",
    "magnus_ia_generators",
    "parse_group",
    "parse_letters",
    "poincare_polynomial",
    "representation_matrix",
    "verify_theorems",
    "word_to_autmap",
]

__version__ = "0.1.0"
