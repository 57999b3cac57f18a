"""
singbraid: exact word-problem decisions for the 3-strand singular braid
group SG_3 and its pure subgroup SP_3.

The pipeline: parse words over the crossings s1, s2 and singular crossings
t1, t2 (``words``), project to the symmetric group and build Schreier
coset representatives (``permutations``), rewrite kernel words over the
Schreier generators (``rewriting``), express them in the six-generator
presentation of SP_3 (``sp3``), and decide triviality and equality through
the center splitting and Britton reduction (``normal_form``).  Cheap
matrix-quotient invariants cross-check the engine (``oracles``).
"""

from .normal_form import (
    CenterSplitForm,
    FactorSyllable,
    FreeProductWord,
    HNNForm,
    britton_reduce,
    center_generator,
    center_split,
    cyclic_power_of_c,
    eliminate_a12,
    equal_sp3,
    free_product_nf,
    is_trivial_sg3,
    is_trivial_sp3,
)
from .oracles import b3_is_trivial, quotient_to_b3, sg3_necessary_trivial
from .permutations import Permutation, Transversal, coset_rep, pi, schreier_transversal
from .rewriting import (
    SchreierGenerator,
    SchreierWord,
    enumerate_generators,
    relator_rewrites,
    rewrite_tau,
    s_generator_word,
)
from .sp3 import (
    SP2Form,
    SPLetter,
    SPWord,
    conjugate_by_sg3_generator,
    express_schreier_gen,
    parse_sp_word,
    presentation_relators,
    rewrite_to_sp3,
    sp2_normal_form,
    sp3_to_sg3,
    verify_presentation,
)
from .words import (
    BraidWord,
    Letter,
    concat,
    conjugate,
    exponent_sums,
    invert,
    parse_braid_word,
    sg3_relators,
)

__all__ = [
    "BraidWord",
    "CenterSplitForm",
    "FactorSyllable",
    "FreeProductWord",
    "HNNForm",
    "Letter",
    "Permutation",
    "SP2Form",
    "SPLetter",
    "SPWord",
    "SchreierGenerator",
    "SchreierWord",
    "Transversal",
    "b3_is_trivial",
    "britton_reduce",
    "center_generator",
    "center_split",
    "concat",
    "conjugate",
    "conjugate_by_sg3_generator",
    "coset_rep",
    "cyclic_power_of_c",
    "eliminate_a12",
    "enumerate_generators",
    "equal_sp3",
    "exponent_sums",
    "express_schreier_gen",
    "free_product_nf",
    "invert",
    "is_trivial_sg3",
    "is_trivial_sp3",
    "parse_braid_word",
    "parse_sp_word",
    "pi",
    "presentation_relators",
    "quotient_to_b3",
    "relator_rewrites",
    "rewrite_tau",
    "rewrite_to_sp3",
    "s_generator_word",
    "sg3_necessary_trivial",
    "sg3_relators",
    "sp2_normal_form",
    "sp3_to_sg3",
    "schreier_transversal",
    "verify_presentation",
]
