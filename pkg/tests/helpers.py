"""Shared word generators for the test suite.  Everything is seeded, so
failures reproduce."""

from __future__ import annotations

import random

from singbraid import (
    BraidWord,
    Letter,
    SPLetter,
    SPWord,
    concat,
    conjugate,
    coset_rep,
    sg3_relators,
)
from singbraid.sp3 import SP_NAMES
from singbraid.words import SIGMA, TAU


def random_letter(rng: random.Random, strands: int = 3) -> Letter:
    kind = rng.choice((SIGMA, TAU))
    return Letter(kind, rng.randrange(1, strands), rng.choice((-1, 1)))


def random_word(rng: random.Random, strands: int = 3, max_len: int = 20) -> BraidWord:
    length = rng.randrange(max_len + 1)
    return BraidWord(strands, tuple(random_letter(rng, strands) for _ in range(length)))


def random_pi_trivial(rng: random.Random, strands: int = 3, max_len: int = 40) -> BraidWord:
    """A random kernel word: a random word with its coset representative
    cancelled off, keeping the unit length within max_len."""
    margin = strands * (strands - 1) // 2
    base = random_word(rng, strands, max_len - margin)
    return concat(base, coset_rep(base).inverse())


def random_relator_product(rng: random.Random, max_factors: int = 6, conj_len: int = 8) -> BraidWord:
    """A product of conjugated SG_3 relators: trivial by construction."""
    relators = sg3_relators()
    word = BraidWord(3)
    for _ in range(rng.randrange(1, max_factors + 1)):
        relator = rng.choice(relators)
        if rng.random() < 0.5:
            relator = relator.inverse()
        word = concat(word, conjugate(relator, random_word(rng, 3, conj_len)))
    return word


def random_sp_word(rng: random.Random, max_len: int = 20) -> SPWord:
    length = rng.randrange(max_len + 1)
    letters = tuple(
        SPLetter(rng.choice(SP_NAMES), rng.choice((-1, 1))) for _ in range(length)
    )
    return SPWord(letters)
