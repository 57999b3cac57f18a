import random

import pytest

from singbraid import (
    b3_is_trivial,
    concat,
    conjugate,
    is_trivial_sg3,
    parse_braid_word,
    quotient_to_b3,
    sg3_necessary_trivial,
    sg3_relators,
)
from singbraid.oracles import (
    IDENTITY,
    TAU_RULES,
    TAU_TO_SIGMA,
    TAU_TO_SIGMA_INVERSE,
    IntMatrix2,
    b3_matrix,
    _homomorphy_audit,
)
from helpers import random_pi_trivial, random_word


def test_quotient_examples():
    relator = parse_braid_word("s1 t1 s1^-1 t1^-1", 3)
    assert quotient_to_b3(relator, TAU_TO_SIGMA).is_empty
    mixed = parse_braid_word("s1 s2 t1 s2^-1 s1^-1 t2^-1", 3)
    assert str(quotient_to_b3(mixed, TAU_TO_SIGMA_INVERSE)) == "s1 s2 s1^-1 s2^-1 s1^-1 s2"
    assert str(quotient_to_b3(parse_braid_word("t2^3", 3), TAU_TO_SIGMA)) == "s2^3"
    with pytest.raises(ValueError):
        quotient_to_b3(relator, "nonsense")


def test_matrix_basics():
    m = IntMatrix2(1, 1, 0, 1)
    assert m @ m.unimodular_inverse() == IDENTITY
    assert m.power(5) == IntMatrix2(1, 5, 0, 1)
    assert m.power(-2) == IntMatrix2(1, -2, 0, 1)
    assert b3_matrix(parse_braid_word("1", 3)) == IDENTITY
    with pytest.raises(ValueError):
        b3_matrix(parse_braid_word("t1", 3))


def test_matrix_images_are_unimodular():
    rng = random.Random(401)
    for _ in range(100):
        word = quotient_to_b3(random_word(rng, max_len=30), TAU_TO_SIGMA)
        assert b3_matrix(word).det() == 1


def test_b3_trivial_examples():
    assert b3_is_trivial(parse_braid_word("s1 s2 s1 s2^-1 s1^-1 s2^-1", 3))
    assert not b3_is_trivial(parse_braid_word("s1 s2 s1 s1 s2 s1", 3))
    half_twists = concat(
        parse_braid_word("s1 s2 s1", 3), parse_braid_word("s2 s1 s2", 3).inverse()
    )
    assert b3_is_trivial(half_twists)


def test_full_twist_squared_matrix():
    # The image of the doubled full twist is the identity, so the exponent
    # sum condition is what rules it out.
    quad = parse_braid_word("s1 s2 s1", 3) ** 4
    assert b3_matrix(quad) == IDENTITY
    assert not b3_is_trivial(quad)


def test_homomorphy_audit():
    assert _homomorphy_audit()
    for relator in sg3_relators():
        for rule in TAU_RULES:
            assert b3_is_trivial(quotient_to_b3(relator, rule))


def test_oracle_on_relator_conjugates():
    rng = random.Random(419)
    for relator in sg3_relators():
        for _ in range(10):
            word = conjugate(relator, random_word(rng))
            assert sg3_necessary_trivial(word)


def test_oracle_rejections():
    assert not sg3_necessary_trivial(parse_braid_word("t1 s1^-1", 3))
    assert not sg3_necessary_trivial(parse_braid_word("s1", 3))
    # Balanced and projection-trivial but killed by the matrix image:
    assert not sg3_necessary_trivial(parse_braid_word("s1^2 s2^-2", 3))


def test_oracle_cannot_refute_the_hard_word():
    word = parse_braid_word("t1 t2 t1 t2^-1 t1^-1 t2^-1", 3)
    assert sg3_necessary_trivial(word)
    assert not is_trivial_sg3(word)


def test_b3_completeness_on_relator_products():
    rng = random.Random(421)
    braid_relator = parse_braid_word("s1 s2 s1 s2^-1 s1^-1 s2^-1", 3)
    for _ in range(500):
        word = parse_braid_word("1", 3)
        for _ in range(rng.randrange(1, 4)):
            conj = quotient_to_b3(random_word(rng, max_len=6), TAU_TO_SIGMA)
            piece = conjugate(braid_relator, conj)
            if rng.random() < 0.5:
                piece = piece.inverse()
            word = concat(word, piece)
        assert b3_is_trivial(word)


def test_b3_rejects_unbalanced_words():
    rng = random.Random(431)
    seen = 0
    while seen < 500:
        word = quotient_to_b3(random_word(rng, max_len=30), TAU_TO_SIGMA)
        from singbraid import exponent_sums

        if exponent_sums(word)[0] == 0:
            continue
        assert not b3_is_trivial(word)
        seen += 1


def test_engine_never_contradicts_oracle():
    rng = random.Random(433)
    for _ in range(200):
        word = random_pi_trivial(rng)
        if is_trivial_sg3(word):
            assert sg3_necessary_trivial(word)
