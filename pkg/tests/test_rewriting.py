import random

import pytest

from singbraid import (
    Letter,
    SchreierGenerator,
    concat,
    conjugate,
    enumerate_generators,
    parse_braid_word,
    relator_rewrites,
    rewrite_tau,
    s_generator_word,
    sg3_relators,
)
from singbraid.rewriting import expand
from helpers import random_pi_trivial


def gen(rep_text: str, letter_token: str) -> SchreierGenerator:
    rep = parse_braid_word(rep_text, 3)
    return SchreierGenerator(rep, Letter(letter_token[0], int(letter_token[1:]), 1))


def test_generator_word_examples():
    assert s_generator_word(gen("1", "s1")).is_empty
    assert str(s_generator_word(gen("s2 s1", "s1"))) == "s2 s1^2 s2^-1"
    assert str(s_generator_word(gen("s1 s2 s1", "t2"))) == "s1 s2 s1 t2 s1^-1 s2^-1"


def test_generator_word_has_trivial_projection():
    from singbraid import pi

    for entry in enumerate_generators(3):
        assert pi(entry.ambient).is_identity


def test_schreier_generator_requires_bare_letter():
    with pytest.raises(ValueError):
        SchreierGenerator(parse_braid_word("s1", 3), Letter("s", 1, -1))


def test_generator_word_requires_transversal_rep():
    with pytest.raises(ValueError):
        s_generator_word(gen("s1^2", "t1"))
    with pytest.raises(ValueError):
        s_generator_word(gen("s2 s1 s2", "t1"))


def test_enumerate_n2():
    entries = enumerate_generators(2)
    assert len(entries) == 4
    table = {(str(e.generator.rep), e.generator.letter.token()): str(e.ambient) for e in entries}
    assert table == {
        ("1", "s1"): "1",
        ("1", "t1"): "t1 s1^-1",
        ("s1", "s1"): "s1^2",
        ("s1", "t1"): "s1 t1",
    }


def test_enumerate_n3_counts():
    entries = enumerate_generators(3)
    assert len(entries) == 24
    trivial = {
        (str(e.generator.rep), e.generator.letter.token()) for e in entries if e.trivial
    }
    assert trivial == {
        ("1", "s1"),
        ("1", "s2"),
        ("s1", "s2"),
        ("s2", "s1"),
        ("s1 s2", "s1"),
    }
    assert sum(not e.trivial for e in entries) == 19


def test_rewrite_examples():
    assert str(rewrite_tau(parse_braid_word("s1^2", 3))) == "S[s1,s1]"
    assert str(rewrite_tau(parse_braid_word("t1 s1^-1", 3))) == "S[1,t1]"
    assert str(rewrite_tau(parse_braid_word("s2 s1^2 s2^-1", 3))) == "S[s2 s1,s1]"


def test_rewrite_rejects_nontrivial_projection():
    with pytest.raises(ValueError):
        rewrite_tau(parse_braid_word("s1", 3))


def test_rewrite_substitutes_back_exactly():
    rng = random.Random(101)
    for _ in range(300):
        word = random_pi_trivial(rng)
        assert expand(rewrite_tau(word)) == word


def test_rewrite_works_on_two_strands():
    rng = random.Random(107)
    assert str(rewrite_tau(parse_braid_word("s1^2", 2))) == "S[s1,s1]"
    for _ in range(100):
        word = random_pi_trivial(rng, strands=2, max_len=20)
        assert expand(rewrite_tau(word), strands=2) == word


def test_rewrite_of_concat_is_concat_of_rewrites():
    rng = random.Random(103)
    for _ in range(100):
        u = random_pi_trivial(rng, max_len=20)
        v = random_pi_trivial(rng, max_len=20)
        assert rewrite_tau(concat(u, v)) == rewrite_tau(u) * rewrite_tau(v)


def test_relator_rewrites_count_and_labels():
    rewrites = relator_rewrites()
    assert len(rewrites) == 30
    assert sorted({r.relator_index for r in rewrites}) == [1, 2, 3, 4, 5]


def lookup(rewrites, index, rep_text):
    for rewrite in rewrites:
        if rewrite.relator_index == index and str(rewrite.rep) == rep_text:
            return rewrite.word
    raise AssertionError(f"no rewrite for r{index} @ {rep_text}")


def test_relator_rewrite_examples():
    rewrites = relator_rewrites()
    assert str(lookup(rewrites, 1, "s2")) == "S[s2 s1,t1] S[s2 s1,s1]^-1 S[s2,t1]^-1"
    assert str(lookup(rewrites, 2, "1")) == "S[s2 s1,s2]^-1"
    # The conjugate of the fourth relator by s2 keeps S[s2 s1,s2]: that
    # generator is trivial as a group element but not freely, and dropping
    # it would break the exact substitution property.
    assert str(lookup(rewrites, 4, "s2")) == "S[s2 s1,s2] S[s1 s2 s1,t1] S[s2,t2]^-1"


def test_relator_rewrites_substitute_to_conjugates():
    rewrites = relator_rewrites()
    relators = sg3_relators()
    for rewrite in rewrites:
        expected = conjugate(relators[rewrite.relator_index - 1], rewrite.rep)
        assert expand(rewrite.word) == expected
