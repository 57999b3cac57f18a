"""
Subgroup generators and rewriting for the pure subgroup SP_n.

For a Schreier transversal L and an ambient generator a, the element
S(l, a) = l a (rep(l a))^-1 lies in the kernel of the projection, and
these elements generate SP_n.  A kernel word u = a_1^e_1 ... a_m^e_m
rewrites to the product of S(k_j, a_j)^e_j where k_j is the representative
of the prefix of u before the j-th letter when e_j = +1 and of the prefix
through the j-th letter when e_j = -1.  Substituting each S(l, a) by its
ambient word telescopes back to u exactly, which is the correctness
property the tests machine-check.

Generators whose ambient word freely reduces to the empty word (for
example S(1, s1) = s1 s1^-1) carry no content and are dropped during
rewriting; all other generators are kept even when they happen to be
trivial as group elements, since dropping them would break the exact
telescoping above.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .permutations import Permutation, Transversal, pi, schreier_transversal
from .words import SIGMA, TAU, BraidWord, Letter, concat, conjugate, sg3_relators


@dataclass(frozen=True)
class SchreierGenerator:
    """The kernel element S(rep, letter) for a transversal word and a
    positive ambient generator."""

    rep: BraidWord
    letter: Letter

    def __post_init__(self) -> None:
        if self.letter.exponent != 1:
            raise ValueError("Schreier generators use bare ambient generators")

    def __str__(self) -> str:
        return f"S[{self.rep},{self.letter.token()}]"


@dataclass(frozen=True)
class SchreierWord:
    """A freely reduced word over the Schreier generators; factors carry
    exponent +1 or -1."""

    factors: tuple[tuple[SchreierGenerator, int], ...] = ()

    @property
    def is_empty(self) -> bool:
        return not self.factors

    def inverse(self) -> SchreierWord:
        return SchreierWord(tuple((g, -e) for g, e in reversed(self.factors)))

    def __mul__(self, other: SchreierWord) -> SchreierWord:
        return schreier_word(self.factors + other.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " ".join(
            str(g) if e == 1 else f"{g}^-1" for g, e in self.factors
        )


def schreier_word(factors) -> SchreierWord:
    """Cancel adjacent mutually inverse factors."""
    stack: list[tuple[SchreierGenerator, int]] = []
    for factor in factors:
        if stack and stack[-1][0] == factor[0] and stack[-1][1] == -factor[1]:
            stack.pop()
        else:
            stack.append(factor)
    return SchreierWord(tuple(stack))


def s_generator_word(
    generator: SchreierGenerator, transversal: Transversal | None = None
) -> BraidWord:
    """The ambient word l a (rep(l a))^-1, freely reduced."""
    rep = generator.rep
    if transversal is None:
        transversal = schreier_transversal(rep.strands)
    if transversal.rep_of(pi(rep)) != rep:
        raise ValueError(f"{rep} is not a transversal representative")
    stepped = concat(rep, BraidWord(rep.strands, (generator.letter,)))
    return concat(stepped, transversal.rep_of(pi(stepped)).inverse())


@lru_cache(maxsize=None)
def _canonical_ambient(generator: SchreierGenerator) -> BraidWord:
    return s_generator_word(generator, schreier_transversal(generator.rep.strands))


@dataclass(frozen=True)
class GeneratorEntry:
    generator: SchreierGenerator
    ambient: BraidWord

    @property
    def trivial(self) -> bool:
        return self.ambient.is_empty


def _generator_letters(strands: int) -> list[Letter]:
    sigmas = [Letter(SIGMA, i, 1) for i in range(1, strands)]
    taus = [Letter(TAU, i, 1) for i in range(1, strands)]
    return sigmas + taus


def enumerate_generators(strands: int) -> tuple[GeneratorEntry, ...]:
    """All |L| * 2(n-1) Schreier generators with their ambient words,
    transversal-major, crossings before singular letters within a block."""
    transversal = schreier_transversal(strands)
    entries = []
    for rep in transversal.elements:
        for letter in _generator_letters(strands):
            generator = SchreierGenerator(rep, letter)
            entries.append(GeneratorEntry(generator, s_generator_word(generator, transversal)))
    return tuple(entries)


def rewrite_tau(word: BraidWord, transversal: Transversal | None = None) -> SchreierWord:
    """Rewrite a kernel word as a word over the Schreier generators.

    Streams the projection over the prefixes of ``word`` once; generators
    with freely empty ambient words are skipped.
    """
    canonical = schreier_transversal(word.strands)
    if transversal is None:
        transversal = canonical
    if not pi(word).is_identity:
        raise ValueError("can only rewrite words with trivial projection")
    prefix = Permutation.identity(word.strands)
    factors: list[tuple[SchreierGenerator, int]] = []
    for letter in word.unit_letters():
        before = prefix
        prefix = prefix.then(Permutation.transposition(word.strands, letter.index))
        key = before if letter.exponent == 1 else prefix
        generator = SchreierGenerator(
            transversal.rep_of(key), Letter(letter.kind, letter.index, 1)
        )
        if transversal is canonical:
            ambient = _canonical_ambient(generator)
        else:
            ambient = s_generator_word(generator, transversal)
        if ambient.is_empty:
            continue
        factors.append((generator, letter.exponent))
    return schreier_word(factors)


def expand(word: SchreierWord, strands: int = 3) -> BraidWord:
    """Substitute each Schreier generator by its ambient word."""
    result = BraidWord(strands)
    for generator, exponent in word.factors:
        ambient = _canonical_ambient(generator)
        result = concat(result, ambient if exponent == 1 else ambient.inverse())
    return result


@dataclass(frozen=True)
class RelatorRewrite:
    relator_index: int
    rep: BraidWord
    word: SchreierWord


def relator_rewrites() -> tuple[RelatorRewrite, ...]:
    """The 30 rewrites of the SG_3 relators conjugated by each transversal
    element; these words present SP_3 over the Schreier generators."""
    transversal = schreier_transversal(3)
    rewrites = []
    for index, relator in enumerate(sg3_relators(), start=1):
        for rep in transversal.elements:
            rewritten = rewrite_tau(conjugate(relator, rep), transversal)
            rewrites.append(RelatorRewrite(index, rep, rewritten))
    return tuple(rewrites)
