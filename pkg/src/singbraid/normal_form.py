"""
Normal forms and word-problem decisions for SP_3 and SG_3.

The center of SP_3 is infinite cyclic, generated by d = a12 a13 a23, and
splits off as a direct factor: every element factors uniquely as a power
of d times an element of the subgroup V~ generated by a13, a23, b13, b23
and b12.  Eliminating a12 = d a23^-1 a13^-1 from a word and collecting the
central d-powers reduces any SP_3 word to a V~ word.

V~ is built from the free product V = <a13, b13> * <a23, b23> of two rank
two free abelian groups by adjoining the stable letter b12, which commutes
with c = a13 a23.  A V~ word is trivial exactly when, after cancelling
every pinch b12^-e (c-power) b12^e, no stable letters remain and the free
product normal form of the base word is empty; a reduced word that still
contains stable letters is never trivial.  Triviality of the whole group
element then needs d-exponent zero as well, and equality is triviality of
the quotient.  A word of SG_3 is trivial when its projection to the
symmetric group is trivial and its rewrite into SP_3 is.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .permutations import pi
from .sp3 import (
    A12,
    A13,
    A23,
    B12,
    B13,
    B23,
    SPLetter,
    SPWord,
    rewrite_to_sp3,
)
from .words import BraidWord

F13 = "13"
F23 = "23"

_FACTOR_OF = {A13: F13, B13: F13, A23: F23, B23: F23}


class FactorSyllable(NamedTuple):
    """A nontrivial element of one free factor: a^a_exp b^b_exp with the
    indices given by ``factor``."""

    factor: str
    a_exp: int
    b_exp: int

    @property
    def is_trivial(self) -> bool:
        return self.a_exp == 0 and self.b_exp == 0

    def letters(self) -> tuple[SPLetter, ...]:
        a_name, b_name = (A13, B13) if self.factor == F13 else (A23, B23)
        letters = []
        if self.a_exp:
            letters.append(SPLetter(a_name, self.a_exp))
        if self.b_exp:
            letters.append(SPLetter(b_name, self.b_exp))
        return tuple(letters)


def _merge_syllables(syllables: Iterable[FactorSyllable]) -> tuple[FactorSyllable, ...]:
    """Merge same-factor neighbours and drop the trivial syllables that
    appear, restoring alternation.  The stack never holds two adjacent
    same-factor entries, so one pass suffices."""
    stack: list[FactorSyllable] = []
    for syllable in syllables:
        if syllable.is_trivial:
            continue
        if stack and stack[-1].factor == syllable.factor:
            merged = FactorSyllable(
                syllable.factor,
                stack[-1].a_exp + syllable.a_exp,
                stack[-1].b_exp + syllable.b_exp,
            )
            if merged.is_trivial:
                stack.pop()
            else:
                stack[-1] = merged
        else:
            stack.append(syllable)
    return tuple(stack)


@dataclass(frozen=True)
class FreeProductWord:
    """Normal form in V: an alternating sequence of nontrivial syllables."""

    syllables: tuple[FactorSyllable, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "syllables", _merge_syllables(self.syllables))

    @property
    def is_empty(self) -> bool:
        return not self.syllables

    def __mul__(self, other: FreeProductWord) -> FreeProductWord:
        return FreeProductWord(self.syllables + other.syllables)

    def sp_word(self) -> SPWord:
        letters: list[SPLetter] = []
        for syllable in self.syllables:
            letters.extend(syllable.letters())
        return SPWord(tuple(letters))

    def __str__(self) -> str:
        return str(self.sp_word())


def free_product_nf(word: SPWord) -> FreeProductWord:
    """Normal form of a word over a13, b13, a23, b23 in V."""
    syllables = []
    for letter in word.letters:
        factor = _FACTOR_OF.get(letter.name)
        if factor is None:
            raise ValueError(f"{letter.name} is not a generator of the base group")
        if letter.name in (A13, A23):
            syllables.append(FactorSyllable(factor, letter.exponent, 0))
        else:
            syllables.append(FactorSyllable(factor, 0, letter.exponent))
    return FreeProductWord(tuple(syllables))


def _c_power(k: int) -> FreeProductWord:
    """(a13 a23)^k in normal form."""
    if k == 0:
        return FreeProductWord()
    if k > 0:
        pattern = (FactorSyllable(F13, 1, 0), FactorSyllable(F23, 1, 0)) * k
    else:
        pattern = (FactorSyllable(F23, -1, 0), FactorSyllable(F13, -1, 0)) * (-k)
    return FreeProductWord(pattern)


def cyclic_power_of_c(word: FreeProductWord) -> int | None:
    """The k with word = (a13 a23)^k in V, or None when no such k exists.

    Positive powers alternate F13(1,0) F23(1,0); negative powers alternate
    F23(-1,0) F13(-1,0); the empty word is the zeroth power.  Any other
    syllable shape rules membership out because normal forms are unique.
    """
    syllables = word.syllables
    if not syllables:
        return 0
    if len(syllables) % 2:
        return None
    k = len(syllables) // 2
    if syllables == _c_power(k).syllables:
        return k
    if syllables == _c_power(-k).syllables:
        return -k
    return None


@dataclass(frozen=True)
class HNNForm:
    """Alternating stable-letter powers and base words:
    bases[0] b12^powers[0] bases[1] ... b12^powers[m-1] bases[m]."""

    bases: tuple[FreeProductWord, ...]
    powers: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.bases) != len(self.powers) + 1:
            raise ValueError("segment counts out of step")
        if any(power == 0 for power in self.powers):
            raise ValueError("stable-letter powers must be nonzero")

    @property
    def is_base_only(self) -> bool:
        return not self.powers

    @property
    def is_trivial(self) -> bool:
        return self.is_base_only and self.bases[0].is_empty

    def stable_letter_count(self) -> int:
        return sum(abs(power) for power in self.powers)

    def sp_word(self) -> SPWord:
        letters: list[SPLetter] = list(self.bases[0].sp_word().letters)
        for power, base in zip(self.powers, self.bases[1:]):
            letters.append(SPLetter(B12, power))
            letters.extend(base.sp_word().letters)
        return SPWord(tuple(letters))

    def __str__(self) -> str:
        if self.is_trivial:
            return "1"
        parts = []
        if not self.bases[0].is_empty:
            parts.append(str(self.bases[0]))
        for power, base in zip(self.powers, self.bases[1:]):
            parts.append(SPLetter(B12, power).token())
            if not base.is_empty:
                parts.append(str(base))
        return " ".join(parts)


@dataclass(frozen=True)
class CenterSplitForm:
    """A power of the central element d times a reduced V~ form."""

    delta_exp: int
    v: HNNForm

    @property
    def is_trivial(self) -> bool:
        return self.delta_exp == 0 and self.v.is_trivial

    def __str__(self) -> str:
        return f"d^{self.delta_exp} | {self.v}"


def center_generator() -> SPWord:
    """The generator d = a12 a13 a23 of the center of SP_3."""
    return SPWord((SPLetter(A12, 1), SPLetter(A13, 1), SPLetter(A23, 1)))


def eliminate_a12(word: SPWord) -> tuple[int, SPWord]:
    """Substitute a12 = d a23^-1 a13^-1 and collect the central d-powers.

    Returns the total d-exponent and the residual word over the remaining
    five generators.  Collection before any further reduction is harmless
    because d is central.
    """
    delta_exp = 0
    letters: list[SPLetter] = []
    for letter in word.letters:
        if letter.name != A12:
            letters.append(letter)
            continue
        delta_exp += letter.exponent
        if letter.exponent > 0:
            pair = (SPLetter(A23, -1), SPLetter(A13, -1))
        else:
            pair = (SPLetter(A13, 1), SPLetter(A23, 1))
        letters.extend(pair * abs(letter.exponent))
    return delta_exp, SPWord(tuple(letters))


def _split_at_stable(word: SPWord) -> HNNForm:
    bases: list[FreeProductWord] = []
    powers: list[int] = []
    current: list[SPLetter] = []
    for letter in word.letters:
        if letter.name == A12:
            raise ValueError("eliminate a12 before Britton reduction")
        if letter.name == B12:
            bases.append(free_product_nf(SPWord(tuple(current))))
            powers.append(letter.exponent)
            current = []
        else:
            current.append(letter)
    bases.append(free_product_nf(SPWord(tuple(current))))
    return HNNForm(tuple(bases), tuple(powers))


def britton_reduce(word: SPWord) -> HNNForm:
    """Reduce a V~ word to a form with no pinch.

    Repeatedly: merge stable powers separated by a base that is trivial in
    V, and cancel the leftmost pinch b12^-e (a13 a23)^k b12^e by sliding
    the c-power out to the left.  Every step removes at least two stable
    letters or one segment, so the loop terminates; by Britton's lemma the
    resulting form is trivial only if it is an empty base with no stable
    letters.
    """
    form = _split_at_stable(word)
    bases = list(form.bases)
    powers = list(form.powers)
    while True:
        # Merge through interior bases that are trivial in V.
        merged = False
        for i in range(1, len(bases) - 1):
            if bases[i].is_empty:
                combined = powers[i - 1] + powers[i]
                if combined == 0:
                    bases[i - 1 : i + 2] = [bases[i - 1] * bases[i + 1]]
                    del powers[i - 1 : i + 1]
                else:
                    del bases[i]
                    powers[i - 1 : i + 1] = [combined]
                merged = True
                break
        if merged:
            continue
        # Cancel the leftmost opposite-sign pinch around a c-power.
        pinched = False
        for i in range(1, len(bases) - 1):
            if (powers[i - 1] > 0) == (powers[i] > 0):
                continue
            k = cyclic_power_of_c(bases[i])
            if k is None:
                continue
            combined = powers[i - 1] + powers[i]
            left = bases[i - 1] * _c_power(k)
            if combined == 0:
                bases[i - 1 : i + 2] = [left * bases[i + 1]]
                del powers[i - 1 : i + 1]
            else:
                bases[i - 1 : i + 1] = [left]
                powers[i - 1 : i + 1] = [combined]
            pinched = True
            break
        if not pinched:
            return HNNForm(tuple(bases), tuple(powers))


def center_split(word: SPWord) -> CenterSplitForm:
    """The full normal-form pipeline: d-exponent plus reduced V~ form."""
    delta_exp, residual = eliminate_a12(word)
    return CenterSplitForm(delta_exp, britton_reduce(residual))


def is_trivial_sp3(word: SPWord) -> bool:
    """Decide triviality in SP_3."""
    return center_split(word).is_trivial


def equal_sp3(first: SPWord, second: SPWord) -> bool:
    """Decide equality in SP_3 via triviality of the quotient."""
    return is_trivial_sp3(first * second.inverse())


def is_trivial_sg3(word: BraidWord) -> bool:
    """Decide triviality in SG_3: trivial projection and trivial SP_3 part."""
    if word.strands != 3:
        raise ValueError("the SG_3 decision needs a 3-strand word")
    if not pi(word).is_identity:
        return False
    return is_trivial_sp3(rewrite_to_sp3(word))


def canonical_display(form: CenterSplitForm) -> str:
    """A prettier, display-only rendering of a reduced form.

    Each interior base is replaced by its minimal-syllable representative
    modulo sliding powers of c = a13 a23 across the stable letter to its
    left (searching |k| up to half the syllable count plus one, smallest
    |k| wins ties).  Equal group elements may still print differently;
    only the decision procedures are contractual.
    """
    bases = list(form.v.bases)
    powers = list(form.v.powers)
    for i in range(1, len(bases)):
        window = len(bases[i].syllables) // 2 + 1
        candidates = sorted(range(-window, window + 1), key=lambda k: (abs(k), k))
        best = min(
            candidates,
            key=lambda k: len((_c_power(-k) * bases[i]).syllables),
        )
        if best:
            bases[i - 1] = bases[i - 1] * _c_power(best)
            bases[i] = _c_power(-best) * bases[i]
    # Sliding can empty an interior base between same-sign stable letters;
    # merge those powers so the display stays compact.
    i = 1
    while i < len(bases) - 1:
        if bases[i].is_empty:
            powers[i - 1 : i + 1] = [powers[i - 1] + powers[i]]
            del bases[i]
        else:
            i += 1
    compacted = CenterSplitForm(form.delta_exp, HNNForm(tuple(bases), tuple(powers)))
    return str(compacted)
