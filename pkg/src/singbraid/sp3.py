"""
The six-generator presentation of the 3-strand pure subgroup SP_3.

SP_3 is generated by

    a12 = s1^2          a13 = s2 s1^2 s2^-1      a23 = s2^2
    b12 = s1 t1         b13 = s2 s1 t1 s2^-1     b23 = s2 t2

subject to eight relations (see ``presentation_relators``).  Every
Schreier generator of SP_3 equals a short word in these six letters; the
lookup lives in ``EXPRESSION_TABLE`` and composing it with the rewriting
process turns any kernel word of SG_3 into an SP word
(``rewrite_to_sp3``).  Conjugation by the four ambient generators and
their inverses restricts to automorphisms of SP_3, tabulated in
``conjugate_by_sg3_generator``.

``verify_presentation`` machine-checks all of the above against the
normal-form engine: the 30 rewritten relators and the 8 presentation
relators must be trivial, the 24 conjugation formulas must hold, and the
expression table must agree with the ambient generator words.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from . import rewriting
from .words import BraidWord, Letter, concat, parse_braid_word

A12, A13, A23 = "a12", "a13", "a23"
B12, B13, B23 = "b12", "b13", "b23"
SP_NAMES = (A12, A13, A23, B12, B13, B23)

_SP_TOKEN_RE = re.compile(r"([ab](?:12|13|23))(?:\^(-?[1-9][0-9]*))?\Z")


class SPLetter(NamedTuple):
    """One of the six SP_3 generators raised to a nonzero power."""

    name: str
    exponent: int

    def inverse(self) -> SPLetter:
        return SPLetter(self.name, -self.exponent)

    def token(self) -> str:
        if self.exponent == 1:
            return self.name
        return f"{self.name}^{self.exponent}"


def _merge_sp_runs(letters: Iterable[SPLetter]) -> tuple[SPLetter, ...]:
    stack: list[SPLetter] = []
    for letter in letters:
        if letter.exponent == 0:
            continue
        if stack and stack[-1].name == letter.name:
            merged = stack[-1].exponent + letter.exponent
            if merged == 0:
                stack.pop()
            else:
                stack[-1] = SPLetter(letter.name, merged)
        else:
            stack.append(letter)
    return tuple(stack)


@dataclass(frozen=True)
class SPWord:
    """A freely reduced word over the six SP_3 generators."""

    letters: tuple[SPLetter, ...] = ()

    def __post_init__(self) -> None:
        for letter in self.letters:
            if letter.name not in SP_NAMES:
                raise ValueError(f"unknown SP_3 generator {letter.name!r}")
        object.__setattr__(self, "letters", _merge_sp_runs(self.letters))

    @property
    def is_empty(self) -> bool:
        return not self.letters

    def inverse(self) -> SPWord:
        return SPWord(tuple(l.inverse() for l in reversed(self.letters)))

    def __mul__(self, other: SPWord) -> SPWord:
        return SPWord(self.letters + other.letters)

    def __pow__(self, power: int) -> SPWord:
        if power < 0:
            return self.inverse() ** (-power)
        result = SPWord()
        for _ in range(power):
            result = result * self
        return result

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(letter.token() for letter in self.letters)


def parse_sp_word(text: str) -> SPWord:
    """Parse the SP_3 word grammar: tokens a12 .. b23 with optional ``^<k>``,
    the standalone token ``1`` denoting the empty word."""
    letters: list[SPLetter] = []
    for token in text.split():
        if token == "1":
            continue
        match = _SP_TOKEN_RE.match(token)
        if match is None:
            raise ValueError(f"bad token {token!r} in SP word")
        name, exponent = match.group(1), match.group(2)
        letters.append(SPLetter(name, 1 if exponent is None else int(exponent)))
    return SPWord(tuple(letters))


# The defining SG_3 words of the six generators.
_SP_TO_SG = {
    A12: "s1^2",
    A13: "s2 s1^2 s2^-1",
    A23: "s2^2",
    B12: "s1 t1",
    B13: "s2 s1 t1 s2^-1",
    B23: "s2 t2",
}


def sp3_to_sg3(word: SPWord) -> BraidWord:
    """Substitute each SP_3 generator by its defining SG_3 word."""
    result = BraidWord(3)
    for letter in word.letters:
        base = parse_braid_word(_SP_TO_SG[letter.name], 3)
        result = concat(result, base**letter.exponent)
    return result


def _schreier_generator(rep_text: str, letter_token: str) -> rewriting.SchreierGenerator:
    rep = parse_braid_word(rep_text, 3)
    kind, index = letter_token[0], int(letter_token[1:])
    return rewriting.SchreierGenerator(rep, Letter(kind, index, 1))


def _expression_table() -> dict[rewriting.SchreierGenerator, SPWord]:
    """Every Schreier generator of SP_3 as a word in the six letters.

    The five generators with freely empty ambient words map to the empty
    word, and so does S[s2 s1, s2]: its ambient word is a conjugate of the
    braid relator, hence trivial as a group element.
    """
    rows = {
        ("1", "s1"): "1",
        ("1", "s2"): "1",
        ("1", "t1"): "b12 a12^-1",
        ("1", "t2"): "b23 a23^-1",
        ("s1", "s1"): "a12",
        ("s1", "s2"): "1",
        ("s1", "t1"): "b12",
        ("s1", "t2"): "a23^-1 b13 a13^-1 a23",
        ("s2", "s1"): "1",
        ("s2", "s2"): "a23",
        ("s2", "t1"): "b13 a13^-1",
        ("s2", "t2"): "b23",
        ("s1 s2", "s1"): "1",
        ("s1 s2", "s2"): "a23^-1 a13 a23",
        ("s1 s2", "t1"): "b23 a23^-1",
        ("s1 s2", "t2"): "a23^-1 b13 a23",
        ("s2 s1", "s1"): "a13",
        ("s2 s1", "s2"): "1",
        ("s2 s1", "t1"): "b13",
        ("s2 s1", "t2"): "b12 a12^-1",
        ("s1 s2 s1", "s1"): "a23",
        ("s1 s2 s1", "s2"): "a12",
        ("s1 s2 s1", "t1"): "b23",
        ("s1 s2 s1", "t2"): "b12",
    }
    return {
        _schreier_generator(rep, letter): parse_sp_word(text)
        for (rep, letter), text in rows.items()
    }


EXPRESSION_TABLE = _expression_table()


def express_schreier_gen(generator: rewriting.SchreierGenerator) -> SPWord:
    """Look up a Schreier generator in the six-letter expression table."""
    try:
        return EXPRESSION_TABLE[generator]
    except KeyError:
        raise ValueError(f"unknown Schreier generator {generator}") from None


def rewrite_to_sp3(word: BraidWord) -> SPWord:
    """Rewrite a kernel word of SG_3 as a word in the six SP_3 generators."""
    if word.strands != 3:
        raise ValueError("SP_3 rewriting needs a 3-strand word")
    schreier = rewriting.rewrite_tau(word)
    result = SPWord()
    for generator, exponent in schreier.factors:
        expressed = express_schreier_gen(generator)
        result = result * (expressed if exponent == 1 else expressed.inverse())
    return result


def presentation_relators() -> list[SPWord]:
    """The eight defining relators of SP_3 over the six generators, each as
    left side times inverted right side."""
    equalities = [
        ("a12 a13 a12^-1", "a23^-1 a13 a23"),
        ("a12 a23 a12^-1", "a23^-1 a13^-1 a23 a13 a23"),
        ("a12 b12", "b12 a12"),
        ("a13 b13", "b13 a13"),
        ("a23 b23", "b23 a23"),
        ("b12 a13 a23 b12^-1", "a13 a23"),
        ("a12 b13 a12^-1", "a23^-1 b13 a23"),
        ("a12 b23 a12^-1", "a23^-1 a13^-1 b23 a13 a23"),
    ]
    return [
        parse_sp_word(left) * parse_sp_word(right).inverse()
        for left, right in equalities
    ]


def _action_tables() -> dict[tuple[str, int], dict[str, SPWord]]:
    """Images of the six generators under conjugation x -> g^-1 x g.

    The four positive directions are fixed data; the inverse directions
    are obtained by inverting those automorphisms (solve each forward rule
    for the preimage).  Round trips are property-tested.
    """
    forward = {
        ("s1", 1): {
            A12: "a12",
            A13: "a13 a23 a13^-1",
            A23: "a13",
            B12: "b12",
            B13: "a13 b23 a13^-1",
            B23: "b13",
        },
        ("s2", 1): {
            A12: "a23^-1 a13 a23",
            A13: "a12",
            A23: "a23",
            B12: "a23^-1 b13 a23",
            B13: "b12",
            B23: "b23",
        },
        ("t1", 1): {
            A12: "a12",
            A13: "b12^-1 a23 b12",
            A23: "b12^-1 a23^-1 a13 a23 b12",
            B12: "b12",
            B13: "b12^-1 b23 b12",
            B23: "b12^-1 a12 b13 a12^-1 b12",
        },
        ("t2", 1): {
            A12: "b23^-1 a13 b23",
            A13: "b23^-1 a23 a12 a23^-1 b23",
            A23: "a23",
            B12: "b23^-1 b13 b23",
            B13: "b23^-1 a23 b12 a23^-1 b23",
            B23: "b23",
        },
    }
    backward = {
        ("s1", -1): {
            A12: "a12",
            A13: "a23",
            A23: "a23^-1 a13 a23",
            B12: "b12",
            B13: "b23",
            B23: "a23^-1 b13 a23",
        },
        ("s2", -1): {
            A12: "a13",
            A13: "a23 a12 a23^-1",
            A23: "a23",
            B12: "b13",
            B13: "a23 b12 a23^-1",
            B23: "b23",
        },
        ("t1", -1): {
            A12: "a12",
            A13: "b12 a13 a23 a13^-1 b12^-1",
            A23: "b12 a13 b12^-1",
            B12: "b12",
            B13: "a12^-1 b12 b23 b12^-1 a12",
            B23: "b12 b13 b12^-1",
        },
        ("t2", -1): {
            A12: "a23^-1 b23 a13 b23^-1 a23",
            A13: "b23 a12 b23^-1",
            A23: "a23",
            B12: "a23^-1 b23 b13 b23^-1 a23",
            B13: "b23 b12 b23^-1",
            B23: "b23",
        },
    }
    tables: dict[tuple[str, int], dict[str, SPWord]] = {}
    for key, rows in {**forward, **backward}.items():
        tables[key] = {name: parse_sp_word(text) for name, text in rows.items()}
    return tables


ACTION_TABLES = _action_tables()


def conjugate_by_sg3_generator(word: SPWord, generator: Letter) -> SPWord:
    """Apply x -> g^-1 x g letterwise for an ambient generator g.

    ``generator`` must be one of s1, s2, t1, t2 with any nonzero exponent;
    exponents of magnitude above one apply the unit action repeatedly.
    """
    token = f"{generator.kind}{generator.index}"
    if token not in ("s1", "s2", "t1", "t2") or generator.exponent == 0:
        raise ValueError(f"cannot conjugate by {generator.token()}")
    table = ACTION_TABLES[(token, 1 if generator.exponent > 0 else -1)]
    result = word
    for _ in range(abs(generator.exponent)):
        image = SPWord()
        for letter in result.letters:
            image = image * (table[letter.name] ** letter.exponent)
        result = image
    return result


class SP2Form(NamedTuple):
    """Normal form in SP_2, which is free abelian on a12 and b12."""

    a_exp: int
    b_exp: int

    @property
    def is_trivial(self) -> bool:
        return self == (0, 0)


def sp2_normal_form(word: SPWord) -> SP2Form:
    """Exponent-sum pair of a word over a12 and b12 only."""
    a_exp = b_exp = 0
    for letter in word.letters:
        if letter.name == A12:
            a_exp += letter.exponent
        elif letter.name == B12:
            b_exp += letter.exponent
        else:
            raise ValueError(f"{letter.name} is not an SP_2 generator")
    return SP2Form(a_exp, b_exp)


@dataclass(frozen=True)
class Check:
    label: str
    passed: bool
    witness: str = ""


@dataclass(frozen=True)
class CheckGroup:
    name: str
    checks: tuple[Check, ...]

    @property
    def passed(self) -> int:
        return sum(check.passed for check in self.checks)

    @property
    def total(self) -> int:
        return len(self.checks)


@dataclass(frozen=True)
class VerificationReport:
    groups: tuple[CheckGroup, ...]

    @property
    def passed(self) -> int:
        return sum(group.passed for group in self.groups)

    @property
    def total(self) -> int:
        return sum(group.total for group in self.groups)

    @property
    def all_passed(self) -> bool:
        return self.passed == self.total

    def failures(self) -> list[tuple[str, Check]]:
        return [
            (group.name, check)
            for group in self.groups
            for check in group.checks
            if not check.passed
        ]


GROUP_REWRITTEN = "rewritten-relators"
GROUP_PRESENTATION = "presentation-relators"
GROUP_CONJUGATION = "conjugation-rules"
GROUP_EXPRESSION = "expression-table"


def _check_rewritten_relators(is_trivial_sp3) -> CheckGroup:
    checks = []
    for rewrite in rewriting.relator_rewrites():
        expressed = SPWord()
        for generator, exponent in rewrite.word.factors:
            row = express_schreier_gen(generator)
            expressed = expressed * (row if exponent == 1 else row.inverse())
        checks.append(
            Check(
                label=f"r{rewrite.relator_index} @ {rewrite.rep}",
                passed=is_trivial_sp3(expressed),
                witness=str(expressed),
            )
        )
    return CheckGroup(GROUP_REWRITTEN, tuple(checks))


def _check_presentation_relators(is_trivial_sp3) -> CheckGroup:
    checks = [
        Check(label=f"relator {i}", passed=is_trivial_sp3(relator), witness=str(relator))
        for i, relator in enumerate(presentation_relators(), start=1)
    ]
    return CheckGroup(GROUP_PRESENTATION, tuple(checks))


def _check_conjugation_rules(equal_sp3) -> CheckGroup:
    checks = []
    for token in ("s1", "s2", "t1", "t2"):
        ambient = parse_braid_word(token, 3)
        for name in SP_NAMES:
            claimed = ACTION_TABLES[(token, 1)][name]
            conjugated = concat(
                concat(ambient.inverse(), sp3_to_sg3(SPWord((SPLetter(name, 1),)))),
                ambient,
            )
            computed = rewrite_to_sp3(conjugated)
            checks.append(
                Check(
                    label=f"{name}^{token}",
                    passed=equal_sp3(computed, claimed),
                    witness=f"{computed} vs {claimed}",
                )
            )
    return CheckGroup(GROUP_CONJUGATION, tuple(checks))


def _check_expression_table(is_trivial_sg3) -> CheckGroup:
    checks = []
    for entry in rewriting.enumerate_generators(3):
        if entry.trivial:
            continue
        row = express_schreier_gen(entry.generator)
        difference = concat(sp3_to_sg3(row), entry.ambient.inverse())
        checks.append(
            Check(
                label=str(entry.generator),
                passed=is_trivial_sg3(difference),
                witness=f"{entry.generator} = {row}",
            )
        )
    return CheckGroup(GROUP_EXPRESSION, tuple(checks))


def verify_presentation(groups: Iterable[str] | None = None) -> VerificationReport:
    """Machine-check the presentation data against the decision engine.

    Runs four suites (30 + 8 + 24 + 19 checks): triviality of the
    rewritten relators after expression through the six-letter table,
    triviality of the presentation relators, the conjugation formulas for
    all generator pairs, and agreement of the expression table with the
    ambient Schreier generator words.
    """
    from .normal_form import equal_sp3, is_trivial_sg3, is_trivial_sp3

    wanted = (
        (GROUP_REWRITTEN, GROUP_PRESENTATION, GROUP_CONJUGATION, GROUP_EXPRESSION)
        if groups is None
        else tuple(groups)
    )
    builders = {
        GROUP_REWRITTEN: lambda: _check_rewritten_relators(is_trivial_sp3),
        GROUP_PRESENTATION: lambda: _check_presentation_relators(is_trivial_sp3),
        GROUP_CONJUGATION: lambda: _check_conjugation_rules(equal_sp3),
        GROUP_EXPRESSION: lambda: _check_expression_table(is_trivial_sg3),
    }
    report_groups = []
    for name in wanted:
        if name not in builders:
            raise ValueError(f"unknown check group {name!r}")
        report_groups.append(builders[name]())
    return VerificationReport(tuple(report_groups))
