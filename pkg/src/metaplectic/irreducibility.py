"""Irreducibility of principal series of Sp(2n)~ (genuine) and SO(2n+1).

The series (chi x1) x ... x (chi xn) |x omega0 is irreducible exactly when

  (1) no xi equals nu^{+-1/2} times a character of order 1 or 2, and
  (2) no pair i < j has xi = nu^{+-1} xj^{+-1}.

The same two conditions decide x1 x ... x xn |x 1_SO(1) on split SO(2n+1),
so :func:`decide` runs identical logic for both group tags.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Sequence

from .characters import Character, char_inv, is_self_dual
from .formal_ring import SpWord, Word

Group = Literal["metaplectic", "so_odd"]
GROUPS = ("metaplectic", "so_odd")

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class PrincipalSeries:
    chars: tuple[Character, ...]
    group: Group = "metaplectic"

    def __post_init__(self) -> None:
        if self.group not in GROUPS:
            raise ValueError(f"unknown group tag {self.group!r}")
        object.__setattr__(self, "chars", tuple(self.chars))
        tables = {c.table for c in self.chars}
        if len(tables) > 1:
            raise ValueError("all characters of a principal series must share a symbol table")

    @property
    def n(self) -> int:
        return len(self.chars)

    @property
    def genuine(self) -> bool:
        return self.group == "metaplectic"

    def word(self) -> Word:
        """The GL-side product of the inducing characters (twisted if genuine)."""
        return Word(self.chars, self.genuine)

    def spword(self) -> SpWord:
        return SpWord(self.chars, self.genuine)

    def with_group(self, group: Group) -> "PrincipalSeries":
        return PrincipalSeries(self.chars, group)


@dataclass(frozen=True)
class Cond1:
    """xi_index = nu^sign * xi with xi of order 1 or 2 (index is 1-based)."""

    index: int
    xi: Character
    sign: Fraction

    def holds_for(self, chars: Sequence[Character]) -> bool:
        c = chars[self.index - 1]
        return is_self_dual(self.xi) and c == self.xi.twist(self.sign)


@dataclass(frozen=True)
class Cond2:
    """xi_i = nu^s1 * xi_j^s2 with 1-based i < j and s1, s2 in {+1, -1}."""

    i: int
    j: int
    s1: int
    s2: int

    def holds_for(self, chars: Sequence[Character]) -> bool:
        a, b = chars[self.i - 1], chars[self.j - 1]
        return self.i < self.j and a == (b if self.s2 == 1 else char_inv(b)).twist(self.s1)


@dataclass(frozen=True)
class Verdict:
    irreducible: bool
    witness: Cond1 | Cond2 | None = None

    def __post_init__(self) -> None:
        if self.irreducible != (self.witness is None):
            raise ValueError("a verdict is irreducible exactly when it has no witness")


def find_condition1_witness(chars: Sequence[Character]) -> Cond1 | None:
    for i, c in enumerate(chars, start=1):
        for sign in (HALF, -HALF):
            if c.exponent == sign and is_self_dual(c.unitary_part):
                return Cond1(i, c.unitary_part, sign)
    return None


_SIGNS = ((1, 1), (1, -1), (-1, 1), (-1, -1))


def find_condition2_witness(chars: Sequence[Character]) -> Cond2 | None:
    inverses = [char_inv(c) for c in chars]
    for i in range(len(chars)):
        for j in range(i + 1, len(chars)):
            for s1, s2 in _SIGNS:
                other = chars[j] if s2 == 1 else inverses[j]
                if chars[i].unitary == other.unitary and chars[i].exponent == other.exponent + s1:
                    return Cond2(i + 1, j + 1, s1, s2)
    return None


def decide(ps: PrincipalSeries) -> Verdict:
    """Decide irreducibility; reducible verdicts carry the first failing condition."""
    witness = find_condition1_witness(ps.chars) or find_condition2_witness(ps.chars)
    return Verdict(witness is None, witness)


def canonicalize(ps: PrincipalSeries) -> PrincipalSeries:
    """Weyl-orbit representative with e(x1) >= ... >= e(xn) >= 0.

    Characters with negative exponent are inverted; ties are broken on the
    unitary part so the result is a total function of the input multiset
    (exponent-zero characters are kept as given).
    """
    flipped = [char_inv(c) if c.exponent < 0 else c for c in ps.chars]
    flipped.sort(key=lambda c: (-c.exponent, c.unitary))
    return PrincipalSeries(tuple(flipped), ps.group)


def distinguished_term(ps: PrincipalSeries) -> tuple[Word, SpWord]:
    """Split a canonical series into its positive-exponent and exponent-zero blocks.

    Returns the pair ``[x1..xi] (x) [x_{i+1}..xn |x anchor]`` whose Jacquet
    multiplicity is one when the series is irreducible.
    """
    if any(c.exponent < 0 for c in ps.chars):
        raise ValueError("distinguished_term expects a canonical series (all exponents >= 0)")
    positive = [c for c in ps.chars if c.exponent > 0]
    rest = [c for c in ps.chars if c.exponent == 0]
    return Word(tuple(positive), ps.genuine), SpWord(tuple(rest), ps.genuine)


def decide_so_odd(chars: Sequence[Character]) -> Verdict:
    return decide(PrincipalSeries(tuple(chars), "so_odd"))


def decide_metaplectic(chars: Sequence[Character]) -> Verdict:
    return decide(PrincipalSeries(tuple(chars), "metaplectic"))

