"""Characters of F^x written as nu^e * (unitary part).

A character is stored as an exact rational exponent ``e`` together with a
vector of integer exponents over a finitely generated group of unitary
symbols.  The symbol ``eta`` is always present; it stands for the quadratic
character x -> (x, -1)_F, which is trivial exactly when -1 is a square in F.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

ETA = "eta"
INF = None  # order of a generic unitary symbol

RESERVED = frozenset({ETA, "nu", "x", "omega0", "so1"})


class SymbolTableMismatch(ValueError):
    pass


def _parse_order(text: str) -> int | None:
    text = text.strip().lower()
    if text in ("inf", "infinity", "oo"):
        return INF
    order = int(text)
    if order < 1:
        raise ValueError(f"order must be positive or 'inf', got {text!r}")
    return order


@dataclass(frozen=True)
class UnitarySymbolTable:
    """Generators of the unitary part, each with an order (``None`` = infinite).

    ``eta_order`` is 1 when -1 is a square in F and 2 otherwise.
    """

    generators: tuple[tuple[str, int | None], ...] = ()
    eta_order: int = 2
    _orders: Mapping[str, int | None] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        if self.eta_order not in (1, 2):
            raise ValueError(f"eta order must be 1 or 2, got {self.eta_order}")
        gens = tuple(sorted(self.generators, key=lambda g: g[0]))
        names = [name for name, _ in gens]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate unitary symbols in {names}")
        for name, order in gens:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name) or name in RESERVED:
                raise ValueError(f"invalid unitary symbol name {name!r}")
            if order is not INF and order < 1:
                raise ValueError(f"order of {name!r} must be positive")
        object.__setattr__(self, "generators", gens)
        orders = dict(gens)
        orders[ETA] = self.eta_order
        object.__setattr__(self, "_orders", orders)

    @classmethod
    def from_specs(cls, specs: Iterable[str], eta_order: int = 2) -> "UnitarySymbolTable":
        """Build from ``name:order`` strings such as ``u:inf`` or ``xi:2``."""
        gens = []
        for spec in specs:
            name, sep, order = spec.partition(":")
            if not sep:
                raise ValueError(f"expected name:order, got {spec!r}")
            gens.append((name.strip(), _parse_order(order)))
        return cls(tuple(gens), eta_order)

    def with_eta_order(self, eta_order: int) -> "UnitarySymbolTable":
        return UnitarySymbolTable(self.generators, eta_order)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(sorted(self._orders))

    def order(self, name: str) -> int | None:
        try:
            return self._orders[name]
        except KeyError:
            raise KeyError(f"unknown unitary symbol {name!r}") from None

    def __contains__(self, name: object) -> bool:
        return name in self._orders

    # constructors for characters over this table

    def trivial(self) -> "Character":
        return Character(Fraction(0), (), self)

    def nu(self, exponent=1) -> "Character":
        return Character(Fraction(exponent), (), self)

    def symbol(self, name: str, power: int = 1) -> "Character":
        return make_character(self, 0, {name: power})

    def eta(self) -> "Character":
        return self.symbol(ETA)


def _reduce(table: UnitarySymbolTable, unitary: Mapping[str, int]) -> tuple[tuple[str, int], ...]:
    out = []
    for name in sorted(unitary):
        k = unitary[name]
        order = table.order(name)
        if order is not INF:
            k %= order
        if k:
            out.append((name, k))
    return tuple(out)


def make_character(table: UnitarySymbolTable, exponent, unitary: Mapping[str, int] | None = None) -> "Character":
    return Character(Fraction(exponent), _reduce(table, unitary or {}), table)


@dataclass(frozen=True)
class Character:
    """nu^exponent times a product of unitary symbols.

    ``unitary`` is kept sorted by symbol name with exponents reduced modulo the
    symbol's order and zero entries dropped, so equality is structural.  The
    symbol table does not take part in equality or hashing.
    """

    exponent: Fraction
    unitary: tuple[tuple[str, int], ...]
    table: UnitarySymbolTable = field(compare=False, repr=False)

    def __mul__(self, other: "Character") -> "Character":
        return char_mul(self, other)

    def __pow__(self, k: int) -> "Character":
        return make_character(
            self.table, self.exponent * k, {name: a * k for name, a in self.unitary}
        )

    def inverse(self) -> "Character":
        return char_inv(self)

    @property
    def unitary_part(self) -> "Character":
        return Character(Fraction(0), self.unitary, self.table)

    def twist(self, exponent) -> "Character":
        """Multiply by nu^exponent."""
        return Character(self.exponent + Fraction(exponent), self.unitary, self.table)

    def is_trivial(self) -> bool:
        return self.exponent == 0 and not self.unitary

    def sort_key(self) -> tuple:
        return (self.exponent, self.unitary)

    def __lt__(self, other: "Character") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return render_character(self)


def _check_tables(a: Character, b: Character) -> None:
    if a.table is not b.table and a.table != b.table:
        raise SymbolTableMismatch("characters are defined over different symbol tables")


def char_mul(a: Character, b: Character) -> Character:
    _check_tables(a, b)
    unitary = dict(a.unitary)
    for name, k in b.unitary:
        unitary[name] = unitary.get(name, 0) + k
    return Character(a.exponent + b.exponent, _reduce(a.table, unitary), a.table)


def char_inv(a: Character) -> Character:
    """Inverse character, which is also the contragredient on GL(1)."""
    return Character(-a.exponent, _reduce(a.table, {n: -k for n, k in a.unitary}), a.table)


def char_eq(a: Character, b: Character) -> bool:
    _check_tables(a, b)
    return a == b


def is_self_dual(a: Character) -> bool:
    """True iff a == a^{-1}, i.e. a has order 1 or 2."""
    if a.exponent != 0:
        return False
    for name, k in a.unitary:
        order = a.table.order(name)
        if order is INF or (2 * k) % order:
            return False
    return True


def _fmt_exp(q: Fraction) -> str:
    if q.denominator == 1:
        return f"{q.numerator}"
    return f"{q.numerator}/{q.denominator}"


def render_character(a: Character) -> str:
    """Text form ``nu^{p/q}*sym^{k}*...``; the trivial character is ``1``."""
    parts = []
    if a.exponent == 1:
        parts.append("nu")
    elif a.exponent:
        parts.append(f"nu^{{{_fmt_exp(a.exponent)}}}")
    for name, k in a.unitary:
        parts.append(name if k == 1 else f"{name}^{{{k}}}")
    return "*".join(parts) if parts else "1"
