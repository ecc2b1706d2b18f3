"""Jacquet modules of principal series through the M* calculus.

For a GL-side word ``w`` the twisted comultiplication is the composite

    M*(w) = (m (x) id) o (~ (x) m*) o kappa o m*(w)

and on genuine words the dual ``~`` is replaced by ``alpha . ~``.  The
Jacquet functor on an induced representation is then

    mu*(pi |x sigma) = M*(pi) |x mu*(sigma),    mu*(anchor) = 1 (x) anchor,

where ``(b (x) g) |x (d (x) e) = (b . d) (x) (g |x e)``.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from dataclasses import dataclass, field
from typing import Iterable, Literal, Sequence

from .characters import Character, UnitarySymbolTable
from .formal_ring import (
    Element,
    GenuinenessError,
    SpWord,
    Word,
    alpha_twist,
    chi_twist,
    comult,
    contragredient,
    kappa,
    mult,
    tensor_map,
    word_mult,
)
from .irreducibility import PrincipalSeries

Order = Literal["inner-first", "outer-first", "block"]


def big_mstar(w: Word) -> Element:
    """M*(w) for a non-genuine word, as an Element of words (x) words."""
    if w.genuine:
        raise GenuinenessError("big_mstar expects a non-genuine word; use big_mstar_gen")
    step = comult(w)
    step = kappa(step)
    step = tensor_map(step, contragredient, comult)
    return step.map(lambda t: (word_mult(t[0], t[1]), t[2]))


def big_mstar_gen(w: Word) -> Element:
    """M*~(w) for a genuine word; the dual is alpha times the contragredient."""
    if not w.genuine:
        raise GenuinenessError("big_mstar_gen expects a genuine word; use big_mstar")
    step = comult(w)
    step = kappa(step)

    def twisted_dual(b: Word) -> Word:
        return alpha_twist(contragredient(b))

    acc = Element()
    for (dual_leg, rest), c in step:
        for (mid, right), c2 in comult(rest):
            acc += Element.basis(
                (_single(mult(twisted_dual(dual_leg), mid)), right), c * c2
            )
    return acc


def _single(x: Element) -> Word:
    (b, c), = x.items()
    assert c == 1
    return b


def rtimes(mstar: Element, mu: Element) -> Element:
    """(sum b (x) g) |x (sum d (x) e) = sum (b . d) (x) (g |x e)."""
    acc: dict = {}
    for (beta, gamma), c1 in mstar.items():
        for (delta, eps), c2 in mu.items():
            if gamma.genuine != eps.genuine:
                raise GenuinenessError("cannot induce across genuine and non-genuine data")
            key = (word_mult(beta, delta), SpWord(gamma.chars + eps.chars, eps.genuine))
            acc[key] = acc.get(key, 0) + c1 * c2
    return Element(acc)


def _mstar_for(w: Word) -> Element:
    return big_mstar_gen(w) if w.genuine else big_mstar(w)


def anchor_mu(genuine: bool) -> Element:
    """mu*(omega0) = 1 (x) omega0, or mu*(1_SO(1)) = 1 (x) 1_SO(1)."""
    return Element.basis((Word((), genuine), SpWord((), genuine)))


@dataclass(frozen=True)
class JacquetExpansion:
    value: Element
    source: PrincipalSeries = field(compare=False)

    def mass(self) -> int:
        return self.value.mass()

    def coefficient(self, left: Word, right: SpWord) -> int:
        return self.value.coefficient((left, right))

    def __iter__(self):
        return iter(self.value)

    def __len__(self) -> int:
        return len(self.value)


def mu_star(ps: PrincipalSeries, order: Order = "inner-first") -> JacquetExpansion:
    """Full Jacquet expansion of the principal series.

    ``inner-first`` peels x_n, x_{n-1}, ... off ``x1 |x (x2 |x (... |x anchor))``;
    ``outer-first`` inducts in the opposite order; ``block`` applies M* to
    the whole product ``x1 x ... x xn`` at once.  All three agree.
    """
    g = ps.genuine
    acc = anchor_mu(g)
    if order == "block":
        acc = rtimes(_mstar_for(ps.word()), acc)
    elif order in ("inner-first", "outer-first"):
        chars = ps.chars[::-1] if order == "inner-first" else ps.chars
        for c in chars:
            acc = rtimes(_mstar_for(Word((c,), g)), acc)
    else:
        raise ValueError(f"unknown order {order!r}")
    return JacquetExpansion(acc, ps)


def jacquet_multiplicity(ps: PrincipalSeries, left: Word, right: SpWord) -> int:
    """Multiplicity of ``left (x) right`` in mu*(ps), after normalizing both legs."""
    left = Word(left.chars, left.genuine)
    right = SpWord(right.chars, right.genuine)
    return mu_star(ps).coefficient(left, right)


@dataclass(frozen=True)
class LemmaReport:
    word: Word
    ok: bool
    genuine_side: Element
    linear_side: Element
    only_genuine: Element
    only_linear: Element

    def describe(self) -> str:
        if self.ok:
            return f"pass: {self.word}"
        lines = [f"FAIL: {self.word}", "  only in M*~(w):"]
        lines += [f"    {c} * ({b[0]}) ⊗ ({b[1]})" for b, c in self.only_genuine]
        lines.append("  only in (chi (x) chi) M*(chi^-1 w):")
        lines += [f"    {c} * ({b[0]}) ⊗ ({b[1]})" for b, c in self.only_linear]
        return "\n".join(lines)


def verify_lemma(w: Word) -> LemmaReport:
    """Check M*~(w) == (chi (x) chi) M*(chi^{-1} w) for a genuine word."""
    if not w.genuine:
        raise GenuinenessError("verify_lemma expects a genuine word")
    lhs = big_mstar_gen(w)
    untwisted = chi_twist(Element.basis(w), "inverse")
    (pi, _), = untwisted.items()
    rhs = tensor_map(
        big_mstar(pi),
        lambda b: chi_twist(b, "forward"),
        lambda b: chi_twist(b, "forward"),
    )
    diff = lhs - rhs
    only_lhs = Element({b: c for b, c in diff.items() if c > 0})
    only_rhs = Element({b: -c for b, c in diff.items() if c < 0})
    return LemmaReport(w, not diff, lhs, rhs, only_lhs, only_rhs)


def default_pool(table: UnitarySymbolTable, size: int) -> list[Character]:
    """Deterministic pool of distinct characters mixing exponents and symbols."""
    exponents = [Fraction(e) for e in (0, "1/2", -1, "1/4", "3/2", "-1/2", 1, "-3/4", 2, "-5/2", "1/3")]
    symbols = [table.trivial(), table.eta()]
    for name, order in table.generators:
        s = table.symbol(name)
        symbols.append(s)
        if order is None or order > 2:
            symbols.append(s.inverse())
    pool: list[Character] = []
    # i -> (i mod 11, i mod len(symbols)) walks the grid diagonally
    for i in range(len(exponents) * len(symbols)):
        c = symbols[i % len(symbols)].twist(exponents[i % len(exponents)])
        if c not in pool:
            pool.append(c)
        if len(pool) == size:
            return pool
    raise ValueError(f"symbol table supports only {len(pool)} pool characters")


def genuine_words(pool: Sequence[Character], max_len: int) -> Iterable[Word]:
    for k in range(max_len + 1):
        for combo in itertools.combinations_with_replacement(range(len(pool)), k):
            yield Word(tuple(pool[i] for i in combo), True)


def lemma_sweep(pool: Sequence[Character], max_len: int) -> list[LemmaReport]:
    return [verify_lemma(w) for w in genuine_words(pool, max_len)]
