"""Grothendieck groups of principal-series data as free Z-modules.

Basis elements are :class:`Word` (a product of GL(1) characters, optionally
twisted by chi_psi) and :class:`SpWord` (such a product induced up to a
symplectic or odd orthogonal group).  Tensors are plain tuples of basis
elements.  An :class:`Element` is a finite Z-linear combination.

Genuine words carry the chi_psi twist implicitly: the genuine word with
characters ``[x1, ..., xk]`` stands for ``(chi x1) x ... x (chi xk)``.
Squares of chi_psi never survive in a normal form since chi_psi^2 = alpha,
and alpha restricted to GL(1) is the symbol ``eta``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Iterator, Literal

from .characters import Character, char_inv, char_mul

ANCHORS = {True: "omega0", False: "so1"}


class GenuinenessError(ValueError):
    """Raised when genuine and non-genuine data are combined."""


@dataclass(frozen=True)
class Word:
    chars: tuple[Character, ...]
    genuine: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "chars", tuple(sorted(self.chars, key=Character.sort_key)))

    @classmethod
    def of(cls, chars: Iterable[Character] = (), genuine: bool = False) -> "Word":
        return cls(tuple(chars), genuine)

    def __len__(self) -> int:
        return len(self.chars)

    def sort_key(self) -> tuple:
        return (self.genuine, len(self.chars), tuple(c.sort_key() for c in self.chars))

    def __str__(self) -> str:
        return render_word(self)


def sp_representative(c: Character) -> Character:
    """Choose one of {c, c^{-1}}: the one with positive exponent, else the smaller."""
    if c.exponent > 0:
        return c
    inv = char_inv(c)
    if c.exponent < 0:
        return inv
    return min(c, inv, key=Character.sort_key)


@dataclass(frozen=True)
class SpWord:
    """``x1 x ... x xk |x anchor`` in R_S (genuine: anchor omega0, else 1_SO(1)).

    Each character is stored up to inversion, since x |x anchor and
    x^{-1} |x anchor agree in the Grothendieck group.
    """

    chars: tuple[Character, ...]
    genuine: bool = True

    def __post_init__(self) -> None:
        reps = (sp_representative(c) for c in self.chars)
        object.__setattr__(self, "chars", tuple(sorted(reps, key=Character.sort_key)))

    @classmethod
    def of(cls, chars: Iterable[Character] = (), genuine: bool = True) -> "SpWord":
        return cls(tuple(chars), genuine)

    def __len__(self) -> int:
        return len(self.chars)

    @property
    def anchor(self) -> str:
        return ANCHORS[self.genuine]

    def sort_key(self) -> tuple:
        return (self.genuine, len(self.chars), tuple(c.sort_key() for c in self.chars))

    def __str__(self) -> str:
        return render_spword(self)


def basis_key(b) -> tuple:
    if isinstance(b, tuple):
        return tuple(basis_key(x) for x in b)
    return b.sort_key()


class Element:
    """Finite Z-linear combination of hashable basis elements.

    Zero coefficients are never stored.  Iteration yields ``(basis, coeff)``
    pairs in sorted basis order so that output is reproducible.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif not isinstance(terms, dict):
            acc: dict = {}
            for b, c in terms:
                acc[b] = acc.get(b, 0) + c
            terms = acc
        self._terms = {b: int(c) for b, c in terms.items() if c}
        self._hash = None

    @classmethod
    def basis(cls, b: Hashable, coeff: int = 1) -> "Element":
        return cls({b: coeff})

    @classmethod
    def zero(cls) -> "Element":
        return cls()

    @classmethod
    def lift(cls, x) -> "Element":
        return x if isinstance(x, Element) else cls.basis(x)

    def items(self) -> list:
        return sorted(self._terms.items(), key=lambda kv: basis_key(kv[0]))

    def __iter__(self) -> Iterator:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __contains__(self, b) -> bool:
        return b in self._terms

    def coefficient(self, b) -> int:
        return self._terms.get(b, 0)

    def mass(self) -> int:
        """Sum of all coefficients."""
        return sum(self._terms.values())

    def support(self) -> list:
        return [b for b, _ in self.items()]

    def __eq__(self, other) -> bool:
        if isinstance(other, Element):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: "Element") -> "Element":
        other = Element.lift(other)
        terms = dict(self._terms)
        for b, c in other._terms.items():
            terms[b] = terms.get(b, 0) + c
        return Element(terms)

    __radd__ = __add__

    def __neg__(self) -> "Element":
        return Element({b: -c for b, c in self._terms.items()})

    def __sub__(self, other: "Element") -> "Element":
        return self + (-Element.lift(other))

    def __rmul__(self, k: int) -> "Element":
        if not isinstance(k, int):
            return NotImplemented
        return Element({b: k * c for b, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        return mult(self, other)

    def map(self, f: Callable) -> "Element":
        """Linear extension of ``f``; ``f`` may return a basis element or an Element."""
        acc: dict = {}
        for b, c in self._terms.items():
            image = f(b)
            if isinstance(image, Element):
                for b2, c2 in image._terms.items():
                    acc[b2] = acc.get(b2, 0) + c * c2
            else:
                acc[image] = acc.get(image, 0) + c
        return Element(acc)

    def __repr__(self) -> str:
        return "Element({" + ", ".join(f"{b!r}: {c}" for b, c in self.items()) + "})"

    def __str__(self) -> str:
        return render_element(self)


def coefficient(x: Element, b) -> int:
    return x.coefficient(b)


def unit(genuine: bool = False) -> Word:
    return Word((), genuine)


def _words(x) -> Iterable[Word]:
    if isinstance(x, Word):
        return (x,)
    return (b for b, _ in x._terms.items())


def _common_genuineness(*xs) -> bool | None:
    flags = {w.genuine for x in xs for w in _words(x)}
    if len(flags) > 1:
        raise GenuinenessError("cannot multiply genuine and non-genuine words")
    return flags.pop() if flags else None


def word_mult(a: Word, b: Word) -> Word:
    if a.genuine != b.genuine:
        raise GenuinenessError("cannot multiply genuine and non-genuine words")
    return Word(a.chars + b.chars, a.genuine)


def mult(a, b) -> Element:
    """Product m (or m~ on genuine words), bilinear in ``a`` and ``b``."""
    _common_genuineness(a, b)
    a, b = Element.lift(a), Element.lift(b)
    acc: dict = {}
    for wa, ca in a._terms.items():
        for wb, cb in b._terms.items():
            w = Word(wa.chars + wb.chars, wa.genuine)
            acc[w] = acc.get(w, 0) + ca * cb
    return Element(acc)


def _word_comult(w: Word) -> Element:
    # one term per subset of positions; repeated characters give multiplicities
    acc: Counter = Counter()
    k = len(w.chars)
    for mask in itertools.product((0, 1), repeat=k):
        left = tuple(c for c, bit in zip(w.chars, mask) if bit)
        right = tuple(c for c, bit in zip(w.chars, mask) if not bit)
        acc[(Word(left, w.genuine), Word(right, w.genuine))] += 1
    return Element(dict(acc))


def comult(x) -> Element:
    """Comultiplication m* (m*~ on genuine words): x -> x (x) 1 + 1 (x) x on GL(1)."""
    if isinstance(x, Word):
        return _word_comult(x)
    return x.map(_word_comult)


def kappa(x: Element) -> Element:
    """Swap the legs of a 2-tensor."""
    return x.map(lambda t: (t[1], t[0]))


def _genuine_dual(c: Character) -> Character:
    # (chi x)~ = chi^{-1} x^{-1} = alpha chi x^{-1}
    return char_mul(c.table.eta(), char_inv(c))


def contragredient(x):
    """Contragredient; on genuine words each x becomes eta * x^{-1}."""
    if isinstance(x, Element):
        return x.map(contragredient)
    if x.genuine:
        return Word(tuple(_genuine_dual(c) for c in x.chars), True)
    return Word(tuple(char_inv(c) for c in x.chars), False)


def alpha_twist(x):
    """Multiply by alpha = (det, -1)_F, i.e. by eta in every GL(1) coordinate."""
    if isinstance(x, Element):
        return x.map(alpha_twist)
    if not x.chars:
        return x
    eta = x.chars[0].table.eta()
    return Word(tuple(char_mul(eta, c) for c in x.chars), x.genuine)


Direction = Literal["forward", "inverse"]


def chi_twist(x, direction: Direction = "forward"):
    """Multiplication by chi_psi (forward, R -> R^gen) or by its inverse."""
    if direction not in ("forward", "inverse"):
        raise ValueError(f"direction must be 'forward' or 'inverse', got {direction!r}")
    want = direction == "inverse"  # genuineness expected on input

    def flip(w: Word) -> Word:
        if w.genuine != want:
            kind = "genuine" if want else "non-genuine"
            raise GenuinenessError(f"chi_twist {direction} expects {kind} words")
        return Word(w.chars, not want)

    if isinstance(x, Element):
        return x.map(flip)
    return flip(x)


def tensor_map(x: Element, *maps: Callable) -> Element:
    """Apply ``maps[i]`` to leg i of every tensor and expand multilinearly.

    Each map may return a basis element, an Element, or (for maps that
    raise tensor rank) a tuple-valued Element; tuple results are spliced in.
    """

    def apply(t):
        if len(t) != len(maps):
            raise ValueError(f"tensor of rank {len(t)} given {len(maps)} maps")
        legs = [Element.lift(f(b)) for f, b in zip(maps, t)]
        acc: dict = {}
        for combo in itertools.product(*(leg._terms.items() for leg in legs)):
            key: tuple = ()
            coeff = 1
            for b, c in combo:
                key += b if isinstance(b, tuple) else (b,)
                coeff *= c
            acc[key] = acc.get(key, 0) + coeff
        return Element(acc)

    return x.map(apply)


def identity(b):
    return b


# rendering


def render_word(w: Word) -> str:
    return " x ".join(str(c) for c in w.chars)


def render_spword(s: SpWord) -> str:
    body = " x ".join(str(c) for c in s.chars)
    return f"{body} |x {s.anchor}" if body else f"|x {s.anchor}"


def render_basis(b) -> str:
    if isinstance(b, tuple):
        return " ⊗ ".join(f"({render_basis(x)})" for x in b)
    return str(b)


def render_element(x: Element) -> str:
    if not x:
        return "0"
    return "\n".join(f"{c} * {render_basis(b)}" for b, c in x.items())
