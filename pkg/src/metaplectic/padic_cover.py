"""Hilbert symbols over Q_p and the determinant-level double cover of GL(n, Q_p).

Elements of the cover are pairs (det g, sign) multiplied with the cocycle
(det g1, det g2)_p.  Rationals are embedded in Q_p; square classes come
from the valuation parity and the unit class (Legendre symbol for odd p,
residue mod 8 for p = 2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .characters import UnitarySymbolTable

Rational = Union[int, Fraction]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PAdicField:
    p: int

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or not _is_prime(self.p):
            raise ValueError(f"p must be a prime, got {self.p!r}")


def _field(F: PAdicField | int) -> PAdicField:
    return F if isinstance(F, PAdicField) else PAdicField(F)


def split_valuation(a: Rational, p: int) -> tuple[int, Fraction]:
    """Write a = p^v * u with u a p-adic unit; returns (v, u)."""
    a = Fraction(a)
    if a == 0:
        raise ValueError("zero has no valuation")
    num, den, v = a.numerator, a.denominator, 0
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v, Fraction(num, den)


def _unit_mod(u: Fraction, m: int) -> int:
    return u.numerator * pow(u.denominator, -1, m) % m


def legendre(u: Fraction, p: int) -> int:
    """Legendre symbol of a p-adic unit u, p odd (Euler's criterion)."""
    r = pow(_unit_mod(u, p), (p - 1) // 2, p)
    return 1 if r == 1 else -1


def hilbert(a: Rational, b: Rational, F: PAdicField | int) -> int:
    """The Hilbert symbol (a, b)_p for nonzero rationals a, b."""
    p = _field(F).p
    if a == 0 or b == 0:
        raise ValueError("the Hilbert symbol is defined for nonzero arguments only")
    alpha, u = split_valuation(a, p)
    beta, v = split_valuation(b, p)
    if p != 2:
        sign = -1 if (alpha * beta * ((p - 1) // 2)) % 2 else 1
        if beta % 2:
            sign *= legendre(u, p)
        if alpha % 2:
            sign *= legendre(v, p)
        return sign
    u8, v8 = _unit_mod(u, 8), _unit_mod(v, 8)

    def eps(x: int) -> int:
        return (x - 1) // 2 % 2

    def omega(x: int) -> int:
        return (x * x - 1) // 8 % 2

    e = eps(u8) * eps(v8) + alpha * omega(v8) + beta * omega(u8)
    return -1 if e % 2 else 1


def eta_minus1_order(F: PAdicField | int) -> int:
    """Order of x -> (x, -1)_F: 1 when -1 is a square in Q_p (p = 1 mod 4), else 2."""
    p = _field(F).p
    return 1 if p % 4 == 1 else 2


def square_class_representatives(F: PAdicField | int) -> list[Fraction]:
    """Integers representing Q_p^x / (Q_p^x)^2 (4 classes for odd p, 8 for p = 2)."""
    p = _field(F).p
    if p == 2:
        units = [1, 3, 5, 7]
    else:
        nonresidue = next(n for n in range(2, p) if pow(n, (p - 1) // 2, p) == p - 1)
        units = [1, nonresidue]
    return [Fraction(u * p**k) for k in (0, 1) for u in units]


def symbol_table_for(F: PAdicField | int, generators=()) -> UnitarySymbolTable:
    return UnitarySymbolTable(tuple(generators), eta_minus1_order(F))


@dataclass(frozen=True)
class CoverElement:
    det: Fraction
    sign: int = 1

    def __post_init__(self) -> None:
        det = Fraction(self.det)
        if det == 0:
            raise ValueError("determinant must be nonzero")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        object.__setattr__(self, "det", det)


def cover_mul(x: CoverElement, y: CoverElement, F: PAdicField | int) -> CoverElement:
    return CoverElement(x.det * y.det, x.sign * y.sign * hilbert(x.det, y.det, F))


def cover_inv(x: CoverElement, F: PAdicField | int) -> CoverElement:
    # (d, e)(1/d, e') = (1, e e' (d, 1/d)) and (d, 1/d) = (d, d)
    return CoverElement(1 / x.det, x.sign * hilbert(x.det, x.det, F))


def cover_identity() -> CoverElement:
    return CoverElement(Fraction(1), 1)


def alpha_eval(x: CoverElement, F: PAdicField | int) -> int:
    """alpha((g, e)) = (det g, -1)_F; ignores the sign, so alpha is non-genuine."""
    return hilbert(x.det, -1, F)
