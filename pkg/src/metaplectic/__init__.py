"""Exact Grothendieck-group calculus for principal series of metaplectic groups."""

from .characters import Character, UnitarySymbolTable, char_inv, char_mul, is_self_dual
from .formal_ring import Element, SpWord, Word
from .irreducibility import PrincipalSeries, Verdict, canonicalize, decide
from .jacquet import big_mstar, big_mstar_gen, jacquet_multiplicity, mu_star, verify_lemma

__all__ = [
    "Character",
    "Element",
    "PrincipalSeries",
    "SpWord",
    "UnitarySymbolTable",
    "Verdict",
    "Word",
    "big_mstar",
    "big_mstar_gen",
    "canonicalize",
    "char_inv",
    "char_mul",
    "decide",
    "is_self_dual",
    "jacquet_multiplicity",
    "mu_star",
    "verify_lemma",
]
