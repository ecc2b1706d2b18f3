"""Text syntax for characters, words and principal series.

Grammar (whitespace-insensitive)::

    series   := [ factor ( "x" factor )* ] "|x" anchor
    word     := [ factor ( "x" factor )* ]
    anchor   := "omega0" | "so1"
    factor   := atom ( "*" atom )*
    atom     := "1" | "nu" [ "^" rational ] | symbol [ "^" integer ]
    rational := int | "{" int [ "/" int ] "}"
    integer  := int | "{" int "}"

``omega0`` makes the series genuine (metaplectic); ``so1`` makes it a
series of split SO(2n+1).  Symbols must be declared in the symbol table;
``eta`` is always available.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .characters import Character, UnitarySymbolTable, make_character, render_character
from .formal_ring import Element, SpWord, Word, render_spword, render_word
from .irreducibility import Cond1, Cond2, PrincipalSeries, Verdict
from .jacquet import JacquetExpansion

ANCHOR_GROUP = {"omega0": "metaplectic", "so1": "so_odd"}
GROUP_ANCHOR = {v: k for k, v in ANCHOR_GROUP.items()}


class DSLError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class ParseError(DSLError):
    def __init__(self, offset: int, expected: list[str], found: str):
        self.expected = expected
        self.found = found
        super().__init__(f"expected {' or '.join(expected)}, found {found}", offset)


class UnknownSymbolError(DSLError):
    def __init__(self, name: str, offset: int):
        self.name = name
        super().__init__(f"unknown symbol {name!r}", offset)


class MalformedRationalError(DSLError):
    pass


_TOKEN = re.compile(
    r"\s*(?:(?P<rtimes>\|x(?![A-Za-z0-9_]))|(?P<int>-?\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<punct>[{}/^*]))"
)


@dataclass(frozen=True)
class Token:
    kind: str  # rtimes, int, ident, punct, eof
    text: str
    offset: int

    def describe(self) -> str:
        return "end of input" if self.kind == "eof" else repr(self.text)


def tokenize(text: str) -> list[Token]:
    data = text.encode("utf-8")
    tokens = []
    pos = 0
    # offsets are byte offsets into the UTF-8 encoding
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            boff = len(text[:pos].encode("utf-8"))
            raise ParseError(boff, ["a character, 'x' or '|x'"], repr(text[pos]))
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append(Token(kind, m.group(kind), len(text[:start].encode("utf-8"))))
        pos = m.end()
    tokens.append(Token("eof", "", len(data)))
    return tokens


class _Parser:
    def __init__(self, text: str, table: UnitarySymbolTable):
        self.tokens = tokenize(text)
        self.i = 0
        self.table = table

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def at(self, kind: str, text: str | None = None) -> bool:
        t = self.tok
        return t.kind == kind and (text is None or t.text == text)

    def expect(self, kind: str, text: str | None, label: str) -> Token:
        if not self.at(kind, text):
            self.fail([label])
        return self.take()

    def fail(self, expected: list[str]):
        raise ParseError(self.tok.offset, expected, self.tok.describe())

    def int_(self) -> int:
        return int(self.expect("int", None, "an integer").text)

    def rational(self) -> Fraction:
        if self.at("int"):
            return Fraction(self.int_())
        start = self.expect("punct", "{", "an integer or '{'").offset
        num = self.int_()
        den = 1
        if self.at("punct", "/"):
            self.take()
            den = self.int_()
        if not self.at("punct", "}"):
            self.fail(["'/'", "'}'"] if den == 1 else ["'}'"])
        self.take()
        if den <= 0:
            raise MalformedRationalError(f"denominator must be positive in {{{num}/{den}}}", start)
        return Fraction(num, den)

    def integer(self) -> int:
        if self.at("int"):
            return self.int_()
        self.expect("punct", "{", "an integer or '{'")
        k = self.int_()
        self.expect("punct", "}", "'}'")
        return k

    def atom(self, acc: dict) -> None:
        t = self.tok
        if t.kind == "int" and t.text == "1":
            self.take()
            return
        if t.kind != "ident" or t.text in ("x", "omega0", "so1"):
            self.fail(["'nu'", "a symbol", "'1'"])
        self.take()
        if t.text == "nu":
            e = Fraction(1)
            if self.at("punct", "^"):
                self.take()
                e = self.rational()
            acc["nu"] = acc.get("nu", 0) + e
            return
        if t.text not in self.table:
            raise UnknownSymbolError(t.text, t.offset)
        k = 1
        if self.at("punct", "^"):
            self.take()
            k = self.integer()
        acc[t.text] = acc.get(t.text, 0) + k

    def factor(self) -> Character:
        acc: dict = {}
        self.atom(acc)
        while self.at("punct", "*"):
            self.take()
            self.atom(acc)
        e = acc.pop("nu", 0)
        return make_character(self.table, e, acc)

    def factors(self, stop: str) -> list[Character]:
        chars: list[Character] = []
        if self.at(stop):
            return chars
        chars.append(self.factor())
        while self.at("ident", "x"):
            self.take()
            chars.append(self.factor())
        return chars

    def series(self) -> PrincipalSeries:
        chars = self.factors("rtimes")
        if not self.at("rtimes"):
            self.fail(["'x'", "'*'", "'|x'"] if chars else ["a character", "'|x'"])
        self.take()
        t = self.tok
        if not (t.kind == "ident" and t.text in ANCHOR_GROUP):
            self.fail(["'omega0'", "'so1'"])
        self.take()
        self.end()
        return PrincipalSeries(tuple(chars), ANCHOR_GROUP[t.text])

    def word(self) -> list[Character]:
        chars = self.factors("eof")
        self.end()
        return chars

    def end(self) -> None:
        if not self.at("eof"):
            self.fail(["end of input"])


def parse(text: str, table: UnitarySymbolTable) -> PrincipalSeries:
    """Parse a principal series such as ``nu^{1/2}*u x u |x omega0``."""
    return _Parser(text, table).series()


parse_series = parse


def parse_word(text: str, table: UnitarySymbolTable, genuine: bool = True) -> Word:
    return Word(tuple(_Parser(text, table).word()), genuine)


def parse_spword(text: str, table: UnitarySymbolTable) -> SpWord:
    ps = parse(text, table)
    return SpWord(ps.chars, ps.genuine)


def parse_character(text: str, table: UnitarySymbolTable) -> Character:
    p = _Parser(text, table)
    c = p.factor()
    p.end()
    return c


# rendering


def render_series(ps: PrincipalSeries) -> str:
    body = " x ".join(render_character(c) for c in ps.chars)
    anchor = GROUP_ANCHOR[ps.group]
    return f"{body} |x {anchor}" if body else f"|x {anchor}"


def _leg(b) -> str:
    if isinstance(b, SpWord):
        return render_spword(b)
    return render_word(b)


def terms_json(x: Element) -> list[dict[str, Any]]:
    out = []
    for b, c in x.items():
        left, right = b
        out.append({"coeff": c, "left": _leg(left), "right": _leg(right)})
    return out


def witness_json(w: Cond1 | Cond2 | None) -> dict[str, Any] | None:
    if w is None:
        return None
    if isinstance(w, Cond1):
        return {"condition": 1, "i": w.index, "xi": render_character(w.xi), "sign": str(w.sign)}
    return {"condition": 2, "i": w.i, "j": w.j, "s1": w.s1, "s2": w.s2}


def render_witness(w: Cond1 | Cond2) -> str:
    if isinstance(w, Cond1):
        sign = f"+{w.sign}" if w.sign > 0 else str(w.sign)
        return f"condition (1): xi_{w.index} = nu^{{{sign}}} * ({render_character(w.xi)}) with ({render_character(w.xi)})^2 = 1"
    s2 = "" if w.s2 == 1 else "^{-1}"
    return f"condition (2): xi_{w.i} = nu^{{{w.s1:+d}}} * xi_{w.j}{s2}"


def render(x, format: str = "text") -> str:
    """Deterministic text or JSON rendering of series, verdicts and expansions."""
    if format not in ("text", "json"):
        raise ValueError(f"unknown format {format!r}")
    if isinstance(x, PrincipalSeries):
        if format == "text":
            return render_series(x)
        return _dump({"group": x.group, "n": x.n, "chars": [render_character(c) for c in x.chars],
                      "series": render_series(x)})
    if isinstance(x, Verdict):
        word = "irreducible" if x.irreducible else "reducible"
        if format == "text":
            return word if x.witness is None else f"{word}\nwitness: {render_witness(x.witness)}"
        return _dump({"verdict": word, "irreducible": x.irreducible, "witness": witness_json(x.witness)})
    if isinstance(x, JacquetExpansion):
        if format == "text":
            lines = [f"mu*({render_series(x.source)}) =", _text_terms(x.value),
                     f"terms: {len(x.value)}  mass: {x.mass()}"]
            return "\n".join(lines)
        return _dump({"series": render_series(x.source), "terms": terms_json(x.value),
                      "mass": x.mass()})
    if isinstance(x, Element):
        if format == "text":
            return _text_terms(x)
        return _dump({"terms": terms_json(x)})
    raise TypeError(f"cannot render {type(x).__name__}")


def _text_terms(x: Element) -> str:
    if not x:
        return "0"
    return "\n".join(f"{c} * ({_leg(b[0])}) ⊗ ({_leg(b[1])})" for b, c in x.items())


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, sort_keys=True, indent=2)
