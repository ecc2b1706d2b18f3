import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from metaplectic import dsl
from metaplectic.characters import UnitarySymbolTable, make_character
from metaplectic.irreducibility import PrincipalSeries, decide
from metaplectic.jacquet import mu_star

TABLE = UnitarySymbolTable((("u", None), ("xi", 2), ("w", 3)), eta_order=2)


def test_parse_examples():
    ps = dsl.parse("nu^{1/2} |x omega0", TABLE)
    assert ps == PrincipalSeries((TABLE.nu(Fraction(1, 2)),), "metaplectic")
    u = TABLE.symbol("u")
    ps = dsl.parse("nu*u x u |x omega0", TABLE)
    assert ps.chars == (u.twist(1), u) and ps.n == 2
    assert dsl.parse("|x so1", TABLE) == PrincipalSeries((), "so_odd")


def test_parse_variants():
    u = TABLE.symbol("u")
    assert dsl.parse("  nu^{-3/2}*u^{-1}   x 1 x eta|x omega0", TABLE).chars == (
        u.inverse().twist("-3/2"), TABLE.trivial(), TABLE.eta())
    assert dsl.parse("u*u*nu^2*nu^{1/2} |x so1", TABLE).chars == (TABLE.symbol("u", 2).twist("5/2"),)
    assert dsl.parse("xi^{3} |x omega0", TABLE).chars == (TABLE.symbol("xi"),)
    assert dsl.parse("nu^{4} |x omega0", TABLE).chars == (TABLE.nu(4),)


def test_unbalanced_brace_reports_offset():
    with pytest.raises(dsl.ParseError) as err:
        dsl.parse("nu^{1/2 |x omega0", TABLE)
    assert err.value.offset == "nu^{1/2 |x omega0".index("|")
    assert "'}'" in err.value.expected


def test_unknown_symbol():
    with pytest.raises(dsl.UnknownSymbolError) as err:
        dsl.parse("nu x zz |x omega0", TABLE)
    assert err.value.name == "zz" and err.value.offset == 5


def test_malformed_rational():
    with pytest.raises(dsl.MalformedRationalError):
        dsl.parse("nu^{1/0} |x omega0", TABLE)
    with pytest.raises(dsl.MalformedRationalError):
        dsl.parse("nu^{1/-2} |x omega0", TABLE)


@pytest.mark.parametrize("text", [
    "nu x |x omega0",
    "nu u |x omega0",
    "nu |x",
    "nu |x omega1",
    "nu",
    "nu^ |x omega0",
    "nu |x omega0 x",
    "nu # |x omega0",
    "x |x omega0",
])
def test_errors_carry_position_and_expectation(text):
    with pytest.raises(dsl.ParseError) as err:
        dsl.parse(text, TABLE)
    assert 0 <= err.value.offset <= len(text.encode())
    assert err.value.expected


def test_offsets_are_bytes():
    text = "nu ⊗ |x omega0"
    with pytest.raises(dsl.ParseError) as err:
        dsl.parse(text, TABLE)
    assert err.value.offset == 3
    with pytest.raises(dsl.ParseError) as err:
        dsl.parse("⊗⊗ nu", TABLE)
    assert err.value.offset == 0
    with pytest.raises(dsl.ParseError) as err:
        dsl.parse("nu*é |x omega0", TABLE)
    assert err.value.offset == 3


def test_symbol_names_are_ascii_identifiers():
    with pytest.raises(ValueError):
        UnitarySymbolTable((("é", 2),))


def test_parse_word_and_character():
    u = TABLE.symbol("u")
    w = dsl.parse_word("nu x u", TABLE)
    assert w.genuine and w.chars == (u, TABLE.nu(1))
    assert dsl.parse_word("", TABLE).chars == ()
    assert dsl.parse_character("nu^{1/3}*w^2", TABLE) == TABLE.symbol("w", 2).twist("1/3")


def test_render_empty_series():
    assert dsl.render(PrincipalSeries(()), "text") == "|x omega0"
    assert dsl.render(PrincipalSeries((), "so_odd"), "text") == "|x so1"


def test_render_rank_one_expansion():
    x = TABLE.symbol("u").twist("1/2")
    exp = mu_star(PrincipalSeries((x,)))
    payload = json.loads(dsl.render(exp, "json"))
    assert len(payload["terms"]) == 3 and payload["mass"] == 3
    assert {t["coeff"] for t in payload["terms"]} == {1}
    assert {(t["left"], t["right"]) for t in payload["terms"]} == {
        ("nu^{-1/2}*u^{-1}", "|x omega0"),
        ("nu^{1/2}*u", "|x omega0"),
        ("", "nu^{1/2}*u |x omega0"),
    }
    text = dsl.render(exp, "text")
    assert text.count(" ⊗ ") == 3


def test_render_verdict():
    v = decide(dsl.parse("nu^{1/2} |x omega0", TABLE))
    out = json.loads(dsl.render(v, "json"))
    assert out == {"verdict": "reducible", "irreducible": False,
                   "witness": {"condition": 1, "i": 1, "xi": "1", "sign": "1/2"}}
    v = decide(dsl.parse("nu*u x u |x so1", TABLE))
    assert dsl.render(v).startswith("reducible\nwitness: condition (2): xi_1 = nu^{+1} * xi_2")


@st.composite
def series(draw):
    n = draw(st.integers(0, 5))
    chars = []
    for _ in range(n):
        e = Fraction(draw(st.integers(-9, 9)), draw(st.integers(1, 4)))
        unitary = {name: draw(st.integers(-3, 3)) for name in TABLE.names}
        chars.append(make_character(TABLE, e, unitary))
    return PrincipalSeries(tuple(chars), draw(st.sampled_from(["metaplectic", "so_odd"])))


@given(series())
def test_round_trip(ps):
    text = dsl.render(ps)
    assert dsl.parse(text, TABLE) == ps
    assert dsl.render(dsl.parse(text, TABLE)) == text


def test_round_trip_hundred_random():
    rng = random.Random(0)
    for _ in range(100):
        chars = tuple(
            make_character(TABLE, Fraction(rng.randint(-9, 9), rng.randint(1, 4)),
                           {name: rng.randint(-3, 3) for name in TABLE.names})
            for _ in range(rng.randint(0, 5)))
        ps = PrincipalSeries(chars, rng.choice(["metaplectic", "so_odd"]))
        assert dsl.parse(dsl.render(ps), TABLE) == ps
