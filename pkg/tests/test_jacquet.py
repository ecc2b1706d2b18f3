import itertools
import random

import pytest

from metaplectic.characters import char_inv
from metaplectic.formal_ring import Element, GenuinenessError, SpWord, Word, unit
from metaplectic.irreducibility import PrincipalSeries, canonicalize, decide, distinguished_term
from metaplectic.jacquet import (
    big_mstar,
    big_mstar_gen,
    default_pool,
    genuine_words,
    jacquet_multiplicity,
    lemma_sweep,
    mu_star,
    verify_lemma,
)

from oracles import element_as_counter, mstar_by_choices, mu_star_by_choices


def W(*cs, genuine=False):
    return Word(tuple(cs), genuine)


def test_big_mstar_single(table):
    x = table.symbol("u").twist("1/2")
    expected = Element({
        (W(x.inverse()), unit()): 1,
        (W(x), unit()): 1,
        (unit(), W(x)): 1,
    })
    assert big_mstar(W(x)) == expected


def test_big_mstar_unit():
    assert big_mstar(unit()) == Element.basis((unit(), unit()))
    assert big_mstar_gen(unit(True)) == Element.basis((unit(True), unit(True)))


def test_big_mstar_gen_single(table):
    # the alpha-twisted dual of (chi x) is chi x^{-1}; no eta survives
    x = table.symbol("u").twist("1/2") * table.eta()
    g = lambda *cs: Word(cs, True)  # noqa: E731
    expected = Element({
        (g(x.inverse()), unit(True)): 1,
        (g(x), unit(True)): 1,
        (unit(True), g(x)): 1,
    })
    assert big_mstar_gen(g(x)) == expected


def test_genuineness_checked(table):
    x = table.nu(1)
    with pytest.raises(GenuinenessError):
        big_mstar(W(x, genuine=True))
    with pytest.raises(GenuinenessError):
        big_mstar_gen(W(x))
    with pytest.raises(GenuinenessError):
        verify_lemma(W(x))


@pytest.mark.parametrize("genuine", [False, True])
def test_mstar_matches_product_rule(table, genuine):
    pool = [table.symbol("u").twist("1/2"), table.eta(), table.symbol("xi").twist(-1), table.nu("1/4")]
    f = big_mstar_gen if genuine else big_mstar
    for k in range(4):
        for cs in itertools.combinations_with_replacement(pool, k):
            got = f(Word(cs, genuine))
            assert got.mass() == 3 ** k
            assert element_as_counter(got) == mstar_by_choices(cs, table)


def test_two_letter_mstar_has_nine_terms_of_mass_nine(table):
    a, b = table.symbol("u").twist("1/2"), table.nu(-1)
    for f, g in ((big_mstar, False), (big_mstar_gen, True)):
        x = f(Word((a, b), g))
        assert x.mass() == 9 and len(x) == 9
        assert all(l.genuine == g and r.genuine == g for (l, r), _ in x)


def test_mu_star_base_and_rank_one(table):
    assert mu_star(PrincipalSeries(())).value == Element.basis((unit(True), SpWord(())))
    x = table.symbol("u").twist("1/2")
    expected = Element({
        (W(x.inverse(), genuine=True), SpWord(())): 1,
        (W(x, genuine=True), SpWord(())): 1,
        (unit(True), SpWord((x,))): 1,
    })
    assert mu_star(PrincipalSeries((x,))).value == expected


@pytest.mark.parametrize("group", ["metaplectic", "so_odd"])
def test_mu_star_matches_choices_oracle(table, group):
    rng = random.Random(5)
    pool = default_pool(table, 8)
    for n in range(5):
        for _ in range(10):
            chars = tuple(rng.choice(pool) for _ in range(n))
            exp = mu_star(PrincipalSeries(chars, group))
            assert exp.mass() == 3 ** n
            assert all(c > 0 for _, c in exp)
            assert all(len(l) + len(r) == n for (l, r), _ in exp)
            assert element_as_counter(exp.value) == mu_star_by_choices(chars, table)


def test_mu_star_orders_agree(table):
    rng = random.Random(9)
    pool = default_pool(table, 8)
    for n in range(5):
        chars = tuple(rng.choice(pool) for _ in range(n))
        ps = PrincipalSeries(chars)
        inner = mu_star(ps, "inner-first").value
        assert mu_star(ps, "outer-first").value == inner
        assert mu_star(ps, "block").value == inner


def test_mu_star_weyl_orbit(table):
    u, xi = table.symbol("u"), table.symbol("xi")
    chars = (u.twist("1/2"), xi.twist(1), table.eta().twist("1/4"))
    ref = mu_star(PrincipalSeries(chars)).value
    for perm in itertools.permutations(chars):
        for flips in itertools.product((0, 1), repeat=3):
            var = tuple(char_inv(c) if f else c for c, f in zip(perm, flips))
            assert mu_star(PrincipalSeries(var)).value == ref


def test_multiplicity_examples(table):
    u = table.symbol("u")
    x = u.twist("3/4")
    ps = PrincipalSeries((x,))
    assert jacquet_multiplicity(ps, W(x, genuine=True), SpWord(())) == 1
    assert jacquet_multiplicity(ps, W(x.inverse(), genuine=True), SpWord(())) == 1
    assert jacquet_multiplicity(ps, W(u, genuine=True), SpWord(())) == 0


def test_distinguished_term_multiplicity_one(table):
    u, xi = table.symbol("u"), table.symbol("xi")
    ps = canonicalize(PrincipalSeries((u.twist("1/4"), xi, u.inverse().twist(-3))))
    assert decide(ps).irreducible
    left, right = distinguished_term(ps)
    assert len(left) == 2 and len(right) == 1
    assert jacquet_multiplicity(ps, left, right) == 1


def test_lemma_examples(table):
    assert verify_lemma(Word((table.symbol("u"),), True)).ok
    assert verify_lemma(unit(True)).ok


def test_lemma_fails_without_alpha(table, monkeypatch):
    """Negative control: dropping alpha from the genuine dual breaks the identity."""
    from metaplectic import jacquet
    from metaplectic.formal_ring import contragredient

    monkeypatch.setattr(jacquet, "alpha_twist", lambda w: w)
    x = table.nu(1)
    rep = verify_lemma(Word((x,), True))
    assert not rep.ok
    assert rep.only_genuine == Element.basis((Word((table.eta() * x.inverse(),), True), unit(True)))
    assert rep.only_linear == Element.basis((Word((x.inverse(),), True), unit(True)))
    assert "FAIL" in rep.describe()
    assert contragredient(Word((x,), True)).chars == (table.eta() * x.inverse(),)


@pytest.mark.parametrize("eta_order", [1, 2])
def test_lemma_sweep(table, eta_order):
    t = table.with_eta_order(eta_order)
    pool = default_pool(t, 6)
    reports = lemma_sweep(pool, 3)
    assert len(reports) == 84
    assert all(r.ok for r in reports)


def test_default_pool_distinct(table):
    pool = default_pool(table, 12)
    assert len(set(pool)) == 12
    assert sum(1 for _ in genuine_words(pool[:6], 4)) == 210
