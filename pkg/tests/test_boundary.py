import random

import pytest

from dgog import catalog
from dgog.boundary import (LassoPath, PrefixResult, act, canonical, decompose_action, format_lasso,
                           lasso, parse_lasso, prefix_of)
from dgog.errors import NotInDomain, SourceMismatch, ValidationError
from dgog.gog import SigmaLetter, SigmaPath
from dgog.words import (NormalWord, element, from_path, identity, invert, multiply, parse_word)

from generators import random_lasso, random_word
from oracles import bs_affine, lasso_to_rational, rational_to_lasso


def L(*pairs):
    return tuple(SigmaLetter(h, e) for h, e in pairs)


def bs_lasso(g, prefix_digits, cycle_digits):
    return lasso(g, [(d, "e") for d in prefix_digits], [(d, "e") for d in cycle_digits])


def test_canonical_form(bs):
    a = bs_lasso(bs, [0, 1, 0], [1, 0, 1, 0])     # 0101010... = (01)^∞
    assert a.cycle == L((0, "e"), (1, "e")) and a.prefix == ()
    a = bs_lasso(bs, [1, 1, 0, 1], [0, 1, 0, 1])   # 1 + (10)^∞
    assert a.prefix == L((1, "e"),) and a.cycle == L((1, "e"), (0, "e"))
    assert bs_lasso(bs, [1, 1], [1]) == bs_lasso(bs, [], [1])
    assert bs_lasso(bs, [0, 1], [0, 1]) == bs_lasso(bs, [], [0, 1])
    assert bs_lasso(bs, [0], [1, 0]) == bs_lasso(bs, [], [0, 1])


def test_canonical_is_unique_representative(bs):
    # two lassos are equal exactly when their unrolled paths agree far enough out
    rng = random.Random(2)
    for _ in range(500):
        a = random_lasso(rng, bs, "v", 4, 4)
        b = random_lasso(rng, bs, "v", 4, 4)
        same = prefix_of(a, 40) == prefix_of(b, 40)
        assert (a == b) == same


def test_lasso_validation(z2z3):
    with pytest.raises(ValidationError):
        lasso(z2z3, [], [(0, "e")])        # e runs w -> v, no cycle
    with pytest.raises(ValidationError):
        lasso(catalog.bs12(), [], [(2, "e")])


def test_prefix_of(bs):
    assert prefix_of(bs_lasso(bs, [], [0]), 3).letters == L((0, "e"), (0, "e"), (0, "e"))
    assert prefix_of(bs_lasso(bs, [1], [0]), 2).letters == L((1, "e"), (0, "e"))
    assert prefix_of(bs_lasso(bs, [1], [0]), 0) == SigmaPath("v")


def test_decompose_action_examples(bs):
    alpha = bs_lasso(bs, [1], [0])
    gamma = parse_word(bs, "0 e")
    assert decompose_action(bs, gamma, alpha) == (gamma, identity(bs, "v"))
    lam, mu = decompose_action(bs, parse_word(bs, "0 e~ 1"), alpha)
    assert lam == element(bs, "v", 1)
    assert mu == parse_word(bs, "1 e 0")
    assert decompose_action(bs, parse_word(bs, "0 e~ 0"), alpha) is None


def test_decompose_action_source_mismatch(z2z3):
    g = catalog.rose(2)
    with pytest.raises(SourceMismatch):
        decompose_action(g, NormalWord("w", "w"), lasso(g, [], [(0, "e1")]))


def smallest_directed_prefix(g, gamma, alpha, limit):
    """Least k with γ·α[0:k] free of reversed letters, by direct multiplication."""
    for k in range(limit + 1):
        prod = multiply(g, gamma, from_path(g, prefix_of(alpha, k)))
        if prod.is_directed:
            return k, prod
    return None


@pytest.mark.parametrize("g", [catalog.bs12(), catalog.loop(3, 2), catalog.rose(2, 2, 3),
                               catalog.loop(2, -1)], ids=["bs12", "loop32", "rose2", "loop2m1"])
def test_decompose_action_against_multiplication(g):
    rng = random.Random(4)
    for _ in range(300):
        alpha = random_lasso(rng, g, "v")
        gamma = random_word(rng, g, "v", 6)
        split = decompose_action(g, gamma, alpha)
        found = smallest_directed_prefix(g, gamma, alpha, len(gamma) + 1)
        if split is None:
            assert found is None
            continue
        lam, mu = split
        k, prod = found
        assert len(mu) == k and mu.tail == 0
        assert mu == from_path(g, prefix_of(alpha, k))
        assert lam == prod and lam.is_directed
        assert multiply(g, lam, invert(g, mu)) == gamma


def test_odometer_examples(bs):
    b = element(bs, "v", 1)
    assert act(bs, b, bs_lasso(bs, [], [1])) == bs_lasso(bs, [], [0])
    assert act(bs, b, bs_lasso(bs, [], [0])) == bs_lasso(bs, [1], [0])
    alpha = bs_lasso(bs, [0, 1], [1, 0, 0])
    assert act(bs, identity(bs, "v"), alpha) == alpha


def digits(alpha):
    return [l.rep for l in alpha.prefix], [l.rep for l in alpha.cycle]


def test_bs_action_matches_two_adic_arithmetic(bs):
    rng = random.Random(9)
    checked = 0
    for _ in range(600):
        alpha = random_lasso(rng, bs, "v", 5, 5)
        gamma = random_word(rng, bs, "v", 8)
        a, b = bs_affine(gamma)
        y = a * lasso_to_rational(*digits(alpha)) + b
        if y.denominator % 2:
            out = act(bs, gamma, alpha)
            assert isinstance(out, LassoPath)
            assert out == bs_lasso(bs, *rational_to_lasso(y))
            checked += 1
        else:
            with pytest.raises(NotInDomain):
                act(bs, gamma, alpha)
    assert checked > 100


@pytest.mark.parametrize("g", [catalog.bs12(), catalog.loop(3, 2), catalog.loop(3, -2),
                               catalog.rose(2, 2, 1)], ids=["bs12", "loop32", "loop3m2", "rose2"])
def test_action_laws(g):
    rng = random.Random(6)
    done = 0
    for _ in range(400):
        alpha = random_lasso(rng, g, "v")
        delta = random_word(rng, g, "v", 5)
        gamma = random_word(rng, g, "v", 5)
        try:
            inner = act(g, delta, alpha)
            outer = act(g, gamma, inner)
        except NotInDomain:
            continue
        assert isinstance(inner, LassoPath) and isinstance(outer, LassoPath)
        assert act(g, multiply(g, gamma, delta), alpha) == outer
        assert act(g, invert(g, delta), inner) == alpha
        done += 1
    assert done > 50


def test_aperiodic_output_is_reported_as_prefix():
    g = catalog.loop(2, 3)
    b = element(g, "v", 1)
    alpha = lasso(g, [], [(1, "e")])
    short = act(g, b, alpha, max_steps=60)
    long = act(g, b, alpha, max_steps=300)
    assert isinstance(short, PrefixResult) and short.flag == "NOT_PERIODIC_WITHIN_BOUND"
    assert len(short.letters) == 60
    assert long.letters[:60] == short.letters


def test_prefix_exactness_for_periodic_results(bs):
    rng = random.Random(12)
    for _ in range(100):
        alpha = random_lasso(rng, bs, "v")
        gamma = random_word(rng, bs, "v", 6)
        try:
            full = act(bs, gamma, alpha)
        except NotInDomain:
            continue
        k = len(full.prefix) + len(full.cycle)
        for steps in range(1, k):
            part = act(bs, gamma, alpha, max_steps=steps)
            if isinstance(part, PrefixResult):
                assert part.letters == prefix_of(full, steps).letters


@pytest.mark.parametrize("n, m", [(2, 1), (3, 2), (3, -2), (5, 1), (4, -3)])
def test_contraction_always_periodic(n, m):
    g = catalog.loop(n, m)
    rng = random.Random(n * 10 + m)
    for _ in range(200):
        alpha = random_lasso(rng, g, "v")
        gamma = random_word(rng, g, "v", 6)
        try:
            out = act(g, gamma, alpha, max_steps=2000)
        except NotInDomain:
            continue
        assert isinstance(out, LassoPath)


def test_lasso_literal(bs):
    a = parse_lasso(bs, "1:e|0:e")
    assert a == bs_lasso(bs, [1], [0])
    assert format_lasso(a) == "1:e|0:e"
    assert parse_lasso(bs, "|1:e.0:e") == bs_lasso(bs, [], [1, 0])
    assert canonical("v", L((0, "e")), L((0, "e"), (0, "e"))) == bs_lasso(bs, [], [0])
