import random

import pytest

from dgog import catalog
from dgog.boundary import act_hull, lasso, prefix_of
from dgog.errors import DomainViolation, SourceMismatch
from dgog.hull import ZERO, compose, germ_equal, is_idempotent, make, star, unit
from dgog.words import element, from_path, identity, invert, le, multiply, parse_word

from generators import random_directed, random_lasso
from oracles import divides

GRAPHS = {"bs12": catalog.bs12(), "rose2": catalog.rose(2, 2, 1), "loop32": catalog.loop(3, 2)}


def random_hull(rng, g, zero_rate=0.1, max_len=3):
    if rng.random() < zero_rate:
        return ZERO
    lam = random_directed(rng, g, "v", max_len)
    mu = random_directed(rng, g, "v", max_len)
    # both words end at v in these one-vertex graphs
    return make(g, lam, mu)


def apply(g, s, nu):
    """``τ^λ σ^μ`` as a partial map on Λ: ``ν ↦ λ μ⁻¹ ν`` when ``μ`` divides ``ν``."""
    if s.is_zero or not divides(g, s.mu, nu):
        return None
    return multiply(g, s.lam, multiply(g, invert(g, s.mu), nu))


def test_make_examples(bs):
    lam = parse_word(bs, "0 e 3")
    assert make(bs, lam, parse_word(bs, "0 e 1")) == make(bs, parse_word(bs, "0 e 2"),
                                                          parse_word(bs, "0 e 0"))
    s = make(bs, lam, lam)
    assert s.lam == s.mu == parse_word(bs, "0 e 0")
    assert make(bs, identity(bs, "v"), identity(bs, "v")) == unit(bs, "v")


def test_make_source_mismatch():
    g = catalog.z2_z3()
    with pytest.raises(SourceMismatch):
        make(g, parse_word(g, "0 e 0"), identity(g, "v"))


def test_compose_examples(bs):
    lam, mu, xi = (parse_word(bs, t) for t in ("1 e 0", "0 e 1 e 0", "1 e 1 e 0"))
    assert compose(bs, make(bs, lam, mu), make(bs, mu, xi)) == make(bs, lam, xi)
    assert compose(bs, make(bs, lam, parse_word(bs, "0 e 0")),
                   make(bs, parse_word(bs, "1 e 0"), xi)) == ZERO
    s = make(bs, lam, xi)
    assert compose(bs, unit(bs, "v"), s) == s == compose(bs, s, unit(bs, "v"))
    assert compose(bs, ZERO, s) == ZERO == compose(bs, s, ZERO)


def test_idempotents(bs):
    lam = parse_word(bs, "1 e 0")
    assert is_idempotent(make(bs, lam, lam))
    assert not is_idempotent(make(bs, multiply(bs, lam, parse_word(bs, "0 e 0")), lam))
    assert is_idempotent(ZERO)


@pytest.mark.parametrize("name", sorted(GRAPHS))
def test_canonical_form_is_orbit_invariant(name):
    g = GRAPHS[name]
    rng = random.Random(1)
    for _ in range(200):
        lam, mu = random_directed(rng, g, "v", 3), random_directed(rng, g, "v", 3)
        h = element(g, "v", rng.randint(-9, 9))
        assert make(g, multiply(g, lam, h), multiply(g, mu, h)) == make(g, lam, mu)


@pytest.mark.parametrize("name", sorted(GRAPHS))
def test_compose_matches_partial_maps(name):
    """Composition agrees with composing the partial bijections of Λ they describe."""
    g = GRAPHS[name]
    rng = random.Random(2)
    probes = [random_directed(rng, g, "v", 6) for _ in range(60)]
    for _ in range(150):
        s, t = random_hull(rng, g), random_hull(rng, g)
        st = compose(g, s, t)
        for nu in probes:
            inner = apply(g, t, nu)
            expected = None if inner is None else apply(g, s, inner)
            assert apply(g, st, nu) == expected


@pytest.mark.parametrize("name", sorted(GRAPHS))
def test_semigroup_laws(name):
    g = GRAPHS[name]
    rng = random.Random(3)
    for _ in range(300):
        a, b, c = (random_hull(rng, g) for _ in range(3))
        assert compose(g, compose(g, a, b), c) == compose(g, a, compose(g, b, c))
        assert compose(g, compose(g, a, star(g, a)), a) == a
        assert star(g, star(g, a)) == a
        e = compose(g, a, star(g, a))
        assert is_idempotent(e) and compose(g, e, e) == e


def test_germ_examples(bs):
    alpha = lasso(bs, [(1, "e")], [(0, "e")])
    lam, mu = parse_word(bs, "0 e 1"), parse_word(bs, "1 e 0")
    s = make(bs, lam, mu)
    assert germ_equal(bs, s, alpha, s, alpha)
    eta = parse_word(bs, "0 e 0")
    t = make(bs, multiply(bs, lam, eta), multiply(bs, mu, eta))
    assert germ_equal(bs, s, alpha, t, alpha)
    assert germ_equal(bs, t, alpha, s, alpha)
    beta = lasso(bs, [(1, "e")], [(1, "e"), (0, "e")])
    assert not germ_equal(bs, s, alpha, s, beta)
    with pytest.raises(DomainViolation):
        germ_equal(bs, s, lasso(bs, [], [(0, "e")]), s, alpha)
    with pytest.raises(DomainViolation):
        germ_equal(bs, ZERO, alpha, s, alpha)


def random_germ(rng, g, alpha):
    """A random element whose domain contains ``alpha``."""
    k = rng.randint(0, 4)
    mu = from_path(g, prefix_of(alpha, k))
    lam = random_directed(rng, g, "v", 3, tail=False)
    lam = multiply(g, lam, element(g, lam.source, rng.randint(-3, 3)))
    return make(g, lam, mu)  # one-vertex graphs: sources always agree


@pytest.mark.parametrize("name", sorted(GRAPHS))
def test_germ_equality_is_an_equivalence(name):
    g = GRAPHS[name]
    rng = random.Random(4)
    for _ in range(20):
        alpha = random_lasso(rng, g, "v")
        germs = [random_germ(rng, g, alpha) for _ in range(8)]
        # add restrictions, which have the same germ as the original
        for s in list(germs):
            xi = from_path(g, prefix_of(alpha, len(s.mu) + rng.randint(1, 3)))
            r = compose(g, s, make(g, xi, xi))
            assert germ_equal(g, s, alpha, r, alpha)
            germs.append(r)
        eq = [[germ_equal(g, s, alpha, t, alpha) for t in germs] for s in germs]
        n = len(germs)
        for i in range(n):
            assert eq[i][i]
            for j in range(n):
                assert eq[i][j] == eq[j][i]
                for k in range(n):
                    if eq[i][j] and eq[j][k]:
                        assert eq[i][k]


@pytest.mark.parametrize("name", sorted(GRAPHS))
def test_germ_composition(name):
    """[s, t·β][t, β] = [st, β]: the product is defined at β and acts as the composite."""
    g = GRAPHS[name]
    rng = random.Random(5)
    hits = 0
    for _ in range(200):
        beta = random_lasso(rng, g, "v")
        t = random_germ(rng, g, beta)
        tb = act_hull(g, t.lam, t.mu, beta)
        s = random_germ(rng, g, tb)
        st = compose(g, s, t)
        assert not st.is_zero
        assert act_hull(g, st.lam, st.mu, beta) == act_hull(g, s.lam, s.mu, tb)
        # restricting t further does not change the germ of the product
        xi = from_path(g, prefix_of(beta, len(st.mu) + 2))
        t2 = compose(g, t, make(g, xi, xi))
        assert germ_equal(g, compose(g, s, t2), beta, st, beta)
        hits += 1
    assert hits == 200


def test_order_compatible_with_idempotents(bs):
    rng = random.Random(6)
    for _ in range(200):
        a, b = random_directed(rng, bs, "v", 3, False), random_directed(rng, bs, "v", 3, False)
        ea, eb = make(bs, a, a), make(bs, b, b)
        prod = compose(bs, ea, eb)
        if le(a, b):
            assert prod == eb
        elif le(b, a):
            assert prod == ea
        else:
            assert prod == ZERO
