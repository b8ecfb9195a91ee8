import random

import pytest
import sympy

from dgog import catalog
from dgog.cyclic import CyclicGroup
from dgog.errors import NonCyclicInfinite, ValidationError
from dgog.gog import EdgeSpec, GraphOfGroups
from dgog.intlin import AbelianInvariants, kernel_rank
from dgog.ktheory import k_theory, weight_matrices

Z = CyclicGroup.integers()


def chain():
    return GraphOfGroups.build({"v": Z, "w": Z}, [EdgeSpec("e", "v", "w", Z, 1, 1)])


def test_weight_matrix_examples():
    assert weight_matrices(catalog.bs12()) == ([[2]], [[1]])
    assert weight_matrices(catalog.rose(2)) == ([[2]], [[2]])
    assert weight_matrices(chain()) == ([[0, 0], [1, 0]], [[0, 0], [1, 0]])
    with pytest.raises(NonCyclicInfinite):
        weight_matrices(catalog.z2_z3())


def test_k_theory_examples():
    r = k_theory(catalog.bs12())
    assert (r.K0, r.K1) == (AbelianInvariants(1), AbelianInvariants(1))
    r = k_theory(catalog.loop(2, 3))
    assert (r.K0, r.K1) == (AbelianInvariants(0), AbelianInvariants(0, (2,)))


@pytest.mark.parametrize("k", range(2, 7))
def test_rose_formula(k):
    # 1 - N = 1 - M = (1 - k): both cokernels are Z/(k-1) and both kernels vanish
    r = k_theory(catalog.rose(k))
    expected = AbelianInvariants(0, (k - 1,) if k > 2 else ())
    assert r.K0 == expected
    assert r.K1 == expected


def test_sources_rejected():
    with pytest.raises(ValidationError):
        k_theory(chain())


def random_z_graph(rng, ones=False):
    k = rng.randint(1, 4)
    names = [f"x{i}" for i in range(k)]
    edges = []
    # a directed cycle through every vertex: connected and source-free
    for i in range(k):
        edges.append((names[i], names[(i + 1) % k]))
    for _ in range(rng.randint(0, 4)):
        edges.append((rng.choice(names), rng.choice(names)))
    specs = [EdgeSpec(f"e{i}", r, s, Z, 1 if ones else rng.randint(1, 4),
                      1 if ones else rng.choice([-3, -2, -1, 1, 2, 3]))
             for i, (r, s) in enumerate(edges)]
    return GraphOfGroups.build({v: Z for v in names}, specs)


def sympy_group(a):
    """Cokernel invariants from sympy's Smith form, for cross-checking."""
    from sympy.matrices.normalforms import smith_normal_form
    m = sympy.Matrix(a)
    d = smith_normal_form(m, domain=sympy.ZZ)
    diag = [abs(int(d[i, i])) for i in range(min(d.shape))]
    free = m.shape[0] - sum(1 for x in diag if x)
    return AbelianInvariants(free, tuple(x for x in diag if x > 1))


def test_against_sympy_smith_form():
    rng = random.Random(3)
    for _ in range(100):
        g = random_z_graph(rng)
        r = k_theory(g)
        n, m = weight_matrices(g)
        one = sympy.eye(len(n))
        a, b = one - sympy.Matrix(n), one - sympy.Matrix(m)
        ka, kb = len(n) - a.rank(), len(n) - b.rank()
        assert r.K0 == sympy_group(a.tolist()).direct_sum(AbelianInvariants(kb))
        assert r.K1 == sympy_group(b.tolist()).direct_sum(AbelianInvariants(ka))


def test_trivial_multipliers_reduce_to_vertex_matrix():
    rng = random.Random(4)
    for _ in range(50):
        g = random_z_graph(rng, ones=True)
        r = k_theory(g)
        assert r.N == r.M
        assert r.K0 == r.K1


def test_two_cycle():
    g = GraphOfGroups.build({"v": Z, "w": Z}, [EdgeSpec("a", "v", "w", Z, 1, 1),
                                               EdgeSpec("b", "w", "v", Z, 1, 1)])
    r = k_theory(g)
    assert r.K0 == r.K1 == AbelianInvariants(2)


def test_vertex_order_invariance_and_rank_bounds():
    rng = random.Random(5)
    for _ in range(60):
        g = random_z_graph(rng)
        base = k_theory(g)
        order = list(g.vertices)
        rng.shuffle(order)
        other = k_theory(g, order)
        assert (other.K0, other.K1) == (base.K0, base.K1)
        one_minus = lambda x: [[int(i == j) - x[i][j] for j in range(len(x))]
                               for i in range(len(x))]
        assert base.K0.free_rank >= kernel_rank(one_minus(base.M))
        assert base.K1.free_rank >= kernel_rank(one_minus(base.N))
