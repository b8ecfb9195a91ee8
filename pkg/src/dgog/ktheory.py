"""K-theory of the C*-algebra of a directed graph of infinite cyclic groups."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from . import intlin
from .errors import NonCyclicInfinite
from .gog import GraphOfGroups, require_no_sources
from .intlin import AbelianInvariants, Matrix


def weight_matrices(g: GraphOfGroups, order: Optional[Sequence[str]] = None
                    ) -> tuple[Matrix, Matrix]:
    """Vertex matrices with entry ``[w][v]`` = sum of ``n_e`` (resp. ``m_e``) over edges ``w -> v``.

    Rows are indexed by sources, columns by ranges, over ``order`` (default:
    the graph's sorted vertex order).
    """
    if not g.all_infinite:
        raise NonCyclicInfinite("weight matrices need every vertex and edge group to be Z")
    order = list(g.vertices) if order is None else list(order)
    if sorted(order) != sorted(g.vertices):
        raise ValueError("vertex order must list every vertex exactly once")
    pos = {v: i for i, v in enumerate(order)}
    k = len(order)
    n, m = intlin.zeros(k, k), intlin.zeros(k, k)
    for e in g.edges.values():
        n[pos[e.source]][pos[e.range]] += e.n
        m[pos[e.source]][pos[e.range]] += e.m
    return n, m


@dataclass(frozen=True)
class KTheoryResult:
    K0: AbelianInvariants
    K1: AbelianInvariants
    N: Matrix
    M: Matrix
    vertices: tuple[str, ...]
    snf_one_minus_N: tuple[int, ...]
    snf_one_minus_M: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "N": self.N, "M": self.M,
            "snf_1_minus_N": list(self.snf_one_minus_N),
            "snf_1_minus_M": list(self.snf_one_minus_M),
            "K0": self.K0.to_json(), "K1": self.K1.to_json(),
        }


def k_theory(g: GraphOfGroups, order: Optional[Sequence[str]] = None) -> KTheoryResult:
    """``K0 = coker(1-N) ⊕ ker(1-M)`` and ``K1 = coker(1-M) ⊕ ker(1-N)``.

    The formula holds for graphs without sources, so those are rejected.
    """
    n, m = weight_matrices(g, order)
    require_no_sources(g)
    one = intlin.identity(len(n))
    a, b = intlin.sub(one, n), intlin.sub(one, m)
    k0 = intlin.cokernel(a).direct_sum(AbelianInvariants.free(intlin.kernel_rank(b)))
    k1 = intlin.cokernel(b).direct_sum(AbelianInvariants.free(intlin.kernel_rank(a)))
    verts = tuple(g.vertices) if order is None else tuple(order)
    return KTheoryResult(k0, k1, n, m, verts,
                         tuple(intlin.invariant_factors(a)), tuple(intlin.invariant_factors(b)))
