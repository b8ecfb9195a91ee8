"""Sufficient conditions for a UCT Kirchberg algebra, and realisation of prescribed K-groups."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import networkx as nx

from . import intlin
from .cyclic import CyclicGroup
from .errors import NonCyclicInfinite, SingularMatrix, ZeroPatternMismatch
from .gog import EdgeSpec, GraphOfGroups, id_key, require_no_sources
from .intlin import Matrix

PASS, FAIL, INDETERMINATE = "PASS", "FAIL", "INDETERMINATE"
DEFAULT_CYCLE_BOUND = 10_000
DEFAULT_K_BOUND = 64


@dataclass(frozen=True)
class CheckResult:
    status: str
    witness: Optional[tuple[str, ...]] = None
    evidence: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"status": self.status,
                "witness": list(self.witness) if self.witness is not None else None,
                "evidence": self.evidence}


@dataclass(frozen=True)
class KirchbergReport:
    cond_strongly_connected: CheckResult
    cond_cofinal: CheckResult
    cond_loop: CheckResult
    cond_denominator: CheckResult

    @property
    def overall(self) -> str:
        conds = (self.cond_cofinal, self.cond_loop, self.cond_denominator)
        if any(c.status == FAIL for c in conds):
            return FAIL
        if all(c.status == PASS for c in conds):
            return PASS
        return INDETERMINATE

    def to_json(self) -> dict:
        return {"strongly_connected": self.cond_strongly_connected.to_json(),
                "cofinal": self.cond_cofinal.to_json(),
                "loop": self.cond_loop.to_json(),
                "denominator": self.cond_denominator.to_json(),
                "overall": self.overall}


def _digraph(g: GraphOfGroups) -> nx.DiGraph:
    d = nx.DiGraph()
    d.add_nodes_from(g.vertices)
    for e in g.edges.values():
        d.add_edge(e.source, e.range)
    return d


def simple_cycles(g: GraphOfGroups, bound: int = DEFAULT_CYCLE_BOUND
                  ) -> tuple[list[tuple[str, ...]], bool]:
    """Simple cycles of Γ₊ as edge sequences ``e1 e2 ... eL`` with ``s(e_i) = r(e_{i+1})``.

    Parallel edges give distinct cycles. Returns ``(cycles, complete)``;
    ``complete`` is False when more than ``bound`` cycles exist. Cycles are
    rotated to start at their least edge id and sorted by length, then ids.
    """
    between: dict[tuple[str, str], list[str]] = {}
    for e in g.edges.values():
        between.setdefault((e.source, e.range), []).append(e.id)
    out: list[tuple[str, ...]] = []
    for verts in nx.simple_cycles(_digraph(g)):
        # networkx walks v0 -> v1 -> ... along s -> r; paths here run the other way
        hops = [between[(verts[i], verts[(i + 1) % len(verts)])] for i in range(len(verts))]
        for choice in itertools.product(*hops):
            if len(out) >= bound:
                return _sorted_cycles(out), False
            out.append(tuple(reversed(choice)))
    return _sorted_cycles(out), True


def _sorted_cycles(cycles):
    def rotate(c):
        i = min(range(len(c)), key=lambda k: id_key(c[k]))
        return c[i:] + c[:i]
    rotated = [rotate(c) for c in cycles]
    return sorted(rotated, key=lambda c: (len(c), [id_key(e) for e in c]))


def _require_z_graph(g: GraphOfGroups) -> None:
    if not g.all_infinite:
        raise NonCyclicInfinite("the Kirchberg conditions are stated for graphs of infinite "
                                "cyclic groups")
    require_no_sources(g)


def check_strongly_connected(g: GraphOfGroups) -> CheckResult:
    return CheckResult(PASS if nx.is_strongly_connected(_digraph(g)) else FAIL)


def check_cofinal(g: GraphOfGroups) -> CheckResult:
    """Strong connectivity certifies cofinality; anything else is left undecided."""
    if nx.is_strongly_connected(_digraph(g)):
        return CheckResult(PASS, evidence={"via": "strongly connected"})
    return CheckResult(INDETERMINATE, evidence={"via": "not strongly connected"})


def check_loop_condition(g: GraphOfGroups, cycle_bound: int = DEFAULT_CYCLE_BOUND
                         ) -> CheckResult:
    """Some cycle has an entrance or an edge with ``n_e >= 2``."""
    cycles, complete = simple_cycles(g, cycle_bound)
    for c in cycles:
        big = [e for e in c if g.edge(e).n >= 2]
        if big:
            return CheckResult(PASS, c, {"edge": big[0], "n": g.edge(big[0]).n})
        on_cycle = {g.edge(e).range for e in c}
        entrance = next((e.id for e in g.edges.values()
                         if e.id not in c and e.range in on_cycle), None)
        if entrance is not None:
            return CheckResult(PASS, c, {"entrance": entrance})
    if not complete:
        return CheckResult(INDETERMINATE, evidence={"cycles_examined": len(cycles),
                                                    "reason": "cycle bound exceeded"})
    return CheckResult(FAIL, evidence={"cycles_examined": len(cycles)})


def _prime_factors(x: int) -> list[int]:
    x, out, p = abs(x), [], 2
    while p * p <= x:
        if x % p == 0:
            out.append(p)
            while x % p == 0:
                x //= p
        p += 1
    if x > 1:
        out.append(x)
    return out


def denominators(g: GraphOfGroups, cycle: tuple[str, ...], k_bound: int) -> list[int]:
    """``⟨m_{e1}...m_{e(k-1)} / n_{e1}...n_{ek}⟩`` for ``k = 1..k_bound`` along ``cycle^∞``."""
    out, q = [], Fraction(1)
    for k in range(k_bound):
        e = g.edge(cycle[k % len(cycle)])
        if k:
            q *= g.edge(cycle[(k - 1) % len(cycle)]).m
        q /= e.n
        out.append(q.denominator)
    return out


def check_denominator_condition(g: GraphOfGroups, k_bound: int = DEFAULT_K_BOUND,
                                cycle_bound: int = DEFAULT_CYCLE_BOUND) -> CheckResult:
    """Look for a path along which the reduced denominators are unbounded.

    First a prime dividing the cycle's ``n`` product but not its ``m`` product.
    Failing that, the denominators along each ``cycle^∞`` are computed exactly
    for ``k <= k_bound``: after one period the ratio is multiplied by the fixed
    rational ``∏m / ∏n``, so a strict increase across a full period proves
    that this ratio is not an integer and the denominators diverge.
    """
    if all(e.n == 1 for e in g.edges.values()):
        return CheckResult(FAIL, evidence={"reason": "every n_e is 1, so every ratio is an integer"})
    cycles, complete = simple_cycles(g, cycle_bound)
    for c in cycles:
        pn = 1
        pm = 1
        for e in c:
            pn *= g.edge(e).n
            pm *= g.edge(e).m
        for p in _prime_factors(pn):
            if pm % p:
                return CheckResult(PASS, c, {"prime": p})
    best_sup, best_cycle = None, None
    for c in cycles:
        dens = denominators(g, c, k_bound)
        period = len(c)
        for k in range(len(dens) - period):
            if dens[k + period] > dens[k]:
                return CheckResult(PASS, c, {"growth": [k + 1, dens[k], dens[k + period]]})
        if dens and (best_sup is None or max(dens) > best_sup):
            best_sup, best_cycle = max(dens), c
    evidence = {"k_bound": k_bound, "sup": best_sup}
    if not complete:
        evidence["reason"] = "cycle bound exceeded"
    return CheckResult(INDETERMINATE, best_cycle, evidence)


def check_kirchberg(g: GraphOfGroups, cycle_bound: int = DEFAULT_CYCLE_BOUND,
                    k_bound: int = DEFAULT_K_BOUND) -> KirchbergReport:
    _require_z_graph(g)
    return KirchbergReport(check_strongly_connected(g), check_cofinal(g),
                           check_loop_condition(g, cycle_bound),
                           check_denominator_condition(g, k_bound, cycle_bound))


# -- realisation ------------------------------------------------------------------

@dataclass(frozen=True)
class Construction:
    T: Matrix
    S: Matrix
    X: Matrix
    Y: Matrix
    N: Matrix
    M: Matrix


def construction_matrices(t: Matrix, s: Matrix) -> Construction:
    """The block matrices ``N = (2I, T+Y; I, I+Y)`` and ``M = (3I, S+2Y; I, I+Y)``.

    ``X`` is the 0/1 matrix of the path graph and ``Y = 2|T| + |S| + X``.
    """
    t, s = intlin.as_matrix(t), intlin.as_matrix(s)
    n = len(t)
    for name, a in (("T", t), ("S", s)):
        if intlin.shape(a) != (n, n) or n == 0:
            raise ValueError(f"{name} must be a non-empty square matrix of size {n}")
        if intlin.det(a) == 0:
            raise SingularMatrix(f"{name} is singular, so it is not injective")
    i = intlin.identity(n)
    x = [[int(abs(k - l) == 1) for l in range(n)] for k in range(n)]
    y = intlin.add(intlin.add(intlin.scale(2, intlin.absolute(t)), intlin.absolute(s)), x)
    big_n = intlin.block([[intlin.scale(2, i), intlin.add(t, y)], [i, intlin.add(i, y)]])
    big_m = intlin.block([[intlin.scale(3, i), intlin.add(s, intlin.scale(2, y))],
                          [i, intlin.add(i, y)]])
    return Construction(t, s, x, y, big_n, big_m)


def block_factors(c: Construction) -> tuple[tuple[Matrix, Matrix, Matrix], tuple[Matrix, Matrix, Matrix]]:
    """Factorisations ``1-N = P·(0,-T;-I,0)·R`` and ``1-M = P'·(0,-S;-I,0)·R`` with unimodular outer factors."""
    n = len(c.T)
    i, z = intlin.identity(n), intlin.zeros(n, n)
    minus_i = intlin.scale(-1, i)
    r = intlin.block([[i, c.Y], [z, i]])
    fn = (intlin.block([[i, i], [z, i]]),
          intlin.block([[z, intlin.scale(-1, c.T)], [minus_i, z]]), r)
    fm = (intlin.block([[i, intlin.scale(2, i)], [z, i]]),
          intlin.block([[z, intlin.scale(-1, c.S)], [minus_i, z]]), r)
    return fn, fm


def graph_from_matrices(big_n: Matrix, big_m: Matrix) -> GraphOfGroups:
    """The graph on vertices ``v0..v(k-1)`` with an edge ``e{i}_{j}`` from ``v{j}`` to ``v{i}``
    for each positive ``N[i][j]``, with ``n = N[i][j]`` and ``m = M[i][j]``."""
    k = len(big_n)
    z = CyclicGroup.integers()
    edges = []
    for i in range(k):
        for j in range(k):
            if (big_n[i][j] == 0) != (big_m[i][j] == 0):
                raise ZeroPatternMismatch(f"N and M disagree on zero entry ({i}, {j})")
            if big_n[i][j] < 0:
                raise ValueError(f"N has a negative entry at ({i}, {j})")
            if big_n[i][j]:
                edges.append(EdgeSpec(f"e{i}_{j}", f"v{i}", f"v{j}", z,
                                      big_n[i][j], big_m[i][j]))
    return GraphOfGroups.build({f"v{i}": z for i in range(k)}, edges, allow_sources=False)


def realize(t: Matrix, s: Matrix) -> GraphOfGroups:
    """A graph of infinite cyclic groups with ``K0 ≅ coker T`` and ``K1 ≅ coker S``."""
    c = construction_matrices(t, s)
    return graph_from_matrices(c.N, c.M)
