"""Balls in the directed Bass–Serre tree and recovery of the graph of groups from them."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .errors import BallTooShallow, NotComposable
from .gog import GraphOfGroups, SignedEdge, id_key
from .words import NormalWord, WordBuilder, identity


@dataclass(frozen=True)
class TreeEdge:
    child: int
    parent: int
    lift_of: str
    oriented_child_to_parent: bool

    @property
    def tail(self) -> int:
        return self.child if self.oriented_child_to_parent else self.parent

    @property
    def head(self) -> int:
        return self.parent if self.oriented_child_to_parent else self.child


@dataclass(frozen=True)
class TreeBall:
    """Vertices are coset words (tail 0), listed in breadth-first order; ids are list indices."""

    graph: GraphOfGroups
    base: str
    depth: int
    vertices: tuple[NormalWord, ...]
    distance: tuple[int, ...]
    edges: tuple[TreeEdge, ...]

    @property
    def root(self) -> NormalWord:
        return self.vertices[0]

    def lift(self, i: int) -> str:
        """The vertex of Γ that vertex ``i`` lies over."""
        return self.vertices[i].source

    def label(self, i: int) -> str:
        w = self.vertices[i]
        letters = "".join(f"{l.rep}{l.edge}{'~' if l.reversed else ''}" for l in w.letters)
        return letters + str(self.graph.group(w.source))

    def profile(self) -> list[int]:
        """Number of vertices at each distance from the root."""
        counts = Counter(self.distance)
        return [counts[k] for k in range(self.depth + 1)]

    def interior(self) -> list[int]:
        return [i for i, k in enumerate(self.distance) if k < self.depth]

    def degree(self, i: int) -> int:
        return sum(1 for t in self.edges if i in (t.child, t.parent))

    def in_degree(self, i: int) -> int:
        return sum(1 for t in self.edges if t.head == i)

    def to_dot(self) -> str:
        lines = [f'digraph "ball_{self.base}_{self.depth}" {{', "  node [shape=plaintext];"]
        for i in range(len(self.vertices)):
            lines.append(f'  n{i} [label="{self.label(i)}"];')
        for t in self.edges:
            lines.append(f'  n{t.tail} -> n{t.head} [label="{t.lift_of}", arrowhead=normal];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "base": self.base,
            "depth": self.depth,
            "vertices": [{"id": i, "label": self.label(i), "lift": self.lift(i),
                          "distance": self.distance[i]} for i in range(len(self.vertices))],
            "edges": [{"tail": t.tail, "head": t.head, "lift_of": t.lift_of}
                      for t in self.edges],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2) + "\n"


def expand(g: GraphOfGroups, x: str, d: int) -> TreeBall:
    """The ball of radius ``d`` about the coset ``G_x`` in the directed Bass–Serre tree.

    A vertex ``uG_v`` is joined to ``u h f G_{s(f)}`` for every signed edge ``f``
    with range ``v`` and every ``h`` in the transversal for ``f``; the normal
    form of ``u h f`` either extends ``u`` by one letter or cancels back to the
    parent. The joining edge is oriented towards the shorter word exactly when
    ``f`` is a forward edge.
    """
    if x not in g.vertices:
        raise NotComposable(f"unknown vertex {x!r}")
    if d < 0:
        raise ValueError("depth must be non-negative")
    root = identity(g, x)
    vertices = [root]
    distance = [0]
    index = {root.letters: 0}
    edges: list[TreeEdge] = []
    frontier = [0]
    for k in range(d):
        nxt = []
        for i in frontier:
            u = vertices[i]
            for f in g.star(u.source):
                for h in range(g.transversal_size(f)):
                    b = WordBuilder.from_word(g, u)
                    b.add(h)
                    b.step(f)
                    key = tuple(b.stack)
                    if key in index:
                        continue  # the parent, reached by cancellation
                    child = len(vertices)
                    index[key] = child
                    vertices.append(NormalWord(x, b.vertex, key, 0))
                    distance.append(k + 1)
                    edges.append(TreeEdge(child, i, f.edge, not f.reversed))
                    nxt.append(child)
        frontier = nxt
    return TreeBall(g, x, d, tuple(vertices), tuple(distance), tuple(edges))


@dataclass(frozen=True)
class QuotientEdge:
    range: str
    source: str
    in_multiplicity: Optional[int]
    out_multiplicity: Optional[int]


@dataclass(frozen=True)
class Quotient:
    vertices: tuple[str, ...]
    edges: dict

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices),
                "edges": {e: vars(q) for e, q in self.edges.items()}}


def quotient(ball: TreeBall) -> Quotient:
    """Collapse the ball onto Γ₊ using only the tree's own structure.

    Vertices collapse by the Γ⁰ vertex they lift, tree edges by the edge they
    lift; the orientation of a lift gives range and source. Multiplicities are
    read off at interior vertices, whose stars are complete: the in-multiplicity
    of ``e`` is the number of lifts of ``e`` pointing into a lift of ``r(e)``.
    """
    if ball.depth < 1:
        raise BallTooShallow("quotient needs a ball of radius at least 1")
    ends: dict[str, set] = {}
    incoming: dict[str, set] = {}
    outgoing: dict[str, set] = {}
    interior = set(ball.interior())
    per_vertex_in: dict[int, Counter] = {i: Counter() for i in interior}
    per_vertex_out: dict[int, Counter] = {i: Counter() for i in interior}
    for t in ball.edges:
        ends.setdefault(t.lift_of, set()).add((ball.lift(t.head), ball.lift(t.tail)))
        if t.head in interior:
            per_vertex_in[t.head][t.lift_of] += 1
        if t.tail in interior:
            per_vertex_out[t.tail][t.lift_of] += 1
    for i in interior:
        v = ball.lift(i)
        for e, (r, s) in ((e, next(iter(p))) for e, p in ends.items()):
            if r == v:
                incoming.setdefault(e, set()).add(per_vertex_in[i][e])
            if s == v:
                outgoing.setdefault(e, set()).add(per_vertex_out[i][e])
    edges = {}
    for e in sorted(ends, key=id_key):
        if len(ends[e]) != 1:
            raise AssertionError(f"lifts of {e} join different vertex pairs: {ends[e]}")
        r, s = next(iter(ends[e]))
        ins, outs = incoming.get(e, set()), outgoing.get(e, set())
        if len(ins) > 1 or len(outs) > 1:
            raise AssertionError(f"lifts of {e} have inconsistent multiplicities")
        edges[e] = QuotientEdge(r, s, next(iter(ins), None), next(iter(outs), None))
    verts = tuple(sorted({ball.lift(i) for i in range(len(ball.vertices))}, key=id_key))
    return Quotient(verts, edges)


def index_weights(g: GraphOfGroups) -> Quotient:
    """Γ₊ weighted by the embedding indices, the expected value of :func:`quotient`."""
    return Quotient(tuple(g.vertices), {
        e.id: QuotientEdge(e.range, e.source,
                           g.transversal_size(SignedEdge(e.id, False)),
                           g.transversal_size(SignedEdge(e.id, True)))
        for e in g.edges.values()})
