"""Directed graphs of cyclic groups: data model, validation, JSON documents, E_Σ."""

from __future__ import annotations

import json
import re
from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from types import MappingProxyType
from typing import NamedTuple

from .cyclic import CyclicGroup, Embedding
from .errors import ParseError, ValidationError

# characters reserved by the word and lasso literal syntax
_BAD_ID = re.compile(r"[\s:.|~@]")


def id_key(ident: str) -> tuple:
    """Natural sort key: ``v2`` sorts before ``v10``."""
    return tuple((0, int(p), "") if p.isdigit() else (1, 0, p)
                 for p in re.split(r"(\d+)", ident) if p)


class SignedEdge(NamedTuple):
    """An edge of the underlying undirected graph: ``e`` or its reversal ``ē``."""

    edge: str
    reversed: bool = False

    def flip(self) -> "SignedEdge":
        return SignedEdge(self.edge, not self.reversed)

    def __str__(self):
        return self.edge + ("~" if self.reversed else "")


@dataclass(frozen=True)
class EdgeSpec:
    id: str
    range: str
    source: str
    edge_group: CyclicGroup
    n: int
    m: int

    def to_json(self) -> dict:
        return {"id": self.id, "range": self.range, "source": self.source,
                "edge_group": self.edge_group.to_json(), "n": self.n, "m": self.m}


class GraphOfGroups:
    """A finite, connected directed graph of cyclic groups.

    Build one with :func:`load` or :meth:`build`; both validate and apply the
    sign normalisation ``n > 0`` on edges whose range group is ℤ.
    """

    def __init__(self, vertices: Mapping[str, CyclicGroup], edges: Mapping[str, EdgeSpec]):
        self.vertices = MappingProxyType({v: vertices[v] for v in sorted(vertices, key=id_key)})
        self.edges = MappingProxyType({e: edges[e] for e in sorted(edges, key=id_key)})
        self._incoming: dict[str, tuple[str, ...]] = {v: () for v in self.vertices}
        self._outgoing: dict[str, tuple[str, ...]] = {v: () for v in self.vertices}
        for e in self.edges.values():
            self._incoming[e.range] += (e.id,)
            self._outgoing[e.source] += (e.id,)
        self._emb: dict[SignedEdge, Embedding] = {}
        for e in self.edges.values():
            self._emb[SignedEdge(e.id, False)] = Embedding(e.edge_group, self.vertices[e.range], e.n)
            self._emb[SignedEdge(e.id, True)] = Embedding(e.edge_group, self.vertices[e.source], e.m)

    @classmethod
    def build(cls, vertices: Mapping[str, CyclicGroup], edges, *, allow_sources: bool = True
              ) -> "GraphOfGroups":
        """Validate and construct from a vertex map and an iterable of :class:`EdgeSpec`."""
        return _validated(dict(vertices), list(edges), allow_sources=allow_sources)

    # -- structure -------------------------------------------------------

    def group(self, v: str) -> CyclicGroup:
        return self.vertices[v]

    def edge(self, e: str) -> EdgeSpec:
        return self.edges[e]

    def incoming(self, v: str) -> tuple[str, ...]:
        """Edges ``e`` of Γ₊ with ``r(e) = v``."""
        return self._incoming[v]

    def outgoing(self, v: str) -> tuple[str, ...]:
        return self._outgoing[v]

    def star(self, v: str) -> tuple[SignedEdge, ...]:
        """Signed edges of Γ with range ``v``, ordered by edge id then direction."""
        out = [SignedEdge(e, False) for e in self._incoming[v]]
        out += [SignedEdge(e, True) for e in self._outgoing[v]]
        return tuple(sorted(out, key=lambda x: (id_key(x.edge), x.reversed)))

    def range_of(self, x: SignedEdge) -> str:
        e = self.edges[x.edge]
        return e.source if x.reversed else e.range

    def source_of(self, x: SignedEdge) -> str:
        e = self.edges[x.edge]
        return e.range if x.reversed else e.source

    def embedding(self, x: SignedEdge) -> Embedding:
        """The monomorphism ``α_x : G_x -> G_{r(x)}``."""
        return self._emb[x]

    def push(self, x: SignedEdge, q: int) -> int:
        """``α_{x̄}(q)``: move an edge-group element to the source side of ``x``."""
        return self._emb[x.flip()].apply(q)

    def transversal_size(self, x: SignedEdge) -> int:
        return self._emb[x].index

    def sources(self) -> list[str]:
        """Vertices receiving no edge of Γ₊."""
        return [v for v in self.vertices if not self._incoming[v]]

    @property
    def all_infinite(self) -> bool:
        return all(g.is_infinite for g in self.vertices.values()) and \
            all(e.edge_group.is_infinite for e in self.edges.values())

    def sigma_graph(self) -> "SigmaGraph":
        return SigmaGraph(self)

    # -- serialisation ---------------------------------------------------

    def to_json(self) -> dict:
        return {
            "vertices": [{"id": v, "group": g.to_json()} for v, g in self.vertices.items()],
            "edges": [e.to_json() for e in self.edges.values()],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2) + "\n"

    def __eq__(self, other):
        if not isinstance(other, GraphOfGroups):
            return NotImplemented
        return dict(self.vertices) == dict(other.vertices) and dict(self.edges) == dict(other.edges)

    def __hash__(self):
        return hash((tuple(self.vertices.items()), tuple(self.edges.items())))

    def __repr__(self):
        return f"GraphOfGroups({len(self.vertices)} vertices, {len(self.edges)} edges)"


def _parse_group(doc, where: str) -> CyclicGroup:
    if not isinstance(doc, Mapping) or "type" not in doc:
        raise ParseError(f"{where}: group must be an object with a 'type'")
    if doc["type"] == "Z":
        return CyclicGroup.integers()
    if doc["type"] == "Zmod":
        order = doc.get("order")
        if not isinstance(order, int) or isinstance(order, bool) or order < 1:
            raise ParseError(f"{where}: Zmod needs an integer order >= 1")
        return CyclicGroup.mod(order)
    raise ParseError(f"{where}: unknown group type {doc['type']!r}")


def _parse_int(value, where: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise ParseError(f"{where}: expected an integer, got {value!r}")
    return value


def load(document, *, allow_sources: bool = True) -> GraphOfGroups:
    """Parse and validate a graph document (JSON text, bytes or an already-decoded mapping).

    Sources are tolerated by default: several standard examples (e.g. the
    free product ℤ₂ * ℤ₃) have one. Pass ``allow_sources=False`` to insist on
    the no-sources condition needed by the C*-algebraic constructions.
    """
    if isinstance(document, (str, bytes, bytearray)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(document, Mapping):
        raise ParseError("graph document must be a JSON object")
    if not isinstance(document.get("vertices"), list) or not isinstance(document.get("edges"), list):
        raise ParseError("graph document needs 'vertices' and 'edges' lists")

    vertices: dict[str, CyclicGroup] = {}
    for i, vd in enumerate(document["vertices"]):
        if not isinstance(vd, Mapping) or not isinstance(vd.get("id"), str):
            raise ParseError(f"vertices[{i}]: needs a string 'id'")
        if vd["id"] in vertices:
            raise ValidationError(f"duplicate vertex id {vd['id']!r}", kind="bad-id")
        vertices[vd["id"]] = _parse_group(vd.get("group"), f"vertices[{i}]")

    edges = []
    for i, ed in enumerate(document["edges"]):
        if not isinstance(ed, Mapping):
            raise ParseError(f"edges[{i}]: must be an object")
        for key in ("id", "range", "source"):
            if not isinstance(ed.get(key), str):
                raise ParseError(f"edges[{i}]: needs a string {key!r}")
        edges.append(EdgeSpec(ed["id"], ed["range"], ed["source"],
                              _parse_group(ed.get("edge_group"), f"edges[{i}].edge_group"),
                              _parse_int(ed.get("n"), f"edges[{i}].n"),
                              _parse_int(ed.get("m"), f"edges[{i}].m")))
    return _validated(vertices, edges, allow_sources=allow_sources)


def _validated(vertices: dict[str, CyclicGroup], edges: list[EdgeSpec], *, allow_sources: bool
               ) -> GraphOfGroups:
    if not vertices:
        raise ValidationError("graph has no vertices", kind="disconnected")
    for v in vertices:
        if not v or _BAD_ID.search(v):
            raise ValidationError(f"vertex id {v!r} is empty or uses a reserved character",
                                  kind="bad-id")
    by_id: dict[str, EdgeSpec] = {}
    for e in edges:
        if not e.id or _BAD_ID.search(e.id):
            raise ValidationError(f"edge id {e.id!r} is empty or uses a reserved character",
                                  kind="bad-id")
        if e.id in by_id:
            raise ValidationError(f"duplicate edge id {e.id!r}", kind="bad-id")
        for end in (e.range, e.source):
            if end not in vertices:
                raise ValidationError(f"edge {e.id!r} refers to unknown vertex {end!r}",
                                      kind="bad-reference")
        if vertices[e.range].is_infinite and e.n < 0:
            e = EdgeSpec(e.id, e.range, e.source, e.edge_group, -e.n, -e.m)
        by_id[e.id] = e

    # connectivity of the underlying undirected graph
    adj: dict[str, set[str]] = {v: set() for v in vertices}
    for e in by_id.values():
        adj[e.range].add(e.source)
        adj[e.source].add(e.range)
    start = next(iter(vertices))
    seen, todo = {start}, [start]
    while todo:
        for w in adj[todo.pop()]:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    if len(seen) != len(vertices):
        missing = sorted(set(vertices) - seen, key=id_key)
        raise ValidationError(f"graph is disconnected (unreachable: {', '.join(missing)})",
                              kind="disconnected")

    g = GraphOfGroups(vertices, by_id)  # builds embeddings: injectivity, finite index
    if not allow_sources and g.sources():
        raise ValidationError(f"vertex {g.sources()[0]!r} receives no edge", kind="has-source")
    return g


def require_no_sources(g: GraphOfGroups) -> None:
    if g.sources():
        raise ValidationError(f"vertex {g.sources()[0]!r} receives no edge", kind="has-source")


# -- E_Σ --------------------------------------------------------------------

class SigmaLetter(NamedTuple):
    """An edge ``he`` of E_Σ: transversal element ``h`` followed by the edge ``e`` of Γ₊."""

    rep: int
    edge: str

    def __str__(self):
        return f"{self.rep}:{self.edge}"


@dataclass(frozen=True)
class SigmaPath:
    """A finite path in E_Σ with range ``vertex`` (the empty path is just a vertex)."""

    vertex: str
    letters: tuple[SigmaLetter, ...] = ()

    def __len__(self):
        return len(self.letters)

    def is_prefix_of(self, other: "SigmaPath") -> bool:
        return self.vertex == other.vertex and other.letters[:len(self.letters)] == self.letters

    def __str__(self):
        return ".".join(map(str, self.letters)) if self.letters else f"@{self.vertex}"


class SigmaGraph:
    """E_Σ: Γ₊ with each edge ``e`` replicated once per element of the canonical Σ_e."""

    def __init__(self, g: GraphOfGroups):
        self.graph = g
        self._at: dict[str, tuple[SigmaLetter, ...]] = {}
        for v in g.vertices:
            letters = []
            for e in g.incoming(v):
                size = g.transversal_size(SignedEdge(e, False))
                letters.extend(SigmaLetter(h, e) for h in range(size))
            self._at[v] = tuple(letters)

    @property
    def vertices(self):
        return tuple(self.graph.vertices)

    @property
    def letters(self) -> tuple[SigmaLetter, ...]:
        return tuple(l for v in self.graph.vertices for l in self._at[v])

    def letters_at(self, v: str) -> tuple[SigmaLetter, ...]:
        """Letters with range ``v``, ordered by edge id then rep."""
        return self._at[v]

    def range(self, letter: SigmaLetter) -> str:
        return self.graph.edge(letter.edge).range

    def source(self, letter: SigmaLetter) -> str:
        return self.graph.edge(letter.edge).source

    def is_letter(self, letter: SigmaLetter) -> bool:
        e = self.graph.edges.get(letter.edge)
        return e is not None and 0 <= letter.rep < self.graph.transversal_size(SignedEdge(e.id))

    def paths(self, v: str, length: int) -> Iterator[SigmaPath]:
        """All paths of exactly ``length`` letters with range ``v``."""
        def walk(vertex, acc):
            if len(acc) == length:
                yield SigmaPath(v, tuple(acc))
                return
            for l in self._at[vertex]:
                acc.append(l)
                yield from walk(self.source(l), acc)
                acc.pop()
        yield from walk(v, [])

    def end(self, path: SigmaPath) -> str:
        return self.source(path.letters[-1]) if path.letters else path.vertex


def sigma_graph(g: GraphOfGroups) -> SigmaGraph:
    return SigmaGraph(g)
