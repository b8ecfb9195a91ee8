"""Σ-normal forms in the fundamental groupoid and the word category Λ.

A word ``g1 x1 g2 x2 ... gn xn g(n+1)`` is stored as the letters ``(g_i, x_i)``
plus the trailing group element ``tail``. Normal form means every ``g_i`` is
the canonical coset representative for ``x_i`` and no letter ``(0, x)``
directly follows a letter on the reversed edge ``x̄``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import NamedTuple, Optional, Union

from .errors import NotComposable, NotDirected, ParseError
from .gog import GraphOfGroups, SigmaLetter, SigmaPath, SignedEdge


class Letter(NamedTuple):
    """``rep`` followed by ``edge`` (reversed when ``reversed`` is set)."""

    rep: int
    edge: str
    reversed: bool = False

    @property
    def signed(self) -> SignedEdge:
        return SignedEdge(self.edge, self.reversed)

    def __str__(self):
        return f"{self.rep} {self.edge}{'~' if self.reversed else ''}"


@dataclass(frozen=True)
class NormalWord:
    range: str
    source: str
    letters: tuple[Letter, ...] = ()
    tail: int = 0

    def __len__(self):
        return len(self.letters)

    @property
    def is_directed(self) -> bool:
        return not any(l.reversed for l in self.letters)

    @property
    def is_identity(self) -> bool:
        return not self.letters and self.tail == 0

    def with_tail(self, tail: int) -> "NormalWord":
        return NormalWord(self.range, self.source, self.letters, tail)

    def to_raw(self) -> list:
        raw: list = []
        for l in self.letters:
            raw += [l.rep, l.signed]
        return raw + [self.tail]

    def __str__(self):
        return format_word(self)


# Words of Λ are normal words without reversed letters; the alias documents intent.
DirectedWord = NormalWord

RawWord = Sequence[Union[int, SignedEdge]]


class WordBuilder:
    """Incremental left-to-right normaliser.

    The letters pushed so far are final except that a later cancellation can
    pop them; ``pending`` is the group element waiting in front of the next
    edge. Copying is cheap enough for depth-first searches over extensions.
    """

    __slots__ = ("graph", "range", "vertex", "stack", "pending")

    def __init__(self, g: GraphOfGroups, vertex: str, start: int = 0):
        self.graph = g
        self.range = vertex
        self.vertex = vertex
        self.stack: list[Letter] = []
        self.pending = g.group(vertex).reduce(start)

    @classmethod
    def from_word(cls, g: GraphOfGroups, w: NormalWord) -> "WordBuilder":
        b = cls(g, w.range)
        b.stack = list(w.letters)
        b.vertex = w.source
        b.pending = w.tail
        return b

    def copy(self) -> "WordBuilder":
        b = WordBuilder.__new__(WordBuilder)
        b.graph, b.range, b.vertex = self.graph, self.range, self.vertex
        b.stack = self.stack.copy()
        b.pending = self.pending
        return b

    def add(self, h: int) -> None:
        """Right-multiply by an element of the current vertex group."""
        self.pending = self.graph.group(self.vertex).reduce(self.pending + h)

    def step(self, x: SignedEdge) -> None:
        """Right-multiply by the edge ``x``."""
        g = self.graph
        if x.edge not in g.edges:
            raise NotComposable(f"unknown edge {x.edge!r}")
        if g.range_of(x) != self.vertex:
            raise NotComposable(f"edge {x} has range {g.range_of(x)}, word is at {self.vertex}")
        rep, q = g.embedding(x).decompose(self.pending)
        p = g.push(x, q)
        stack = self.stack
        if rep == 0 and stack and stack[-1].edge == x.edge and stack[-1].reversed != x.reversed:
            # y 0 ȳ collapses; the rep in front of y absorbs the pushed quotient
            top = stack.pop()
            self.pending = g.group(g.source_of(x)).reduce(top.rep + p)
        else:
            stack.append(Letter(rep, x.edge, x.reversed))
            self.pending = p
        self.vertex = g.source_of(x)

    def feed(self, x: SignedEdge, h: int = 0) -> None:
        self.step(x)
        if h:
            self.add(h)

    def word(self) -> NormalWord:
        return NormalWord(self.range, self.vertex, tuple(self.stack), self.pending)


def _as_signed(x) -> SignedEdge:
    if isinstance(x, SignedEdge):
        return x
    if isinstance(x, str):
        return SignedEdge(x[:-1], True) if x.endswith("~") else SignedEdge(x, False)
    if isinstance(x, tuple) and len(x) == 2:
        return SignedEdge(*x)
    raise TypeError(f"not an edge: {x!r}")


def normalize(g: GraphOfGroups, raw: RawWord, vertex: Optional[str] = None) -> NormalWord:
    """Σ-normal form of the alternating sequence ``[g1, x1, g2, ..., xn, g(n+1)]``.

    Edges may be :class:`SignedEdge` values or strings (``"e"``, ``"e~"``).
    ``vertex`` fixes the range and is required when there are no edges in a
    graph with more than one vertex.
    """
    raw = list(raw)
    if len(raw) % 2 == 0:
        raise ParseError("raw word must alternate group elements and edges, starting and "
                         "ending with a group element")
    edges = [_as_signed(x) for x in raw[1::2]]
    elems = raw[0::2]
    for h in elems:
        if not isinstance(h, int) or isinstance(h, bool):
            raise ParseError(f"expected a group element, got {h!r}")
    if edges:
        if edges[0].edge not in g.edges:
            raise NotComposable(f"unknown edge {edges[0].edge!r}")
        start = g.range_of(edges[0])
        if vertex is not None and vertex != start:
            raise NotComposable(f"word starts at {start}, not {vertex}")
    elif vertex is not None:
        start = vertex
    elif len(g.vertices) == 1:
        start = next(iter(g.vertices))
    else:
        raise ParseError("a word without edges needs an explicit vertex")
    if start not in g.vertices:
        raise NotComposable(f"unknown vertex {start!r}")
    b = WordBuilder(g, start, elems[0])
    for x, h in zip(edges, elems[1:]):
        b.feed(x, h)
    return b.word()


def identity(g: GraphOfGroups, v: str) -> NormalWord:
    g.group(v)
    return NormalWord(v, v)


def element(g: GraphOfGroups, v: str, h: int) -> NormalWord:
    """The vertex-group element ``h`` of ``G_v`` as a word."""
    return NormalWord(v, v, (), g.group(v).reduce(h))


def multiply(g: GraphOfGroups, a: NormalWord, b: NormalWord) -> NormalWord:
    if a.source != b.range:
        raise NotComposable(f"cannot compose a word with source {a.source} "
                            f"and one with range {b.range}")
    builder = WordBuilder.from_word(g, a)
    for l in b.letters:
        builder.add(l.rep)
        builder.step(l.signed)
    builder.add(b.tail)
    return builder.word()


def invert(g: GraphOfGroups, a: NormalWord) -> NormalWord:
    raw: list = [-a.tail]
    for l in reversed(a.letters):
        raw += [l.signed.flip(), -l.rep]
    return normalize(g, raw, vertex=a.source)


def is_normal(g: GraphOfGroups, w: NormalWord) -> bool:
    """Check the normal-form invariants (composability, transversals, no cancellation)."""
    v = w.range
    for i, l in enumerate(w.letters):
        x = l.signed
        if x.edge not in g.edges or g.range_of(x) != v:
            return False
        if not 0 <= l.rep < g.transversal_size(x):
            return False
        if i and l.rep == 0:
            prev = w.letters[i - 1]
            if prev.edge == l.edge and prev.reversed != l.reversed:
                return False
        v = g.source_of(x)
    return v == w.source and g.group(v).contains(w.tail)


# -- the word category Λ -----------------------------------------------------

def require_directed(w: NormalWord) -> NormalWord:
    if not w.is_directed:
        raise NotDirected(f"word {format_word(w)} uses a reversed edge")
    return w


def q_projection(w: NormalWord) -> SigmaPath:
    """The path ``h1e1...hnen`` of E_Σ underlying a directed word."""
    require_directed(w)
    return SigmaPath(w.range, tuple(SigmaLetter(l.rep, l.edge) for l in w.letters))


def from_path(g: GraphOfGroups, path: SigmaPath, tail: int = 0) -> NormalWord:
    """The directed word with the given E_Σ path and tail."""
    letters = tuple(Letter(l.rep, l.edge) for l in path.letters)
    v = g.edge(letters[-1].edge).source if letters else path.vertex
    return NormalWord(path.vertex, v, letters, g.group(v).reduce(tail))


def le(a: NormalWord, b: NormalWord) -> bool:
    """``a ≤ b`` in Λ, i.e. ``b ∈ aΛ``."""
    return q_projection(a).is_prefix_of(q_projection(b))


def join(a: NormalWord, b: NormalWord) -> Optional[NormalWord]:
    """Tail-zero generator of ``aΛ ∩ bΛ``, or None when the intersection is empty."""
    if le(a, b):
        return b.with_tail(0)
    if le(b, a):
        return a.with_tail(0)
    return None


def divide(g: GraphOfGroups, a: NormalWord, b: NormalWord) -> Optional[NormalWord]:
    """The unique ``η`` with ``b = aη``, or None when ``a`` is not below ``b``."""
    if not le(a, b):
        return None
    return multiply(g, invert(g, a), b)


def is_exhaustive(g: GraphOfGroups, v: str, family: Iterable[NormalWord]) -> bool:
    family = list(family)
    for w in family:
        if w.range != v:
            raise NotComposable(f"word {format_word(w)} does not have range {v}")
    if not family:
        return False
    prefixes = {q_projection(w).letters for w in family}
    n = max(len(p) for p in prefixes)
    for path in g.sigma_graph().paths(v, n):
        if not any(path.letters[:len(p)] == p for p in prefixes):
            return False
    return True


# -- literal syntax ------------------------------------------------------------

def parse_raw(text: str) -> tuple[Optional[str], list]:
    """Parse ``[@vertex] g1 e1 g2 e2~ ... g(n+1)`` into ``(vertex, raw)``.

    Group elements between consecutive edges may be omitted (they default
    to 0), as may the leading and trailing ones.
    """
    tokens = text.split()
    vertex = None
    if tokens and tokens[0].startswith("@"):
        vertex = tokens.pop(0)[1:]
        if not vertex:
            raise ParseError("empty vertex after '@'")
    raw: list = []
    for tok in tokens:
        try:
            value = int(tok)
        except ValueError:
            if not tok.rstrip("~") or tok.count("~") > 1 or ("~" in tok and not tok.endswith("~")):
                raise ParseError(f"bad edge token {tok!r}") from None
            if not raw or isinstance(raw[-1], SignedEdge):
                raw.append(0)
            raw.append(_as_signed(tok))
            continue
        if raw and isinstance(raw[-1], int):
            raise ParseError(f"two group elements in a row near {tok!r}")
        raw.append(value)
    if not raw or isinstance(raw[-1], SignedEdge):
        raw.append(0)
    return vertex, raw


def parse_word(g: GraphOfGroups, text: str) -> NormalWord:
    vertex, raw = parse_raw(text)
    return normalize(g, raw, vertex=vertex)


def format_word(w: NormalWord) -> str:
    parts = [] if w.letters else [f"@{w.range}"]
    parts += [str(l) for l in w.letters]
    parts.append(str(w.tail))
    return " ".join(parts)
