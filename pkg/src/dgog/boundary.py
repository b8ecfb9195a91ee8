"""Eventually periodic boundary paths in E_Σ^∞ and the groupoid action on them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .errors import NotInDomain, ParseError, SourceMismatch, ValidationError
from .gog import GraphOfGroups, SigmaLetter, SigmaPath, SignedEdge
from .words import Letter, NormalWord, WordBuilder, format_word, invert, multiply, q_projection

NOT_PERIODIC = "NOT_PERIODIC_WITHIN_BOUND"
DEFAULT_MAX_STEPS = 10_000


@dataclass(frozen=True)
class LassoPath:
    """The infinite path ``prefix · cycle · cycle · ...`` with range ``vertex``.

    Build through :func:`lasso`, which validates and canonicalises: the cycle
    is primitive and the prefix does not end with the cycle's last letter.
    """

    vertex: str
    prefix: tuple[SigmaLetter, ...]
    cycle: tuple[SigmaLetter, ...]

    def letter(self, i: int) -> SigmaLetter:
        p = len(self.prefix)
        return self.prefix[i] if i < p else self.cycle[(i - p) % len(self.cycle)]

    def __str__(self):
        return format_lasso(self)


@dataclass(frozen=True)
class PrefixResult:
    """A finite exact prefix of an action result that showed no period within the bound."""

    vertex: str
    letters: tuple[SigmaLetter, ...]
    flag: str = NOT_PERIODIC

    def __str__(self):
        return ".".join(map(str, self.letters)) + " ..."


def _primitive(cycle: tuple) -> tuple:
    n = len(cycle)
    for p in range(1, n + 1):
        if n % p == 0 and cycle[:p] * (n // p) == cycle:
            return cycle[:p]
    return cycle


def canonical(vertex: str, prefix, cycle) -> LassoPath:
    prefix, cycle = tuple(prefix), _primitive(tuple(cycle))
    while prefix and prefix[-1] == cycle[-1]:
        cycle = cycle[-1:] + cycle[:-1]
        prefix = prefix[:-1]
    return LassoPath(vertex, prefix, cycle)


def lasso(g: GraphOfGroups, prefix, cycle) -> LassoPath:
    """Validate a prefix and a closing cycle of E_Σ letters and return the canonical lasso."""
    prefix = tuple(SigmaLetter(*l) for l in prefix)
    cycle = tuple(SigmaLetter(*l) for l in cycle)
    if not cycle:
        raise ValidationError("lasso cycle must be non-empty", kind="bad-lasso")
    sg = g.sigma_graph()
    path = prefix + cycle
    for l in path:
        if not sg.is_letter(l):
            raise ValidationError(f"{l} is not a letter of E_Σ", kind="bad-lasso")
    for a, b in zip(path, path[1:] + cycle[:1]):
        if sg.source(a) != sg.range(b):
            raise ValidationError(f"letters {a} and {b} are not composable", kind="bad-lasso")
    return canonical(sg.range(path[0]), prefix, cycle)


def prefix_of(alpha: LassoPath, k: int) -> SigmaPath:
    return SigmaPath(alpha.vertex, tuple(alpha.letter(i) for i in range(k)))


def starts_with(alpha: LassoPath, path: SigmaPath) -> bool:
    """Membership of ``alpha`` in the cylinder set of ``path``."""
    return path.vertex == alpha.vertex and prefix_of(alpha, len(path)).letters == path.letters


def decompose_action(g: GraphOfGroups, gamma: NormalWord, alpha: LassoPath
                     ) -> Optional[tuple[NormalWord, NormalWord]]:
    """Write ``gamma = λ μ⁻¹`` with ``q(μ)`` a prefix of ``alpha``, or return None.

    Trailing reversed letters ``f̄`` of ``gamma`` are peeled against the
    leading letters ``h f`` of ``alpha``: the peel succeeds exactly when the
    group element caught between ``f̄`` and ``f`` lies in the image of ``α_f``.
    None means ``gamma · alpha`` keeps a reversed letter and so is not a path
    of E_Σ^∞.
    """
    if gamma.source != alpha.vertex:
        raise SourceMismatch(f"word has source {gamma.source}, path starts at {alpha.vertex}")
    letters = gamma.letters
    idx, pending, j = len(letters), gamma.tail, 0
    while idx and letters[idx - 1].reversed:
        last = letters[idx - 1]
        h, f = alpha.letter(j)
        if f != last.edge:
            break
        x = SignedEdge(f)
        rep, q = g.embedding(x).decompose(pending + h)
        if rep:
            break
        pending = g.group(g.source_of(x)).reduce(last.rep + g.push(x, q))
        idx -= 1
        j += 1
    if any(l.reversed for l in letters[:idx]):
        return None
    vertex = g.source_of(letters[idx - 1].signed) if idx else gamma.range
    lam = NormalWord(gamma.range, vertex, letters[:idx], pending)
    mu_letters = tuple(Letter(h, e) for h, e in (alpha.letter(i) for i in range(j)))
    mu = NormalWord(alpha.vertex, vertex, mu_letters, 0)
    return lam, mu


def act(g: GraphOfGroups, gamma: NormalWord, alpha: LassoPath,
        max_steps: int = DEFAULT_MAX_STEPS) -> Union[LassoPath, PrefixResult]:
    """The boundary path ``gamma · alpha`` in normal form.

    The concatenation is normalised as a stream. Once the input is inside its
    cycle, the state (pending group element, cycle position) determines the
    rest of the output, so a repeated state yields the exact lasso. If no state
    repeats before ``max_steps`` output letters, the exact prefix is returned.
    """
    split = decompose_action(g, gamma, alpha)
    if split is None:
        raise NotInDomain(f"{format_word(gamma)} does not act on {format_lasso(alpha)}")
    lam, mu = split
    b = WordBuilder.from_word(g, lam)
    p, c = len(alpha.prefix), len(alpha.cycle)
    pos = len(mu)
    seen: dict[tuple[int, int], int] = {}
    while len(b.stack) < max_steps:
        if pos >= p:
            state = (b.pending, (pos - p) % c)
            if state in seen:
                start = seen[state]
                out = [SigmaLetter(l.rep, l.edge) for l in b.stack]
                return canonical(gamma.range, out[:start], out[start:])
            seen[state] = len(b.stack)
        h, e = alpha.letter(pos)
        b.add(h)
        b.step(SignedEdge(e))
        pos += 1
    out = tuple(SigmaLetter(l.rep, l.edge) for l in b.stack[:max_steps])
    return PrefixResult(gamma.range, out)


def act_hull(g: GraphOfGroups, lam: NormalWord, mu: NormalWord, alpha: LassoPath,
             max_steps: int = DEFAULT_MAX_STEPS) -> Union[LassoPath, PrefixResult]:
    """``τ^λ σ^μ · alpha``, defined when ``q(μ)`` is a prefix of ``alpha``."""
    if not starts_with(alpha, q_projection(mu)):
        raise NotInDomain(f"{format_lasso(alpha)} does not start with {q_projection(mu)}")
    return act(g, multiply(g, lam, invert(g, mu)), alpha, max_steps)


# -- literal syntax ------------------------------------------------------------

def _parse_letters(text: str) -> list[SigmaLetter]:
    out = []
    for tok in filter(None, text.strip().split(".")):
        rep, sep, edge = tok.strip().partition(":")
        if not sep or not edge:
            raise ParseError(f"bad lasso letter {tok!r}, expected h:e")
        try:
            out.append(SigmaLetter(int(rep), edge))
        except ValueError:
            raise ParseError(f"bad lasso letter {tok!r}, expected h:e") from None
    return out


def parse_lasso(g: GraphOfGroups, text: str) -> LassoPath:
    """Parse ``prefix|cycle`` where each side is ``h:e`` letters joined by dots."""
    if text.count("|") != 1:
        raise ParseError("lasso literal must look like prefix|cycle")
    pre, cyc = text.split("|")
    return lasso(g, _parse_letters(pre), _parse_letters(cyc))


def format_lasso(alpha: LassoPath) -> str:
    return ".".join(map(str, alpha.prefix)) + "|" + ".".join(map(str, alpha.cycle))
