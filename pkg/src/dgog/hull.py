"""The left inverse hull of Λ: elements ``τ^λ σ^μ`` and zero, and their germs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .boundary import LassoPath, starts_with
from .errors import DomainViolation, SourceMismatch
from .gog import GraphOfGroups
from .words import (NormalWord, divide, element, format_word, identity, le, multiply,
                    q_projection, require_directed)


@dataclass(frozen=True)
class HullElement:
    """``τ^lam σ^mu`` with ``mu.tail == 0``, or zero when both fields are None."""

    lam: Optional[NormalWord] = None
    mu: Optional[NormalWord] = None

    @property
    def is_zero(self) -> bool:
        return self.lam is None

    def __str__(self):
        if self.is_zero:
            return "ZERO"
        return f"({format_word(self.lam)} ; {format_word(self.mu)})"

    def to_json(self):
        if self.is_zero:
            return None
        return {"lam": format_word(self.lam), "mu": format_word(self.mu)}


ZERO = HullElement()


def make(g: GraphOfGroups, lam: NormalWord, mu: NormalWord) -> HullElement:
    """Canonical form of ``τ^lam σ^mu``: both words right-multiplied by ``-tail(mu)``."""
    require_directed(lam)
    require_directed(mu)
    if lam.source != mu.source:
        raise SourceMismatch(f"{format_word(lam)} and {format_word(mu)} have different sources")
    shift = element(g, lam.source, -mu.tail)
    return HullElement(multiply(g, lam, shift), mu.with_tail(0))


def unit(g: GraphOfGroups, v: str) -> HullElement:
    return HullElement(identity(g, v), identity(g, v))


def compose(g: GraphOfGroups, s: HullElement, t: HullElement) -> HullElement:
    """``(τ^λ σ^μ)(τ^ν σ^ξ)``: nonzero exactly when μ and ν are comparable."""
    if s.is_zero or t.is_zero:
        return ZERO
    lam, mu, nu, xi = s.lam, s.mu, t.lam, t.mu
    if le(nu, mu):
        eta = divide(g, nu, mu)
        return make(g, lam, multiply(g, xi, eta))
    if le(mu, nu):
        eta = divide(g, mu, nu)
        return make(g, multiply(g, lam, eta), xi)
    return ZERO


def star(g: GraphOfGroups, s: HullElement) -> HullElement:
    return ZERO if s.is_zero else make(g, s.mu, s.lam)


def is_idempotent(s: HullElement) -> bool:
    return s.is_zero or s.lam == s.mu


def _check_domain(s: HullElement, alpha: LassoPath) -> None:
    if s.is_zero or not starts_with(alpha, q_projection(s.mu)):
        raise DomainViolation(f"{alpha} is not in the domain of {s}")


def germ_equal(g: GraphOfGroups, s: HullElement, alpha: LassoPath,
               t: HullElement, beta: LassoPath) -> bool:
    """Equality of the germs ``[s, alpha]`` and ``[t, beta]``.

    With ``μ`` the shorter of the two right-hand words, the germs agree iff the
    points agree and the quotient ``η = μ⁻¹μ'`` also carries ``λ`` to ``λ'``.
    """
    _check_domain(s, alpha)
    _check_domain(t, beta)
    if alpha != beta:
        return False
    if len(s.mu) > len(t.mu):
        s, t = t, s
    eta = divide(g, s.mu, t.mu)
    return eta is not None and multiply(g, s.lam, eta) == t.lam
