"""Small standard graphs of groups used in examples, tests and the CLI samples."""

from __future__ import annotations

from .cyclic import CyclicGroup
from .gog import EdgeSpec, GraphOfGroups

Z = CyclicGroup.integers()
TRIVIAL = CyclicGroup.mod(1)


def loop(n: int, m: int) -> GraphOfGroups:
    """One ℤ vertex ``v`` with a single loop ``e`` (BS(1,2) is ``loop(2, 1)``)."""
    return GraphOfGroups.build({"v": Z}, [EdgeSpec("e", "v", "v", Z, n, m)])


def bs12() -> GraphOfGroups:
    return loop(2, 1)


def z2_z3() -> GraphOfGroups:
    """ℤ₂ * ℤ₃: ``e`` runs from ``w`` (ℤ₃) to ``v`` (ℤ₂) with trivial edge group."""
    return GraphOfGroups.build(
        {"v": CyclicGroup.mod(2), "w": CyclicGroup.mod(3)},
        [EdgeSpec("e", "v", "w", TRIVIAL, 1, 1)])


def rose(k: int, n: int = 1, m: int = 1) -> GraphOfGroups:
    """One ℤ vertex with ``k`` loops ``e1..ek``, all with multipliers ``n``, ``m``."""
    return GraphOfGroups.build({"v": Z}, [EdgeSpec(f"e{i}", "v", "v", Z, n, m)
                                          for i in range(1, k + 1)])
