"""Shared quiver builders for the test suite."""
from __future__ import annotations

from quivermoduli import Quiver, quiver


def a2() -> Quiver:
    return quiver(["1", "2"], [("a", "1", "2")])


def path(n: int) -> Quiver:
    verts = [str(i) for i in range(1, n + 1)]
    return quiver(verts, [(f"a{i}", str(i), str(i + 1)) for i in range(1, n)])


def kron(k: int) -> Quiver:
    return quiver(["1", "2"], [(f"a{i}", "1", "2") for i in range(1, k + 1)])


def jordan() -> Quiver:
    return quiver(["1"], [("x", "1", "1")])


def example() -> Quiver:
    """Two vertices with a loop at each and an arrow in each direction."""
    return quiver(
        ["1", "2"],
        [("a11", "1", "1"), ("a12", "1", "2"), ("a21", "2", "1"), ("a22", "2", "2")],
    )


def star(arms: list[int]) -> Quiver:
    """One central vertex `c` with paths of the given lengths attached,
    arrows pointing away from the center."""
    verts = ["c"]
    arrows = []
    for k, length in enumerate(arms):
        prev = "c"
        for step in range(1, length + 1):
            v = f"v{k}_{step}"
            verts.append(v)
            arrows.append((f"e{k}_{step}", prev, v))
            prev = v
    return quiver(verts, arrows)


def cycle(n: int) -> Quiver:
    verts = [str(i) for i in range(1, n + 1)]
    arrows = [(f"a{i}", str(i), str(i % n + 1)) for i in range(1, n + 1)]
    return quiver(verts, arrows)
