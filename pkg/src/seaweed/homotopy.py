"""Plane homotopy type of a type A meander: nested circles and points.

Canonical string grammar::

    forest := item ( " " item )*
    item   := "." | "C(" forest? ")"

Siblings are sorted by (height, points, string), descending, so circles
come before points and ``"C() ."`` is a circle with one exterior point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .meander import Meander, components

__all__ = ["Node", "HomotopyType", "homotopy_type", "is_homotopically_trivial"]


@dataclass(frozen=True)
class Node:
    circle: bool
    children: tuple["Node", ...] = ()

    @property
    def height(self) -> int:
        if not self.circle:
            return 0
        return 1 + max((c.height for c in self.children), default=0)

    @property
    def points(self) -> int:
        return (0 if self.circle else 1) + sum(c.points for c in self.children)

    @property
    def circles(self) -> int:
        return (1 if self.circle else 0) + sum(c.circles for c in self.children)

    def render(self) -> str:
        if not self.circle:
            return "."
        return "C(" + _render_forest(self.children) + ")"


def _key(node: Node) -> tuple:
    return (node.height, node.points, node.render())


def _canonical(nodes: Iterable[Node]) -> tuple[Node, ...]:
    return tuple(sorted(nodes, key=_key, reverse=True))


def _render_forest(nodes: Iterable[Node]) -> str:
    return " ".join(n.render() for n in nodes)


def point() -> Node:
    return Node(False)


def circle(*children: Node) -> Node:
    return Node(True, _canonical(children))


def chain(size: int) -> Node:
    """Homotopy type of a block whose top and bottom arcs coincide."""
    node = point() if size % 2 else None
    for _ in range(size // 2):
        node = circle(node) if node is not None else circle()
    assert node is not None, "empty block"
    return node


class HomotopyType:
    """A canonical forest of circles and points."""

    def __init__(self, roots: Iterable[Node]):
        self.roots = _canonical(roots)

    @property
    def circles(self) -> int:
        return sum(r.circles for r in self.roots)

    @property
    def points(self) -> int:
        return sum(r.points for r in self.roots)

    @property
    def index(self) -> int:
        return self.points + 2 * self.circles - 1

    def __str__(self) -> str:
        return _render_forest(self.roots)

    def __repr__(self) -> str:
        return f"HomotopyType({str(self)!r})"

    def __eq__(self, other) -> bool:
        if isinstance(other, str):
            other = HomotopyType.parse(other)
        return isinstance(other, HomotopyType) and self.roots == other.roots

    def __hash__(self) -> int:
        return hash(self.roots)

    @classmethod
    def parse(cls, text: str) -> "HomotopyType":
        pos = 0
        s = text.replace(" ", "")

        def forest() -> list[Node]:
            nonlocal pos
            items = []
            while pos < len(s) and s[pos] != ")":
                if s[pos] == ".":
                    items.append(point())
                    pos += 1
                elif s.startswith("C(", pos):
                    pos += 2
                    kids = forest()
                    if pos >= len(s) or s[pos] != ")":
                        raise ValueError(f"unbalanced homotopy string {text!r}")
                    pos += 1
                    items.append(circle(*kids))
                else:
                    raise ValueError(f"bad homotopy string {text!r} at {pos}")
            return items

        roots = forest()
        if pos != len(s):
            raise ValueError(f"trailing input in homotopy string {text!r}")
        return cls(roots)


def homotopy_type(m: Meander) -> HomotopyType:
    """Nesting forest computed from the geometry of the arcs.

    A vertex lies inside a cycle iff an odd number of that cycle's top arcs
    pass over it (upward ray crossing count).
    """
    if m.algebra != "A":
        raise ValueError("homotopy type is only defined for type A meanders")
    comps = components(m)
    cycle_ids = [i for i, c in enumerate(comps) if c.is_cycle]
    arcs = {
        i: [(j, m.top_partner(j)) for j in comps[i].vertices if m.top_partner(j) > j]
        for i in cycle_ids
    }

    def inside(v: int, cyc: int) -> bool:
        return sum(1 for j, k in arcs[cyc] if j < v < k) % 2 == 1

    enclosing: list[list[int]] = []
    for i, comp in enumerate(comps):
        lo, hi = comp.vertices[0], comp.vertices[-1]
        found = []
        for y in cycle_ids:
            if y == i:
                continue
            here = inside(lo, y)
            assert here == inside(hi, y), "component straddles a cycle"
            if here:
                found.append(y)
        enclosing.append(found)

    depth = [len(e) for e in enclosing]
    parent = [max(e, key=lambda y: depth[y]) if e else None for e in enclosing]
    kids: dict[int | None, list[int]] = {}
    for i, p in enumerate(parent):
        kids.setdefault(p, []).append(i)

    def build(i: int) -> Node:
        if not comps[i].is_cycle:
            return point()
        return circle(*(build(k) for k in kids.get(i, [])))

    return HomotopyType(build(i) for i in kids.get(None, []))


def is_homotopically_trivial(h: HomotopyType | str) -> bool:
    if isinstance(h, str):
        h = HomotopyType.parse(h)
    return len(h.roots) == 1 and not h.roots[0].circle
