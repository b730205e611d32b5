"""Winding a type A meander down with the five signature moves.

The case split keyed on the first parts ``a1``, ``b1``:

* ``F`` (flip)            ``a1 > b1``: exchange the two compositions;
* ``C`` (component elim.) ``a1 == b1``: drop the first block of both;
* ``P`` (pure contraction) ``2*a1 == b1``;
* ``B`` (block elim.)     ``2*a1 < b1``: ``(a2..) | (b1-2a1, a1, b2..)``;
* ``R`` (rotation)        ``a1 < b1 < 2*a1``: ``(2a1-b1, a2..) | (a1, b2..)``.

Only ``C`` changes the homotopy type. A block with identical top and bottom
arcs is a chain of ``a1 // 2`` nested circles around a point when ``a1`` is
odd, and it always sits at the outer level of the current meander.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import kernels
from .compositions import Composition
from .homotopy import HomotopyType, chain

__all__ = [
    "Step",
    "MoveTrace",
    "reduce_step",
    "wind_down",
    "index_via_signature",
    "wind_up",
]

Pair = tuple[Composition, Composition]


def _fmt(c: Sequence[int]) -> str:
    return "(" + ",".join(map(str, c)) + ")"


@dataclass(frozen=True)
class Step:
    move: str
    before: Pair
    after: Pair
    circles: int = 0
    points: int = 0

    def render(self) -> str:
        a, b = self.before
        a2, b2 = self.after
        line = f"{self.move}: {_fmt(a)}‖{_fmt(b)} -> {_fmt(a2)}‖{_fmt(b2)}"
        if self.move == "C":
            line += f" [+{self.circles}C +{self.points}P]"
        return line


@dataclass(frozen=True)
class MoveTrace:
    steps: tuple[Step, ...]

    @property
    def labels(self) -> str:
        return "".join(s.move for s in self.steps)

    def render(self) -> str:
        return "\n".join(s.render() for s in self.steps)

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)


def _check_pair(a: Sequence[int], b: Sequence[int]) -> Pair:
    a, b = Composition(a), Composition(b)
    if a.total != b.total:
        raise ValueError(f"compositions must have equal sums, got {a.total} and {b.total}")
    return a, b


def reduce_step(a: Sequence[int], b: Sequence[int]) -> Step:
    a, b = _check_pair(a, b)
    if not a:
        raise ValueError("empty pair is already terminal")
    a1, b1 = a[0], b[0]
    if a1 > b1:
        return Step("F", (a, b), (b, a))
    mk = Composition._trusted
    if a1 == b1:
        return Step("C", (a, b), (mk(a[1:]), mk(b[1:])), a1 // 2, a1 % 2)
    if 2 * a1 <= b1:
        rest = (b1 - 2 * a1, a1) if b1 > 2 * a1 else (a1,)
        label = "B" if b1 > 2 * a1 else "P"
        return Step(label, (a, b), (mk(a[1:]), mk(rest + b[1:])))
    return Step("R", (a, b), (mk((2 * a1 - b1,) + a[1:]), mk((a1,) + b[1:])))


def wind_down(a: Sequence[int], b: Sequence[int]) -> tuple[MoveTrace, HomotopyType, int]:
    """Reduce to the empty pair; return the trace, homotopy type and index."""
    a, b = _check_pair(a, b)
    if not a:
        raise ValueError("need a nonempty pair")
    steps = []
    roots = []
    while a:
        step = reduce_step(a, b)
        steps.append(step)
        if step.move == "C":
            roots.append(chain(step.before[0][0]))
        a, b = step.after
    h = HomotopyType(roots)
    return MoveTrace(tuple(steps)), h, h.index


def index_via_signature(a: Sequence[int], b: Sequence[int]) -> int:
    a, b = _check_pair(a, b)
    if not a:
        raise ValueError("need a nonempty pair")
    return int(kernels.signature_index_kernel(kernels.as_array(a), kernels.as_array(b)))


def _parse_move(move) -> tuple[str, int | None]:
    if isinstance(move, tuple):
        label, param = move
        return str(label).upper(), param
    text = str(move).strip().upper()
    label, rest = text[:1], text[1:]
    return label, int(rest) if rest else None


def _unwind(label: str, param: int | None, a: Composition, b: Composition) -> Pair:
    """Candidate predecessor of ``(a, b)`` under one move."""
    if label == "F":
        return b, a
    if label == "C":
        if not param or param < 1:
            raise ValueError("reverse C needs a positive block size, e.g. 'C3'")
        return Composition((param,) + a), Composition((param,) + b)
    if label == "P":
        if not b:
            raise ValueError("reverse P needs a nonempty bottom composition")
        d = b[0]
        return Composition((d,) + a), Composition((2 * d,) + b[1:])
    if label == "B":
        if len(b) < 2:
            raise ValueError("reverse B needs at least two bottom parts")
        c, d = b[0], b[1]
        return Composition((d,) + a), Composition((c + 2 * d,) + b[2:])
    if label == "R":
        if not a or not b or a[0] >= b[0]:
            raise ValueError("reverse R needs a1 < b1")
        return Composition((b[0],) + a[1:]), Composition((2 * b[0] - a[0],) + b[1:])
    raise ValueError(f"unknown move {label!r}")


def wind_up(seed: tuple[Sequence[int], Sequence[int]], moves: Iterable) -> Pair:
    """Apply reversed moves to ``seed``; each is checked against :func:`reduce_step`.

    Moves are ``"F"``, ``"P"``, ``"B"``, ``"R"`` or ``"C<k>"`` (or
    ``("C", k)``), applied in order starting from the seed.
    """
    a, b = _check_pair(*seed)
    for move in moves:
        label, param = _parse_move(move)
        pa, pb = _unwind(label, param, a, b)
        step = reduce_step(pa, pb)
        if step.move != label or step.after != (a, b):
            raise ValueError(f"move {label} cannot be reversed at {_fmt(a)}‖{_fmt(b)}")
        a, b = pa, pb
    return a, b
