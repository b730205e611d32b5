"""Type C index through the inductive reduction and the parabolic formula."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from . import kernels
from .compositions import Composition, SeaweedSpec

__all__ = [
    "CState",
    "Reduction",
    "ReductionTrace",
    "index_parabolic_c",
    "index_c",
    "index_c_value",
]


class CState(NamedTuple):
    """``p_n^C(a | b)``; ``n`` may reach 0 once everything has been eliminated."""

    n: int
    a: Composition
    b: Composition

    def render(self) -> str:
        return f"C[n={self.n}]:{self.a.render()}|{self.b.render()}"


@dataclass(frozen=True)
class Reduction:
    rule: str
    before: CState
    after: CState | None
    increment: int

    def render(self) -> str:
        after = self.after.render() if self.after is not None else "."
        return f"{self.rule}: {self.before.render()} -> {after} [+{self.increment}]"


@dataclass(frozen=True)
class ReductionTrace:
    steps: tuple[Reduction, ...]

    @property
    def total(self) -> int:
        return sum(s.increment for s in self.steps)

    @property
    def terminal(self) -> CState:
        return self.steps[-1].before

    def render(self) -> str:
        return "\n".join(s.render() for s in self.steps)

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)


def index_parabolic_c(n: int, a: Sequence[int]) -> int:
    """``n - sum(a) + sum(a_i // 2)`` for ``p_n^C(a | -)``."""
    a = Composition(a)
    if a.total > n:
        raise ValueError(f"sum(a) = {a.total} exceeds n = {n}")
    return n - a.total + sum(p // 2 for p in a)


def index_c(spec: SeaweedSpec) -> tuple[int, ReductionTrace]:
    if spec.algebra != "C":
        raise ValueError("index_c needs a type C spec")
    state = CState(spec.n, spec.a, spec.b)
    steps: list[Reduction] = []
    flipped_last = False
    while True:
        n, a, b = state
        if not a and not b:
            steps.append(Reduction("empty-pair" if n == 0 else "parabolic", state, None, n))
            break
        if not a or (b and a[0] > b[0]):
            assert not flipped_last, "two flips in a row"
            nxt = CState(n, b, a)
            steps.append(Reduction("flip", state, nxt, 0))
            state, flipped_last = nxt, True
            continue
        flipped_last = False
        if not b:
            steps.append(Reduction("parabolic", state, None, index_parabolic_c(n, a)))
            break
        top = max(a.total, b.total)
        if top < n:
            nxt = CState(top, a, b)
            steps.append(Reduction("strip-k", state, nxt, n - top))
            state = nxt
            continue
        a1, b1 = a[0], b[0]
        if a1 == b1:
            nxt = CState(n - a1, Composition(a[1:]), Composition(b[1:]))
            steps.append(Reduction("equal-first", state, nxt, a1))
        elif 2 * a1 <= b1:
            head = (b1 - 2 * a1, a1) if b1 > 2 * a1 else (a1,)
            nxt = CState(n - a1, Composition(a[1:]), Composition(head + b[1:]))
            steps.append(Reduction("small-a1", state, nxt, 0))
        else:
            nxt = CState(
                n - b1 + a1,
                Composition((2 * a1 - b1,) + a[1:]),
                Composition((a1,) + b[1:]),
            )
            steps.append(Reduction("large-a1", state, nxt, 0))
        assert nxt.n < n
        state = nxt
    trace = ReductionTrace(tuple(steps))
    return trace.total, trace


def index_c_value(spec: SeaweedSpec) -> int:
    """Same value as :func:`index_c` without the trace (compiled loop)."""
    if spec.algebra != "C":
        raise ValueError("index_c_value needs a type C spec")
    return int(
        kernels.panyushev_index_kernel(
            spec.n, kernels.as_array(spec.a), kernels.as_array(spec.b)
        )
    )
