"""Type A and type C meanders, their permutation, components and index."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import kernels
from .compositions import SeaweedSpec

__all__ = [
    "Meander",
    "ComponentReport",
    "PermutationCycles",
    "build_meander",
    "associated_permutation",
    "components",
    "index",
    "index_via_permutation",
]


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr = np.array(arr, dtype=np.int64)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class Meander:
    """Vertices ``1..n`` with top/bottom partner involutions.

    ``top`` and ``bottom`` are stored 0-based; ``top[v] == v`` means vertex
    ``v+1`` has no top edge. The public accessors speak 1-based vertices.
    """

    algebra: str
    n: int
    top: np.ndarray
    bottom: np.ndarray
    tail: frozenset

    def top_partner(self, v: int) -> int:
        return int(self.top[v - 1]) + 1

    def bottom_partner(self, v: int) -> int:
        return int(self.bottom[v - 1]) + 1

    def top_pairs(self) -> list[tuple[int, int]]:
        return _pairs(self.top)

    def bottom_pairs(self) -> list[tuple[int, int]]:
        return _pairs(self.bottom)

    @cached_property
    def tail_mask(self) -> np.ndarray:
        mask = np.zeros(self.n, dtype=np.bool_)
        for v in self.tail:
            mask[v - 1] = True
        mask.setflags(write=False)
        return mask

    def has_crossing(self) -> bool:
        return _crossing(self.top_pairs()) or _crossing(self.bottom_pairs())


def _pairs(partner: np.ndarray) -> list[tuple[int, int]]:
    return [(j + 1, int(k) + 1) for j, k in enumerate(partner) if j < k]


def _crossing(pairs: list[tuple[int, int]]) -> bool:
    # arcs sorted by left end; a stack of open right ends detects j<j'<k<k'
    stack: list[int] = []
    for j, k in sorted(pairs):
        while stack and stack[-1] < j:
            stack.pop()
        if stack and stack[-1] < k:
            return True
        stack.append(k)
    return False


@dataclass(frozen=True)
class ComponentReport:
    vertices: tuple[int, ...]
    is_cycle: bool
    tail_count: int
    contribution: int

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "is_cycle": self.is_cycle,
            "tail_count": self.tail_count,
            "contribution": self.contribution,
        }


@dataclass(frozen=True)
class PermutationCycles:
    cycles: tuple[tuple[int, ...], ...]

    def __str__(self) -> str:
        return "".join("(" + ",".join(map(str, c)) + ")" for c in self.cycles)


def build_meander(spec: SeaweedSpec) -> Meander:
    top, bottom, tail = kernels.meander_arrays(spec.algebra, spec.n, spec.a, spec.b)
    tail_set = frozenset(int(v) + 1 for v in np.flatnonzero(tail))
    if spec.algebra == "C":
        sa, sb = spec.a.total, spec.b.total
        if sb <= sa:
            # the symmetric difference reduces to T_n(b) minus T_n(a)
            assert tail_set == frozenset(range(sb + 1, sa + 1))
    return Meander(spec.algebra, spec.n, _frozen(top), _frozen(bottom), tail_set)


def associated_permutation(m: Meander) -> PermutationCycles:
    sigma = m.top[m.bottom]
    seen = np.zeros(m.n, dtype=bool)
    cycles = []
    for v in range(m.n):
        if seen[v]:
            continue
        cyc = []
        w = v
        while not seen[w]:
            seen[w] = True
            cyc.append(w + 1)
            w = int(sigma[w])
        cycles.append(tuple(cyc))
    return PermutationCycles(tuple(cycles))


def _contribution(algebra: str, is_cycle: bool, tail_count: int) -> int:
    if is_cycle:
        return 2
    if algebra == "A":
        return 1
    return 1 if tail_count in (0, 2) else 0


def components(m: Meander) -> list[ComponentReport]:
    labels, is_cycle, tails = kernels.components(m.top, m.bottom, m.tail_mask)
    members: list[list[int]] = [[] for _ in range(len(is_cycle))]
    for v, c in enumerate(labels):
        members[c].append(v + 1)
    out = []
    for c, verts in enumerate(members):
        cyc = bool(is_cycle[c])
        tc = int(tails[c])
        assert not (cyc and tc), "a cycle cannot carry tail vertices"
        out.append(ComponentReport(tuple(verts), cyc, tc, _contribution(m.algebra, cyc, tc)))
    return out


def index(m: Meander) -> int:
    """Components plus cycles minus one (type A), or cycles plus components
    carrying 0 or 2 tail vertices (type C)."""
    _, is_cycle, tails = kernels.components(m.top, m.bottom, m.tail_mask)
    return kernels.index_from_components(m.algebra, is_cycle, tails)


def index_via_permutation(m: Meander) -> int:
    ncyc, good = kernels.sigma_stats(m.top, m.bottom, m.tail_mask)
    if m.algebra == "A":
        return int(ncyc) - 1
    return int(good)


def meander_index(spec: SeaweedSpec) -> int:
    return index(build_meander(spec))
