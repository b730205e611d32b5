"""Compositions, seaweed specs and the text notation ``A:4,3|2,2,1,2``."""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Composition",
    "SeaweedSpec",
    "SpecError",
    "parse_spec",
    "compositions_of",
    "compositions_up_to",
    "compositions_with_parts",
    "random_composition",
    "odd_part_count",
]


class SpecError(ValueError):
    """Malformed seaweed notation or inconsistent composition sums."""


class Composition(tuple):
    """Ordered tuple of positive integers. The empty composition is allowed."""

    def __new__(cls, parts: Iterable[int] = ()) -> "Composition":
        if type(parts) is cls:
            return parts
        parts = tuple(int(p) for p in parts)
        for p in parts:
            if p < 1:
                raise SpecError(f"composition parts must be positive, got {p}")
        return super().__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts: tuple) -> "Composition":
        # caller guarantees positive ints
        return tuple.__new__(cls, parts)

    @property
    def total(self) -> int:
        return sum(self)

    def render(self) -> str:
        return ",".join(map(str, self)) if self else "-"

    def __repr__(self) -> str:
        return f"Composition({tuple(self)!r})"


@dataclass(frozen=True)
class SeaweedSpec:
    """A seaweed ``p_n^X(a | b)``; ``a`` sets the lower blocks, ``b`` the upper ones."""

    algebra: str
    n: int
    a: Composition
    b: Composition

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", Composition(self.a))
        object.__setattr__(self, "b", Composition(self.b))
        if self.algebra not in ("A", "C"):
            raise SpecError(f"unknown algebra tag {self.algebra!r}")
        if self.n < 1:
            raise SpecError("n must be positive")
        sa, sb = self.a.total, self.b.total
        if self.algebra == "A":
            if sa != self.n or sb != self.n:
                raise SpecError(
                    f"type A needs sum(a) = sum(b) = n, got {sa}, {sb}, n={self.n}"
                )
        elif sa > self.n or sb > self.n:
            raise SpecError(f"type C needs sum(a), sum(b) <= n, got {sa}, {sb}, n={self.n}")

    @classmethod
    def A(cls, a: Sequence[int], b: Sequence[int]) -> "SeaweedSpec":
        return cls("A", sum(a), Composition(a), Composition(b))

    @classmethod
    def C(cls, n: int, a: Sequence[int], b: Sequence[int]) -> "SeaweedSpec":
        return cls("C", n, Composition(a), Composition(b))

    def flipped(self) -> "SeaweedSpec":
        return SeaweedSpec(self.algebra, self.n, self.b, self.a)

    def render(self) -> str:
        if self.algebra == "A":
            return f"A:{self.a.render()}|{self.b.render()}"
        return f"C[n={self.n}]:{self.a.render()}|{self.b.render()}"

    def __str__(self) -> str:
        return self.render()

    def sort_key(self) -> tuple:
        return (self.algebra, self.n, len(self.a), tuple(self.a), len(self.b), tuple(self.b))


_SPEC_RE = re.compile(
    r"^\s*(?P<tag>[AC])(?:\[n=(?P<n>-?\d+)\])?:(?P<a>[^|]*)\|(?P<b>[^|]*?)\s*$"
)
_COMP_RE = re.compile(r"^(-|-?\d+(,-?\d+)*)$")


def _parse_comp(text: str) -> Composition:
    text = text.strip().replace(" ", "")
    if not _COMP_RE.match(text):
        raise SpecError(f"malformed composition {text!r}")
    if text == "-":
        return Composition()
    return Composition(int(t) for t in text.split(","))


def parse_spec(text: str) -> SeaweedSpec:
    """Parse ``A[n=7]:4,3|2,2,1,2`` or ``C[n=3]:2,1|-``.

    The size is optional for type A (it defaults to the composition sum) and
    required for type C.
    """
    m = _SPEC_RE.match(text)
    if m is None:
        raise SpecError(f"cannot parse seaweed spec {text!r}")
    tag = m["tag"]
    a = _parse_comp(m["a"])
    b = _parse_comp(m["b"])
    if m["n"] is None:
        if tag == "C":
            raise SpecError("type C specs need an explicit size, e.g. C[n=5]:...")
        n = a.total
    else:
        n = int(m["n"])
    return SeaweedSpec(tag, n, a, b)


def _from_cuts(n: int, cuts: Iterable[int]) -> Composition:
    parts = []
    prev = 0
    for c in cuts:
        parts.append(c - prev)
        prev = c
    parts.append(n - prev)
    return Composition(parts)


def compositions_of(n: int) -> list[Composition]:
    """All ``2**(n-1)`` compositions of ``n`` in lexicographic order."""
    if n < 1:
        raise ValueError("n must be positive")
    out: list[Composition] = []

    def rec(rem: int, prefix: list[int]) -> None:
        if rem == 0:
            out.append(Composition(prefix))
            return
        for first in range(1, rem + 1):
            prefix.append(first)
            rec(rem - first, prefix)
            prefix.pop()

    rec(n, [])
    return out


def compositions_with_parts(n: int, k: int) -> Iterator[Composition]:
    """Compositions of ``n`` with exactly ``k`` parts, lexicographic."""
    if k == 0:
        if n == 0:
            yield Composition()
        return
    if k > n:
        return
    for cuts in combinations(range(1, n), k - 1):
        yield _from_cuts(n, cuts)


def compositions_up_to(n: int) -> list[Composition]:
    """The empty composition plus every composition of ``1..n``: ``2**n`` strings.

    Ordered by number of parts, then lexicographically.
    """
    if n < 1:
        raise ValueError("n must be positive")
    out = [Composition()]
    for m in range(1, n + 1):
        out.extend(compositions_of(m))
    out.sort(key=lambda c: (len(c), tuple(c)))
    return out


def random_composition(rng, n: int) -> Composition:
    """Uniform random composition of ``n`` (each of the n-1 cuts is a coin flip)."""
    if n == 0:
        return Composition()
    cuts = [i for i in range(1, n) if rng.random() < 0.5]
    return _from_cuts(n, cuts)


def odd_part_count(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(p & 1 for p in a) + sum(p & 1 for p in b)
