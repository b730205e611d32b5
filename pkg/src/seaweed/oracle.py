"""Ground-truth index from the definition ``ind g = min_f dim ker B_f``.

The seaweed is realized as a matrix Lie algebra: type A inside gl(n), type C
inside sp(2n) in the block form ``[[A, B], [C, -A^]]`` where ``^`` reflects
across the antidiagonal. For random integer functionals ``f`` we build the
Kirillov matrix ``M[i][j] = f([x_i, x_j])`` and take its exact rank. Each
trial can only underestimate the generic rank, so the result is an upper
bound that is exact unless every trial hits the zero set of a nonzero
polynomial of degree at most ``dim``; per trial that happens with
probability at most ``dim / (2R + 1)``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .compositions import SeaweedSpec
from .linalg import rank_exact

__all__ = [
    "DEFAULT_RANGE",
    "DEFAULT_TRIALS",
    "BracketClosureError",
    "MatrixShape",
    "BasisElement",
    "Functional",
    "shape_of",
    "basis_of",
    "structure_constants",
    "kirillov_matrix",
    "random_functional",
    "index_oracle",
    "oracle_report",
]

log = logging.getLogger(__name__)

DEFAULT_RANGE = 2**20
DEFAULT_TRIALS = 5

Pos = tuple[int, int]


class BracketClosureError(AssertionError):
    """A commutator of basis elements left the span of the basis."""


@dataclass(frozen=True)
class MatrixShape:
    """Admissible 0-based positions of a ``d x d`` seaweed."""

    d: int
    positions: frozenset

    def __len__(self) -> int:
        return len(self.positions)

    def __contains__(self, p) -> bool:
        return p in self.positions

    def anti_transpose(self, p: Pos) -> Pos:
        i, j = p
        return (self.d - 1 - j, self.d - 1 - i)

    def grid(self) -> str:
        return "\n".join(
            " ".join("*" if (i, j) in self.positions else "." for j in range(self.d))
            for i in range(self.d)
        )


@dataclass(frozen=True)
class BasisElement:
    entries: tuple[tuple[Pos, int], ...]
    kind: str

    @property
    def rep(self) -> Pos:
        return self.entries[0][0]

    def dense(self, d: int) -> np.ndarray:
        out = np.zeros((d, d), dtype=object)
        for (i, j), v in self.entries:
            out[i, j] += v
        return out


@dataclass(frozen=True)
class Functional:
    coeffs: tuple[int, ...]
    seed: int
    trial: int
    bound: int


def _block_ids(parts, d: int) -> list[int]:
    ids = []
    for k, p in enumerate(parts):
        ids.extend([k] * p)
    assert len(ids) == d
    return ids


def _palindrome(parts, n: int) -> list[int]:
    mid = 2 * n - 2 * sum(parts)
    return list(parts) + ([mid] if mid else []) + list(reversed(parts))


def shape_of(spec: SeaweedSpec) -> MatrixShape:
    if spec.algebra == "A":
        d, lower, upper = spec.n, list(spec.a), list(spec.b)
    else:
        d = 2 * spec.n
        lower, upper = _palindrome(spec.a, spec.n), _palindrome(spec.b, spec.n)
    lo = _block_ids(lower, d)
    up = _block_ids(upper, d)
    pos = frozenset(
        (i, j)
        for i in range(d)
        for j in range(d)
        if (i >= j and lo[i] == lo[j]) or (i <= j and up[i] == up[j])
    )
    return MatrixShape(d, pos)


def basis_of(spec: SeaweedSpec, shape: MatrixShape | None = None) -> list[BasisElement]:
    shape = shape or shape_of(spec)
    if spec.algebra == "A":
        return [BasisElement((((p), 1),), "gl-unit") for p in sorted(shape.positions)]
    n = spec.n
    out = []
    for p in sorted(shape.positions):
        q = shape.anti_transpose(p)
        if q not in shape:
            raise AssertionError(f"orbit of {p} is half outside the shape")
        if q < p:
            continue
        if p == q:
            out.append(BasisElement(((p, 1),), "sp-fixed"))
        elif (p[0] < n) == (p[1] < n):
            out.append(BasisElement(((p, 1), (q, -1)), "sp-pair-diag"))
        else:
            out.append(BasisElement(((p, 1), (q, 1)), "sp-pair-anti"))
    return out


def _commutator(x: BasisElement, y: BasisElement) -> dict[Pos, int]:
    out: dict[Pos, int] = {}
    for (r, c), v in x.entries:
        for (r2, c2), w in y.entries:
            if c == r2:
                out[(r, c2)] = out.get((r, c2), 0) + v * w
            if c2 == r:
                out[(r2, c)] = out.get((r2, c), 0) - v * w
    return {p: v for p, v in out.items() if v}


def structure_constants(basis: list[BasisElement]) -> dict[tuple[int, int], list[tuple[int, int]]]:
    """``{(i, j): [(k, c_k), ...]}`` for ``i < j`` with ``[x_i, x_j] = sum c_k x_k``.

    Coordinates are read off at each element's representative position and the
    expansion is verified entry by entry.
    """
    where = {e.rep: k for k, e in enumerate(basis)}
    out = {}
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            br = _commutator(basis[i], basis[j])
            if not br:
                continue
            coeffs = []
            rebuilt: dict[Pos, int] = {}
            for p, v in br.items():
                k = where.get(p)
                if k is not None:
                    coeffs.append((k, v))
                    for q, w in basis[k].entries:
                        rebuilt[q] = rebuilt.get(q, 0) + v * w
            rebuilt = {p: v for p, v in rebuilt.items() if v}
            if rebuilt != br:
                raise BracketClosureError(f"[x_{i}, x_{j}] is not in the span of the basis")
            out[(i, j)] = coeffs
    return out


def random_functional(dim: int, seed: int, trial: int = 0, bound: int = DEFAULT_RANGE) -> Functional:
    rng = np.random.default_rng([seed, trial])
    coeffs = tuple(int(x) for x in rng.integers(-bound, bound + 1, size=dim))
    return Functional(coeffs, seed, trial, bound)


def kirillov_matrix(basis: list[BasisElement], f: Functional | tuple[int, ...], structure=None) -> list[list[int]]:
    coeffs = f.coeffs if isinstance(f, Functional) else tuple(f)
    if structure is None:
        structure = structure_constants(basis)
    dim = len(basis)
    m = [[0] * dim for _ in range(dim)]
    for (i, j), terms in structure.items():
        v = sum(coeffs[k] * c for k, c in terms)
        m[i][j] = v
        m[j][i] = -v
    return m


class _Algebra:
    def __init__(self, spec: SeaweedSpec):
        self.spec = spec
        self.shape = shape_of(spec)
        self.basis = basis_of(spec, self.shape)

    @cached_property
    def structure(self):
        return structure_constants(self.basis)

    @property
    def dim(self) -> int:
        return len(self.basis)


def oracle_report(
    spec: SeaweedSpec,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    bound: int = DEFAULT_RANGE,
    early_stop: bool = True,
) -> dict:
    """Run the oracle and return ``{spec, dim, trials, seed, ranks, index}``.

    With ``early_stop`` the trials end once the rank reaches the largest even
    value the dimension allows, since no later trial can exceed it.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    alg = _Algebra(spec)
    dim = alg.dim
    offset = 1 if spec.algebra == "A" else 0  # gl(n) -> sl(n)
    ceiling = dim - offset
    ceiling -= ceiling % 2
    ranks = []
    for t in range(trials):
        f = random_functional(dim, seed, t, bound)
        r = rank_exact(kirillov_matrix(alg.basis, f, alg.structure))
        if r % 2:
            raise AssertionError(f"odd rank {r} for an antisymmetric matrix")
        ranks.append(r)
        if early_stop and r >= ceiling:
            break
    idx = dim - max(ranks) - offset
    log.debug("oracle %s dim=%d seed=%d ranks=%s", spec.render(), dim, seed, ranks)
    return {
        "spec": spec.render(),
        "dim": dim,
        "trials": trials,
        "seed": seed,
        "ranks": ranks,
        "index": idx,
    }


def index_oracle(spec: SeaweedSpec, trials: int = DEFAULT_TRIALS, seed: int = 0, bound: int = DEFAULT_RANGE) -> int:
    return oracle_report(spec, trials, seed, bound)["index"]


def oracle_dim(spec: SeaweedSpec) -> int:
    return len(basis_of(spec))
