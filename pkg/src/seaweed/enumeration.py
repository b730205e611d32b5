"""Exhaustive and random sweeps: Frobenius search and cross-validation campaigns."""

from __future__ import annotations

import csv
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from . import kernels
from .compositions import (
    Composition,
    SeaweedSpec,
    compositions_of,
    compositions_up_to,
    compositions_with_parts,
    odd_part_count,
    random_composition,
)
from .formulas import (
    index_a_small,
    index_c_ab_c,
    index_c_n_ab,
    index_c_singletons,
    index_elashvili,
    is_frobenius_c_ab_c,
    is_frobenius_c_n_ab,
    necessary_frobenius,
)
from .meander import build_meander, index, index_via_permutation
from .oracle import DEFAULT_TRIALS, index_oracle
from .panyushev import index_c, index_c_value
from .signature import index_via_signature, wind_down

__all__ = [
    "SweepReport",
    "frobenius_search",
    "catalog_rows",
    "write_catalog_csv",
    "verify_formulas",
    "verify_oracle",
    "verify_random",
    "verify_necessary",
]


@dataclass
class SweepReport:
    domain: str
    count: int = 0
    mismatches: list[dict] = field(default_factory=list)
    elapsed: float = 0.0
    seed: int | None = None

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def merge(self, other: "SweepReport") -> None:
        self.count += other.count
        self.mismatches.extend(other.mismatches)

    def to_json(self) -> dict:
        return {
            "domain": self.domain,
            "count": self.count,
            "mismatches": self.mismatches,
            "passed": self.passed,
            "elapsed": round(self.elapsed, 6),
            "seed": self.seed,
        }


def _fast(spec: SeaweedSpec) -> int:
    return kernels.fast_meander_index(spec.algebra, spec.n, spec.a, spec.b)


def _map(fn: Callable, chunks: list, jobs: int) -> list:
    if jobs <= 1 or len(chunks) <= 1:
        return [fn(c) for c in chunks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, chunks))


# ------------------------------------------------------------- Frobenius search


def _side(algebra: str, n: int, parts: int | None) -> list[Composition]:
    if algebra == "A":
        if parts is None:
            return compositions_of(n)
        return list(compositions_with_parts(n, parts))
    if parts is None:
        return compositions_up_to(n)
    return [c for m in range(n + 1) for c in compositions_with_parts(m, parts)]


def _search_chunk(args) -> list[SeaweedSpec]:
    algebra, n, a, bottoms, prune = args
    found = []
    for b in bottoms:
        spec = SeaweedSpec(algebra, n, a, b)
        if prune and not necessary_frobenius(spec):
            continue
        if _fast(spec) != 0:
            continue
        if algebra == "C" and index_c_value(spec) != 0:
            raise RuntimeError(f"meander and inductive index disagree on {spec.render()}")
        found.append(spec)
    return found


def frobenius_search(
    algebra: str,
    n: int,
    prune: bool = False,
    parts: tuple[int | None, int | None] | None = None,
    jobs: int = 1,
) -> list[SeaweedSpec]:
    """All index-zero seaweeds of size ``n``.

    ``parts=(k, l)`` restricts to ``k`` top parts and ``l`` bottom parts
    (``None`` leaves a side unrestricted). ``prune`` filters by the
    necessary odd-part condition first; it never changes the result.
    """
    if n < 1:
        raise ValueError("n must be positive")
    kp, lp = parts if parts is not None else (None, None)
    tops = _side(algebra, n, kp)
    bottoms = _side(algebra, n, lp)
    chunks = [(algebra, n, a, bottoms, prune) for a in tops]
    found = [s for part in _map(_search_chunk, chunks, jobs) for s in part]
    found.sort(key=SeaweedSpec.sort_key)
    return found


def catalog_rows(specs: Iterable[SeaweedSpec]) -> Iterator[dict]:
    for s in specs:
        m = build_meander(s)
        yield {
            "n": s.n,
            "a": s.a.render(),
            "b": s.b.render(),
            "index": index(m),
            "odd_parts": odd_part_count(s.a, s.b),
            "tail_size": len(m.tail),
        }


CATALOG_COLUMNS = ["n", "a", "b", "index", "odd_parts", "tail_size"]


def write_catalog_csv(specs: Iterable[SeaweedSpec], path) -> int:
    rows = list(catalog_rows(specs))
    with open(path, "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=CATALOG_COLUMNS)
        w.writeheader()
        w.writerows(rows)
    return len(rows)


# ---------------------------------------------------------- formula sweeps


def _formula_cases(n_max: int) -> Iterator[tuple[str, SeaweedSpec, object, Callable[[int], bool]]]:
    """Yield ``(formula, spec, claimed, check)`` with ``check(meander_index)``."""

    def eq(v):
        return lambda idx: idx == v

    def frob(flag):
        return lambda idx: (idx == 0) == flag

    for s in range(2, n_max + 1):
        for a in range(1, s):
            b = s - a
            v = index_elashvili(a, b)
            yield "elashvili", SeaweedSpec.A((a, b), (s,)), v, eq(v)
    for n in range(3, n_max + 1):
        for a in range(1, n - 1):
            for b in range(1, n - a):
                c = n - a - b
                v = index_a_small("3|1", (a, b, c, n))
                yield "a-three-one", SeaweedSpec.A((a, b, c), (n,)), v, eq(v)
    for n in range(2, n_max + 1):
        for a in range(1, n):
            for c in range(1, n):
                b, d = n - a, n - c
                v = index_a_small("2|2", (a, b, c, d))
                yield "a-two-two", SeaweedSpec.A((a, b), (c, d)), v, eq(v)
    for n in range(1, n_max + 1):
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                v = index_c_singletons(n, a, b)
                yield "c-singletons", SeaweedSpec.C(n, (a,), (b,)), v, eq(v)
    for n in range(2, n_max + 1):
        for a in range(1, n):
            b = n - a
            for c in range(1, n + 1):
                spec = SeaweedSpec.C(n, (a, b), (c,))
                if c in (n - 1, n - 2):
                    v = index_c_ab_c(n, a, b, c)
                    yield "c-ab-c", spec, v, eq(v)
                flag = is_frobenius_c_ab_c(n, a, b, c)
                yield "c-ab-c-frobenius", spec, flag, frob(flag)
    for n in range(2, n_max + 1):
        for a in range(1, n):
            for b in range(1, n - a + 1):
                spec = SeaweedSpec.C(n, (n,), (a, b))
                if a + b in (n - 1, n - 2):
                    v = index_c_n_ab(n, a, b)
                    yield "c-n-ab", spec, v, eq(v)
                flag = is_frobenius_c_n_ab(n, a, b)
                yield "c-n-ab-frobenius", spec, flag, frob(flag)


def verify_formulas(n_max: int) -> SweepReport:
    """Every closed formula against the meander count over its whole domain."""
    if n_max < 3:
        raise ValueError("n_max must be at least 3")
    t0 = time.perf_counter()
    report = SweepReport(f"formulas n<={n_max}")
    for name, spec, claimed, check in _formula_cases(n_max):
        report.count += 1
        got = _fast(spec)
        if not check(got):
            report.mismatches.append(
                {"spec": spec.render(), "formula": name, "formula_value": claimed, "meander": got}
            )
    report.elapsed = time.perf_counter() - t0
    return report


# ------------------------------------------------------------ oracle sweeps


def _all_methods(spec: SeaweedSpec, trials: int, seed: int, with_oracle: bool = True) -> dict:
    m = build_meander(spec)
    vals = {"meander": index(m), "permutation": index_via_permutation(m)}
    if spec.algebra == "A":
        vals["signature"] = index_via_signature(spec.a, spec.b)
        vals["wind_down"] = wind_down(spec.a, spec.b)[2]
    else:
        vals["panyushev"] = index_c(spec)[0]
        vals["panyushev_kernel"] = index_c_value(spec)
    if with_oracle:
        vals["oracle"] = index_oracle(spec, trials=trials, seed=seed)
    return vals


def _oracle_chunk(args) -> SweepReport:
    specs, trials, seed = args
    rep = SweepReport("chunk")
    for spec in specs:
        rep.count += 1
        vals = _all_methods(spec, trials, seed)
        if len(set(vals.values())) != 1:
            rep.mismatches.append({"spec": spec.render(), "values": vals})
    return rep


def verify_oracle(
    a_nmax: int,
    c_nmax: int,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    jobs: int = 1,
) -> SweepReport:
    """Exhaustive agreement of every method with the matrix oracle.

    Covers all type A specs with ``1 <= n <= a_nmax`` and all type C specs
    with ``1 <= n <= c_nmax``.
    """
    t0 = time.perf_counter()
    chunks = []
    for n in range(1, a_nmax + 1):
        side = compositions_of(n)
        chunks += [([SeaweedSpec("A", n, a, b) for b in side], trials, seed) for a in side]
    for n in range(1, c_nmax + 1):
        side = compositions_up_to(n)
        chunks += [([SeaweedSpec("C", n, a, b) for b in side], trials, seed) for a in side]
    report = SweepReport(f"oracle A n<={a_nmax}, C n<={c_nmax}", seed=seed)
    for part in _map(_oracle_chunk, chunks, jobs):
        report.merge(part)
    report.mismatches.sort(key=lambda m: m["spec"])
    report.elapsed = time.perf_counter() - t0
    return report


def random_spec(rng: random.Random, algebra: str, n_max: int) -> SeaweedSpec:
    n = rng.randint(1, n_max)
    if algebra == "A":
        return SeaweedSpec("A", n, random_composition(rng, n), random_composition(rng, n))
    return SeaweedSpec(
        "C",
        n,
        random_composition(rng, rng.randint(0, n)),
        random_composition(rng, rng.randint(0, n)),
    )


def verify_random(algebra: str, count: int, n_max: int, seed: int = 0) -> SweepReport:
    """Random specs: meander vs permutation vs the inductive route."""
    t0 = time.perf_counter()
    rng = random.Random(seed)
    report = SweepReport(f"random {algebra} x{count} n<={n_max}", seed=seed)
    for _ in range(count):
        spec = random_spec(rng, algebra, n_max)
        report.count += 1
        vals = _all_methods(spec, 0, seed, with_oracle=False)
        if len(set(vals.values())) != 1:
            report.mismatches.append({"spec": spec.render(), "values": vals})
    report.elapsed = time.perf_counter() - t0
    return report


def verify_necessary(a_nmax: int, c_nmax: int) -> tuple[SweepReport, list[str]]:
    """Index zero implies the odd-part condition.

    Also returns the specs that satisfy the condition yet have positive
    index (showing it is not sufficient).
    """
    t0 = time.perf_counter()
    report = SweepReport(f"necessary A n<={a_nmax}, C n<={c_nmax}")
    witnesses = []
    specs: list[SeaweedSpec] = []
    for n in range(1, a_nmax + 1):
        side = compositions_of(n)
        specs += [SeaweedSpec("A", n, a, b) for a in side for b in side]
    for n in range(1, c_nmax + 1):
        side = compositions_up_to(n)
        specs += [SeaweedSpec("C", n, a, b) for a in side for b in side]
    for spec in specs:
        report.count += 1
        idx = _fast(spec)
        nec = necessary_frobenius(spec)
        if idx == 0 and not nec:
            report.mismatches.append({"spec": spec.render(), "index": idx})
        elif idx > 0 and nec:
            witnesses.append(spec.render())
    report.elapsed = time.perf_counter() - t0
    return report, witnesses
