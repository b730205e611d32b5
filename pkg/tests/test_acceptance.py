"""Exit criteria. Each test records one PASS/FAIL line, shown in the summary."""

import time

import numpy as np
import pytest

from conftest import ACCEPTANCE
from seaweed.compositions import SeaweedSpec, compositions_of, compositions_up_to, parse_spec
from seaweed.enumeration import verify_formulas, verify_necessary, verify_oracle, verify_random
from seaweed.formulas import necessary_frobenius
from seaweed.homotopy import homotopy_type
from seaweed.meander import (
    associated_permutation,
    build_meander,
    components,
    index,
    index_via_permutation,
    meander_index,
)
from seaweed.oracle import basis_of, index_oracle, kirillov_matrix, random_functional, shape_of, structure_constants
from seaweed.linalg import rank_exact
from seaweed.panyushev import index_c, index_c_value
from seaweed.signature import index_via_signature, wind_down


def record(num, title, ok, detail):
    ACCEPTANCE[num] = f"criterion {num} {'PASS' if ok else 'FAIL'}: {title} ({detail})"
    print(ACCEPTANCE[num])
    assert ok, ACCEPTANCE[num]


def test_criterion_1_reference_examples():
    # JIT compilation is a one-time cost, kept out of the timed region
    meander_index(parse_spec("C[n=2]:1|2"))
    index_c_value(parse_spec("C[n=2]:1|2"))
    index_via_signature((1,), (1,))
    t0 = time.perf_counter()
    checks = {}
    fig1 = parse_spec("A:4,3|2,2,1,2")
    m1 = build_meander(fig1)
    checks["fig1 index"] = (
        index(m1) == index_via_permutation(m1) == index_via_signature(fig1.a, fig1.b) == index_oracle(fig1) == 2
    )
    checks["fig1 sigma"] = str(associated_permutation(m1)) == "(1,3)(2,4)(5,7,6)"
    ex = build_meander(parse_spec("C[n=11]:2,1,1,6|2,2,1,2"))
    checks["n=11 sigma"] = str(associated_permutation(ex)) == "(1)(2)(3,4)(5,10)(6,8,7,9)(11)"
    checks["n=11 tail"] = ex.tail == {8, 9, 10}
    table = {c.vertices: (c.tail_count, c.is_cycle, c.contribution) for c in components(ex)}
    checks["fig5 table"] = table == {
        (1, 2): (0, True, 2), (3, 4): (0, False, 1), (11,): (0, False, 1),
        (6, 7, 8, 9): (2, False, 1), (5, 10): (1, False, 0),
    }
    checks["fig5 index"] = index(ex) == 5
    checks["fig6"] = meander_index(parse_spec("C[n=15]:10,5|5,8")) == 0
    checks["fig7"] = meander_index(parse_spec("C[n=15]:10,5|3,10")) == 2
    idx8, trace8 = index_c(parse_spec("C[n=16]:7,9|13"))
    term = trace8.terminal
    checks["fig8"] = idx8 == 0 and term.n == 3 and {term.a, term.b} == {(1, 1, 1), ()}
    checks["homotopy"] = homotopy_type(m1) == "C() ."
    checks["stars"] = len(shape_of(fig1)) == 19 and len(shape_of(parse_spec("C[n=3]:2,1|1"))) == 14
    checks["basis"] = len(basis_of(parse_spec("C[n=3]:2,1|1"))) == 8
    elapsed = time.perf_counter() - t0
    failed = [k for k, v in checks.items() if not v]
    record("1", "reference-example regression", not failed and elapsed < 1.0,
           f"{len(checks) - len(failed)}/{len(checks)} checks, {elapsed:.2f}s" + (f", failed {failed}" if failed else ""))


@pytest.mark.slow
def test_criterion_2_oracle_equivalence():
    parts = []
    ok = True
    ra = verify_oracle(6, 0, seed=0)
    ok &= ra.passed and ra.elapsed < 60 and ra.count == sum(4 ** (n - 1) for n in range(1, 7))
    parts.append(f"A n<=6: {ra.count} specs, {len(ra.mismatches)} mismatches, {ra.elapsed:.1f}s")
    rc = verify_oracle(0, 4, seed=0)
    ok &= rc.passed and rc.elapsed < 300 and rc.count == sum(4**n for n in range(1, 5))
    parts.append(f"C n<=4: {rc.count} specs, {len(rc.mismatches)} mismatches, {rc.elapsed:.1f}s")

    t0 = time.perf_counter()
    bad = 0
    count = 0
    for n in range(1, 7):
        side = compositions_up_to(n)
        for a in side:
            for b in side:
                spec = SeaweedSpec("C", n, a, b)
                count += 1
                bad += not (index_c(spec)[0] == index_c_value(spec) == meander_index(spec))
    rr = verify_random("C", 10_000, 200, seed=0)
    elapsed = time.perf_counter() - t0
    ok &= bad == 0 and rr.passed and elapsed < 60
    parts.append(f"inductive C n<=6: {count} specs, {bad} mismatches; random: {rr.count} specs, "
                 f"{len(rr.mismatches)} mismatches; {elapsed:.1f}s")
    record("2", "oracle equivalence", ok, "; ".join(parts))


@pytest.mark.slow
def test_criterion_3_formulas():
    rep = verify_formulas(60)
    record("3", "closed formulas n<=60", rep.passed and rep.elapsed < 120,
           f"{rep.count} cases, {len(rep.mismatches)} mismatches, {rep.elapsed:.1f}s")


@pytest.mark.slow
def test_criterion_4_necessary_condition():
    rep, witnesses = verify_necessary(8, 6)
    fig7 = parse_spec("C[n=15]:10,5|3,10")
    witness_ok = necessary_frobenius(fig7) and meander_index(fig7) == 2
    record("4", "necessary-condition soundness", rep.passed and bool(witnesses) and witness_ok,
           f"{rep.count} specs, {len(rep.mismatches)} violations, {len(witnesses)} non-Frobenius "
           f"specs satisfy the condition, C[n=15]:10,5|3,10 witness {'ok' if witness_ok else 'missing'}")


def _structural_failures():
    fails = {}

    def bump(name):
        fails[name] = fails.get(name, 0) + 1

    specs = []
    for n in range(1, 9):
        side = compositions_of(n)
        specs += [SeaweedSpec("A", n, a, b) for a in side for b in side]
    for n in range(1, 7):
        side = compositions_up_to(n)
        specs += [SeaweedSpec("C", n, a, b) for a in side for b in side]
    ident = {}
    for spec in specs:
        m = build_meander(spec)
        for p in (m.top, m.bottom):
            ar = ident.setdefault(m.n, np.arange(m.n))
            if not np.array_equal(p[p], ar):
                bump("involution")
        if m.has_crossing():
            bump("non-crossing")
        idx = index(m)
        if idx != meander_index(spec.flipped()):
            bump("flip symmetry")
        if spec.algebra == "C":
            top = max(spec.a.total, spec.b.total)
            if 0 < top < spec.n and idx != spec.n - top + meander_index(SeaweedSpec("C", top, spec.a, spec.b)):
                bump("strip-k")
    algebra_specs = [s for s in specs if (s.algebra == "A" and s.n <= 5) or (s.algebra == "C" and s.n <= 3)]
    for k, spec in enumerate(algebra_specs):
        shape = shape_of(spec)
        if spec.algebra == "C" and any(shape.anti_transpose(p) not in shape for p in shape.positions):
            bump("anti-transpose symmetry")
        basis = basis_of(spec, shape)
        try:
            sc = structure_constants(basis)
        except AssertionError:
            bump("bracket closure")
            continue
        mat = kirillov_matrix(basis, random_functional(len(basis), 0, k), sc)
        if any(mat[i][j] != -mat[j][i] for i in range(len(mat)) for j in range(len(mat))):
            bump("antisymmetry")
        if rank_exact(mat) % 2:
            bump("even rank")
    return len(specs), len(algebra_specs), fails


@pytest.mark.slow
def test_criterion_5_structural_properties():
    t0 = time.perf_counter()
    n_graph, n_alg, fails = _structural_failures()
    record("5", "structural properties", not fails,
           f"{n_graph} meanders, {n_alg} algebras, failures {fails or 'none'}, "
           f"{time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    for fn in (test_criterion_1_reference_examples, test_criterion_2_oracle_equivalence,
               test_criterion_3_formulas, test_criterion_4_necessary_condition,
               test_criterion_5_structural_properties):
        try:
            fn()
        except AssertionError:
            pass
