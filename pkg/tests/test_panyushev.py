import pytest
from hypothesis import given

from seaweed.compositions import Composition, SeaweedSpec, compositions_up_to, parse_spec
from seaweed.meander import meander_index
from seaweed.panyushev import CState, index_c, index_c_value, index_parabolic_c

from conftest import c_specs


def test_parabolic():
    assert index_parabolic_c(4, (2, 1)) == 2
    assert index_parabolic_c(3, ()) == 3
    assert index_parabolic_c(3, (1, 1, 1)) == 0
    with pytest.raises(ValueError):
        index_parabolic_c(2, (2, 1))


@pytest.mark.parametrize(
    "text, expected",
    [("C[n=11]:2,1,1,6|2,2,1,2", 5), ("C[n=3]:2,1|1", 0), ("C[n=16]:7,9|13", 0),
     ("C[n=15]:10,5|5,8", 0), ("C[n=15]:10,5|3,10", 2), ("C[n=2]:-|-", 2)],
)
def test_examples(text, expected):
    spec = parse_spec(text)
    idx, trace = index_c(spec)
    assert idx == expected == trace.total == index_c_value(spec)


def test_fig8_terminal():
    idx, trace = index_c(parse_spec("C[n=16]:7,9|13"))
    assert idx == 0
    term = trace.terminal
    assert {term.a, term.b} == {(1, 1, 1), ()}
    assert term.n == 3
    assert trace.steps[-1].rule == "parabolic"
    assert "C[n=3]:1,1,1|-" in trace.render()


def test_requires_type_c():
    with pytest.raises(ValueError):
        index_c(parse_spec("A:1|1"))


def test_cstate_render():
    assert CState(3, Composition(()), Composition((1, 1))).render() == "C[n=3]:-|1,1"


@pytest.mark.parametrize("n", range(1, 7))
def test_exhaustive_agreement(n):
    side = compositions_up_to(n)
    for a in side:
        for b in side:
            spec = SeaweedSpec("C", n, a, b)
            m = meander_index(spec)
            assert index_c(spec)[0] == m == index_c_value(spec), spec


@given(c_specs(200))
def test_random_agreement(spec):
    assert index_c(spec)[0] == meander_index(spec) == index_c_value(spec)


@given(c_specs(40))
def test_flip_symmetry(spec):
    assert meander_index(spec) == meander_index(spec.flipped())
    assert index_c_value(spec) == index_c_value(spec.flipped())


@given(c_specs(40))
def test_strip_k(spec):
    top = max(spec.a.total, spec.b.total)
    k = spec.n - top
    if top == 0:
        assert meander_index(spec) == spec.n
        return
    reduced = SeaweedSpec("C", top, spec.a, spec.b)
    assert meander_index(spec) == k + meander_index(reduced)
