import pytest
from hypothesis import given
from hypothesis import strategies as st

from seaweed.compositions import compositions_of, parse_spec
from seaweed.homotopy import HomotopyType, chain, circle, homotopy_type, is_homotopically_trivial, point
from seaweed.meander import build_meander, meander_index
from seaweed.signature import index_via_signature, reduce_step, wind_down, wind_up

from conftest import a_specs


def H(text):
    return homotopy_type(build_meander(parse_spec(text)))


@pytest.mark.parametrize(
    "text, expected",
    [("A:4,3|2,2,1,2", "C() ."), ("A:2|2", "C()"), ("A:1|1", "."), ("A:2,3|5", ".")],
)
def test_homotopy_examples(text, expected):
    h = H(text)
    assert h == expected
    assert str(h) == expected


def test_nested_circles():
    assert H("A:5|5") == HomotopyType([chain(5)])
    assert str(H("A:5|5")) == "C(C(.))"
    assert H("A:4|4").circles == 2 and H("A:4|4").points == 0


def test_trivial():
    assert is_homotopically_trivial(H("A:2,3|5"))
    assert not is_homotopically_trivial("C() .")
    assert is_homotopically_trivial(".")
    assert not is_homotopically_trivial(". .")


def test_parse_roundtrip():
    text = "C(C(.) .) C() . ."
    h = HomotopyType.parse(text)
    assert str(h) == text
    assert h == HomotopyType([point(), circle(), point(), circle(point(), circle(point()))])
    with pytest.raises(ValueError):
        HomotopyType.parse("C(.")


def test_homotopy_requires_type_a():
    with pytest.raises(ValueError):
        H("C[n=3]:2,1|1")


@pytest.mark.parametrize(
    "a, b, move, after",
    [
        ((4, 3), (2, 2, 1, 2), "F", ((2, 2, 1, 2), (4, 3))),
        ((2, 2), (2, 2), "C", ((2,), (2,))),
        ((1, 9), (7, 3), "B", ((9,), (5, 1, 3))),
        ((2, 2), (4,), "P", ((2,), (2,))),
        ((3, 2), (5,), "R", ((1, 2), (3,))),
    ],
)
def test_reduce_step(a, b, move, after):
    step = reduce_step(a, b)
    assert step.move == move
    assert step.after == after


def test_reduce_step_errors():
    with pytest.raises(ValueError):
        reduce_step((), ())
    with pytest.raises(ValueError):
        reduce_step((1, 2), (4,))


def test_wind_down_examples():
    trace, h, idx = wind_down((4, 3), (2, 2, 1, 2))
    assert (h, idx) == (HomotopyType.parse("C() ."), 2)
    trace, h, idx = wind_down((2, 2), (2, 2))
    assert trace.labels == "CC"
    assert [(s.circles, s.points) for s in trace] == [(1, 0), (1, 0)]
    assert idx == 3
    for n in range(1, 9):
        _, h, idx = wind_down((n,), (n,))
        assert (h.circles, h.points, idx) == (n // 2, n % 2, n - 1)
    _, h, idx = wind_down((2, 3), (5,))
    assert str(h) == "." and idx == 0
    assert trace.render().splitlines()[0] == "C: (2,2)‖(2,2) -> (2)‖(2) [+1C +0P]"


@pytest.mark.parametrize("n", range(1, 8))
def test_wind_down_matches_geometry_exhaustive(n):
    comps = compositions_of(n)
    for a in comps:
        for b in comps:
            spec = parse_spec(f"A:{a.render()}|{b.render()}")
            _, h, idx = wind_down(a, b)
            assert h == homotopy_type(build_meander(spec)), spec
            assert idx == index_via_signature(a, b) == meander_index(spec)


@given(a_specs(60))
def test_signature_index_random(spec):
    _, h, idx = wind_down(spec.a, spec.b)
    assert idx == index_via_signature(spec.a, spec.b) == meander_index(spec)
    assert idx == h.points + 2 * h.circles - 1


def test_wind_up_examples():
    assert wind_up(((1,), (1,)), []) == ((1,), (1,))
    a, b = wind_up(((1,), (1,)), ["P"])
    assert (a, b) == ((1, 1), (2,))
    with pytest.raises(ValueError):
        wind_up(((1,), (1,)), ["F"])
    with pytest.raises(ValueError):
        wind_up(((1,), (1,)), ["B"])


moves = st.lists(st.sampled_from(["F", "P", "B", "R", "C1", "C2", "C3"]), max_size=12)


@given(moves)
def test_wind_up_roundtrip(seq):
    a, b = (1,), (1,)
    applied = []
    for mv in seq:
        try:
            a, b = wind_up((a, b), [mv])
        except ValueError:
            continue
        applied.append(mv[0])
    trace, h, idx = wind_down(a, b)
    # reading the trace backwards reproduces the applied moves, then the seed's own C
    assert trace.labels == "".join(reversed(applied)) + "C"
    if "C" not in applied:
        assert idx == 0
