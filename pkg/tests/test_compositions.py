import pytest
from hypothesis import given

from seaweed.compositions import (
    Composition,
    SeaweedSpec,
    SpecError,
    compositions_of,
    compositions_up_to,
    compositions_with_parts,
    odd_part_count,
    parse_spec,
)

from conftest import any_specs


@pytest.mark.parametrize(
    "text, expected",
    [
        ("A:4,3|2,2,1,2", SeaweedSpec("A", 7, (4, 3), (2, 2, 1, 2))),
        ("A[n=7]:4,3|2,2,1,2", SeaweedSpec("A", 7, (4, 3), (2, 2, 1, 2))),
        ("C[n=11]:2,1,1,6|2,2,1,2", SeaweedSpec("C", 11, (2, 1, 1, 6), (2, 2, 1, 2))),
        ("C[n=3]:2,1|-", SeaweedSpec("C", 3, (2, 1), ())),
        (" C[n=2]:-|- ", SeaweedSpec("C", 2, (), ())),
    ],
)
def test_parse(text, expected):
    assert parse_spec(text) == expected


@pytest.mark.parametrize(
    "text",
    [
        "A:4,3|2,2,1",      # sum mismatch
        "A[n=8]:4,3|2,5",   # n disagrees with sums
        "C:1|1",            # size missing
        "C[n=3]:2,2|1",     # sum exceeds n
        "A:0,2|2",          # zero part
        "A:-1,3|2",
        "B:1|1",
        "A:1,|1",
        "A:1|1|1",
        "A:-|-",
        "C[n=0]:-|-",
        "",
    ],
)
def test_parse_rejects(text):
    with pytest.raises(SpecError):
        parse_spec(text)


def test_composition_rejects_nonpositive():
    with pytest.raises(SpecError):
        Composition((1, 0))
    assert Composition(()).render() == "-"
    assert Composition((3, 1)).total == 4


def test_compositions_of_small():
    assert compositions_of(1) == [(1,)]
    assert compositions_of(3) == [(1, 1, 1), (1, 2), (2, 1), (3,)]


def test_compositions_up_to_small():
    assert compositions_up_to(1) == [(), (1,)]
    assert compositions_up_to(2) == [(), (1,), (2,), (1, 1)]


@pytest.mark.parametrize("n", range(1, 13))
def test_enumeration_counts(n):
    comps = compositions_of(n)
    assert len(comps) == 2 ** (n - 1) == len(set(comps))
    assert all(c.total == n for c in comps)
    assert len(compositions_up_to(n)) == 2**n


def test_compositions_with_parts():
    assert list(compositions_with_parts(4, 2)) == [(1, 3), (2, 2), (3, 1)]
    assert list(compositions_with_parts(0, 0)) == [()]
    assert list(compositions_with_parts(2, 3)) == []
    assert sum(len(list(compositions_with_parts(7, k))) for k in range(1, 8)) == 64


def test_odd_part_count():
    assert odd_part_count((4, 3), (2, 2, 1, 2)) == 2
    assert odd_part_count((10, 5), (5, 8)) == 2
    assert odd_part_count((), ()) == 0


@given(any_specs())
def test_render_roundtrip(spec):
    assert parse_spec(spec.render()) == spec
    assert spec.flipped().flipped() == spec
