from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fanoqh.qring import QRing, RingValidationError
from fanoqh.rings import BUNDLED, bundled_path, complete_intersection, grassmannian2, projective_space
from fanoqh.tableio import TableParseError, dumps, load_ring, loads, save_ring


@pytest.mark.parametrize("name", sorted(BUNDLED))
def test_bundled_files_roundtrip_byte_identical(name):
    text = bundled_path(name).read_text(encoding="utf-8")
    assert dumps(loads(text)) == text


@given(st.sampled_from(["pn:2", "pn:5", "gr2:5", "gr2:6", "ci:4:2", "ci:5:3"]))
@settings(max_examples=10, deadline=None)
def test_built_rings_roundtrip(spec):
    from fanoqh.cli import parse_variety

    r = parse_variety(spec)
    text = dumps(r)
    again = loads(text)
    assert again.same_table(r) and dumps(again) == text


def test_save_and_load(tmp_path):
    r = grassmannian2(4)
    path = tmp_path / "gr24.qring"
    save_ring(r, path)
    assert load_ring(path).same_table(r)


def _lines(r):
    return dumps(r).split("\n")


def test_parse_error_locates_bad_coefficient():
    lines = _lines(projective_space(2))
    i = lines.index("products") + 1
    lines[i] = lines[i].replace("1/1", "1/0")
    with pytest.raises(TableParseError) as err:
        loads("\n".join(lines))
    assert err.value.line == i + 1


def test_parse_error_on_unsorted_products():
    lines = _lines(projective_space(2))
    i = lines.index("products") + 1
    lines[i], lines[i + 1] = lines[i + 1], lines[i]
    with pytest.raises(TableParseError, match="sorted"):
        loads("\n".join(lines))


def test_parse_error_on_bad_provenance():
    lines = _lines(projective_space(2))
    lines[3] = "provenance guessed"
    with pytest.raises(TableParseError) as err:
        loads("\n".join(lines))
    assert err.value.line == 4


def test_parse_error_on_missing_header():
    with pytest.raises(TableParseError):
        loads("c1 3\n")


def test_loader_validates_associativity():
    lines = _lines(complete_intersection(3, [2]))
    # corrupt one structure constant
    i = next(k for k, line in enumerate(lines) if line.startswith("1 1 ->"))
    head, coeff = lines[i].rsplit(" ", 1)
    lines[i] = f"{head} 3/1"
    with pytest.raises(RingValidationError):
        loads("\n".join(lines))
    assert loads("\n".join(lines), validate=False).dim == 4


def test_commutativity_conflict():
    with pytest.raises(RingValidationError):
        QRing("x", ["1", "a"], [0, 2], 1, {(0, 1): {(1, 0): 1}, (1, 0): {(1, 0): 2}})


def test_fractions_are_reduced():
    r = QRing("t", ["1"], [0], 1, {(0, 0): {(0, 0): Fraction(2, 2)}})
    assert "0 0 -> 0 0 1/1" in dumps(r)
