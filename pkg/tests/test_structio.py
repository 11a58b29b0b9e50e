import re

import pytest
from hypothesis import given

from conftest import posets, relspaces
from findual.dlattice import DLattice, from_upsets
from findual.modal import algebra_from_space
from findual.structio import ParseError, dumps, load, loads, to_dot, wrap
from findual.tense import tense_from_space


def _round_trip(value):
    st = wrap(value)
    text = dumps(st)
    back = loads(text)
    assert back == st
    assert dumps(back) == text


@given(posets())
def test_poset_and_lattice_round_trip(p):
    _round_trip(p)
    _round_trip(from_upsets(p))


@given(relspaces(max_size=3))
def test_space_and_algebra_round_trip(s):
    _round_trip(s)
    _round_trip(algebra_from_space(s))
    _round_trip(tense_from_space(s))


def test_fixtures_load(fixtures_dir):
    files = sorted(fixtures_dir.glob("*.json"))
    assert files
    for f in files:
        st = load(f)
        assert dumps(st) == f.read_text()


@pytest.mark.parametrize("text, where", [
    ('{"format-version": 1, "kind": "poset",\n "elements": ["a"\n "leq": []}', "3:2"),
    ('{"format-version": 2, "kind": "poset", "elements": [], "leq": []}', "format-version"),
    ('{"format-version": 1, "kind": "lattice", "elements": []}', "$.kind"),
    ('{"format-version": 1, "kind": "poset", "elements": ["a", "a"], "leq": []}', "$.elements"),
    ('{"format-version": 1, "kind": "poset", "elements": ["a"], "leq": [["a", "z"]]}', "$.leq[0][1]"),
    ('{"format-version": 1, "kind": "dlattice", "elements": ["a"], "meet": [["a"]]}', "$.join"),
])
def test_parse_errors_locate_the_problem(text, where):
    with pytest.raises(ParseError, match=re.escape(where)):
        loads(text)


def test_dot_uses_covers_only():
    dot = to_dot(wrap(DLattice.chain(3), ["0", "a", "1"]))
    assert '"0" -> "a"' in dot and '"a" -> "1"' in dot and '"0" -> "1"' not in dot
