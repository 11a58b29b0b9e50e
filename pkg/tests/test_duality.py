import numpy as np
import pytest
from hypothesis import given

from conftest import posets
from findual.dlattice import DLattice, from_upsets, powerset_lattice
from findual.duality import (
    maximal_ideals_vs_min_points, priestley_dual, round_trip_lattice, round_trip_poset,
    stone_dual, surjection_to_subspace,
)
from findual.errors import DomainError, WellDefinednessError
from findual.poset import Poset, find_isomorphism

CHAIN3 = DLattice.chain(3)


def test_priestley_dual_examples():
    dual, w = priestley_dual(CHAIN3)
    assert w.iso and find_isomorphism(dual, Poset.chain(2)) is not None
    dual, w = priestley_dual(powerset_lattice(2))
    assert w.iso and dual == Poset.antichain(2)
    dual, w = priestley_dual(DLattice.chain(2))
    assert w.iso and dual.size == 1


def test_priestley_dual_sigma_is_explicit():
    _, w = priestley_dual(CHAIN3)
    # prime filters {1} and {a,1}; sigma(a) is the set of filters containing a
    assert w.points == [0b100, 0b110]
    assert w.forward_sets == [0b00, 0b10, 0b11]


def test_round_trip_examples():
    assert round_trip_poset(Poset.chain(1)).ok
    assert round_trip_poset(Poset.chain(2)).ok
    assert round_trip_poset(Poset(np.zeros((0, 0), dtype=bool))).ok


def test_stone_dual_examples():
    assert stone_dual(DLattice.chain(2))[0].size == 1
    assert stone_dual(powerset_lattice(2))[0] == Poset.antichain(2)
    assert stone_dual(powerset_lattice(3))[0] == Poset.antichain(3)
    with pytest.raises(DomainError, match="no complement"):
        stone_dual(CHAIN3)


def test_surjection_examples():
    small, emb, rep = surjection_to_subspace(CHAIN3, [])
    assert rep.ok and small.size == 2 and sorted(emb) == [0, 1]
    small, emb, rep = surjection_to_subspace(CHAIN3, [(1, 2)])
    assert rep.ok and small.size == 1 and len(emb) == 1
    small, emb, rep = surjection_to_subspace(powerset_lattice(2), [(0, 1), (2, 3)])
    assert rep.ok and small.size == 1 and len(emb) == 1


def test_surjection_rejects_non_congruence():
    with pytest.raises(WellDefinednessError):
        surjection_to_subspace(powerset_lattice(2), [(0, 1)])


@given(posets())
def test_round_trips_on_random_posets(p):
    assert round_trip_poset(p).ok
    d = from_upsets(p)
    if not d.is_trivial():
        assert round_trip_lattice(d).ok
        assert maximal_ideals_vs_min_points(d)
