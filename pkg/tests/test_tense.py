import numpy as np
import pytest
from hypothesis import given

from conftest import relspaces
from findual.dlattice import powerset_lattice
from findual.errors import DomainError, PreconditionError
from findual.modal import RelSpace, star_closure
from findual.tense import (TenseAlgebra, biheyting_fixpoints, connecting_violation, is_s4t,
                           tense_from_space)

CHAIN_XY = RelSpace.from_pairs(2, [(0, 1)])
S4_CHAIN = RelSpace.from_pairs(2, [(0, 0), (0, 1), (1, 1)])


def test_tense_from_space_examples():
    t = tense_from_space(RelSpace.identity(2))
    assert list(t.box_f) == list(t.box_p) == [0, 1, 2, 3]
    t = tense_from_space(CHAIN_XY)
    assert t.box_f[0b10] == 0b11 and t.box_p[0b01] == 0b11
    t = tense_from_space(RelSpace(np.zeros((2, 2), dtype=bool)))
    assert list(t.box_f) == list(t.box_p) == [3, 3, 3, 3]


def test_is_s4t_examples():
    assert is_s4t(tense_from_space(RelSpace.identity(3)))
    assert is_s4t(tense_from_space(S4_CHAIN))
    assert not is_s4t(tense_from_space(RelSpace.from_pairs(3, [(0, 1), (1, 2), (2, 0)])))


def test_mismatched_boxes_violate_connecting_axioms():
    b = powerset_lattice(2)
    # future box of x -> y paired with an identity past box
    with pytest.raises(DomainError):
        TenseAlgebra(b, np.array([2, 2, 3, 3]), np.arange(4))


def test_biheyting_examples():
    h, carrier, rep = biheyting_fixpoints(tense_from_space(RelSpace.identity(2)))
    assert rep.ok and carrier == [0, 1, 2, 3] and h.base.is_boolean()
    for i, u in enumerate(carrier):
        for j, v in enumerate(carrier):
            assert carrier[h.co_arrow[i, j]] == v & ~u
    h, carrier, rep = biheyting_fixpoints(tense_from_space(S4_CHAIN))
    # upsets of x <= y: {}, {y}, {x, y}
    assert rep.ok and carrier == [0, 0b10, 0b11]
    assert carrier[h.co_arrow[1, 2]] == 0b11
    h, carrier, rep = biheyting_fixpoints(tense_from_space(RelSpace.identity(1)))
    assert rep.ok and carrier == [0, 1]


def test_biheyting_needs_s4():
    with pytest.raises(PreconditionError):
        biheyting_fixpoints(tense_from_space(CHAIN_XY))


@given(relspaces())
def test_connecting_axioms_kernel_matches_generic_path(s):
    t = tense_from_space(s)
    generic = TenseAlgebra(t.base, t.box_f, t.box_p, check=False)
    assert connecting_violation(t) is None
    assert connecting_violation(generic) is None


@given(relspaces())
def test_biheyting_on_s4_closures(s):
    t = tense_from_space(star_closure(s))
    assert biheyting_fixpoints(t)[2].ok
