import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import relspaces
from findual.dlattice import DLattice, FilterOrIdeal, powerset_lattice
from findual.errors import DomainError, PreconditionError
from findual.modal import (
    ModalAlgebra, RelSpace, algebra_from_space, class_checks, cluster_quotient, eqmax,
    famax_quotient, permute_algebra, qmax, reflexivize, relativization_dual_check, relativize,
    space_from_algebra, star_closure,
)
from findual.poset import Poset, find_isomorphism

CHAIN_XY = RelSpace.from_pairs(2, [(0, 1)])
CYCLE3 = RelSpace.from_pairs(3, [(0, 1), (1, 2), (2, 0)])


def test_algebra_from_space_examples():
    assert algebra_from_space(RelSpace(np.zeros((1, 1), dtype=bool))).box[0] == 1
    assert algebra_from_space(CHAIN_XY).box[0b10] == 0b11
    assert list(algebra_from_space(RelSpace.identity(3)).box) == list(range(8))


def test_space_from_algebra_examples():
    s, rep = space_from_algebra(algebra_from_space(CHAIN_XY))
    assert rep.ok and s == CHAIN_XY
    ident = ModalAlgebra(powerset_lattice(2), np.arange(4))
    assert space_from_algebra(ident)[0] == RelSpace.identity(2)
    top = ModalAlgebra(powerset_lattice(2), np.full(4, 3))
    assert space_from_algebra(top)[0] == RelSpace(np.zeros((2, 2), dtype=bool))


def test_box_must_preserve_meets():
    with pytest.raises(DomainError):
        ModalAlgebra(powerset_lattice(2), np.array([3, 3, 3, 0]))


def test_class_check_examples():
    c = class_checks(RelSpace.identity(3))
    assert c["isS4"] and c["n_transitive"][0]
    c = class_checks(CYCLE3)
    assert not c["isK4"] and c["weakly_transitive"] == 2
    assert star_closure(CYCLE3) == RelSpace(np.ones((3, 3), dtype=bool))
    tree = RelSpace.from_pairs(3, [(0, 1), (0, 2)])
    c = class_checks(tree)
    assert c["isK4"] and not c["isS4"]


def test_reflexivize_examples():
    assert reflexivize(RelSpace.identity(2)) == RelSpace.identity(2)
    plus = reflexivize(CHAIN_XY)
    assert plus.is_s4()
    assert qmax(CHAIN_XY) == qmax(plus) == frozenset({1})
    strict = RelSpace.from_pairs(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    assert reflexivize(strict).is_s4()
    assert class_checks(reflexivize(algebra_from_space(strict)))["isS4"]


def test_reflexivize_requires_k4():
    with pytest.raises(PreconditionError):
        reflexivize(CYCLE3)
    with pytest.warns(UserWarning):
        reflexivize(CYCLE3, force=True)


def test_star_closure_examples():
    empty = RelSpace(np.zeros((3, 3), dtype=bool))
    assert star_closure(empty) == RelSpace.identity(3)
    s4 = RelSpace(Poset.diamond().leq)
    assert star_closure(s4) == s4


def test_qmax_examples():
    assert qmax(RelSpace.identity(1)) == frozenset({0})
    assert qmax(RelSpace(np.ones((2, 2), dtype=bool))) == frozenset({0, 1})
    s4_chain = RelSpace.from_pairs(2, [(0, 0), (0, 1), (1, 1)])
    assert qmax(s4_chain, 0b11) == frozenset({1})
    assert qmax(s4_chain, 0b01) == frozenset({0})
    assert eqmax(CYCLE3) == frozenset({0, 1, 2})


def test_relativize_examples():
    m = algebra_from_space(CHAIN_XY)
    rel, carrier = relativize(m, 3)
    assert carrier == [0, 1, 2, 3] and list(rel.box) == list(m.box)
    rel, carrier = relativize(m, 0b10)
    # R[y] is empty, so the one-world box is constantly top
    assert carrier == [0, 0b10] and list(rel.box) == [1, 1]
    assert relativization_dual_check(CHAIN_XY, 0b10).ok
    with pytest.raises(DomainError):
        relativize(m, 0)


def test_famax_examples():
    b = powerset_lattice(2)
    _, uf, rep = famax_quotient(b, FilterOrIdeal("filter", 1 << 3))
    assert rep.ok and uf.mask in (0b1010, 0b1100)
    _, uf, rep = famax_quotient(b, FilterOrIdeal("filter", 0b1010))
    assert rep.ok and uf.mask == 0b1010
    b3 = powerset_lattice(3)
    f = b3.up[0b110]
    _, uf, rep = famax_quotient(b3, FilterOrIdeal("filter", f))
    assert rep.ok and uf.mask & f == f


def test_famax_rejects_improper_and_non_boolean():
    with pytest.raises(PreconditionError):
        famax_quotient(powerset_lattice(2), FilterOrIdeal("filter", 0b1111))
    with pytest.raises(DomainError):
        famax_quotient(DLattice.chain(3), FilterOrIdeal("filter", 0b100))


def test_cluster_quotient_examples():
    rho, rep = cluster_quotient(RelSpace(Poset.diamond().leq))
    assert rep.ok and find_isomorphism(rho, Poset.diamond()) is not None
    rho, rep = cluster_quotient(RelSpace(np.ones((3, 3), dtype=bool)))
    assert rep.ok and rho.size == 1 and rep.witness["fixpoints"] == 2
    two_below = RelSpace(np.array([[1, 1, 1], [1, 1, 1], [0, 0, 1]], dtype=bool))
    rho, rep = cluster_quotient(two_below)
    assert rep.ok and find_isomorphism(rho, Poset.chain(2)) is not None


@given(relspaces())
def test_jonsson_tarski_round_trip(s):
    m = algebra_from_space(s)
    back, rep = space_from_algebra(m)
    assert rep.ok and back == s
    a, b = class_checks(s), class_checks(m)
    assert a == b


@given(relspaces(max_size=3), st.data())
def test_round_trip_survives_relabelling(s, data):
    m = algebra_from_space(s)
    perm = data.draw(st.permutations(range(m.size)))
    pm = permute_algebra(m, perm)
    back, rep = space_from_algebra(pm)
    assert rep.ok and back.size == s.size
    assert any(np.array_equal(back.rel[np.ix_(q, q)], s.rel)
               for q in itertools.permutations(range(s.size)))
    assert class_checks(back) == class_checks(s)


@given(relspaces(), st.data())
def test_relativization_and_eqmax(s, data):
    c = data.draw(st.integers(1, (1 << s.size) - 1))
    assert relativization_dual_check(s, c).ok
    assert eqmax(s, c)


@given(relspaces())
def test_reflexivization_preserves_qmax(s):
    if not s.is_k4():
        return
    plus = reflexivize(s)
    assert class_checks(reflexivize(algebra_from_space(s)))["isS4"]
    assert qmax(s) == qmax(plus)
