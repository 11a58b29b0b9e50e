import itertools

import numpy as np
import pytest
from hypothesis import given

from conftest import posets
from findual.dlattice import DLattice, from_upsets, powerset_lattice
from findual.errors import InputError
from findual.heyting import (booleanization, co_residuation_holds, compute_arrow,
                             dual_arrow_formula, dual_formula_table_check)
from findual.poset import Poset


def _arrow_oracle(d, a, b):
    cands = [c for c in range(d.size) if d.le(int(d.meet[a, c]), b)]
    best = [c for c in cands if all(d.le(x, c) for x in cands)]
    assert len(best) == 1
    return best[0]


def test_chain_arrow():
    h = compute_arrow(DLattice.chain(3))
    assert [[int(x) for x in row] for row in h.arrow] == [[2, 2, 2], [0, 2, 2], [0, 1, 2]]
    assert h.negation_table() == [2, 0, 0]


def test_dual_arrow_formula_examples():
    p = Poset.chain(2)
    for u in p.upsets():
        _, co, ok = dual_arrow_formula(p, u, u)
        assert co == frozenset() and ok
    imp, co, ok = dual_arrow_formula(p, 0, 0b10)
    assert co == frozenset({1}) and ok
    d = Poset.diamond()
    for v in d.upsets():
        imp, _, ok = dual_arrow_formula(d, d.full, v)
        assert ok and imp == frozenset(range(4)) - d.down_closure(set(range(4)) - set(
            i for i in range(4) if v >> i & 1))


def test_dual_arrow_formula_rejects_non_upsets():
    with pytest.raises(InputError):
        dual_arrow_formula(Poset.chain(2), 0b01, 0)


def test_booleanization_examples():
    b4 = powerset_lattice(2)
    boole, reg, rep = booleanization(compute_arrow(b4))
    assert rep.ok and reg == [0, 1, 2, 3] and boole.size == 4
    boole, reg, rep = booleanization(compute_arrow(DLattice.chain(3)))
    assert rep.ok and reg == [0, 2] and boole.size == 2
    assert rep.witness["max_filters"] == (1, 1)


@given(posets(max_size=5))
def test_arrow_matches_oracle_and_dual_formulas(p):
    d = from_upsets(p)
    h = compute_arrow(d, co=True)
    for a, b in itertools.product(range(d.size), repeat=2):
        assert h.arrow[a, b] == _arrow_oracle(d, a, b)
    assert co_residuation_holds(h)
    assert dual_formula_table_check(p) is None


@given(posets(max_size=5))
def test_booleanization_bijection(p):
    d = from_upsets(p)
    if d.is_trivial():
        return
    boole, reg, rep = booleanization(compute_arrow(d))
    assert rep.ok and boole.is_boolean()
    assert reg[0] == d.bottom and reg[-1] == d.top


def test_residual_tables_are_read_only():
    h = compute_arrow(DLattice.chain(2))
    with pytest.raises(ValueError):
        h.arrow[0, 0] = 1
    assert isinstance(h.arrow, np.ndarray)
