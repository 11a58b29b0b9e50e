import pytest
from hypothesis import given, strategies as st

from findual.errors import CapacityError
from findual.freedl import (
    AntichainTerm, count_antichains, dual_is_cube, from_truth_table, generate_free,
    implication_lemma, implication_oracle, meet_irreducible_decomposition,
    monotone_truth_tables, normalize,
)

X, Y, Z = 0b001, 0b010, 0b100


def gen(n, i):
    return AntichainTerm.gen(n, i)


def test_normalize_examples():
    assert normalize([X, X | Y], 2).meets == (X,)
    assert normalize([0, X], 2) == AntichainTerm.one(2)
    assert (gen(2, 0) & gen(2, 1)).meets == (X | Y,)


def test_generate_free_small_sizes():
    assert [generate_free(n)[0].size for n in range(5)] == [2, 3, 6, 20, 168]
    assert [count_antichains(n) for n in range(5)] == [2, 3, 6, 20, 168]


def test_terms_are_ordered_like_the_lattice():
    lat, terms = generate_free(3)
    for i, s in enumerate(terms):
        for j, t in enumerate(terms):
            assert lat.le(i, j) == (s <= t)


def test_meet_irreducible_examples():
    n = 2
    assert meet_irreducible_decomposition(gen(n, 0) & gen(n, 1)) == {frozenset({0}), frozenset({1})}
    assert meet_irreducible_decomposition(gen(n, 0) | gen(n, 1)) == {frozenset({0, 1})}
    assert meet_irreducible_decomposition(gen(n, 0)) == {frozenset({0})}


def test_implication_examples():
    x, y, z = (gen(3, i) for i in range(3))
    assert implication_lemma(x & y, x | z) == AntichainTerm.one(3)
    assert implication_oracle(x & y, x | z) == AntichainTerm.one(3)
    x2, y2 = gen(2, 0), gen(2, 1)
    assert implication_lemma(x2, y2) == y2 == implication_oracle(x2, y2)
    for q in generate_free(2)[1]:
        assert implication_lemma(AntichainTerm.zero(2), q) == AntichainTerm.one(2)
    assert implication_oracle(x, x) == AntichainTerm.one(3)
    assert implication_oracle(x2, AntichainTerm.zero(2)) == AntichainTerm.zero(2)


@pytest.mark.parametrize("n", range(4))
def test_implication_lemma_matches_oracle(n):
    _, terms = generate_free(n)
    for p in terms:
        for q in terms:
            assert implication_lemma(p, q) == implication_oracle(p, q), (str(p), str(q))


@pytest.mark.parametrize("n", range(5))
def test_dual_is_cube(n):
    assert dual_is_cube(n).ok


def test_generator_bound():
    with pytest.raises(CapacityError):
        generate_free(6)


terms3 = st.lists(st.integers(0, 7), max_size=5).map(lambda ms: normalize(ms, 3))


@given(terms3)
def test_normalize_is_idempotent_and_truth_table_faithful(t):
    assert normalize(list(t.meets), 3) == t
    assert from_truth_table(3, t.truth_table()) == t


@given(terms3, terms3)
def test_meet_join_match_truth_tables(s, t):
    assert (s & t).truth_table() == s.truth_table() & t.truth_table()
    assert (s | t).truth_table() == s.truth_table() | t.truth_table()
    assert (s <= t) == (s.truth_table() & ~t.truth_table() == 0)


@given(st.sets(st.integers(0, 7), min_size=1), st.sets(st.integers(0, 7), min_size=1))
def test_meet_below_join_iff_generator_sets_meet(a, b):
    # a meet of generators lies below a join of generators iff they share a generator
    a = {g % 3 for g in a}
    b = {g % 3 for g in b}
    meet = AntichainTerm(3, (sum(1 << g for g in a),))
    join = normalize([1 << g for g in b], 3)
    assert (meet <= join) == bool(a & b)


def test_monotone_tables_are_monotone():
    for tt in monotone_truth_tables(3):
        for a in range(8):
            for b in range(8):
                if a & b == a and tt >> a & 1:
                    assert tt >> b & 1
