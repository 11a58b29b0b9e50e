from findual import corpus
from findual.poset import find_isomorphism


def test_all_posets_counts_unlabelled_posets():
    # unlabelled posets on 0..6 points
    assert [len(corpus.all_posets(n)) for n in range(7)] == [1, 1, 2, 5, 16, 63, 318]


def test_all_posets_are_pairwise_non_isomorphic():
    ps = corpus.all_posets(4)
    for i, p in enumerate(ps):
        for q in ps[i + 1:]:
            assert find_isomorphism(p, q) is None


def test_small_lattices_count_distributive_lattices():
    sizes = sorted(d.size for d in corpus.small_lattices(8))
    # distributive lattices with 1..8 elements: 1, 1, 1, 2, 3, 5, 8, 15
    assert [sizes.count(k) for k in range(1, 9)] == [1, 1, 1, 2, 3, 5, 8, 15]


def test_seeded_corpora_are_deterministic():
    assert corpus.posets(7, count=30) == corpus.posets(7, count=30)
    assert corpus.random_relations(7, 20) == corpus.random_relations(7, 20)
    assert corpus.posets(7, count=30) != corpus.posets(8, count=30)


def test_exhaustive_relations():
    assert len(list(corpus.all_relations(3))) == 512
    assert len(set(corpus.all_relations(2))) == 16


def test_abstract_algebras_are_not_powerset_labelled():
    algebras = corpus.abstract_modal_algebras(corpus.DEFAULT_SEED, 10, sizes=(3,))
    assert any(list(m.base.meet[1]) != [0, 1, 0, 1, 0, 1, 0, 1] for m in algebras)
