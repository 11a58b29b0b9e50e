import time

from hypothesis import given, strategies as st

from findual.omegaspace import (
    Chain, TailSet, classify, down_closure_sym, restrict_to, truncation, up_closure_sym,
    verify_example,
)

A_W = TailSet.of(a_omega=True)


def test_classify_examples():
    assert classify(TailSet.full())["clopen"]
    assert classify(A_W) == {"open": False, "closed": True, "clopen": False}
    cofinite_a = TailSet(Chain(frozenset({0, 2}), True, True), Chain())
    assert classify(cofinite_a)["clopen"]


def test_down_closure_examples():
    down_b0 = down_closure_sym(TailSet.of(b=[0]))
    assert down_b0 == TailSet(Chain(), Chain(frozenset(), True, True))
    assert down_closure_sym(A_W) == TailSet.of(a_omega=True, b_omega=True)
    assert down_closure_sym(TailSet.empty()) == TailSet.empty()


def test_verify_example():
    start = time.perf_counter()
    rep = verify_example()
    assert rep.ok and len(rep.children) == 4
    assert all(c.ok for c in rep.children)
    assert time.perf_counter() - start < 1.0


chains = st.builds(lambda fin, tail, omega: Chain(frozenset(fin), tail, omega),
                   st.sets(st.integers(0, 5), max_size=4), st.booleans(), st.booleans())
tailsets = st.builds(TailSet, chains, chains)


@given(tailsets)
def test_complement_swaps_open_and_closed(u):
    a, b = classify(u), classify(u.complement())
    assert a["open"] == b["closed"] and a["closed"] == b["open"]
    assert u.complement().complement() == u


@given(tailsets, tailsets)
def test_down_closure_is_a_closure(u, v):
    d = down_closure_sym(u)
    assert u.issubset(d)
    assert down_closure_sym(d) == d
    if u.issubset(v):
        assert d.issubset(down_closure_sym(v))
    assert up_closure_sym(up_closure_sym(u)) == up_closure_sym(u)


@given(tailsets)
def test_closures_agree_with_truncation(u):
    p, labels = truncation(8)
    m = restrict_to(u, labels)
    assert restrict_to(down_closure_sym(u), labels) == p.down_closure_mask(m)
    assert restrict_to(up_closure_sym(u), labels) == p.up_closure_mask(m)
