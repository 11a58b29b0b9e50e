"""Finite Priestley and Stone duality.

Dual points are prime filters indexed by ascending bitmask. Every claimed
isomorphism comes with its explicit index map.
"""
from dataclasses import dataclass

import numpy as np

from .bits import iter_bits
from .dlattice import enumerate_prime_filters, from_upsets, is_isomorphism, quotient_lattice
from .errors import DomainError
from .poset import Poset, is_order_isomorphism
from .report import Report


@dataclass
class DualityWitness:
    forward: list           # lattice element -> index in the upset lattice of the dual
    forward_sets: list      # lattice element -> upset bitmask over dual points
    points: list            # dual point -> prime filter (bitmask over lattice elements)
    iso: bool


def priestley_dual(d):
    """Prime-filter poset of ``d`` and the witness that a -> {x : a in x} is an isomorphism."""
    d.require_nontrivial()
    pfs = [pf.mask for pf in enumerate_prime_filters(d)]
    k = len(pfs)
    leq = np.array([[pfs[i] & ~pfs[j] == 0 for j in range(k)] for i in range(k)],
                   dtype=bool).reshape(k, k)
    dual = Poset(leq, check=False)
    sigma_sets = [sum(1 << x for x in range(k) if pfs[x] >> a & 1) for a in range(d.size)]
    ups = from_upsets(dual)
    index = {m: i for i, m in enumerate(ups.sets)}
    forward = [index.get(s, -1) for s in sigma_sets]
    iso = -1 not in forward and is_isomorphism(d, ups, forward)
    return dual, DualityWitness(forward, sigma_sets, pfs, iso)


def round_trip_poset(p):
    """Check p is isomorphic to the prime-filter poset of its upset lattice via x -> {U : x in U}."""
    ups = from_upsets(p)
    if ups.is_trivial():
        # empty poset: one upset, no prime filters
        return Report("round_trip_poset", p.size == 0, {"map": []})
    dual, _ = priestley_dual(ups)
    point_index = {m: i for i, m in enumerate(_points(ups))}
    f = [point_index.get(_filter_of_point(ups, x), -1) for x in range(p.size)]
    ok = -1 not in f and is_order_isomorphism(p, dual, f)
    return Report("round_trip_poset", ok, {"map": f})


def _points(ups):
    return [pf.mask for pf in enumerate_prime_filters(ups)]


def _filter_of_point(ups, x):
    return sum(1 << i for i, u in enumerate(ups.sets) if u >> x & 1)


def round_trip_lattice(d):
    """Check d is isomorphic to the upset lattice of its dual; returns the report."""
    _, w = priestley_dual(d)
    return Report("round_trip_lattice", w.iso, {"map": w.forward})


def stone_dual(b):
    """Ultrafilter space of a Boolean lattice (an antichain)."""
    bad = b.complement_free()
    if bad is not None:
        raise DomainError(f"element {bad} has no complement; lattice is not Boolean")
    dual, w = priestley_dual(b)
    if dual.covers():
        raise AssertionError("prime filters of a Boolean lattice are not an antichain")
    return dual, w


def surjection_to_subspace(d, kernel):
    """Dual of the quotient d/kernel, embedded into the dual of d by inverse image.

    Returns (quotient dual, embedding list, report).
    """
    d.require_nontrivial()
    quo, proj = quotient_lattice(d, kernel)
    big, _ = priestley_dual(d)
    big_pts = _points_of(d)
    if quo.is_trivial():
        return Poset(np.zeros((0, 0), dtype=bool), check=False), [], Report(
            "surjection_to_subspace", True, {"quotient_size": 1, "image": []})
    small, _ = priestley_dual(quo)
    small_pts = _points_of(quo)
    index = {m: i for i, m in enumerate(big_pts)}
    emb = []
    for f in small_pts:
        pre = sum(1 << a for a in range(d.size) if f >> proj[a] & 1)
        emb.append(index.get(pre, -1))
    injective = -1 not in emb and len(set(emb)) == len(emb)
    order_ok = injective and all(
        small.le(i, j) == big.le(emb[i], emb[j])
        for i in range(small.size) for j in range(small.size))
    saturated = [i for i, f in enumerate(big_pts)
                 if all((f >> a & 1) == (f >> b & 1)
                        for a in range(d.size) for b in range(d.size) if proj[a] == proj[b])]
    image_ok = sorted(emb) == saturated
    rep = Report("surjection_to_subspace", injective and order_ok and image_ok,
                 {"quotient_size": quo.size, "embedding": emb, "saturated": saturated,
                  "injective": injective, "order_embedding": order_ok})
    return small, emb, rep


def _points_of(d):
    return [pf.mask for pf in enumerate_prime_filters(d)]


def esakia_condition_finite(p, s=None):
    """Down-closure of any subset of a finite discrete space is clopen: always True."""
    return True


def maximal_ideals_vs_min_points(d):
    """Maximal ideals of d versus minimal prime filters, via complements."""
    from .dlattice import maximal_ideals
    dual, w = priestley_dual(d)
    mins = {w.points[x] for x in iter_bits(dual.min_points_mask(dual.full))}
    comps = {d.full & ~m.mask for m in maximal_ideals(d)}
    return mins == comps
