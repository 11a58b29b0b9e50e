"""Seeded corpora of posets, lattices, relations and modal algebras."""
from functools import lru_cache

import numpy as np

from .dlattice import DLattice, from_upsets
from .modal import RelSpace, algebra_from_space, permute_algebra
from .poset import Poset, find_isomorphism, random_poset

DEFAULT_SEED = 20240917


def posets(seed=DEFAULT_SEED, count=240, max_size=6):
    """Random posets of sizes 1..max_size, deterministic in ``seed``."""
    rng = np.random.default_rng(seed)
    out = [Poset.chain(1), Poset.chain(2), Poset.antichain(2), Poset.diamond()]
    while len(out) < count:
        out.append(random_poset(rng, int(rng.integers(1, max_size + 1))))
    return out


def all_posets(n):
    """One representative per isomorphism type of n-element posets.

    Each n-poset arises from an (n-1)-poset by adding a maximal element above a downset.
    """
    return list(_all_posets(n))


@lru_cache(maxsize=None)
def _all_posets(n):
    if n == 0:
        return (Poset(np.zeros((0, 0), dtype=bool), check=False),)
    buckets = {}
    for q in _all_posets(n - 1):
        for d in [0] + [m for m in q.downsets() if m]:
            m = np.zeros((n, n), dtype=bool)
            m[:-1, :-1] = q.leq
            for i in range(n - 1):
                m[i, -1] = d >> i & 1
            m[-1, -1] = True
            p = Poset(m, check=False)
            key = _signature(p)
            bucket = buckets.setdefault(key, [])
            if not any(find_isomorphism(p, r) is not None for r in bucket):
                bucket.append(p)
    return tuple(p for b in buckets.values() for p in b)


def _signature(p):
    ups = p.leq.sum(axis=1)
    downs = p.leq.sum(axis=0)
    return tuple(sorted(zip(ups.tolist(), downs.tolist())))


def small_lattices(max_elements=6):
    """Every distributive lattice with at most ``max_elements`` elements, up to isomorphism.

    Built as upset lattices of all posets small enough (Birkhoff). Non-isomorphic
    posets give non-isomorphic lattices, so no deduplication is needed.
    """
    out = []
    for n in range(0, max_elements):
        for p in (all_posets(n) if n else [Poset(np.zeros((0, 0), dtype=bool))]):
            if len(p.upsets()) <= max_elements:
                out.append(from_upsets(p))
    return out


def lattices(seed=DEFAULT_SEED, count=240, max_size=6):
    """Upset lattices of the random poset corpus plus hand-picked ones."""
    hand = [DLattice.chain(2), DLattice.chain(3), DLattice.boolean(2), DLattice.boolean(3)]
    return hand + [from_upsets(p) for p in posets(seed, count, max_size)]


def pentagon():
    return Poset.from_pairs(5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)])


def diamond_m3():
    return Poset.from_pairs(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])


def all_relations(n):
    """Every relation on n worlds, in bitmask order."""
    for bits in range(1 << (n * n)):
        yield relation_from_bits(n, bits)


def relation_from_bits(n, bits):
    succ = [(bits >> (x * n)) & ((1 << n) - 1) for x in range(n)]
    return RelSpace.from_succ(succ)


def random_relations(seed, count, sizes=(4, 5)):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        n = int(rng.choice(sizes))
        out.append(RelSpace(rng.random((n, n)) < rng.uniform(0.1, 0.8)))
    return out


def abstract_modal_algebras(seed=DEFAULT_SEED, count=60, sizes=(1, 2, 3, 4)):
    """Powerset modal algebras with their elements relabelled at random."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        n = int(rng.choice(sizes))
        s = RelSpace(rng.random((n, n)) < rng.uniform(0.1, 0.8))
        m = algebra_from_space(s)
        out.append(permute_algebra(m, rng.permutation(m.size)))
    return out


def transitive_relations(seed, count, sizes=(2, 3, 4, 5)):
    """Random K4 relations (transitive closures of random relations, diagonal kept random)."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        n = int(rng.choice(sizes))
        m = rng.random((n, n)) < rng.uniform(0.1, 0.6)
        for k in range(n):
            m = m | (m[:, k, None] & m[None, k, :])
        out.append(RelSpace(m))
    return out
