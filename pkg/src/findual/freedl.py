"""Free bounded distributive lattices on up to five generators.

Terms are antichains of generator subsets read as joins of meets. A subset
is a bitmask over generators; generator i is bit i. Internally a term is
also identified with its truth table: the monotone Boolean function whose
bit A (A an assignment, as a generator bitmask) is set iff some meet in the
term is contained in A.
"""
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .bits import iter_bits
from .dlattice import DLattice, from_upsets, is_isomorphism
from .errors import CapacityError, InputError
from .poset import Poset, is_order_isomorphism
from .report import Report

MAX_GENERATORS = 5
ORACLE_MAX_GENERATORS = 5
NAMES = "xyzwv"


def _check_n(n, bound=MAX_GENERATORS):
    if not isinstance(n, int) or n < 0:
        raise InputError(f"generator count must be a nonnegative int, got {n!r}")
    if n > bound:
        raise CapacityError("free distributive lattice generators", n, bound)


def _minimize(masks):
    masks = sorted(set(masks), key=lambda m: (bin(m).count("1"), m))
    keep = []
    for m in masks:
        if not any(k & m == k for k in keep):
            keep.append(m)
    return tuple(sorted(keep))


@dataclass(frozen=True)
class AntichainTerm:
    n: int
    meets: tuple

    @classmethod
    def zero(cls, n):
        return cls(n, ())

    @classmethod
    def one(cls, n):
        return cls(n, (0,))

    @classmethod
    def gen(cls, n, i):
        return cls(n, (1 << i,))

    def is_zero(self):
        return not self.meets

    def is_one(self):
        return self.meets == (0,)

    def join(self, other):
        return normalize(self.meets + other.meets, self.n)

    def meet(self, other):
        return normalize([a | b for a in self.meets for b in other.meets], self.n)

    __or__ = join
    __and__ = meet

    def __le__(self, other):
        return all(any(t & s == t for t in other.meets) for s in self.meets)

    def truth_table(self):
        tt = 0
        for a in range(1 << self.n):
            if any(s & a == s for s in self.meets):
                tt |= 1 << a
        return tt

    def __str__(self):
        if self.is_zero():
            return "0"
        if self.is_one():
            return "1"
        parts = []
        for s in self.meets:
            names = [NAMES[i] if self.n <= len(NAMES) else f"x{i}" for i in iter_bits(s)]
            parts.append("&".join(names) if len(names) == 1 or len(self.meets) == 1
                         else "(" + "&".join(names) + ")")
        return " | ".join(parts)


def _as_mask(s):
    if isinstance(s, (int, np.integer)):
        return int(s)
    m = 0
    for i in s:
        m |= 1 << i
    return m


def normalize(raw, n):
    """Canonical antichain: drop every subset that contains another."""
    _check_n(n)
    masks = [_as_mask(s) for s in raw]
    if any(m < 0 or m >> n for m in masks):
        raise InputError(f"generator subset out of range for n={n}")
    return AntichainTerm(n, _minimize(masks))


def from_truth_table(n, tt):
    return AntichainTerm(n, _minimize([a for a in range(1 << n) if tt >> a & 1]))


def monotone_truth_tables(n):
    """All monotone Boolean functions of n variables, ascending, by splitting on the top variable."""
    _check_n(n)
    return list(_monotone(n))


@lru_cache(maxsize=None)
def _monotone(n):
    if n == 0:
        return (0, 1)
    prev = _monotone(n - 1)
    half = 1 << (n - 1)
    out = [f0 | f1 << half for f0 in prev for f1 in prev if f0 & ~f1 == 0]
    return tuple(sorted(out))


def count_antichains(n):
    """Number of antichains of subsets of an n-set, by plain backtracking."""
    subsets = list(range(1 << n))

    def rec(k, chosen):
        if k == len(subsets):
            return 1
        s = subsets[k]
        total = rec(k + 1, chosen)
        if all(not (c & s == c or c & s == s) for c in chosen):
            total += rec(k + 1, chosen + [s])
        return total

    return rec(0, [])


@lru_cache(maxsize=None)
def generate_free(n):
    """Free bounded distributive lattice on n generators and its term list.

    Element k is ``terms[k]``; the index order is ascending truth table, so
    0 is bottom and the last element is top.
    """
    _check_n(n)
    tts = monotone_truth_tables(n)
    lat = DLattice.from_sets(tts)
    terms = tuple(from_truth_table(n, tt) for tt in tts)
    return lat, terms


def term_index(n):
    _, terms = generate_free(n)
    return {t: i for i, t in enumerate(terms)}


def minimal_transversals(family, n):
    """Minimal hitting sets of a family of generator masks (Berge product-and-minimize)."""
    trans = [0]
    for edge in family:
        nxt = []
        for t in trans:
            if t & edge:
                nxt.append(t)
            else:
                nxt.extend(t | 1 << g for g in iter_bits(edge))
        trans = list(_minimize(nxt))
    return tuple(sorted(trans))


def meet_irreducible_decomposition(t):
    """Meet-of-joins form: the minimal transversals B of the term's meets.

    ``t`` equals the meet over B of the join of the generators in B; the
    constant 1 gives the empty family and 0 gives the single empty join.
    """
    blocks = minimal_transversals(t.meets, t.n)
    if expand_meet_of_joins(blocks, t.n) != t:
        raise AssertionError(f"meet-of-joins form does not expand back to {t}")
    return frozenset(frozenset(iter_bits(b)) for b in blocks)


def expand_meet_of_joins(blocks, n):
    acc = AntichainTerm.one(n)
    for b in blocks:
        acc = acc.meet(AntichainTerm(n, tuple(sorted(1 << g for g in iter_bits(b)))))
    return acc


def implication_lemma(p, q):
    """Residual p -> q as the meet of S -> T over join-irreducibles S of p and meet-irreducibles T of q.

    Each S -> T is 1 when the meet-set S meets the join-set T, else T.
    """
    if p.n != q.n:
        raise InputError("terms over different generator counts")
    _check_n(p.n)
    n = p.n
    blocks = minimal_transversals(q.meets, n)
    acc = AntichainTerm.one(n)
    for s in p.meets:
        for b in blocks:
            if s & b:
                continue
            acc = acc.meet(AntichainTerm(n, tuple(sorted(1 << g for g in iter_bits(b)))))
    return acc


def implication_oracle(p, q):
    """Join of all r in the free lattice with p & r <= q, by scanning every element."""
    if p.n != q.n:
        raise InputError("terms over different generator counts")
    _check_n(p.n, ORACLE_MAX_GENERATORS)
    tts = _tt_array(p.n)
    pt, qt = p.truth_table(), q.truth_table()
    ok = (tts & np.uint64(pt) & ~np.uint64(qt)) == 0
    return from_truth_table(p.n, int(np.bitwise_or.reduce(tts[ok])))


@lru_cache(maxsize=None)
def _tt_array(n):
    a = np.array(monotone_truth_tables(n), dtype=np.uint64)
    a.setflags(write=False)
    return a


def cube_index(n, a):
    """Index of the characteristic vector of generator set ``a`` in the n-fold 2-chain power."""
    return sum(1 << (n - 1 - i) for i in iter_bits(a))


def dual_is_cube(n):
    """Prime-filter poset of the free lattice versus the cube; explicit isomorphism."""
    from .duality import priestley_dual
    _check_n(n, 4)
    lat, terms = generate_free(n)
    dual, w = priestley_dual(lat)
    cube = Poset.chain(2).power(n)
    index = {t: i for i, t in enumerate(terms)}
    point_of = {m: x for x, m in enumerate(w.points)}
    iso = [-1] * dual.size
    for a in range(1 << n):
        gen_filter = lat.up[index[AntichainTerm(n, (a,))]]
        x = point_of.get(gen_filter)
        if x is not None:
            iso[x] = cube_index(n, a)
    ok = -1 not in iso and is_order_isomorphism(dual, cube, iso)
    # free lattice versus upsets of the cube
    ups = from_upsets(cube)
    up_index = {m: i for i, m in enumerate(ups.sets)}
    lat_map = []
    for t in terms:
        tt = t.truth_table()
        lat_map.append(up_index.get(sum(1 << cube_index(n, a) for a in iter_bits(tt)), -1))
    lat_ok = -1 not in lat_map and is_isomorphism(lat, ups, lat_map)
    return Report("dual_is_cube", ok and lat_ok,
                  {"n": n, "points": dual.size, "iso": iso, "upset_iso": lat_ok})
