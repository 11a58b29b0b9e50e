"""Finite bounded distributive lattices, their filters and ideals.

A lattice is a pair of index tables ``meet``/``join``; the order is derived
(``a <= b`` iff ``meet[a, b] == a``). Filters and ideals are bitmasks over
element indices. All ideals are nonempty (contain bottom) and all filters
contain top.
"""
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import kernels
from .bits import check_range, iter_bits, lowest, to_set
from .errors import DomainError, InputError, PreconditionError, WellDefinednessError
from .limits import guard
from .poset import Poset, _row_masks
from .report import Report

# exhaustive lattice-law checks are O(n^3); above this size only the
# cheaper structural checks run
FULL_CHECK_LIMIT = 400


class DLattice:
    def __init__(self, meet, join, validate=True):
        meet = np.array(meet, dtype=np.int32, copy=True)
        join = np.array(join, dtype=np.int32, copy=True)
        n = meet.shape[0]
        if meet.shape != (n, n) or join.shape != (n, n) or n == 0:
            raise InputError("meet/join must be nonempty square tables of equal shape")
        if meet.min() < 0 or meet.max() >= n or join.min() < 0 or join.max() >= n:
            raise InputError("meet/join table entries out of range")
        meet.setflags(write=False)
        join.setflags(write=False)
        self.meet = meet
        self.join = join
        self.size = n
        leq = meet == np.arange(n)[:, None]
        leq.setflags(write=False)
        self.leq = leq
        self.up = tuple(_row_masks(leq))
        self.down = tuple(_row_masks(leq.T))
        self.full = (1 << n) - 1
        bottoms = [a for a in range(n) if self.up[a] == self.full]
        tops = [a for a in range(n) if self.down[a] == self.full]
        if validate:
            _validate(self)
        if not bottoms or not tops:
            raise InputError("lattice has no bottom or no top")
        self.bottom = bottoms[0]
        self.top = tops[0]

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_sets(cls, masks):
        """Ring of sets under intersection/union; masks must be closed under both."""
        masks = sorted(set(int(m) for m in masks))
        guard("lattice", len(masks))
        if masks and masks[-1].bit_length() <= 63:
            meet, join = kernels.tables_from_masks(np.array(masks, dtype=np.uint64))
        else:
            meet, join = _tables_from_masks_py(masks)
        if (meet < 0).any() or (join < 0).any():
            raise InputError("family of sets is not closed under intersection and union")
        lat = cls(meet, join, validate=False)
        lat.sets = tuple(masks)
        return lat

    @classmethod
    def from_poset(cls, p):
        """Lattice whose order is ``p``; InputError when p is not a lattice."""
        n = p.size
        meet = np.empty((n, n), dtype=np.int32)
        join = np.empty((n, n), dtype=np.int32)
        for a in range(n):
            for b in range(a, n):
                meet[a, b] = meet[b, a] = _extremum(p.down, p.down[a] & p.down[b], a, b, "meet")
                join[a, b] = join[b, a] = _extremum(p.up, p.up[a] & p.up[b], a, b, "join")
        return cls(meet, join)

    @classmethod
    def chain(cls, n):
        return cls.from_poset(Poset.chain(n))

    @classmethod
    def boolean(cls, k):
        """Powerset of a k-set; element index == subset bitmask."""
        return powerset_lattice(k)

    # -- basic queries ------------------------------------------------------

    def le(self, a, b):
        return bool(self.up[a] >> b & 1)

    def poset(self):
        return Poset(self.leq, check=False)

    def order_dual(self):
        return DLattice(self.join, self.meet, validate=False)

    def is_trivial(self):
        return self.bottom == self.top

    def require_nontrivial(self):
        if self.is_trivial():
            raise DomainError("operation needs a nontrivial lattice (bottom != top)")

    def __eq__(self, other):
        return (isinstance(other, DLattice) and np.array_equal(self.meet, other.meet)
                and np.array_equal(self.join, other.join))

    def __hash__(self):
        return hash((self.size, self.meet.tobytes()))

    def __repr__(self):
        return f"DLattice(size={self.size})"

    def atoms(self):
        return [a for a in range(self.size)
                if a != self.bottom and self.down[a] == (1 << a) | (1 << self.bottom)]

    def complement(self, a):
        """Least-index complement of ``a``, or None."""
        for b in range(self.size):
            if self.meet[a, b] == self.bottom and self.join[a, b] == self.top:
                return b
        return None

    def complement_free(self):
        """First element without a complement, or None if the lattice is Boolean."""
        for a in range(self.size):
            if self.complement(a) is None:
                return a
        return None

    def is_boolean(self):
        return self.complement_free() is None

    def negation_table(self):
        cached = self.__dict__.get("_neg")
        if cached is not None:
            return cached
        neg = [self.complement(a) for a in range(self.size)]
        if None in neg:
            raise DomainError(f"element {neg.index(None)} has no complement; lattice is not Boolean")
        self._neg = neg
        return neg

    def join_all(self, m):
        acc = self.bottom
        for a in iter_bits(m):
            acc = int(self.join[acc, a])
        return acc

    def meet_all(self, m):
        acc = self.top
        for a in iter_bits(m):
            acc = int(self.meet[acc, a])
        return acc

    # -- filters and ideals (bitmasks) -------------------------------------

    def is_ideal_mask(self, m):
        if not m >> self.bottom & 1:
            return False
        inside = _bool_vec(m, self.size)
        if (self.down_closure(m) != m):
            return False
        return bool(inside[self.join[np.ix_(inside, inside)]].all())

    def is_filter_mask(self, m):
        if not m >> self.top & 1:
            return False
        inside = _bool_vec(m, self.size)
        if self.up_closure(m) != m:
            return False
        return bool(inside[self.meet[np.ix_(inside, inside)]].all())

    def down_closure(self, m):
        out = 0
        for a in iter_bits(m):
            out |= self.down[a]
        return out

    def up_closure(self, m):
        out = 0
        for a in iter_bits(m):
            out |= self.up[a]
        return out

    def is_prime_ideal_mask(self, m):
        if not self.is_ideal_mask(m) or m >> self.top & 1:
            return False
        return not _split(self.meet, _bool_vec(m, self.size))

    def is_prime_filter_mask(self, m):
        if not self.is_filter_mask(m) or m >> self.bottom & 1:
            return False
        return not _split(self.join, _bool_vec(m, self.size))


def _split(table, inside):
    """True iff some a, b outside ``inside`` have table[a, b] inside."""
    hit = inside[table]
    return bool((hit & ~inside[:, None] & ~inside[None, :]).any())


def _bool_vec(m, n):
    v = np.zeros(n, dtype=bool)
    for a in iter_bits(m):
        v[a] = True
    return v


def _extremum(rows, bound, a, b, what):
    for c in iter_bits(bound):
        if rows[c] == bound:
            return c
    raise InputError(f"elements {a} and {b} have no {what}; not a lattice")


def _tables_from_masks_py(masks):
    index = {m: i for i, m in enumerate(masks)}
    n = len(masks)
    meet = np.empty((n, n), dtype=np.int32)
    join = np.empty((n, n), dtype=np.int32)
    for i, a in enumerate(masks):
        for j, b in enumerate(masks):
            meet[i, j] = index.get(a & b, -1)
            join[i, j] = index.get(a | b, -1)
    return meet, join


def _validate(lat):
    meet, join, n = lat.meet, lat.join, lat.size
    ar = np.arange(n)
    for name, t in (("meet", meet), ("join", join)):
        if not np.array_equal(t, t.T):
            raise InputError(f"{name} table not commutative")
        if not np.array_equal(t[ar, ar], ar):
            raise InputError(f"{name} table not idempotent")
    if not np.array_equal(meet[ar[:, None], join], np.broadcast_to(ar[:, None], (n, n))):
        raise InputError("absorption a & (a | b) = a fails")
    if not np.array_equal(join == ar[None, :], lat.leq):
        raise InputError("order derived from meet disagrees with order derived from join")
    if n <= FULL_CHECK_LIMIT:
        for name, t in (("meet", meet), ("join", join)):
            for a in range(n):
                if not np.array_equal(t[t[a]][:, :], t[a][t]):
                    raise InputError(f"{name} table not associative at element {a}")
        bad = kernels.distributivity_violation(meet, join)
        if bad is not None:
            a, b, c = bad
            raise InputError(f"not distributive: {a} & ({b} | {c}) != ({a} & {b}) | ({a} & {c})")


@lru_cache(maxsize=None)
def powerset_lattice(k):
    guard("powerset lattice", 1 << k)
    lat = DLattice.from_sets(range(1 << k))
    return lat


# -- filters/ideals as values ----------------------------------------------

@dataclass(frozen=True)
class FilterOrIdeal:
    kind: str        # "filter" | "ideal"
    mask: int
    partner: "FilterOrIdeal | None" = None

    @property
    def members(self):
        return to_set(self.mask)

    def __contains__(self, a):
        return bool(self.mask >> a & 1)

    def complement(self, size):
        kind = "ideal" if self.kind == "filter" else "filter"
        return FilterOrIdeal(kind, ((1 << size) - 1) & ~self.mask)

    def is_proper(self, d):
        return not self.mask >> (d.bottom if self.kind == "filter" else d.top) & 1


def make_filter(d, members):
    m = check_range(members, d.size)
    if not d.is_filter_mask(m):
        raise InputError(f"{sorted(to_set(m))} is not a filter")
    return FilterOrIdeal("filter", m)


def make_ideal(d, members):
    m = check_range(members, d.size)
    if not d.is_ideal_mask(m):
        raise InputError(f"{sorted(to_set(m))} is not an ideal")
    return FilterOrIdeal("ideal", m)


def ideals(d, exhaustive=False):
    """All (nonempty) ideals as masks, ascending.

    Default route: principal ideals (complete in a finite lattice). With
    ``exhaustive`` every downset is generated and kept when join-closed.
    """
    if exhaustive:
        out = [m for m in d.poset().downsets() if m and d.is_ideal_mask(m)]
    else:
        out = sorted(set(d.down))
    return out


def filters(d, exhaustive=False):
    if exhaustive:
        return [m for m in d.poset().upsets() if m and d.is_filter_mask(m)]
    return sorted(set(d.up))


def from_upsets(p):
    """Lattice of all upsets of ``p``; index order is the upset bitmask order."""
    return DLattice.from_sets(p.upsets())


def enumerate_prime_filters(d):
    """Prime filters, ascending by bitmask, each tagged with its complement prime ideal."""
    d.require_nontrivial()
    out = []
    for m in filters(d):
        if d.is_prime_filter_mask(m):
            comp = d.full & ~m
            out.append(FilterOrIdeal("filter", m, FilterOrIdeal("ideal", comp)))
    return out


def enumerate_prime_ideals(d):
    d.require_nontrivial()
    out = []
    for m in ideals(d):
        if d.is_prime_ideal_mask(m):
            out.append(FilterOrIdeal("ideal", m, FilterOrIdeal("filter", d.full & ~m)))
    return out


def _maximal(masks, improper_bit):
    proper = [m for m in masks if not m >> improper_bit & 1]
    out = []
    for m in proper:
        larger = [k for k in masks if k != m and k & m == m]
        if all(k >> improper_bit & 1 for k in larger):
            out.append(m)
    return out


def maximal_ideals(d):
    d.require_nontrivial()
    return [FilterOrIdeal("ideal", m) for m in _maximal(ideals(d), d.top)]


def maximal_filters(d):
    d.require_nontrivial()
    return [FilterOrIdeal("filter", m) for m in _maximal(filters(d), d.bottom)]


def pit_witness(d, f, i):
    """Prime ideal containing ideal ``i`` and disjoint from filter ``f``.

    Chosen maximal among ideals with that property (such an ideal is prime), ties broken
    by least bitmask.
    """
    fm = f.mask if isinstance(f, FilterOrIdeal) else check_range(f, d.size)
    im = i.mask if isinstance(i, FilterOrIdeal) else check_range(i, d.size)
    if not d.is_filter_mask(fm):
        raise PreconditionError(f"{sorted(to_set(fm))} is not a filter")
    if not d.is_ideal_mask(im):
        raise PreconditionError(f"{sorted(to_set(im))} is not an ideal")
    if fm & im:
        raise PreconditionError(f"filter and ideal meet in {sorted(to_set(fm & im))}")
    cands = [m for m in ideals(d) if m & im == im and not m & fm]
    best = min(m for m in cands if not any(k != m and k & m == m for k in cands))
    if not d.is_prime_ideal_mask(best):
        raise AssertionError("maximal ideal disjoint from a filter is not prime")
    return FilterOrIdeal("ideal", best, FilterOrIdeal("filter", d.full & ~best))


def ideal_lattice(d):
    """Lattice of all ideals of ``d`` under inclusion and the map a -> index of the ideal below a.

    Meet is intersection; join is the ideal generated by the union.
    """
    ids = ideals(d)
    guard("ideal lattice", len(ids))
    index = {m: k for k, m in enumerate(ids)}
    n = len(ids)
    meet = np.empty((n, n), dtype=np.int32)
    join = np.empty((n, n), dtype=np.int32)
    for a, ia in enumerate(ids):
        for b, ib in enumerate(ids):
            meet[a, b] = index[ia & ib]
            join[a, b] = index[_generated_ideal(d, ia | ib)]
    lat = DLattice(meet, join)
    lat.sets = tuple(ids)
    e = [index[d.down[a]] for a in range(d.size)]
    if not is_embedding(d, lat, e):
        raise AssertionError("principal-ideal map is not a lattice embedding")
    return lat, e


def _generated_ideal(d, m):
    cur = d.down_closure(m)
    while True:
        nxt = cur
        for a in iter_bits(cur):
            for b in iter_bits(cur):
                nxt |= d.down[d.join[a, b]]
        if nxt == cur:
            return cur
        cur = nxt


def is_embedding(src, dst, f):
    """Injective map preserving meet, join, bottom and top."""
    f = np.asarray(f)
    if len(set(f.tolist())) != src.size:
        return False
    if f[src.bottom] != dst.bottom or f[src.top] != dst.top:
        return False
    return bool(np.array_equal(f[src.meet], dst.meet[f[:, None], f[None, :]])
                and np.array_equal(f[src.join], dst.join[f[:, None], f[None, :]]))


def is_isomorphism(src, dst, f):
    return src.size == dst.size and is_embedding(src, dst, f)


def find_lattice_isomorphism(a, b):
    from .poset import find_isomorphism
    return find_isomorphism(a.poset(), b.poset())


def clmax_pullback(d):
    """Pull every maximal ideal of Id(d) back along a -> (ideal below a) and check the proof step."""
    d.require_nontrivial()
    lat, e = ideal_lattice(d)
    ids = lat.sets
    own_max = {m.mask for m in maximal_ideals(d)}
    all_ideals = ideals(d)
    cases = []
    for big in maximal_ideals(lat):
        pre = sum(1 << a for a in range(d.size) if big.mask >> e[a] & 1)
        is_max = pre in own_max and d.is_ideal_mask(pre)
        probes = []
        for n_mask in all_ideals:
            if n_mask == pre or n_mask & pre != pre:
                continue
            for a in iter_bits(n_mask & ~pre):
                probes.append(_probe(d, ids, big.mask, a))
        ok = is_max and all(w is not None for w in probes)
        cases.append(Report(
            f"M={sorted(to_set(big.mask))}", ok,
            {"M_ideals": [sorted(to_set(ids[k])) for k in iter_bits(big.mask)],
             "pullback": sorted(to_set(pre)), "maximal": is_max,
             "witnesses": [w for w in probes]}))
    return Report.group("clmax_pullback", cases, size=d.size)


def _probe(d, ids, big_mask, a):
    """Find I in M and b in I with a | b = top (least indices)."""
    for k in iter_bits(big_mask):
        for b in iter_bits(ids[k]):
            if d.join[a, b] == d.top:
                return {"a": a, "I": sorted(to_set(ids[k])), "b": b}
    return None


def boolean_envelope(d):
    """Powerset of the prime-filter set, with a -> {prime filters containing a}."""
    d.require_nontrivial()
    pfs = enumerate_prime_filters(d)
    env = powerset_lattice(len(pfs))
    sigma = [sum(1 << k for k, pf in enumerate(pfs) if pf.mask >> a & 1) for a in range(d.size)]
    emb = is_embedding(d, env, sigma)
    reflects = all(d.le(a, b) == (sigma[a] & ~sigma[b] == 0)
                   for a in range(d.size) for b in range(d.size))
    pulled = []
    for p in enumerate_prime_ideals(env):
        pre = sum(1 << a for a in range(d.size) if p.mask >> sigma[a] & 1)
        pulled.append(d.is_prime_ideal_mask(pre))
    report = Report("boolean_envelope", emb and reflects and all(pulled),
                    {"points": len(pfs), "embedding": emb, "reflects_order": reflects,
                     "prime_pullbacks": pulled})
    return env, sigma, report


# -- congruences ------------------------------------------------------------

def congruence_classes(d, pairs):
    """Equivalence generated by ``pairs``, validated as a lattice congruence.

    Returns the list of class masks ordered by least member.
    """
    parent = list(range(d.size))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in pairs:
        if not (0 <= a < d.size and 0 <= b < d.size):
            raise InputError(f"kernel pair ({a}, {b}) out of range")
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    cls = [find(x) for x in range(d.size)]
    for a in range(d.size):
        for b in range(a + 1, d.size):
            if cls[a] != cls[b]:
                continue
            for c in range(d.size):
                for name, t in (("meet", d.meet), ("join", d.join)):
                    if cls[t[a, c]] != cls[t[b, c]]:
                        raise WellDefinednessError(
                            f"not a congruence: {a} ~ {b} but {name}({a},{c})={t[a, c]} "
                            f"is not related to {name}({b},{c})={t[b, c]}")
    groups = {}
    for x, r in enumerate(cls):
        groups[r] = groups.get(r, 0) | 1 << x
    return sorted(groups.values(), key=lowest)


def quotient_lattice(d, pairs):
    """Quotient by the congruence generated by ``pairs``; returns (lattice, projection)."""
    classes = congruence_classes(d, pairs)
    proj = [0] * d.size
    for k, m in enumerate(classes):
        for a in iter_bits(m):
            proj[a] = k
    reps = [lowest(m) for m in classes]
    n = len(classes)
    meet = np.array([[proj[d.meet[reps[i], reps[j]]] for j in range(n)] for i in range(n)],
                    dtype=np.int32).reshape(n, n)
    join = np.array([[proj[d.join[reps[i], reps[j]]] for j in range(n)] for i in range(n)],
                    dtype=np.int32).reshape(n, n)
    return DLattice(meet, join), proj


def filter_congruence(d, f):
    """Kernel pairs of the map a -> a/F: a ~ b iff a & c == b & c for some c in F."""
    fm = f.mask if isinstance(f, FilterOrIdeal) else check_range(f, d.size)
    pairs = []
    for a in range(d.size):
        for b in range(a + 1, d.size):
            if any(d.meet[a, c] == d.meet[b, c] for c in iter_bits(fm)):
                pairs.append((a, b))
    return pairs
