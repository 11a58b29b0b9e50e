"""Exact model of a two-chain omega+1 space with cross relations.

Points are a_n, b_n (n a natural number) and the limits a_w, b_w. Each a_n and
b_n is isolated; a_n -> a_w and b_n -> b_w. The order:

* a_m <= a_n and b_m <= b_n iff m >= n; b_m <= a_n iff m >= n
* a_w <= a_n, b_w <= b_n, b_w <= a_n for all n, and b_w <= a_w

Subsets are ``TailSet`` values: per chain a finite index set that lists
members (tail off) or exclusions (tail on), plus a bit for the limit point.
"""
import itertools
from dataclasses import dataclass, field

import numpy as np

from .poset import Poset
from .report import Report

INF = float("inf")


@dataclass(frozen=True)
class Chain:
    fin: frozenset = frozenset()
    tail: bool = False
    omega: bool = False

    def has(self, n):
        return (n not in self.fin) if self.tail else (n in self.fin)

    def any_index(self):
        return self.tail or bool(self.fin)

    def least(self):
        if self.tail:
            n = 0
            while n in self.fin:
                n += 1
            return n
        return min(self.fin) if self.fin else None

    def greatest(self):
        if self.tail:
            return INF
        return max(self.fin) if self.fin else None

    def complement(self):
        return Chain(self.fin, not self.tail, not self.omega)

    def union(self, other):
        if not self.tail and not other.tail:
            fin, tail = self.fin | other.fin, False
        elif self.tail and other.tail:
            fin, tail = self.fin & other.fin, True
        else:
            t, f = (self, other) if self.tail else (other, self)
            fin, tail = t.fin - f.fin, True
        return Chain(frozenset(fin), tail, self.omega or other.omega)

    def intersection(self, other):
        return self.complement().union(other.complement()).complement()

    def indices_below(self, k):
        return {n for n in range(k) if self.has(n)}


def _from(n):
    """Indices >= n as a chain part (without the limit)."""
    return Chain(frozenset(range(n)), True, False)


def _upto(n):
    """Indices <= n (n may be INF)."""
    if n == INF:
        return Chain(frozenset(), True, False)
    return Chain(frozenset(range(int(n) + 1)), False, False)


@dataclass(frozen=True)
class TailSet:
    a: Chain = field(default_factory=Chain)
    b: Chain = field(default_factory=Chain)

    @classmethod
    def of(cls, a=(), b=(), a_omega=False, b_omega=False):
        return cls(Chain(frozenset(a), False, a_omega), Chain(frozenset(b), False, b_omega))

    @classmethod
    def full(cls):
        return cls(Chain(frozenset(), True, True), Chain(frozenset(), True, True))

    @classmethod
    def empty(cls):
        return cls()

    def contains(self, point):
        chain, idx = point
        part = self.a if chain == "a" else self.b
        return part.omega if idx == "w" else part.has(idx)

    def complement(self):
        return TailSet(self.a.complement(), self.b.complement())

    def __or__(self, other):
        return TailSet(self.a.union(other.a), self.b.union(other.b))

    def __and__(self, other):
        return TailSet(self.a.intersection(other.a), self.b.intersection(other.b))

    def __sub__(self, other):
        return self & other.complement()

    def issubset(self, other):
        return (self - other) == TailSet()

    def __str__(self):
        parts = []
        for name, c in (("a", self.a), ("b", self.b)):
            if c.tail:
                ex = f" except {sorted(c.fin)}" if c.fin else ""
                parts.append(f"all {name}_n{ex}")
            elif c.fin:
                parts.append(", ".join(f"{name}_{n}" for n in sorted(c.fin)))
            if c.omega:
                parts.append(f"{name}_w")
        return "{" + "; ".join(parts) + "}"


def classify(u):
    """Open/closed/clopen verdicts; only the two limit points constrain."""
    is_open = (not u.a.omega or u.a.tail) and (not u.b.omega or u.b.tail)
    is_closed = (not u.a.tail or u.a.omega) and (not u.b.tail or u.b.omega)
    return {"open": is_open, "closed": is_closed, "clopen": is_open and is_closed}


def down_closure_sym(u):
    a_least = u.a.least()
    b_least = u.b.least()
    a = Chain()
    b = Chain()
    if a_least is not None:
        a = _from(a_least)
        a = Chain(a.fin, True, True)
        b = Chain(_from(a_least).fin, True, True)
    if u.a.omega:
        a = a.union(Chain(omega=True))
        b = b.union(Chain(omega=True))
    if b_least is not None:
        b = b.union(Chain(_from(b_least).fin, True, True))
    if u.b.omega:
        b = b.union(Chain(omega=True))
    return TailSet(a, b)


def up_closure_sym(u):
    a_hi = u.a.greatest()
    b_hi = u.b.greatest()
    a = Chain()
    b = Chain()
    if a_hi is not None:
        a = a.union(_upto(a_hi))
    if u.a.omega:
        a = a.union(Chain(frozenset(), True, True))
    if b_hi is not None:
        b = b.union(_upto(b_hi))
        a = a.union(_upto(b_hi))
    if u.b.omega:
        a = a.union(Chain(frozenset(), True, True))
        b = b.union(Chain(frozenset(), True, True))
    return TailSet(a, b)


def classify_in(s, c):
    """Open/closed verdicts of s (a subset of c) in the subspace topology of c."""
    if not s.issubset(c):
        raise ValueError("classify_in: s must be a subset of c")

    def rel_open(t):
        for part_t, part_c in ((t.a, c.a), (t.b, c.b)):
            if part_t.omega and _infinite(part_c):
                # every neighbourhood of the limit meets c in a tail of c's points
                if _infinite(part_c.intersection(part_t.complement())):
                    return False
        return True

    is_open = rel_open(s)
    is_closed = rel_open(c - s)
    return {"open": is_open, "closed": is_closed, "clopen": is_open and is_closed}


def _infinite(part):
    return part.tail


def _chain_parts(k, clopen_only=True):
    for r in range(k + 1):
        for fin in itertools.combinations(range(k), r):
            for tail in (False, True):
                for omega in (False, True):
                    if clopen_only and tail != omega:
                        continue
                    yield Chain(frozenset(fin), tail, omega)


def clopen_family(k):
    """All clopen TailSets whose finite parts use indices below k."""
    parts = list(_chain_parts(k))
    for a in parts:
        for b in parts:
            yield TailSet(a, b)


def verify_example(k=10, product_bound=5):
    """Check the four claims about C = down(b_0) plus a_w.

    (i) down of every clopen is clopen: exhaustive over single-chain clopens with
    indices below k (down distributes over unions, which covers all
    combinations) and over the full product family at ``product_bound``.
    """
    esakia_fail = []
    for part in _chain_parts(k):
        for u in (TailSet(part, Chain()), TailSet(Chain(), part)):
            if not classify(down_closure_sym(u))["clopen"]:
                esakia_fail.append(str(u))
    for u in clopen_family(product_bound):
        if not classify(down_closure_sym(u))["clopen"]:
            esakia_fail.append(str(u))
    r1 = Report("(i) down of each clopen is clopen", not esakia_fail,
                {"bound": k, "failures": esakia_fail[:5]})

    b0 = TailSet.of(b=[0])
    c = down_closure_sym(b0) | TailSet.of(a_omega=True)
    cls_c = classify(c)
    r2 = Report("(ii) C closed, not open", cls_c["closed"] and not cls_c["open"],
                {"C": str(c), **cls_c})

    aw = TailSet.of(a_omega=True)
    w = TailSet(Chain(frozenset(), True, True), Chain())
    witness_ok = classify(w)["clopen"] and (w & c) == aw
    rel_aw = classify_in(aw, c)
    r3 = Report("(iii) {a_w} clopen in C", witness_ok and rel_aw["clopen"],
                {"W": str(w), "W_clopen_in_X": classify(w)["clopen"], **rel_aw})

    down_aw = down_closure_sym(aw) & c
    expected = TailSet.of(a_omega=True, b_omega=True)
    rel = classify_in(down_aw, c)
    # every basic neighbourhood {b_w} + {b_n : n >= j} meets C outside {a_w, b_w}
    nbhd_hits = []
    for j in range(k):
        nb = TailSet(Chain(), Chain(frozenset(range(j)), True, True))
        extra = (nb & c) - down_aw
        nbhd_hits.append(extra.contains(("b", j)))
    r4 = Report("(iv) down{a_w} in C is not clopen in C",
                down_aw == expected and not rel["clopen"] and all(nbhd_hits),
                {"down_a_w": str(down_aw), **rel, "neighbourhoods_checked": len(nbhd_hits)})
    return Report.group("omega example", [r1, r2, r3, r4])


# -- finite truncations (cross-checks only) -------------------------------------

def truncation(k):
    """Poset on a_0..a_{k-1}, b_0..b_{k-1}, a_w, b_w and the label list."""
    labels = [("a", n) for n in range(k)] + [("b", n) for n in range(k)] + [("a", "w"), ("b", "w")]
    n = len(labels)
    leq = np.array([[point_le(p, q) for q in labels] for p in labels], dtype=bool).reshape(n, n)
    return Poset(leq), labels


def point_le(p, q):
    (cp, ip), (cq, iq) = p, q
    if p == q:
        return True
    if ip == "w":
        if iq == "w":
            return cp == "b" and cq == "a"
        return cp == "b" or cq == "a"
    if iq == "w":
        return False
    if cp == cq:
        return ip >= iq
    return cp == "b" and cq == "a" and ip >= iq


def restrict_to(u, labels):
    return sum(1 << i for i, p in enumerate(labels) if u.contains(p))
