"""Finite modal algebras and relational spaces.

A ``RelSpace`` is a set of worlds with a relation stored as successor
bitmasks. The privileged algebra of a space is the powerset lattice (element
index == subset bitmask) with box U = {x : R[x] subset of U}. Abstract
``ModalAlgebra`` values live over any Boolean ``DLattice``.
"""
import warnings

import numpy as np

from . import kernels
from .bits import check_range, iter_bits, lowest, to_set
from .dlattice import (DLattice, FilterOrIdeal, enumerate_prime_filters, filter_congruence,
                       from_upsets, is_isomorphism, powerset_lattice, quotient_lattice)
from .errors import DomainError, InputError, PreconditionError
from .heyting import compute_arrow
from .limits import guard
from .poset import clusters, quotient
from .report import Report


class RelSpace:
    def __init__(self, rel):
        rel = np.array(rel, dtype=bool, copy=True)
        if rel.ndim != 2 or rel.shape[0] != rel.shape[1]:
            raise InputError(f"relation matrix must be square, got shape {rel.shape}")
        rel.setflags(write=False)
        self.rel = rel
        self.size = rel.shape[0]
        self.full = (1 << self.size) - 1
        self.succ = tuple(_masks(rel))
        self.pred = tuple(_masks(rel.T))

    @classmethod
    def from_pairs(cls, size, pairs):
        m = np.zeros((size, size), dtype=bool)
        for x, y in pairs:
            if not (0 <= x < size and 0 <= y < size):
                raise InputError(f"pair ({x}, {y}) out of range for {size} worlds")
            m[x, y] = True
        return cls(m)

    @classmethod
    def from_succ(cls, succ):
        n = len(succ)
        m = np.zeros((n, n), dtype=bool)
        for x, s in enumerate(succ):
            for y in iter_bits(s):
                m[x, y] = True
        return cls(m)

    @classmethod
    def identity(cls, n):
        return cls(np.eye(n, dtype=bool))

    def __eq__(self, other):
        return isinstance(other, RelSpace) and np.array_equal(self.rel, other.rel)

    def __hash__(self):
        return hash(self.rel.tobytes())

    def __repr__(self):
        return f"RelSpace({self.size}, {self.pairs()})"

    def pairs(self):
        return [(x, y) for x in range(self.size) for y in iter_bits(self.succ[x])]

    def related(self, x, y):
        return bool(self.succ[x] >> y & 1)

    def converse(self):
        return RelSpace(self.rel.T)

    def restrict(self, c):
        """(C, R restricted to C), worlds re-indexed ascending, and the index list."""
        idx = sorted(iter_bits(check_range(c, self.size)))
        return RelSpace(self.rel[np.ix_(idx, idx)]), idx

    def compose(self, other):
        """x (self;other) z iff x self y and y other z for some y."""
        return RelSpace.from_succ([_image(other.succ, s) for s in self.succ])

    def power(self, k):
        out = RelSpace.identity(self.size)
        for _ in range(k):
            out = self.compose(out)
        return out

    def union(self, other):
        return RelSpace(self.rel | other.rel)

    def includes(self, other):
        return not (other.rel & ~self.rel).any()

    def is_reflexive(self):
        return bool(self.rel.diagonal().all())

    def is_transitive(self):
        return self.includes(self.compose(self))

    def is_k4(self):
        return self.is_transitive()

    def is_s4(self):
        return self.is_reflexive() and self.is_transitive()


def _masks(mat):
    return [sum(1 << int(j) for j in np.flatnonzero(row)) for row in mat]


def _image_mask(fn, s):
    out = 0
    for x in iter_bits(s):
        out |= 1 << fn[x]
    return out


def _image(succ, s):
    out = 0
    for y in iter_bits(s):
        out |= succ[y]
    return out


class ModalAlgebra:
    """Boolean lattice with a box table preserving top and binary meets."""

    def __init__(self, base, box, check=True):
        self.base = base
        self.box = np.array(box, dtype=np.int64, copy=True)
        self.box.setflags(write=False)
        self.size = base.size
        if self.box.shape != (base.size,):
            raise InputError("box table length differs from the lattice size")
        if self.box.min() < 0 or self.box.max() >= base.size:
            raise InputError("box table entries out of range")
        self.neg = base.negation_table()
        if check:
            if self.box[base.top] != base.top:
                raise DomainError("box does not preserve top")
            bad = kernels.box_meet_violation(self.box, base.meet)
            if bad is not None:
                raise DomainError(f"box does not preserve the meet of {bad[0]} and {bad[1]}")

    def dia(self, a):
        return self.neg[self.box[self.neg[a]]]

    def dia_table(self):
        neg = np.array(self.neg)
        return neg[self.box[neg]]

    def le(self, a, b):
        return self.base.le(a, b)

    def __eq__(self, other):
        return (isinstance(other, ModalAlgebra) and self.base == other.base
                and np.array_equal(self.box, other.box))

    def __hash__(self):
        return hash((hash(self.base), self.box.tobytes()))


def powerset_box(s):
    guard("powerset algebra", 1 << s.size)
    return kernels.box_table(s.succ, s.size)


def algebra_from_space(s):
    """Powerset algebra of the worlds with box U = {x : R[x] subset of U}."""
    return ModalAlgebra(powerset_lattice(s.size), powerset_box(s))


def permute_algebra(m, perm):
    """Relabel elements: element a of ``m`` becomes ``perm[a]``."""
    perm = np.asarray(perm)
    inv = np.argsort(perm)
    meet = perm[m.base.meet[np.ix_(inv, inv)]]
    join = perm[m.base.join[np.ix_(inv, inv)]]
    box = perm[m.box[inv]]
    return ModalAlgebra(DLattice(meet, join, validate=False), box)


def space_from_algebra(m):
    """Ultrafilter space: x R y iff box a in x implies a in y for every a.

    Worlds are indexed by the atoms in ascending order. Returns the space and a
    report confirming the relation matches the diamond form (atom_x <= dia
    atom_y) and that the powerset algebra of the space is isomorphic to ``m``.
    """
    d = m.base
    atoms = d.atoms() if not d.is_trivial() else []
    k = len(atoms)
    ufs = [d.up[a] for a in atoms]
    rel = np.zeros((k, k), dtype=bool)
    for x in range(k):
        boxed_in = [a for a in range(d.size) if ufs[x] >> int(m.box[a]) & 1]
        for y in range(k):
            rel[x, y] = all(ufs[y] >> a & 1 for a in boxed_in)
    dia = m.dia_table()
    dia_rel = np.array([[d.le(atoms[x], int(dia[atoms[y]])) for y in range(k)] for x in range(k)],
                       dtype=bool).reshape(k, k)
    s = RelSpace(rel)
    f = [sum(1 << x for x in range(k) if d.le(atoms[x], a)) for a in range(d.size)]
    pw = algebra_from_space(s)
    iso = is_isomorphism(d, pw.base, f) and all(f[int(m.box[a])] == pw.box[f[a]]
                                                 for a in range(d.size))
    same = bool(np.array_equal(rel, dia_rel))
    return s, Report("space_from_algebra", iso and same,
                     {"worlds": k, "diamond_form_agrees": same, "iso": f if iso else None})


# -- frame classes -----------------------------------------------------------

def _box_iter(m, a, k):
    for _ in range(k):
        a = int(m.box[a])
    return a


def _box_upto(m, a, n):
    """a & box a & ... & box^n a."""
    acc = a
    cur = a
    for _ in range(n):
        cur = int(m.box[cur])
        acc = int(m.base.meet[acc, cur])
    return acc


def algebra_n_transitive(m, n):
    return all(m.le(_box_upto(m, a, n), _box_upto(m, a, n + 1)) for a in range(m.size))


def space_n_transitive(s, n):
    """R^(n+1) contained in the union of R^0..R^n."""
    upto = _union_powers(s, n)
    return upto.includes(s.power(n + 1))


def space_n_transitive_single(s, n):
    """Literal single-power reading: R^(n+1) contained in R^n."""
    return s.power(n).includes(s.power(n + 1))


def _union_powers(s, n):
    acc = RelSpace.identity(s.size)
    cur = RelSpace.identity(s.size)
    for _ in range(n):
        cur = s.compose(cur)
        acc = acc.union(cur)
    return acc


def weak_transitivity_index(x):
    """Least n such that x is n-transitive (always exists finitely)."""
    if isinstance(x, RelSpace):
        bound = max(x.size * x.size, 1)
        for n in range(bound + 1):
            if space_n_transitive(x, n):
                return n
    else:
        bound = max(x.size * x.size, 1)
        for n in range(bound + 1):
            if algebra_n_transitive(x, n):
                return n
    return None


def algebra_is_k4(m):
    return all(m.le(int(m.box[a]), int(m.box[m.box[a]])) for a in range(m.size))


def algebra_is_s4(m):
    return algebra_is_k4(m) and all(m.le(int(m.box[a]), a) for a in range(m.size))


def class_checks(x, max_n=4):
    """K4, S4, n-transitivity for n <= max_n, and the weak-transitivity index."""
    if isinstance(x, RelSpace):
        return {"isK4": x.is_k4(), "isS4": x.is_s4(),
                "n_transitive": {n: space_n_transitive(x, n) for n in range(max_n + 1)},
                "weakly_transitive": weak_transitivity_index(x)}
    return {"isK4": algebra_is_k4(x), "isS4": algebra_is_s4(x),
            "n_transitive": {n: algebra_n_transitive(x, n) for n in range(max_n + 1)},
            "weakly_transitive": weak_transitivity_index(x)}


# -- constructions -----------------------------------------------------------

def reflexivize(x, force=False):
    """Box+ a = a & box a on algebras, R+ = R with the diagonal added on spaces.

    Input must be K4; ``force`` computes anyway and warns.
    """
    k4 = x.is_k4() if isinstance(x, RelSpace) else algebra_is_k4(x)
    if not k4:
        if not force:
            raise PreconditionError("reflexivization is only claimed for K4 inputs")
        warnings.warn("reflexivizing a non-K4 input; S4 claim not checked", stacklevel=2)
    if isinstance(x, RelSpace):
        return RelSpace(x.rel | np.eye(x.size, dtype=bool))
    box = np.array([x.base.meet[a, x.box[a]] for a in range(x.size)])
    return ModalAlgebra(x.base, box)


def star_closure(s):
    """Reflexive-transitive closure (union of all powers)."""
    m = s.rel | np.eye(s.size, dtype=bool)
    for k in range(s.size):
        m = m | (m[:, k, None] & m[None, k, :])
    return RelSpace(m)


def qmax(s, c=None):
    """{x in c : for y in c, x R y implies y R x}, with R restricted to c."""
    c = s.full if c is None else check_range(c, s.size)
    return to_set(_qmax_mask(s.succ, c))


def _qmax_mask(succ, c):
    out = 0
    for x in iter_bits(c):
        if all(succ[y] >> x & 1 for y in iter_bits(succ[x] & c)):
            out |= 1 << x
    return out


def eqmax(s, c=None):
    """qmax for the reflexive-transitive closure of the restriction to c."""
    c = s.full if c is None else check_range(c, s.size)
    sub, idx = s.restrict(c)
    star = star_closure(sub)
    return frozenset(idx[i] for i in iter_bits(_qmax_mask(star.succ, star.full)))


def relativize(m, a):
    """Elements below ``a`` with box_a c = a & box(not a | c).

    Element i of the result is ``carrier[i]`` of ``m``; returns
    (algebra, carrier).
    """
    d = m.base
    if a == d.bottom:
        raise DomainError("cannot relativize to bottom")
    carrier = sorted(iter_bits(d.down[a]))
    pos = {c: i for i, c in enumerate(carrier)}
    k = len(carrier)
    meet = np.array([[pos[int(d.meet[c, e])] for e in carrier] for c in carrier], dtype=np.int32)
    join = np.array([[pos[int(d.join[c, e])] for e in carrier] for c in carrier], dtype=np.int32)
    base = DLattice(meet.reshape(k, k), join.reshape(k, k), validate=False)
    na = m.neg[a]
    box = [pos[int(d.meet[a, m.box[d.join[na, c]]])] for c in carrier]
    return ModalAlgebra(base, box), carrier


def relativization_dual_check(s, c):
    """relativize(powerset(s), C) is isomorphic to the powerset algebra of (C, R_C)."""
    c = check_range(c, s.size)
    m = algebra_from_space(s)
    rel, carrier = relativize(m, c)
    sub, idx = s.restrict(c)
    small = algebra_from_space(sub)
    f = [sum(1 << i for i, w in enumerate(idx) if u >> w & 1) for u in carrier]
    iso = is_isomorphism(rel.base, small.base, f) and all(
        f[int(rel.box[i])] == small.box[f[i]] for i in range(rel.size))
    k4_ok = (not algebra_is_k4(m)) or algebra_is_k4(rel)
    return Report(f"relativize C={sorted(to_set(c))}", iso and k4_ok,
                  {"iso": iso, "k4_inherited": k4_ok})


def famax_quotient(b, f):
    """Quotient b/F with identity box, a quasi-maximal ultrafilter F' of it, and its pullback.

    Returns (quotient algebra, pulled-back ultrafilter, report).
    """
    fm = f.mask if isinstance(f, FilterOrIdeal) else check_range(f, b.size)
    if not b.is_boolean():
        raise DomainError("famax_quotient needs a Boolean lattice")
    if not b.is_filter_mask(fm):
        raise InputError(f"{sorted(to_set(fm))} is not a filter")
    if fm >> b.bottom & 1:
        raise PreconditionError("filter is improper")
    quo, proj = quotient_lattice(b, filter_congruence(b, fm))
    qm = ModalAlgebra(quo, np.arange(quo.size))
    space, _ = space_from_algebra(qm)
    qm_points = sorted(iter_bits(_qmax_mask(space.succ, space.full)))
    atoms = quo.atoms()
    ufs = sorted(quo.up[atoms[x]] for x in qm_points)
    chosen = ufs[0]
    pulled = sum(1 << a for a in range(b.size) if chosen >> proj[a] & 1)
    is_uf = pulled in {p.mask for p in enumerate_prime_filters(b)}
    extends = pulled & fm == fm
    rep = Report("famax_quotient", is_uf and extends and algebra_is_s4(qm),
                 {"quotient_size": quo.size, "ultrafilter": sorted(to_set(pulled)),
                  "extends_filter": extends, "is_ultrafilter": is_uf})
    return qm, FilterOrIdeal("filter", pulled), rep


def cluster_quotient(s):
    """Cluster poset of an S4 space with its fixpoint-algebra report."""
    if not s.is_s4():
        raise PreconditionError("cluster quotient needs a reflexive transitive relation")
    cls = clusters(s.rel)
    rho = quotient(s.rel, [to_set(c) for c in cls])
    cls = sorted(cls, key=lowest)
    of = [0] * s.size
    for k, cm in enumerate(cls):
        for x in iter_bits(cm):
            of[x] = k
    m = algebra_from_space(s)
    fixed = [u for u in range(m.size) if m.box[u] == u]
    fix_lat = DLattice.from_sets(fixed)
    ups = from_upsets(rho)
    up_index = {u: i for i, u in enumerate(ups.sets)}
    f = [up_index.get(_image_mask(of, u), -1) for u in fixed]
    iso = -1 not in f and is_isomorphism(fix_lat, ups, f)
    # raises if the fixpoints carry no Heyting implication
    compute_arrow(fix_lat)
    qm = _qmax_mask(s.succ, s.full)
    mx = rho.max_points_mask(rho.full)
    qmax_ok = all((qm >> x & 1) == (mx >> of[x] & 1) for x in range(s.size))
    return rho, Report("cluster_quotient", iso and qmax_ok,
                       {"classes": [sorted(to_set(c)) for c in cls], "fixpoints": len(fixed),
                        "upset_iso": iso, "qmax_matches_max": qmax_ok})
