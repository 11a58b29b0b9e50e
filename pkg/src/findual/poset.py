"""Finite posets stored as a full order matrix plus up/down bitmasks.

Elements are the integers ``0..size-1``. Element-sets come back as
frozensets; every method also has a ``*_mask`` twin working on int bitmasks,
which is what the rest of the package uses internally.
"""
import itertools

import numpy as np

from .bits import check_range, iter_bits, lowest, to_mask, to_set
from .errors import InputError, WellDefinednessError
from .limits import guard


def _closure(m):
    """Reflexive-transitive closure of a square boolean matrix (Warshall)."""
    m = np.array(m, dtype=bool, copy=True)
    n = m.shape[0]
    m[np.arange(n), np.arange(n)] = True
    for k in range(n):
        m |= m[:, k, None] & m[None, k, :]
    return m


class Poset:
    """Immutable finite partial order; ``leq[i, j]`` means ``i <= j``."""

    def __init__(self, leq, check=True):
        leq = np.array(leq, dtype=bool, copy=True)
        if leq.ndim != 2 or leq.shape[0] != leq.shape[1]:
            raise InputError(f"order matrix must be square, got shape {leq.shape}")
        guard("poset", leq.shape[0])
        if check:
            _validate_order(leq)
        leq.setflags(write=False)
        self.leq = leq
        self.size = leq.shape[0]
        self.up = tuple(_row_masks(leq))
        self.down = tuple(_row_masks(leq.T))
        self.full = (1 << self.size) - 1

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_pairs(cls, size, pairs):
        """Order generated by ``pairs`` (i <= j); closed reflexively and transitively."""
        m = np.zeros((size, size), dtype=bool)
        for i, j in pairs:
            if not (0 <= i < size and 0 <= j < size):
                raise InputError(f"pair ({i}, {j}) out of range for size {size}")
            m[i, j] = True
        return cls(_closure(m))

    @classmethod
    def chain(cls, n):
        return cls(np.triu(np.ones((n, n), dtype=bool)))

    @classmethod
    def antichain(cls, n):
        return cls(np.eye(n, dtype=bool))

    @classmethod
    def diamond(cls):
        return cls.from_pairs(4, [(0, 1), (0, 2), (1, 3), (2, 3)])

    # -- basic queries ------------------------------------------------------

    def le(self, i, j):
        return bool(self.up[i] >> j & 1)

    def __eq__(self, other):
        return isinstance(other, Poset) and np.array_equal(self.leq, other.leq)

    def __hash__(self):
        return hash((self.size, self.leq.tobytes()))

    def __repr__(self):
        return f"Poset(size={self.size}, covers={self.covers()})"

    def up_closure_mask(self, m):
        out = 0
        for i in iter_bits(m):
            out |= self.up[i]
        return out

    def down_closure_mask(self, m):
        out = 0
        for i in iter_bits(m):
            out |= self.down[i]
        return out

    def up_closure(self, s):
        return to_set(self.up_closure_mask(check_range(s, self.size)))

    def down_closure(self, s):
        return to_set(self.down_closure_mask(check_range(s, self.size)))

    def is_upset(self, s):
        m = check_range(s, self.size)
        return self.up_closure_mask(m) == m

    def is_downset(self, s):
        m = check_range(s, self.size)
        return self.down_closure_mask(m) == m

    def max_points_mask(self, c):
        return sum(1 << x for x in iter_bits(c) if self.up[x] & c == 1 << x)

    def min_points_mask(self, c):
        return sum(1 << x for x in iter_bits(c) if self.down[x] & c == 1 << x)

    def max_points(self, c=None):
        c = self.full if c is None else check_range(c, self.size)
        return to_set(self.max_points_mask(c))

    def min_points(self, c=None):
        c = self.full if c is None else check_range(c, self.size)
        return to_set(self.min_points_mask(c))

    def covers(self):
        """Cover pairs (i, j): i < j with nothing strictly between."""
        out = []
        for i in range(self.size):
            above = self.up[i] & ~(1 << i)
            for j in iter_bits(above):
                between = above & self.down[j] & ~(1 << j)
                if not between:
                    out.append((i, j))
        return out

    def order_dual(self):
        return Poset(self.leq.T, check=False)

    # -- derived structures -------------------------------------------------

    def upsets(self):
        """All upsets as bitmasks, ascending."""
        return sorted(_enumerate_closed(self.up, self.size))

    def downsets(self):
        return sorted(_enumerate_closed(self.down, self.size))

    def product(self, other):
        """Componentwise order; pair (a, b) sits at index ``a * other.size + b``."""
        guard("product", self.size * other.size)
        return Poset(np.kron(self.leq, other.leq).astype(bool), check=False)

    def power(self, k):
        out = Poset.chain(1)
        for _ in range(k):
            out = out.product(self)
        return out

    def restrict(self, s):
        """Subposet on the elements of ``s`` (re-indexed ascending) and the index map."""
        idx = sorted(iter_bits(check_range(s, self.size)))
        return Poset(self.leq[np.ix_(idx, idx)], check=False), idx


def _row_masks(mat):
    packed = np.packbits(mat, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def _validate_order(leq):
    n = leq.shape[0]
    if not leq.diagonal().all():
        i = int(np.flatnonzero(~leq.diagonal())[0])
        raise InputError(f"order not reflexive at element {i}")
    sym = leq & leq.T
    sym[np.arange(n), np.arange(n)] = False
    if sym.any():
        i, j = np.argwhere(sym)[0]
        raise InputError(f"order not antisymmetric: {i} <= {j} <= {i}")
    two = (leq.astype(np.int32) @ leq.astype(np.int32)) > 0
    if (two & ~leq).any():
        i, j = np.argwhere(two & ~leq)[0]
        raise InputError(f"order not transitive: {i} <= ... <= {j} but not {i} <= {j}")


def _enumerate_closed(gen, n):
    """All sets S with gen[x] subset of S for each x in S (up- or downsets).

    Elements are decided in an order where gen-successors come first, so the
    inclusion test only looks at already-decided elements.
    """
    order = sorted(range(n), key=lambda x: _popcount(gen[x]))
    out = []
    count = [0]

    def rec(k, cur):
        if k == n:
            count[0] += 1
            guard("upset enumeration", count[0])
            out.append(cur)
            return
        x = order[k]
        rec(k + 1, cur)
        if gen[x] & ~(1 << x) & ~cur == 0:
            rec(k + 1, cur | 1 << x)

    rec(0, 0)
    return out


def _popcount(m):
    return bin(m).count("1")


def quotient(rel, classes):
    """Collapse ``rel`` (a Poset or square boolean quasi-order) along ``classes``.

    Returns the quotient Poset; classes are indexed by least member.
    """
    mat = rel.leq if isinstance(rel, Poset) else np.asarray(rel, dtype=bool)
    n = mat.shape[0]
    masks = [check_range(c, n) for c in classes]
    if any(m == 0 for m in masks):
        raise InputError("partition has an empty class")
    union = 0
    for m in masks:
        if union & m:
            raise InputError("partition classes overlap")
        union |= m
    if union != (1 << n) - 1:
        raise InputError("partition does not cover the carrier")
    masks.sort(key=lowest)
    reps = [[x for x in iter_bits(m)] for m in masks]
    k = len(masks)
    q = np.zeros((k, k), dtype=bool)
    for a, b in itertools.product(range(k), repeat=2):
        block = mat[np.ix_(reps[a], reps[b])]
        if block.any() != block.all():
            raise WellDefinednessError(
                f"classes {reps[a]} and {reps[b]} are related by some representatives but not others")
        q[a, b] = block.all()
    try:
        return Poset(q)
    except InputError as exc:
        raise WellDefinednessError(f"quotient relation is not a partial order: {exc}") from None


def clusters(mat):
    """Cluster partition of a quasi-order: x ~ y iff xRy and yRx."""
    mat = np.asarray(mat, dtype=bool)
    sym = mat & mat.T
    seen = 0
    out = []
    for x in range(mat.shape[0]):
        if seen >> x & 1:
            continue
        cls = to_mask(np.flatnonzero(sym[x]).tolist()) | 1 << x
        seen |= cls
        out.append(cls)
    return out


def find_isomorphism(p, q):
    """Order-isomorphism p -> q as a tuple (image of each element), or None."""
    if p.size != q.size:
        return None
    sig_p = [(_popcount(p.up[i]), _popcount(p.down[i])) for i in range(p.size)]
    sig_q = [(_popcount(q.up[i]), _popcount(q.down[i])) for i in range(q.size)]
    if sorted(sig_p) != sorted(sig_q):
        return None
    order = sorted(range(p.size), key=lambda i: (sig_p[i], i))
    image = [-1] * p.size
    used = [False] * q.size

    def ok(i, j):
        for k in range(p.size):
            t = image[k]
            if t < 0:
                continue
            if p.le(i, k) != q.le(j, t) or p.le(k, i) != q.le(t, j):
                return False
        return True

    def rec(pos):
        if pos == p.size:
            return True
        i = order[pos]
        for j in range(q.size):
            if not used[j] and sig_q[j] == sig_p[i] and ok(i, j):
                image[i] = j
                used[j] = True
                if rec(pos + 1):
                    return True
                image[i] = -1
                used[j] = False
        return False

    return tuple(image) if rec(0) else None


def is_order_isomorphism(p, q, f):
    """True iff ``f`` (sequence) is a bijection p -> q preserving and reflecting order."""
    if p.size != q.size or sorted(f) != list(range(q.size)):
        return False
    return bool(np.array_equal(p.leq, q.leq[np.ix_(list(f), list(f))]))


def random_poset(rng, n, density=None):
    """Random poset on n elements (numpy Generator ``rng``), labels shuffled."""
    density = rng.uniform(0.1, 0.7) if density is None else density
    m = np.triu(rng.random((n, n)) < density, k=1)
    perm = rng.permutation(n)
    m = m[np.ix_(perm, perm)]
    return Poset(_closure(m), check=False)
