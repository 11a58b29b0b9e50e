"""Heyting and bi-Heyting structure on finite distributive lattices."""
import numpy as np

from . import kernels
from .bits import check_range, iter_bits, to_set
from .dlattice import DLattice, from_upsets, maximal_filters
from .errors import DomainError, InputError
from .report import Report


class HeytingAlgebra:
    """A lattice with its residual table ``arrow`` and optionally ``co_arrow``.

    ``arrow[a, b]`` is the largest c with a & c <= b; ``co_arrow[a, b]`` is the
    least c with b <= a | c.
    """

    def __init__(self, base, arrow, co_arrow=None):
        self.base = base
        self.arrow = arrow
        self.co_arrow = co_arrow
        self.size = base.size

    def neg(self, a):
        return int(self.arrow[a, self.base.bottom])

    def negation_table(self):
        return [int(x) for x in self.arrow[:, self.base.bottom]]


def compute_arrow(d, co=False):
    """Brute-force residual tables, each checked against its defining law."""
    arrow = kernels.residual_table(d.meet, d.join, d.leq, d.bottom)
    bad = kernels.residuation_violation(d.meet, d.leq, arrow)
    if bad is not None:
        a, b, c = bad
        raise DomainError(f"no Heyting implication: residuation fails at a={a}, b={b}, c={c}")
    co_arrow = None
    if co:
        dual = d.order_dual()
        co_arrow = kernels.residual_table(dual.meet, dual.join, dual.leq, dual.bottom)
        bad = kernels.residuation_violation(dual.meet, dual.leq, co_arrow)
        if bad is not None:
            raise DomainError(f"no co-implication: co-residuation fails at {bad}")
        co_arrow.setflags(write=False)
    arrow.setflags(write=False)
    return HeytingAlgebra(d, arrow, co_arrow)


def co_residuation_holds(h):
    """co_arrow(a, b) <= c  iff  b <= a | c, for all triples."""
    d = h.base
    ca = h.co_arrow
    for a in range(d.size):
        lhs = d.leq[ca[a]][:, :]            # [b, c]: co(a,b) <= c
        rhs = d.leq[:, d.join[a]]          # [b, c]: b <= a | c
        if not np.array_equal(lhs, rhs):
            return False
    return True


def dual_arrow_formula(p, u, v):
    """Implication and co-implication of upsets U, V computed on the poset side.

    Returns ``(imp, coimp, agrees)`` with imp = X minus down(U minus V),
    coimp = up(V minus U), and ``agrees`` the comparison with the brute-force
    tables of the upset lattice.
    """
    um = check_range(u, p.size)
    vm = check_range(v, p.size)
    for name, m in (("U", um), ("V", vm)):
        if p.up_closure_mask(m) != m:
            raise InputError(f"{name}={sorted(to_set(m))} is not an upset")
    imp = p.full & ~p.down_closure_mask(um & ~vm)
    coimp = p.up_closure_mask(vm & ~um)
    agrees = _table_check(p, um, vm, imp, coimp)
    return to_set(imp), to_set(coimp), agrees


def _table_check(p, um, vm, imp, coimp):
    ups = from_upsets(p)
    h = _upset_algebra(ups)
    idx = {m: i for i, m in enumerate(ups.sets)}
    a, b = idx[um], idx[vm]
    return ups.sets[h.arrow[a, b]] == imp and ups.sets[h.co_arrow[a, b]] == coimp


_CACHE = {}


def _upset_algebra(ups):
    key = ups.sets
    if key not in _CACHE:
        if len(_CACHE) > 64:
            _CACHE.clear()
        _CACHE[key] = compute_arrow(ups, co=True)
    return _CACHE[key]


def dual_formula_table_check(p):
    """Compare the poset-side formulas with the brute-force tables on every pair of upsets."""
    ups = from_upsets(p)
    h = compute_arrow(ups, co=True)
    for a, um in enumerate(ups.sets):
        for b, vm in enumerate(ups.sets):
            imp = p.full & ~p.down_closure_mask(um & ~vm)
            coimp = p.up_closure_mask(vm & ~um)
            if ups.sets[h.arrow[a, b]] != imp or ups.sets[h.co_arrow[a, b]] != coimp:
                return (um, vm)
    return None


def booleanization(h):
    """Regular elements {a : not not a == a} as a Boolean lattice.

    Returns (lattice, inclusion, report); the report exhibits the bijection
    between maximal filters of h and of the Booleanization.
    """
    d = h.base
    neg = h.negation_table()
    reg = [a for a in range(d.size) if neg[neg[a]] == a]
    pos = {a: i for i, a in enumerate(reg)}
    k = len(reg)
    meet = np.empty((k, k), dtype=np.int32)
    join = np.empty((k, k), dtype=np.int32)
    for i, a in enumerate(reg):
        for j, b in enumerate(reg):
            meet[i, j] = pos[int(d.meet[a, b])]
            join[i, j] = pos[neg[neg[int(d.join[a, b])]]]
    boole = DLattice(meet, join)
    is_bool = boole.is_boolean()

    big = [f.mask for f in maximal_filters(d)] if not d.is_trivial() else []
    small = [f.mask for f in maximal_filters(boole)] if not boole.is_trivial() else []
    fwd = {}
    for f in big:
        trace = sum(1 << pos[a] for a in iter_bits(f) if a in pos)
        fwd[f] = _generated_filter(boole, trace)
    # inverse: pull G back along a -> not not a
    back = {g: sum(1 << a for a in range(d.size) if g >> pos[neg[neg[a]]] & 1) for g in small}
    naive = {g: d.up_closure(sum(1 << reg[i] for i in iter_bits(g))) for g in small}
    maps_ok = (sorted(fwd.values()) == sorted(small)
               and all(back[fwd[f]] == f for f in big)
               and all(fwd.get(back[g]) == g for g in small))
    rep = Report("booleanization", is_bool and maps_ok,
                 {"regular": reg, "boolean": is_bool,
                  "upward_closure_inverse_ok": all(naive[g] == back[g] for g in small),
                  "forward": [(sorted(to_set(f)), sorted(to_set(g))) for f, g in fwd.items()],
                  "max_filters": (len(big), len(small))})
    return boole, reg, rep


def _generated_filter(d, m):
    """Least filter containing ``m`` (closure under meets, then upward)."""
    if m == 0:
        return d.up[d.top]
    acc = d.top
    for a in iter_bits(m):
        acc = int(d.meet[acc, a])
    return d.up[acc]
