"""Tense algebras: a Boolean lattice with a future box and a past box."""
import numpy as np

from . import kernels
from .bits import iter_bits
from .dlattice import DLattice, powerset_lattice
from .errors import DomainError, PreconditionError
from .heyting import compute_arrow, co_residuation_holds
from .modal import ModalAlgebra, algebra_is_s4, cluster_quotient, powerset_box
from .report import Report


class TenseAlgebra:
    def __init__(self, base, box_f, box_p, check=True, space=None):
        self.future = ModalAlgebra(base, box_f, check=check)
        self.past = ModalAlgebra(base, box_p, check=check)
        self.base = base
        self.box_f = self.future.box
        self.box_p = self.past.box
        self.size = base.size
        self.space = space
        if check:
            bad = connecting_violation(self)
            if bad is not None:
                raise DomainError(f"connecting axioms fail at element {bad}")


def connecting_violation(t):
    """First a violating a <= boxF diaP a or a <= boxP diaF a, else None."""
    if t.space is not None:
        bad = kernels.conjugate_violation(t.box_f, t.box_p, t.space.size)
        return None if bad < 0 else bad
    d = t.base
    dia_p = t.past.dia_table()
    dia_f = t.future.dia_table()
    for a in range(t.size):
        if not d.le(a, int(t.box_f[dia_p[a]])) or not d.le(a, int(t.box_p[dia_f[a]])):
            return a
    return None


def tense_from_space(s):
    """Box along R and box along its converse, on the powerset algebra."""
    base = powerset_lattice(s.size)
    box_f = powerset_box(s)
    box_p = powerset_box(s.converse())
    return TenseAlgebra(base, box_f, box_p, check=True, space=s)


def is_s4t(t):
    return algebra_is_s4(t.future)


def biheyting_fixpoints(t):
    """Fixpoints of boxF as a Heyting algebra with co-implication.

    Returns (HeytingAlgebra, carrier, report). For space-built inputs the
    report compares arrow and co-arrow with the dual formulas and the lattice
    with the upsets of the cluster poset.
    """
    if not is_s4t(t):
        raise PreconditionError("fixpoint algebra needs an S4 future box")
    d = t.base
    carrier = [a for a in range(d.size) if t.box_f[a] == a]
    pos = {a: i for i, a in enumerate(carrier)}
    k = len(carrier)
    meet = np.array([[pos[int(d.meet[a, b])] for b in carrier] for a in carrier], dtype=np.int32)
    join = np.array([[pos[int(d.join[a, b])] for b in carrier] for a in carrier], dtype=np.int32)
    lat = DLattice(meet.reshape(k, k), join.reshape(k, k))
    h = compute_arrow(lat, co=True)
    checks = {"residuation": True, "co_residuation": co_residuation_holds(h)}
    s = t.space
    if s is not None:
        up = _closure(s.succ)
        down = _closure(s.pred)
        formulas = all(
            carrier[h.co_arrow[i, j]] == up(v & ~u)
            and carrier[h.arrow[i, j]] == s.full & ~down(u & ~v)
            for i, u in enumerate(carrier) for j, v in enumerate(carrier))
        checks["dual_formulas"] = formulas
        rho, rep = cluster_quotient(s)
        checks["cluster_iso"] = rep.ok
        checks["max_min_nonempty"] = bool(rho.max_points_mask(rho.full)) and bool(
            rho.min_points_mask(rho.full))
    return h, carrier, Report("biheyting_fixpoints", all(checks.values()),
                              dict(checks, size=k))


def _closure(succ):
    def close(m):
        out = m
        for x in iter_bits(m):
            out |= succ[x]
        return out
    return close


def space_is_s4t(s):
    return s.is_reflexive() and s.is_transitive()
