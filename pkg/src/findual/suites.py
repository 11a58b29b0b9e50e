"""Property suites over the seeded corpora; the engine behind ``findual check``."""
import time

from . import corpus
from .bits import iter_bits
from .dlattice import (FilterOrIdeal, clmax_pullback, filters, from_upsets, maximal_filters,
                       maximal_ideals, powerset_lattice)
from .duality import round_trip_lattice, round_trip_poset
from .freedl import (count_antichains, dual_is_cube, generate_free, implication_lemma,
                     implication_oracle)
from .heyting import booleanization, compute_arrow
from .modal import (RelSpace, _qmax_mask, algebra_from_space, algebra_is_s4, class_checks, eqmax,
                    famax_quotient, qmax, reflexivize, relativization_dual_check,
                    space_from_algebra, star_closure)
from .omegaspace import verify_example
from .report import Report
from .tense import biheyting_fixpoints, connecting_violation, tense_from_space


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        rep = fn(*args, **kwargs)
        rep.witness["seconds"] = round(time.perf_counter() - t0, 3)
        return rep
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _summary(name, cases, **extra):
    cases = list(cases)
    failed = [c for c in cases if not c.ok]
    return Report(name, not failed, dict(cases=len(cases), passed=len(cases) - len(failed), **extra),
                  failed[:10])


@_timed
def duality_round_trips(seed=corpus.DEFAULT_SEED, count=240, max_size=6):
    cases = []
    for k, p in enumerate(corpus.posets(seed, count, max_size)):
        r = round_trip_poset(p)
        r.name = f"poset #{k} (size {p.size})"
        cases.append(r)
        lat = from_upsets(p)
        if not lat.is_trivial():
            r = round_trip_lattice(lat)
            r.name = f"Up(poset #{k}) (size {lat.size})"
            cases.append(r)
    return _summary("duality round trips", cases, posets=count)


@_timed
def free_sizes(max_n=5, cube_max=4):
    cases = []
    expected = {0: 2, 1: 3, 2: 6, 3: 20, 4: 168, 5: 7581}
    for n in range(max_n + 1):
        lat, _ = generate_free(n)
        oracle = count_antichains(n)
        cases.append(Report(f"n={n}", lat.size == oracle == expected[n],
                            {"size": lat.size, "antichains": oracle}))
    for n in range(min(cube_max, max_n) + 1):
        r = dual_is_cube(n)
        r.name = f"dual_is_cube n={n}"
        cases.append(r)
    return _summary("free lattice sizes", cases)


@_timed
def lemma_implication(max_n=4):
    cases = []
    for n in range(max_n + 1):
        _, terms = generate_free(n)
        mism = []
        for p in terms:
            for q in terms:
                if implication_lemma(p, q) != implication_oracle(p, q):
                    mism.append((str(p), str(q)))
        cases.append(Report(f"n={n}", not mism, {"pairs": len(terms) ** 2, "mismatches": mism[:5]}))
    return _summary("implication lemma vs oracle", cases)


def _small_corpus_lattices(seed, max_elements=6):
    out = [d for d in corpus.small_lattices(max_elements) if not d.is_trivial()]
    out += [d for d in corpus.lattices(seed) if d.size <= max_elements and not d.is_trivial()]
    return out


@_timed
def clmax(seed=corpus.DEFAULT_SEED, max_elements=6):
    cases = []
    for d in _small_corpus_lattices(seed, max_elements):
        r = clmax_pullback(d)
        found = all(w is not None for c in r.children for w in c.witness["witnesses"])
        cases.append(Report(f"lattice size {d.size}", r.ok and found,
                            {"triples": len(r.children)}))
    return _summary("CLMax pullback", cases)


@_timed
def booleanization_bijection(seed=corpus.DEFAULT_SEED):
    cases = []
    for d in corpus.small_lattices(8) + corpus.lattices(seed, count=120):
        if d.is_trivial():
            continue
        _, _, rep = booleanization(compute_arrow(d))
        rep.name = f"lattice size {d.size}"
        cases.append(rep)
    return _summary("booleanization bijection", cases)


def _jt_case(s, max_n=4):
    m = algebra_from_space(s)
    back, rep = space_from_algebra(m)
    same = back == s
    ca, cs = class_checks(m, max_n), class_checks(s, max_n)
    agree = ca == cs
    return Report(f"{s.size} worlds", rep.ok and same and agree,
                  {"round_trip": same, "classes_agree": agree})


@_timed
def jonsson_tarski(seed=corpus.DEFAULT_SEED, exhaustive_max=3, sampled=1000, max_n=4):
    cases = []
    for n in range(1, exhaustive_max + 1):
        for s in corpus.all_relations(n):
            cases.append(_jt_case(s, max_n))
    exhaustive = len(cases)
    for s in corpus.random_relations(seed, sampled):
        cases.append(_jt_case(s, max_n))
    for k, m in enumerate(corpus.abstract_modal_algebras(seed, 80)):
        space, rep = space_from_algebra(m)
        agree = class_checks(m, max_n) == class_checks(space, max_n)
        cases.append(Report(f"abstract algebra #{k}", rep.ok and agree, {"classes_agree": agree}))
    return _summary("Jonsson-Tarski round trips", cases, exhaustive=exhaustive, sampled=sampled)


def _k4_relations(seed, exhaustive_max=3, sampled=300):
    out = [s for n in range(1, exhaustive_max + 1) for s in corpus.all_relations(n) if s.is_k4()]
    out += corpus.transitive_relations(seed, sampled)
    return out


@_timed
def reflexivization(seed=corpus.DEFAULT_SEED):
    cases = []
    for s in _k4_relations(seed):
        m = algebra_from_space(s)
        plus = reflexivize(m)
        s_plus = reflexivize(s)
        s4 = algebra_is_s4(plus)
        dual_ok = algebra_from_space(s_plus) == plus
        same_qmax = qmax(s) == qmax(s_plus)
        cases.append(Report(f"{s.size} worlds", s4 and dual_ok and same_qmax,
                            {"s4": s4, "dual": dual_ok, "qmax_equal": same_qmax}))
    return _summary("reflexivization", cases)


@_timed
def relativization(seed=corpus.DEFAULT_SEED, exhaustive_max=3, sampled=150):
    spaces = [s for n in range(1, exhaustive_max + 1) for s in corpus.all_relations(n)]
    spaces += corpus.random_relations(seed + 1, sampled)
    cases = []
    for s in spaces:
        for c in range(1, 1 << s.size):
            cases.append(relativization_dual_check(s, c))
    return _summary("relativization", cases, spaces=len(spaces))


@_timed
def maximality_shadows(seed=corpus.DEFAULT_SEED):
    empty = []
    n_checks = 0
    for p in corpus.posets(seed):
        for c in range(1, 1 << p.size):
            n_checks += 1
            if not p.max_points_mask(c) or not p.min_points_mask(c):
                empty.append(("poset", p.size, c))
    for d in corpus.lattices(seed):
        if d.is_trivial():
            continue
        n_checks += 1
        if not maximal_ideals(d) or not maximal_filters(d):
            empty.append(("lattice", d.size))
    spaces = [s for n in range(1, 4) for s in corpus.all_relations(n)]
    spaces += corpus.random_relations(seed + 2, 200)
    for s in spaces:
        s4 = s.is_s4()
        for c in range(1, 1 << s.size):
            n_checks += 1
            if not eqmax(s, c):
                empty.append(("eqmax", s.pairs(), c))
            if s4 and not qmax(s, c):
                empty.append(("qmax", s.pairs(), c))
    return Report("maximality shadows", not empty, {"checks": n_checks, "empty": empty[:5]})


@_timed
def wtmax_reduction(seed=corpus.DEFAULT_SEED, exhaustive_max=3, sampled=300):
    spaces = [s for n in range(1, exhaustive_max + 1) for s in corpus.all_relations(n)]
    spaces += corpus.random_relations(seed + 3, sampled)
    mism = []
    single_hits = 0
    checks = 0
    for s in spaces:
        for c in range(1, 1 << s.size):
            sub, idx = s.restrict(c)
            star = star_closure(sub)
            expected = eqmax(s, c)
            # union reading: R^(<= n) equals R* at the weak-transitivity index
            acc = RelSpace.identity(sub.size)
            cur = RelSpace.identity(sub.size)
            powers = [cur]
            while acc != star:
                cur = sub.compose(cur)
                powers.append(cur)
                acc = acc.union(cur)
            got = frozenset(idx[i] for i in iter_bits(_qmax_mask(acc.succ, acc.full)))
            checks += 1
            if got != expected:
                mism.append(("union", s.pairs(), c))
            # single-power reading, where R* = R^n holds for some n
            for n, pw in enumerate(_powers_until_cycle(sub)):
                if pw == star:
                    single_hits += 1
                    got = frozenset(idx[i] for i in iter_bits(_qmax_mask(pw.succ, pw.full)))
                    if got != expected:
                        mism.append(("single", s.pairs(), c, n))
                    break
    return Report("WTMax reduction", not mism,
                  {"checks": checks, "single_power_instances": single_hits, "mismatches": mism[:5]})


def _powers_until_cycle(s):
    seen = set()
    cur = RelSpace.identity(s.size)
    while cur not in seen:
        seen.add(cur)
        yield cur
        cur = s.compose(cur)


@_timed
def tense_connecting(max_worlds=4):
    bad = []
    count = 0
    for n in range(1, max_worlds + 1):
        for s in corpus.all_relations(n):
            count += 1
            t = tense_from_space(s)
            if connecting_violation(t) is not None:
                bad.append(s.pairs())
    return Report("tense connecting axioms", not bad, {"relations": count, "failures": bad[:5]})


@_timed
def tense_biheyting(seed=corpus.DEFAULT_SEED, exhaustive_max=3, sampled=150):
    spaces = [s for n in range(1, exhaustive_max + 1) for s in corpus.all_relations(n) if s.is_s4()]
    spaces += [star_closure(s) for s in corpus.random_relations(seed + 4, sampled, sizes=(4,))]
    cases = []
    for s in spaces:
        _, _, rep = biheyting_fixpoints(tense_from_space(s))
        rep.name = f"{s.size} worlds {s.pairs()}"
        cases.append(rep)
    return _summary("bi-Heyting fixpoints", cases)


@_timed
def omega_example():
    return verify_example()


@_timed
def famax(max_atoms=4, seed=corpus.DEFAULT_SEED):
    cases = []
    algebras = [powerset_lattice(k) for k in range(1, max_atoms + 1)]
    algebras += [m.base for m in corpus.abstract_modal_algebras(seed, 12, sizes=(2, 3))]
    for b in algebras:
        for f in filters(b):
            if f >> b.bottom & 1:
                continue
            _, uf, rep = famax_quotient(b, FilterOrIdeal("filter", f))
            cases.append(rep)
    return _summary("FAMax quotient", cases)


ALL = {
    "duality": duality_round_trips,
    "free": free_sizes,
    "lemma": lemma_implication,
    "clmax": clmax,
    "booleanization": booleanization_bijection,
    "jonsson-tarski": jonsson_tarski,
    "reflexivization": reflexivization,
    "relativization": relativization,
    "maximality": maximality_shadows,
    "wtmax": wtmax_reduction,
    "tense": tense_connecting,
    "biheyting": tense_biheyting,
    "omega": omega_example,
    "famax": famax,
}

SEEDED = {"duality", "clmax", "booleanization", "jonsson-tarski", "reflexivization",
          "relativization", "maximality", "wtmax", "biheyting", "famax"}


def run_all(seed=corpus.DEFAULT_SEED, only=None):
    children = []
    for name, fn in ALL.items():
        if only and name not in only:
            continue
        rep = fn(seed=seed) if name in SEEDED else fn()
        rep.name = f"{name}: {rep.name}"
        children.append(rep)
    return Report.group("check", children, seed=seed)
