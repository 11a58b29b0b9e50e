"""Command-line front door.

Every subcommand builds a verdict tree. Human text goes to stdout, the same
tree as JSON goes to ``--report`` (or stdout with ``--format json-report``),
and ``--format dot`` prints a diagram of the resulting structure instead.
Exit status: 0 all verdicts true, 1 some verdict false, 2 bad input, 3 capacity.
"""
import argparse
import json
import sys

from . import limits, suites
from .bits import iter_bits
from .dlattice import (
    DLattice, clmax_pullback, enumerate_prime_filters, enumerate_prime_ideals, from_upsets,
    maximal_filters, maximal_ideals, pit_witness,
)
from .duality import priestley_dual, round_trip_lattice, round_trip_poset
from .errors import FindualError, InputError
from .freedl import (
    MAX_GENERATORS, count_antichains, dual_is_cube, generate_free, implication_lemma,
    implication_oracle,
)
from .heyting import booleanization, compute_arrow
from .modal import (
    ModalAlgebra, RelSpace, algebra_from_space, eqmax, qmax, relativization_dual_check,
    relativize, space_from_algebra,
)
from .omegaspace import verify_example
from .report import Report
from .structio import Structure, dumps, load, to_dot


class Outcome:
    """A report plus an optional result structure."""

    def __init__(self, report, result=None):
        self.report = report
        self.result = result


# -- helpers -----------------------------------------------------------------

def _lattice_of(st):
    if st.kind == "dlattice":
        return st.value
    if st.kind in ("modal-algebra", "tense-algebra"):
        return st.value.base
    if st.kind == "poset":
        return DLattice.from_poset(st.value)
    raise InputError(f"expected a lattice, got {st.kind}")


def _space_of(st):
    if st.kind == "relspace":
        return st.value
    if st.kind == "poset":
        return RelSpace(st.value.leq)
    if st.kind == "modal-algebra":
        return space_from_algebra(st.value)[0]
    if st.kind == "tense-algebra":
        return space_from_algebra(ModalAlgebra(st.value.base, st.value.box_f))[0]
    raise InputError(f"expected a relational space, got {st.kind}")


def _set_name(names, mask):
    return "{" + ",".join(names[i] for i in iter_bits(mask)) + "}"


def _resolve(names, text, what):
    index = {n: i for i, n in enumerate(names)}
    out = []
    for tok in (t.strip() for t in text.split(",")):
        if not tok:
            continue
        if tok not in index:
            raise InputError(f"{what}: unknown element {tok!r}")
        out.append(index[tok])
    return out


def _members(names, mask):
    return [names[i] for i in iter_bits(mask)]


# -- subcommands -------------------------------------------------------------

def cmd_dual(args):
    st = load(args.file)
    v = st.value
    if st.kind == "poset":
        lat = from_upsets(v)
        rep = round_trip_poset(v)
        return Outcome(rep, Structure("dlattice", lat, [_set_name(st.names, m) for m in lat.sets]))
    if st.kind == "dlattice":
        dual, w = priestley_dual(v)
        # a finite prime filter is principal; name it by its least member
        names = [f"up({st.names[v.meet_all(pf)]})" for pf in w.points]
        rep = round_trip_lattice(v)
        rep.witness["points"] = names
        return Outcome(rep, Structure("poset", dual, names))
    if st.kind == "relspace":
        m = algebra_from_space(v)
        _, rep = space_from_algebra(m)
        return Outcome(rep, Structure("modal-algebra", m,
                                      [_set_name(st.names, u) for u in range(m.size)]))
    if st.kind in ("modal-algebra", "tense-algebra"):
        m = v if st.kind == "modal-algebra" else ModalAlgebra(v.base, v.box_f)
        s, rep = space_from_algebra(m)
        names = [st.names[a] for a in m.base.atoms()] if not m.base.is_trivial() else []
        return Outcome(rep, Structure("relspace", s, names))
    raise InputError(f"dual: unsupported kind {st.kind}")


def cmd_free(args):
    n = args.n
    if not 0 <= n <= MAX_GENERATORS:
        raise InputError(f"free: generator count must be in 0..{MAX_GENERATORS}")
    lat, terms = generate_free(n)
    oracle = count_antichains(n)
    cases = [Report("size", lat.size == oracle, {"elements": lat.size, "antichains": oracle})]
    if n <= 4:
        cases.append(dual_is_cube(n))
    if n <= args.lemma_max:
        bad = [(str(p), str(q)) for p in terms for q in terms
               if implication_lemma(p, q) != implication_oracle(p, q)]
        cases.append(Report("implication table vs oracle", not bad,
                            {"pairs": len(terms) ** 2, "mismatches": bad[:5]}))
    rep = Report.group(f"free distributive lattice on {n} generators", cases)
    return Outcome(rep, Structure("dlattice", lat, [str(t) for t in terms]))


def cmd_maximal(args):
    st = load(args.file)
    d = _lattice_of(st)
    names = st.names

    def fmt(xs):
        return [_members(names, x.mask) for x in xs]

    pit = []
    for a in range(d.size):
        for b in range(d.size):
            if not d.le(a, b):
                p = pit_witness(d, d.up[a], d.down[b])
                pit.append(Report(f"up({names[a]}) / down({names[b]})",
                                  not p.mask >> a & 1 and p.mask >> b & 1,
                                  {"prime_ideal": _members(names, p.mask)}))
    mi, mf = maximal_ideals(d), maximal_filters(d)
    rep = Report.group("maximal and prime filters/ideals", [
        Report("prime filters", True, {"sets": fmt(enumerate_prime_filters(d))}),
        Report("prime ideals", True, {"sets": fmt(enumerate_prime_ideals(d))}),
        Report("maximal ideals", bool(mi), {"sets": fmt(mi)}),
        Report("maximal filters", bool(mf), {"sets": fmt(mf)}),
        Report.group("PIT witnesses", pit, pairs=len(pit)),
    ])
    return Outcome(rep)


def cmd_qmax(args):
    st = load(args.file)
    s = _space_of(st)
    names = st.names if st.kind in ("relspace", "poset") else [f"w{i}" for i in range(s.size)]
    c = s.full
    if args.subset is not None:
        c = sum(1 << i for i in set(_resolve(names, args.subset, "--subset")))
    q, e = qmax(s, c), eqmax(s, c)
    ok = bool(e) or c == 0
    rep = Report("qmax", ok, {"subset": _members(names, c),
                              "qmax": [names[i] for i in sorted(q)],
                              "eqmax": [names[i] for i in sorted(e)]})
    return Outcome(rep)


def cmd_relativize(args):
    st = load(args.file)
    if st.kind == "relspace" or (st.kind == "poset" and args.subset is not None):
        if args.subset is None:
            raise InputError("relativize: a relational space needs --subset")
        s = _space_of(st)
        c = sum(1 << i for i in set(_resolve(st.names, args.subset, "--subset")))
        if not c:
            raise InputError("relativize: --subset must be nonempty")
        m = algebra_from_space(s)
        rel, carrier = relativize(m, c)
        rep = relativization_dual_check(s, c)
        return Outcome(rep, Structure("modal-algebra", rel,
                                      [_set_name(st.names, u) for u in carrier]))
    if st.kind not in ("modal-algebra", "tense-algebra"):
        raise InputError(f"relativize: unsupported kind {st.kind}")
    if args.element is None:
        raise InputError("relativize: a modal algebra needs --element")
    picked = _resolve(st.names, args.element, "--element")
    if len(picked) != 1:
        raise InputError("relativize: --element takes exactly one name")
    a = picked[0]
    m = st.value if st.kind == "modal-algebra" else ModalAlgebra(st.value.base, st.value.box_f)
    rel, carrier = relativize(m, a)
    rep = Report("relativize", True, {"element": st.names[a],
                                       "carrier": [st.names[c] for c in carrier]})
    return Outcome(rep, Structure("modal-algebra", rel, [st.names[c] for c in carrier]))


def cmd_clmax(args):
    st = load(args.file)
    return Outcome(clmax_pullback(_lattice_of(st)))


def cmd_booleanize(args):
    st = load(args.file)
    d = _lattice_of(st)
    h = compute_arrow(d)
    boole, reg, rep = booleanization(h)
    return Outcome(rep, Structure("dlattice", boole, [st.names[r] for r in reg]))


def cmd_omega(args):
    return Outcome(verify_example(k=args.k))


def cmd_check(args):
    only = set(args.only) if args.only else None
    if only and only - set(suites.ALL):
        raise InputError(f"check: unknown suite(s) {sorted(only - set(suites.ALL))}; "
                         f"choose from {sorted(suites.ALL)}")
    return Outcome(suites.run_all(seed=args.seed, only=only))


def cmd_dot(args):
    st = load(args.file)
    return Outcome(Report("dot", True, {"kind": st.kind, "elements": len(st.names)}), st)


# -- driver ------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=suites.corpus.DEFAULT_SEED,
                        help="corpus seed (default %(default)s)")
    common.add_argument("--max-size", type=int, default=limits.DEFAULT_MAX_SIZE,
                        help="capacity bound for enumerations (default %(default)s)")
    common.add_argument("--report", metavar="PATH", help="write the JSON verdict tree here")
    common.add_argument("--format", choices=("text", "dot", "json-report"), default="text")
    common.add_argument("--out", metavar="PATH", help="write the result structure here")

    ap = argparse.ArgumentParser(prog="findual", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, file=True):
        p = sub.add_parser(name, parents=[common], help=help_)
        if file:
            p.add_argument("file", help="structure file (JSON)")
        p.set_defaults(fn=fn)
        return p

    add("dual", cmd_dual, "lattice <-> poset, algebra <-> space")
    p = add("free", cmd_free, "free distributive lattice on N generators", file=False)
    p.add_argument("n", type=int)
    p.add_argument("--lemma-max", type=int, default=3,
                   help="compare the implication table with the oracle up to this N")
    add("maximal", cmd_maximal, "maximal/prime filters and ideals, PIT witnesses")
    p = add("qmax", cmd_qmax, "qmax and eqmax of a subset")
    p.add_argument("--subset", help="comma-separated element names (default: all)")
    p = add("relativize", cmd_relativize, "relativize an algebra to an element or a space to a subset")
    p.add_argument("--element")
    p.add_argument("--subset")
    add("clmax", cmd_clmax, "maximal ideals of Id(D) pulled back to D")
    add("booleanize", cmd_booleanize, "regular elements and the maximal-filter bijection")
    p = add("omega-demo", cmd_omega, "the omega+1 two-chain example", file=False)
    p.add_argument("--k", type=int, default=10, help="truncation depth")
    p = add("check", cmd_check, "run the property suites over the seeded corpus", file=False)
    p.add_argument("--only", nargs="*", metavar="SUITE", help=f"subset of: {', '.join(suites.ALL)}")
    add("dot", cmd_dot, "Hasse or relation diagram")
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        with limits.capacity(args.max_size):
            out = args.fn(args)
    except FindualError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2

    rep = out.report
    if args.report:
        with open(args.report, "w") as fh:
            json.dump(rep.to_dict(), fh, indent=2)
            fh.write("\n")
    if args.out and out.result is not None:
        with open(args.out, "w") as fh:
            fh.write(dumps(out.result))
    if args.format == "dot":
        if out.result is None:
            print(f"error: {args.command} produces no structure to draw", file=sys.stderr)
            return 2
        sys.stdout.write(to_dot(out.result))
    elif args.format == "json-report":
        print(json.dumps(rep.to_dict(), indent=2))
    else:
        print(rep.render())
        if out.result is not None and args.command != "dot" and not args.out:
            print()
            sys.stdout.write(dumps(out.result))
    return 0 if rep.ok else 1


if __name__ == "__main__":
    sys.exit(main())
