"""JSON structure files and DOT output.

Schema (``format-version`` 1), fields by kind:

* poset: ``elements``, ``leq`` (pairs of names generating the order)
* dlattice: ``elements``, ``meet``, ``join`` (tables of names, row = left operand)
* relspace: ``elements``, ``rel`` (pairs of names)
* modal-algebra: dlattice fields plus ``box`` (list of names, one per element)
* tense-algebra: dlattice fields plus ``boxF`` and ``boxP``
"""
import json
from dataclasses import dataclass

import numpy as np

from .dlattice import DLattice
from .errors import InputError
from .modal import ModalAlgebra, RelSpace
from .poset import Poset
from .tense import TenseAlgebra

FORMAT_VERSION = 1
KINDS = ("poset", "dlattice", "relspace", "modal-algebra", "tense-algebra")


@dataclass
class Structure:
    kind: str
    value: object
    names: list

    def __eq__(self, other):
        if not isinstance(other, Structure) or self.kind != other.kind or self.names != other.names:
            return False
        return dumps(self) == dumps(other)


class ParseError(InputError):
    pass


def loads(text, source="<string>"):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    return from_doc(doc, source)


def load(path):
    with open(path) as fh:
        return loads(fh.read(), str(path))


def from_doc(doc, source="<doc>"):
    def fail(where, msg):
        raise ParseError(f"{source}: at {where}: {msg}")

    if not isinstance(doc, dict):
        fail("$", "top level must be an object")
    version = doc.get("format-version")
    if version != FORMAT_VERSION:
        fail("$.format-version", f"expected {FORMAT_VERSION}, got {version!r}")
    kind = doc.get("kind")
    if kind not in KINDS:
        fail("$.kind", f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    names = doc.get("elements")
    if not isinstance(names, list) or not all(isinstance(x, str) for x in names):
        fail("$.elements", "must be a list of strings")
    if len(set(names)) != len(names):
        dup = next(x for x in names if names.count(x) > 1)
        fail("$.elements", f"duplicate name {dup!r}")
    index = {x: i for i, x in enumerate(names)}
    n = len(names)

    def ref(where, x):
        if x not in index:
            fail(where, f"undeclared element {x!r}")
        return index[x]

    def pairs(key):
        raw = doc.get(key)
        if not isinstance(raw, list):
            fail(f"$.{key}", "must be a list of [name, name] pairs")
        out = []
        for k, pr in enumerate(raw):
            if not (isinstance(pr, list) and len(pr) == 2):
                fail(f"$.{key}[{k}]", "must be a [name, name] pair")
            out.append((ref(f"$.{key}[{k}][0]", pr[0]), ref(f"$.{key}[{k}][1]", pr[1])))
        return out

    def table(key):
        raw = doc.get(key)
        if not isinstance(raw, list) or len(raw) != n:
            fail(f"$.{key}", f"must be a {n}x{n} table of names")
        out = np.empty((n, n), dtype=np.int32)
        for i, row in enumerate(raw):
            if not isinstance(row, list) or len(row) != n:
                fail(f"$.{key}[{i}]", f"row must have {n} entries")
            for j, x in enumerate(row):
                out[i, j] = ref(f"$.{key}[{i}][{j}]", x)
        return out

    def vector(key):
        raw = doc.get(key)
        if not isinstance(raw, list) or len(raw) != n:
            fail(f"$.{key}", f"must list {n} names")
        return [ref(f"$.{key}[{i}]", x) for i, x in enumerate(raw)]

    try:
        if kind == "poset":
            value = Poset.from_pairs(n, pairs("leq"))
        elif kind == "relspace":
            value = RelSpace.from_pairs(n, pairs("rel"))
        else:
            lat = DLattice(table("meet"), table("join"))
            if kind == "dlattice":
                value = lat
            elif kind == "modal-algebra":
                value = ModalAlgebra(lat, vector("box"))
            else:
                value = TenseAlgebra(lat, vector("boxF"), vector("boxP"))
    except ParseError:
        raise
    except InputError as exc:
        raise ParseError(f"{source}: {exc}") from None
    return Structure(kind, value, list(names))


def to_doc(st):
    names = st.names
    doc = {"format-version": FORMAT_VERSION, "kind": st.kind, "elements": list(names)}
    v = st.value
    if st.kind == "poset":
        doc["leq"] = sorted([names[i], names[j]] for i, j in v.covers())
    elif st.kind == "relspace":
        doc["rel"] = sorted([names[i], names[j]] for i, j in v.pairs())
    else:
        lat = v if st.kind == "dlattice" else v.base
        doc["meet"] = [[names[x] for x in row] for row in lat.meet.tolist()]
        doc["join"] = [[names[x] for x in row] for row in lat.join.tolist()]
        if st.kind == "modal-algebra":
            doc["box"] = [names[x] for x in v.box.tolist()]
        elif st.kind == "tense-algebra":
            doc["boxF"] = [names[x] for x in v.box_f.tolist()]
            doc["boxP"] = [names[x] for x in v.box_p.tolist()]
    return doc


def dumps(st):
    """Canonical text: one field per line, one table row per line."""
    doc = to_doc(st)
    lines = ["{"]
    items = list(doc.items())
    for k, (key, val) in enumerate(items):
        sep = "," if k < len(items) - 1 else ""
        if key in ("meet", "join") or key in ("leq", "rel"):
            rows = [json.dumps(r) for r in val]
            if rows:
                body = ",\n    ".join(rows)
                lines.append(f'  "{key}": [\n    {body}\n  ]{sep}')
            else:
                lines.append(f'  "{key}": []{sep}')
        else:
            lines.append(f'  "{key}": {json.dumps(val)}{sep}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def dump(st, path):
    with open(path, "w") as fh:
        fh.write(dumps(st))


def default_names(n, prefix="e"):
    return [f"{prefix}{i}" for i in range(n)]


def wrap(value, names=None):
    """Structure for a bare value, with generated names when none are given."""
    if isinstance(value, Poset):
        kind = "poset"
    elif isinstance(value, RelSpace):
        kind = "relspace"
    elif isinstance(value, DLattice):
        kind = "dlattice"
    elif isinstance(value, TenseAlgebra):
        kind = "tense-algebra"
    elif isinstance(value, ModalAlgebra):
        kind = "modal-algebra"
    else:
        raise InputError(f"cannot serialize {type(value).__name__}")
    return Structure(kind, value, names or default_names(value.size))


# -- DOT -------------------------------------------------------------------------

def _q(s):
    return '"' + str(s).replace('"', '\\"') + '"'


def poset_dot(p, names=None, title="poset"):
    names = names or default_names(p.size)
    lines = [f"digraph {_q(title)} {{", "  rankdir=BT;"]
    lines += [f"  {_q(x)};" for x in names]
    lines += [f"  {_q(names[i])} -> {_q(names[j])};" for i, j in sorted(p.covers())]
    lines.append("}")
    return "\n".join(lines) + "\n"


def relation_dot(s, names=None, title="relation"):
    names = names or default_names(s.size)
    lines = [f"digraph {_q(title)} {{"]
    lines += [f"  {_q(x)};" for x in names]
    lines += [f"  {_q(names[i])} -> {_q(names[j])};" for i, j in sorted(s.pairs())]
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_dot(st):
    v = st.value
    if st.kind == "poset":
        return poset_dot(v, st.names)
    if st.kind == "relspace":
        return relation_dot(v, st.names)
    lat = v if st.kind == "dlattice" else v.base
    return poset_dot(lat.poset(), st.names, title=st.kind)
