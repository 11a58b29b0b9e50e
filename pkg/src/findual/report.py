"""Verdict trees: suite -> case -> witness."""
from dataclasses import dataclass, field


@dataclass
class Report:
    name: str
    ok: bool
    witness: dict = field(default_factory=dict)
    children: list = field(default_factory=list)

    @classmethod
    def group(cls, name, children, **witness):
        children = list(children)
        return cls(name, all(c.ok for c in children), witness, children)

    def __bool__(self):
        return self.ok

    def failures(self):
        if self.ok:
            return []
        bad = [f for c in self.children for f in c.failures()]
        return bad or [self]

    def to_dict(self):
        out = {"name": self.name, "ok": self.ok}
        if self.witness:
            out["witness"] = _jsonable(self.witness)
        if self.children:
            out["children"] = [c.to_dict() for c in self.children]
        return out

    def render(self, depth=0, max_children=20):
        mark = "PASS" if self.ok else "FAIL"
        lines = [f"{'  ' * depth}[{mark}] {self.name}"]
        if self.witness:
            for k, v in self.witness.items():
                lines.append(f"{'  ' * depth}    {k}: {_short(v)}")
        shown = self.children if len(self.children) <= max_children else \
            [c for c in self.children if not c.ok][:max_children] or self.children[:3]
        for c in shown:
            lines.append(c.render(depth + 1, max_children))
        if len(shown) < len(self.children):
            n_ok = sum(c.ok for c in self.children)
            lines.append(f"{'  ' * (depth + 1)}... {len(self.children)} cases, {n_ok} passed")
        return "\n".join(lines)


def _short(v, limit=160):
    s = repr(_jsonable(v))
    return s if len(s) <= limit else s[:limit - 3] + "..."


def _jsonable(v):
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (set, frozenset)):
        return sorted(_jsonable(x) for x in v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if hasattr(v, "item"):
        return v.item()
    return v
