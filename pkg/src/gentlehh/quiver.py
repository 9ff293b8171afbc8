"""Quivers with quadratic monomial relations.

Paths compose left to right: ``ab`` means "a, then b", so a relation
``relation a b`` requires ``target(a) == source(b)``.

Text format (``#`` starts a comment)::

    vertices: 1 2
    arrow a: 1 -> 2
    arrow b: 2 -> 1
    relation a b
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

__all__ = [
    "PresentationError",
    "NoSignAssignment",
    "Arrow",
    "Quiver",
    "Path",
    "GentlePresentation",
    "SignAssignment",
    "ValidationReport",
    "parse_presentation",
    "serialize",
    "validate_gentle",
    "assign_signs",
    "nonzero_paths",
    "euler_characteristic",
    "successors",
]


class PresentationError(ValueError):
    """Malformed presentation text or structurally invalid quiver."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NoSignAssignment(ValueError):
    pass


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise PresentationError("duplicate vertex id")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise PresentationError("duplicate arrow id")
        if set(names) & set(self.vertices):
            raise PresentationError("arrow id clashes with a vertex id")
        vs = set(self.vertices)
        for a in self.arrows:
            if a.source not in vs or a.target not in vs:
                raise PresentationError(f"arrow {a.name} references an unknown vertex")

    @cached_property
    def arrow(self) -> dict[str, Arrow]:
        return {a.name: a for a in self.arrows}

    @cached_property
    def arrow_index(self) -> dict[str, int]:
        return {a.name: i for i, a in enumerate(self.arrows)}

    @cached_property
    def vertex_index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def outgoing(self, v):
        return [a for a in self.arrows if a.source == v]

    def incoming(self, v):
        return [a for a in self.arrows if a.target == v]


@dataclass(frozen=True)
class Path:
    """A path in a quiver; ``arrows == ()`` is the trivial path at ``source``."""

    source: str
    target: str
    arrows: tuple[str, ...] = ()

    def __len__(self):
        return len(self.arrows)

    @property
    def is_trivial(self):
        return not self.arrows

    @classmethod
    def trivial(cls, vertex):
        return cls(vertex, vertex, ())

    def __str__(self):
        if self.is_trivial:
            return f"e_{self.source}"
        return "".join(self.arrows) if all(len(a) == 1 for a in self.arrows) else "*".join(self.arrows)


@dataclass(frozen=True)
class GentlePresentation:
    """A quiver plus a set of zero relations ``(a, b)`` meaning ``ab = 0``.

    Gentleness is not enforced here; see :func:`validate_gentle`.
    """

    quiver: Quiver
    relations: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        q = self.quiver
        seen = set()
        for a, b in self.relations:
            if a not in q.arrow or b not in q.arrow:
                raise PresentationError(f"relation {a} {b} references an unknown arrow")
            if q.arrow[a].target != q.arrow[b].source:
                raise PresentationError(f"relation {a} {b} is not composable")
            if (a, b) in seen:
                raise PresentationError(f"duplicate relation {a} {b}")
            seen.add((a, b))
        idx = q.arrow_index
        canon = tuple(sorted(self.relations, key=lambda r: (idx[r[0]], idx[r[1]])))
        object.__setattr__(self, "relations", canon)

    @property
    def vertices(self):
        return self.quiver.vertices

    @property
    def arrows(self):
        return self.quiver.arrows

    @cached_property
    def relation_set(self) -> frozenset:
        return frozenset(self.relations)

    @cached_property
    def _successor_maps(self):
        q = self.quiver
        rel, nonzero = {}, {}
        for a in q.arrows:
            for b in q.outgoing(a.target):
                if (a.name, b.name) in self.relation_set:
                    rel.setdefault(a.name, []).append(b.name)
                else:
                    nonzero.setdefault(a.name, []).append(b.name)
        return rel, nonzero

    def relation_successor(self, a):
        """The arrow ``b`` with ``ab`` a relation, or None."""
        bs = self._successor_maps[0].get(a, [])
        return bs[0] if bs else None

    def nonzero_successor(self, a):
        bs = self._successor_maps[1].get(a, [])
        return bs[0] if bs else None

    @cached_property
    def _predecessor_maps(self):
        rel, nonzero = {}, {}
        for a, bs in self._successor_maps[0].items():
            for b in bs:
                rel.setdefault(b, []).append(a)
        for a, bs in self._successor_maps[1].items():
            for b in bs:
                nonzero.setdefault(b, []).append(a)
        return rel, nonzero

    def relation_predecessor(self, b):
        xs = self._predecessor_maps[0].get(b, [])
        return xs[0] if xs else None

    def nonzero_predecessor(self, b):
        xs = self._predecessor_maps[1].get(b, [])
        return xs[0] if xs else None

    def is_nonzero(self, arrows) -> bool:
        return all((a, b) not in self.relation_set for a, b in zip(arrows, arrows[1:]))

    def path(self, arrows) -> Path:
        arrows = tuple(arrows)
        q = self.quiver
        for a, b in zip(arrows, arrows[1:]):
            if q.arrow[a].target != q.arrow[b].source:
                raise ValueError(f"{a} and {b} are not composable")
        return Path(q.arrow[arrows[0]].source, q.arrow[arrows[-1]].target, arrows)

    def multiply(self, p: Path, r: Path):
        """Product ``p * r`` in the algebra, or None if it vanishes."""
        if p.target != r.source:
            return None
        if p.arrows and r.arrows and (p.arrows[-1], r.arrows[0]) in self.relation_set:
            return None
        return Path(p.source, r.target, p.arrows + r.arrows)

    def path_key(self, p: Path):
        """Canonical sort key: length, then vertex/arrow order of appearance."""
        idx = self.quiver.arrow_index
        return (len(p), self.quiver.vertex_index[p.source], tuple(idx[a] for a in p.arrows))

    def __str__(self):
        return serialize(self)


@dataclass(frozen=True)
class SignAssignment:
    sigma: dict = field(default_factory=dict)
    epsilon: dict = field(default_factory=dict)


@dataclass
class ValidationReport:
    """Outcome of the gentle-axiom checks; ``failures`` maps axiom to witnesses."""

    failures: dict = field(default_factory=dict)

    AXIOMS = ("G1", "G2", "G3", "G4", "G5")

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, axiom, witness):
        self.failures.setdefault(axiom, []).append(witness)

    def lines(self):
        for ax in self.AXIOMS:
            if ax in self.failures:
                yield f"{ax}: FAIL ({'; '.join(self.failures[ax])})"
            else:
                yield f"{ax}: pass"

    def __str__(self):
        return "\n".join(self.lines())


_ARROW_RE = re.compile(r"^arrow\s+(\S+?)\s*:\s*(\S+)\s*->\s*(\S+)$")


def parse_presentation(text: str) -> GentlePresentation:
    """Parse the line-oriented presentation format.

    Raises :class:`PresentationError` carrying the offending line number on
    syntax errors, dangling references, duplicate ids and non-composable
    relations.
    """
    vertices: list[str] = []
    arrows: list[Arrow] = []
    relations: list[tuple[str, str]] = []
    vset, aset = set(), {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vertices:") or line == "vertices":
            for v in line[len("vertices"):].lstrip(":").split():
                if v in vset:
                    raise PresentationError(f"duplicate vertex {v!r}", lineno)
                vset.add(v)
                vertices.append(v)
        elif line.startswith("arrow"):
            m = _ARROW_RE.match(line)
            if not m:
                raise PresentationError(f"cannot parse arrow declaration {line!r}", lineno)
            name, s, t = m.groups()
            if name in aset:
                raise PresentationError(f"duplicate arrow {name!r}", lineno)
            if name in vset:
                raise PresentationError(f"arrow id {name!r} clashes with a vertex", lineno)
            for v in (s, t):
                if v not in vset:
                    raise PresentationError(f"unknown vertex {v!r}", lineno)
            aset[name] = Arrow(name, s, t)
            arrows.append(aset[name])
        elif line.startswith("relation"):
            parts = line.split()
            if len(parts) != 3 or parts[0] != "relation":
                raise PresentationError(f"relation needs exactly two arrows: {line!r}", lineno)
            a, b = parts[1:]
            for x in (a, b):
                if x not in aset:
                    raise PresentationError(f"unknown arrow {x!r}", lineno)
            if aset[a].target != aset[b].source:
                raise PresentationError(f"relation {a} {b} is not composable", lineno)
            if (a, b) in relations:
                raise PresentationError(f"duplicate relation {a} {b}", lineno)
            relations.append((a, b))
        else:
            raise PresentationError(f"unrecognised line {line!r}", lineno)
    return GentlePresentation(Quiver(tuple(vertices), tuple(arrows)), tuple(relations))


def serialize(pres: GentlePresentation) -> str:
    lines = ["vertices: " + " ".join(pres.vertices)]
    lines += [f"arrow {a.name}: {a.source} -> {a.target}" for a in pres.arrows]
    lines += [f"relation {a} {b}" for a, b in pres.relations]
    return "\n".join(lines) + "\n"


def _relation_free_cycle(pres):
    # An arrow lies on a relation-free cycle iff following nonzero successors
    # returns to it; by G2 the nonzero-successor map is a function.
    for a in pres.arrows:
        seen = [a.name]
        b = pres.nonzero_successor(a.name)
        while b is not None and b not in seen:
            seen.append(b)
            b = pres.nonzero_successor(b)
        if b == a.name:
            return seen
    return None


def validate_gentle(pres: GentlePresentation) -> ValidationReport:
    report = ValidationReport()
    q = pres.quiver
    for v in q.vertices:
        nin, nout = len(q.incoming(v)), len(q.outgoing(v))
        if nin > 2 or nout > 2:
            report.fail("G1", f"vertex {v} has {nin} incoming and {nout} outgoing arrows")
    rel_succ, nz_succ = pres._successor_maps
    rel_pred, nz_pred = pres._predecessor_maps
    for a in q.arrows:
        if len(rel_succ.get(a.name, [])) > 1:
            report.fail("G2", f"{a.name} has relation successors {rel_succ[a.name]}")
        if len(nz_succ.get(a.name, [])) > 1:
            report.fail("G2", f"{a.name} has nonzero successors {nz_succ[a.name]}")
        if len(rel_pred.get(a.name, [])) > 1:
            report.fail("G3", f"{a.name} has relation predecessors {rel_pred[a.name]}")
        if len(nz_pred.get(a.name, [])) > 1:
            report.fail("G3", f"{a.name} has nonzero predecessors {nz_pred[a.name]}")
    if "G2" not in report.failures:
        cyc = _relation_free_cycle(pres)
        if cyc is not None:
            report.fail("G4", "relation-free cycle " + " ".join(cyc))
    else:
        # Successor maps are not functions; search cycles exhaustively.
        cyc = _relation_free_cycle_search(pres)
        if cyc is not None:
            report.fail("G4", "relation-free cycle " + " ".join(cyc))
    if not q.vertices:
        report.fail("G5", "empty quiver")
    else:
        comps = _components(q)
        if len(comps) > 1:
            report.fail("G5", f"{len(comps)} connected components")
    return report


def _relation_free_cycle_search(pres):
    nz = pres._successor_maps[1]
    for a in pres.arrows:
        stack = [(a.name, [a.name])]
        while stack:
            x, walk = stack.pop()
            for y in nz.get(x, []):
                if y == a.name:
                    return walk
                if y not in walk:
                    stack.append((y, walk + [y]))
    return None


def _components(q: Quiver):
    parent = {v: v for v in q.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a in q.arrows:
        parent[find(a.source)] = find(a.target)
    comps = {}
    for v in q.vertices:
        comps.setdefault(find(v), []).append(v)
    return list(comps.values())


def assign_signs(pres: GentlePresentation) -> SignAssignment:
    """Solve the sign constraints by union-find with parity.

    Unknowns are ``(arrow index, 0)`` for sigma and ``(arrow index, 1)`` for
    epsilon; the least unknown of each constraint component is fixed to +1.
    """
    q = pres.quiver
    keys = [(i, k) for i in range(len(q.arrows)) for k in (0, 1)]
    parent = {k: k for k in keys}
    parity = {k: 0 for k in keys}  # parity relative to parent; 1 = opposite sign

    def find(x):
        path = []
        while parent[x] != x:
            path.append(x)
            x = parent[x]
        root, acc = x, 0
        for y in reversed(path):
            acc ^= parity[y]
            parity[y] = acc
            parent[y] = root
        return root

    def union(x, y, opposite):
        rx, ry = find(x), find(y)
        want = int(opposite)
        if rx == ry:
            if parity[x] ^ parity[y] != want:
                raise NoSignAssignment("no sign assignment satisfies the gentle sign constraints")
            return
        # keep the smaller key as the root so it ends up fixed to +1
        if ry < rx:
            rx, ry, x, y = ry, rx, y, x
        parent[ry] = rx
        parity[ry] = parity[x] ^ parity[y] ^ want

    idx = q.arrow_index
    for v in q.vertices:
        outs, ins = q.outgoing(v), q.incoming(v)
        for a, b in combinations(outs, 2):
            union((idx[a.name], 0), (idx[b.name], 0), True)
        for a, b in combinations(ins, 2):
            union((idx[a.name], 1), (idx[b.name], 1), True)
    for a in q.arrows:
        for b in q.outgoing(a.target):
            related = (a.name, b.name) in pres.relation_set
            union((idx[b.name], 0), (idx[a.name], 1), not related)

    sigma, epsilon = {}, {}
    for a in q.arrows:
        i = idx[a.name]
        for k, out in ((0, sigma), (1, epsilon)):
            find((i, k))
            out[a.name] = -1 if parity[(i, k)] else 1
    return SignAssignment(sigma, epsilon)


def nonzero_paths(pres: GentlePresentation) -> list[Path]:
    """Basis of the algebra: trivial paths and all relation-free arrow paths."""
    paths = [Path.trivial(v) for v in pres.vertices]
    limit = len(pres.arrows) + 1
    for a in pres.arrows:
        walk = [a.name]
        while True:
            paths.append(pres.path(walk))
            b = pres.nonzero_successor(walk[-1])
            if b is None:
                break
            walk.append(b)
            if len(walk) > limit:
                raise ValueError("relation-free cycle: algebra is infinite dimensional")
    return sorted(paths, key=pres.path_key)


def euler_characteristic(q) -> int:
    if isinstance(q, GentlePresentation):
        q = q.quiver
    return len(q.vertices) - len(q.arrows)


def successors(pres: GentlePresentation, a: str):
    """``(relation successor, nonzero successor)`` of arrow ``a``."""
    return pres.relation_successor(a), pres.nonzero_successor(a)
