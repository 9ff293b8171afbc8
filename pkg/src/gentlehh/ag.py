"""The Avella-Alaminos--Geiss invariant of a gentle algebra.

The invariant is computed by walking alternately along permitted threads
(maximal relation-free paths) and forbidden threads (maximal paths in which
every consecutive pair is a relation), using the sign functions from
:func:`gentlehh.quiver.assign_signs` to decide which thread comes next.
Each closed walk contributes ``(number of permitted threads, total length of
the forbidden threads)``; each cycle with full relations of length ``m``
contributes ``(0, m)``.

Trivial threads (length 0) sit at vertices with at most one incoming and at
most one outgoing arrow:

* a trivial permitted thread, unless the vertex has an incoming ``b`` and an
  outgoing ``c`` with ``bc`` a relation;
* a trivial forbidden thread, unless the vertex has an incoming ``b`` and an
  outgoing ``c`` with ``bc`` nonzero.

Their signs are forced by requiring each step of the walk to have exactly one
candidate: a trivial permitted thread ``t`` has ``sigma(t) = -epsilon(t)``, a
trivial forbidden thread ``f`` has ``sigma(f) = epsilon(f)``, and both are
opposite to the signs of the arrows meeting the vertex.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from sympy import divisors

from .quiver import GentlePresentation, Path, SignAssignment, assign_signs

__all__ = [
    "Thread",
    "PhiInvariant",
    "PairingError",
    "nontrivial_permitted_threads",
    "nontrivial_forbidden_threads",
    "trivial_threads",
    "critical_cycles",
    "all_threads",
    "phi",
    "psi",
    "euler_from_phi",
]

PERMITTED = "permitted"
FORBIDDEN = "forbidden"


class PairingError(RuntimeError):
    """A step of the thread walk had zero or several candidates."""


@dataclass(frozen=True)
class Thread:
    kind: str
    path: Path
    sigma: int
    epsilon: int

    @property
    def source(self):
        return self.path.source

    @property
    def target(self):
        return self.path.target

    def __len__(self):
        return len(self.path)


class PhiInvariant:
    """Finite multiset on pairs of naturals; ``phi(n, m)`` reads a multiplicity."""

    __slots__ = ("_counts",)

    def __init__(self, counts=None):
        counts = dict(counts or {})
        for (n, m), k in counts.items():
            if n < 0 or m < 0 or k < 0:
                raise ValueError(f"negative entry {(n, m)}: {k}")
        self._counts = {key: k for key, k in sorted(counts.items()) if k}

    def __call__(self, n, m):
        return self._counts.get((n, m), 0)

    def items(self):
        return self._counts.items()

    def keys(self):
        return self._counts.keys()

    def __iter__(self):
        return iter(self._counts)

    def __len__(self):
        return len(self._counts)

    def __eq__(self, other):
        if isinstance(other, PhiInvariant):
            return self._counts == other._counts
        if isinstance(other, dict):
            return self == PhiInvariant(other)
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._counts.items()))

    def __repr__(self):
        inner = ", ".join(f"{k}: {v}" for k, v in self._counts.items())
        return f"PhiInvariant({{{inner}}})"

    def to_list(self):
        return [[n, m, k] for (n, m), k in self._counts.items()]

    def to_json(self):
        return json.dumps(self.to_list())

    @classmethod
    def from_list(cls, triples):
        counts = {}
        for n, m, k in triples:
            counts[(n, m)] = counts.get((n, m), 0) + k
        return cls(counts)


def _chain(start, step):
    walk = [start]
    nxt = step(start)
    while nxt is not None:
        walk.append(nxt)
        nxt = step(nxt)
    return walk


def nontrivial_permitted_threads(pres: GentlePresentation) -> list[Path]:
    out = []
    for a in pres.arrows:
        if pres.nonzero_predecessor(a.name) is None:
            out.append(pres.path(_chain(a.name, pres.nonzero_successor)))
    return out


def _critical_arrows(pres):
    on_cycle = set()
    for a in pres.arrows:
        b = pres.relation_successor(a.name)
        steps = 0
        while b is not None and b != a.name and steps <= len(pres.arrows):
            b = pres.relation_successor(b)
            steps += 1
        if b == a.name:
            on_cycle.add(a.name)
    return on_cycle


def nontrivial_forbidden_threads(pres: GentlePresentation) -> list[Path]:
    critical = _critical_arrows(pres)
    out = []
    for a in pres.arrows:
        if a.name in critical or pres.relation_predecessor(a.name) is not None:
            continue
        out.append(pres.path(_chain(a.name, pres.relation_successor)))
    return out


def critical_cycles(pres: GentlePresentation) -> list[Path]:
    """Primitive cycles with full relations, each rotated to start at its least arrow."""
    critical = _critical_arrows(pres)
    idx = pres.quiver.arrow_index
    cycles, done = [], set()
    for a in pres.arrows:
        if a.name not in critical or a.name in done:
            continue
        walk = [a.name]
        b = pres.relation_successor(a.name)
        while b != a.name:
            walk.append(b)
            b = pres.relation_successor(b)
        done.update(walk)
        k = min(range(len(walk)), key=lambda i: idx[walk[i]])
        cycles.append(pres.path(walk[k:] + walk[:k]))
    return cycles


def trivial_threads(pres: GentlePresentation, signs: SignAssignment | None = None):
    """Trivial permitted and trivial forbidden threads, with their signs."""
    if signs is None:
        signs = assign_signs(pres)
    q = pres.quiver
    permitted, forbidden = [], []
    for v in q.vertices:
        ins, outs = q.incoming(v), q.outgoing(v)
        if len(ins) > 1 or len(outs) > 1:
            continue
        b = ins[0].name if ins else None
        c = outs[0].name if outs else None
        e = Path.trivial(v)
        if b is None and c is None:
            # the algebra K; phi() special-cases it
            permitted.append(Thread(PERMITTED, e, 1, -1))
            forbidden.append(Thread(FORBIDDEN, e, 1, 1))
            continue
        related = b is not None and c is not None and (b, c) in pres.relation_set
        composes = b is not None and c is not None and not related
        if not related:
            s = -signs.sigma[c] if c is not None else signs.epsilon[b]
            permitted.append(Thread(PERMITTED, e, s, -s))
        if not composes:
            s = -signs.epsilon[b] if b is not None else -signs.sigma[c]
            forbidden.append(Thread(FORBIDDEN, e, s, s))
    return permitted, forbidden


def all_threads(pres: GentlePresentation, signs: SignAssignment | None = None):
    """All permitted and forbidden threads (trivial ones included), with signs."""
    if signs is None:
        signs = assign_signs(pres)

    def signed(kind, p):
        return Thread(kind, p, signs.sigma[p.arrows[0]], signs.epsilon[p.arrows[-1]])

    tp, tf = trivial_threads(pres, signs)
    permitted = [signed(PERMITTED, p) for p in nontrivial_permitted_threads(pres)] + tp
    forbidden = [signed(FORBIDDEN, p) for p in nontrivial_forbidden_threads(pres)] + tf
    return permitted, forbidden


def _unique(candidates, what):
    if len(candidates) != 1:
        raise PairingError(f"{len(candidates)} candidates for {what}")
    return candidates[0]


def thread_cycles(pres: GentlePresentation, signs: SignAssignment | None = None):
    """The closed walks of the algorithm, as lists of (permitted, forbidden) steps."""
    permitted, forbidden = all_threads(pres, signs)
    by_end, by_start = {}, {}
    for f in forbidden:
        by_end.setdefault((f.target, f.epsilon), []).append(f)
    for h in permitted:
        by_start.setdefault((h.source, h.sigma), []).append(h)

    consumed = set()
    walks = []
    for h0 in range(len(permitted)):
        if h0 in consumed:
            continue
        walk = []
        h = permitted[h0]
        while True:
            i = permitted.index(h)
            if i in consumed:
                if i != h0:
                    raise PairingError(f"walk from {permitted[h0].path} re-entered {h.path}")
                break
            consumed.add(i)
            f = _unique(by_end.get((h.target, -h.epsilon), []),
                        f"forbidden thread after {h.path}")
            walk.append((h, f))
            h = _unique(by_start.get((f.source, -f.sigma), []),
                        f"permitted thread after {f.path}")
        walks.append(walk)
    return walks


def phi(pres: GentlePresentation) -> PhiInvariant:
    if not pres.arrows and len(pres.vertices) == 1:
        return PhiInvariant({(2, 0): 1})
    counts = {}
    for walk in thread_cycles(pres):
        key = (len(walk), sum(len(f) for _, f in walk))
        counts[key] = counts.get(key, 0) + 1
    for c in critical_cycles(pres):
        key = (0, len(c))
        counts[key] = counts.get(key, 0) + 1
    return PhiInvariant(counts)


def psi(ph: PhiInvariant, n: int) -> int:
    """Divisor sum of phi(0, d) over the divisors d of n."""
    if n < 1:
        raise ValueError("psi is defined for n >= 1")
    return sum(ph(0, d) for d in divisors(n))


def euler_from_phi(ph: PhiInvariant) -> Fraction:
    return Fraction(sum(k * (n - m) for (n, m), k in ph.items()), 2)
