"""Named gentle algebras and a seeded random generator."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .quiver import (
    Arrow,
    GentlePresentation,
    Quiver,
    parse_presentation,
    validate_gentle,
)

__all__ = ["CorpusEntry", "corpus", "corpus_entry", "random_gentle", "relabel", "GenerationError"]


class GenerationError(RuntimeError):
    pass


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    presentation: GentlePresentation
    expected_dims: dict = field(default_factory=dict)  # characteristic -> leading dims
    expected_phi: list | None = None
    note: str = ""


def _linear(n):
    lines = ["vertices: " + " ".join(str(i) for i in range(1, n + 1))]
    lines += [f"arrow a{i}: {i} -> {i + 1}" for i in range(1, n)]
    return "\n".join(lines)


def _cycle(n):
    lines = ["vertices: " + " ".join(str(i) for i in range(1, n + 1))]
    lines += [f"arrow a{i}: {i} -> {i % n + 1}" for i in range(1, n + 1)]
    lines += [f"relation a{i} a{i % n + 1}" for i in range(1, n + 1)]
    return "\n".join(lines)


_MIXED = {
    # critical loop feeding a relation-free arm
    "loop_with_tail": """
        vertices: 1 2
        arrow a: 1 -> 1
        arrow b: 1 -> 2
        relation a a
    """,
    "A3_with_relation": """
        vertices: 1 2 3
        arrow a: 1 -> 2
        arrow b: 2 -> 3
        relation a b
    """,
    "kronecker_with_tail": """
        vertices: 1 2 3
        arrow a: 1 -> 2
        arrow b: 1 -> 2
        arrow c: 2 -> 3
        relation a c
    """,
    "triangle_one_relation": """
        vertices: 1 2 3
        arrow a: 1 -> 2
        arrow b: 2 -> 3
        arrow c: 3 -> 1
        relation c a
    """,
    "triangle_two_relations": """
        vertices: 1 2 3
        arrow a: 1 -> 2
        arrow b: 2 -> 3
        arrow c: 3 -> 1
        relation a b
        relation b c
    """,
    "Z2_with_tail": """
        vertices: 1 2 3
        arrow a: 1 -> 2
        arrow b: 2 -> 1
        arrow c: 2 -> 3
        relation a b
        relation b a
    """,
    "Z3_with_arms": """
        vertices: 1 2 3 4 5
        arrow a: 1 -> 2
        arrow b: 2 -> 3
        arrow c: 3 -> 1
        arrow d: 1 -> 4
        arrow e: 5 -> 1
        relation a b
        relation b c
        relation c a
        relation e d
    """,
    # two critical loops joined by a relation-free arrow
    "two_critical_cycles": """
        vertices: 1 2
        arrow a: 1 -> 1
        arrow b: 1 -> 2
        arrow c: 2 -> 2
        relation a a
        relation c c
    """,
    "double_kronecker_chain": """
        vertices: 1 2 3
        arrow a: 1 -> 2
        arrow b: 1 -> 2
        arrow c: 2 -> 3
        arrow d: 2 -> 3
        relation a c
        relation b d
    """,
    "oriented_square_relations": """
        vertices: 1 2 3 4
        arrow a: 1 -> 2
        arrow b: 2 -> 3
        arrow c: 3 -> 4
        arrow d: 4 -> 1
        relation a b
        relation c d
    """,
}


def corpus() -> list[CorpusEntry]:
    """Named presentations, all gentle; expected dims are oracle-checked in the tests."""
    entries = [
        CorpusEntry(
            "dual_numbers",
            parse_presentation("vertices: 1\narrow a: 1 -> 1\nrelation a a"),
            {0: (2, 1, 1, 1, 1), 2: (2, 2, 2, 2, 2), 3: (2, 1, 1, 1, 1)},
            [[0, 1, 1], [1, 0, 1]],
            "K[x]/(x^2); dims classical",
        ),
        CorpusEntry(
            "kronecker",
            parse_presentation("vertices: 1 2\narrow a: 1 -> 2\narrow b: 1 -> 2"),
            {0: (1, 3, 0, 0), 2: (1, 3, 0, 0), 3: (1, 3, 0, 0)},
            [[1, 1, 2]],
            "hereditary of affine type; HH^1 = pgl_2 dimension",
        ),
    ]
    for n in range(1, 7):
        phi_an = [[n + 1, n - 1, 1]]
        entries.append(
            CorpusEntry(f"linear_A_{n}", parse_presentation(_linear(n)),
                        {c: (1, 0, 0, 0) for c in (0, 2, 3)}, phi_an,
                        "hereditary of Dynkin type A: HH^i = 0 for i >= 1")
        )
    for n in range(1, 5):
        entries.append(CorpusEntry(f"cycle_Z_{n}", parse_presentation(_cycle(n))))
    z2 = next(e for e in entries if e.name == "cycle_Z_2")
    entries[entries.index(z2)] = CorpusEntry(
        z2.name, z2.presentation,
        {c: (1, 1, 1, 1, 1) for c in (0, 2, 3)}, [[0, 2, 1], [2, 0, 1]],
        "two-cycle with full relations",
    )
    for name, text in _MIXED.items():
        entries.append(CorpusEntry(name, parse_presentation(text)))
    return entries


def corpus_entry(name: str) -> CorpusEntry:
    for e in corpus():
        if e.name == name:
            return e
    raise KeyError(name)


def _sample_quiver(rng, nv, max_arrows):
    vertices = [str(i) for i in range(1, nv + 1)]
    out_deg = dict.fromkeys(vertices, 0)
    in_deg = dict.fromkeys(vertices, 0)
    target = rng.randint(max(nv - 1, 0), max_arrows)
    arrows = []
    # spanning-ish backbone first so most samples are connected
    order = vertices[:]
    rng.shuffle(order)
    for i in range(1, nv):
        if len(arrows) >= target:
            break
        u, v = order[i], rng.choice(order[:i])
        s, t = (u, v) if rng.random() < 0.5 else (v, u)
        if out_deg[s] < 2 and in_deg[t] < 2:
            arrows.append((s, t))
            out_deg[s] += 1
            in_deg[t] += 1
    tries = 0
    while len(arrows) < target and tries < 50:
        tries += 1
        s = rng.choice([v for v in vertices if out_deg[v] < 2] or [None])
        t = rng.choice([v for v in vertices if in_deg[v] < 2] or [None])
        if s is None or t is None:
            break
        arrows.append((s, t))
        out_deg[s] += 1
        in_deg[t] += 1
    return vertices, arrows


_SIGN_DRAWS = 20


def _relations_from_signs(rng, vertices, arrows):
    sigma, epsilon = {}, {}
    for v in vertices:
        s = rng.choice((1, -1))
        for k, a in enumerate(a for a in arrows if a.source == v):
            sigma[a.name] = s if k == 0 else -s
        e = rng.choice((1, -1))
        for k, a in enumerate(a for a in arrows if a.target == v):
            epsilon[a.name] = e if k == 0 else -e
    return tuple(
        (a.name, b.name)
        for a in arrows
        for b in arrows
        if a.target == b.source and sigma[b.name] == epsilon[a.name]
    )


def random_gentle(max_vertices: int, max_arrows: int, seed: int, max_tries: int = 1000) -> GentlePresentation:
    """Sample a gentle presentation from sign functions.

    Signs sigma/epsilon are drawn subject to "arrows sharing a source (target)
    get opposite sigma (epsilon)"; the relations are then exactly the
    composable pairs ``(a, b)`` with ``sigma(b) == epsilon(a)``.  Samples with
    a relation-free cycle or a disconnected quiver are rejected.
    """
    if max_vertices < 1 or max_arrows < 0:
        raise ValueError("bounds must be positive")
    rng = random.Random(seed)
    tries = 0
    while tries < max_tries:
        # connectivity needs at least nv - 1 arrows
        nv = rng.randint(1, min(max_vertices, max_arrows + 1))
        vertices, pairs = _sample_quiver(rng, nv, min(max_arrows, 2 * nv))
        arrows = [Arrow(f"a{i}", s, t) for i, (s, t) in enumerate(pairs)]
        quiver = Quiver(tuple(vertices), tuple(arrows))
        # a few sign draws per quiver before giving up on it
        for _ in range(_SIGN_DRAWS):
            tries += 1
            pres = GentlePresentation(quiver, _relations_from_signs(rng, vertices, arrows))
            report = validate_gentle(pres)
            if report.ok:
                return pres
            if "G5" in report.failures or tries >= max_tries:
                break
    raise GenerationError(f"no gentle presentation within {max_tries} tries")


def relabel(pres: GentlePresentation, seed: int) -> GentlePresentation:
    """Isomorphic copy with vertex and arrow ids permuted (and listed) at random."""
    rng = random.Random(seed)
    q = pres.quiver
    vnames = [f"v{i}" for i in range(len(q.vertices))]
    anames = [f"x{i}" for i in range(len(q.arrows))]
    rng.shuffle(vnames)
    rng.shuffle(anames)
    vmap = dict(zip(q.vertices, vnames))
    amap = dict(zip((a.name for a in q.arrows), anames))
    arrows = [Arrow(amap[a.name], vmap[a.source], vmap[a.target]) for a in q.arrows]
    rng.shuffle(arrows)
    vertices = list(vmap.values())
    rng.shuffle(vertices)
    relations = tuple((amap[a], amap[b]) for a, b in pres.relations)
    return GentlePresentation(Quiver(tuple(vertices), tuple(arrows)), relations)
