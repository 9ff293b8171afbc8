"""Hochschild cohomology dimensions straight from the Bardzell resolution.

For a quadratic monomial algebra the degree-n generators of the minimal
bimodule resolution are the critical paths ``a1...an`` (every consecutive
pair a relation).  A cochain assigns to each critical path ``w`` a linear
combination of nonzero paths parallel to ``w``, so ``C^n`` has basis the
parallel pairs ``(w, p)``.  The coboundary is

    (df)(a0 a1 ... an) = a0 * f(a1...an) + (-1)**(n+1) * f(a0...a(n-1)) * an.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from .linalg import rank
from .quiver import GentlePresentation, Path, nonzero_paths

__all__ = [
    "DimSeries",
    "CochainDegree",
    "ComplexError",
    "critical_paths",
    "cochain_degree",
    "hh_dims_oracle",
    "verify_complex",
]

DEFAULT_MAX_DEGREE = 12


class ComplexError(AssertionError):
    pass


@dataclass(frozen=True)
class DimSeries:
    """``dims[i] = dim HH^i`` for ``i <= N`` over a field of the given characteristic."""

    characteristic: int
    dims: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(self.dims))
        if any(d < 0 for d in self.dims):
            raise ValueError("negative dimension")

    @property
    def max_degree(self):
        return len(self.dims) - 1

    @property
    def h(self):
        """Coefficients of ``sum dim HH^i z^i - 1``."""
        return [self.dims[0] - 1, *self.dims[1:]]

    def to_dict(self):
        return {"characteristic": self.characteristic, "dims": list(self.dims)}

    def to_json(self):
        return json.dumps(self.to_dict())

    @classmethod
    def from_h(cls, characteristic, h):
        return cls(characteristic, (h[0] + 1, *h[1:]))


@dataclass(frozen=True)
class CochainDegree:
    degree: int
    basis: tuple[tuple[Path, Path], ...]
    coboundary: tuple[tuple[int, ...], ...]  # rows: basis of degree + 1

    @property
    def dim(self):
        return len(self.basis)


def critical_paths(pres: GentlePresentation, n: int) -> list[Path]:
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if n == 0:
        return [Path.trivial(v) for v in pres.vertices]
    out = []
    for a in pres.arrows:
        walk = [a.name]
        while len(walk) < n:
            b = pres.relation_successor(walk[-1])
            if b is None:
                break
            walk.append(b)
        if len(walk) == n:
            out.append(pres.path(walk))
    return out


def _basis(pres, n, paths):
    by_ends = {}
    for p in paths:
        by_ends.setdefault((p.source, p.target), []).append(p)
    return tuple((w, p) for w in critical_paths(pres, n) for p in by_ends.get((w.source, w.target), []))


def _head(w: Path, pres):
    if len(w) == 1:
        return Path.trivial(w.source)
    return pres.path(w.arrows[:-1])


def _tail(w: Path, pres):
    if len(w) == 1:
        return Path.trivial(w.target)
    return pres.path(w.arrows[1:])


def _coboundary(pres, n, basis, next_basis):
    col = {b: j for j, b in enumerate(basis)}
    mat = [[0] * len(basis) for _ in next_basis]
    sign = -1 if n % 2 == 0 else 1
    for i, (u, q) in enumerate(next_basis):
        first = pres.path(u.arrows[:1])
        last = pres.path(u.arrows[-1:])
        tail, head = _tail(u, pres), _head(u, pres)
        # row (u, q) collects every f = (w, p) whose image at u has a q-component
        for (w, p), j in col.items():
            if w == tail and pres.multiply(first, p) == q:
                mat[i][j] += 1
            if w == head and pres.multiply(p, last) == q:
                mat[i][j] += sign
    return tuple(tuple(r) for r in mat)


@lru_cache(maxsize=64)
def _complex(pres, top):
    paths = nonzero_paths(pres)
    bases = [_basis(pres, n, paths) for n in range(top + 2)]
    return tuple(
        CochainDegree(n, bases[n], _coboundary(pres, n, bases[n], bases[n + 1]))
        for n in range(top + 1)
    )


def cochain_degree(pres: GentlePresentation, n: int) -> CochainDegree:
    paths = nonzero_paths(pres)
    basis = _basis(pres, n, paths)
    return CochainDegree(n, basis, _coboundary(pres, n, basis, _basis(pres, n + 1, paths)))


def hh_dims_oracle(pres: GentlePresentation, characteristic: int = 0,
                   N: int = DEFAULT_MAX_DEGREE, workers: int | None = None) -> DimSeries:
    """``dim HH^n = dim C^n - rank d^n - rank d^(n-1)`` for ``n <= N``."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    degrees = _complex(pres, N)

    def r(d):
        return rank(d.coboundary, characteristic) if d.coboundary and d.dim else 0

    if workers and workers > 1:
        with ThreadPoolExecutor(workers) as ex:
            ranks = list(ex.map(r, degrees))
    else:
        ranks = [r(d) for d in degrees]
    dims = [d.dim - ranks[n] - (ranks[n - 1] if n else 0) for n, d in enumerate(degrees)]
    return DimSeries(characteristic, dims)


def _matmul(a, b):
    # a: rows x k, b: k x cols
    cols = len(b[0]) if b else 0
    return [[sum(x * b[k][j] for k, x in enumerate(row) if x) for j in range(cols)] for row in a]


def verify_complex(pres: GentlePresentation, N: int = DEFAULT_MAX_DEGREE) -> list[str]:
    """Check ``d^(n+1) d^n = 0`` over the integers for ``n < N``.

    Returns the list of checked degrees as human-readable lines; raises
    :class:`ComplexError` naming the degree and basis element on failure.
    """
    degrees = _complex(pres, N)
    paths = nonzero_paths(pres)
    lines = []
    for n in range(N):
        d0, d1 = degrees[n].coboundary, degrees[n + 1].coboundary
        if degrees[n].dim and d0 and d1:
            for i, row in enumerate(_matmul(d1, d0)):
                for j, x in enumerate(row):
                    if x:
                        w, p = degrees[n].basis[j]
                        u, q = _basis(pres, n + 2, paths)[i]
                        raise ComplexError(
                            f"d^{n + 1} d^{n} != 0 at degree {n}: cochain ({w}, {p}) "
                            f"maps to {x} times ({u}, {q})"
                        )
        lines.append(f"degree {n}: ok")
    return lines
