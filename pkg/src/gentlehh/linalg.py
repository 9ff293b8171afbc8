"""Exact rank of small integer matrices over Q and over prime fields.

Matrices are sequences of rows of Python ints.
"""

from __future__ import annotations

from sympy import isprime

__all__ = ["rank_rational", "rank_mod_p", "rank"]


def _rows(m):
    rows = [list(r) for r in m]
    ncols = len(rows[0]) if rows else 0
    if any(len(r) != ncols for r in rows):
        raise ValueError("ragged matrix")
    return [r for r in rows if any(r)], ncols


def rank_rational(m) -> int:
    """Rank over Q by Bareiss fraction-free elimination.

    Every intermediate entry is a minor of the input, so the exact division
    by the previous pivot never leaves the integers.
    """
    rows, ncols = _rows(m)
    rank, prev = 0, 1
    for c in range(ncols):
        if rank == len(rows):
            break
        piv = next((r for r in range(rank, len(rows)) if rows[r][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        p = prow[c]
        for r in range(rank + 1, len(rows)):
            row = rows[r]
            x = row[c]
            if x:
                for j in range(c + 1, ncols):
                    row[j] = (p * row[j] - x * prow[j]) // prev
            elif p != prev:
                for j in range(c + 1, ncols):
                    if row[j]:
                        row[j] = p * row[j] // prev
            row[c] = 0
        prev = p
        rank += 1
    return rank


def rank_mod_p(m, p: int) -> int:
    """Rank of ``m`` reduced modulo the prime ``p``."""
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    rows, ncols = _rows(m)
    rows = [[x % p for x in r] for r in rows]
    rank = 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        inv = pow(prow[c], -1, p)
        for j in range(c, ncols):
            prow[j] = prow[j] * inv % p
        for r in range(rank + 1, len(rows)):
            x = rows[r][c]
            if x:
                row = rows[r]
                for j in range(c, ncols):
                    row[j] = (row[j] - x * prow[j]) % p
        rank += 1
    return rank


def rank(m, characteristic: int = 0) -> int:
    return rank_rational(m) if characteristic == 0 else rank_mod_p(m, characteristic)
