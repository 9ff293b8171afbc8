"""Closed formulas for Hochschild cohomology of gentle algebras.

Series are plain lists of ints ``c[0..N]`` (low degree first), truncated at
``N``.  The ground field only enters through ``char2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from sympy import divisors, mobius

from .ag import PhiInvariant, psi
from .oracle import DimSeries

__all__ = [
    "RationalSeriesForm",
    "SurfaceParams",
    "TildeAParams",
    "InconsistentDims",
    "PartialPhi",
    "poly_mul",
    "series_mul",
    "g_series",
    "f3_series",
    "h_from_phi",
    "hh_dims_closed",
    "h_closed_form",
    "finite_gldim_series",
    "h_surface",
    "h_tilde_a",
    "mobius_invert",
    "infer_phi_partial",
]


class InconsistentDims(ValueError):
    pass


def _zeros(N):
    return [0] * (N + 1)


def _add_into(acc, poly, scale=1):
    for i, c in enumerate(poly[: len(acc)]):
        acc[i] += scale * c
    return acc


def poly_mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def series_mul(p, q, N):
    out = _zeros(N)
    for i, a in enumerate(p[: N + 1]):
        if a:
            for j, b in enumerate(q[: N + 1 - i]):
                out[i + j] += a * b
    return out


def _epsilon(m, char2):
    return 1 if m % 2 == 0 or char2 else 0


def _g_numerator(m, char2):
    # z^m (1 + z) (eps_m + z^m)
    eps_part = [_epsilon(m, char2)] + [0] * (m - 1) + [1]
    return poly_mul([0] * m + [1, 1], eps_part)


def g_series(m: int, char2: bool, N: int) -> list[int]:
    """Expansion of ``z^m (1+z)(eps_m + z^m) / (1 - z^(2m))`` up to ``z^N``."""
    if m < 1:
        raise ValueError("g_m needs m >= 1")
    geometric = _zeros(N)
    for k in range(0, N + 1, 2 * m):
        geometric[k] = 1
    return series_mul(_g_numerator(m, char2), geometric, N)


def f3_series(char2: bool, N: int) -> list[int]:
    out = g_series(3, char2, N)
    if N >= 1:
        out[1] += 1
    return out


def h_from_phi(ph: PhiInvariant, chi: int, char2: bool, N: int) -> list[int]:
    h = _zeros(N)
    if N >= 1:
        h[1] += 1 - chi
    for (n, m), k in ph.items():
        if n == 1 and m <= N:
            h[m] += k
        elif n == 0 and m > 0:
            _add_into(h, g_series(m, char2, N), k)
    return h


def hh_dims_closed(ph: PhiInvariant, chi: int, char2: bool, N: int) -> DimSeries:
    """Dimension formulas degree by degree, via the divisor sums psi."""
    dims = [1 + ph(1, 0)]
    if N >= 1:
        dims.append(1 - chi + ph(1, 1) + (ph(0, 1) if char2 else 0))
    for n in range(2, N + 1):
        if char2:
            a, b = 1, 1
        else:
            a, b = (1, 0) if n % 2 == 0 else (0, 1)
        dims.append(ph(1, n) + a * psi(ph, n) + b * psi(ph, n - 1))
    return DimSeries(2 if char2 else 0, dims)


@dataclass(frozen=True)
class RationalSeriesForm:
    """``numerator / denominator`` with integer coefficients, low degree first."""

    numerator: tuple[int, ...]
    denominator: tuple[int, ...]

    def __post_init__(self):
        if not self.denominator or self.denominator[0] == 0:
            raise ValueError("denominator needs a nonzero constant term")

    def expand(self, N: int) -> list[int]:
        d0 = self.denominator[0]
        out = []
        for i in range(N + 1):
            c = self.numerator[i] if i < len(self.numerator) else 0
            c -= sum(self.denominator[j] * out[i - j] for j in range(1, min(i, len(self.denominator) - 1) + 1))
            q, r = divmod(c, d0)
            if r:
                raise ValueError("expansion leaves the integers")
            out.append(q)
        return out

    def to_dict(self):
        return {"numerator": list(self.numerator), "denominator": list(self.denominator)}


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod_q(p, q):
    p = [Fraction(x) for x in p]
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    while len(p) >= len(q) and p:
        k = len(p) - len(q)
        c = p[-1] / q[-1]
        quot[k] = c
        for i, x in enumerate(q):
            p[i + k] -= c * x
        p = _trim(p)
    return quot, p


def _poly_gcd(p, q):
    p, q = _trim(p), _trim(q)
    while q:
        _, r = _poly_divmod_q(p, q)
        p, q = q, [Fraction(x) for x in r]
    return p


def _primitive(p):
    # clear denominators and content; sign fixed by the constant term
    den = 1
    for x in p:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in p]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints] if g else ints
    lead = next((x for x in ints if x), 1)
    return [-x for x in ints] if lead < 0 else ints


def h_closed_form(ph: PhiInvariant, chi: int, char2: bool) -> RationalSeriesForm:
    """Closed series for h(z) as one fraction, reduced to lowest terms."""
    ms = sorted({m for (n, m) in ph.keys() if n == 0 and m > 0})
    den = [1]
    for m in ms:
        den = poly_mul(den, [1] + [0] * (2 * m - 1) + [-1])
    poly = [0] * (max([1] + [m for (n, m) in ph.keys() if n == 1]) + 1)
    poly[1] = 1 - chi
    for (n, m), k in ph.items():
        if n == 1:
            poly[m] += k
    num = poly_mul(poly, den)
    for m in ms:
        rest = [1]
        for m2 in ms:
            if m2 != m:
                rest = poly_mul(rest, [1] + [0] * (2 * m2 - 1) + [-1])
        term = poly_mul(_g_numerator(m, char2), rest)
        num = num + [0] * max(0, len(term) - len(num))
        _add_into(num, term, ph(0, m))
    num = _trim(num)
    if not num:
        return RationalSeriesForm((0,), (1,))
    g = _primitive(_poly_gcd(num, den))
    if len(g) > 1:
        num_q, r1 = _poly_divmod_q(num, g)
        den_q, r2 = _poly_divmod_q(den, g)
        assert not r1 and not r2
        num, den = num_q, den_q
        scale = Fraction(den[0])
        num = [Fraction(x) / scale for x in num]
        den = [Fraction(x) / scale for x in den]
        if any(x.denominator != 1 for x in num + den):
            raise ArithmeticError("non-integral reduced form")
        num, den = [int(x) for x in num], [int(x) for x in den]
    return RationalSeriesForm(tuple(_trim(num)) or (0,), tuple(_trim(den)))


def finite_gldim_series(ph: PhiInvariant, chi: int, N: int) -> list[int]:
    bad = [m for (n, m) in ph.keys() if n == 0]
    if bad:
        raise ValueError(f"phi has entries (0, m) for m in {bad}: not of finite global dimension")
    return h_from_phi(ph, chi, False, N)


@dataclass(frozen=True)
class SurfaceParams:
    """Genus, boundary components and the counts c0, c1, d of a triangulation."""

    g: int
    b: int
    c0: int = 0
    c1: int = 0
    d: int = 0

    def __post_init__(self):
        if min(self.g, self.c0, self.c1, self.d) < 0:
            raise ValueError("surface parameters must be nonnegative")
        if self.b < 1:
            raise ValueError("need at least one boundary component")
        if self.c0 + self.c1 > self.b:
            raise ValueError("c0 + c1 cannot exceed the number of boundary components")
        if self.f3_multiplier < 0:
            raise ValueError("4(g-1) + 2b + d must be nonnegative")

    @property
    def f3_multiplier(self):
        return 4 * (self.g - 1) + 2 * self.b + self.d


@dataclass(frozen=True)
class TildeAParams:
    s1: int
    t1: int
    s2: int
    t2: int

    def __post_init__(self):
        if min(self.s1, self.t1, self.s2, self.t2) < 0:
            raise ValueError("parameters must be nonnegative")

    @property
    def c0(self):
        return sum((s, t) == (0, 1) for s, t in ((self.s1, self.t1), (self.s2, self.t2)))

    @property
    def c1(self):
        return sum((s, t) == (1, 0) for s, t in ((self.s1, self.t1), (self.s2, self.t2)))


def h_surface(p: SurfaceParams, char2: bool, N: int) -> list[int]:
    h = [p.f3_multiplier * x for x in f3_series(char2, N)]
    h[0] += p.c0
    if N >= 1:
        h[1] += 2 * p.g + p.b - 1 + p.c1
    return h


def h_tilde_a(p: TildeAParams, char2: bool, N: int) -> list[int]:
    h = [(p.t1 + p.t2) * x for x in f3_series(char2, N)]
    h[0] += p.c0
    if N >= 1:
        h[1] += 1 + p.c1
    return h


def mobius_invert(psi_values: dict[int, int]) -> dict[int, int]:
    """Recover ``phi(0, k)`` from ``psi(d) = sum_{e | d} phi(0, e)``.

    Needs ``psi`` at every divisor of each requested ``k``.
    """
    out = {}
    for k in psi_values:
        out[k] = int(sum(int(mobius(k // d)) * psi_values[d] for d in divisors(k)))
    return out


@dataclass
class PartialPhi:
    """What the dimension tables in characteristics 0 and 2 determine about phi."""

    phi_1_0: int
    phi_1_1: int
    psi_odd: dict[int, int]
    phi_0_odd: dict[int, int]
    combinations: dict[int, str]
    finite_gldim: bool
    phi_1: dict[int, int] | None = None

    def to_dict(self):
        return {
            "phi(1,0)": self.phi_1_0,
            "phi(1,1)": self.phi_1_1,
            "psi_odd": {str(k): v for k, v in self.psi_odd.items()},
            "phi(0,odd)": {str(k): v for k, v in self.phi_0_odd.items()},
            "combinations": {str(k): v for k, v in self.combinations.items()},
            "finite_gldim": self.finite_gldim,
            "phi(1,n)": None if self.phi_1 is None else {str(k): v for k, v in self.phi_1.items()},
        }


def infer_phi_partial(dims_char0: DimSeries, dims_char2: DimSeries, chi: int) -> PartialPhi:
    """Invert the dimension formulas as far as the data allow.

    ``phi(1, 0)``, ``phi(1, 1)`` and ``psi`` at odd arguments are recovered
    exactly, hence ``phi(0, k)`` for odd ``k`` by Mobius inversion.  In even
    degrees only the sum ``phi(1, n) + psi(n)`` (char 0) is visible, and is
    reported as such.  If every recovered ``psi`` vanishes and the char 0
    table is zero on the upper half of its range, the algebra is treated as
    having finite global dimension and ``phi(1, n) = dim HH^n`` is returned.
    """
    d0, d2 = list(dims_char0.dims), list(dims_char2.dims)
    if len(d0) != len(d2):
        raise ValueError("dimension tables must share their truncation degree")
    N = len(d0) - 1
    if N < 2:
        raise ValueError("need dimensions up to degree 2 at least")

    def nonneg(x, what):
        if x < 0:
            raise InconsistentDims(f"{what} = {x} < 0")
        return x

    phi_1_0 = nonneg(d0[0] - 1, "phi(1,0)")
    if d2[0] != d0[0]:
        raise InconsistentDims("dim HH^0 depends on the characteristic")
    phi_1_1 = nonneg(d0[1] - 1 + chi, "phi(1,1)")
    psi_odd = {1: nonneg(d2[1] - d0[1], "psi(1)")}
    for n in range(2, N + 1):
        k = n - 1 if n % 2 == 0 else n
        val = nonneg(d2[n] - d0[n], f"psi({k})")
        if k in psi_odd and psi_odd[k] != val:
            raise InconsistentDims(f"psi({k}) read as {psi_odd[k]} and {val}")
        psi_odd[k] = val
    psi_odd = dict(sorted(psi_odd.items()))
    phi_0_odd = {k: nonneg(v, f"phi(0,{k})") for k, v in mobius_invert(psi_odd).items()}

    combos = {}
    for n in range(2, N + 1):
        if n % 2 == 0:
            combos[n] = f"phi(1,{n}) + psi({n}) = {d0[n]}"
        else:
            combos[n] = f"phi(1,{n}) + psi({n - 1}) = {d0[n]}"

    tail = d0[max(2, N // 2 + 1):]
    finite = all(v == 0 for v in psi_odd.values()) and all(v == 0 for v in tail)
    phi_1 = None
    if finite:
        phi_1 = {0: phi_1_0, 1: phi_1_1}
        phi_1.update({n: d0[n] for n in range(2, N + 1)})
    return PartialPhi(phi_1_0, phi_1_1, psi_odd, phi_0_odd, combos, finite, phi_1)
