"""Frobenius characteristic polynomials of supersingular abelian varieties
over F_{2^n} (n odd), and the degree-8 product enumeration that bounds the
admissible point counts from the isogeny side.

A Weil polynomial here is a monic integer polynomial of even degree 2g whose
coefficients satisfy the functional equation c_i = q^(g-i) c_(2g-i); the
paper-side symbols a_j are c_(2g-j).  Supersingularity is decided by the
divisibility criterion 2^ceil(jn/2) | a_j for all j.  The catalog of simple
factors expands to 12 concrete polynomials; multisets of them with total
degree 8 model the possible Jacobian decompositions of a genus-4 curve, and
the Hasse-Weil-Serre bound prunes the trace coefficient a1.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, isqrt

from .errors import (
    MalformedWeilPolyError,
    NotReducibleError,
    ZeroPolynomialError,
)

# ---------------------------------------------------------------------------
# plain integer polynomials: list[int], constant term first


def poly_strip(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p = p[:-1]
    return list(p)


def poly_mul(p: list[int], r: list[int]) -> list[int]:
    out = [0] * (len(p) + len(r) - 1)
    for i, pi in enumerate(p):
        if pi:
            for j, rj in enumerate(r):
                out[i + j] += pi * rj
    return out


def poly_eval(p: list[int], x: int) -> int:
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_to_json_list(p: list[int]) -> list[str]:
    return [str(c) for c in p]


def render_poly(p: list[int], var: str = "X") -> str:
    terms = []
    for deg in range(len(p) - 1, -1, -1):
        c = p[deg]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if deg == 0:
            body = str(mag)
        else:
            xpart = var if deg == 1 else f"{var}^{deg}"
            body = xpart if mag == 1 else f"{mag}{xpart}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first_body = terms[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in terms[1:]:
        out += sign + body
    return out


def _det_bareiss(M: list[list[int]]) -> int:
    """Fraction-free determinant over the integers."""
    M = [row[:] for row in M]
    size = len(M)
    sign = 1
    prev = 1
    for k in range(size - 1):
        if M[k][k] == 0:
            for i in range(k + 1, size):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[-1][-1]


def resultant(p: list[int], r: list[int]) -> int:
    """Res(p, r) = lc(p)^deg(r) * prod r(alpha) over the roots of p, via the
    Sylvester matrix determinant."""
    p = poly_strip(p)
    r = poly_strip(r)
    if not p or not r:
        raise ZeroPolynomialError("resultant needs two nonzero polynomials")
    dp = len(p) - 1
    dr = len(r) - 1
    if dp == 0:
        return p[0] ** dr
    if dr == 0:
        return r[0] ** dp
    ph = p[::-1]
    rh = r[::-1]
    M = []
    for i in range(dr):
        M.append([0] * i + ph + [0] * (dr - 1 - i))
    for i in range(dp):
        M.append([0] * i + rh + [0] * (dp - 1 - i))
    return _det_bareiss(M)


# ---------------------------------------------------------------------------
# Weil polynomials


@dataclass(frozen=True)
class WeilPoly:
    """Monic integer polynomial of degree 2g satisfying the functional
    equation over q = 2^n; coeffs are constant-first."""

    g: int
    coeffs: tuple[int, ...]
    n: int
    label: str = ""

    def __post_init__(self):
        g, n = self.g, self.n
        if len(self.coeffs) != 2 * g + 1:
            raise MalformedWeilPolyError(
                f"expected {2 * g + 1} coefficients, got {len(self.coeffs)}"
            )
        if self.coeffs[2 * g] != 1:
            raise MalformedWeilPolyError("polynomial must be monic")
        q = 1 << n
        for i in range(g + 1):
            if self.coeffs[i] != q ** (g - i) * self.coeffs[2 * g - i]:
                raise MalformedWeilPolyError(
                    f"functional equation fails at degree {i}: "
                    f"{self.coeffs[i]} != q^{g - i} * {self.coeffs[2 * g - i]}"
                )
        if not self.label:
            object.__setattr__(self, "label", render_poly(list(self.coeffs)))

    @property
    def degree(self) -> int:
        return 2 * self.g

    @property
    def a1(self) -> int:
        return self.coeffs[2 * self.g - 1]

    def a(self, j: int) -> int:
        if not 1 <= j <= self.g:
            raise ValueError(f"a_j defined for 1 <= j <= g, got j={j}")
        return self.coeffs[2 * self.g - j]

    def to_json_list(self) -> list[str]:
        return poly_to_json_list(list(self.coeffs))


def sx_check(p: WeilPoly, prime: int = 2) -> bool:
    """Supersingularity criterion: prime^ceil(jn/2) divides a_j for every
    1 <= j <= g."""
    q = 1 << p.n
    for i in range(p.g + 1):
        if p.coeffs[i] != q ** (p.g - i) * p.coeffs[2 * p.g - i]:
            raise MalformedWeilPolyError("functional equation violated")
    for j in range(1, p.g + 1):
        if p.a(j) % prime ** ((j * p.n + 1) // 2) != 0:
            return False
    return True


def _wp(high_first: list[int], n: int) -> WeilPoly:
    g = (len(high_first) - 1) // 2
    return WeilPoly(g=g, coeffs=tuple(reversed(high_first)), n=n)


def simple_ss_factors(n: int) -> list[WeilPoly]:
    """The 12 concrete characteristic polynomials of simple supersingular
    abelian varieties of dimension <= 4 over F_{2^n}, n odd, all sign choices
    expanded."""
    if n % 2 == 0 or not 3 <= n <= 63:
        raise ValueError(f"n must be odd in [3, 63], got {n}")
    q = 1 << n
    s = 1 << ((n + 1) // 2)
    return [
        _wp([1, s, q], n),
        _wp([1, -s, q], n),
        _wp([1, 0, q], n),
        _wp([1, 0, q, 0, q * q], n),
        _wp([1, 0, -q, 0, q * q], n),
        _wp([1, s, q, s * q, q * q], n),
        _wp([1, -s, q, -s * q, q * q], n),
        _wp([1, 0, -2 * q, 0, q * q], n),
        _wp([1, s, q, 0, -q * q, 0, q ** 3, s * q ** 3, q ** 4], n),
        _wp([1, -s, q, 0, -q * q, 0, q ** 3, -s * q ** 3, q ** 4], n),
        _wp([1, 0, 0, 0, 0, 0, 0, 0, q ** 4], n),
        _wp([1, 0, -q, 0, q * q, 0, -q ** 3, 0, q ** 4], n),
    ]


def hw_serre_bound(g: int, n: int) -> int:
    """g * floor(2 * sqrt(2^n)), computed exactly."""
    return g * isqrt(1 << (n + 2))


@dataclass(frozen=True)
class FactorMultiset:
    """A product of simple factors with multiplicities; models one candidate
    isogeny decomposition."""

    factors: tuple[tuple[WeilPoly, int], ...]
    total_degree: int
    a1: int

    def label(self) -> str:
        parts = []
        for p, m in self.factors:
            part = f"({p.label})"
            if m > 1:
                part += f"^{m}"
            parts.append(part)
        return " ".join(parts)

    def expand(self) -> list[int]:
        """Coefficients (constant-first) of the full product."""
        out = [1]
        for p, m in self.factors:
            for _ in range(m):
                out = poly_mul(out, list(p.coeffs))
        return out


def _make_multiset(pairs: list[tuple[WeilPoly, int]]) -> FactorMultiset:
    pairs = sorted(pairs, key=lambda pm: pm[0].label)
    total = sum(2 * p.g * m for p, m in pairs)
    a1 = sum(p.a1 * m for p, m in pairs)
    return FactorMultiset(factors=tuple(pairs), total_degree=total, a1=a1)


def enumerate_products(n: int, target_degree: int = 8) -> list[FactorMultiset]:
    """All multisets of catalog factors with total degree ``target_degree``,
    sorted by (a1, label)."""
    if target_degree % 2 != 0 or target_degree <= 0:
        raise ValueError("target degree must be a positive even integer")
    catalog = simple_ss_factors(n)
    results: list[FactorMultiset] = []

    def rec(idx: int, remaining: int, chosen: list[tuple[WeilPoly, int]]):
        if remaining == 0:
            results.append(_make_multiset(chosen))
            return
        if idx == len(catalog):
            return
        deg = 2 * catalog[idx].g
        for mult in range(remaining // deg, -1, -1):
            if mult:
                rec(idx + 1, remaining - mult * deg,
                    chosen + [(catalog[idx], mult)])
            else:
                rec(idx + 1, remaining, chosen)

    rec(0, target_degree, [])
    results.sort(key=lambda ms: (ms.a1, ms.label()))
    return results


def filter_by_serre(multisets, g: int, n: int) -> list[FactorMultiset]:
    """Keep candidates whose |a1| respects |N - (q+1)| <= g * floor(2 sqrt q)."""
    bound = hw_serre_bound(g, n)
    return [ms for ms in multisets if abs(ms.a1) <= bound]


def real_weil_poly(p: WeilPoly) -> list[int]:
    """h of degree g with P(X) = X^g h(X + q/X); the roots of h are the
    eigenvalue-pair sums omega + q/omega."""
    g, q = p.g, 1 << p.n
    rem = list(p.coeffs)
    h = [0] * (g + 1)
    for j in range(g, -1, -1):
        b = rem[g + j]
        h[j] = b
        for k in range(j + 1):
            rem[g + j - 2 * k] -= b * comb(j, k) * q ** k
    if any(rem):
        raise MalformedWeilPolyError(
            "polynomial is not symmetric under omega -> q/omega"
        )
    return h


def reduced_frobver_poly(ms: FactorMultiset) -> list[int]:
    """Monic integer polynomial whose roots are (omega + q/omega) / 2^((n-1)/2)
    over all eigenvalue pairs of the product, with multiplicity.  Raises
    :class:`NotReducibleError` when a pair sum is not divisible by the scale."""
    if not ms.factors:
        raise ValueError("empty multiset")
    n = ms.factors[0][0].n
    if any(p.n != n for p, _ in ms.factors):
        raise ValueError("mixed field degrees in one multiset")
    scale = 1 << ((n - 1) // 2)
    out = [1]
    for p, mult in ms.factors:
        h = real_weil_poly(p)
        g = p.g
        reduced = [0] * (g + 1)
        for k in range(g + 1):
            denom = scale ** (g - k)
            if h[k] % denom != 0:
                raise NotReducibleError(
                    f"pair-sum coefficient {h[k]} of {p.label} is not "
                    f"divisible by {denom}"
                )
            reduced[k] = h[k] // denom
        for _ in range(mult):
            out = poly_mul(out, reduced)
    return out
