"""Arithmetic in F_{2^n} for odd n in [3, 63].

Elements are ints: bit i is the coefficient of x^i in the polynomial basis
F_2[x]/(modulus).  A :class:`FieldSpec` is immutable and safe to share across
workers; all operations are pure functions of their arguments.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass

from . import backend
from .errors import (
    DegreeOutOfRangeError,
    EvenDegreeError,
    NotPrimitiveError,
    ReducibleModulusError,
    WrongDegreeError,
)

# Lexicographically least irreducible polynomial of each odd degree, as an
# int with bit i = coefficient of x^i.  (For n = 11 this is x^11 + x^2 + 1.)
DEFAULT_MODULI = {
    3: 0xB,
    5: 0x25,
    7: 0x83,
    9: 0x203,
    11: 0x805,
    13: 0x201B,
    15: 0x8003,
    17: 0x20009,
    19: 0x80027,
    21: 0x200005,
    23: 0x800021,
    25: 0x2000009,
    27: 0x8000027,
    29: 0x20000005,
    31: 0x80000009,
    33: 0x20000004B,
    35: 0x800000005,
    37: 0x200000003F,
    39: 0x8000000011,
    41: 0x20000000009,
    43: 0x80000000059,
    45: 0x20000000001B,
    47: 0x800000000021,
    49: 0x2000000000071,
    51: 0x800000000004B,
    53: 0x20000000000047,
    55: 0x80000000000047,
    57: 0x200000000000011,
    59: 0x80000000000007B,
    61: 0x2000000000000027,
    63: 0x8000000000000003,
}


def _poly_mod(a: int, b: int) -> int:
    db = b.bit_length() - 1
    while a.bit_length() - 1 >= db and a:
        a ^= b << (a.bit_length() - 1 - db)
    return a


def _poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _poly_mod(a, b)
    return a


def _prime_factors(m: int) -> list[int]:
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


def is_irreducible(modulus: int, n: int) -> bool:
    """Rabin test: x^(2^n) = x mod m, and gcd(x^(2^(n/l)) - x, m) = 1 for
    every prime l | n.  (The gcd is required: for composite n a product of
    factors of mixed degrees can evade the plain inequality test.)"""

    def x_pow_2k(k: int) -> int:
        t = 2
        for _ in range(k):
            t = backend.active.gf_mul(t, t, modulus, n)
        return t

    if x_pow_2k(n) != 2:
        return False
    for ell in _prime_factors(n):
        if _poly_gcd(modulus, x_pow_2k(n // ell) ^ 2) != 1:
            return False
    return True


@functools.lru_cache(maxsize=None)
def _order_prime_factors(n: int) -> tuple[int, ...]:
    from sympy import factorint  # deferred: pulls in sympy only when needed

    return tuple(sorted(factorint((1 << n) - 1)))


@dataclass(frozen=True)
class FieldSpec:
    """A concrete realization of F_{2^n}."""

    n: int
    modulus: int
    trace_mask: int
    primitive_element: int | None = None

    @property
    def q(self) -> int:
        return 1 << self.n

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        return backend.active.gf_mul(a, b, self.modulus, self.n)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            raise ValueError("exponent must be non-negative")
        return backend.active.gf_pow(a, e, self.modulus, self.n)

    def frobenius(self, a: int, k: int = 1) -> int:
        if k < 0:
            raise ValueError("Frobenius iterate must be non-negative")
        return backend.active.gf_frob(a, k, self.modulus, self.n)

    def trace(self, a: int) -> int:
        return (a & self.trace_mask).bit_count() & 1

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self.pow(a, self.q - 2)

    def generator(self) -> int:
        if self.primitive_element is None:
            raise NotPrimitiveError(
                f"no primitive element recorded for this field (n={self.n})"
            )
        return self.primitive_element

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "modulus_hex": hex(self.modulus),
            "primitive_hex": (
                hex(self.primitive_element)
                if self.primitive_element is not None
                else None
            ),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def multiplicative_order_is_full(field_n: int, modulus: int, a: int) -> bool:
    """True iff a generates the full multiplicative group of 2^n - 1 elements."""
    if a == 0:
        return False
    group = (1 << field_n) - 1
    if backend.active.gf_pow(a, group, modulus, field_n) != 1:
        return False
    for p in _order_prime_factors(field_n):
        if backend.active.gf_pow(a, group // p, modulus, field_n) == 1:
            return False
    return True


def _trace_mask(modulus: int, n: int) -> int:
    mask = 0
    for i in range(n):
        t = 1 << i
        acc = t
        for _ in range(n - 1):
            t = backend.active.gf_mul(t, t, modulus, n)
            acc ^= t
        if acc not in (0, 1):
            raise ReducibleModulusError(
                f"trace of basis element x^{i} is not in GF(2); "
                f"modulus {hex(modulus)} cannot define a field"
            )
        mask |= acc << i
    return mask


def make_field(n: int, modulus: int | None = None,
               primitive: int | None = None) -> FieldSpec:
    """Validated F_{2^n}.

    ``modulus`` defaults to the built-in table.  If ``primitive`` is given its
    order is verified; otherwise the element x is recorded as the generator
    whenever it happens to be primitive (it is for the default n = 11 field).
    """
    if not isinstance(n, int):
        raise TypeError("n must be an int")
    if not 3 <= n <= 63:
        raise DegreeOutOfRangeError(f"n must be in [3, 63], got {n}")
    if n % 2 == 0:
        raise EvenDegreeError(f"n must be odd, got {n}")
    if modulus is None:
        modulus = DEFAULT_MODULI[n]
    if modulus.bit_length() != n + 1:
        raise WrongDegreeError(
            f"modulus {hex(modulus)} is not monic of degree {n}"
        )
    if not is_irreducible(modulus, n):
        raise ReducibleModulusError(f"modulus {hex(modulus)} factors over GF(2)")
    tmask = _trace_mask(modulus, n)

    if primitive is not None:
        if not 0 < primitive < (1 << n):
            raise NotPrimitiveError(f"{hex(primitive)} is not a field element")
        if not multiplicative_order_is_full(n, modulus, primitive):
            raise NotPrimitiveError(
                f"{hex(primitive)} has multiplicative order < 2^{n} - 1"
            )
        prim = primitive
    elif multiplicative_order_is_full(n, modulus, 2):
        prim = 2
    else:
        prim = None
    return FieldSpec(n=n, modulus=modulus, trace_mask=tmask,
                     primitive_element=prim)


def field_from_json(text: str) -> FieldSpec:
    data = json.loads(text)
    prim = data.get("primitive_hex")
    return make_field(
        int(data["n"]),
        int(data["modulus_hex"], 16),
        int(prim, 16) if prim is not None else None,
    )


def element_to_hex(a: int) -> str:
    return hex(a)


def element_from_hex(text: str) -> int:
    v = int(text, 16)
    if v < 0:
        raise ValueError("field elements are non-negative bit vectors")
    return v
