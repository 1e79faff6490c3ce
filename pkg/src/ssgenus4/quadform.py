"""Quadratic forms Q(x) = Tr(f x^9 + a x^5 + b x^3 + c x) on F_{2^n}.

The polarization B(x, y) = Q(x+y) + Q(x) + Q(y) is a symplectic bilinear
form whose radical W equals the kernel of the linearized polynomial

    L(u) = f u + f^8 u^64 + a^2 u^2 + a^8 u^32 + b^4 u^4 + b^8 u^16,

which this module computes two independent ways: by nullspace elimination on
the matrix of u -> L(u) (:func:`kernel_W`) and by brute-force pairing against
basis vectors (:func:`radical_oracle`).  :func:`classify_form` derives the
rank data and the predicted magnitude of the curve character sum.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gf2
from .errors import FieldTooLargeError
from .field import FieldSpec

RADICAL_ORACLE_MAX_N = 17


@dataclass(frozen=True)
class QuadraticFormSpec:
    field: FieldSpec
    f: int
    a: int
    b: int
    c: int

    def __post_init__(self):
        q = self.field.q
        for name in ("f", "a", "b", "c"):
            v = getattr(self, name)
            if not 0 <= v < q:
                raise ValueError(f"coefficient {name}={v:#x} outside F_{{2^{self.field.n}}}")


@dataclass(frozen=True)
class FormProfile:
    """Classification of one form: radical basis and rank bookkeeping.

    ``predicted_abs_S`` is 0 unless Q vanishes identically on W, in which
    case it is 2^((n+w)/2).  ``M`` = #{x : Q(x) = 0} is filled only when the
    field was small enough to enumerate (see ``classify_form``).
    """

    w: int
    W_basis: tuple[int, ...]
    q_vanishes_on_W: bool
    dim_W0: int
    rank_B: int
    rank_Q: int
    predicted_abs_S: int
    M: int | None = None

    def to_json_dict(self) -> dict:
        out = {
            "w": self.w,
            "q_vanishes_on_W": self.q_vanishes_on_W,
            "rank_B": self.rank_B,
            "rank_Q": self.rank_Q,
            "predicted_abs_S": str(self.predicted_abs_S),
            "W_basis": [hex(v) for v in self.W_basis],
        }
        if self.M is not None:
            out["M"] = str(self.M)
        return out


def eval_Q(spec: QuadraticFormSpec, x: int) -> int:
    F = spec.field
    x2 = F.mul(x, x)
    x3 = F.mul(x2, x)
    x5 = F.mul(x3, x2)
    x9 = F.mul(F.mul(x3, x3), x3)
    v = F.mul(spec.f, x9) ^ F.mul(spec.a, x5) ^ F.mul(spec.b, x3) ^ F.mul(spec.c, x)
    return F.trace(v)


def polarize(spec: QuadraticFormSpec, x: int, y: int) -> int:
    return eval_Q(spec, x ^ y) ^ eval_Q(spec, x) ^ eval_Q(spec, y)


def linearized_L(spec: QuadraticFormSpec, u: int) -> int:
    F = spec.field
    f, a, b = spec.f, spec.a, spec.b
    return (
        F.mul(f, u)
        ^ F.mul(F.frobenius(f, 3), F.frobenius(u, 6))
        ^ F.mul(F.frobenius(a, 1), F.frobenius(u, 1))
        ^ F.mul(F.frobenius(a, 3), F.frobenius(u, 5))
        ^ F.mul(F.frobenius(b, 2), F.frobenius(u, 2))
        ^ F.mul(F.frobenius(b, 3), F.frobenius(u, 4))
    )


def kernel_W(spec: QuadraticFormSpec) -> list[int]:
    """Reduced echelon basis of {u : L(u) = 0}, via nullspace elimination on
    the n x n GF(2) matrix of L in the polynomial basis."""
    n = spec.field.n
    cols = [linearized_L(spec, 1 << j) for j in range(n)]
    rows = [sum(((cols[j] >> i) & 1) << j for j in range(n)) for i in range(n)]
    return gf2.nullspace(rows, n)


def radical_oracle(spec: QuadraticFormSpec) -> list[int]:
    """Brute-force radical of B: scan every x and keep those pairing to zero
    with all basis vectors (enough, by bilinearity).  Same normal form as
    :func:`kernel_W`."""
    n = spec.field.n
    if n > RADICAL_ORACLE_MAX_N:
        raise FieldTooLargeError(
            f"radical oracle is capped at n <= {RADICAL_ORACLE_MAX_N}, got {n}"
        )
    members = []
    for x in range(spec.field.q):
        if all(polarize(spec, x, 1 << j) == 0 for j in range(n)):
            members.append(x)
    return gf2.rref(members)


def classify_form(spec: QuadraticFormSpec, m_exhaustive_bound: int = 0) -> FormProfile:
    """Full classification.  Q's vanishing on W is decided by evaluating Q on
    every element of W (at most 64), not by linearity assumptions.  M is
    enumerated only when n <= m_exhaustive_bound."""
    n = spec.field.n
    basis = kernel_W(spec)
    w = len(basis)
    values = [eval_Q(spec, u) for u in gf2.span(basis)]
    zeros = values.count(0)
    vanishes = zeros == len(values)
    if not vanishes and zeros != len(values) // 2:
        raise AssertionError(
            "Q restricted to its radical is not linear; this contradicts the "
            "polarization identity and indicates an arithmetic bug"
        )
    dim_W0 = w if vanishes else w - 1
    M = None
    if n <= m_exhaustive_bound:
        M = sum(1 for x in range(spec.field.q) if eval_Q(spec, x) == 0)
    return FormProfile(
        w=w,
        W_basis=tuple(basis),
        q_vanishes_on_W=vanishes,
        dim_W0=dim_W0,
        rank_B=n - w,
        rank_Q=n - dim_W0,
        predicted_abs_S=(1 << ((n + w) // 2)) if vanishes else 0,
        M=M,
    )
