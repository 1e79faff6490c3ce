"""Pure-Python arithmetic kernels.

This module is the fallback implementation selected by :mod:`ssgenus4.backend`
when the compiled extension is unavailable.  Every function here must return
bit-identical results to its counterpart in ``_speedups``; the test suite
enforces that.

Field elements are ints in [0, 2^n) with bit i holding the coefficient of x^i
in the polynomial basis.  Character-sum scans are bit-sliced: for each
monomial exponent e in {9, 5, 3, 1} and coefficient u, the q-bit row
R_e[u] = (Tr(u * x^e))_{x in F_q} is a Python int, and a curve's sign vector
is the XOR of four rows, so one popcount yields the sum.
"""

from __future__ import annotations

from . import gf2

BACKEND = "python"

# Row tables are built once per (n, modulus) and cached; above this the
# 4 * q^2 bits of tables are no longer worth it.
_ROW_TABLE_MAX_N = 13


def gf_mul(a: int, b: int, modulus: int, n: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if (a >> n) & 1:
            a ^= modulus
    return r


def gf_pow(a: int, e: int, modulus: int, n: int) -> int:
    r = 1
    while e:
        if e & 1:
            r = gf_mul(r, a, modulus, n)
        a = gf_mul(a, a, modulus, n)
        e >>= 1
    return r


def gf_frob(a: int, k: int, modulus: int, n: int) -> int:
    for _ in range(k % n):
        a = gf_mul(a, a, modulus, n)
    return a


def _trace_bit(a: int, tmask: int) -> int:
    return (a & tmask).bit_count() & 1


class ScanContext:
    """Per-field tables shared by the scan kernels."""

    __slots__ = (
        "n", "q", "modulus", "tmask", "pow3", "pow5", "pow9", "mu",
        "brows", "tables", "frob_basis", "patterns",
    )

    def __init__(self, n, q, modulus, tmask, pow3, pow5, pow9, mu, brows,
                 tables, frob_basis, patterns):
        self.n = n
        self.q = q
        self.modulus = modulus
        self.tmask = tmask
        self.pow3 = pow3
        self.pow5 = pow5
        self.pow9 = pow9
        self.mu = mu
        self.brows = brows
        self.tables = tables
        self.frob_basis = frob_basis
        self.patterns = patterns


_CTX_CACHE: dict = {}


def make_scan_context(n: int, modulus: int, tmask: int) -> ScanContext:
    key = (n, modulus)
    ctx = _CTX_CACHE.get(key)
    if ctx is not None:
        return ctx
    q = 1 << n
    pow3 = [0] * q
    pow5 = [0] * q
    pow9 = [0] * q
    for x in range(q):
        x2 = gf_mul(x, x, modulus, n)
        x3 = gf_mul(x2, x, modulus, n)
        pow3[x] = x3
        pow5[x] = gf_mul(x3, x2, modulus, n)
        pow9[x] = gf_mul(gf_mul(x3, x3, modulus, n), x3, modulus, n)

    # mu[i] bit j = Tr(x^(i+j)); then Tr(t * e_i) = parity(t & mu[i]).
    trp = []
    t = 1
    for _ in range(2 * n - 1):
        trp.append(_trace_bit(t, tmask))
        t = gf_mul(t, 2, modulus, n)
    mu = [sum(trp[i + j] << j for j in range(n)) for i in range(n)]

    brows = {}
    for exp, tab in ((9, pow9), (5, pow5), (3, pow3), (1, None)):
        rows = []
        for i in range(n):
            m = mu[i]
            row = 0
            if tab is None:
                for x in range(q):
                    row |= ((x & m).bit_count() & 1) << x
            else:
                for x in range(q):
                    row |= ((tab[x] & m).bit_count() & 1) << x
            rows.append(row)
        brows[exp] = rows

    tables = None
    if n <= _ROW_TABLE_MAX_N:
        tables = {}
        for exp, rows in brows.items():
            full = [0] * q
            for u in range(1, q):
                low = u & -u
                full[u] = full[u ^ low] ^ rows[low.bit_length() - 1]
            tables[exp] = full

    frob_basis = [[gf_frob(1 << j, k, modulus, n) for j in range(n)]
                  for k in range(7)]
    patterns = [sum(((j >> i) & 1) << j for j in range(64)) for i in range(6)]
    ctx = ScanContext(n, q, modulus, tmask, pow3, pow5, pow9, mu, brows,
                      tables, frob_basis, patterns)
    _CTX_CACHE[key] = ctx
    return ctx


def _row(ctx: ScanContext, exp: int, coeff: int) -> int:
    if ctx.tables is not None:
        return ctx.tables[exp][coeff]
    rows = ctx.brows[exp]
    r = 0
    while coeff:
        low = coeff & -coeff
        r ^= rows[low.bit_length() - 1]
        coeff ^= low
    return r


def _nu(ctx: ScanContext, t: int) -> int:
    """Mask with bit j = Tr(t * e_j)."""
    r = 0
    mu = ctx.mu
    while t:
        low = t & -t
        r ^= mu[low.bit_length() - 1]
        t ^= low
    return r


def _fab_profile(ctx: ScanContext, f: int, a: int, b: int):
    """Kernel data of L(u) = f u + f^8 u^64 + a^2 u^2 + a^8 u^32 + b^4 u^4
    + b^8 u^16 for one coefficient triple: (w, basis, q0mask, nus)."""
    n, mod = ctx.n, ctx.modulus
    f8 = gf_frob(f, 3, mod, n)
    a2 = gf_frob(a, 1, mod, n)
    a8 = gf_frob(a, 3, mod, n)
    b4 = gf_frob(b, 2, mod, n)
    b8 = gf_frob(b, 3, mod, n)
    E = ctx.frob_basis
    cols = [
        gf_mul(f, 1 << j, mod, n)
        ^ gf_mul(f8, E[6][j], mod, n)
        ^ gf_mul(a2, E[1][j], mod, n)
        ^ gf_mul(a8, E[5][j], mod, n)
        ^ gf_mul(b4, E[2][j], mod, n)
        ^ gf_mul(b8, E[4][j], mod, n)
        for j in range(n)
    ]
    rows = [sum(((cols[j] >> i) & 1) << j for j in range(n)) for i in range(n)]
    basis = gf2.nullspace(rows, n)
    w = len(basis)
    if w > 6:
        raise ValueError("scan kernels require f != 0 (radical dim <= 6)")

    tau_f = _nu(ctx, f)
    tau_a = _nu(ctx, a)
    tau_b = _nu(ctx, b)
    q0mask = 0
    for s, u in enumerate(gf2.span(basis)):
        bit = (
            ((ctx.pow9[u] & tau_f).bit_count()
             ^ (ctx.pow5[u] & tau_a).bit_count()
             ^ (ctx.pow3[u] & tau_b).bit_count()) & 1
        )
        q0mask |= bit << s
    nus = [_nu(ctx, v) for v in basis]
    return w, basis, q0mask, nus


def _vanish_bit(ctx, c, w, q0mask, nus):
    linm = 0
    for i in range(w):
        if (c & nus[i]).bit_count() & 1:
            linm ^= ctx.patterns[i] & ((1 << (1 << w)) - 1)
    return 1 if linm == q0mask else 0


def scan_block(ctx: ScanContext, f: int, a: int, b: int):
    """All-c sweep for one (f, a, b): returns (w, vanish bytes, S0 list) where
    S0[c] is the d=0 character sum and vanish[c] says Q restricted to the
    radical is identically zero."""
    q = ctx.q
    w, _basis, q0mask, nus = _fab_profile(ctx, f, a, b)
    row_fab = _row(ctx, 9, f) ^ _row(ctx, 5, a) ^ _row(ctx, 3, b)
    S0 = [0] * q
    vanish = bytearray(q)
    for c in range(q):
        vanish[c] = _vanish_bit(ctx, c, w, q0mask, nus)
        S0[c] = q - 2 * (row_fab ^ _row(ctx, 1, c)).bit_count()
    return w, vanish, S0


def classify_many(ctx: ScanContext, fs, as_, bs, cs):
    """Per-curve (S0, w, vanish) for parallel coefficient lists."""
    q = ctx.q
    S0 = []
    ws = []
    vanish = bytearray(len(fs))
    for idx in range(len(fs)):
        f, a, b, c = fs[idx], as_[idx], bs[idx], cs[idx]
        w, _basis, q0mask, nus = _fab_profile(ctx, f, a, b)
        row = _row(ctx, 9, f) ^ _row(ctx, 5, a) ^ _row(ctx, 3, b) ^ _row(ctx, 1, c)
        S0.append(q - 2 * row.bit_count())
        ws.append(w)
        vanish[idx] = _vanish_bit(ctx, c, w, q0mask, nus)
    return S0, ws, vanish


def char_sum(n: int, modulus: int, tmask: int, f: int, a: int, b: int,
             c: int, d: int) -> int:
    q = 1 << n
    if n <= _ROW_TABLE_MAX_N:
        ctx = make_scan_context(n, modulus, tmask)
        row = _row(ctx, 9, f) ^ _row(ctx, 5, a) ^ _row(ctx, 3, b) ^ _row(ctx, 1, c)
        s0 = q - 2 * row.bit_count()
        return -s0 if _trace_bit(d, tmask) else s0
    s = 0
    for x in range(q):
        x2 = gf_mul(x, x, modulus, n)
        x3 = gf_mul(x2, x, modulus, n)
        x5 = gf_mul(x3, x2, modulus, n)
        x9 = gf_mul(gf_mul(x3, x3, modulus, n), x3, modulus, n)
        v = (gf_mul(f, x9, modulus, n) ^ gf_mul(a, x5, modulus, n)
             ^ gf_mul(b, x3, modulus, n) ^ gf_mul(c, x, modulus, n) ^ d)
        s += 1 - 2 * ((v & tmask).bit_count() & 1)
    return s


def direct_affine_count(n: int, modulus: int, f: int, a: int, b: int,
                        c: int, d: int) -> int:
    """#{(x, y) : y^2 + y = f x^9 + a x^5 + b x^3 + c x + d}, by evaluating
    the left side at every y and the right side at every x.  No traces."""
    q = 1 << n
    counts = bytearray(q)
    for y in range(q):
        counts[gf_mul(y, y, modulus, n) ^ y] += 1
    total = 0
    for x in range(q):
        x2 = gf_mul(x, x, modulus, n)
        x3 = gf_mul(x2, x, modulus, n)
        x5 = gf_mul(x3, x2, modulus, n)
        x9 = gf_mul(gf_mul(x3, x3, modulus, n), x3, modulus, n)
        rhs = (gf_mul(f, x9, modulus, n) ^ gf_mul(a, x5, modulus, n)
               ^ gf_mul(b, x3, modulus, n) ^ gf_mul(c, x, modulus, n) ^ d)
        total += counts[rhs]
    return total
