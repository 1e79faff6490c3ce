# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled arithmetic kernels.

Bit-identical twin of ``ssgenus4._pure``; see that module for the algorithm
notes.  Field elements travel as uint64 (n <= 63).  Character-sum rows are
bit-sliced into arrays of 64-bit words; a curve's sum is one XOR pass plus a
popcount.  The scan kernels require f != 0 (radical dimension <= 6).
"""

from libc.stdint cimport int64_t, uint8_t, uint64_t

import numpy as np

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil

BACKEND = "compiled"

_ROW_TABLE_MAX_N = 13


# ---------------------------------------------------------------------------
# base field ops

cdef inline uint64_t _mul(uint64_t a, uint64_t b, uint64_t modlow,
                          uint64_t himask, uint64_t nmask) nogil:
    cdef uint64_t r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        if a & himask:
            a = ((a << 1) & nmask) ^ modlow
        else:
            a = a << 1
    return r


cdef inline int _parity(uint64_t x) nogil:
    return __builtin_popcountll(x) & 1


cdef inline uint64_t _frob_k(uint64_t a, int k, uint64_t modlow,
                             uint64_t himask, uint64_t nmask) nogil:
    cdef int i
    for i in range(k):
        a = _mul(a, a, modlow, himask, nmask)
    return a


def gf_mul(a, b, modulus, n):
    cdef int cn = n
    cdef uint64_t nmask = ((<uint64_t>1) << cn) - 1
    return _mul(<uint64_t>a, <uint64_t>b, <uint64_t>modulus & nmask,
                (<uint64_t>1) << (cn - 1), nmask)


def gf_pow(a, e, modulus, n):
    cdef int cn = n
    cdef uint64_t nmask = ((<uint64_t>1) << cn) - 1
    cdef uint64_t modlow = <uint64_t>modulus & nmask
    cdef uint64_t himask = (<uint64_t>1) << (cn - 1)
    cdef uint64_t r = 1
    cdef uint64_t base = <uint64_t>a
    ee = e  # may exceed 64 bits; stays a Python int
    while ee:
        if ee & 1:
            r = _mul(r, base, modlow, himask, nmask)
        base = _mul(base, base, modlow, himask, nmask)
        ee >>= 1
    return r


def gf_frob(a, k, modulus, n):
    cdef int cn = n
    cdef uint64_t nmask = ((<uint64_t>1) << cn) - 1
    return _frob_k(<uint64_t>a, <int>(k % n), <uint64_t>modulus & nmask,
                   (<uint64_t>1) << (cn - 1), nmask)


# ---------------------------------------------------------------------------
# character sums

cdef void _mu_masks(int n, uint64_t modlow, uint64_t himask, uint64_t nmask,
                    uint64_t tmask, uint64_t *mu) nogil:
    # mu[i] bit j = Tr(x^(i+j)); Tr(t * e_i) = parity(t & mu[i])
    cdef uint64_t trp[126]
    cdef uint64_t t = 1
    cdef int k, i, j
    for k in range(2 * n - 1):
        trp[k] = _parity(t & tmask)
        t = _mul(t, 2, modlow, himask, nmask)
    for i in range(n):
        mu[i] = 0
        for j in range(n):
            mu[i] |= trp[i + j] << j


cdef inline uint64_t _nu_mask(uint64_t t, uint64_t *mu) nogil:
    # mask with bit j = Tr(t * e_j)
    cdef uint64_t r = 0
    cdef int i = 0
    while t:
        if t & 1:
            r ^= mu[i]
        t >>= 1
        i += 1
    return r


def char_sum(n, modulus, tmask_, f_, a_, b_, c_, d_):
    cdef int cn = n
    cdef uint64_t q = (<uint64_t>1) << cn
    cdef uint64_t nmask = q - 1
    cdef uint64_t modlow = <uint64_t>modulus & nmask
    cdef uint64_t himask = (<uint64_t>1) << (cn - 1)
    cdef uint64_t tmask = tmask_
    cdef uint64_t f = f_, a = a_, b = b_, c = c_, d = d_
    cdef int64_t s = 0
    cdef uint64_t x, x2, x3, x5, x9, v
    cdef uint64_t mu[63]
    cdef uint64_t v2[256]
    cdef uint64_t v4[256]
    cdef uint64_t v8[256]
    cdef uint8_t bitH[256]
    cdef uint64_t vv, v3, v5, v9
    cdef uint64_t u, uh, u2, u3, u4, u5p, u8, u9p, A, mA, m2, m4, m8
    cdef int gbit

    if cn < 16:
        with nogil:
            for x in range(q):
                x2 = _mul(x, x, modlow, himask, nmask)
                x3 = _mul(x2, x, modlow, himask, nmask)
                x5 = _mul(x3, x2, modlow, himask, nmask)
                x9 = _mul(_mul(x3, x3, modlow, himask, nmask), x3,
                          modlow, himask, nmask)
                v = (_mul(f, x9, modlow, himask, nmask)
                     ^ _mul(a, x5, modlow, himask, nmask)
                     ^ _mul(b, x3, modlow, himask, nmask)
                     ^ _mul(c, x, modlow, himask, nmask) ^ d)
                s += 1 - 2 * _parity(v & tmask)
        return s

    # split x = u + v over a 256-element low block: the v-only part is
    # tabulated once, the cross terms are linear in v, v^2, v^4, v^8 with
    # per-u masks, so the inner loop is mask parities only.
    with nogil:
        _mu_masks(cn, modlow, himask, nmask, tmask, mu)
        for vv in range(256):
            v2[vv] = _mul(vv, vv, modlow, himask, nmask)
            v3 = _mul(v2[vv], vv, modlow, himask, nmask)
            v4[vv] = _mul(v2[vv], v2[vv], modlow, himask, nmask)
            v5 = _mul(v3, v2[vv], modlow, himask, nmask)
            v8[vv] = _mul(v4[vv], v4[vv], modlow, himask, nmask)
            v9 = _mul(v8[vv], vv, modlow, himask, nmask)
            bitH[vv] = _parity((_mul(f, v9, modlow, himask, nmask)
                                ^ _mul(a, v5, modlow, himask, nmask)
                                ^ _mul(b, v3, modlow, himask, nmask)
                                ^ _mul(c, vv, modlow, himask, nmask)) & tmask)
        for uh in range(q >> 8):
            u = uh << 8
            u2 = _mul(u, u, modlow, himask, nmask)
            u3 = _mul(u2, u, modlow, himask, nmask)
            u4 = _mul(u2, u2, modlow, himask, nmask)
            u5p = _mul(u3, u2, modlow, himask, nmask)
            u8 = _mul(u4, u4, modlow, himask, nmask)
            u9p = _mul(u8, u, modlow, himask, nmask)
            gbit = _parity((_mul(f, u9p, modlow, himask, nmask)
                            ^ _mul(a, u5p, modlow, himask, nmask)
                            ^ _mul(b, u3, modlow, himask, nmask)
                            ^ _mul(c, u, modlow, himask, nmask) ^ d) & tmask)
            A = (_mul(f, u8, modlow, himask, nmask)
                 ^ _mul(a, u4, modlow, himask, nmask)
                 ^ _mul(b, u2, modlow, himask, nmask))
            mA = _nu_mask(A, mu)
            m8 = _nu_mask(_mul(f, u, modlow, himask, nmask), mu)
            m4 = _nu_mask(_mul(a, u, modlow, himask, nmask), mu)
            m2 = _nu_mask(_mul(b, u, modlow, himask, nmask), mu)
            for vv in range(256):
                s += 1 - 2 * (gbit ^ bitH[vv]
                              ^ _parity(vv & mA)
                              ^ _parity(v2[vv] & m2)
                              ^ _parity(v4[vv] & m4)
                              ^ _parity(v8[vv] & m8))
    return s


def direct_affine_count(n, modulus, f_, a_, b_, c_, d_):
    cdef int cn = n
    cdef uint64_t q = (<uint64_t>1) << cn
    cdef uint64_t nmask = q - 1
    cdef uint64_t modlow = <uint64_t>modulus & nmask
    cdef uint64_t himask = (<uint64_t>1) << (cn - 1)
    cdef uint64_t f = f_, a = a_, b = b_, c = c_, d = d_
    counts_arr = np.zeros(q, dtype=np.uint8)
    cdef uint8_t[::1] counts = counts_arr
    cdef uint64_t x, y, x2, x3, x5, x9, rhs
    cdef int64_t total = 0
    with nogil:
        for y in range(q):
            counts[_mul(y, y, modlow, himask, nmask) ^ y] += 1
        for x in range(q):
            x2 = _mul(x, x, modlow, himask, nmask)
            x3 = _mul(x2, x, modlow, himask, nmask)
            x5 = _mul(x3, x2, modlow, himask, nmask)
            x9 = _mul(_mul(x3, x3, modlow, himask, nmask), x3,
                      modlow, himask, nmask)
            rhs = (_mul(f, x9, modlow, himask, nmask)
                   ^ _mul(a, x5, modlow, himask, nmask)
                   ^ _mul(b, x3, modlow, himask, nmask)
                   ^ _mul(c, x, modlow, himask, nmask) ^ d)
            total += counts[rhs]
    return total


# ---------------------------------------------------------------------------
# scan kernels

class ScanContext:
    __slots__ = ("n", "q", "modulus", "tmask", "words", "pow3", "pow5",
                 "pow9", "mu", "brows", "tables", "frob_basis")

    def __init__(self, **kw):
        for k, v in kw.items():
            setattr(self, k, v)


_CTX_CACHE = {}

# row-table exponent order: index 0 -> x^9, 1 -> x^5, 2 -> x^3, 3 -> x


def make_scan_context(n, modulus, tmask_):
    key = (int(n), int(modulus))
    hit = _CTX_CACHE.get(key)
    if hit is not None:
        return hit
    cdef int cn = n
    cdef uint64_t q = (<uint64_t>1) << cn
    cdef uint64_t nmask = q - 1
    cdef uint64_t modlow = <uint64_t>modulus & nmask
    cdef uint64_t himask = (<uint64_t>1) << (cn - 1)
    cdef uint64_t tmask = tmask_
    cdef Py_ssize_t words = <Py_ssize_t>((q + 63) >> 6)

    pow3_arr = np.zeros(q, dtype=np.uint64)
    pow5_arr = np.zeros(q, dtype=np.uint64)
    pow9_arr = np.zeros(q, dtype=np.uint64)
    cdef uint64_t[::1] pow3 = pow3_arr
    cdef uint64_t[::1] pow5 = pow5_arr
    cdef uint64_t[::1] pow9 = pow9_arr
    cdef uint64_t x, x2, x3
    with nogil:
        for x in range(q):
            x2 = _mul(x, x, modlow, himask, nmask)
            x3 = _mul(x2, x, modlow, himask, nmask)
            pow3[x] = x3
            pow5[x] = _mul(x3, x2, modlow, himask, nmask)
            pow9[x] = _mul(_mul(x3, x3, modlow, himask, nmask), x3,
                           modlow, himask, nmask)

    cdef uint64_t mubuf[63]
    _mu_masks(cn, modlow, himask, nmask, tmask, mubuf)
    mu_arr = np.zeros(cn, dtype=np.uint64)
    cdef uint64_t[::1] mu = mu_arr
    cdef int i
    for i in range(cn):
        mu[i] = mubuf[i]

    brows_arr = np.zeros((4, cn, words), dtype=np.uint64)
    cdef uint64_t[:, :, ::1] brows = brows_arr
    with nogil:
        for i in range(cn):
            for x in range(q):
                if _parity(pow9[x] & mubuf[i]):
                    brows[0, i, x >> 6] |= (<uint64_t>1) << (x & 63)
                if _parity(pow5[x] & mubuf[i]):
                    brows[1, i, x >> 6] |= (<uint64_t>1) << (x & 63)
                if _parity(pow3[x] & mubuf[i]):
                    brows[2, i, x >> 6] |= (<uint64_t>1) << (x & 63)
                if _parity(x & mubuf[i]):
                    brows[3, i, x >> 6] |= (<uint64_t>1) << (x & 63)

    tables_arr = None
    cdef uint64_t[:, :, ::1] tables
    cdef uint64_t u, low
    cdef int e, bidx
    cdef Py_ssize_t wdx
    if cn <= _ROW_TABLE_MAX_N:
        tables_arr = np.zeros((4, q, words), dtype=np.uint64)
        tables = tables_arr
        with nogil:
            for e in range(4):
                for u in range(1, q):
                    low = u & (~u + 1)
                    bidx = 0
                    while not (low >> bidx) & 1:
                        bidx += 1
                    for wdx in range(words):
                        tables[e, u, wdx] = (tables[e, u ^ low, wdx]
                                             ^ brows[e, bidx, wdx])

    frob_arr = np.zeros((7, cn), dtype=np.uint64)
    cdef uint64_t[:, ::1] frob = frob_arr
    cdef int k
    for k in range(7):
        for i in range(cn):
            frob[k, i] = _frob_k((<uint64_t>1) << i, k, modlow, himask, nmask)

    ctx = ScanContext(n=int(n), q=int(q), modulus=int(modulus),
                      tmask=int(tmask_), words=int(words), pow3=pow3_arr,
                      pow5=pow5_arr, pow9=pow9_arr, mu=mu_arr,
                      brows=brows_arr, tables=tables_arr, frob_basis=frob_arr)
    _CTX_CACHE[key] = ctx
    return ctx


cdef int _nullspace_rref(uint64_t *rows, int n, uint64_t *basis) nogil:
    """Nullspace of the n x n matrix (row i = bits over columns), reduced
    echelon basis with descending pivots written to ``basis``; returns dim."""
    cdef uint64_t work[63]
    cdef int pivot_cols[63]
    cdef int i, j, col, cur, sel, npiv, w, lead
    cdef uint64_t v, tmp
    for i in range(n):
        work[i] = rows[i]
    cur = 0
    npiv = 0
    for col in range(n - 1, -1, -1):
        sel = -1
        for i in range(cur, n):
            if (work[i] >> col) & 1:
                sel = i
                break
        if sel < 0:
            continue
        tmp = work[cur]
        work[cur] = work[sel]
        work[sel] = tmp
        for i in range(n):
            if i != cur and (work[i] >> col) & 1:
                work[i] ^= work[cur]
        pivot_cols[npiv] = col
        npiv += 1
        cur += 1
    w = 0
    for col in range(n):
        sel = 0
        for i in range(npiv):
            if pivot_cols[i] == col:
                sel = 1
                break
        if sel:
            continue
        v = (<uint64_t>1) << col
        for i in range(npiv):
            if (work[i] >> col) & 1:
                v |= (<uint64_t>1) << pivot_cols[i]
        basis[w] = v
        w += 1
    # canonical reduced echelon form (unique per subspace)
    for i in range(w):
        for j in range(i + 1, w):
            if basis[j] > basis[i]:
                tmp = basis[i]
                basis[i] = basis[j]
                basis[j] = tmp
    for i in range(w):
        lead = 63
        while lead and not (basis[i] >> lead) & 1:
            lead -= 1
        for j in range(w):
            if j != i and (basis[j] >> lead) & 1:
                basis[j] ^= basis[i]
    for i in range(w):
        for j in range(i + 1, w):
            if basis[j] > basis[i]:
                tmp = basis[i]
                basis[i] = basis[j]
                basis[j] = tmp
    return w


cdef uint64_t _PAT[6]
_PAT[0] = <uint64_t>0xAAAAAAAAAAAAAAAA
_PAT[1] = <uint64_t>0xCCCCCCCCCCCCCCCC
_PAT[2] = <uint64_t>0xF0F0F0F0F0F0F0F0
_PAT[3] = <uint64_t>0xFF00FF00FF00FF00
_PAT[4] = <uint64_t>0xFFFF0000FFFF0000
_PAT[5] = <uint64_t>0xFFFFFFFF00000000


cdef int _fab_profile_c(int n, uint64_t modlow, uint64_t himask,
                        uint64_t nmask, uint64_t *mu,
                        uint64_t[:, ::1] frob,
                        uint64_t[::1] pow3, uint64_t[::1] pow5,
                        uint64_t[::1] pow9,
                        uint64_t f, uint64_t a, uint64_t b,
                        uint64_t *basis, uint64_t *q0mask,
                        uint64_t *nus) nogil:
    cdef uint64_t f8 = _frob_k(f, 3, modlow, himask, nmask)
    cdef uint64_t a2 = _frob_k(a, 1, modlow, himask, nmask)
    cdef uint64_t a8 = _frob_k(a, 3, modlow, himask, nmask)
    cdef uint64_t b4 = _frob_k(b, 2, modlow, himask, nmask)
    cdef uint64_t b8 = _frob_k(b, 3, modlow, himask, nmask)
    cdef uint64_t cols[63]
    cdef uint64_t rows[63]
    cdef int i, j, w
    for j in range(n):
        cols[j] = (_mul(f, (<uint64_t>1) << j, modlow, himask, nmask)
                   ^ _mul(f8, frob[6, j], modlow, himask, nmask)
                   ^ _mul(a2, frob[1, j], modlow, himask, nmask)
                   ^ _mul(a8, frob[5, j], modlow, himask, nmask)
                   ^ _mul(b4, frob[2, j], modlow, himask, nmask)
                   ^ _mul(b8, frob[4, j], modlow, himask, nmask))
    for i in range(n):
        rows[i] = 0
        for j in range(n):
            rows[i] |= ((cols[j] >> i) & 1) << j
    w = _nullspace_rref(rows, n, basis)
    if w > 6:
        return w

    cdef uint64_t tau_f = _nu_mask(f, mu)
    cdef uint64_t tau_a = _nu_mask(a, mu)
    cdef uint64_t tau_b = _nu_mask(b, mu)
    cdef uint64_t mask = 0
    cdef uint64_t s, low, u
    cdef int bidx
    for s in range((<uint64_t>1) << w):
        u = 0
        low = s
        bidx = 0
        while low:
            if low & 1:
                u ^= basis[bidx]
            low >>= 1
            bidx += 1
        if (_parity(pow9[u] & tau_f) ^ _parity(pow5[u] & tau_a)
                ^ _parity(pow3[u] & tau_b)):
            mask |= (<uint64_t>1) << s
    q0mask[0] = mask
    for i in range(w):
        nus[i] = _nu_mask(basis[i], mu)
    return w


cdef inline int _vanish_c(uint64_t c, int w, uint64_t q0mask,
                          uint64_t *nus) nogil:
    cdef uint64_t linm = 0
    cdef uint64_t wmask
    cdef int i
    for i in range(w):
        if _parity(c & nus[i]):
            linm ^= _PAT[i]
    if w == 6:
        wmask = <uint64_t>0xFFFFFFFFFFFFFFFF
    else:
        wmask = ((<uint64_t>1) << ((<uint64_t>1) << w)) - 1
    return 1 if (linm & wmask) == q0mask else 0


cdef void _coeff_row(uint64_t[:, :, ::1] brows, uint64_t[:, :, ::1] tables,
                     int have_tables, int e, uint64_t coeff,
                     Py_ssize_t words, uint64_t *out) nogil:
    cdef Py_ssize_t wdx
    cdef int bidx
    cdef uint64_t t
    if have_tables:
        for wdx in range(words):
            out[wdx] = tables[e, coeff, wdx]
        return
    for wdx in range(words):
        out[wdx] = 0
    t = coeff
    bidx = 0
    while t:
        if t & 1:
            for wdx in range(words):
                out[wdx] ^= brows[e, bidx, wdx]
        t >>= 1
        bidx += 1


def scan_block(ctx, f, a, b):
    cdef int cn = ctx.n
    cdef uint64_t q = (<uint64_t>1) << cn
    cdef uint64_t nmask = q - 1
    cdef uint64_t modlow = <uint64_t>ctx.modulus & nmask
    cdef uint64_t himask = (<uint64_t>1) << (cn - 1)
    cdef Py_ssize_t words = ctx.words
    cdef uint64_t[::1] mu = ctx.mu
    cdef uint64_t[:, ::1] frob = ctx.frob_basis
    cdef uint64_t[::1] pow3 = ctx.pow3
    cdef uint64_t[::1] pow5 = ctx.pow5
    cdef uint64_t[::1] pow9 = ctx.pow9
    cdef uint64_t[:, :, ::1] brows = ctx.brows
    cdef uint64_t[:, :, ::1] tables
    cdef int have_tables = ctx.tables is not None
    if have_tables:
        tables = ctx.tables
    else:
        tables = ctx.brows  # placeholder; unread when have_tables == 0

    cdef uint64_t ff = f, aa = a, bb = b
    cdef uint64_t basis[63]
    cdef uint64_t nus[63]
    cdef uint64_t q0mask = 0
    cdef int w
    S0_arr = np.zeros(q, dtype=np.int64)
    vanish_arr = np.zeros(q, dtype=np.uint8)
    cdef int64_t[::1] S0 = S0_arr
    cdef uint8_t[::1] vanish = vanish_arr
    rowbuf_arr = np.zeros(3 * words, dtype=np.uint64)
    cdef uint64_t[::1] rowbuf = rowbuf_arr
    cdef uint64_t c
    cdef Py_ssize_t wdx
    cdef int64_t pc
    with nogil:
        w = _fab_profile_c(cn, modlow, himask, nmask, &mu[0], frob,
                           pow3, pow5, pow9, ff, aa, bb, basis, &q0mask, nus)
    if w > 6:
        raise ValueError("scan kernels require f != 0 (radical dim <= 6)")
    with nogil:
        _coeff_row(brows, tables, have_tables, 0, ff, words, &rowbuf[0])
        _coeff_row(brows, tables, have_tables, 1, aa, words, &rowbuf[words])
        for wdx in range(words):
            rowbuf[wdx] ^= rowbuf[words + wdx]
        _coeff_row(brows, tables, have_tables, 2, bb, words, &rowbuf[words])
        for wdx in range(words):
            rowbuf[wdx] ^= rowbuf[words + wdx]
        for c in range(q):
            vanish[c] = _vanish_c(c, w, q0mask, nus)
            _coeff_row(brows, tables, have_tables, 3, c, words,
                       &rowbuf[2 * words])
            pc = 0
            for wdx in range(words):
                pc += __builtin_popcountll(rowbuf[wdx]
                                           ^ rowbuf[2 * words + wdx])
            S0[c] = <int64_t>q - 2 * pc
    return w, vanish_arr, S0_arr


def classify_many(ctx, fs, as_, bs, cs):
    cdef int cn = ctx.n
    cdef uint64_t q = (<uint64_t>1) << cn
    cdef uint64_t nmask = q - 1
    cdef uint64_t modlow = <uint64_t>ctx.modulus & nmask
    cdef uint64_t himask = (<uint64_t>1) << (cn - 1)
    cdef Py_ssize_t words = ctx.words
    cdef uint64_t[::1] mu = ctx.mu
    cdef uint64_t[:, ::1] frob = ctx.frob_basis
    cdef uint64_t[::1] pow3 = ctx.pow3
    cdef uint64_t[::1] pow5 = ctx.pow5
    cdef uint64_t[::1] pow9 = ctx.pow9
    cdef uint64_t[:, :, ::1] brows = ctx.brows
    cdef uint64_t[:, :, ::1] tables
    cdef int have_tables = ctx.tables is not None
    if have_tables:
        tables = ctx.tables
    else:
        tables = ctx.brows

    f_arr = np.ascontiguousarray(fs, dtype=np.uint64)
    a_arr = np.ascontiguousarray(as_, dtype=np.uint64)
    b_arr = np.ascontiguousarray(bs, dtype=np.uint64)
    c_arr = np.ascontiguousarray(cs, dtype=np.uint64)
    cdef uint64_t[::1] fv = f_arr
    cdef uint64_t[::1] av = a_arr
    cdef uint64_t[::1] bv = b_arr
    cdef uint64_t[::1] cv = c_arr
    cdef Py_ssize_t m = fv.shape[0]

    S0_arr = np.zeros(m, dtype=np.int64)
    w_arr = np.zeros(m, dtype=np.int64)
    vanish_arr = np.zeros(m, dtype=np.uint8)
    cdef int64_t[::1] S0 = S0_arr
    cdef int64_t[::1] wv = w_arr
    cdef uint8_t[::1] vanish = vanish_arr
    rowbuf_arr = np.zeros(2 * words, dtype=np.uint64)
    cdef uint64_t[::1] rowbuf = rowbuf_arr

    cdef uint64_t basis[63]
    cdef uint64_t nus[63]
    cdef uint64_t q0mask = 0
    cdef int w = 0
    cdef int bad = 0
    cdef Py_ssize_t idx, wdx
    cdef int64_t pc
    with nogil:
        for idx in range(m):
            w = _fab_profile_c(cn, modlow, himask, nmask, &mu[0], frob,
                               pow3, pow5, pow9, fv[idx], av[idx], bv[idx],
                               basis, &q0mask, nus)
            if w > 6:
                bad = 1
                break
            wv[idx] = w
            vanish[idx] = _vanish_c(cv[idx], w, q0mask, nus)
            _coeff_row(brows, tables, have_tables, 0, fv[idx], words,
                       &rowbuf[0])
            _coeff_row(brows, tables, have_tables, 1, av[idx], words,
                       &rowbuf[words])
            for wdx in range(words):
                rowbuf[wdx] ^= rowbuf[words + wdx]
            _coeff_row(brows, tables, have_tables, 2, bv[idx], words,
                       &rowbuf[words])
            for wdx in range(words):
                rowbuf[wdx] ^= rowbuf[words + wdx]
            _coeff_row(brows, tables, have_tables, 3, cv[idx], words,
                       &rowbuf[words])
            pc = 0
            for wdx in range(words):
                pc += __builtin_popcountll(rowbuf[wdx] ^ rowbuf[words + wdx])
            S0[idx] = <int64_t>q - 2 * pc
    if bad:
        raise ValueError("scan kernels require f != 0 (radical dim <= 6)")
    return S0_arr, w_arr, vanish_arr
