"""GF(2) linear algebra on bit-packed vectors.

Vectors are ints with bit i holding coordinate i.  Reduced row echelon form
uses the highest set bit of each vector as its pivot, rows sorted descending,
so equal subspaces always produce identical basis lists.
"""

from __future__ import annotations


def rref(vectors) -> list[int]:
    """Reduced echelon basis (descending pivots) of the span of ``vectors``."""
    basis: list[int] = []
    for v in vectors:
        for b in basis:
            if (v >> (b.bit_length() - 1)) & 1:
                v ^= b
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    for i in range(len(basis)):
        pivot = basis[i].bit_length() - 1
        for j in range(len(basis)):
            if i != j and (basis[j] >> pivot) & 1:
                basis[j] ^= basis[i]
    basis.sort(reverse=True)
    return basis


def rank(vectors) -> int:
    return len(rref(vectors))


def nullspace(rows: list[int], ncols: int) -> list[int]:
    """Reduced echelon basis of {v : A v = 0} for the matrix with the given
    rows (row r = int with bit c set iff A[r][c] = 1)."""
    work = list(rows)
    pivot_cols: list[int] = []
    cur = 0
    for col in range(ncols - 1, -1, -1):
        sel = None
        for i in range(cur, len(work)):
            if (work[i] >> col) & 1:
                sel = i
                break
        if sel is None:
            continue
        work[cur], work[sel] = work[sel], work[cur]
        for i in range(len(work)):
            if i != cur and (work[i] >> col) & 1:
                work[i] ^= work[cur]
        pivot_cols.append(col)
        cur += 1
    pivot_set = set(pivot_cols)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = 1 << free
        for i, pc in enumerate(pivot_cols):
            if (work[i] >> free) & 1:
                v |= 1 << pc
        basis.append(v)
    return rref(basis)


def span(basis: list[int]) -> list[int]:
    """All 2^k combinations of the basis; element s is the XOR of basis[i]
    over the set bits i of s."""
    out = [0] * (1 << len(basis))
    for s in range(1, len(out)):
        low = s & -s
        out[s] = out[s ^ low] ^ basis[low.bit_length() - 1]
    return out
