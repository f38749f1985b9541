"""Exact linear algebra helpers: integer determinants/inverses and ranks over F_p.

Integer matrices are passed around as tuples of tuples so they can be hashed
and shared freely; numpy arrays appear only in the mod-p routines where all
entries are bounded by the prime.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

IntRows = tuple[tuple[int, ...], ...]


def freeze_rows(rows) -> IntRows:
    """Normalize a matrix-like (lists, numpy, tuples) to tuples of ints."""
    return tuple(tuple(int(x) for x in row) for row in rows)


def identity_rows(n: int) -> IntRows:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose_rows(rows: IntRows) -> IntRows:
    return tuple(zip(*rows)) if rows else ()


def mat_mul(a: IntRows, b: IntRows) -> IntRows:
    bt = transpose_rows(b)
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def det(rows: IntRows) -> int:
    """Exact determinant of a square integer matrix (Bareiss, fraction-free)."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(row) for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # Bareiss update: the division is exact at every step
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def unimodular_inverse(rows: IntRows) -> IntRows:
    """Exact inverse of an integer matrix with determinant +-1.

    Raises ValueError when the matrix is not unimodular; a non-unimodular
    c-matrix means the mutation state is corrupted, so callers treat this
    as fatal.
    """
    n = len(rows)
    d = det(rows)
    if d not in (1, -1):
        raise ValueError(f"matrix is not unimodular (det = {d})")
    # Gauss-Jordan over Q; the inverse is integral because |det| = 1
    aug = [
        [Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
        for i, row in enumerate(rows)
    ]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    out = []
    for row in aug:
        tail = row[n:]
        assert all(x.denominator == 1 for x in tail)
        out.append(tuple(int(x) for x in tail))
    return tuple(out)


# ---------------------------------------------------------------------------
# Ranks over the prime field F_p.
#
# Entries live in [0, p).  With p < 2**20, products stay below 2**40 and row
# updates below 2**41, so int64 arithmetic is exact; in the blocked path the
# float64 matmul accumulates at most `_BLOCK` products of size < 2**40, which
# stays inside the 2**53 exact-integer window.

_BLOCK_THRESHOLD = 128
_BLOCK = 64


def rank_mod(a: np.ndarray, p: int) -> int:
    """Rank of an integer matrix over F_p (p prime, p < 2**20)."""
    if p >= 1 << 20:
        raise ValueError(f"prime {p} too large for exact elimination path")
    m = np.asarray(a, dtype=np.int64) % p
    if m.size == 0:
        return 0
    if min(m.shape) <= _BLOCK_THRESHOLD:
        return _rank_simple(m, p)
    return _rank_blocked(m, p)


def nullity_mod(a: np.ndarray, p: int) -> int:
    m = np.asarray(a)
    if m.ndim != 2:
        raise ValueError("expected a 2D array")
    if m.size == 0:
        return int(m.shape[1])
    return int(m.shape[1]) - rank_mod(m, p)


def nullspace_mod(a: np.ndarray, p: int) -> np.ndarray:
    """Basis of the kernel of an integer matrix over F_p, as columns.

    Returns a c x k int64 array N with a @ N = 0 (mod p) whose columns are
    linearly independent; k = nullity_mod(a, p). Intended for the modest
    matrix sizes that appear in representation transport, so it uses the
    simple elimination path throughout.
    """
    if p >= 1 << 20:
        raise ValueError(f"prime {p} too large for exact elimination path")
    m = np.asarray(a, dtype=np.int64) % p
    rows, cols = m.shape
    if cols == 0:
        return np.zeros((0, 0), dtype=np.int64)
    pivots: list[int] = []
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(m[rank:, col])[0]
        if nz.size == 0:
            continue
        r = rank + int(nz[0])
        if r != rank:
            m[[rank, r]] = m[[r, rank]]
        inv = pow(int(m[rank, col]), -1, p)
        m[rank] = (m[rank] * inv) % p
        others = np.nonzero(m[:, col])[0]
        others = others[others != rank]
        if others.size:
            m[others] = (m[others] - m[others, col][:, None] * m[rank][None, :]) % p
        pivots.append(col)
        rank += 1
    free = [j for j in range(cols) if j not in set(pivots)]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for idx, j in enumerate(free):
        basis[j, idx] = 1
        for prow, pcol in enumerate(pivots):
            basis[pcol, idx] = (-int(m[prow, j])) % p
    return basis


def _rank_simple(m: np.ndarray, p: int) -> int:
    rows, cols = m.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(m[rank:, col])[0]
        if nz.size == 0:
            continue
        r = rank + int(nz[0])
        if r != rank:
            m[[rank, r]] = m[[r, rank]]
        inv = pow(int(m[rank, col]), -1, p)
        m[rank] = (m[rank] * inv) % p
        below = np.nonzero(m[rank + 1 :, col])[0]
        if below.size:
            rows_below = m[rank + 1 :][below]
            factors = rows_below[:, col]
            m[rank + 1 :][below] = (rows_below - factors[:, None] * m[rank][None, :]) % p
        rank += 1
    return rank


def _rank_blocked(m: np.ndarray, p: int) -> int:
    """Partial-pivoted LU in panels on an int64 matrix; the trailing update is
    one float64 BLAS matmul per panel, which is what makes large intertwiner
    systems tractable.

    The matmul is exact: entries are reduced below p < 2**20, so every partial
    sum is bounded by _BLOCK * p**2 < 2**53 and float64 accumulates without
    rounding.  All elementwise arithmetic stays in int64 where % is cheap.
    """
    rows, cols = m.shape
    rank = 0
    col = 0
    while col < cols and rank < rows:
        hi = min(col + _BLOCK, cols)
        pivot_cols: list[int] = []
        inverses: list[int] = []
        cur = rank
        for c in range(col, hi):
            if cur == rows:
                break
            nz = np.nonzero(m[cur:, c])[0]
            if nz.size == 0:
                continue
            r = cur + int(nz[0])
            if r != cur:
                m[[cur, r]] = m[[r, cur]]
            inv = pow(int(m[cur, c]), -1, p)
            # scale the pivot row over the panel only; the trailing part is
            # scaled during the replay below
            m[cur, c:hi] = m[cur, c:hi] * inv % p
            factors = m[cur + 1 :, c].copy()
            if factors.any():
                m[cur + 1 :, c + 1 : hi] = (
                    m[cur + 1 :, c + 1 : hi] - factors[:, None] * m[cur, c + 1 : hi]
                ) % p
                # keep the multipliers in the eliminated slots (classic LU)
                m[cur + 1 :, c] = factors
            pivot_cols.append(c)
            inverses.append(inv)
            cur += 1
        k = cur - rank
        if k and hi < cols:
            # replay the panel's row operations on the pivot rows' trailing
            # parts, then update the remaining rows with a single matmul
            trail = m[rank:cur, hi:]
            for t in range(k):
                trail[t] = trail[t] * inverses[t] % p
                if t + 1 < k:
                    sub = m[rank + t + 1 : cur, pivot_cols[t]]
                    if sub.any():
                        trail[t + 1 :] = (trail[t + 1 :] - sub[:, None] * trail[t]) % p
            if cur < rows:
                fac = m[cur:, pivot_cols]
                if fac.any():
                    prod = fac.astype(np.float64) @ trail.astype(np.float64)
                    m[cur:, hi:] = (m[cur:, hi:] - prod.astype(np.int64)) % p
        rank = cur
        col = hi
    return rank
