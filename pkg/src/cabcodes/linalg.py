"""Dense linear algebra over GF(q) on integer-coded numpy matrices."""

from __future__ import annotations

import numpy as np

from .errors import SingularBasis
from .field import FieldSpec


def matmul(field: FieldSpec, A, B) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for k in range(A.shape[1]):
        col = A[:, k:k + 1]
        if not col.any():
            continue
        out = field.vadd(out, field.vmul(col, B[k:k + 1, :]))
    return out


def rref(field: FieldSpec, A) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form (zero rows dropped) and pivot columns."""
    M = np.array(A, dtype=np.int64, copy=True)
    if M.ndim == 1:
        M = M.reshape(1, -1)
    rows, cols = M.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(M[r:, c])
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            M[[r, k]] = M[[k, r]]
        M[r] = field.vmul(field.inv(int(M[r, c])), M[r])
        others = np.flatnonzero(M[:, c])
        others = others[others != r]
        if others.size:
            f = M[others, c:c + 1]
            M[others] = field.vsub(M[others], field.vmul(f, M[r][None, :]))
        pivots.append(c)
        r += 1
    return M[:r], pivots


def rank(field: FieldSpec, A) -> int:
    return len(rref(field, A)[1])


def kernel(field: FieldSpec, A, ncols: int | None = None) -> np.ndarray:
    """Basis (as rows) of ``{x : A x = 0}``."""
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[1] if A.size else (ncols or 0)
    if A.size == 0:
        return np.eye(n, dtype=np.int64)
    R, piv = rref(field, A)
    free = [c for c in range(n) if c not in set(piv)]
    K = np.zeros((len(free), n), dtype=np.int64)
    for t, f in enumerate(free):
        K[t, f] = 1
        for r, p in enumerate(piv):
            K[t, p] = field.neg(int(R[r, f]))
    return K


def inverse(field: FieldSpec, A) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[0]
    if A.shape != (n, n):
        raise SingularBasis("matrix is not square")
    R, piv = rref(field, np.hstack([A, np.eye(n, dtype=np.int64)]))
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise SingularBasis("matrix is singular")
    return R[:n, n:]


def last_nonzero(M) -> np.ndarray:
    """1-based position of the last nonzero entry of each row (0 for zero rows)."""
    M = np.asarray(M)
    nz = M != 0
    rev = nz[..., ::-1]
    pos = M.shape[-1] - np.argmax(rev, axis=-1)
    return np.where(nz.any(axis=-1), pos, 0)


def first_nonzero(M) -> np.ndarray:
    """1-based position of the first nonzero entry of each row (0 for zero rows)."""
    M = np.asarray(M)
    nz = M != 0
    return np.where(nz.any(axis=-1), np.argmax(nz, axis=-1) + 1, 0)
