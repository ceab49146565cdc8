"""Brute-force ground truth for small codes: minimum distance, weight
distribution and the second generalized Hamming weight."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import SizeExceeded
from .field import FieldSpec

MESSAGE_LIMIT = 2**16
SUBSPACE_LIMIT = 2**20
_CHUNK = 4096


@dataclass
class WeightProfile:
    n: int
    k: int
    distribution: dict[int, int]

    @property
    def min_distance(self) -> int:
        nz = [w for w, c in self.distribution.items() if w and c]
        return min(nz) if nz else 0

    def total(self) -> int:
        return sum(self.distribution.values())


def _basis(field: FieldSpec, G) -> np.ndarray:
    G = np.atleast_2d(np.asarray(G, dtype=np.int64))
    if G.size == 0:
        return G.reshape(0, G.shape[1] if G.ndim == 2 else 0)
    R, _ = linalg.rref(field, G)
    return R


def _messages(q: int, k: int, start: int, stop: int) -> np.ndarray:
    """Messages numbered start..stop-1 in base q (most significant digit first)."""
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.zeros((idx.size, k), dtype=np.int64)
    for c in range(k - 1, -1, -1):
        out[:, c] = idx % q
        idx //= q
    return out


def _encode(field: FieldSpec, msgs: np.ndarray, G: np.ndarray) -> np.ndarray:
    acc = np.zeros((msgs.shape[0], G.shape[1]), dtype=np.int64)
    for r in range(G.shape[0]):
        acc = field.vadd(acc, field.vmul(msgs[:, r:r + 1], G[r][None, :]))
    return acc


def _guard(q: int, k: int, limit: int) -> None:
    if q**k > limit:
        raise SizeExceeded(f"message enumeration guard: q^k = {q}^{k} exceeds {limit}")


def weight_profile(field: FieldSpec, G, limit: int = MESSAGE_LIMIT) -> WeightProfile:
    """Weight distribution over all q^k codewords."""
    B = _basis(field, G)
    k, n = B.shape
    q = field.q
    _guard(q, k, limit)
    counts = np.zeros(n + 1, dtype=np.int64)
    total = q**k
    for start in range(0, total, _CHUNK):
        words = _encode(field, _messages(q, k, start, min(total, start + _CHUNK)), B)
        counts += np.bincount((words != 0).sum(axis=1), minlength=n + 1)
    return WeightProfile(n, k, {w: int(c) for w, c in enumerate(counts) if c})


def true_min_distance(field: FieldSpec, G, limit: int = MESSAGE_LIMIT) -> int:
    """Minimum weight of a nonzero codeword."""
    B = _basis(field, G)
    if B.shape[0] == 0:
        raise ValueError("zero code has no minimum distance")
    return weight_profile(field, B, limit).min_distance


def _rref_rows(q: int, k: int, pivot: int, zero_at: tuple[int, ...] = ()) -> np.ndarray:
    """All rows with a 1 at pivot, zeros before it and at ``zero_at``, free elsewhere."""
    free = [c for c in range(pivot + 1, k) if c not in zero_at]
    rows = np.zeros((q ** len(free), k), dtype=np.int64)
    rows[:, pivot] = 1
    if free:
        rows[:, free] = np.array(list(itertools.product(range(q), repeat=len(free))), dtype=np.int64)
    return rows


def count_2d_subspaces(q: int, k: int) -> int:
    if k < 2:
        return 0
    return (q**k - 1) * (q**k - q) // ((q**2 - 1) * (q**2 - q))


def true_ghw2(field: FieldSpec, G, limit: int = SUBSPACE_LIMIT) -> int:
    """Minimum support size over all 2-dimensional subcodes.

    Subcodes are enumerated once each through their reduced echelon basis in
    message space; the support of a subcode is the union of the supports of
    its two basis words.
    """
    B = _basis(field, G)
    k, n = B.shape
    q = field.q
    if k < 2:
        raise ValueError("need a code of dimension >= 2")
    if count_2d_subspaces(q, k) > limit:
        raise SizeExceeded(f"subspace enumeration guard: more than {limit} two-dimensional subspaces")
    best = n
    for p1 in range(k):
        for p2 in range(p1 + 1, k):
            S1 = _encode(field, _rref_rows(q, k, p1, (p2,)), B) != 0
            S2 = _encode(field, _rref_rows(q, k, p2), B) != 0
            for a in range(0, S1.shape[0], 256):
                block = S1[a:a + 256]
                sizes = (block[:, None, :] | S2[None, :, :]).sum(axis=2)
                best = min(best, int(sizes.min()))
    return best
