"""Exact linear algebra over a :class:`~heckeblocks.exactfield.FieldSpec`.

Matrices are numpy arrays of shape ``(rows, cols, k)``; vectors are
``(dim, k)``.  Everything works with row vectors: a matrix acts on the right.
"""

from __future__ import annotations

import numpy as np

from .exactfield import FieldSpec

__all__ = [
    "rref",
    "rank",
    "nullspace",
    "left_nullspace",
    "solve_left",
    "in_row_space",
    "inverse",
    "span_closure",
    "kron",
    "transpose",
    "matrices_equal",
    "is_scalar_matrix",
]


def transpose(A):
    return np.swapaxes(A, 0, 1)


def rref(fs: FieldSpec, A):
    """Reduced row echelon form.  Returns ``(R, pivots)`` with zero rows dropped."""
    A = np.array(A, dtype=fs.dtype, copy=True)
    m, n = A.shape[:2]
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = ~fs.is_zero_array(A[r:, c])
        if not nz.any():
            continue
        i = r + int(np.argmax(nz))
        if i != r:
            A[[r, i]] = A[[i, r]]
        inv = fs.inv_array(A[r, c])
        A[r, c:] = fs.mul(A[r, c:], inv[None, :])
        f = A[:, c].copy()
        f[r] = 0
        rows = np.nonzero(~fs.is_zero_array(f))[0]
        if len(rows):
            A[rows, c:] = fs.sub(A[rows, c:], fs.mul(f[rows][:, None, :], A[r, c:][None, :, :]))
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(fs: FieldSpec, A) -> int:
    if A.shape[0] == 0 or A.shape[1] == 0:
        return 0
    return len(rref(fs, A)[1])


def nullspace(fs: FieldSpec, A):
    """Basis (as rows) of the right kernel ``{x : A x^T = 0}``."""
    n = A.shape[1]
    if A.shape[0] == 0:
        return fs.identity(n)
    R, piv = rref(fs, A)
    free = [c for c in range(n) if c not in set(piv)]
    out = fs.zeros((len(free), n))
    for j, c in enumerate(free):
        out[j, c] = fs.one.c
        for i, pc in enumerate(piv):
            out[j, pc] = fs.neg(R[i, c])
    return out


def left_nullspace(fs: FieldSpec, A):
    """Basis of ``{x : x A = 0}``."""
    return nullspace(fs, transpose(A))


def in_row_space(fs: FieldSpec, R, piv, V):
    """Membership of each row of ``V`` in the row space of an RREF matrix ``R``."""
    if len(piv) == 0:
        return fs.is_zero_array(V).all(axis=-1)
    resid = fs.sub(V, fs.matmul(V[:, piv], R))
    return fs.is_zero_array(resid).all(axis=-1)


def solve_left(fs: FieldSpec, A, B):
    """Some ``X`` with ``X A = B``, or ``None`` when no solution exists."""
    m = A.shape[0]
    aug = np.concatenate([A, fs.identity(m)], axis=1)
    R, piv = rref(fs, aug)
    ncols = A.shape[1]
    piv_a = [c for c in piv if c < ncols]
    Ra = R[: len(piv_a)]
    if not in_row_space(fs, Ra[:, :ncols], piv_a, B).all():
        return None
    # rows of Ra are combinations (given by the right block) of rows of A
    return fs.matmul(B[:, piv_a], Ra[:, ncols:])


def inverse(fs: FieldSpec, A):
    n = A.shape[0]
    aug = np.concatenate([A, fs.identity(n)], axis=1)
    R, piv = rref(fs, aug)
    if piv[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return R[:, n:]


def kron(fs: FieldSpec, A, B):
    """Kronecker product of two matrices."""
    m, n = A.shape[:2]
    r, s = B.shape[:2]
    prod = fs.mul(A[:, None, :, None, :], B[None, :, None, :, :])
    return prod.reshape(m * r, n * s, fs.k)


def matrices_equal(A, B) -> bool:
    return A.shape == B.shape and bool(np.all(A == B))


def is_scalar_matrix(fs: FieldSpec, A):
    """The scalar ``c`` if ``A == c I`` (as a FieldElement), else ``None``."""
    n = A.shape[0]
    c = fs.to_element(A[0, 0]) if n else fs.zero
    if matrices_equal(A, fs.scale(fs.identity(n), c)):
        return c
    return None


def span_closure(fs: FieldSpec, vectors, actions, limit=None):
    """Smallest subspace containing ``vectors`` and stable under ``actions``.

    ``actions`` are callables mapping a batch of row vectors to their images.
    Returns the RREF basis and its pivot columns.
    """
    R, piv = rref(fs, vectors)
    frontier = R
    while len(frontier):
        images = np.concatenate([act(frontier) for act in actions], axis=0)
        new = images[~in_row_space(fs, R, piv, images)]
        if not len(new):
            break
        old = len(piv)
        R, piv = rref(fs, np.concatenate([R, new], axis=0))
        if limit is not None and len(piv) > limit:
            raise ValueError("span exceeded the requested dimension bound")
        # everything new lives in the updated span; re-act on a fresh basis of it
        newp, _ = rref(fs, new)
        frontier = newp
        if len(piv) == old:
            break
    return R, piv
