"""Centre, block idempotents and block bimodules of H_n for small n.

The centre Z(H_n) is the common kernel of x ↦ T_i x - x T_i in the regular
module.  A central element acts on every Specht module by a scalar; grouping
partitions by these central characters gives the blocks.  For a block g an
element of Z whose characters are the indicator of g is lifted to an
idempotent by the iteration e ↦ 3e² - 2e³, which converges because the kernel
of the characters on Z is nilpotent.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from ..combinat import BlockDescriptor, Partition, Composition, e_core, e_weight, partitions
from ..exactfield import FieldSpec
from ..hecke import HeckeElement, regular_module
from ..linalg import (
    is_scalar_matrix,
    left_nullspace,
    rank,
    rref,
    solve_left,
)
from ..symgrp import min_coset_reps, reduced_word, simple_reflection
from .modules import BimoduleRep, is_relatively_projective
from .specht import specht_module

__all__ = [
    "centre_basis",
    "central_character",
    "block_idempotents",
    "central_idempotents",
    "block_of_specht",
    "bimodule_block",
    "is_bimodule_rel_projective",
    "regular_multiply",
    "count_blocks_oracle",
    "IDEMPOTENT_BOUND",
]

IDEMPOTENT_BOUND = 5


def _check(n, bound):
    if n > bound:
        raise ValueError(f"n={n} exceeds the bound {bound}")


@lru_cache(maxsize=None)
def _bfs_plan(n: int):
    """(w index, prefix index, generator) in length order, for x ↦ x T_w sweeps."""
    reps = min_coset_reps((1,) * n, (n,))
    index = {w: k for k, w in enumerate(reps)}
    plan = []
    for k, w in enumerate(reps[1:], 1):
        i = reduced_word(w)[-1]
        plan.append((k, index[w * simple_reflection(i, n)], i))
    return tuple(plan)


def right_translates(fs: FieldSpec, n: int, v):
    """Stack of v·T_w over all w (regular module order)."""
    R = regular_module(n, fs)
    U = fs.zeros((R.dim, R.dim))
    U[0] = v
    for k, prev, i in _bfs_plan(n):
        U[k] = R.act(U[prev], i)
    return U


def regular_multiply(fs: FieldSpec, n: int, u, v):
    """Product u·v of two elements given as vectors in the regular module."""
    return fs.matmul(v[None], right_translates(fs, n, u))[0]


def centre_basis(n: int, fs: FieldSpec, bound: int = IDEMPOTENT_BOUND):
    """Basis of Z(H_n) as rows of coefficient vectors in the T_w basis."""
    _check(n, bound)
    R = regular_module(n, fs)
    if n < 2:
        return fs.identity(R.dim)
    I = fs.identity(R.dim)
    D = np.concatenate([fs.sub(R.act_left(I, i), R.act(I, i)) for i in range(1, n)], axis=1)
    Z = left_nullspace(fs, D)
    Z, _ = rref(fs, Z)
    return Z


def central_character(S, z: HeckeElement):
    """The scalar by which a central element acts on the module S."""
    c = is_scalar_matrix(S.fs, S.element_matrix(z))
    if c is None:
        raise AssertionError(f"central element does not act as a scalar on {S.name}")
    return c


@lru_cache(maxsize=None)
def block_idempotents(n: int, fs: FieldSpec, bound: int = IDEMPOTENT_BOUND):
    """Pairs (BlockDescriptor, idempotent) for the blocks of H_n."""
    _check(n, bound)
    R = regular_module(n, fs)
    Z = centre_basis(n, fs, bound)
    zs = [R.from_vector(z) for z in Z]
    parts = list(partitions(n))
    chars = {}
    for nu in parts:
        S = specht_module(nu, fs)
        chars[nu] = tuple(central_character(S, z) for z in zs)
    groups = {}
    for nu in parts:
        groups.setdefault(chars[nu], []).append(nu)
    one = R.to_vector(HeckeElement.one(fs, (n,)))
    # characters of the Z basis, one column per block
    C = fs.from_elements([c for key in groups for c in key], shape=(len(groups), len(zs)))
    C = np.swapaxes(C, 0, 1)
    out = []
    for g, (key, members) in enumerate(groups.items()):
        cores = {e_core(nu, fs.e) for nu in members}
        if len(cores) != 1:
            raise AssertionError(f"partitions {members} share a central character but not an e-core")
        target = fs.zeros((1, len(groups)))
        target[0, g] = fs.one.c
        x = solve_left(fs, C, target)
        if x is None:
            raise AssertionError("central characters are not independent")
        e = fs.matmul(x, Z)[0]
        for _ in range(64):
            e2 = regular_multiply(fs, n, e, e)
            if np.array_equal(e2, e):
                break
            e3 = regular_multiply(fs, n, e2, e)
            e = fs.sub(fs.scale(e2, 3), fs.scale(e3, 2))
        else:
            raise AssertionError("idempotent lifting did not converge")
        core = cores.pop()
        out.append((BlockDescriptor(core, (n - core.n) // fs.e, fs.e), R.from_vector(e)))
    total = R.to_vector(out[0][1])
    for _, e in out[1:]:
        total = fs.add(total, R.to_vector(e))
    if not np.array_equal(total, one):
        raise AssertionError("block idempotents do not sum to 1")
    return tuple(out)


def central_idempotents(n: int, fs: FieldSpec, bound: int = IDEMPOTENT_BOUND):
    """The block idempotents of H_n as HeckeElements."""
    return [e for _, e in block_idempotents(n, fs, bound)]


def count_blocks_oracle(n: int, fs: FieldSpec, bound: int = IDEMPOTENT_BOUND) -> int:
    """Number of blocks from the centre alone, without Specht modules.

    Over GF(Q) this is the dimension of the fixed space of x ↦ x^Q on Z; in
    characteristic 0 it is dim Z minus the rank deficiency of the trace form.
    """
    Z = centre_basis(n, fs, bound)
    r = len(Z)
    if fs.p:
        Q = fs.p ** fs.k
        rows = []
        for z in Z:
            acc, base, m = None, z, Q
            while m:
                if m & 1:
                    acc = base if acc is None else regular_multiply(fs, n, acc, base)
                base = regular_multiply(fs, n, base, base)
                m >>= 1
            rows.append(acc)
        coords = solve_left(fs, Z, np.stack(rows))
        if coords is None:
            raise AssertionError("Frobenius image left the centre")
        return r - rank(fs, fs.sub(coords, fs.identity(r)))
    # multiplication matrices of Z in its own basis
    mats = []
    for z in Z:
        prods = np.stack([regular_multiply(fs, n, z, y) for y in Z])
        mats.append(solve_left(fs, Z, prods))
    gram = fs.zeros((r, r))
    for i in range(r):
        for j in range(r):
            prod = fs.matmul(mats[i], mats[j])
            tr = prod[0, 0]
            for k in range(1, r):
                tr = fs.add(tr, prod[k, k])
            gram[i, j] = tr
    return rank(fs, gram)


def block_of_specht(lam, e: int) -> BlockDescriptor:
    lam = Partition(lam)
    return BlockDescriptor(e_core(lam, e), e_weight(lam, e), e)


def bimodule_block(n: int, b: BlockDescriptor, fs: FieldSpec, bound: int = 4) -> BimoduleRep:
    """The two-sided ideal H_n e_B as an (H_n, H_n)-bimodule."""
    _check(n, bound)
    if b.n != n or b.e != fs.e:
        raise ValueError(f"{b} is not a block of H_{n} with e={fs.e}")
    match = [e for label, e in block_idempotents(n, fs) if label == b]
    if not match:
        raise ValueError(f"H_{n} has no block {b}")
    R = regular_module(n, fs)
    U = right_translates(fs, n, R.to_vector(match[0]))
    basis, piv = rref(fs, U)
    gens = {}
    for i in range(1, n):
        gens[i] = R.act_left(basis, i)[:, piv]
        gens[n + i] = R.act(basis, i)[:, piv]
    return BimoduleRep(fs, (n,), (n,), len(basis), gens, f"B_({b.core}),{b.weight}")


def is_bimodule_rel_projective(B: BimoduleRep, lam1, lam2) -> bool:
    """Relative (H_λ1, H_λ2)-projectivity via the trace test over H_{λ1⌢λ2}."""
    lam = Composition(tuple(lam1) + tuple(lam2))
    return is_relatively_projective(B, lam)
