"""Specht modules S^λ in the Murphy basis {m_t : t standard}.

S^λ is the image of the permutation module M^λ = m_λ H_n in H_n / Ȟ^λ, with
m_t the image of m_λ T_{d(t)}.  Rather than working in the n!-dimensional
regular module, the construction stays inside M^λ (dimension n!/λ!):

* M^λ carries the symmetric invariant form β(m_λ T_d, m_λ T_e) = δ_{de} q^{ℓ(d)}.
* Let W ⊆ M^λ be the submodule generated by z = m_λ T_{d(t_λ)} n_{λ'}, where
  t_λ is the column-filled tableau and n_{λ'} = Σ_{w ∈ S_{λ'}} (-q)^{-ℓ(w)} T_w.
  Then dim W = |Std(λ)| and the kernel M^λ ∩ Ȟ^λ of M^λ → S^λ is W^⊥.
* So v ↦ (β(v, w_j))_j for a basis w_j of W realises M^λ → S^λ, and the
  matrix of T_i is read off by solving against the images of the m_t.

:func:`specht_module_regular` performs the textbook quotient inside the
regular module and serves as the independent check for small n.
"""

from __future__ import annotations

import numpy as np

from ..combinat import Partition, Tableau, dominates, partitions, standard_tableaux
from ..exactfield import FieldSpec
from ..hecke import CosetModule, regular_module, tableau_permutation
from ..linalg import inverse, rref, solve_left, span_closure, transpose
from ..symgrp import block_ranges, min_coset_reps, reduced_word
from .modules import ModuleRep

__all__ = ["specht_module", "specht_module_regular", "column_tableau", "apply_parabolic_sum", "SPECHT_BOUND"]

SPECHT_BOUND = 8


def column_tableau(lam) -> Tableau:
    """The tableau of shape λ filled with 1..n down successive columns."""
    lam = Partition(lam)
    rows = [[] for _ in lam]
    k = 1
    for j in range(lam[0] if lam else 0):
        for i in range(len(lam)):
            if lam[i] > j:
                rows[i].append(k)
                k += 1
    return Tableau(rows)


def apply_parabolic_sum(module: CosetModule, V, mu, c):
    """V · Σ_{w ∈ S_μ} c^{ℓ(w)} T_w, assembled block by block.

    Each symmetric group S_k factors as S_{k-1} times its k minimal coset
    representatives, so the sum is a product of short coset sums.
    """
    fs = module.fs
    n = module.n
    for a, b in block_ranges(mu):
        for k in range(2, b - a + 1):
            total = None
            for d in min_coset_reps((k - 1, 1), (k,)):
                word = [a + i for i in reduced_word(d)]
                term = fs.scale(module.act_word(V, word), c ** len(word))
                total = term if total is None else fs.add(total, term)
            V = total
    return V


def _check(lam, bound):
    lam = Partition(lam)
    if lam.n > bound:
        raise ValueError(f"|λ| = {lam.n} exceeds the Specht bound {bound}")
    return lam


def specht_module(lam, fs: FieldSpec, bound: int = SPECHT_BOUND) -> ModuleRep:
    """S^λ with basis m_t, t ∈ Std(λ) in the order of :func:`standard_tableaux`."""
    lam = _check(lam, bound)
    n = lam.n
    std = standard_tableaux(lam, bound=max(bound, n))
    if n <= 1:
        return ModuleRep(fs, (n,) if n else (), 1, {}, f"S^({lam})")
    M = CosetModule(lam, fs)
    z = M.basis_vector(tableau_permutation(column_tableau(lam)))[None]
    z = apply_parabolic_sum(M, z, lam.conjugate(), -fs.q_inv)
    acts = [lambda V, i=i: M.act(V, i) for i in range(1, n)]
    W, _ = span_closure(fs, z, acts, limit=len(std))
    if len(W) != len(std):
        raise AssertionError(f"dual Specht submodule has dimension {len(W)}, expected {len(std)}")
    qpow = fs.from_elements([fs.q ** int(l) for l in M.lengths])
    WT = transpose(fs.mul(W, qpow[None]))  # column j: v ↦ β(v, w_j)
    idx = [M.index[tableau_permutation(t)] for t in std]
    E = fs.zeros((len(std), M.dim))
    for r, x in enumerate(idx):
        E[r, x] = fs.one.c
    G = fs.matmul(E, WT)
    Ginv = inverse(fs, G)
    gens = {i: fs.matmul(fs.matmul(M.act(E, i), WT), Ginv) for i in range(1, n)}
    return ModuleRep(fs, (n,), len(std), gens, f"S^({lam})")


def specht_module_regular(lam, fs: FieldSpec, bound: int = 5) -> ModuleRep:
    """S^λ by linear algebra in the regular module modulo the ideal Ȟ^λ.

    Ȟ^λ is spanned by the m_uv with u, v standard of a shape strictly
    dominating λ.  Only meant for small n (the regular module has n! rows).
    """
    lam = _check(lam, bound)
    n = lam.n
    std = standard_tableaux(lam, bound=max(bound, n))
    if n <= 1:
        return ModuleRep(fs, (n,) if n else (), 1, {}, f"S^({lam})")
    R = regular_module(n, fs)

    def m_vec(shape):
        from ..symgrp import parabolic_elements

        v = fs.zeros((R.dim,))
        for w in parabolic_elements(shape):
            v[R.index[w]] = fs.one.c
        return v

    def left_word(V, word):
        for i in reversed(word):
            V = R.act_left(V, i)
        return V

    ideal = []
    for nu in partitions(n):
        if nu != lam and dominates(nu, lam):
            base = m_vec(nu)
            tabs = standard_tableaux(nu, bound=max(bound, n))
            right = [R.act_word(base, reduced_word(tableau_permutation(v))) for v in tabs]
            for u in tabs:
                word = reduced_word(tableau_permutation(u).inverse())
                ideal.extend(left_word(x, word) for x in right)
    X = np.stack([R.act_word(m_vec(lam), reduced_word(tableau_permutation(t))) for t in std])

    if ideal:
        I0, piv0 = rref(fs, np.stack(ideal))

        def reduce(V):
            return fs.sub(V, fs.matmul(V[:, piv0], I0))
    else:

        def reduce(V):
            return V

    Xr = reduce(X)
    gens = {}
    for i in range(1, n):
        Y = reduce(R.act(X, i))
        sol = solve_left(fs, Xr, Y)
        if sol is None:
            raise AssertionError("Specht quotient is not closed under the action")
        gens[i] = sol
    return ModuleRep(fs, (n,), len(std), gens, f"S^({lam})")
