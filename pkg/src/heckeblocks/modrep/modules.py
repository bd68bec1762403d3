"""Matrix representations of parabolic subalgebras H_σ ⊆ H_n.

A :class:`ModuleRep` stores one matrix per generator T_i of H_σ (indexed by
the global index i).  Vectors are rows and matrices act on the right, so the
matrix of T_w for w = s_{i_1} ... s_{i_l} is M_{i_1} ... M_{i_l}.

Homomorphisms follow the same convention: φ ∈ Hom(M, N) is a
``dim M × dim N`` matrix with M_i φ = φ N_i.  Relative projectivity is decided
by the trace test: M is relatively H_λ-projective exactly when the identity
of M lies in the image of End_{H_λ}(M) under the relative trace.
"""

from __future__ import annotations

import itertools
import warnings

import numpy as np

from ..combinat import Composition, partitions
from ..exactfield import FieldSpec
from ..hecke import relative_trace
from ..linalg import in_row_space, kron, left_nullspace, matrices_equal, rref, transpose
from ..symgrp import (
    Permutation,
    in_parabolic,
    length,
    min_coset_reps,
    parabolic_conj_contained,
    parabolic_generators,
    reduced_word,
    refines,
)

__all__ = [
    "ModuleRep",
    "BimoduleRep",
    "trivial_module",
    "sign_module",
    "tensor_module",
    "restrict",
    "induce",
    "hom_over_subalgebra",
    "trace_image",
    "is_relatively_projective",
    "module_vertex",
    "vertex_candidates",
    "MAX_TRACE_DIM",
]

# Largest module dimension accepted by the trace test.
MAX_TRACE_DIM = 64


class ModuleRep:
    """A right H_σ-module given by generator matrices."""

    def __init__(self, fs: FieldSpec, ambient, dim: int, gens: dict, name: str = ""):
        self.fs = fs
        self.ambient = Composition(ambient)
        self.n = self.ambient.n
        self.dim = int(dim)
        expected = set(parabolic_generators(self.ambient))
        if set(gens) != expected:
            raise ValueError(f"generators {sorted(gens)} do not match H_{tuple(self.ambient)}")
        for i, m in gens.items():
            if m.shape != (self.dim, self.dim, fs.k):
                raise ValueError(f"generator {i} has shape {m.shape}")
        self.gens = dict(gens)
        self.name = name
        self._words = {}

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<ModuleRep{label} dim={self.dim} over H_{tuple(self.ambient)} {self.fs!r}>"

    def gen(self, i: int):
        return self.gens[i]

    def word_matrix(self, w):
        """Matrix of T_w (w ∈ S_σ)."""
        w = Permutation(w)
        if w in self._words:
            return self._words[w]
        if not in_parabolic(w, self.ambient):
            raise ValueError(f"{w} is not in S_{tuple(self.ambient)}")
        word = reduced_word(w)
        if not word:
            mat = self.fs.identity(self.dim)
        else:
            from ..symgrp import simple_reflection

            prefix = w * simple_reflection(word[-1], self.n)
            mat = self.fs.matmul(self.word_matrix(prefix), self.gens[word[-1]])
        self._words[w] = mat
        return mat

    def element_matrix(self, x):
        """Matrix of a HeckeElement supported on S_σ."""
        fs = self.fs
        out = fs.zeros((self.dim, self.dim))
        for w, c in x.terms.items():
            out = fs.add(out, fs.scale(self.word_matrix(w), c))
        return out

    def relation_failures(self):
        """Defining relations violated by the generator matrices (empty when none)."""
        fs = self.fs
        failures = []
        I = fs.identity(self.dim)
        qI = fs.scale(I, fs.q)
        for i, M in self.gens.items():
            lhs = fs.matmul(fs.sub(M, qI), fs.add(M, I))
            if not fs.is_zero_array(lhs).all():
                failures.append(f"quadratic relation fails for T_{i}")
        for i, j in itertools.combinations(sorted(self.gens), 2):
            A, B = self.gens[i], self.gens[j]
            if j == i + 1:
                lhs = fs.matmul(fs.matmul(A, B), A)
                rhs = fs.matmul(fs.matmul(B, A), B)
                if not matrices_equal(lhs, rhs):
                    failures.append(f"braid relation fails for T_{i}, T_{j}")
            elif not matrices_equal(fs.matmul(A, B), fs.matmul(B, A)):
                failures.append(f"T_{i} and T_{j} do not commute")
        return failures

    def satisfies_relations(self) -> bool:
        return not self.relation_failures()

    def is_zero(self) -> bool:
        return self.dim == 0


class BimoduleRep(ModuleRep):
    """An (H_σ1, H_σ2)-bimodule as a right module over H_{σ1⌢σ2}.

    A generator T_i of the first factor acts by x ↦ T_i·x; through the
    anti-automorphism T_w ↦ T_{w^{-1}} this is a right action.  Generators of
    the second factor act by right multiplication, shifted by |σ1|.
    """

    def __init__(self, fs, left, right, dim, gens, name=""):
        self.left = Composition(left)
        self.right = Composition(right)
        super().__init__(fs, tuple(self.left) + tuple(self.right), dim, gens, name)

    def two_sided_relation_failures(self):
        """Commutation failures between the left and right generator families."""
        fs, a = self.fs, self.left.n
        out = []
        for i in parabolic_generators(self.left):
            for j in parabolic_generators(self.right):
                A, B = self.gens[i], self.gens[a + j]
                if not matrices_equal(fs.matmul(A, B), fs.matmul(B, A)):
                    out.append((i, j))
        return out


def _scalar_module(n, fs, value, name, ambient=None):
    ambient = Composition((n,) if ambient is None else ambient)
    gens = {i: fs.scalar_array(value, (1, 1)) for i in parabolic_generators(ambient)}
    return ModuleRep(fs, ambient, 1, gens, name)


def trivial_module(n: int, fs: FieldSpec, ambient=None) -> ModuleRep:
    """Every T_i acts as q."""
    return _scalar_module(n, fs, fs.q, "trivial", ambient)


def sign_module(n: int, fs: FieldSpec, ambient=None) -> ModuleRep:
    """Every T_i acts as -1."""
    return _scalar_module(n, fs, -fs.one, "sign", ambient)


def tensor_module(M: ModuleRep, N: ModuleRep) -> ModuleRep:
    """Outer tensor product, a module over H_{σ1⌢σ2}."""
    if M.fs != N.fs:
        raise ValueError("modules over different fields")
    fs = M.fs
    IM, IN = fs.identity(M.dim), fs.identity(N.dim)
    gens = {i: kron(fs, g, IN) for i, g in M.gens.items()}
    gens.update({M.n + i: kron(fs, IM, g) for i, g in N.gens.items()})
    name = f"{M.name}⊗{N.name}" if M.name and N.name else ""
    return ModuleRep(fs, tuple(M.ambient) + tuple(N.ambient), M.dim * N.dim, gens, name)


def restrict(M: ModuleRep, lam) -> ModuleRep:
    lam = Composition(lam)
    if not refines(lam, M.ambient):
        raise ValueError(f"S_{tuple(lam)} is not contained in S_{tuple(M.ambient)}")
    gens = {i: M.gens[i] for i in parabolic_generators(lam)}
    return ModuleRep(M.fs, lam, M.dim, gens, M.name)


def induce(M: ModuleRep, n: int | None = None, bound: int = 720) -> ModuleRep:
    """M ⊗_{H_λ} H_n in the basis m ⊗ T_d, d running over minimal right coset reps."""
    from ..symgrp import simple_reflection

    fs, lam = M.fs, M.ambient
    n = lam.n if n is None else n
    if n != lam.n:
        raise ValueError("induction target must have the same rank")
    reps = min_coset_reps(tuple(lam), (n,))
    if len(reps) * M.dim > bound:
        raise ValueError("induced module exceeds the size bound")
    index = {d: k for k, d in enumerate(reps)}
    dm = M.dim
    D = len(reps) * dm
    q, q1 = fs.q, fs.q - 1
    gens = {}
    for i in range(1, n):
        mat = fs.zeros((D, D))
        s = simple_reflection(i, n)
        for d, x in index.items():
            ds = d * s
            rows = slice(x * dm, (x + 1) * dm)
            y = index.get(ds)
            if y is None:
                # d s_i = s_j d with s_j ∈ S_λ
                conj = d * s * d.inverse()
                j = next(k for k in range(1, n) if conj == simple_reflection(k, n))
                mat[rows, rows] = M.gens[j]
            elif length(ds) > length(d):
                mat[rows, y * dm : (y + 1) * dm] = fs.identity(dm)
            else:
                mat[rows, rows] = fs.scale(fs.identity(dm), q1)
                mat[rows, y * dm : (y + 1) * dm] = fs.scale(fs.identity(dm), q)
        gens[i] = mat
    return ModuleRep(fs, (n,), D, gens, f"ind({M.name})" if M.name else "")


def hom_over_subalgebra(M: ModuleRep, N: ModuleRep, lam=None):
    """Basis of Hom_{H_λ}(M, N): matrices φ with M_i φ = φ N_i for s_i ∈ S_λ.

    Returned as an array of shape (r, dim M, dim N, k).
    """
    if M.fs != N.fs or M.ambient != N.ambient:
        raise ValueError("modules must share field and ambient algebra")
    fs = M.fs
    lam = M.ambient if lam is None else Composition(lam)
    if not refines(lam, M.ambient):
        raise ValueError(f"S_{tuple(lam)} is not contained in S_{tuple(M.ambient)}")
    dM, dN = M.dim, N.dim
    blocks = []
    IM, IN = fs.identity(dM), fs.identity(dN)
    for i in parabolic_generators(lam):
        # row-major vec: vec(A φ B) = vec(φ) (A^T ⊗ B)
        blocks.append(fs.sub(kron(fs, transpose(M.gens[i]), IN), kron(fs, IM, N.gens[i])))
    if not blocks:
        basis = fs.identity(dM * dN)
    else:
        basis = left_nullspace(fs, np.concatenate(blocks, axis=1))
    return basis.reshape(len(basis), dM, dN, fs.k)


def trace_image(M: ModuleRep, lam):
    """RREF basis (with pivots) of tr_λ^σ(End_{H_λ}(M)), flattened to vectors."""
    fs = M.fs
    E = hom_over_subalgebra(M, M, lam)
    if len(E) == 0:
        return fs.zeros((0, M.dim * M.dim)), []
    T = relative_trace(tuple(lam), tuple(M.ambient), E, rep=M)
    return rref(fs, T.reshape(len(E), M.dim * M.dim, fs.k))


def is_relatively_projective(M: ModuleRep, lam) -> bool:
    """Whether id_M lies in the image of the relative trace from H_λ."""
    lam = Composition(lam)
    if not refines(lam, M.ambient):
        raise ValueError(f"S_{tuple(lam)} is not contained in S_{tuple(M.ambient)}")
    if M.dim > MAX_TRACE_DIM:
        raise ValueError(f"module dimension {M.dim} exceeds bound {MAX_TRACE_DIM}")
    if M.dim == 0:
        return True
    fs = M.fs
    R, piv = trace_image(M, lam)
    ident = fs.identity(M.dim).reshape(1, M.dim * M.dim, fs.k)
    return bool(in_row_space(fs, R, piv, ident)[0])


def vertex_candidates(ambient):
    """One composition per conjugacy class of parabolic subgroups of S_σ.

    Each block of σ is refined by a partition written in increasing order.
    """
    per_block = [[tuple(reversed(p)) for p in partitions(b)] for b in ambient]
    return [Composition(itertools.chain(*c)) for c in itertools.product(*per_block)]


def _split(lam, ambient):
    out, it = [], iter(lam)
    for b in ambient:
        part, tot = [], 0
        while tot < b:
            x = next(it)
            part.append(x)
            tot += x
        out.append(part)
    return out


def _contained(lam, mu, ambient) -> bool:
    return all(parabolic_conj_contained(a, b) for a, b in zip(_split(lam, ambient), _split(mu, ambient)))


def module_vertex(M: ModuleRep, max_n: int = 8):
    """Minimal parabolics S_λ ⊆ S_σ, up to conjugacy, relative to which M is projective.

    For an indecomposable module the answer is a single class, its vertex.
    """
    if M.n > max_n:
        raise ValueError(f"vertex search is limited to n ≤ {max_n}")
    if M.dim == 0:
        warnings.warn("zero module: reporting the trivial vertex", stacklevel=2)
        return {Composition((1,) * M.n)}
    proj = [lam for lam in vertex_candidates(M.ambient) if is_relatively_projective(M, lam)]
    minimal = {
        lam
        for lam in proj
        if not any(mu != lam and _contained(mu, lam, M.ambient) for mu in proj)
    }
    return minimal
