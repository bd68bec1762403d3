"""Exact arithmetic in the Iwahori–Hecke algebra H_n of type A.

Elements are sparse combinations of the basis T_w.  Right multiplication by a
generator follows

    T_w T_i = T_{w s_i}                      if ℓ(w s_i) > ℓ(w),
    T_w T_i = (q - 1) T_w + q T_{w s_i}      otherwise,

and general products are assembled from it.  A parabolic subalgebra H_σ is
represented inside H_n: its elements are those supported on S_σ.

:class:`CosetModule` is the dense, vectorized counterpart used for bulk linear
algebra: the right module m_λ H_n with basis m_λ T_d (d a minimal right coset
representative of S_λ).  For λ = (1^n) this is the right regular module.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .combinat import Composition, Tableau
from .exactfield import FieldElement, FieldSpec
from .symgrp import (
    Permutation,
    in_parabolic,
    length,
    min_coset_reps,
    reduced_word,
    refines,
    simple_reflection,
)

__all__ = [
    "HeckeElement",
    "t_of_word",
    "basis_element",
    "generator",
    "m_lambda",
    "murphy_element",
    "tableau_permutation",
    "relative_trace",
    "CosetModule",
    "regular_module",
]


class HeckeElement:
    """Sparse element Σ c_w T_w of H_σ ⊆ H_n over a field."""

    __slots__ = ("fs", "ambient", "terms")

    def __init__(self, fs: FieldSpec, ambient, terms=None):
        self.fs = fs
        self.ambient = Composition(ambient)
        clean = {}
        for w, c in (terms or {}).items():
            c = fs.element(c)
            if c:
                clean[w] = c
        self.terms = clean

    @property
    def n(self) -> int:
        return self.ambient.n

    # constructors ---------------------------------------------------------------
    @classmethod
    def zero(cls, fs, ambient):
        return cls(fs, ambient, {})

    @classmethod
    def one(cls, fs, ambient):
        return cls(fs, ambient, {Permutation.identity(sum(ambient)): fs.one})

    # basic structure -----------------------------------------------------------------
    def coefficient(self, w) -> FieldElement:
        return self.terms.get(Permutation(w), self.fs.zero)

    def support(self):
        return sorted(self.terms, key=lambda w: (length(w), tuple(w)))

    def is_zero(self) -> bool:
        return not self.terms

    def _same(self, other):
        if not isinstance(other, HeckeElement):
            raise TypeError("expected a HeckeElement")
        if other.ambient != self.ambient or other.fs != self.fs:
            raise ValueError("ambient algebra or field mismatch")

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.ambient == other.ambient and self.terms == other.terms

    def __hash__(self):
        return hash((self.ambient, frozenset(self.terms.items())))

    def __add__(self, other):
        self._same(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, self.fs.zero) + c
        return HeckeElement(self.fs, self.ambient, terms)

    def __neg__(self):
        return HeckeElement(self.fs, self.ambient, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "HeckeElement":
        c = self.fs.element(c)
        return HeckeElement(self.fs, self.ambient, {w: c * x for w, x in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def right_generator(self, i: int) -> "HeckeElement":
        """self · T_i."""
        fs, n = self.fs, self.n
        s = simple_reflection(i, n)
        q1 = fs.q - 1
        out = {}
        for w, c in self.terms.items():
            ws = w * s
            pos = w.inverse()
            if pos[i - 1] < pos[i]:  # i before i+1: going up
                out[ws] = out.get(ws, fs.zero) + c
            else:
                out[w] = out.get(w, fs.zero) + c * q1
                out[ws] = out.get(ws, fs.zero) + c * fs.q
        return HeckeElement(fs, self.ambient, out)

    def left_generator(self, i: int) -> "HeckeElement":
        """T_i · self."""
        return self.reverse().right_generator(i).reverse()

    def reverse(self) -> "HeckeElement":
        """Image under the anti-automorphism T_w ↦ T_{w^{-1}}."""
        return HeckeElement(self.fs, self.ambient, {w.inverse(): c for w, c in self.terms.items()})

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})·T[{w.oneline_str()}]" for w, c in sorted(self.terms.items(), key=lambda kv: (length(kv[0]), tuple(kv[0]))))


def mul(x: HeckeElement, y: HeckeElement) -> HeckeElement:
    """Product x·y, computing x·T_w for each w in the support of y from shorter words."""
    x._same(y)
    fs = x.fs
    cache = {Permutation.identity(x.n): x}

    def times(w):
        if w not in cache:
            word = reduced_word(w)
            prefix = w * simple_reflection(word[-1], x.n)
            cache[w] = times(prefix).right_generator(word[-1])
        return cache[w]

    terms = {}
    for w in sorted(y.terms, key=length):
        c = y.terms[w]
        for v, a in times(w).terms.items():
            terms[v] = terms.get(v, fs.zero) + a * c
    return HeckeElement(fs, x.ambient, terms)


def basis_element(w, fs: FieldSpec, ambient=None) -> HeckeElement:
    w = Permutation(w)
    ambient = (len(w),) if ambient is None else ambient
    if not in_parabolic(w, ambient):
        raise ValueError(f"{w} is not in S_{tuple(ambient)}")
    return HeckeElement(fs, ambient, {w: fs.one})


def generator(i: int, n: int, fs: FieldSpec, ambient=None) -> HeckeElement:
    return basis_element(simple_reflection(i, n), fs, ambient)


def t_of_word(w, fs: FieldSpec, word=None, ambient=None) -> HeckeElement:
    """T_{i_1} ... T_{i_l} for a reduced word of w (the canonical one unless given)."""
    w = Permutation(w)
    n = len(w)
    ambient = (n,) if ambient is None else ambient
    word = reduced_word(w) if word is None else list(word)
    x = HeckeElement.one(fs, ambient)
    for i in word:
        x = x.right_generator(i)
    return x


def m_lambda(lam, fs: FieldSpec, ambient=None) -> HeckeElement:
    """Σ T_w over the parabolic subgroup S_λ."""
    from .symgrp import parabolic_elements

    n = sum(lam)
    ambient = (n,) if ambient is None else ambient
    return HeckeElement(fs, ambient, {w: fs.one for w in parabolic_elements(lam)})


def tableau_permutation(t: Tableau) -> Permutation:
    """d(t): the permutation taking the row-filled tableau of the same shape to t."""
    return Permutation(t.reading_word())


def murphy_element(s: Tableau, t: Tableau, fs: FieldSpec) -> HeckeElement:
    """m_st = T_{d(s)^{-1}} m_λ T_{d(t)}."""
    if s.shape != t.shape:
        raise ValueError("tableaux of different shapes")
    ds, dt = tableau_permutation(s), tableau_permutation(t)
    m = m_lambda(s.shape, fs)
    return basis_element(ds.inverse(), fs) * m * basis_element(dt, fs)


def relative_trace(lam, mu, x, rep=None):
    """tr_λ^μ(x) = Σ_{w ∈ R_λ^μ} q^{-ℓ(w)} T_{w^{-1}} x T_w.

    ``x`` is a :class:`HeckeElement`, or an endomorphism matrix of the module
    ``rep`` (anything with ``fs`` and ``word_matrix``), in which case T_w is
    replaced by its representing matrix.
    """
    lam, mu = tuple(lam), tuple(mu)
    if not refines(lam, mu):
        raise ValueError(f"S_{lam} is not contained in S_{mu}")
    reps = min_coset_reps(lam, mu)
    if rep is None:
        fs = x.fs
        total = HeckeElement.zero(fs, x.ambient)
        for w in reps:
            total = total + (basis_element(w.inverse(), fs, x.ambient) * x * basis_element(w, fs, x.ambient)).scale(fs.q_inv ** length(w))
        return total
    fs = rep.fs
    total = fs.zeros(x.shape[:-1])
    for w in reps:
        term = fs.matmul(fs.matmul(rep.word_matrix(w.inverse()), x), rep.word_matrix(w))
        total = fs.add(total, fs.scale(term, fs.q_inv ** length(w)))
    return total


class CosetModule:
    """The right H_n-module m_λ H_n in the basis m_λ T_d, d ∈ R_λ.

    Generator T_i acts on row vectors V (shape ``(..., dim, k)``) by
    ``R[x] = A_i[x]·V[partner_i[x]] + B_i[x]·V[x]``.
    """

    def __init__(self, lam, fs: FieldSpec):
        self.lam = Composition(lam)
        self.fs = fs
        self.n = self.lam.n
        self.reps = min_coset_reps(tuple(self.lam), (self.n,))
        self.index = {d: k for k, d in enumerate(self.reps)}
        self.dim = len(self.reps)
        self.lengths = np.array([length(d) for d in self.reps])
        self._tables = {i: self._table(i) for i in range(1, self.n)}

    def _table(self, i):
        fs = self.fs
        dim = self.dim
        partner = np.arange(dim)
        A = fs.zeros((dim,))
        B = fs.zeros((dim,))
        q, q1 = np.array(fs.q.c, dtype=fs.dtype), np.array((fs.q - 1).c, dtype=fs.dtype)
        one = np.array(fs.one.c, dtype=fs.dtype)
        s = simple_reflection(i, self.n)
        for d, x in self.index.items():
            ds = d * s
            y = self.index.get(ds)
            if y is None:  # d s_i = s_j d with s_j in S_λ
                A[x] = q
            elif length(ds) > length(d):  # m T_d T_i = m T_{ds}; x is the shorter one
                partner[x] = y
                A[x] = q
            else:
                partner[x] = y
                A[x] = one
                B[x] = q1
        return partner, A, B

    def act(self, V, i: int):
        """V · T_i for a batch of row vectors."""
        partner, A, B = self._tables[i]
        fs = self.fs
        return fs.add(fs.mul(A, V[..., partner, :]), fs.mul(B, V))

    def act_word(self, V, word):
        for i in word:
            V = self.act(V, i)
        return V

    def matrix(self, i: int):
        return self.act(self.fs.identity(self.dim), i)

    def basis_vector(self, d):
        v = self.fs.zeros((self.dim,))
        v[self.index[Permutation(d)]] = self.fs.one.c
        return v

    # regular module helpers (λ = 1^n) -------------------------------------------------
    def to_vector(self, x: HeckeElement):
        v = self.fs.zeros((self.dim,))
        for w, c in x.terms.items():
            v[self.index[w]] = c.c
        return v

    def from_vector(self, v, ambient=None) -> HeckeElement:
        fs = self.fs
        ambient = (self.n,) if ambient is None else ambient
        terms = {self.reps[k]: fs.to_element(v[k]) for k in np.nonzero(~fs.is_zero_array(v))[0]}
        return HeckeElement(fs, ambient, terms)

    @lru_cache(maxsize=None)
    def _inverse_index(self):
        return np.array([self.index[d.inverse()] for d in self.reps])

    def act_left(self, V, i: int):
        """T_i · v on the regular module, via the anti-automorphism."""
        inv = self._inverse_index()
        return self.act(V[..., inv, :], i)[..., inv, :]


@lru_cache(maxsize=None)
def regular_module(n: int, fs: FieldSpec) -> CosetModule:
    return CosetModule((1,) * n, fs)
