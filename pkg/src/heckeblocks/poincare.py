"""e-p-adic expansions, zero counts of Poincaré polynomials and vertex formulas.

For a polynomial P, ``z(P)`` is the multiplicity of q^{-1} as a root of P,
where q is the distinguished primitive e-th root of unity of the field.
The Poincaré polynomial of S_n is P_n = Q_2 ... Q_n with
Q_i = 1 + u + ... + u^{i-1}; that of a composition τ is the product over its
parts.  The closed forms below are compared against literal polynomial
division (:func:`zP_by_division`) in the tests.

Characteristic 0 is folded in as ``p = 0``: every Q_i with e | i then has
q^{-1} as a simple root, so z(P_n) = ⌊n/e⌋.
"""

from __future__ import annotations

from dataclasses import dataclass

from .combinat import BlockDescriptor, Composition
from .exactfield import FieldSpec, Poly, build_field, is_prime, root_multiplicity
from .symgrp import length, min_coset_reps

__all__ = [
    "EpAdicExpansion",
    "VertexLabel",
    "ep_adic_expansion",
    "standard_max_ep_parabolic",
    "is_ep_parabolic",
    "zQ",
    "zP",
    "zP_floor_sum",
    "zP_composition",
    "zP_by_division",
    "poincare_polynomial",
    "N_tau",
    "sign_projective",
    "sign_vertex",
    "block_vertex",
]


def _check(e, p):
    if e < 2:
        raise ValueError("e must be at least 2")
    if p != 0 and not is_prime(p):
        raise ValueError(f"p={p} must be 0 or prime")


@dataclass(frozen=True)
class EpAdicExpansion:
    """n = a_{-1} + a_0·e + a_1·e·p + ... + a_r·e·p^r, digits stored as ``digits[i] = a_i``."""

    n: int
    e: int
    p: int
    a_minus1: int
    digits: tuple

    def value(self) -> int:
        if self.p == 0:
            return self.a_minus1 + (self.digits[0] if self.digits else 0) * self.e
        return self.a_minus1 + sum(a * self.e * self.p ** i for i, a in enumerate(self.digits))

    def digit(self, i: int) -> int:
        if i == -1:
            return self.a_minus1
        return self.digits[i] if 0 <= i < len(self.digits) else 0


@dataclass(frozen=True)
class VertexLabel:
    """A pair of parabolic subgroups (S_left, S_right) of S_n × S_n."""

    left: Composition
    right: Composition
    n: int
    projective: bool = False

    def __post_init__(self):
        object.__setattr__(self, "left", Composition(self.left))
        object.__setattr__(self, "right", Composition(self.right))
        if self.left.n != self.n or self.right.n != self.n:
            raise ValueError("vertex compositions must sum to n")


def ep_adic_expansion(n: int, e: int, p: int) -> EpAdicExpansion:
    _check(e, p)
    a_minus1, m = n % e, n // e
    if p == 0:
        digits = (m,) if m else ()
    else:
        digits = []
        while m:
            digits.append(m % p)
            m //= p
        digits = tuple(digits)
    return EpAdicExpansion(n, e, p, a_minus1, digits)


def standard_max_ep_parabolic(n: int, e: int, p: int) -> Composition:
    """(1^{a_{-1}}, e^{a_0}, (ep)^{a_1}, ..., (ep^r)^{a_r})."""
    x = ep_adic_expansion(n, e, p)
    parts = [1] * x.a_minus1
    for i, a in enumerate(x.digits):
        parts += [e * (p ** i if p else 1)] * a
    return Composition(parts)


def is_ep_parabolic(lam, e: int, p: int) -> bool:
    for part in lam:
        if part == 1:
            continue
        if part % e:
            return False
        r = part // e
        if p == 0:
            if r != 1:
                return False
            continue
        while r % p == 0:
            r //= p
        if r != 1:
            return False
    return True


def zQ(i: int, e: int, p: int) -> int:
    """Multiplicity of q^{-1} as a root of Q_i = (u^i - 1)/(u - 1)."""
    _check(e, p)
    if p == 0:
        raise ValueError("zQ is defined here for p > 0 only; use zP for characteristic 0")
    if i < 1:
        raise ValueError("i must be positive")
    if e == p:
        if i % p:
            return 0
        r = 0
        while i % p ** (r + 1) == 0:
            r += 1
        return p ** r - 1
    if i % e:
        return 0
    r, m = 0, i // e
    while m % p == 0:
        m //= p
        r += 1
    return p ** r


def zP(n: int, e: int, p: int) -> int:
    """z(P_n) from the e-p-adic digits of n."""
    _check(e, p)
    if n < 0:
        raise ValueError("n must be non-negative")
    if p == 0:
        return n // e
    if e == p:
        b, m, l, total = [], n, 0, 0
        while m:
            b.append(m % p)
            m //= p
        return sum(bl * l * (p ** l - p ** (l - 1)) for l, bl in enumerate(b) if l >= 1)
    x = ep_adic_expansion(n, e, p)
    total = x.digit(0)
    for l in range(1, len(x.digits)):
        total += x.digits[l] * ((l + 1) * p ** l - l * p ** (l - 1))
    return total


def zP_floor_sum(n: int, e: int, p: int) -> int:
    """z(P_n) as a sum of floor quotients (a second route to the same number)."""
    _check(e, p)
    if p == 0:
        return n // e
    if e == p:
        total, l = 0, 1
        while p ** l <= n:
            total += (n // p ** l - n // p ** (l + 1)) * (p ** l - 1)
            l += 1
        return total
    total, l = 0, 0
    while e * p ** l <= n:
        total += (n // (e * p ** l) - n // (e * p ** (l + 1))) * p ** l
        l += 1
    return total


def zP_composition(tau, e: int, p: int) -> int:
    return sum(zP(t, e, p) for t in tau)


def poincare_polynomial(n: int) -> Poly:
    """P_n = ∏_{i=2}^n (1 + u + ... + u^{i-1}) over the integers.

    Multiplying by Q_i is a running window sum of width i, so each factor
    costs a single pass.
    """
    coeffs = [1]
    for i in range(2, n + 1):
        out = [0] * (len(coeffs) + i - 1)
        run = 0
        for k in range(len(out)):
            run += coeffs[k] if k < len(coeffs) else 0
            if k - i >= 0:
                run -= coeffs[k - i]
            out[k] = run
        coeffs = out
    return Poly(coeffs)


def zP_by_division(n: int, fs: FieldSpec) -> int:
    """z(P_n) by reducing P_n into the field and dividing out u - q^{-1}."""
    return root_multiplicity(poincare_polynomial(n).map(fs.element), fs.q_inv)


def N_tau(tau, fs: FieldSpec, bound: int = 8):
    """Σ q^{-ℓ(w)} over the minimal right coset representatives of S_τ in S_n."""
    n = sum(tau)
    if n > bound:
        raise ValueError(f"n={n} exceeds enumeration bound {bound}")
    counts = {}
    for w in min_coset_reps(tuple(tau), (n,)):
        l = length(w)
        counts[l] = counts.get(l, 0) + 1
    return sum((fs.q_inv ** l * c for l, c in counts.items()), fs.zero)


def sign_projective(tau, e: int, p: int) -> bool:
    return zP(sum(tau), e, p) == zP_composition(tau, e, p)


def sign_vertex(n: int, e: int, p: int) -> Composition:
    """Vertex of the sign module of H_n: the standard maximal e-p-parabolic."""
    return standard_max_ep_parabolic(n, e, p)


def block_vertex(b: BlockDescriptor, p: int) -> VertexLabel:
    """Vertex (S_λ, S_λ) of the block B_{ρ,d} as an (H_n, H_n)-bimodule."""
    _check(b.e, p)
    if p and b.e != p and b.e % p == 0:
        raise ValueError(f"p={p} divides e={b.e} but e != p")
    n = b.n
    if b.weight == 0:
        ones = Composition((1,) * n)
        return VertexLabel(ones, ones, n, projective=True)
    lam = Composition((1,) * sum(b.core) + tuple(standard_max_ep_parabolic(b.weight * b.e, b.e, p)))
    return VertexLabel(lam, lam, n)


# Convenience used by the tests and the CLI.
def field_for(e: int, p: int) -> FieldSpec:
    return build_field(p, e)
