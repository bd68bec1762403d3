"""Exact coefficient arithmetic.

A :class:`FieldSpec` is a finite field GF(p^k) or the cyclotomic field
Q(zeta_e), presented as a quotient of the prime field polynomial ring by a
monic defining polynomial.  Elements are stored in the power basis of the
adjoined root, lowest degree first.  The distinguished parameter ``q`` is the
class of the root itself, so ``q`` is a primitive e-th root of unity (or
``q = 1`` when ``e == p``).

Two interfaces live side by side:

* :class:`FieldElement` -- hashable scalars with operator overloading, used for
  Hecke algebra coefficients and polynomial arithmetic;
* array methods on :class:`FieldSpec` (``add``, ``mul``, ``matmul`` ...) that
  act on numpy arrays whose last axis holds the ``k`` power-basis coordinates.
  Positive characteristic uses ``int64``; characteristic 0 uses object arrays
  of :class:`fractions.Fraction`.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

import numpy as np

__all__ = [
    "FieldSpec",
    "FieldElement",
    "Poly",
    "build_field",
    "cyclotomic",
    "root_multiplicity",
    "resultant",
    "is_prime",
    "euler_phi",
]

# Largest p^k scanned when searching for the defining polynomial.
MAX_EXTENSION_SEARCH = 2_000_000


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def euler_phi(n: int) -> int:
    result, m, f = n, n, 2
    while f * f <= m:
        if m % f == 0:
            while m % f == 0:
                m //= f
            result -= result // f
        f += 1
    if m > 1:
        result -= result // m
    return result


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------


def _is_zero(c) -> bool:
    return c == 0


def _exact_div(a, b):
    """Divide coefficient ``a`` by ``b`` exactly (ints stay ints when possible)."""
    if isinstance(b, FieldElement) or isinstance(a, FieldElement):
        return a * b.inverse() if isinstance(b, FieldElement) else a * Fraction(1, b)
    if isinstance(a, int) and isinstance(b, int) and a % b == 0:
        return a // b
    r = Fraction(a) / Fraction(b)
    return int(r) if r.denominator == 1 else r


class Poly:
    """Dense univariate polynomial, coefficients lowest degree first.

    Coefficients are Python ints, Fractions or :class:`FieldElement` values of a
    single field; they are never mixed within one polynomial.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        c = list(coeffs)
        while c and _is_zero(c[-1]):
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "Poly":
        zero = coeff * 0
        return cls([zero] * degree + [coeff])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self):
        return self.coeffs[-1]

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other])
        return len(self.coeffs) == len(other.coeffs) and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash(self.coeffs)

    def _zero(self):
        return self.coeffs[0] * 0 if self.coeffs else 0

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other])
        n = max(len(self), len(other))
        a = list(self.coeffs) + [0] * (n - len(self))
        b = list(other.coeffs) + [0] * (n - len(other))
        return Poly([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly([c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return Poly([])
        out = [self.coeffs[0] * 0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if _is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = Poly([self.coeffs[0] * 0 + 1]) if self.coeffs else Poly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "Poly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other)
        if dq < 0:
            return Poly([]), Poly(rem)
        quot = [0] * (dq + 1)
        lead = other.lead()
        for i in range(dq, -1, -1):
            c = rem[i + len(other) - 1]
            if _is_zero(c):
                quot[i] = c * 0
                continue
            f = _exact_div(c, lead)
            quot[i] = f
            for j, b in enumerate(other.coeffs):
                rem[i + j] = rem[i + j] - f * b
        return Poly(quot), Poly(rem[: len(other) - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        acc = x * 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def map(self, fn) -> "Poly":
        """Apply ``fn`` to every coefficient, e.g. to reduce into a field."""
        return Poly([fn(c) for c in self.coeffs])

    def __repr__(self):
        if not self.coeffs:
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if _is_zero(c):
                continue
            mono = "" if i == 0 else ("u" if i == 1 else f"u^{i}")
            cs = str(c)
            if mono and cs == "1":
                terms.append(mono)
            elif mono:
                terms.append(f"({cs})*{mono}")
            else:
                terms.append(f"({cs})")
        return "Poly(" + " + ".join(terms) + ")"


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic Euclidean gcd over a field (FieldElement or rational coefficients)."""
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return a
    return a * _exact_div(1, a.lead()) if not isinstance(a.lead(), FieldElement) else a * a.lead().inverse()


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> Poly:
    """The d-th cyclotomic polynomial over the integers.

    Computed by dividing u^d - 1 exactly by the cyclotomic polynomials of the
    proper divisors of d.
    """
    if d < 1:
        raise ValueError("cyclotomic index must be positive")
    f = Poly([-1] + [0] * (d - 1) + [1])
    for dd in range(1, d):
        if d % dd == 0:
            quo, rem = divmod(f, cyclotomic(dd))
            assert rem.is_zero()
            f = quo
    return f


def root_multiplicity(f: Poly, alpha) -> int:
    """Largest l such that (u - alpha)^l divides f, by repeated synthetic division."""
    if f.is_zero():
        raise ValueError("root multiplicity of the zero polynomial is undefined")
    coeffs = list(f.coeffs)
    mult = 0
    while len(coeffs) > 1:
        # Horner: quotient coefficients top-down, remainder last.
        acc = coeffs[-1]
        quot = [acc]
        for c in reversed(coeffs[:-1]):
            acc = c + acc * alpha
            quot.append(acc)
        if not _is_zero(quot.pop()):
            break
        coeffs = quot[::-1]
        mult += 1
    return mult


def _det(rows) -> object:
    """Exact determinant: Bareiss for integers, Gaussian elimination otherwise."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    if all(isinstance(x, int) for r in m for x in r):
        sign, prev = 1, 1
        for k in range(n - 1):
            if m[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
                if swap is None:
                    return 0
                m[k], m[swap] = m[swap], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            prev = m[k][k]
        return sign * m[n - 1][n - 1]
    det = m[0][0] * 0 + 1
    for k in range(n):
        piv = next((i for i in range(k, n) if not _is_zero(m[i][k])), None)
        if piv is None:
            return det * 0
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            det = -det
        det = det * m[k][k]
        inv = _exact_div(1, m[k][k]) if not isinstance(m[k][k], FieldElement) else m[k][k].inverse()
        for i in range(k + 1, n):
            if _is_zero(m[i][k]):
                continue
            f = m[i][k] * inv
            for j in range(k, n):
                m[i][j] = m[i][j] - f * m[k][j]
    return det


def resultant(f: Poly, g: Poly):
    """Resultant of f and g as the determinant of their Sylvester matrix."""
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant needs nonzero polynomials")
    m, n = f.degree, g.degree
    if m == 0 and n == 0:
        return f.lead() * 0 + 1
    zero = f.lead() * 0
    size = m + n
    rows = []
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for i in range(n):
        rows.append([zero] * i + fc + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gc + [zero] * (size - n - 1 - i))
    return _det(rows)


# ---------------------------------------------------------------------------
# Fields
# ---------------------------------------------------------------------------


class FieldSpec:
    """GF(p^k) or Q(zeta_e) with a distinguished primitive e-th root ``q``.

    Use :func:`build_field` rather than calling the constructor directly.
    """

    def __init__(self, p: int, e: int, modulus):
        self.p = p
        self.e = e
        self.modulus = tuple(modulus)  # monic, lowest degree first
        self.k = len(self.modulus) - 1
        self.dtype = np.int64 if p else object
        self._inv_cache: dict = {}
        self.zero = FieldElement(self, (self._b(0),) * self.k)
        self.one = self.element(1)
        x = [self._b(0)] * (self.k + 1)
        x[1] = self._b(1)
        self.q = FieldElement(self, self._reduce(x))
        self.q_inv = self.q.inverse()

    # base field --------------------------------------------------------------
    def _b(self, a):
        if self.p:
            return int(a) % self.p
        return Fraction(a)

    def _binv(self, a):
        if self.p:
            return pow(int(a), -1, self.p)
        return 1 / Fraction(a)

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def quantum_char(self) -> int:
        return self.e

    @property
    def ext_degree(self) -> int:
        return self.k

    @property
    def size(self):
        return self.p ** self.k if self.p else None

    def __repr__(self):
        if self.p:
            base = f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"
        else:
            base = f"Q(zeta_{self.e})"
        return f"FieldSpec({base}, e={self.e}, q={self.q})"

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    # scalar layer --------------------------------------------------------------
    def _reduce(self, c):
        """Reduce a coefficient list of any length modulo the defining polynomial."""
        c = [self._b(x) for x in c]
        k, mod = self.k, self.modulus
        for t in range(len(c) - 1, k - 1, -1):
            lead = c[t]
            if lead:
                for j in range(k):
                    c[t - k + j] -= lead * mod[j]
            c[t] = 0
        c = c[:k] + [self._b(0)] * (k - len(c))
        if self.p:
            c = [x % self.p for x in c]
        return tuple(c)

    def element(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.fs is not self and value.fs != self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, (tuple, list, np.ndarray)):
            return FieldElement(self, self._reduce(list(value)))
        return FieldElement(self, (self._b(value),) + (self._b(0),) * (self.k - 1))

    def _mul(self, a, b):
        if self.k == 1:
            v = a[0] * b[0]
            return (v % self.p,) if self.p else (v,)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        return self._reduce(prod)

    def _inv(self, a):
        if not any(a):
            raise ZeroDivisionError("inverse of zero field element")
        if a in self._inv_cache:
            return self._inv_cache[a]
        if self.k == 1:
            res = (self._binv(a[0]),)
        else:
            res = self._inv_ext(a)
        if self.p:
            self._inv_cache[a] = res
        return res

    def _inv_ext(self, a):
        # extended Euclid in base[x]: find s with s*a = 1 mod modulus
        def trim(v):
            v = list(v)
            while v and not v[-1]:
                v.pop()
            return v

        def sub(u, v):
            n = max(len(u), len(v))
            u = u + [0] * (n - len(u))
            v = v + [0] * (n - len(v))
            return trim([self._b(x - y) for x, y in zip(u, v)])

        def mul(u, v):
            if not u or not v:
                return []
            out = [0] * (len(u) + len(v) - 1)
            for i, x in enumerate(u):
                for j, y in enumerate(v):
                    out[i + j] += x * y
            return trim([self._b(x) for x in out])

        def divmod_(u, v):
            u = list(u)
            qt = [self._b(0)] * max(len(u) - len(v) + 1, 1)
            inv = self._binv(v[-1])
            while len(u) >= len(v) and u:
                f = self._b(u[-1] * inv)
                shift = len(u) - len(v)
                qt[shift] = f
                for j, y in enumerate(v):
                    u[shift + j] = self._b(u[shift + j] - f * y)
                u = trim(u)
            return trim(qt), u

        r0, r1 = trim(self.modulus), trim(a)
        s0, s1 = [], [self._b(1)]
        while r1:
            qt, r = divmod_(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, sub(s0, mul(qt, s1))
        # r0 is a nonzero constant
        c = self._binv(r0[0])
        return self._reduce([x * c for x in s0])

    # array layer ------------------------------------------------------------------
    def zeros(self, shape) -> np.ndarray:
        shape = tuple(np.atleast_1d(shape)) if not isinstance(shape, tuple) else shape
        if self.p:
            return np.zeros(shape + (self.k,), dtype=np.int64)
        out = np.empty(shape + (self.k,), dtype=object)
        out.fill(Fraction(0))
        return out

    def identity(self, d: int) -> np.ndarray:
        out = self.zeros((d, d))
        for i in range(d):
            out[i, i, 0] = 1 if self.p else Fraction(1)
        return out

    def scalar_array(self, x, shape=()) -> np.ndarray:
        """Broadcastable array holding the scalar ``x`` (shape ``shape + (k,)``)."""
        x = self.element(x)
        out = self.zeros(shape) if shape else self.zeros((1,))[0]
        out[...] = np.array(x.c, dtype=self.dtype)
        return out

    def from_elements(self, elems, shape=None) -> np.ndarray:
        elems = list(elems)
        arr = self.zeros((len(elems),))
        for i, x in enumerate(elems):
            arr[i] = np.array(self.element(x).c, dtype=self.dtype)
        if shape is not None:
            arr = arr.reshape(tuple(shape) + (self.k,))
        return arr

    def to_element(self, arr) -> "FieldElement":
        return FieldElement(self, tuple(self._b(x) for x in arr))

    def _fix(self, a):
        return a % self.p if self.p else a

    def add(self, a, b):
        return self._fix(a + b)

    def sub(self, a, b):
        return self._fix(a - b)

    def neg(self, a):
        return self._fix(-a)

    def _reduce_array(self, c):
        # c has last axis of length 2k-1; reduce modulo the defining polynomial
        k, mod = self.k, self.modulus
        c = c.copy()
        for t in range(c.shape[-1] - 1, k - 1, -1):
            lead = c[..., t]
            for j in range(k):
                if mod[j]:
                    c[..., t - k + j] = c[..., t - k + j] - lead * mod[j]
            if self.p:
                c = c % self.p
        return self._fix(c[..., :k])

    def mul(self, a, b):
        """Elementwise product with broadcasting over the leading axes."""
        if self.k == 1:
            return self._fix(a * b)
        k = self.k
        shape = np.broadcast_shapes(a.shape[:-1], b.shape[:-1])
        prod = np.zeros(shape + (2 * k - 1,), dtype=self.dtype) if self.p else None
        if prod is None:
            prod = np.empty(shape + (2 * k - 1,), dtype=object)
            prod.fill(Fraction(0))
        for i in range(k):
            for j in range(k):
                prod[..., i + j] = prod[..., i + j] + a[..., i] * b[..., j]
            if self.p:
                prod %= self.p
        return self._reduce_array(prod)

    def scale(self, a, x):
        """Multiply every entry of array ``a`` by the scalar ``x``."""
        return self.mul(a, self.scalar_array(x))

    def matmul(self, A, B):
        """Matrix product of arrays shaped (..., m, n, k) and (..., n, r, k)."""
        k = self.k
        if self.p and A.shape[-2] * self.p * self.p >= 2**62:
            raise OverflowError("matrix too large for int64 accumulation")
        scale = None
        if not self.p:
            # clear denominators so the products run on Python ints
            A, da = _integerize(A)
            B, db = _integerize(B)
            scale = da * db
        if k == 1:
            out = self._fix(np.matmul(A[..., 0], B[..., 0]))[..., None]
        else:
            parts = [None] * (2 * k - 1)
            for i in range(k):
                for j in range(k):
                    t = self._fix(np.matmul(A[..., i], B[..., j]))
                    parts[i + j] = t if parts[i + j] is None else self._fix(parts[i + j] + t)
            out = self._reduce_array(np.stack(parts, axis=-1))
        if scale is not None:
            out = _to_fraction(out, scale)
        return out

    def is_zero_array(self, a):
        """Boolean array over the leading axes: entry is the zero element."""
        return np.all(a == 0, axis=-1)

    def inv_array(self, a):
        """Inverse of a single element stored as an array of shape (k,)."""
        return np.array(self._inv(tuple(self._b(x) for x in a)), dtype=self.dtype)


def _integerize(A):
    """Integer object array N and denominator d with A = N / d."""
    dens = {x.denominator for x in A.flat if type(x) is Fraction}
    d = lcm(*dens) if dens else 1
    if d == 1:
        conv = np.frompyfunc(lambda x: int(x), 1, 1)
    else:
        conv = np.frompyfunc(lambda x: x.numerator * (d // x.denominator), 1, 1)
    return conv(A) if A.size else A, d


def _to_fraction(A, d):
    conv = np.frompyfunc(lambda x: Fraction(x, d), 1, 1)
    return conv(A) if A.size else A


class FieldElement:
    """Immutable element of a :class:`FieldSpec`."""

    __slots__ = ("fs", "c")

    def __init__(self, fs: FieldSpec, c: tuple):
        self.fs = fs
        self.c = c

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            return other.c
        if isinstance(other, (int, Fraction)):
            return self.fs.element(other).c
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        fs = self.fs
        if fs.p:
            return FieldElement(fs, tuple((x + y) % fs.p for x, y in zip(self.c, o)))
        return FieldElement(fs, tuple(x + y for x, y in zip(self.c, o)))

    __radd__ = __add__

    def __neg__(self):
        fs = self.fs
        if fs.p:
            return FieldElement(fs, tuple((-x) % fs.p for x in self.c))
        return FieldElement(fs, tuple(-x for x in self.c))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        fs = self.fs
        if fs.p:
            return FieldElement(fs, tuple((x - y) % fs.p for x, y in zip(self.c, o)))
        return FieldElement(fs, tuple(x - y for x, y in zip(self.c, o)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.fs, self.fs._mul(self.c, o))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        return FieldElement(self.fs, self.fs._inv(self.c))

    def __truediv__(self, other):
        if not isinstance(other, FieldElement):
            other = self.fs.element(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.fs.element(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.fs.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.c == o

    def __hash__(self):
        if all(x == 0 for x in self.c[1:]):
            return hash(self.c[0])
        return hash(self.c)

    def __bool__(self):
        return any(self.c)

    def __repr__(self):
        if self.fs.k == 1:
            return str(self.c[0])
        terms = []
        for i, x in enumerate(self.c):
            if x:
                mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
                if mono and x == 1:
                    terms.append(mono)
                else:
                    terms.append(f"{x}{'*' + mono if mono else ''}")
        return " + ".join(terms) if terms else "0"


def _multiplicative_order(p: int, e: int) -> int:
    k, v = 1, p % e
    while v != 1 % e:
        v = (v * p) % e
        k += 1
    return k


def _find_factor(p: int, e: int, k: int) -> tuple:
    """Lexicographically least monic degree-k factor of Phi_e over GF(p).

    Every irreducible factor of Phi_e over GF(p) has degree k when p does not
    divide e, so any degree-k divisor is irreducible.  Candidates are ordered
    by their coefficient tuple read from the u^(k-1) term down to the constant.
    """
    if p ** k > MAX_EXTENSION_SEARCH:
        raise NotImplementedError(f"extension GF({p}^{k}) too large to search")
    phi = cyclotomic(e).map(lambda c: c % p)
    for tail in itertools.product(range(p), repeat=k):
        cand = list(reversed(tail)) + [1]
        rem = _mod_p_rem(list(phi.coeffs), cand, p)
        if not any(rem):
            return tuple(cand)
    raise AssertionError("cyclotomic polynomial has no factor of the expected degree")


def _mod_p_rem(f, g, p):
    f = [c % p for c in f]
    dg = len(g) - 1
    for i in range(len(f) - 1, dg - 1, -1):
        c = f[i]
        if c:
            for j in range(dg + 1):
                f[i - dg + j] = (f[i - dg + j] - c * g[j]) % p
    return f[:dg]


@lru_cache(maxsize=None)
def build_field(p: int, e: int) -> FieldSpec:
    """Field containing a primitive e-th root of unity q, of characteristic p.

    For p > 0 with gcd(e, p) = 1 the field is GF(p^k) with k minimal such that
    e divides p^k - 1; for e == p it is GF(p) with q = 1; for p == 0 it is
    Q(zeta_e) presented modulo the e-th cyclotomic polynomial.
    """
    if e < 2:
        raise ValueError("quantum characteristic e must be at least 2")
    if p < 0 or (p != 0 and not is_prime(p)):
        raise ValueError(f"characteristic {p} is neither 0 nor a prime")
    if p == 0:
        return FieldSpec(0, e, cyclotomic(e).coeffs)
    if e == p:
        return FieldSpec(p, e, (p - 1, 1))  # u - 1
    if gcd(e, p) != 1:
        raise ValueError(f"p={p} divides e={e} but e != p")
    k = _multiplicative_order(p, e)
    return FieldSpec(p, e, _find_factor(p, e, k))
