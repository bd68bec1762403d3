import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heckeblocks.exactfield import (
    Poly,
    build_field,
    cyclotomic,
    euler_phi,
    is_prime,
    poly_gcd,
    resultant,
    root_multiplicity,
)
from heckeblocks.linalg import inverse, matrices_equal, nullspace, rank, solve_left

FIELDS = [(2, 3), (3, 3), (0, 2), (0, 3), (3, 4), (2, 5), (5, 4), (2, 2), (3, 2), (7, 3), (0, 5)]


def u_power_minus_one(d):
    return Poly([-1] + [0] * (d - 1) + [1])


@pytest.mark.parametrize("p,e", FIELDS)
def test_field_invariants(p, e):
    fs = build_field(p, e)
    q = fs.q
    assert sum((q ** i for i in range(e)), fs.zero) == 0
    assert q * fs.q_inv == fs.one
    assert q ** e == fs.one
    if p == e:
        assert q == fs.one
    else:
        assert all(q ** m != fs.one for m in range(1, e))


def test_gf4_for_e3_p2():
    fs = build_field(2, 3)
    assert fs.k == 2 and fs.size == 4
    assert fs.q ** 3 == fs.one and fs.q != fs.one


def test_e_equals_p_is_prime_field_with_q_one():
    fs = build_field(3, 3)
    assert fs.k == 1 and fs.q == fs.one


def test_char0_e2_has_q_minus_one():
    fs = build_field(0, 2)
    assert fs.q == -fs.one


def test_modulus_is_lex_least_factor():
    # Φ_5 over GF(2) is irreducible of degree 4; Φ_7 splits into two cubics
    fs = build_field(2, 7)
    assert fs.k == 3
    assert fs.modulus == (1, 1, 0, 1)  # u^3 + u + 1 beats u^3 + u^2 + 1


@pytest.mark.parametrize("p,e", [(2, 4), (3, 6), (1, 3), (4, 3), (0, 1)])
def test_invalid_fields_rejected(p, e):
    with pytest.raises(ValueError):
        build_field(p, e)


def test_cyclotomic_examples():
    assert cyclotomic(1) == Poly([-1, 1])
    assert cyclotomic(6) == Poly([1, -1, 1])
    prod = Poly([1])
    for d in (1, 2, 3, 4, 6, 12):
        prod = prod * cyclotomic(d)
    assert prod == u_power_minus_one(12)


@pytest.mark.parametrize("d", range(1, 61))
def test_cyclotomic_product_identity(d):
    prod = Poly([1])
    for dd in range(1, d + 1):
        if d % dd == 0:
            prod = prod * cyclotomic(dd)
    assert prod == u_power_minus_one(d)
    assert cyclotomic(d).degree == euler_phi(d)


def test_is_prime_and_phi():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert [euler_phi(n) for n in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


def test_root_multiplicity_examples():
    fs = build_field(5, 4)
    a, b = fs.q, fs.q ** 2
    f = Poly([-a, fs.one]) * Poly([-a, fs.one]) * Poly([-b, fs.one])
    assert root_multiplicity(f, a) == 2
    assert root_multiplicity(f, fs.element(3) * a + 1) == 0
    fs = build_field(2, 3)
    assert root_multiplicity(cyclotomic(6).map(fs.element), fs.q_inv) == 1


def random_poly(fs, coeffs):
    return Poly([fs.element(c) for c in coeffs] + [fs.one])


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 1), max_size=6), st.lists(st.integers(0, 1), max_size=6))
def test_root_multiplicity_additive(a, b):
    fs = build_field(2, 3)
    f, g = random_poly(fs, a), random_poly(fs, b)
    assert root_multiplicity(f * g, fs.q_inv) == root_multiplicity(f, fs.q_inv) + root_multiplicity(g, fs.q_inv)


def test_resultant_examples():
    assert resultant(cyclotomic(6), cyclotomic(3)) == 4
    assert resultant(cyclotomic(5), cyclotomic(3)) == 1
    f = Poly([3, 0, 1])
    assert resultant(f, f) == 0


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(0, 2), max_size=8), st.lists(st.integers(0, 2), max_size=8))
def test_resultant_vanishes_iff_common_factor(a, b):
    fs = build_field(3, 2)
    f, g = random_poly(fs, a), random_poly(fs, b)
    assert (resultant(f, g) == 0) == (poly_gcd(f, g).degree > 0)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=1, max_size=5), st.lists(st.integers(-3, 3), min_size=1, max_size=5))
def test_resultant_multiplicative_in_integers(a, b):
    f, g = Poly(a + [1]), Poly(b + [1])
    h = Poly([2, 1])
    assert resultant(f * h, g) == resultant(f, g) * resultant(h, g)


def test_poly_divmod_roundtrip():
    f, g = Poly([Fraction(1, 2), 3, 0, 5]), Poly([1, 2])
    quo, rem = divmod(f, g)
    assert quo * g + rem == f and rem.degree < g.degree


@pytest.mark.parametrize("p,e", [(2, 3), (0, 3), (5, 4)])
def test_element_arithmetic(p, e):
    fs = build_field(p, e)
    elems = [fs.q ** i + fs.element(j) for i in range(e) for j in range(3)]
    for x, y in itertools.product(elems, repeat=2):
        assert (x + y) - y == x
        assert x * y == y * x
        if y != 0:
            assert (x * y) * y.inverse() == x


@pytest.mark.parametrize("p,e", [(2, 3), (0, 3), (3, 2), (0, 2)])
def test_array_layer_matches_elements(p, e):
    fs = build_field(p, e)
    xs = [[fs.q ** (i + j) + fs.element(i) for j in range(3)] for i in range(3)]
    A = fs.from_elements([x for row in xs for x in row], shape=(3, 3))
    P = fs.matmul(A, A)
    for i in range(3):
        for j in range(3):
            want = sum((xs[i][k] * xs[k][j] for k in range(3)), fs.zero)
            assert fs.to_element(P[i, j]) == want


@pytest.mark.parametrize("p,e", [(2, 3), (0, 3), (3, 2)])
def test_linear_algebra(p, e):
    fs = build_field(p, e)
    rng = np.random.default_rng(1)
    vals = [fs.q ** int(a) * fs.element(int(b)) for a, b in rng.integers(0, 5, size=(16, 2))]
    A = fs.from_elements(vals, shape=(4, 4))
    r = rank(fs, A)
    K = nullspace(fs, A)
    assert len(K) == 4 - r
    if len(K):
        assert fs.is_zero_array(fs.matmul(A, np.swapaxes(K, 0, 1))).all()
    if r == 4:
        assert matrices_equal(fs.matmul(A, inverse(fs, A)), fs.identity(4))
        B = fs.matmul(fs.identity(4)[:2], A)
        X = solve_left(fs, A, B)
        assert matrices_equal(X, fs.identity(4)[:2])
