import math

import pytest

from heckeblocks.combinat import BlockDescriptor, blocks_of, compositions
from heckeblocks.exactfield import build_field
from heckeblocks.poincare import (
    N_tau,
    block_vertex,
    ep_adic_expansion,
    is_ep_parabolic,
    poincare_polynomial,
    sign_projective,
    sign_vertex,
    standard_max_ep_parabolic,
    zP,
    zP_by_division,
    zP_composition,
    zP_floor_sum,
    zQ,
)
from heckeblocks.symgrp import is_fixed_point_free

FIELD_PAIRS = [(3, 2), (2, 3), (4, 3), (2, 2), (3, 3)]


def test_expansion_examples():
    x = ep_adic_expansion(25, 3, 2)
    assert x.digit(-1) == 1 and x.digit(3) == 1 and x.value() == 25
    assert [x.digit(i) for i in range(3)] == [0, 0, 0]
    x = ep_adic_expansion(5, 2, 0)
    assert (x.digit(-1), x.digit(0)) == (1, 2)
    x = ep_adic_expansion(0, 3, 2)
    assert x.digit(-1) == 0 and not any(x.digits)


@pytest.mark.parametrize("e,p", FIELD_PAIRS + [(2, 0), (3, 0)])
def test_expansion_roundtrip(e, p):
    for n in range(60):
        x = ep_adic_expansion(n, e, p)
        assert x.value() == n
        assert x.a_minus1 < e and all(d < p for d in x.digits if p)
        assert sum(standard_max_ep_parabolic(n, e, p)) == n


def test_standard_max_parabolic_examples():
    assert standard_max_ep_parabolic(12, 3, 2) == (12,)
    assert standard_max_ep_parabolic(5, 2, 0) == (1, 2, 2)
    assert standard_max_ep_parabolic(3, 3, 2) == (3,)


def test_is_ep_parabolic_examples():
    assert is_ep_parabolic((1, 3, 6), 3, 2)
    assert not is_ep_parabolic((2, 3), 3, 2)
    assert all(is_ep_parabolic((e,) * 3, e, p) for e, p in FIELD_PAIRS + [(2, 0)])
    assert not is_ep_parabolic((4,), 2, 0)


def test_zq_examples():
    assert zQ(6, 3, 2) == 2
    assert zQ(5, 3, 2) == 0
    assert zQ(4, 2, 2) == 3


def test_zp_examples():
    assert zP(6, 3, 2) == 3
    assert zP(4, 2, 2) == 4
    assert zP(25, 3, 2) == 20
    assert zP_by_division(25, build_field(2, 3)) == 20


def test_poincare_polynomial_degree_and_value():
    for n in range(1, 8):
        P = poincare_polynomial(n)
        assert P.degree == n * (n - 1) // 2
        assert P(1) == math.factorial(n)


@pytest.mark.parametrize("e,p", FIELD_PAIRS + [(2, 0), (3, 0)])
def test_zp_formula_matches_division(e, p):
    fs = build_field(p, e)
    for n in range(31):
        assert zP(n, e, p) == zP_by_division(n, fs)


@pytest.mark.parametrize("e,p", FIELD_PAIRS)
def test_zp_closed_form_matches_floor_sum(e, p):
    for n in range(31):
        assert zP(n, e, p) == zP_floor_sum(n, e, p)


def test_zp_composition_examples():
    assert zP_composition((3, 3), 3, 2) == 2
    assert zP_composition((1,) * 5, 3, 2) == 0
    assert zP_composition((7,), 3, 2) == zP(7, 3, 2)


def ep_compositions(m, parts):
    if m == 0:
        yield ()
        return
    for x in parts:
        if x <= m:
            for rest in ep_compositions(m - x, parts):
                yield (x,) + rest


@pytest.mark.parametrize("e,p", [(3, 2), (2, 3), (2, 2), (3, 3)])
def test_proper_ep_parabolics_lose_zeros(e, p):
    r = 0
    while e * p ** r <= 24:
        m = e * p ** r
        parts = [1] + [e * p ** i for i in range(r + 1)]
        count = 0
        for tau in ep_compositions(m, parts):
            assert is_ep_parabolic(tau, e, p)
            if tau != (m,):
                count += 1
                assert zP_composition(tau, e, p) < zP(m, e, p)
        assert count > 0
        r += 1


def test_n_tau_examples():
    fs = build_field(0, 2)
    assert N_tau((4,), fs) == 1
    assert N_tau((1, 1), fs) == 0


@pytest.mark.parametrize("e,p", [(3, 2), (2, 3), (2, 2)])
def test_n_tau_nonzero_iff_zero_counts_agree(e, p):
    fs = build_field(p, e)
    for n in range(1, 8):
        for tau in compositions(n):
            assert bool(N_tau(tau, fs)) == sign_projective(tau, e, p)


def test_sign_projective_examples():
    for e, p in FIELD_PAIRS:
        for n in range(1, 12):
            assert sign_projective(standard_max_ep_parabolic(n, e, p), e, p)
            assert sign_projective((n,), e, p)
    assert not sign_projective((2, 1), 3, 2)


def test_sign_vertex_examples():
    for e, p in FIELD_PAIRS + [(2, 0)]:
        assert sign_vertex(e, e, p) == (e,)
    assert sign_vertex(4, 2, 0) == (2, 2)
    assert sign_vertex(12, 3, 2) == (12,)


def test_block_vertex_examples():
    v = block_vertex(BlockDescriptor((2, 1), 0, 2), 3)
    assert v.projective and v.left == (1, 1, 1)
    assert block_vertex(BlockDescriptor((1,), 2, 2), 0).left == (1, 2, 2)
    assert block_vertex(BlockDescriptor((), 2, 3), 2).left == (6,)


@pytest.mark.parametrize("e,p", FIELD_PAIRS + [(2, 0)])
def test_block_vertices_are_ep_parabolic_and_fixed_point_free(e, p):
    for n in range(1, 31):
        for b in blocks_of(n, e):
            v = block_vertex(b, p)
            assert v.left == v.right and is_ep_parabolic(v.left, e, p)
            if b.weight:
                assert is_fixed_point_free(v.left, sum(b.core))


def test_invalid_parameters():
    with pytest.raises(ValueError):
        zP(5, 1, 2)
    with pytest.raises(ValueError):
        zP(5, 3, 4)
    with pytest.raises(ValueError):
        zQ(3, 3, 0)
