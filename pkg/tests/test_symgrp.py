import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heckeblocks.combinat import compositions
from heckeblocks.symgrp import (
    Permutation,
    all_permutations,
    from_word,
    in_parabolic,
    is_fixed_point_free,
    length,
    min_coset_reps,
    min_double_coset_reps,
    parabolic_conj_contained,
    parabolic_elements,
    reduced_word,
    simple_reflection,
    transposition,
    two_row_double_cosets,
)

perm7 = st.permutations(range(1, 8)).map(Permutation)


def test_length_examples():
    assert length(Permutation.identity(4)) == 0
    assert length(simple_reflection(1, 3)) == 1
    assert length(Permutation((4, 3, 2, 1))) == 6


def test_reduced_word_examples():
    assert reduced_word(Permutation.identity(3)) == []
    w = transposition(1, 3, 3)
    assert reduced_word(w) in ([1, 2, 1], [2, 1, 2])


@settings(max_examples=500, deadline=None)
@given(perm7)
def test_reduced_word_roundtrip(w):
    word = reduced_word(w)
    assert from_word(word, 7) == w
    assert len(word) == length(w)


def test_product_convention():
    # a*b applies a first; length grows by s_i exactly when i comes before i+1
    for w in all_permutations(4):
        for i in range(1, 4):
            grows = length(w * simple_reflection(i, 4)) > length(w)
            assert grows == (w.index(i) < w.index(i + 1))


def test_min_coset_rep_examples():
    assert set(min_coset_reps((1, 1, 1), (3,))) == set(all_permutations(3))
    assert min_coset_reps((2, 2), (2, 2)) == [Permutation.identity(4)]
    assert len(min_coset_reps((2, 1), (3,))) == 3


@pytest.mark.parametrize("n", range(1, 7))
def test_cosets_have_unique_minimal_reps(n):
    group = all_permutations(n)
    for lam in compositions(n):
        H = parabolic_elements(lam)
        for side in ("right", "left"):
            reps = min_coset_reps(lam, (n,), side)
            seen = {}
            for d in reps:
                for u in H:
                    w = u * d if side == "right" else d * u
                    assert length(w) == length(u) + length(d)
                    assert w not in seen
                    seen[w] = d
            assert len(seen) == len(group)


def brute_double_cosets(lam, nu, n):
    A, B = parabolic_elements(lam), parabolic_elements(nu)
    seen, reps = set(), []
    for w in all_permutations(n):
        if w not in seen:
            coset = {a * w * b for a in A for b in B}
            seen |= coset
            reps.append(min(coset, key=length))
    return sorted(reps)


def test_double_coset_examples():
    assert min_double_coset_reps((3,), (3,)) == [Permutation.identity(3)]
    got = set(min_double_coset_reps((2, 2), (2, 2)))
    assert got == {Permutation.identity(4), transposition(2, 3, 4), transposition(1, 3, 4) * transposition(2, 4, 4)}
    assert two_row_double_cosets(2, 2)[1:] == [transposition(2, 3, 4), transposition(1, 3, 4) * transposition(2, 4, 4)]
    assert two_row_double_cosets(0, 4) == [Permutation.identity(4)]


@pytest.mark.parametrize("n", range(1, 6))
def test_double_cosets_match_brute_force(n):
    for lam in compositions(n):
        for nu in compositions(n):
            assert sorted(min_double_coset_reps(lam, nu)) == brute_double_cosets(lam, nu, n)


@pytest.mark.parametrize("a,b", [(a, t - a) for t in range(8) for a in range(t + 1)])
def test_two_row_formula(a, b):
    n = a + b
    if n == 0:
        return
    comp = tuple(x for x in (a, b) if x)
    assert sorted(two_row_double_cosets(a, b)) == sorted(min_double_coset_reps(comp, comp))


@pytest.mark.parametrize("n", range(2, 6))
def test_double_coset_factorisation(n):
    # w = g d h with g ∈ S_λ, d a double coset rep, h a minimal rep of (S_λ^d ∩ S_ν) in S_ν, lengths adding
    for lam, nu in itertools.product(list(compositions(n))[::3], repeat=2):
        A, B = parabolic_elements(lam), parabolic_elements(nu)
        count = {}
        for d in min_double_coset_reps(lam, nu):
            for g in A:
                for h in B:
                    w = g * d * h
                    if length(w) == length(g) + length(d) + length(h):
                        count[w] = count.get(w, 0) + 1
        assert set(count) == set(all_permutations(n))


def brute_conj_contained(lam, mu, n):
    H = parabolic_elements(lam)
    gens = [w for w in H if length(w) == 1]
    return any(all(in_parabolic(x.inverse() * g * x, mu) for g in gens) for x in all_permutations(n))


@pytest.mark.parametrize("n", range(1, 7))
def test_conj_containment_matches_brute_force(n):
    comps = list(compositions(n))
    for lam in comps:
        for mu in comps:
            assert parabolic_conj_contained(lam, mu) == brute_conj_contained(lam, mu, n)


def test_conj_containment_examples():
    assert parabolic_conj_contained((2, 2), (4,))
    assert not parabolic_conj_contained((3,), (2, 2))


def test_fixed_point_free():
    assert is_fixed_point_free((1, 1, 3, 2), 2)
    assert not is_fixed_point_free((1, 1, 1, 2), 2)
    assert is_fixed_point_free((3, 3), 0)
