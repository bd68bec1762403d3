import itertools
import math

import numpy as np
import pytest

from heckeblocks.combinat import BlockDescriptor, compositions, count_standard_tableaux, e_cores, is_e_core, partitions
from heckeblocks.exactfield import build_field
from heckeblocks.hecke import HeckeElement, regular_module
from heckeblocks.linalg import matrices_equal
from heckeblocks.modrep import (
    ModuleRep,
    bimodule_block,
    block_idempotents,
    block_of_specht,
    central_idempotents,
    count_blocks_oracle,
    hom_over_subalgebra,
    induce,
    is_bimodule_rel_projective,
    is_relatively_projective,
    module_vertex,
    regular_multiply,
    restrict,
    sign_module,
    specht_module,
    specht_module_regular,
    tensor_module,
    trivial_module,
    verify_submodule_tail,
)
from heckeblocks.poincare import is_ep_parabolic, standard_max_ep_parabolic
from heckeblocks.symgrp import refines

F23 = build_field(2, 3)
F32 = build_field(3, 2)


def test_trivial_and_sign():
    for fs in (F23, F32, build_field(0, 3)):
        T, S = trivial_module(4, fs), sign_module(4, fs)
        for i in range(1, 4):
            assert fs.to_element(T.gens[i][0, 0]) == fs.q
            assert fs.to_element(S.gens[i][0, 0]) == -fs.one
        assert T.satisfies_relations() and S.satisfies_relations()


def test_specht_small_cases():
    S = specht_module((2, 1), F23)
    assert S.dim == 2 and S.satisfies_relations()
    for n in range(1, 6):
        assert all(matrices_equal(specht_module((n,), F23).gens[i], trivial_module(n, F23).gens[i]) for i in range(1, n))


@pytest.mark.parametrize("p,e", [(2, 3), (3, 2), (2, 2), (3, 3), (0, 2), (0, 3)])
def test_specht_relations_and_dimension(p, e):
    fs = build_field(p, e)
    for n in range(1, 7):
        for lam in partitions(n):
            S = specht_module(lam, fs)
            assert S.dim == count_standard_tableaux(lam)
            assert S.relation_failures() == []


@pytest.mark.parametrize("p,e", [(0, 2), (2, 3), (3, 3), (2, 2), (0, 3), (3, 2), (5, 4)])
def test_specht_matches_regular_quotient(p, e):
    fs = build_field(p, e)
    for n in range(1, 5):
        for lam in partitions(n):
            A, B = specht_module(lam, fs), specht_module_regular(lam, fs)
            assert all(matrices_equal(A.gens[i], B.gens[i]) for i in range(1, n))


def test_tensor_module():
    S = specht_module((2, 1), F23)
    M = tensor_module(S, sign_module(2, F23))
    assert M.dim == 2 and tuple(M.ambient) == (3, 2) and M.satisfies_relations()
    T = tensor_module(trivial_module(2, F23), trivial_module(3, F23))
    assert all(matrices_equal(T.gens[i], trivial_module(5, F23, ambient=(2, 3)).gens[i]) for i in T.gens)


def test_restrict():
    S = specht_module((2, 1), F23)
    assert restrict(S, (3,)).gens.keys() == S.gens.keys()
    R = restrict(S, (2, 1))
    assert R.dim == 2 and list(R.gens) == [1]
    sig = restrict(sign_module(5, F23), (2, 3))
    other = tensor_module(sign_module(2, F23), sign_module(3, F23))
    assert all(matrices_equal(sig.gens[i], other.gens[i]) for i in sig.gens)
    with pytest.raises(ValueError):
        restrict(S, (1, 1, 1, 1))


def test_induce():
    M = induce(sign_module(3, F23, ambient=(2, 1)), 3)
    assert M.dim == 3 and M.satisfies_relations()
    for n in range(1, 5):
        R = induce(trivial_module(n, F23, ambient=(1,) * n), n)
        assert R.dim == math.factorial(n) and R.satisfies_relations()
    S = specht_module((2, 1), F32)
    for lam in [(2, 1), (1, 2), (1, 1, 1)]:
        N = induce(restrict(S, lam))
        assert N.dim == S.dim * math.factorial(3) // math.prod(math.factorial(x) for x in lam)
        assert N.satisfies_relations()


def test_hom_spaces():
    S = specht_module((2, 1), F23)
    assert len(hom_over_subalgebra(S, S, (1, 1, 1))) == S.dim ** 2
    for fs in (F23, build_field(0, 3)):
        S = specht_module((2, 1), fs)
        assert len(hom_over_subalgebra(S, S)) == 1
    for n in range(2, 5):
        for fs in (F23, build_field(0, 4)):
            assert len(hom_over_subalgebra(trivial_module(n, fs), sign_module(n, fs))) == 0


def test_hom_matrices_intertwine():
    S = specht_module((3, 1), F32)
    M = restrict(S, (2, 2))
    for phi in hom_over_subalgebra(M, M):
        for i in M.gens:
            assert matrices_equal(F32.matmul(M.gens[i], phi), F32.matmul(phi, M.gens[i]))


def test_relative_projectivity_examples():
    for M in (sign_module(3, F23), specht_module((2, 1), F23)):
        assert is_relatively_projective(M, (3,))
    assert not is_relatively_projective(sign_module(3, F23), (2, 1))
    # (2,1) is a 2-core, so S^(2,1) is projective when e = 2
    assert is_relatively_projective(specht_module((2, 1), F32), (1, 1, 1))
    assert not is_relatively_projective(specht_module((2, 1), F23), (1, 1, 1))


def test_vertex_examples():
    for p in (0, 2):
        assert module_vertex(sign_module(3, build_field(p, 3))) == {(3,)}
    assert module_vertex(sign_module(4, build_field(0, 2))) == {(2, 2)}
    assert module_vertex(specht_module((2, 1), F32)) == {(1, 1, 1)}


def test_zero_module_vertex_warns():
    Z = ModuleRep(F23, (3,), 0, {i: F23.zeros((0, 0)) for i in (1, 2)}, "zero")
    with pytest.warns(UserWarning):
        assert module_vertex(Z) == {(1, 1, 1)}


@pytest.mark.parametrize("e,p", [(2, 0), (3, 0), (3, 2), (2, 3), (2, 2)])
def test_sign_vertex_is_standard_maximal(e, p):
    fs = build_field(p, e)
    for n in range(1, 6):
        assert module_vertex(sign_module(n, fs)) == {standard_max_ep_parabolic(n, e, p)}


@pytest.mark.parametrize("e,p", [(3, 2), (2, 3), (2, 2), (2, 0), (3, 0)])
def test_specht_vertices_are_ep_parabolic(e, p):
    fs = build_field(p, e)
    for n in range(1, 6):
        for lam in partitions(n):
            vertex = module_vertex(specht_module(lam, fs))
            assert len(vertex) == 1
            assert all(is_ep_parabolic(v, e, p) for v in vertex)


def test_projectivity_is_conjugation_invariant():
    for M in (sign_module(4, F23), specht_module((3, 1), F32), specht_module((2, 2), F23)):
        for lam in compositions(4):
            got = {is_relatively_projective(M, perm) for perm in set(itertools.permutations(lam))}
            assert len(got) == 1


@pytest.mark.parametrize(
    "M,N",
    [
        (sign_module(2, F32), sign_module(2, F32)),
        (sign_module(3, F23), sign_module(1, F23)),
        (specht_module((2, 1), F32), sign_module(2, F32)),
        (specht_module((2, 1), F23), specht_module((2,), F23)),
    ],
)
def test_tensor_vertex_is_concatenation(M, N):
    want = {tuple(a) + tuple(b) for a in module_vertex(M) for b in module_vertex(N)}
    assert {tuple(v) for v in module_vertex(tensor_module(M, N))} == want


@pytest.mark.parametrize("M", [sign_module(4, F32), specht_module((3, 1), F23), specht_module((2, 1, 1), F32), sign_module(4, F23)])
def test_relative_projectivity_is_transitive(M):
    n = M.n
    comps = list(compositions(n))
    for mu in comps:
        if not is_relatively_projective(M, mu):
            continue
        for lam in comps:
            if refines(lam, mu) and is_relatively_projective(restrict(M, mu), lam):
                assert is_relatively_projective(M, lam)


def test_block_of_specht():
    assert block_of_specht((1, 1, 1), 2) == BlockDescriptor((1,), 1, 2)
    assert block_of_specht((2, 1), 2) == BlockDescriptor((2, 1), 0, 2)
    assert block_of_specht((3, 1), 2) == BlockDescriptor((), 2, 2)


def test_central_idempotent_counts():
    assert len(central_idempotents(3, build_field(0, 3))) == 1
    assert len(central_idempotents(3, F32)) == 2


@pytest.mark.parametrize("p,e", [(2, 3), (3, 2), (2, 2), (0, 2), (0, 3)])
def test_idempotents_are_orthogonal_and_sum_to_one(p, e):
    fs = build_field(p, e)
    for n in range(1, 5):
        R = regular_module(n, fs)
        idem = [R.to_vector(x) for x in central_idempotents(n, fs)]
        assert len(idem) == len(e_cores(n, e)) == count_blocks_oracle(n, fs)
        total = fs.zeros((R.dim,))
        for a, u in enumerate(idem):
            total = fs.add(total, u)
            for b, v in enumerate(idem):
                prod = regular_multiply(fs, n, u, v)
                assert np.array_equal(prod, u if a == b else fs.zeros((R.dim,)))
        assert np.array_equal(total, R.to_vector(HeckeElement.one(fs, (n,))))


@pytest.mark.parametrize("p,e", [(2, 3), (3, 2), (0, 2)])
def test_block_labels_match_specht_modules(p, e):
    fs = build_field(p, e)
    for n in range(1, 5):
        labels = dict(block_idempotents(n, fs))
        for lam in partitions(n):
            b = block_of_specht(lam, e)
            S = specht_module(lam, fs)
            for label, idem in labels.items():
                mat = S.element_matrix(idem)
                want = np.array_equal(mat, fs.identity(S.dim)) if label == b else bool(fs.is_zero_array(mat).all())
                assert want


def test_bimodule_blocks():
    F22 = build_field(2, 2)
    blocks = [bimodule_block(2, b, F22) for b, _ in block_idempotents(2, F22)]
    assert [B.dim for B in blocks] == [2]
    for n, fs in [(3, F32), (3, F23), (4, F32)]:
        dims = 0
        for b, _ in block_idempotents(n, fs):
            B = bimodule_block(n, b, fs)
            assert B.two_sided_relation_failures() == [] and B.relation_failures() == []
            dims += B.dim
        assert dims == math.factorial(n)


def test_bimodule_relative_projectivity_examples():
    F22 = build_field(2, 2)
    B = bimodule_block(2, BlockDescriptor((), 1, 2), F22)
    assert is_bimodule_rel_projective(B, (2,), (2,))
    assert not is_bimodule_rel_projective(B, (1, 1), (1, 1))
    W = bimodule_block(3, BlockDescriptor((2, 1), 0, 2), F32)
    assert is_bimodule_rel_projective(W, (1, 1, 1), (1, 1, 1))


@pytest.mark.parametrize("tau,m,p,e", [((2, 1), 1, 3, 2), ((1,), 1, 3, 2), ((2, 1), 2, 3, 2), ((2, 1), 2, 0, 2), ((1, 1), 2, 2, 3), ((3, 1), 2, 0, 3)])
def test_submodule_tail(tau, m, p, e):
    rep = verify_submodule_tail(tau, m, build_field(p, e))
    assert rep.verdict, rep.to_json()
    if is_e_core(tau, e):
        assert rep.details["summand_dim"] == count_standard_tableaux(tau)


def test_bounds_are_enforced():
    with pytest.raises(ValueError):
        specht_module((5, 4), F23)
    with pytest.raises(ValueError):
        central_idempotents(6, F23)
    with pytest.raises(ValueError):
        verify_submodule_tail((3, 2), 3, F23)
