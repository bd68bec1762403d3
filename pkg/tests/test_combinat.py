import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heckeblocks.combinat import (
    BlockDescriptor,
    EnumerationBoundError,
    Partition,
    Tableau,
    blocks_of,
    count_standard_tableaux,
    e_core,
    e_cores,
    e_weight,
    extend_partition,
    extend_tableau,
    hook_lengths,
    is_e_core,
    is_e_restricted,
    lr_coefficient,
    m_tail_tableaux,
    parse_partition,
    partitions,
    remove_rim_hook,
    standard_tableaux,
    truncate_tableau,
)


def rim_hook_core(lam, e, rng):
    """e-core by stripping rim e-hooks in random order, straight from the diagram."""
    while True:
        cells = sorted(c for c, h in hook_lengths(lam).items() if h == e)
        if not cells:
            return lam, 0
        lam = remove_rim_hook(lam, *rng.choice(cells))
        core, k = rim_hook_core(lam, e, rng)
        return core, k + 1


partition_st = st.integers(0, 12).flatmap(lambda n: st.sampled_from(list(partitions(n))))


def test_partition_basics():
    assert Partition((3, 1, 0)) == (3, 1)
    assert Partition((3, 1)).conjugate() == (2, 1, 1)
    assert str(Partition()) == "∅"
    with pytest.raises(ValueError):
        Partition((1, 2))
    assert parse_partition("") == Partition() and parse_partition("2,1") == (2, 1)
    assert len(list(partitions(7))) == 15


@pytest.mark.parametrize(
    "lam,e,core,weight",
    [((3, 1), 2, (), 2), ((2, 1), 3, (), 1), ((2, 1), 2, (2, 1), 0), ((), 4, (), 0), ((1, 1, 1), 2, (1,), 1)],
)
def test_core_and_weight_examples(lam, e, core, weight):
    assert e_core(lam, e) == core
    assert e_weight(lam, e) == weight


@settings(max_examples=300, deadline=None)
@given(partition_st, st.sampled_from([2, 3, 4, 5]), st.integers(0, 10 ** 6))
def test_core_is_removal_order_independent(lam, e, seed):
    core, removed = rim_hook_core(lam, e, random.Random(seed))
    assert core == e_core(lam, e)
    assert removed == e_weight(lam, e)
    assert e_core(core, e) == core and is_e_core(core, e)
    assert sum(lam) == sum(core) + e * e_weight(lam, e)


def test_is_e_restricted():
    assert all(is_e_restricted((1,) * n, e) for n in range(6) for e in (2, 3))
    assert not is_e_restricted((3,), 2)
    assert is_e_restricted((2, 2, 1), 2)


@pytest.mark.parametrize("lam,count", [((2, 1), 2), ((2, 2), 2), ((3, 2, 1), 16), ((4,), 1)])
def test_standard_tableaux_examples(lam, count):
    tabs = standard_tableaux(lam)
    assert len(tabs) == count
    assert all(t.is_standard() and t.shape == lam for t in tabs)


def test_single_row_tableau():
    assert standard_tableaux((4,)) == [Tableau([[1, 2, 3, 4]])]


@pytest.mark.parametrize("n", range(11))
def test_hook_length_formula(n):
    for lam in partitions(n):
        assert len(standard_tableaux(lam)) == count_standard_tableaux(lam)


def test_enumeration_bound():
    with pytest.raises(EnumerationBoundError):
        standard_tableaux((6, 5), bound=10)


def test_lr_examples():
    assert lr_coefficient((2, 1, 1), (2, 1), (1,)) == 1
    assert lr_coefficient((2, 1, 1, 1), (2, 1), (2,)) == 0
    assert lr_coefficient((3, 2, 1), (3, 2, 1), ()) == 1
    assert lr_coefficient((3, 2, 1), (2, 1), (2, 1)) == 2


@pytest.mark.parametrize("n", range(1, 9))
def test_lr_branching_preserves_dimension(n):
    for pi in partitions(n):
        f = count_standard_tableaux(pi)
        for a in range(n + 1):
            total = sum(
                lr_coefficient(pi, lam, nu) * count_standard_tableaux(lam) * count_standard_tableaux(nu)
                for lam in partitions(a)
                for nu in partitions(n - a)
            )
            assert total == f


def test_extend_partition():
    assert extend_partition((2, 1), 2) == (2, 1, 1, 1)
    assert extend_partition((2, 1), 0) == (2, 1)
    assert extend_partition((), 3) == (1, 1, 1)


def test_m_tail_examples():
    assert len(m_tail_tableaux((2, 1), 1)) == 2
    assert m_tail_tableaux((3,), 0) == [Tableau([[1, 2, 3]])]
    assert len(m_tail_tableaux((2, 2), 2)) == len(standard_tableaux((2, 2)))


@pytest.mark.parametrize("a", range(1, 6))
def test_tail_bijection_respects_dominance(a):
    for tau in partitions(a):
        std = standard_tableaux(tau)
        for m in range(4):
            ext = [extend_tableau(t, m) for t in std]
            assert sorted(ext, key=Tableau.reading_word) == sorted(m_tail_tableaux(tau, m), key=Tableau.reading_word)
            assert all(truncate_tableau(x, m) == t for x, t in zip(ext, std))
            for s, t in zip(std, ext):
                for s2, t2 in zip(std, ext):
                    assert s.dominates(s2) == t.dominates(t2)


def test_block_descriptor():
    b = BlockDescriptor((1,), 2, 2)
    assert b.n == 5
    with pytest.raises(ValueError, match="cell 1,1"):
        BlockDescriptor((2,), 1, 2)


def test_blocks_of():
    rows = blocks_of(3, 2)
    assert sorted(b.weight for b in rows) == [0, 1]
    assert {b.core for b in rows} == {(1,), (2, 1)}
    assert [b.core for b in blocks_of(3, 3)] == [()]


@pytest.mark.parametrize("e", range(2, 8))
def test_e_cores_match_partition_scan(e):
    for n in range(19):
        scan = {e_core(lam, e) for lam in partitions(n)}
        assert set(e_cores(n, e)) == scan
        assert len(e_cores(n, e)) == len(scan)
