"""Non-crossing partitions against independent brute-force oracles.

The oracle enumerates ALL set partitions via restricted-growth strings and
filters by a direct four-index crossing scan; the library's enumerator
uses incremental pruning, so the two routes are independent.  The Kreweras
oracle checks maximality over every compatible complement.
"""

import math

import pytest

from freeprod.ncpart import (
    NCPartition,
    SizeLimitError,
    enumerate_nc,
    interval_blocks,
    kreweras,
    verify_kreweras_interval_lemma,
)


# -- independent oracle ------------------------------------------------------


def all_set_partitions(n):
    """Every set partition of {1..n}, via restricted growth strings."""
    out = []

    def grow(assign, nblocks):
        i = len(assign)
        if i == n:
            blocks = [[] for _ in range(nblocks)]
            for x, b in enumerate(assign, start=1):
                blocks[b].append(x)
            out.append(tuple(tuple(b) for b in blocks))
            return
        for b in range(nblocks + 1):
            grow(assign + [b], max(nblocks, b + 1))

    grow([], 0)
    return out


def has_crossing_raw(blocks):
    """Direct quadruple scan: a < b < c < d with a,c and b,d split."""
    where = {}
    for bi, block in enumerate(blocks):
        for x in block:
            where[x] = bi
    items = sorted(where)
    n = len(items)
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                for d in range(c + 1, n):
                    pa, pb, pc, pd = (where[items[i]] for i in (a, b, c, d))
                    if pa == pc and pb == pd and pa != pb:
                        return True
    return False


def brute_force_nc(n):
    return {p for p in all_set_partitions(n) if not has_crossing_raw(p)}


def catalan(n):
    return math.comb(2 * n, n) // (n + 1)


# -- enumeration -------------------------------------------------------------


def test_enumerate_n1():
    assert [p.blocks for p in enumerate_nc(1)] == [((1,),)]


@pytest.mark.parametrize("n", range(1, 8))
def test_enumerate_matches_brute_force(n):
    got = {p.blocks for p in enumerate_nc(n)}
    want = brute_force_nc(n)
    assert got == want
    assert len(got) == catalan(n)


def test_enumerate_counts_through_nine():
    for n in range(1, 10):
        assert len(enumerate_nc(n)) == catalan(n)


def test_enumerate_bell_filter_example():
    # n = 4: 15 set partitions, 14 of them non-crossing
    assert len(all_set_partitions(4)) == 15
    assert len(enumerate_nc(4)) == 14


def test_enumerate_order_is_lexicographic_by_block_vector():
    for n in (3, 4, 5):
        vecs = [p.block_index() for p in enumerate_nc(n)]
        assert vecs == sorted(vecs)


def test_enumerate_guard():
    with pytest.raises(SizeLimitError):
        enumerate_nc(0)
    with pytest.raises(SizeLimitError):
        enumerate_nc(13)


# -- construction and encoding -----------------------------------------------


def test_partition_validation():
    with pytest.raises(ValueError):
        NCPartition.from_blocks(4, [[1, 3], [2, 4]])  # crossing
    with pytest.raises(ValueError):
        NCPartition.from_blocks(4, [[1, 2], [3]])  # missing 4
    with pytest.raises(ValueError):
        NCPartition.from_blocks(3, [[1, 2], [2, 3]])  # repeated


def test_encode_decode_roundtrip():
    p = NCPartition.from_blocks(4, [[1, 3], [2], [4]])
    assert p.encode() == "1,3|2|4"
    assert NCPartition.decode("1,3|2|4") == p


# -- Kreweras ----------------------------------------------------------------


def test_kreweras_examples():
    # one block <-> all singletons
    for n in (2, 3, 5):
        assert kreweras(NCPartition.full(n)) == NCPartition.singletons(n)
        assert kreweras(NCPartition.singletons(n)) == NCPartition.full(n)
    p = NCPartition.from_blocks(4, [[1, 3], [2], [4]])
    assert kreweras(p) == NCPartition.from_blocks(4, [[1, 2], [3, 4]])


def union_noncrossing_raw(p, comp):
    combined = [tuple(2 * x - 1 for x in b) for b in p.blocks]
    combined += [tuple(2 * x for x in b) for b in comp.blocks]
    return not has_crossing_raw(combined)


@pytest.mark.parametrize("n", range(1, 7))
def test_kreweras_is_maximal_compatible(n):
    """K(p) is compatible and every compatible partition refines it."""
    all_nc = enumerate_nc(n)
    for p in all_nc:
        comp = kreweras(p)
        assert union_noncrossing_raw(p, comp)
        for sigma in all_nc:
            if union_noncrossing_raw(p, sigma):
                assert sigma.refines(comp), (p, sigma, comp)


@pytest.mark.parametrize("n", range(1, 9))
def test_kreweras_rank_identity_and_bijectivity(n):
    all_nc = enumerate_nc(n)
    images = set()
    for p in all_nc:
        comp = kreweras(p)
        assert len(p.blocks) + len(comp.blocks) == n + 1
        assert union_noncrossing_raw(p, comp)
        images.add(comp.blocks)
    assert len(images) == len(all_nc)


# -- interval blocks and the linking lemma -------------------------------------


def test_interval_blocks_examples():
    assert interval_blocks(NCPartition.singletons(4)) == [(1,), (2,), (3,), (4,)]
    p = NCPartition.from_blocks(4, [[1, 3], [2], [4]])
    assert interval_blocks(p) == [(2,), (4,)]
    p = NCPartition.from_blocks(4, [[1, 4], [2, 3]])
    assert interval_blocks(p) == [(2, 3)]


def test_interval_lemma_small_and_medium():
    for n in range(2, 9):
        report = verify_kreweras_interval_lemma(n)
        assert report.passed, report.counterexample
        assert report.intervals_checked > 0


def test_interval_lemma_n2_trivial():
    report = verify_kreweras_interval_lemma(2)
    assert report.passed
    assert report.partitions_checked == 1  # only the full block links 1 ~ 2


def test_interval_lemma_guard():
    with pytest.raises(SizeLimitError):
        verify_kreweras_interval_lemma(1)
    with pytest.raises(SizeLimitError):
        verify_kreweras_interval_lemma(11)
