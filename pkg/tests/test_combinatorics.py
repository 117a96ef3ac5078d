import math

import pytest
from hypothesis import given, settings, strategies as st

from jlab.combinatorics import (
    FamilyFileError,
    KSubset,
    PascalTable,
    _merge_count,
    all_subsets,
    binomial,
    binomial_poly,
    intersection_size,
    rank,
    read_family,
    unrank,
    write_family,
)
from jlab.oracles import colex_subsets, comb_mp, pascal_binomial


@pytest.mark.parametrize("a,b,expected", [
    (6, 2, 15),
    (3, 5, 0),
    (5, -1, 0),
    (50, 25, 126410606437752),
    (0, 0, 1),
    (-3, 2, 0),
])
def test_binomial_values(a, b, expected):
    assert binomial(a, b) == expected


def test_binomial_beyond_table_uses_exact_fallback():
    t = PascalTable(a_max=10)
    assert t(11, 5) == 462
    assert t(600, 300) == math.comb(600, 300) == comb_mp(600, 300)


def test_binomial_poly_negative_top():
    # (-3)(-4)/2 = 6
    assert binomial_poly(-3, 2) == 6
    assert binomial_poly(7, 3) == 35
    assert binomial_poly(4, -1) == 0


@given(st.integers(0, 80), st.integers(-2, 82))
def test_binomial_matches_pascal_oracle(a, b):
    assert binomial(a, b) == pascal_binomial(a, b)


def test_unrank_examples():
    assert unrank(0, 5, 2) == KSubset((1, 2), 5)
    assert unrank(binomial(5, 2) - 1, 5, 2) == KSubset((4, 5), 5)
    assert [rank(unrank(k, 7, 3)) for k in range(35)] == list(range(35))


def test_unrank_out_of_range():
    with pytest.raises(IndexError):
        unrank(35, 7, 3)
    with pytest.raises(IndexError):
        unrank(-1, 7, 3)


def test_colex_order_matches_independent_enumeration():
    for n, r in [(6, 3), (7, 2), (8, 4), (5, 5)]:
        assert [u.elements for u in all_subsets(n, r)] == colex_subsets(n, r)


@st.composite
def rank_cases(draw):
    # any (n, r) with C(n, r) <= 10**6, including r = 1 with n up to 10**6
    r = draw(st.integers(1, 12))
    lo, hi = r, 10 ** 6
    while lo < hi:
        mid = (lo + hi + 1) // 2
        lo, hi = (mid, hi) if binomial(mid, r) <= 10 ** 6 else (lo, mid - 1)
    n_max = lo
    n = draw(st.integers(r, n_max))
    k = draw(st.integers(0, binomial(n, r) - 1))
    return n, r, k


@settings(max_examples=300)
@given(rank_cases())
def test_rank_unrank_roundtrip_property(case):
    n, r, k = case
    u = unrank(k, n, r)
    assert len(u) == r and rank(u) == k


@pytest.mark.parametrize("u,v,expected", [
    ((1, 2, 3), (3, 4, 5), 1),
    ((1, 2, 3, 4), (5, 6, 7, 8), 0),
    ((2, 4, 6), (2, 4, 6), 3),
])
def test_intersection_examples(u, v, expected):
    assert intersection_size(KSubset(u, 10), KSubset(v, 10)) == expected


def test_intersection_rejects_mismatched_ground_sets():
    with pytest.raises(ValueError):
        intersection_size(KSubset((1, 2), 5), KSubset((1, 2), 6))


@given(st.integers(2, 300).flatmap(lambda n: st.tuples(
    st.just(n),
    st.sets(st.integers(1, n), min_size=1, max_size=min(n, 12)),
    st.sets(st.integers(1, n), min_size=1, max_size=min(n, 12)))))
def test_mask_and_merge_paths_agree(case):
    n, a, b = case
    u, v = KSubset.of(a, n), KSubset.of(b, n)
    expected = len(a & b)
    assert (u.mask & v.mask).bit_count() == expected
    assert _merge_count(u.elements, v.elements) == expected
    assert intersection_size(u, v) == expected


def test_large_ground_set_uses_merge_path():
    u = KSubset((1, 150, 200), 256)
    v = KSubset((150, 199, 200), 256)
    assert intersection_size(u, v) == 2


@pytest.mark.parametrize("els", [(3, 2), (0, 1), (1, 7), (2, 2)])
def test_ksubset_validation(els):
    with pytest.raises(ValueError):
        KSubset(els, 6)


def test_ksubset_helpers():
    u = KSubset.of([5, 1, 3], 6)
    assert u.elements == (1, 3, 5) and u.r == 3 and 3 in u and 2 not in u
    assert str(u) == "{1,3,5}" and list(u) == [1, 3, 5]
    assert u.mask == 0b10101


def test_family_file_roundtrip(tmp_path):
    fam = [KSubset((1, 2, 3), 6), KSubset((2, 4, 6), 6)]
    path = tmp_path / "fam.txt"
    write_family(path, 6, 3, fam, comment="two sets")
    text = path.read_text()
    assert text.startswith("# two sets\nn=6 r=3\n")
    assert read_family(path) == (6, 3, fam)


def test_family_file_accepts_lines_and_comments():
    n, r, fam = read_family(["# hi", "", "n=5 r=2", "1 2", "# mid", "5 3"])
    assert (n, r) == (5, 2)
    assert fam == [KSubset((1, 2), 5), KSubset((3, 5), 5)]


@pytest.mark.parametrize("lines", [
    ["1 2 3"],                 # no header
    ["n=5 r=2", "1 2 3"],      # wrong length
    ["n=5 r=2", "1 x"],        # junk token
    ["n=5 r=2", "1 9"],        # outside ground set
    [],
])
def test_family_file_errors(lines):
    with pytest.raises(FamilyFileError):
        read_family(lines)
