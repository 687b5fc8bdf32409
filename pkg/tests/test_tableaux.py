from fractions import Fraction

import pytest

from cde.core import IntPolynomial
from cde.errors import (
    MalformedInputError,
    NotBarelySetValuedError,
    NotCornerError,
    RangeError,
)
from cde.poset import expectation_X, expectation_Y, is_isomorphic, chain, stats
from cde.tableaux import (
    R_and_Rplus,
    SetValuedTableau,
    barely_to_dual_triple,
    barely_to_triple,
    chain_to_standard,
    count_ssyt,
    cover_to_flagged_barely,
    crowd,
    default_flag,
    dual_triple_to_barely,
    enumerate_ssyt,
    enumerate_standard_barely,
    enumerate_standard_tableaux,
    f_plus_one,
    flagged_barely_to_cover,
    flagged_to_partition,
    format_tableau,
    hook_content_count,
    hook_f,
    kerov_mean_zero_check,
    outside_corners,
    partition_to_flagged,
    rank_generating_function,
    rect_staircase,
    removable_corners,
    shifted_interval,
    standard_to_chain,
    strict_subpartitions,
    subpartitions,
    svt,
    transpose,
    triple_to_barely,
    uncrowd,
    young_interval,
)

import bruteforce


def all_partitions(n):
    """All partitions of every size up to n."""
    out = [()]

    def rec(remaining, cap, acc):
        for part in range(1, min(remaining, cap) + 1):
            out.append(tuple(acc + [part]))
            rec(remaining - part, part, acc + [part])

    rec(n, n, [])
    return sorted(set(out), key=lambda m: (sum(m), m))


def test_rect_staircase():
    assert rect_staircase(4, 2, 4) == (12, 12, 8, 8, 4, 4)
    assert rect_staircase(2, 3, 5) == (5, 5, 5)
    assert rect_staircase(5, 1, 1) == (4, 3, 2, 1)
    assert rect_staircase(1, 2, 2) == ()


def test_transpose_and_corners():
    assert transpose((3, 1, 1)) == (3, 1, 1)
    assert transpose((4, 2)) == (2, 2, 1, 1)
    assert outside_corners((2, 1)) == [(1, 3), (2, 2), (3, 1)]
    assert outside_corners(()) == [(1, 1)]
    assert removable_corners((2, 1)) == [(1, 2), (2, 1)]


def test_young_interval_small():
    assert is_isomorphic(young_interval((1,)), chain(2))
    p = young_interval((2, 1))
    assert p.n == 5 and len(p.covers) == 5


def test_young_interval_311_expectations():
    p = young_interval((3, 1, 1))
    assert expectation_X(p) == Fraction(13, 10)
    assert expectation_Y(p) == Fraction(23, 18)


def test_shifted_interval():
    assert is_isomorphic(shifted_interval((1,)), chain(2))
    assert is_isomorphic(shifted_interval((2, 1)), chain(4))
    p = shifted_interval((3, 1))
    assert expectation_X(p) == 1
    assert expectation_Y(p) == 1
    assert strict_subpartitions((3, 1)) == [(), (1,), (2,), (2, 1), (3,), (3, 1)]


def test_rank_generating_function_examples():
    assert rank_generating_function((1,)) == IntPolynomial((1, 1))
    assert rank_generating_function((2, 1)) == IntPolynomial((1, 1, 2, 1))


def q_binomial(n, k):
    """q-Pascal recurrence, as a plain coefficient list (independent route)."""
    if k < 0 or k > n:
        return []
    if k == 0 or k == n:
        return [1]
    a = q_binomial(n - 1, k - 1)
    b = q_binomial(n - 1, k)
    out = [0] * max(len(a), len(b) + k)
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i + k] += c
    return out


def test_rank_generating_function_rectangles_are_q_binomials():
    for a in range(1, 4):
        for b in range(1, 5):
            got = rank_generating_function((b,) * a)
            assert list(got.coeffs) == q_binomial(a + b, a)


def test_rank_generating_function_vs_enumeration():
    # every shape up to size 8, plus a handful of size <= 20 stress shapes
    corpus = all_partitions(8) + [(6, 5, 4, 3, 2), (10, 10), (7, 7, 6), (12, 8)]
    for shape in corpus:
        counts = {}
        for mu in bruteforce.subpartitions(shape):
            counts[sum(mu)] = counts.get(sum(mu), 0) + 1
        direct = [counts.get(k, 0) for k in range(max(counts) + 1)]
        assert list(rank_generating_function(shape).coeffs) == direct


def test_hook_f():
    assert hook_f((2, 1)) == 2
    assert hook_f((7,)) == 1
    assert hook_f((2, 2)) == 2
    for shape in all_partitions(7):
        assert hook_f(shape) == len(bruteforce.standard_tableaux(shape))


def test_f_plus_one_examples():
    assert f_plus_one((2, 1)) == 8
    assert f_plus_one((1,)) == 1


def test_f_plus_one_vs_bruteforce():
    for shape in all_partitions(6):
        if shape:
            assert f_plus_one(shape) == len(bruteforce.standard_barely_set_valued(shape))


def test_f_plus_one_rect_staircase_formula():
    for d in range(2, 5):
        for a in range(1, 3):
            for b in range(1, 3):
                lam = rect_staircase(d, a, b)
                expect = (sum(lam) + 1) * Fraction((d - 1) * a * b, a + b) * hook_f(lam)
                assert f_plus_one(lam) == expect


def test_conjugation_symmetry():
    for shape in all_partitions(7):
        if shape:
            assert f_plus_one(shape) == f_plus_one(transpose(shape))
            assert rank_generating_function(shape)(1) == rank_generating_function(transpose(shape))(1)


def test_kerov_mean_zero():
    assert kerov_mean_zero_check((1,))
    assert kerov_mean_zero_check((3, 1))
    assert kerov_mean_zero_check((5, 3, 3, 1))
    for shape in all_partitions(9):
        assert kerov_mean_zero_check(shape)


def test_enumerate_ssyt_examples():
    assert len(enumerate_ssyt((2, 1), (2, 3), 3)) == 5
    assert len(enumerate_ssyt((2, 1), (2, 3), 4)) == 5
    assert enumerate_ssyt((2, 1), (2, 3), 2) == []


def test_count_ssyt_matches_enumeration_and_bruteforce():
    cases = [
        ((2, 1), (2, 3), [3, 4, 5]),
        ((2, 2), (3, 4), [4, 5, 6]),
        ((3, 1), (2, 4), [4, 5, 6]),
        ((1,), (5,), [1, 2, 3]),
        ((2, 2, 1), (2, 3, 4), [5, 6, 7]),
    ]
    for shape, flag, totals in cases:
        for total in totals:
            listed = enumerate_ssyt(shape, flag, total)
            raw = [t.rows for t in listed]
            assert sorted(raw) == bruteforce.set_valued_tableaux(shape, flag, total)
            assert count_ssyt(shape, flag, total) == len(listed)


def test_flag_shorter_than_rows_is_an_error():
    with pytest.raises(MalformedInputError):
        count_ssyt((2, 1), (2,), 3)
    with pytest.raises(MalformedInputError):
        enumerate_ssyt((2, 1), (2,), 3)
    # longer flags are truncated
    assert count_ssyt((2, 1), (2, 3, 9, 9), 3) == 5


def test_R_and_Rplus():
    assert R_and_Rplus((2, 1)) == (5, 5)
    assert R_and_Rplus((1,)) == (2, 1)
    r, rp = R_and_Rplus((4, 2))
    assert Fraction(rp, r) == Fraction(4, 3)


def test_tableau_formulas_match_poset_statistics():
    for shape in [(2, 1), (3, 1), (2, 2), (3, 1, 1), (4, 2), (3, 3)]:
        p = young_interval(shape)
        r, rp = R_and_Rplus(shape)
        assert p.n == r
        assert len(p.covers) == rp
        assert expectation_X(p) == Fraction(rp, r)
        n = sum(shape)
        assert expectation_Y(p) == Fraction(f_plus_one(shape), (n + 1) * hook_f(shape))
        assert stats(p).maximal_chain_count == hook_f(shape)


def test_rect_staircase_expectations_formula_level():
    for d in range(2, 5):
        for a in range(1, 4):
            for b in range(1, 4):
                lam = rect_staircase(d, a, b)
                want = Fraction((d - 1) * a * b, a + b)
                r, rp = R_and_Rplus(lam)
                assert Fraction(rp, r) == want
                assert Fraction(f_plus_one(lam), (sum(lam) + 1) * hook_f(lam)) == want


PAPER_UNCROWD_IN = [
    [1, 1, 2, 2, 4],
    [2, 3, (3, 4), 4],
    [4, 5, 5, 7],
    [5, 6, 6],
    [6],
]
PAPER_UNCROWD_OUT = (
    (1, 1, 2, 2, 4),
    (2, 3, 3, 4),
    (4, 4, 5, 7),
    (5, 5, 6),
    (6, 6),
)


def test_uncrowd_paper_fixture():
    t_plus, corner, i0 = uncrowd(svt(PAPER_UNCROWD_IN))
    assert t_plus == PAPER_UNCROWD_OUT
    assert corner == (5, 2)
    assert i0 == 2


def test_uncrowd_single_cell():
    t_plus, corner, i0 = uncrowd(svt([[(1, 2)]]))
    assert t_plus == ((1,), (2,))
    assert corner == (2, 1)
    assert i0 == 1


def test_crowd_paper_fixture():
    expected = {
        4: svt([[1, 1, 2, 2, 4], [2, 3, 3, 4], [4, 4, 5, 7], [5, (5, 6), 6], [6]]),
        3: svt([[1, 1, 2, 2, 4], [2, 3, 3, 4], [4, (4, 5), 5, 7], [5, 6, 6], [6]]),
        2: svt([[1, 1, 2, 2, 4], [2, 3, (3, 4), 4], [4, 5, 5, 7], [5, 6, 6], [6]]),
        1: svt([[1, 1, 2, (2, 3), 4], [2, 3, 4, 4], [4, 5, 5, 7], [5, 6, 6], [6]]),
    }
    for i0, want in expected.items():
        assert crowd(PAPER_UNCROWD_OUT, (5, 2), i0) == want


def test_crowd_errors():
    with pytest.raises(RangeError):
        crowd(PAPER_UNCROWD_OUT, (5, 2), 5)
    with pytest.raises(NotCornerError):
        crowd(PAPER_UNCROWD_OUT, (2, 4), 1)
    with pytest.raises(NotCornerError):
        crowd(PAPER_UNCROWD_OUT, (3, 2), 1)
    with pytest.raises(NotBarelySetValuedError):
        uncrowd(svt([[1, 2], [2]]))


def test_uncrowd_crowd_roundtrip():
    for shape in all_partitions(6):
        if not shape:
            continue
        for t in enumerate_standard_barely(shape):
            t_plus, corner, i0 = uncrowd(t)
            assert crowd(t_plus, corner, i0) == t


def test_crowd_uncrowd_roundtrip_flagged_domain():
    # every (tableau, corner, i0) triple arising from flagged enumerations
    for shape in [(2, 1), (2, 2), (3, 1)]:
        n = sum(shape)
        for t in enumerate_ssyt(shape, default_flag(shape), n + 1):
            t_plus, corner, i0 = uncrowd(t)
            assert crowd(t_plus, corner, i0) == t


def test_enumerate_standard_barely_21():
    listed = enumerate_standard_barely((2, 1))
    assert len(listed) == 8
    expected = {
        (((1, 2), (3,)), ((4,),)),
        (((1, 2), (4,)), ((3,),)),
        (((1,), (2, 3)), ((4,),)),
        (((1,), (4,)), ((2, 3),)),
        (((1,), (2, 4)), ((3,),)),
        (((1,), (3,)), ((2, 4),)),
        (((1,), (2,)), ((3, 4),)),
        (((1,), (3, 4)), ((2,),)),
    }
    assert {t.rows for t in listed} == expected
    assert [t.rows for t in listed] == sorted(expected)


def test_chain_bijection_standard():
    t = ((1, 3, 5), (2, 6), (4,))
    chain_ = standard_to_chain(t)
    assert chain_ == ((), (1,), (1, 1), (2, 1), (2, 1, 1), (3, 1, 1), (3, 2, 1))
    assert chain_to_standard(chain_) == t
    for shape in [(2, 2), (3, 1)]:
        for t in enumerate_standard_tableaux(shape):
            assert chain_to_standard(standard_to_chain(t)) == t


def test_chain_bijection_barely_fixture():
    t = svt([[1, (2, 5), 6], [3, 7], [4]])
    chain_, mu, nu = barely_to_triple(t)
    assert chain_ == ((), (1,), (2,), (2, 1), (2, 1, 1), (3, 1, 1), (3, 2, 1))
    assert mu == (2, 1, 1)
    assert nu == (1, 1, 1)
    assert triple_to_barely(chain_, mu, nu) == t


def test_chain_bijection_dual_fixture():
    t = svt([[1, (2, 5), 6], [3, 7], [4]])
    chain_, mu, nu = barely_to_dual_triple(t)
    assert chain_ == ((3, 2, 1), (3, 1, 1), (2, 1, 1), (1, 1, 1), (1, 1), (1,), ())
    assert mu == (1,)
    assert nu == (2,)
    assert dual_triple_to_barely(chain_, mu, nu) == t


def test_chain_bijections_full_domain():
    shape = (2, 2)
    barely = enumerate_standard_barely(shape)
    triples = set()
    dual_triples = set()
    for t in barely:
        trip = barely_to_triple(t)
        assert triple_to_barely(*trip) == t
        triples.add(trip)
        dtrip = barely_to_dual_triple(t)
        assert dual_triple_to_barely(*dtrip) == t
        dual_triples.add(dtrip)
    assert len(triples) == len(barely) == f_plus_one(shape)
    assert len(dual_triples) == len(barely)
    # cardinality reconciliation: triples = (chain, element, cover below it)
    p = young_interval(shape)
    up, down = __import__("cde.poset", fromlist=["_chain_counts"])._chain_counts(p)
    through = [up[x] * down[x] for x in range(p.n)]
    count = sum(through[x] * p.down_degree(x) for x in range(p.n))
    assert count == f_plus_one(shape)
    assert stats(p).maximal_chain_count == hook_f(shape)


def test_flagged_bijection_paper_fixture():
    t = ((1, 2, 2), (2, 3), (4,))
    assert flagged_to_partition(t) == (1, 1)
    assert partition_to_flagged((1, 1), (3, 2, 1)) == t
    with pytest.raises(MalformedInputError):
        flagged_to_partition(((3, 3), (3, 3)))


def test_flagged_bijection_full_domain():
    shape = (2, 2)
    elements = subpartitions(shape)
    tableaux = enumerate_ssyt(shape, default_flag(shape), sum(shape))
    images = {flagged_to_partition(t.rows) for t in tableaux}
    assert images == set(elements)
    for mu in elements:
        assert flagged_to_partition(partition_to_flagged(mu, shape)) == mu


def test_flagged_barely_bijection():
    t = svt([[1, 1, 2, 2], [2, (2, 3), 3], [4]])
    nu, mu = flagged_barely_to_cover(t)
    assert (nu, mu) == ((2, 1), (2, 2))
    assert cover_to_flagged_barely(nu, mu, (4, 3, 1)) == t
    # full domain on (2,2): barely flagged tableaux <-> covers of the interval
    shape = (2, 2)
    p = young_interval(shape)
    listed = enumerate_ssyt(shape, default_flag(shape), sum(shape) + 1)
    pairs = {flagged_barely_to_cover(t) for t in listed}
    assert len(pairs) == len(listed) == len(p.covers)
    for nu, mu in pairs:
        assert cover_to_flagged_barely(nu, mu, shape) in listed


def test_hook_content_count():
    assert hook_content_count((1,), 3) == 3
    assert hook_content_count((2, 1), 2) == len(bruteforce.column_strict_tableaux((2, 1), 2))
    for shape in [(2,), (2, 2), (3, 1)]:
        for t in range(1, 5):
            assert hook_content_count(shape, t) == len(bruteforce.column_strict_tableaux(shape, t))


def test_hook_content_rectangle_ratio():
    a, b, x = 2, 3, 4
    top = hook_content_count(((b,) * a) + (1,), x + a)
    bottom = hook_content_count((b,) * a, x + a)
    assert Fraction(top * a, bottom) == Fraction(x * b * a, a + b)
    assert Fraction(top, bottom) == Fraction(x * b, a + b)


def test_format_tableau():
    t = svt([[1, (2, 3)], [4]])
    assert format_tableau(t) == "{1}\t{2,3}\n{4}"


def test_svt_validation():
    with pytest.raises(MalformedInputError):
        svt([[2, 1]])
    with pytest.raises(MalformedInputError):
        svt([[1], [1]])
    with pytest.raises(MalformedInputError):
        svt([[(1, 1)]])
