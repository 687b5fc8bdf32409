from fractions import Fraction

import pytest

import cde.poset as poset
from cde.errors import (
    CapacityError,
    CycleError,
    EmptyPosetError,
    MalformedInputError,
    NotCoverError,
    NotReducedError,
    SizeError,
)
from cde.poset import (
    FinitePoset,
    antichain,
    boolean,
    canonical_key,
    chain,
    disjoint_union,
    dual,
    dump_poset,
    expectation_under_multichain,
    expectation_X,
    expectation_Xm,
    expectation_Y,
    forest_merge_ratio,
    is_CDE,
    is_forest,
    is_isomorphic,
    is_mCDE_upto,
    linear_extension_count,
    load_poset,
    multichain_counts,
    order_ideal_lattice,
    order_ideals,
    ordinal_sum,
    pabcd,
    product,
    quotient_cover,
    self_dual_regular_check,
    stats,
    tamari,
    toggle_symmetry_check,
    validate,
)

from bruteforce import linear_extensions, multichains_through


def M3():
    """Five-element modular non-distributive lattice."""
    return FinitePoset(5, frozenset({(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)}))


def up_closure(p):
    """Independent reflexive up-set computation for the brute-force oracle."""
    ups = {x: {x} for x in range(p.n)}
    changed = True
    while changed:
        changed = False
        for a, b in p.covers:
            new = ups[b] - ups[a]
            if new:
                ups[a] |= new
                changed = True
    return ups


def test_validate_examples():
    validate(chain(3))
    with pytest.raises(CycleError):
        validate(FinitePoset(2, frozenset({(0, 1), (1, 0)})))
    with pytest.raises(NotReducedError) as err:
        validate(FinitePoset(3, frozenset({(0, 1), (1, 2), (0, 2)})))
    assert err.value.cover == (0, 2)


def test_validate_range():
    with pytest.raises(MalformedInputError):
        validate(FinitePoset(2, frozenset({(0, 5)})))


def test_expectation_X_chain():
    for n in range(1, 7):
        assert expectation_X(chain(n)) == Fraction(n - 1, n)
    with pytest.raises(EmptyPosetError):
        expectation_X(FinitePoset(0, frozenset()))


def test_M3_values():
    p = M3()
    assert expectation_X(p) == Fraction(6, 5)
    assert expectation_Y(p) == Fraction(4, 3)
    assert not is_CDE(p)


def test_expectation_Y_small():
    # single chain: every element lies on the one maximal chain
    assert expectation_Y(chain(4)) == Fraction(3, 4)
    assert expectation_Y(antichain(3)) == 0


def test_multichain_counts_against_bruteforce():
    fixtures = [M3(), pabcd(1, 1, 2, 1), boolean(2), chain(3), antichain(3),
                disjoint_union(chain(3), antichain(2))]
    for p in fixtures:
        ups = up_closure(p)
        for m in range(1, 5):
            assert multichain_counts(p, m) == multichains_through(ups, p.n, m)


def test_expectation_Xm_m1_is_X():
    for p in [M3(), boolean(3), tamari(5), pabcd(2, 1, 3, 2)]:
        assert expectation_Xm(p, 1) == expectation_X(p)


def test_boolean2_all_m():
    p = boolean(2)
    for m in range(1, 6):
        assert expectation_Xm(p, m) == 1


def test_chain_product_corollary():
    # products of chains have expectation sum (a_k - 1)/a_k for all m
    p = product(chain(3), product(chain(2), chain(4)))
    expected = Fraction(2, 3) + Fraction(1, 2) + Fraction(3, 4)
    assert expectation_X(p) == expected
    assert expectation_Y(p) == expected
    for m in range(1, 5):
        assert expectation_Xm(p, m) == expected


def test_pabcd_CDE_and_mCDE():
    p = pabcd(2, 1, 3, 2)
    assert expectation_X(p) == 1
    assert expectation_Y(p) == 1
    assert is_CDE(p)
    assert is_mCDE_upto(p, 5)
    q = pabcd(2, 2, 3, 1)
    st = stats(q)
    assert st.EX == 1 and st.EY == 1


def test_ordinal_sum_negative_example():
    p = ordinal_sum(antichain(1), antichain(2))
    assert expectation_X(p) == Fraction(2, 3)
    assert expectation_Y(p) == Fraction(1, 2)
    assert not is_CDE(p)


def test_builders_size_errors():
    for bad in (0, -1):
        with pytest.raises(SizeError):
            chain(bad)
        with pytest.raises(SizeError):
            antichain(bad)
    with pytest.raises(SizeError):
        tamari(2)
    with pytest.raises(SizeError):
        pabcd(1, 0, 1, 1)


def test_capacity_error(monkeypatch):
    monkeypatch.setattr(poset, "CAPACITY_OVERRIDE", 10)
    with pytest.raises(CapacityError):
        tamari(8)
    with pytest.raises(CapacityError):
        boolean(5)


def test_capacity_env(monkeypatch):
    monkeypatch.setenv("CDE_CAPACITY", "12")
    assert poset.capacity() == 12


def test_product_boolean_iso():
    p = product(chain(2), chain(2))
    assert expectation_X(p) == 1
    assert is_isomorphic(p, boolean(2))
    assert not is_isomorphic(chain(3), antichain(3))


def test_tamari5():
    t = tamari(5)
    assert t.n == 5
    assert expectation_X(t) == 1
    assert expectation_Y(t) == 1
    st = stats(t)
    assert st.maximal_chain_count == 2
    # pentagon poset: same shape as pabcd(1,1,2,1)
    assert is_isomorphic(t, pabcd(1, 1, 2, 1))


def test_tamari_catalan_sizes():
    assert tamari(4).n == 2
    assert tamari(6).n == 14
    assert tamari(7).n == 42


def test_tamari_expectations():
    for n in (4, 5, 6, 7):
        t = tamari(n)
        assert expectation_X(t) == Fraction(n - 3, 2)
        assert expectation_Y(t) == Fraction(n - 3, 2)
        assert expectation_Xm(t, 3) == Fraction(n - 3, 2)


def test_order_ideal_lattice_of_grid():
    from cde.tableaux import young_interval

    grid = product(chain(2), chain(3))
    J = order_ideal_lattice(grid)
    assert J.n == 10  # subdiagrams of the 2x3 rectangle
    assert stats(J).rank == 6
    assert is_isomorphic(J, young_interval((3, 3)))


def test_order_ideals_of_antichain():
    assert len(order_ideals(antichain(3))) == 8


def test_toggle_symmetry():
    assert toggle_symmetry_check(chain(2), 3)
    assert toggle_symmetry_check(antichain(3), 2)
    assert toggle_symmetry_check(product(chain(2), chain(2)), 4)
    v = FinitePoset(3, frozenset({(0, 1), (0, 2)}))
    assert toggle_symmetry_check(v, 2)


def test_self_dual_regular():
    assert self_dual_regular_check(tamari(6)) == Fraction(3, 2)
    assert self_dual_regular_check(tamari(5)) == 1
    assert self_dual_regular_check(boolean(3)) == Fraction(3, 2)
    assert self_dual_regular_check(ordinal_sum(antichain(1), antichain(2))) is None
    assert self_dual_regular_check(chain(4)) is None


def test_linear_extension_count():
    assert linear_extension_count(antichain(3)) == 6
    assert linear_extension_count(chain(5)) == 1
    lam = FinitePoset(3, frozenset({(0, 2), (1, 2)}))
    assert is_forest(lam)
    assert linear_extension_count(lam) == 2
    # non-forest: M3 via ideal DP vs brute force
    assert linear_extension_count(M3()) == linear_extensions(M3().covers, 5)


def test_forest_formula_vs_bruteforce():
    # assorted forests on <= 8 elements described by parent maps
    parent_maps = [
        [None, 0, 0, 1],
        [None, None, 0, 1, 1, 2],
        [None, 0, 1, 1, None, 4, 4, 5],
        [None] * 5,
        [None, 0, 1, 2, 3, None, 5],
    ]
    for parents in parent_maps:
        n = len(parents)
        covers = {(i, p) for i, p in enumerate(parents) if p is not None}
        f = FinitePoset(n, frozenset(covers))
        assert is_forest(f)
        assert linear_extension_count(f) == linear_extensions(covers, n)


def test_forest_merge_ratio():
    f = FinitePoset(6, frozenset({(0, 1), (1, 2), (3, 2), (4, 5)}))
    assert is_forest(f)
    for (i, j) in f.covers:
        got = forest_merge_ratio(f, i, j)
        want = Fraction(
            linear_extension_count(quotient_cover(f, i, j)),
            linear_extension_count(f),
        )
        assert got == want
    with pytest.raises(NotCoverError):
        forest_merge_ratio(f, 0, 2)


def test_quotient_cover():
    c = quotient_cover(chain(3), 1, 2)
    assert is_isomorphic(c, chain(2))
    v = FinitePoset(3, frozenset({(0, 1), (0, 2)}))
    q = quotient_cover(v, 0, 1)
    assert is_isomorphic(q, chain(2))
    with pytest.raises(NotCoverError):
        quotient_cover(chain(3), 0, 2)


def test_stats_boolean3():
    st = stats(boolean(3))
    assert st.EX == Fraction(3, 2)
    assert st.EY == Fraction(3, 2)
    assert st.rank == 3
    assert st.edge_count == 12
    assert st.is_CDE


def test_stats_rank_absent_when_ungraded():
    st = stats(pabcd(1, 1, 2, 1))
    assert st.rank is None


def test_EX_dual_symmetry():
    for p in [M3(), tamari(6), pabcd(2, 1, 3, 2), boolean(3),
              ordinal_sum(chain(2), antichain(2))]:
        assert expectation_X(p) == expectation_X(dual(p))


def test_EY_not_dual_invariant_in_general():
    # 6-element fixture whose dual breaks the chain-weighted expectation
    p = FinitePoset(6, frozenset({(0, 1), (0, 2), (1, 3), (2, 4), (4, 5)}))
    assert expectation_Y(p) != expectation_Y(dual(p))


def test_product_additivity():
    pairs = [
        (boolean(2), chain(3)),
        (chain(2), chain(4)),
        (boolean(2), boolean(2)),
    ]
    for p, q in pairs:
        pq = product(p, q)
        assert expectation_X(pq) == expectation_X(p) + expectation_X(q)
        assert expectation_Y(pq) == expectation_Y(p) + expectation_Y(q)


def test_multichain_polynomiality_in_m():
    # In a graded poset of rank r the multichain count through x is a degree-r
    # polynomial in m whose r-th finite difference is the number of maximal
    # chains through x.
    for p in [boolean(3), product(chain(2), chain(3))]:
        r = stats(p).rank
        table = [multichain_counts(p, m) for m in range(1, r + 3)]
        up, down = poset._chain_counts(p)
        through = [up[x] * down[x] for x in range(p.n)]
        for x in range(p.n):
            seq = [row[x] for row in table]
            for _ in range(r):
                seq = [b - a for a, b in zip(seq, seq[1:])]
            assert seq[0] == through[x]
            assert seq[1] - seq[0] == 0


def test_expectation_under_multichain_custom_values():
    p = chain(3)
    vals = [Fraction(5), Fraction(1), Fraction(2)]
    # chain: multichain distribution is uniform
    for m in range(1, 4):
        assert expectation_under_multichain(p, m, vals) == Fraction(8, 3)


def test_file_roundtrip(tmp_path):
    p = pabcd(1, 2, 2, 1)
    text = dump_poset(p)
    q = load_poset(text)
    assert q.n == p.n and q.covers == p.covers and q.labels == p.labels
    with pytest.raises(MalformedInputError):
        load_poset("cover 0 1\n")
    with pytest.raises(MalformedInputError):
        load_poset("n 2\nfoo 0 1\n")
    with pytest.raises(CycleError):
        load_poset("n 2\ncover 0 1\ncover 1 0\n")


def test_canonical_key_small():
    assert canonical_key(product(chain(2), chain(2))) == canonical_key(boolean(2))
    assert canonical_key(chain(3)) != canonical_key(antichain(3))
