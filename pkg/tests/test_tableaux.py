import pytest

from helpers import act, all_skew_shapes, brute_partitions, compositions, lex_geq_composition
from wcell import tableaux as tb
from wcell.permutations import bruhat_leq, identity


# ---------------------------------------------------------------------------
# partitions


def test_partitions_of_base_cases():
    assert tb.partitions_of(0) == [()]
    assert tb.partitions_of(1) == [(1,)]
    assert len(tb.partitions_of(4)) == 5


def test_partitions_of_matches_brute_force_in_decreasing_lex():
    for n in range(0, 9):
        assert tb.partitions_of(n) == brute_partitions(n)


def test_conjugate():
    assert tb.conjugate((3, 1)) == (2, 1, 1)
    assert tb.conjugate(()) == ()
    lam = (5, 5, 3, 3)
    assert tb.conjugate(tb.conjugate(lam)) == lam


def test_dominance_examples():
    assert tb.dominance_leq((2,), (1, 1))
    assert not tb.dominance_leq((1, 1), (2,))
    assert tb.dominance_leq((3, 1), (3, 1))
    with pytest.raises(ValueError):
        tb.dominance_leq((2,), (3,))


def test_dominance_refined_by_lex_on_compositions():
    for n in range(1, 8):
        comps = list(compositions(n, n))
        for lam in comps:
            for mu in comps:
                if tb.dominance_leq(mu, lam):
                    assert lex_geq_composition(lam, mu), (lam, mu)


# ---------------------------------------------------------------------------
# enumeration


def test_enumerate_std_counts():
    assert len(tb.enumerate_std((2, 1))) == 2
    for n in (1, 3, 5):
        assert len(tb.enumerate_std((n,))) == 1  # single column is forced
    for n in range(1, 8):
        for lam in tb.partitions_of(n):
            assert len(tb.enumerate_std(lam)) == tb.hook_count(lam)


def test_enumerate_std_orders_lexicographically_with_min_first():
    for lam in tb.partitions_of(6):
        tabs = tb.enumerate_std(lam)
        assert tabs[0] == tb.tau_min(lam)
        for a, b in zip(tabs, tabs[1:]):
            assert tb.lex_compare(a, b) == -1


def test_enumerate_std_skew():
    shape = tb.SkewShape((2, 1), (1,))
    tabs = tb.enumerate_std(shape)
    assert len(tabs) == 2
    shape2 = tb.SkewShape((2, 2, 1), (1, 1))
    for t in tb.enumerate_std(shape2, offset=3):
        assert list(t.entries()) == [4, 5, 6]


# ---------------------------------------------------------------------------
# descents


def test_descents_of_minimal_tableau():
    t = tb.tau_min((3, 2))
    data = tb.descent_data(t)
    assert data.d == {1, 2, 4}
    assert data.sd == frozenset()


def test_descents_single_column_and_single_row():
    n = 5
    col = tb.tau_min((n,))
    data = tb.descent_data(col)
    assert data.d == data.wd == frozenset(range(1, n))
    row = tb.tau_min((1,) * n)
    assert tb.descents(row) == frozenset()


def test_minimal_iff_no_strong_descents():
    for lam in tb.partitions_of(5):
        for t in tb.enumerate_std(lam):
            assert (t == tb.tau_min(lam)) == (not tb.descent_data(t).sd)


def test_descent_sets_partition_the_index_range():
    for lam in tb.partitions_of(6):
        tmin = tb.tau_min(lam)
        for t in tb.enumerate_std(lam):
            data = tb.descent_data(t)
            blocks = [data.sa, data.sd, data.wa, data.wd]
            assert frozenset().union(*blocks) == frozenset(range(1, 6))
            assert sum(len(b) for b in blocks) == 5
        # D(tau_lam) consists of the indices inside columns
        expected = set()
        pos = 0
        for h in lam:
            expected |= set(range(pos + 1, pos + h))
            pos += h
        assert tb.descents(tmin) == expected == tb.descent_data(tmin).wd


# ---------------------------------------------------------------------------
# restriction


def test_restrict_leq_examples():
    t = tb.tau_min((3, 2))
    assert tb.restrict_leq(t, 3) == tb.tau_min((3,))
    assert tb.restrict_leq(t, 0).size == 0
    assert tb.restrict_leq(t, 5) == t


def test_restrict_gt_examples():
    t = tb.tau_min((2, 1))
    assert tb.restrict_gt(t, 0) == t
    sk = tb.restrict_gt(t, 1)
    assert sk.shape.inner == (1,)
    assert sk.box_of(2) == (2, 1) and sk.box_of(3) == (1, 2)


def test_restriction_complementarity():
    for lam in tb.partitions_of(5):
        for t in tb.enumerate_std(lam):
            for m in range(0, 6):
                low = tb.restrict_leq(t, m)
                high = tb.restrict_gt(t, m)
                assert set(low.boxes) | set(high.boxes) == set(t.boxes)
                assert set(low.boxes).isdisjoint(high.boxes)
                assert high.shape.inner == low.shape.outer


def test_restrict_leq_always_standard():
    for lam in tb.partitions_of(6):
        for t in tb.enumerate_std(lam):
            for m in range(0, 7):
                r = tb.restrict_leq(t, m)
                tb.StandardTableau(r.shape, r.boxes, r.offset)  # revalidates


# ---------------------------------------------------------------------------
# words and perms


def test_word_of_minimal_tableau():
    assert tb.word(tb.tau_min((2, 1))).images == (2, 1, 3)


def test_perm_of_minimal_tableau_is_identity():
    for n in range(1, 6):
        for lam in tb.partitions_of(n):
            assert tb.perm(tb.tau_min(lam)) == identity(n)


def test_perm_acts_on_minimal_tableau():
    for lam in [(2, 2), (3, 1), (2, 1, 1)]:
        tmin = tb.tau_min(lam)
        for t in tb.enumerate_std(lam):
            assert act(tb.perm(t), tmin) == t


# ---------------------------------------------------------------------------
# orders on tableaux


def test_extended_dominance_chain_n2():
    col, row = tb.tau_min((2,)), tb.tau_min((1, 1))
    assert tb.extended_dominance_leq(col, row)
    assert not tb.extended_dominance_leq(row, col)


def test_extended_dominance_chain_n3():
    chain = [
        tb.from_text("1/2/3"),
        tb.from_text("1 3/2"),
        tb.from_text("1 2/3"),
        tb.from_text("1 2 3"),
    ]
    for a in range(4):
        for b in range(4):
            assert tb.extended_dominance_leq(chain[a], chain[b]) == (a <= b)


def test_same_shape_dominance_is_bruhat_order():
    for n in range(1, 7):
        for lam in tb.partitions_of(n):
            tabs = tb.enumerate_std(lam)
            perms = [tb.perm(t) for t in tabs]
            for a, u in enumerate(tabs):
                for b, t in enumerate(tabs):
                    assert tb.tableau_dominance_leq(u, t) == bruhat_leq(
                        perms[a], perms[b]
                    ), (lam, u, t)


def test_lex_is_total_and_refines_dominance():
    for n in range(1, 7):
        for lam in tb.partitions_of(n):
            tabs = tb.enumerate_std(lam)
            for u in tabs:
                for t in tabs:
                    cmp = tb.lex_compare(u, t)
                    assert cmp == -tb.lex_compare(t, u)
                    assert (cmp == 0) == (u == t)
                    if tb.tableau_dominance_leq(u, t) and u != t:
                        assert cmp == -1


def test_tau_min_is_lex_minimal():
    for lam in tb.partitions_of(6):
        tabs = tb.enumerate_std(lam)
        tmin = tb.tau_min(lam)
        assert all(t == tmin or tb.lex_compare(tmin, t) == -1 for t in tabs)


def test_dominance_errors():
    with pytest.raises(ValueError):
        tb.extended_dominance_leq(tb.tau_min((2,)), tb.tau_min((3,)))
    with pytest.raises(ValueError):
        tb.tableau_dominance_leq(tb.tau_min((2,)), tb.tau_min((1, 1)))


# ---------------------------------------------------------------------------
# critical tableaux


def _critical_candidates(shape):
    try:
        return tb.m_critical_tableau(shape, 1)
    except ValueError:
        return None


def test_constructed_critical_tableau_is_critical():
    count = 0
    for shape in all_skew_shapes(6):
        if shape.size < 2:
            continue
        t = _critical_candidates(shape)
        if t is not None:
            assert tb.is_m_critical(t, 1)
            count += 1
    assert count > 10


def test_column_violation_is_not_critical():
    shape = tb.SkewShape((2, 2))
    for t in tb.enumerate_std(shape, offset=0):
        shifted = tb.StandardTableau(shape, t.boxes, 0)
        if shifted.col_of(2) != shifted.col_of(1) + 1:
            assert not tb.is_m_critical(shifted, 1)


def test_critical_remark_characterisation():
    # For a normal tableau t with col(m+1) = col(m) + 1, the tail from m is
    # m-critical iff (col(m) = col(m+2) or m+1 is not a strong descent) and
    # every later descent is weak.
    for n in range(2, 7):
        for lam in tb.partitions_of(n):
            for t in tb.enumerate_std(lam):
                for m in range(1, n):
                    if t.col_of(m + 1) != t.col_of(m) + 1:
                        continue
                    tail = tb.restrict_gt(t, m - 1)
                    data = tb.descent_data(t)
                    cond1 = (m + 2 <= n and t.col_of(m) == t.col_of(m + 2)) or (
                        m + 1 not in data.sd
                    )
                    cond2 = all(j in data.wd for j in data.d if j > m + 1)
                    assert tb.is_m_critical(tail, m) == (cond1 and cond2), (t, m)


# ---------------------------------------------------------------------------
# text round-trip


def test_text_roundtrip():
    for lam in tb.partitions_of(5):
        for t in tb.enumerate_std(lam):
            assert tb.from_text(t.text()) == t


def test_from_rows_rejects_bad_input():
    with pytest.raises(ValueError):
        tb.from_rows([[1], [2, 3]])
    with pytest.raises(ValueError):
        tb.from_rows([[1, 5], [2]])
    with pytest.raises(ValueError):
        tb.from_rows([[2, 1], [3]])


def test_immutability():
    t = tb.tau_min((2, 1))
    with pytest.raises(AttributeError):
        t.offset = 3
