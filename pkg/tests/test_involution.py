import pytest

from hockeystick.exact_core import Composition, composition_universe
from hockeystick.involution import (PARTNER, Case, LabeledLatticeSequence, audit, classify,
                                    enumerate_universe, fixed_point_census, fixed_points,
                                    shape_count, tau, universe_size, weight)
from hockeystick.lattice import LatticeSequence
from hockeystick.tableau import LabeledTableau

from oracles import choose, lhs_sum

S = LatticeSequence


def element(rows, entries, k=2, n=0, r=1):
    return LabeledLatticeSequence(LabeledTableau.from_rows(rows, r), S(entries), k, n, r)


CASE1_X = element([], (0, 0, 0, 1, 2))
CASE3_X = element([[0]], (0, 0, 0, 0, 0, 0))
FIXED_X = element([], (0, 0, 0, 0, 2))


def test_type_invariants():
    with pytest.raises(ValueError):
        element([], (0, 0, 0, 2))  # width 2, expected 3
    with pytest.raises(ValueError):
        element([], (0, 0, 0, 1, 1))  # height 1, expected 2
    with pytest.raises(ValueError):
        LabeledLatticeSequence(LabeledTableau.from_rows([[0]], 2), S((0,) * 6), 2, 0, 1)
    with pytest.raises(ValueError):
        # shape (3) is not in C(2, 1)
        element([[0, 1]], (0,) * 6, r=2)


def test_universe_examples():
    X = enumerate_universe(2, 0, 1)
    assert len(X) == 11
    assert sum(1 for x in X if x.tableau.is_empty()) == 10
    assert sum(1 for x in X if x.tableau.shape == Composition((2,))) == 1
    assert len(enumerate_universe(0, 0, 0)) == 1
    assert shape_count(Composition((2,)), 2, 0, 1) == 1


def test_universe_per_shape_counts():
    for k in range(5):
        for n in range(3):
            for r in range(4):
                X = enumerate_universe(k, n, r)
                assert len(X) == len(set(X)) == universe_size(k, n, r)
                for alpha in composition_universe(k, r):
                    got = sum(1 for x in X if x.tableau.shape == alpha)
                    assert got == shape_count(alpha, k, n, r)


@pytest.mark.parametrize("rows,expected", [([], 1), ([[0]], -1), ([[0], [0]], 1)])
def test_weight(rows, expected):
    lam = LabeledTableau.from_rows(rows, 1)
    assert weight(LabeledLatticeSequence(lam, S((0,) * (6 + len(rows)) + (4 - 2 * len(rows),)),
                                         4, 0, 1)) == expected


def test_classify_examples():
    c = classify(CASE1_X)
    assert (c.case_id, c.eta, c.omega, c.gamma, c.mu, c.nu) == (Case.CASE1, 3, 1, 2, 0, None)
    c = classify(FIXED_X)
    assert c.case_id is Case.FIXED and c.mu == 3
    c = classify(CASE3_X)
    assert (c.case_id, c.nu, c.gamma) == (Case.CASE3, 2, -1)


def test_tau_examples():
    assert tau(CASE1_X) == CASE3_X
    assert tau(CASE3_X) == CASE1_X
    assert tau(FIXED_X) is FIXED_X


def test_tau_case4_case5_pair():
    # shape (3) with labels [0,1], r=2, k=3, n=0: eta=7, width 8, height 0
    x = element([[0, 1]], (0,) * 10, k=3, n=0, r=2)
    ctx = classify(x)
    assert ctx.case_id is Case.CASE4
    y = tau(x)
    assert classify(y).case_id is Case.CASE5
    assert y.tableau.rows == ((1,),)
    assert tau(y) == x


def test_r_zero_everything_fixed():
    for k in range(4):
        for n in range(3):
            X = enumerate_universe(k, n, 0)
            assert all(tau(x) is x for x in X)
            assert len(fixed_points(k, n, 0)) == len(X)


def test_fixed_points_examples():
    assert fixed_point_census(2, 0, 1) == {2: 1, 1: 2, 0: 6}
    assert len(fixed_points(2, 0, 1)) == 9
    for n in range(3):
        for r in range(3):
            assert len(fixed_points(0, n, r)) == 1


@pytest.mark.parametrize("k,n,r", [(k, n, r) for k in range(5) for n in range(3) for r in range(4)])
def test_involution_properties(k, n, r):
    for x in enumerate_universe(k, n, r):
        ctx = classify(x)
        y = tau(x)
        assert tau(y) == x
        assert y.params == x.params
        if y == x:
            assert ctx.case_id is Case.FIXED
            assert weight(x) == 1 and x.tableau.is_empty()
        else:
            assert weight(y) == -weight(x)
            assert classify(y).case_id is PARTNER[ctx.case_id]
        if ctx.nu is not None:
            assert ctx.nu >= 0


@pytest.mark.parametrize("k,n,r", [(3, 1, 2), (4, 2, 3), (5, 0, 3)])
def test_audit_weight_sum(k, n, r):
    res = audit(k, n, r)
    assert res.ok
    assert res.weight_sum == lhs_sum(k, n, r)
    assert res.fixed == lhs_sum(k, n, r)
    census = fixed_point_census(k, n, r)
    assert census == {k - i: choose((r + 1) * i + n, i) for i in range(k + 1)}


def test_audit_records_point_to_mates():
    res = audit(3, 0, 2, keep_records=True)
    X = enumerate_universe(3, 0, 2)
    for rec in res.records:
        assert tau(X[rec.index]) == X[rec.mate_index]
        assert res.records[rec.mate_index].mate_index == rec.index


def test_json_roundtrip():
    data = CASE3_X.to_json()
    assert data == {"tableau": {"shape": [2], "rows": [[0]], "bound": 1},
                    "sequence": {"entries": [0, 0, 0, 0, 0, 0]},
                    "params": {"k": 2, "n": 0, "r": 1}}
    assert LabeledLatticeSequence.from_json(data) == CASE3_X
