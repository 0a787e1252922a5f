import pytest
from hypothesis import given, strategies as st

from hockeystick.exact_core import Composition, composition_universe
from hockeystick.tableau import (LabeledTableau, count_tableaux, enumerate_tableaux, first_label,
                                 oplus, plus, shrink)

from oracles import all_row_labelings


@pytest.fixture
def example_tableau():
    return LabeledTableau.from_rows([[0, 2, 3], [0, 1, 2, 3], [1, 3]], bound=4)


def test_example_tableau(example_tableau):
    assert example_tableau.shape == Composition((4, 5, 3))
    assert example_tableau.sign() == -1
    assert first_label(example_tableau) == 0


def test_invariants_rejected():
    with pytest.raises(ValueError):
        LabeledTableau(Composition((3,)), ((1, 1),), 4)
    with pytest.raises(ValueError):
        LabeledTableau(Composition((2,)), ((4,),), 4)
    with pytest.raises(ValueError):
        LabeledTableau(Composition((3,)), ((1,),), 4)
    with pytest.raises(ValueError):
        LabeledTableau(Composition((2, 2)), ((1,),), 4)


def test_oplus(example_tableau):
    got = oplus(example_tableau, 1)
    assert got.rows == ((1,), (0, 2, 3), (0, 1, 2, 3), (1, 3))
    assert got.shape == Composition((2, 4, 5, 3))
    assert first_label(got) == 1


def test_plus(example_tableau):
    got = plus(example_tableau, 1)
    assert got.rows == ((0, 1, 2, 3), (0, 1, 2, 3), (1, 3))
    assert got.shape == Composition((5, 5, 3))


def test_shrink(example_tableau):
    got = shrink(example_tableau)
    assert got.rows == ((2, 3), (0, 1, 2, 3), (1, 3))
    assert got.shape == Composition((3, 5, 3))
    assert first_label(LabeledTableau.from_rows([[2, 3]], 4)) == 2


def test_shrink_drops_short_row():
    lam = LabeledTableau.from_rows([[1], [0, 2]], 3)
    assert shrink(lam).rows == ((0, 2),)


def test_edit_errors(example_tableau):
    with pytest.raises(ValueError):
        plus(example_tableau, 2)
    with pytest.raises(ValueError):
        plus(example_tableau, 4)
    with pytest.raises(ValueError):
        oplus(example_tableau, -1)
    with pytest.raises(ValueError):
        shrink(LabeledTableau.empty(3))
    with pytest.raises(ValueError):
        first_label(LabeledTableau.empty(3))


def test_enumerate_small():
    assert enumerate_tableaux(Composition(()), 3) == [LabeledTableau.empty(3)]
    assert [t.rows for t in enumerate_tableaux(Composition((2,)), 1)] == [((0,),)]
    assert len(enumerate_tableaux(Composition((4, 5, 3)), 4)) == 24


def test_enumerate_rejects_oversized_part():
    with pytest.raises(ValueError):
        enumerate_tableaux(Composition((3,)), 1)


def test_enumeration_order():
    got = [t.rows for t in enumerate_tableaux(Composition((2, 2)), 2)]
    assert got == [((0,), (0,)), ((0,), (1,)), ((1,), (0,)), ((1,), (1,))]


@pytest.mark.parametrize("parts,r,expected", [((4, 5, 3), 4, 24), ((), 0, 1), ((2, 2), 1, 1)])
def test_count_examples(parts, r, expected):
    assert count_tableaux(Composition(parts), r) == expected


def test_count_matches_enumeration_and_brute_force():
    for r in range(5):
        for alpha in composition_universe(6, r):
            tabs = enumerate_tableaux(alpha, r)
            assert len(tabs) == count_tableaux(alpha, r)
            assert [t.rows for t in tabs] == all_row_labelings(alpha.parts, r)


@st.composite
def tableau_and_label(draw):
    r = draw(st.integers(1, 5))
    nrows = draw(st.integers(1, 3))
    rows = []
    for _ in range(nrows):
        size = draw(st.integers(1, r))
        rows.append(sorted(draw(st.sets(st.integers(0, r - 1), min_size=size, max_size=size))))
    a = draw(st.integers(0, r - 1))
    return LabeledTableau.from_rows(rows, r), a


@given(tableau_and_label())
def test_edits_invert_and_flip_sign(pair):
    lam, a = pair
    assert shrink(oplus(lam, a)) == lam
    assert oplus(lam, a).sign() == -lam.sign()
    if a < first_label(lam):
        grown = plus(lam, a)
        assert shrink(grown) == lam
        assert grown.sign() == -lam.sign()
    assert shrink(lam).sign() == -lam.sign()


def test_json_roundtrip(example_tableau):
    data = example_tableau.to_json()
    assert data == {"shape": [4, 5, 3], "rows": [[0, 2, 3], [0, 1, 2, 3], [1, 3]], "bound": 4}
    assert LabeledTableau.from_json(data) == example_tableau
