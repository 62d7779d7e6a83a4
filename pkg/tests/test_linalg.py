from fractions import Fraction

from hypothesis import given, strategies as st

from antibracket.linalg import RowSpace, nullspace, rank

entries = st.integers(-3, 3)
rows_st = st.lists(st.dictionaries(st.integers(0, 5), entries.filter(bool), max_size=4), max_size=7)


def dense_rank(rows, ncols):
    m = [[Fraction(r.get(c, 0)) for c in range(ncols)] for r in rows]
    rk, col = 0, 0
    while rk < len(m) and col < ncols:
        piv = next((i for i in range(rk, len(m)) if m[i][col]), None)
        if piv is None:
            col += 1
            continue
        m[rk], m[piv] = m[piv], m[rk]
        for i in range(len(m)):
            if i != rk and m[i][col]:
                f = m[i][col] / m[rk][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rk])]
        rk += 1
        col += 1
    return rk


@given(rows_st)
def test_rank_matches_dense_elimination(rows):
    assert rank(rows) == dense_rank(rows, 6)


@given(rows_st)
def test_nullspace_is_a_kernel_basis(rows):
    basis = nullspace(rows, 6)
    assert len(basis) == 6 - dense_rank(rows, 6)
    for v in basis:
        for r in rows:
            assert sum(c * v.get(k, 0) for k, c in r.items()) == 0
    assert rank(basis) == len(basis)


@given(rows_st, st.dictionaries(st.integers(0, 5), entries.filter(bool), max_size=4))
def test_contains_agrees_with_rank(rows, row):
    space = RowSpace(rows)
    assert space.contains(row) == (rank(rows + [row]) == rank(rows))


@given(rows_st)
def test_reduce_leaves_nothing_for_members(rows):
    space = RowSpace(rows)
    for r in rows:
        assert space.reduce(r) == {}


def test_arbitrary_column_keys():
    space = RowSpace()
    assert space.add({("a", 1): 1, "b": 2})
    assert not space.add({("a", 1): 2, "b": 4})
    assert space.contains({("a", 1): -1, "b": -2})
    assert not space.contains({"c": 1})
    assert space.contains({})
    copy = space.copy()
    copy.add({"c": 1})
    assert copy.rank == 2 and space.rank == 1
