import random

from hypothesis import given, settings
from hypothesis import strategies as st

from tw2cat.intlinalg import (Mat, cokernel_invariants, det, kernel_basis,
                              rank, smith_normal_form, solve)


def random_matrix(rng, max_side=12, max_entry=9):
    nr = rng.randint(0, max_side)
    nc = rng.randint(0, max_side)
    rows = [[rng.randint(-max_entry, max_entry) for _ in range(nc)]
            for _ in range(nr)]
    return Mat(nr, nc, rows)


def is_unimodular(m):
    return m.nr == m.nc and det(m) in (1, -1)


def check_snf_properties(m):
    s = smith_normal_form(m)
    assert s.s.nr == m.nr and s.s.nc == m.nc
    assert is_unimodular(s.u)
    assert is_unimodular(s.v)
    assert s.u.mul(m).mul(s.v).rows == s.s.rows
    diag = [s.s.rows[i][i] for i in range(min(m.nr, m.nc))]
    for i in range(m.nr):
        for j in range(m.nc):
            if i != j:
                assert s.s.rows[i][j] == 0
    for i in range(len(diag) - 1):
        if diag[i + 1] != 0:
            assert diag[i] != 0
            assert diag[i + 1] % diag[i] == 0
        assert diag[i] >= 0
    return diag


def test_snf_property_suite_500_random():
    rng = random.Random(20260814)
    for _ in range(500):
        check_snf_properties(random_matrix(rng))


def test_snf_known_forms():
    diag = check_snf_properties(Mat(2, 2, [[2, 0], [0, 3]]))
    assert diag == [1, 6]
    diag = check_snf_properties(Mat(2, 2, [[0, 0], [0, 0]]))
    assert diag == [0, 0]
    diag = check_snf_properties(Mat(2, 3, [[1, 2, 3], [4, 5, 6]]))
    assert diag == [1, 3]
    diag = check_snf_properties(Mat.eye(3))
    assert diag == [1, 1, 1]


@given(st.lists(st.lists(st.integers(-50, 50), min_size=1, max_size=6),
                min_size=1, max_size=6).filter(
                    lambda rows: len({len(r) for r in rows}) == 1))
@settings(max_examples=120, deadline=None)
def test_snf_properties_hypothesis(rows):
    check_snf_properties(Mat(len(rows), len(rows[0]), rows))


def test_rank_and_kernel():
    m = Mat(2, 3, [[1, 2, 3], [2, 4, 6]])
    assert rank(m) == 1
    k = kernel_basis(m)
    assert k.nc == 2
    for j in range(k.nc):
        col = [k.rows[i][j] for i in range(3)]
        assert all(sum(m.rows[r][i] * col[i] for i in range(3)) == 0
                   for r in range(2))


def test_kernel_of_injective_map_is_trivial():
    assert kernel_basis(Mat(2, 2, [[2, 0], [0, 5]])).nc == 0


def test_solve_finds_integer_solutions():
    m = Mat(2, 2, [[2, 1], [1, 1]])
    x = solve(m, Mat(2, 1, [[3], [2]]))
    assert x is not None
    assert m.mul(x).rows == [[3], [2]]
    assert solve(Mat(1, 1, [[2]]), Mat(1, 1, [[3]])) is None


def test_cokernel_invariants_examples():
    free, tors = cokernel_invariants(Mat(1, 1, [[4]]))
    assert (free, list(tors)) == (0, [4])
    free, tors = cokernel_invariants(Mat(2, 1, [[2], [0]]))
    assert free == 1 and list(tors) == [2]
    free, tors = cokernel_invariants(Mat.zeros(3, 0))
    assert free == 3 and not tors


@given(st.integers(1, 4), st.integers(1, 4))
@settings(max_examples=40, deadline=None)
def test_det_of_identity_blocks(nr, nc):
    m = Mat.eye(nr)
    assert det(m) == 1
