import random

from jumploci.intlinalg import (annihilator_rows, column_span_saturation,
                                hnf_columns, hnf_rows, kernel_columns,
                                mat_mul, rank_int, row_lattice_subset,
                                smith_normal_form, solve_integer)


def rand_matrix(rng, r, c, bound=6):
    return [[rng.randint(-bound, bound) for _ in range(c)] for _ in range(r)]


def test_smith_normal_form_randomized():
    rng = random.Random(11)
    for _ in range(200):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        a = rand_matrix(rng, r, c)
        u, d, v = smith_normal_form(a)
        assert mat_mul(mat_mul(u, a), v) == d
        diag = [d[i][i] for i in range(min(r, c))]
        for i in range(len(diag) - 1):
            if diag[i] == 0:
                assert diag[i + 1] == 0
            else:
                assert diag[i + 1] % diag[i] == 0
        for i in range(r):
            for j in range(c):
                if i != j:
                    assert d[i][j] == 0


def test_kernel_columns_annihilate():
    rng = random.Random(12)
    for _ in range(100):
        r, c = rng.randint(1, 4), rng.randint(1, 5)
        a = rand_matrix(rng, r, c, 4)
        ker = kernel_columns(a)
        k = len(ker[0]) if ker and ker[0] else 0
        assert k == c - rank_int(a)
        for t in range(k):
            col = [ker[i][t] for i in range(c)]
            assert all(sum(a[i][j] * col[j] for j in range(c)) == 0
                       for i in range(r))


def test_hnf_rows_is_span_invariant():
    rng = random.Random(13)
    for _ in range(100):
        r, c = rng.randint(1, 4), rng.randint(1, 4)
        a = rand_matrix(rng, r, c, 4)
        b = [list(row) for row in a]
        for _ in range(6):
            i, j = rng.randrange(r), rng.randrange(r)
            if i != j:
                q = rng.randint(-3, 3)
                for t in range(c):
                    b[i][t] += q * b[j][t]
        assert hnf_rows(a) == hnf_rows(b)


def test_saturation_idempotent_and_double_annihilator():
    rng = random.Random(14)
    for _ in range(60):
        n, k = rng.randint(1, 4), rng.randint(1, 3)
        b = rand_matrix(rng, n, k, 4)
        sat = column_span_saturation(b)
        assert column_span_saturation(sat) == sat
        # ann(ann(L)) = sat(L) as column spans.
        ann = annihilator_rows(b)
        back = kernel_columns(ann, ncols=n)
        assert hnf_columns(back) == sat


def test_saturation_examples():
    assert column_span_saturation([[2, 0], [0, 2]]) == [[1, 0], [0, 1]]
    assert column_span_saturation([[2], [4]]) == [[1], [2]]
    assert annihilator_rows([[1], [-2]]) == [[2, 1]]


def test_solve_integer():
    assert solve_integer([[2, 0], [0, 3]], [4, 9]) == [2, 3]
    assert solve_integer([[2]], [3]) is None
    sol = solve_integer([[1, 2], [2, 4]], [3, 6])
    assert sol is not None and sol[0] + 2 * sol[1] == 3


def test_row_lattice_subset():
    assert row_lattice_subset([[2, 0]], [[1, 0]])
    assert not row_lattice_subset([[1, 0]], [[2, 0]])
    assert row_lattice_subset([], [[1, 0]])
