import random

from qe6.qcoeff import LaurentPoly, ONE, ZERO, Q, QINV, QHAT, qpow, RatFunc
from qe6.linalg import (SparseMat, Echelon, EchelonMod, span_rank, spans_equal,
                        rank_mod, bareiss_rank, ratfunc_inverse, row_normalize)


def test_sparse_mat_ops():
    a = SparseMat(2, 2, {(0, 0): Q, (0, 1): ONE})
    b = SparseMat(2, 2, {(0, 0): QINV, (1, 0): ONE})
    prod = a.mul(b)
    assert prod.get(0, 0) == ONE + ONE
    assert a.add(b).get(0, 0) == Q + QINV
    assert a.sub(a).is_zero()
    eye = SparseMat.identity(2)
    assert a.mul(eye) == a and eye.mul(a) == a
    assert a.kron(eye).nrows == 4
    assert a.apply({0: ONE, 1: Q}) == {0: Q + Q}


def test_echelon_rank_and_membership():
    rows = [{0: ONE, 1: Q}, {0: Q, 1: Q * Q}, {1: ONE, 2: QHAT}]
    assert span_rank(rows) == 2
    ech = Echelon()
    ech.add_all(rows)
    assert ech.contains({0: Q * Q, 1: qpow(3)})
    assert not ech.contains({2: ONE})


def test_spans_equal():
    a = [{0: ONE, 1: ONE}, {1: ONE, 2: ONE}]
    b = [{0: ONE, 2: -ONE}, {1: ONE, 2: ONE}]
    assert spans_equal(a, b)
    assert not spans_equal(a, [{0: ONE}])


def test_bareiss_rank_matches_random_modular():
    rng = random.Random(31)
    for _ in range(10):
        n = rng.randrange(2, 6)
        mat = [[LaurentPoly({rng.randrange(-2, 3): rng.randrange(-3, 4)})
                for _ in range(n)] for _ in range(n + 1)]
        rank = bareiss_rank(mat)
        rows = [{c: v for c, v in enumerate(row) if v} for row in mat]
        assert rank == span_rank(rows)
        assert rank_mod(rows, 12345, (1 << 61) - 1) <= rank


def test_rank_mod_lower_bound_generically_tight():
    rows = [{0: Q - QINV}, {1: ONE}]
    # q = 1 kills the first row: the modular rank dips below the true rank
    assert rank_mod(rows, 1, 97) == 1
    assert rank_mod(rows, 5, 97) == 2


def test_ratfunc_inverse():
    mat = [[Q, ONE], [ONE, QINV]]
    assert ratfunc_inverse(mat) is None  # determinant q * q^-1 - 1 = 0
    mat = [[Q, ONE], [ZERO, QHAT]]
    inv = ratfunc_inverse(mat)
    ident = [[RatFunc(1), RatFunc(0)], [RatFunc(0), RatFunc(1)]]
    prod = [[sum((RatFunc.from_poly(mat[r][k]) * inv[k][c] for k in range(2)),
                 RatFunc(0)) for c in range(2)] for r in range(2)]
    assert prod == ident


def test_row_normalize():
    row = {0: LaurentPoly({3: 2, 4: 4}), 1: LaurentPoly({2: -6})}
    out = row_normalize(row)
    assert out[0] == LaurentPoly({1: 1, 2: 2})
    assert out[1] == LaurentPoly({0: -3})


def test_echelon_mod():
    p = 97
    ech = EchelonMod(p)
    assert ech.add({0: 1, 1: 2})
    assert ech.add({1: 1})
    assert not ech.add({0: 1, 1: 3})
    assert ech.rank == 2
