"""Exact dense linear algebra over Fraction."""

import random
from fractions import Fraction

from chowkunneth import linalg


def random_matrix(rng, n, m, lo=-4, hi=4):
    return linalg.mat(
        [[Fraction(rng.randint(lo, hi), rng.randint(1, 3)) for _ in range(m)]
         for _ in range(n)]
    )


def test_mat_normalizes_to_fractions():
    m = linalg.mat([[1, "1/2"], [0.0, 3]])
    assert m == ((Fraction(1), Fraction(1, 2)), (Fraction(0), Fraction(3)))
    assert all(isinstance(x, Fraction) for row in m for x in row)


def test_identity_and_multiplication():
    rng = random.Random(11)
    for _ in range(20):
        n = rng.randint(1, 5)
        a = random_matrix(rng, n, n)
        assert linalg.mat_mul(a, linalg.identity(n)) == a
        assert linalg.mat_mul(linalg.identity(n), a) == a


def test_multiplication_is_associative():
    rng = random.Random(12)
    for _ in range(20):
        n, m, k, l = (rng.randint(1, 4) for _ in range(4))
        a = random_matrix(rng, n, m)
        b = random_matrix(rng, m, k)
        c = random_matrix(rng, k, l)
        assert linalg.mat_mul(linalg.mat_mul(a, b), c) == linalg.mat_mul(
            a, linalg.mat_mul(b, c)
        )


def test_transpose_involution_and_product_rule():
    rng = random.Random(13)
    for _ in range(20):
        n, m, k = rng.randint(1, 4), rng.randint(1, 4), rng.randint(1, 4)
        a = random_matrix(rng, n, m)
        b = random_matrix(rng, m, k)
        assert linalg.transpose(linalg.transpose(a)) == a
        assert linalg.transpose(linalg.mat_mul(a, b)) == linalg.mat_mul(
            linalg.transpose(b), linalg.transpose(a)
        )


def test_inverse_of_random_invertible_matrices():
    rng = random.Random(14)
    produced = 0
    while produced < 20:
        n = rng.randint(1, 5)
        a = random_matrix(rng, n, n)
        inv = linalg.inverse(a)
        if inv is None:
            continue
        produced += 1
        assert linalg.mat_mul(a, inv) == linalg.identity(n)
        assert linalg.mat_mul(inv, a) == linalg.identity(n)


def test_singular_matrix_has_no_inverse():
    a = linalg.mat([[1, 2], [2, 4]])
    assert linalg.inverse(a) is None
    assert linalg.rank(a) == 1


def test_solve_against_known_system():
    a = linalg.mat([[2, 1], [1, 1]])
    b = linalg.mat([[3], [2]])
    assert linalg.solve(a, b) == ((Fraction(1),), (Fraction(1),))


def test_rank_of_outer_products():
    rng = random.Random(15)
    for _ in range(20):
        n, m = rng.randint(2, 5), rng.randint(2, 5)
        u = [Fraction(rng.randint(-3, 3)) for _ in range(n)]
        v = [Fraction(rng.randint(-3, 3)) for _ in range(m)]
        a = linalg.mat([[ui * vj for vj in v] for ui in u])
        expected = 1 if any(u) and any(v) else 0
        assert linalg.rank(a) == expected


def test_rank_bounds_and_empty():
    assert linalg.rank(()) == 0
    assert linalg.rank(((Fraction(0),),)) == 0
    assert linalg.rank(linalg.identity(4)) == 4


def test_congruence_diagonalize_random_symmetric():
    rng = random.Random(16)
    for _ in range(25):
        n = rng.randint(1, 5)
        raw = random_matrix(rng, n, n)
        sym = linalg.mat(
            [[raw[i][j] + raw[j][i] for j in range(n)] for i in range(n)]
        )
        q, d = linalg.congruence_diagonalize(sym)
        assert linalg.inverse(q) is not None
        assert linalg.mat_mul(linalg.mat_mul(linalg.transpose(q), sym), q) == d
        for i in range(n):
            for j in range(n):
                if i != j:
                    assert d[i][j] == 0


def test_congruence_diagonalize_handles_zero_diagonal():
    m = linalg.mat([[0, 1], [1, 0]])
    q, d = linalg.congruence_diagonalize(m)
    assert linalg.mat_mul(linalg.mat_mul(linalg.transpose(q), m), q) == d
    assert d[0][1] == 0 and d[1][0] == 0
    assert d[0][0] != 0 and d[1][1] != 0
