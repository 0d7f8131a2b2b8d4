import random
from fractions import Fraction

from twistcat.linalg import complement_reps, nullspace, rank, rank_mod_p


def F(x):
    return Fraction(x)


def test_rank_small():
    assert rank([[F(1), F(2)], [F(2), F(4)]]) == 1
    assert rank([[F(1), F(0)], [F(0), F(1)]]) == 2
    assert rank([]) == 0
    assert rank([[F(0), F(0)]]) == 0


def test_nullspace_matches_rank():
    mat = [[F(1), F(2), F(3)], [F(2), F(4), F(6)]]
    basis = nullspace(mat, 3)
    assert len(basis) == 3 - rank(mat)
    for vec in basis:
        for row in mat:
            assert sum(r * v for r, v in zip(row, vec)) == 0


def test_nullspace_of_empty_map():
    basis = nullspace([], 2)
    assert len(basis) == 2


def test_rank_mod_p_agrees_on_random_small_matrices():
    rng = random.Random("linalg")
    for _ in range(50):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        mat = [[Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(cols)] for _ in range(rows)]
        assert rank_mod_p(mat) == rank(mat)


def test_complement_reps():
    space = [[F(1), F(0)], [F(0), F(1)], [F(1), F(1)]]
    sub = [[F(1), F(1)]]
    reps = complement_reps(space, sub, 2)
    assert len(reps) == 1
    assert reps[0] in space
