import random

from cherednik.scalars import QuadExt, Rat, SQRT3
from cherednik.polynomials import (MPoly, clear_content, div_linear, monomials,
                                   reynolds, weyl_act)
from cherednik.linalg import (bareiss_rank, gauss_rank, independent_columns,
                              is_symmetric, mat_mul, mat_vec, transpose)

RNG = random.Random(202)


def rand_mpoly(nvars, maxdeg, terms=4):
    p = MPoly.zero(nvars)
    for _ in range(terms):
        e = tuple(RNG.randint(0, maxdeg) for _ in range(nvars))
        if sum(e) > maxdeg:
            continue
        p = p + MPoly(nvars, {e: Rat(RNG.randint(-6, 6))})
    return p


def test_monomial_basis_order_and_count():
    ms = monomials(2, 3)
    assert ms == [(3, 0), (2, 1), (1, 2), (0, 3)]
    assert len(monomials(2, 7)) == 8
    assert monomials(1, 5) == [(5,)]


def test_ring_axioms_random():
    for _ in range(40):
        p = rand_mpoly(2, 4)
        q = rand_mpoly(2, 4)
        r = rand_mpoly(2, 4)
        assert p * (q + r) == p * q + p * r
        assert p * q == q * p
        assert (p - q) + q == p


def test_diff_leibniz_random():
    for _ in range(25):
        p = rand_mpoly(2, 4)
        q = rand_mpoly(2, 4)
        for i in range(2):
            assert (p * q).diff(i) == p.diff(i) * q + p * q.diff(i)


def test_homogeneous_split():
    p = rand_mpoly(2, 5, terms=7)
    total = MPoly.zero(2)
    for d in range(6):
        part = p.homogeneous_part(d)
        if part:
            assert part.is_homogeneous() and part.degree() == d
        total = total + part
    assert total == p


def test_div_linear_exact():
    # (x1 + 2 x2) * q recovered by division
    lin = (Rat(1), Rat(2))
    linp = MPoly.from_linear(lin)
    for _ in range(20):
        q = rand_mpoly(2, 3)
        assert div_linear(linp * q, lin) == q


def test_weyl_act_is_multiplicative():
    # substitution by a matrix product equals successive substitution
    m1 = ((QuadExt(0), QuadExt(-1)), (QuadExt(1), QuadExt(0)))   # rotation
    m2 = ((QuadExt(1), QuadExt(0)), (QuadExt(0), QuadExt(-1)))   # reflection
    prod = tuple(tuple(sum((m1[i][l] * m2[l][j] for l in range(2)),
                           QuadExt(0)) for j in range(2)) for i in range(2))
    for _ in range(10):
        p = rand_mpoly(2, 3)
        assert weyl_act(prod, p) == weyl_act(m1, weyl_act(m2, p))


def test_reynolds_fixes_invariants():
    group = [((QuadExt(1), QuadExt(0)), (QuadExt(0), QuadExt(1))),
             ((QuadExt(-1), QuadExt(0)), (QuadExt(0), QuadExt(-1)))]
    p = MPoly(2, {(2, 0): Rat(1), (1, 1): Rat(3)})
    r = reynolds(group, p)
    for m in group:
        assert weyl_act(m, r) == r
    # odd part dies
    odd = MPoly(2, {(1, 0): Rat(1)})
    assert not reynolds(group, odd)


def test_clear_content_normalizes():
    p = MPoly(2, {(2, 0): QuadExt(Rat(4, 3)), (0, 2): QuadExt(Rat(-8, 3))})
    c = clear_content(p)
    assert c == MPoly(2, {(2, 0): QuadExt(1), (0, 2): QuadExt(-2)})


def rand_matrix(n, m):
    return [[Rat(RNG.randint(-5, 5)) for _ in range(m)] for _ in range(n)]


def test_linalg_mat_ops():
    a = rand_matrix(3, 4)
    b = rand_matrix(4, 2)
    ab = mat_mul(a, b)
    assert len(ab) == 3 and len(ab[0]) == 2
    v = [Rat(1), Rat(-2)]
    assert mat_vec(ab, v) == mat_vec(a, mat_vec(b, v))
    assert transpose(transpose(a)) == [list(r) for r in a]


def test_rank_methods_agree_random():
    for _ in range(25):
        n, m = RNG.randint(1, 5), RNG.randint(1, 5)
        a = rand_matrix(n, m)
        assert gauss_rank(a) == bareiss_rank(a)


def test_rank_with_quadratic_entries():
    a = [[QuadExt(1), SQRT3], [SQRT3, QuadExt(3)]]      # rank 1
    assert gauss_rank(a) == 1
    b = [[QuadExt(1), SQRT3], [SQRT3, QuadExt(4)]]      # det = 1
    assert gauss_rank(b) == 2


def test_independent_columns():
    a = [[QuadExt(1), QuadExt(2), QuadExt(3)],
         [QuadExt(2), QuadExt(4), QuadExt(7)]]
    cols = independent_columns(a)
    assert cols == [0, 2]
    assert is_symmetric([[Rat(1), Rat(5)], [Rat(5), Rat(2)]])
    assert not is_symmetric([[Rat(1), Rat(5)], [Rat(4), Rat(2)]])
