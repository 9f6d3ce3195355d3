import random
from fractions import Fraction

import pytest

from vncore.errors import BadLegs, DimMismatch, RankMismatch
from vncore.field import PrimeField, QQ
from vncore.linmap import (LinMap, chain, compose, identity, place_on_legs,
                           solve, swap, tensor)


def rand_map(rng, n, src, tgt, field=QQ, lo=-3, hi=3):
    ents = [rng.randint(lo, hi) for _ in range(n ** src * n ** tgt)]
    return LinMap.from_entries(field, n, src, tgt, ents)


def test_compose_identity_laws():
    rng = random.Random(1)
    f = rand_map(rng, 2, 2, 2)
    assert compose(identity(QQ, 2, 2), f) == f
    assert compose(f, identity(QQ, 2, 2)) == f


def test_compose_z2_mu_delta():
    # mu o delta on k[Z/2] sends x to x*x: e -> e, g -> e.
    # Hand product of the 2x4 and 4x2 structure matrices gives [[1,1],[0,0]].
    delta = LinMap.from_entries(QQ, 2, 1, 2, [1, 0, 0, 0, 0, 0, 0, 1])
    mu = LinMap.from_entries(QQ, 2, 2, 1, [1, 0, 0, 1, 0, 1, 1, 0])
    sq = compose(mu, delta)
    assert sq.entries() == [Fraction(1), Fraction(1), Fraction(0), Fraction(0)]


def test_compose_rank_and_dim_mismatch():
    f = identity(QQ, 2, 2)
    g = identity(QQ, 2, 1)
    with pytest.raises(RankMismatch):
        compose(g, f)
    with pytest.raises(DimMismatch):
        compose(identity(QQ, 3, 1), g)


def test_tensor_identities():
    assert tensor(identity(QQ, 2, 1), identity(QQ, 2, 1)) == identity(QQ, 2, 2)


def test_mixed_product_property():
    rng = random.Random(2)
    for _ in range(5):
        f, g, h, k = (rand_map(rng, 2, 1, 1) for _ in range(4))
        lhs = compose(tensor(f, g), tensor(h, k))
        rhs = tensor(compose(f, h), compose(g, k))
        assert lhs == rhs


def test_delta_tensor_id_z2():
    # grouplike delta on k[Z/2]: (x, y) -> (x, x, y), an 8x4 0/1 matrix
    delta = LinMap.from_entries(QQ, 2, 1, 2, [1, 0, 0, 0, 0, 0, 0, 1])
    m = tensor(delta, identity(QQ, 2, 1))
    assert (m.rows, m.cols) == (8, 4)
    for x in range(2):
        for y in range(2):
            col = m.column(x * 2 + y)
            expect = [0] * 8
            expect[x * 4 + x * 2 + y] = 1
            assert col == expect


def test_swap_involution_and_action():
    c = swap(QQ, 2)
    assert compose(c, c) == identity(QQ, 2, 2)
    # basis (0,1) at column 1 goes to (1,0) at row 2
    assert c.entry(2, 1) == 1
    assert c.entry(1, 1) == 0


def test_swap_naturality():
    rng = random.Random(3)
    c = swap(QQ, 3)
    for _ in range(5):
        f = rand_map(rng, 3, 1, 1)
        g = rand_map(rng, 3, 1, 1)
        assert compose(c, tensor(f, g)) == compose(tensor(g, f), c)


def test_mu_swap_commutative_group():
    # k[Z/2] is commutative, so mu o c = mu
    mu = LinMap.from_entries(QQ, 2, 2, 1, [1, 0, 0, 1, 0, 1, 1, 0])
    assert compose(mu, swap(QQ, 2)) == mu


def test_identity_rank_zero():
    i0 = identity(QQ, 5, 0)
    assert (i0.rows, i0.cols) == (1, 1)
    assert i0.entry(0, 0) == 1


def brute_place(f, legs, p):
    """Oracle: apply f to coordinates (i, j) of each basis tuple directly."""
    i, j = legs
    n = f.n
    size = n ** p
    ents = [Fraction(0)] * (size * size)
    for col in range(size):
        digits = []
        c = col
        for _ in range(p):
            digits.append(c % n)
            c //= n
        digits.reverse()
        a, b = digits[i - 1], digits[j - 1]
        for out_pair in range(n * n):
            v = f.entry(out_pair, a * n + b)
            if v:
                aa, bb = divmod(out_pair, n)
                d2 = list(digits)
                d2[i - 1], d2[j - 1] = aa, bb
                row = 0
                for d in d2:
                    row = row * n + d
                ents[row * size + col] += v
    return LinMap.from_entries(QQ, n, p, p, ents)


def test_place_on_legs_12_is_tensor():
    rng = random.Random(4)
    f = rand_map(rng, 2, 2, 2)
    assert place_on_legs(f, (1, 2), 3) == tensor(f, identity(QQ, 2, 1))


def test_place_on_legs_13_conjugation():
    rng = random.Random(5)
    f = rand_map(rng, 2, 2, 2)
    ic = tensor(identity(QQ, 2, 1), swap(QQ, 2))
    expect = chain(ic, tensor(f, identity(QQ, 2, 1)), ic)
    assert place_on_legs(f, (1, 3), 3) == expect


def test_place_on_legs_matches_brute_force():
    rng = random.Random(6)
    for _ in range(3):
        f = rand_map(rng, 2, 2, 2)
        for legs in [(1, 2), (1, 3), (2, 3)]:
            assert place_on_legs(f, legs, 3) == brute_place(f, legs, 3)
        for legs in [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]:
            assert place_on_legs(f, legs, 4) == brute_place(f, legs, 4)


def test_place_on_legs_disjoint_commute():
    rng = random.Random(7)
    f = rand_map(rng, 2, 2, 2)
    g = rand_map(rng, 2, 2, 2)
    a = place_on_legs(f, (1, 2), 4)
    b = place_on_legs(g, (3, 4), 4)
    assert compose(a, b) == compose(b, a)


def test_place_on_legs_bad_legs():
    f = identity(QQ, 2, 2)
    with pytest.raises(BadLegs):
        place_on_legs(f, (2, 2), 3)
    with pytest.raises(BadLegs):
        place_on_legs(f, (1, 4), 3)


def test_interchange_law():
    rng = random.Random(8)
    f = rand_map(rng, 2, 1, 2)
    g = rand_map(rng, 2, 2, 1)
    h = rand_map(rng, 2, 2, 1)
    k = rand_map(rng, 2, 1, 2)
    assert tensor(compose(g, f), compose(k, h)) == \
        compose(tensor(g, k), tensor(f, h))


def test_exact_equality_no_tolerance():
    a = LinMap.from_entries(QQ, 2, 0, 1, [Fraction(1, 3), 0])
    b = LinMap.from_entries(QQ, 2, 0, 1, [Fraction(33333, 100000), 0])
    assert a != b


def test_fp_linmap_arithmetic():
    f5 = PrimeField(5)
    a = LinMap.from_entries(f5, 2, 1, 1, [2, 0, 0, 3])
    assert compose(a, a).entries() == [4, 0, 0, 4]


def test_solve_basic():
    v = solve(QQ, [[Fraction(2), Fraction(0)], [Fraction(0), Fraction(4)]],
              [Fraction(1), Fraction(1)])
    assert v == [Fraction(1, 2), Fraction(1, 4)]
    # inconsistent overdetermined system
    assert solve(QQ, [[Fraction(1)], [Fraction(1)]],
                 [Fraction(1), Fraction(2)]) is None
