import random

import pytest

from lucascong.errors import InvalidArgument
from lucascong.lucas import (LucasParams, discriminant, lucas_pair,
                             lucas_table, rank_of_apparition)

FIB = LucasParams(1, -1)


def test_params_reject_zero():
    with pytest.raises(InvalidArgument):
        LucasParams(0, 1)
    with pytest.raises(InvalidArgument):
        LucasParams(1, 0)


def test_discriminant():
    assert discriminant(1, -1) == 5
    assert discriminant(2, 1) == 0
    assert discriminant(4, 3) == 4
    assert LucasParams(1, -1).delta == 5


class TestTable:
    def test_fibonacci_prefix(self):
        t = lucas_table(FIB, 8)
        assert t.u == [0, 1, 1, 2, 3, 5, 8, 13, 21]
        assert t.v == [2, 1, 3, 4, 7, 11, 18, 29, 47]

    def test_degenerate_delta_zero(self):
        t = lucas_table(LucasParams(2, 1), 5)
        assert t.u == [0, 1, 2, 3, 4, 5]
        assert t.v == [2, 2, 2, 2, 2, 2]

    def test_initial_conditions(self):
        for params in (FIB, LucasParams(7, 3), LucasParams(-2, 5)):
            t = lucas_table(params, 1)
            assert t.u == [0, 1]
            assert t.v == [2, params.a]

    def test_zero_length(self):
        t = lucas_table(FIB, 0)
        assert t.u == [0] and t.v == [2]

    def test_negative_rejected(self):
        with pytest.raises(InvalidArgument):
            lucas_table(FIB, -1)


class TestPair:
    def test_fibonacci_30(self):
        assert lucas_pair(FIB, 30) == (832040, 1860498)

    def test_index_zero(self):
        assert lucas_pair(LucasParams(3, 7), 0) == (0, 2)

    def test_delta_zero_closed_form(self):
        assert lucas_pair(LucasParams(2, 1), 100) == (100, 2)

    def test_negative_rejected(self):
        with pytest.raises(InvalidArgument):
            lucas_pair(FIB, -2)

    def test_matches_table(self):
        rng = random.Random(20240817)
        for _ in range(20):
            a = rng.choice([x for x in range(-9, 10) if x])
            b = rng.choice([x for x in range(-9, 10) if x])
            params = LucasParams(a, b)
            t = lucas_table(params, 300)
            for n in range(0, 301):
                assert lucas_pair(params, n) == (t.u[n], t.v[n]), (a, b, n)


class TestRank:
    def test_fibonacci_examples(self):
        assert rank_of_apparition(FIB, 5) == 5
        assert rank_of_apparition(FIB, 13) == 7
        assert rank_of_apparition(FIB, 7) == 8

    def test_delta_zero(self):
        assert rank_of_apparition(LucasParams(2, 1), 7) == 7

    def test_none_when_p_divides_b_only(self):
        # u_j = A^{j-1} mod p never vanishes when p | B, p does not divide A
        assert rank_of_apparition(LucasParams(1, 5), 5) is None

    def test_rank_two_when_p_divides_a(self):
        assert rank_of_apparition(LucasParams(5, 5), 5) == 2

    def test_rejects_composite(self):
        with pytest.raises(InvalidArgument):
            rank_of_apparition(FIB, 6)
        with pytest.raises(InvalidArgument):
            rank_of_apparition(FIB, 1)

    def test_minimality(self, small_grid):
        for params in small_grid:
            for p in (5, 7, 11, 13):
                r = rank_of_apparition(params, p)
                if r is None:
                    continue
                t = lucas_table(params, r)
                assert t.u[r] % p == 0
                assert all(t.u[j] % p != 0 for j in range(1, r))


class TestIdentities:
    def test_norm_identity(self, small_grid):
        # v_n^2 - delta*u_n^2 = 4*B^n
        for params in small_grid:
            t = lucas_table(params, 200)
            bn = 1
            for n in range(0, 201):
                assert t.v[n] ** 2 - params.delta * t.u[n] ** 2 == 4 * bn
                bn *= params.b

    def test_companion_identity(self, small_grid):
        # v_n = A*u_n - 2B*u_{n-1}
        for params in small_grid:
            t = lucas_table(params, 60)
            for n in range(1, 61):
                assert t.v[n] == params.a * t.u[n] - 2 * params.b * t.u[n - 1]

    def test_divisibility_ladder(self, small_grid):
        # u_d | u_n whenever d | n
        for params in small_grid:
            t = lucas_table(params, 200)
            for n in range(1, 201):
                for d in range(1, n + 1):
                    if n % d == 0 and t.u[d] != 0:
                        assert t.u[n] % t.u[d] == 0, (params, d, n)
                    if n % d == 0 and t.u[d] == 0:
                        assert t.u[n] == 0
