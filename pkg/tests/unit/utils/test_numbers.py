import pytest

from app.utils.numbers import (
    divisors,
    factorize,
    invariant_factors,
    lcm_all,
    partitions,
)


class TestDivisors:
    @pytest.mark.parametrize(
        "n, expected",
        [
            (1, [1]),
            (7, [1, 7]),
            (12, [1, 2, 3, 4, 6, 12]),
            (16, [1, 2, 4, 8, 16]),
        ],
    )
    def test_divisors(self, n, expected):
        assert divisors(n) == expected

    @pytest.mark.parametrize("n", [0, -4])
    def test_non_positive(self, n):
        with pytest.raises(ValueError):
            divisors(n)


class TestFactorization:
    def test_factorize(self):
        assert factorize(360) == {2: 3, 3: 2, 5: 1}
        assert factorize(1) == {}

    def test_lcm_all(self):
        assert lcm_all([4, 6]) == 12
        assert lcm_all([]) == 1

    def test_partitions(self):
        assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
        assert list(partitions(0)) == [()]


class TestInvariantFactors:
    @pytest.mark.parametrize(
        "n, expected",
        [
            (1, [()]),
            (6, [(6,)]),
            (8, [(8,), (2, 4), (2, 2, 2)]),
            (12, [(12,), (2, 6)]),
            (36, [(36,), (2, 18), (3, 12), (6, 6)]),
        ],
    )
    def test_invariant_factors(self, n, expected):
        assert invariant_factors(n) == expected

    @pytest.mark.parametrize("n", [8, 12, 16, 72])
    def test_divisibility_chain(self, n):
        # d_1 | d_2 | ... и произведение равно n
        for factors in invariant_factors(n):
            assert all(b % a == 0 for a, b in zip(factors, factors[1:]))
            product = 1
            for d in factors:
                product *= d
            assert product == n
