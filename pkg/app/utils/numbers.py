from typing import Iterator
from functools import reduce
import math


def divisors(n: int) -> list[int]:
    """
    Возвращает положительные делители ``n`` по возрастанию.

    :raises ValueError: Если n <= 0.
    """

    if n <= 0:
        raise ValueError("Делители определены только для n > 0")
    small: list[int] = []
    large: list[int] = []
    d: int = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def lcm_all(values: list[int]) -> int:
    """
    НОК набора чисел; НОК пустого набора равен 1.
    """

    return reduce(math.lcm, values, 1)


def factorize(n: int) -> dict[int, int]:
    """
    Раскладывает ``n`` на простые множители: {p: k}.
    """

    factors: dict[int, int] = {}
    p: int = 2
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def partitions(k: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """
    Перечисляет разбиения числа ``k`` в невозрастающем порядке частей.
    """

    largest = k if largest is None else largest
    if k == 0:
        yield ()
        return
    for part in range(min(k, largest), 0, -1):
        for rest in partitions(k - part, part):
            yield (part,) + rest


def invariant_factors(n: int) -> list[tuple[int, ...]]:
    """
    Все наборы инвариантных множителей d_1 | d_2 | ... | d_s с произведением ``n``,
    то есть все абелевы группы порядка ``n`` с точностью до изоморфизма.

    Порядок детерминирован: по лексикографическому порядку разбиений для каждого простого.
    Для n = 1 возвращается единственный пустой набор.
    """

    primes: list[tuple[int, int]] = sorted(factorize(n).items())
    result: list[tuple[int, ...]] = [()]

    for p, k in primes:
        extended: list[tuple[int, ...]] = []
        for current in result:
            for partition in partitions(k):
                extended.append(_merge_primary(current, p, partition))
        result = extended

    # Сначала циклические группы, затем по числу множителей
    return sorted(result, key=lambda factors: (len(factors), factors))


def _merge_primary(
    factors: tuple[int, ...],
    p: int,
    partition: tuple[int, ...],
) -> tuple[int, ...]:
    length: int = max(len(factors), len(partition))
    padded_factors: list[int] = [1] * (length - len(factors)) + list(factors)
    powers: list[int] = sorted(p**part for part in partition)
    padded_powers: list[int] = [1] * (length - len(powers)) + powers
    return tuple(a * b for a, b in zip(padded_factors, padded_powers))
