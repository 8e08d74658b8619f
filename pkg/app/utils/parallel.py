from typing import (
    Callable,
    Iterable,
    TypeVar,
)
from concurrent.futures import ProcessPoolExecutor


T = TypeVar("T")
R = TypeVar("R")


def ordered_map(
    func: Callable[[T], R],
    items: Iterable[T],
    *,
    jobs: int = 1,
) -> list[R]:
    """
    Применяет ``func`` ко всем элементам и возвращает результаты в порядке входа.

    При ``jobs`` > 1 элементы распределяются по пулу процессов; ``Executor.map``
    сохраняет порядок, поэтому результат не зависит от порядка завершения задач.
    Функция и элементы должны сериализоваться через pickle.

    :param func: Функция уровня модуля.
    :param items: Элементы для обработки.
    :param jobs: Число рабочих процессов.

    :raises ValueError: Если jobs <= 0.
    """

    if jobs <= 0:
        raise ValueError("Число рабочих процессов должно быть > 0")

    items = list(items)
    if jobs == 1 or len(items) <= 1:
        return [func(item) for item in items]

    chunksize: int = max(1, len(items) // (jobs * 4))
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(func, items, chunksize=chunksize))
