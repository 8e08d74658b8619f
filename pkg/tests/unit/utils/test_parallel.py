import pytest

from app.utils.numbers import divisors
from app.utils.parallel import ordered_map


class TestOrderedMap:
    def test_sequential(self):
        assert ordered_map(divisors, [12, 7, 1]) == [[1, 2, 3, 4, 6, 12], [1, 7], [1]]

    def test_process_pool_keeps_order(self):
        items = [30, 1, 16, 7, 12, 9]
        assert ordered_map(divisors, items, jobs=2) == [divisors(n) for n in items]

    def test_single_item_skips_pool(self, mocker):
        pool = mocker.patch("app.utils.parallel.ProcessPoolExecutor")
        assert ordered_map(divisors, [6], jobs=4) == [[1, 2, 3, 6]]
        pool.assert_not_called()

    @pytest.mark.parametrize("jobs", [0, -1])
    def test_invalid_jobs(self, jobs):
        with pytest.raises(ValueError):
            ordered_map(divisors, [1], jobs=jobs)
