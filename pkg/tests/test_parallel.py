import os

import pytest

from core.errors import InvalidParameterError
from core.logger import get_logger
from core.parallel import argmax_pairs, argmin_pairs, chunk_ranges, parallel_map, resolve_threads


def test_resolve_threads(default_config):
    assert resolve_threads(3) == 3
    assert resolve_threads(0) == (os.cpu_count() or 1)
    default_config.threads = 2
    assert resolve_threads() == 2
    with pytest.raises(InvalidParameterError):
        resolve_threads(-1)


@pytest.mark.parametrize("threads", [1, 4])
def test_parallel_map_keeps_order(threads):
    assert parallel_map(lambda x: x * x, range(50), threads) == [x * x for x in range(50)]


def test_parallel_map_empty():
    assert parallel_map(str, [], 4) == []


def test_argmin_argmax_take_first_tie():
    assert argmin_pairs([3, 1, 1, 2]) == 1
    assert argmax_pairs([3, 5, 5, 2]) == 1
    assert argmin_pairs([]) == -1


def test_chunk_ranges():
    assert chunk_ranges(10, 4) == [range(0, 4), range(4, 8), range(8, 10)]
    assert chunk_ranges(0, 4) == []


class TestLogger:
    def test_level_filtering_and_history(self):
        logger = get_logger()
        logger.set_level("INFO")
        logger.debug("hidden")
        logger.info("shown")
        assert len(logger.log_history) == 1
        assert logger.log_history[0].endswith("[INFO] shown")

    def test_unknown_level(self):
        with pytest.raises(ValueError):
            get_logger().set_level("CHATTY")

    def test_timed_block(self):
        logger = get_logger()
        logger.set_level("DEBUG")
        with logger.timed("signed sums"):
            pass
        assert "signed sums took" in logger.log_history[-1]

    def test_save_to_file(self, tmp_path):
        logger = get_logger()
        logger.error("boom")
        target = tmp_path / "log.txt"
        logger.save_to_file(str(target))
        assert "boom" in target.read_text(encoding="utf-8")
