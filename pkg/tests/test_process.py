# /project/tests/test_process.py
import pytest

from cubing.process import Processor


def test_results_follow_input_order():
    assert Processor(4).run_tasks(lambda x: x * x, list(range(20))) == [x * x for x in range(20)]


def test_empty_batch():
    assert Processor().run_tasks(lambda x: x, []) == []


def test_lowest_failing_item_is_reraised():
    def task(x):
        if x in (3, 7):
            raise ValueError(f"bad {x}")
        return x

    with pytest.raises(ValueError, match="bad 3"):
        Processor(3).run_tasks(task, list(range(10)))


def test_set_max_workers():
    processor = Processor()
    processor.set_max_workers(0)
    assert processor.max_workers == 1
    processor.set_max_workers(8)
    assert processor.max_workers == 8
