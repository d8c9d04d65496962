import statistics
import time
from collections.abc import Callable
from typing import TypeVar

T = TypeVar("T")


def median_ns(fn: Callable[[], T], repeats: int = 3) -> tuple[T, int]:
    """Run fn ``repeats`` times on the monotonic clock; first result and median nanoseconds"""
    if repeats < 1:
        raise ValueError("repeats must be >= 1")
    result = None
    samples = []
    for i in range(repeats):
        start = time.perf_counter_ns()
        value = fn()
        samples.append(time.perf_counter_ns() - start)
        if i == 0:
            result = value
    return result, int(statistics.median(samples))
