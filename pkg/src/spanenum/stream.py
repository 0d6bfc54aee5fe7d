"""Emission sinks and output-delay metrics.

Every enumeration algorithm reports solution parts through ``accept`` on a
sink as soon as an edge is fixed. Nothing is held back for pacing, so the
meaningful per-run quantity is the incremental delay, ``max_k t_k / k``.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Protocol, Sequence

from .graph import EdgeRef

clock_ns = time.perf_counter_ns


class EmissionSink(Protocol):
    def accept(self, edge: EdgeRef) -> None: ...


class CollectingSink:
    """Stores edges with the monotonic time of each emission relative to ``start``."""

    def __init__(self) -> None:
        self.edges: list[EdgeRef] = []
        self.stamps: list[int] = []
        self.t0 = clock_ns()

    def start(self) -> int:
        self.t0 = clock_ns()
        return self.t0

    def accept(self, edge: EdgeRef) -> None:
        self.stamps.append(clock_ns())
        self.edges.append(edge)

    def offsets(self) -> list[int]:
        t0 = self.t0
        return [t - t0 for t in self.stamps]

    def __len__(self) -> int:
        return len(self.edges)


class CountingSink:
    def __init__(self) -> None:
        self.count = 0

    def accept(self, edge: EdgeRef) -> None:
        self.count += 1


class ForwardingSink:
    def __init__(self, callback: Callable[[EdgeRef], None]) -> None:
        self.callback = callback

    def accept(self, edge: EdgeRef) -> None:
        self.callback(edge)


class SolutionQueueOverflow(RuntimeError):
    pass


class SolutionQueue:
    """FIFO of computed but not yet consumed edges, bounded by ``n - 1``."""

    def __init__(self, n: int) -> None:
        self.capacity = max(n - 1, 0)
        self._items: deque[EdgeRef] = deque()
        self.peak = 0

    def push(self, edge: EdgeRef) -> None:
        if len(self._items) >= self.capacity:
            raise SolutionQueueOverflow(f"solution queue exceeds capacity {self.capacity}")
        self._items.append(edge)
        if len(self._items) > self.peak:
            self.peak = len(self._items)

    def pop(self) -> EdgeRef:
        return self._items.popleft()

    def __len__(self) -> int:
        return len(self._items)

    def __bool__(self) -> bool:
        return bool(self._items)

    def drain(self) -> Iterable[EdgeRef]:
        while self._items:
            yield self._items.popleft()


class QueueSink:
    """Buffers emissions in a :class:`SolutionQueue` for a pulling consumer."""

    def __init__(self, n: int) -> None:
        self.queue = SolutionQueue(n)

    def accept(self, edge: EdgeRef) -> None:
        self.queue.push(edge)


@dataclass(frozen=True)
class StreamMetrics:
    first_output_ns: int
    max_delay_ns: int
    max_incremental_delay_ns: int
    total_time_ns: int
    emission_count: int


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def metrics_from_timestamps(timestamps: Sequence[int], total: int) -> StreamMetrics:
    """Reduce emission offsets (ns since run start) to a :class:`StreamMetrics`.

    The incremental delay is exact rational ``max t_k / k`` rounded up to
    whole nanoseconds.
    """
    if not timestamps:
        raise ValueError("no emissions recorded")
    prev = 0
    max_delay = 0
    # max t_k/k compared exactly via cross multiplication
    best_t, best_k = 0, 1
    for k, t in enumerate(timestamps, start=1):
        if t < prev:
            raise ValueError(f"timestamps decrease at emission {k}: {prev} -> {t}")
        if t - prev > max_delay:
            max_delay = t - prev
        if t * best_k > best_t * k:
            best_t, best_k = t, k
        prev = t
    if prev > total:
        raise ValueError(f"last emission at {prev} ns lies after total time {total} ns")
    return StreamMetrics(
        first_output_ns=timestamps[0],
        max_delay_ns=max_delay,
        max_incremental_delay_ns=_ceil_div(best_t, best_k),
        total_time_ns=total,
        emission_count=len(timestamps),
    )


def bulk_metrics(total: int, count: int) -> StreamMetrics:
    """Metrics of a total-time algorithm that hands over everything at the end."""
    return StreamMetrics(total, total, total, total, count)


def availability_holds(timestamps: Sequence[int], metrics: StreamMetrics) -> bool:
    """Check ``t_k <= k * max_incremental_delay`` for every k."""
    d = metrics.max_incremental_delay_ns
    return all(t <= k * d for k, t in enumerate(timestamps, start=1))


def timed_run(run: Callable[[EmissionSink], None], sink: Optional[CollectingSink] = None):
    """Run an enumeration with a fresh collecting sink; return (sink, metrics)."""
    sink = sink if sink is not None else CollectingSink()
    sink.start()
    run(sink)
    total = clock_ns() - sink.t0
    return sink, metrics_from_timestamps(sink.offsets(), total)
