"""
bench.py  –  Throughput of the handle-reduction engine on fixed-seed random words.

Every metric except words_per_sec depends only on (n, length, count, seed).
"""

from __future__ import annotations

import logging
import random
import time
from dataclasses import dataclass
from typing import List

from core.config import DEFAULTS
from core.ordering import reduce_with_stats
from core.words import random_word

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BenchReport:
    words: int
    mean_steps: float
    max_length: int
    seconds: float

    @property
    def words_per_sec(self) -> float:
        return self.words / self.seconds if self.seconds > 0 else float("inf")

    def metric_lines(self) -> List[str]:
        """The reproducible lines."""
        return [
            f"words={self.words}",
            f"mean_steps={self.mean_steps:.2f}",
            f"max_length={self.max_length}",
        ]

    def to_lines(self) -> List[str]:
        return self.metric_lines() + [f"words_per_sec={self.words_per_sec:.1f}"]


def run_bench(
    n: int,
    length: int,
    count: int,
    seed: int = DEFAULTS.seed,
    step_budget: int = DEFAULTS.step_budget,
) -> BenchReport:
    if count < 1 or length < 0:
        raise ValueError(f"need count >= 1 and length >= 0, got count={count} length={length}")
    rng = random.Random(seed)
    words = [random_word(n, length, rng) for _ in range(count)]

    total_steps = 0
    peak = 0
    start = time.perf_counter()
    for w in words:
        result = reduce_with_stats(w, step_budget)
        total_steps += result.steps
        peak = max(peak, result.max_length)
    elapsed = time.perf_counter() - start

    logger.info(f"[bench] {count} words of length {length} in B_{n}: {elapsed:.3f}s")
    return BenchReport(count, total_steps / count, peak, elapsed)
