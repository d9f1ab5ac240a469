"""
density.py  –  Explicit witnesses for density, and seeded verifiers for density / least elements.

Every witness comes from a commutator of the positive element β with a short word c:

    β c β^-1 c^-1   or   β c^-1 β^-1 c      (c below β's main generator)
    β σ_i β^-1 σ_i^-1   or   β^-1 σ_i β σ_i^-1   (centralizer case, i = main index)

Commutators with an element of a normal subgroup stay in that subgroup. Nothing is reported
as found until membership and 1 < γ < β have been re-checked with the comparator.
"""

from __future__ import annotations

import itertools
import logging
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Sequence, Tuple

from tqdm import tqdm

from core.config import DEFAULTS
from core.errors import PreconditionError, StrandCountError, UnsupportedOperationError
from core.garside import CentralizerParams, UVForm, centralizer_element
from core.ordering import OrderingResult, compare, sigma_sign
from core.subgroups import SubgroupId, membership_certificate, sampler_for
from core.words import (
    BraidWord,
    concat,
    format_word,
    free_reduce,
    free_reduce_letters,
    generator,
    identity,
    inverse,
    product,
)

logger = logging.getLogger(__name__)

_MAX_RESAMPLES = 16


@dataclass(frozen=True)
class WitnessReport:
    found: bool
    witness: Optional[BraidWord]
    candidates_tried: int
    budget: int
    comparisons: int = 0

    def to_lines(self) -> List[str]:
        lines = [f"found={'true' if self.found else 'false'}"]
        if self.witness is not None:
            lines.append(f"witness={format_word(self.witness)}")
        lines.append(f"candidates_tried={self.candidates_tried}")
        lines.append(f"budget={self.budget}")
        return lines


class _ComparisonBudget:
    """Counts comparator calls against a fixed allowance."""

    def __init__(self, limit: int):
        if limit < 1:
            raise ValueError(f"density budget must be positive, got {limit}")
        self.limit = limit
        self.used = 0

    def compare(self, a: BraidWord, b: BraidWord) -> Optional[OrderingResult]:
        if self.used >= self.limit:
            return None
        self.used += 1
        return compare(a, b)


# ─────────────────────────────────────────────────────────────
# Candidate pool
# ─────────────────────────────────────────────────────────────
def _words_over(k: int, n: int, length_cap: int) -> Iterator[BraidWord]:
    """σ_1..σ_k ascending, then freely reduced words in signed-lex order up to length_cap."""
    for i in range(1, k + 1):
        yield generator(i, n)
    alphabet = [s * i for i in range(1, k + 1) for s in (1, -1)]
    for length in range(1, length_cap + 1):
        for letters in itertools.product(alphabet, repeat=length):
            if length == 1 and letters[0] > 0:
                continue
            if free_reduce_letters(letters) != letters:
                continue
            yield BraidWord(n, letters)


def _candidates(beta: BraidWord, main: int, length_cap: int) -> Iterator[BraidWord]:
    beta_inv = inverse(beta)
    for c in _words_over(main - 1, beta.n, length_cap):
        yield product([beta, c, beta_inv, inverse(c)])
        yield product([beta, inverse(c), beta_inv, c])
    s = generator(main, beta.n)
    yield product([beta, s, beta_inv, inverse(s)])
    yield product([beta_inv, s, beta, inverse(s)])
    for c in _words_over(main, beta.n, length_cap):
        if max(abs(e) for e in c.letters) < main:
            continue
        yield product([beta, c, beta_inv, inverse(c)])
        yield product([beta, inverse(c), beta_inv, c])


def _require_normal(sid: SubgroupId) -> None:
    if not sid.is_normal:
        raise UnsupportedOperationError(
            f"{sid.value} is not normal in B_n; commutator witnesses are not guaranteed to stay inside it"
        )


def _check_member(sid: SubgroupId, w: BraidWord, what: str) -> None:
    if not membership_certificate(sid, w):
        raise PreconditionError(f"{what} {format_word(w)!r} is not in {sid.value}")


# ─────────────────────────────────────────────────────────────
# Witness searches
# ─────────────────────────────────────────────────────────────
def smaller_positive(
    sid: SubgroupId,
    beta: BraidWord,
    budget: int = DEFAULTS.density_budget,
    length_cap: int = DEFAULTS.candidate_length_cap,
) -> WitnessReport:
    """γ in the subgroup with 1 < γ < β, for β positive in the subgroup."""
    _require_normal(sid)
    _check_member(sid, beta, "beta")
    sign = sigma_sign(beta)
    if not sign.is_positive:
        raise PreconditionError(f"beta must be σ-positive, got {sign}")

    meter = _ComparisonBudget(budget)
    one = identity(beta.n)
    tried = 0
    for raw in _candidates(beta, sign.index, length_cap):
        if meter.used >= meter.limit:
            break
        tried += 1
        gamma = free_reduce(raw)
        if not gamma.letters:
            continue
        if meter.compare(one, gamma) is not OrderingResult.LT:
            continue
        if meter.compare(gamma, beta) is not OrderingResult.LT:
            continue
        if not membership_certificate(sid, gamma):
            logger.warning(f"[density] commutator {format_word(gamma)} failed membership in {sid.value}")
            continue
        logger.debug(f"[density] witness after {tried} candidates, {meter.used} comparisons")
        return WitnessReport(True, gamma, tried, budget, meter.used)

    logger.info(f"[density] no witness below {format_word(beta)} ({tried} candidates, budget {budget})")
    return WitnessReport(False, None, tried, budget, meter.used)


def between(
    sid: SubgroupId,
    f: BraidWord,
    g: BraidWord,
    budget: int = DEFAULTS.density_budget,
    length_cap: int = DEFAULTS.candidate_length_cap,
) -> WitnessReport:
    """h in the subgroup with f < h < g, as h = f·γ for γ below f^-1 g."""
    _require_normal(sid)
    if f.n != g.n:
        raise StrandCountError(f"cannot search between braids on {f.n} and {g.n} strands")
    _check_member(sid, f, "f")
    _check_member(sid, g, "g")
    if compare(f, g) is not OrderingResult.LT:
        raise PreconditionError("between needs f < g")

    inner = smaller_positive(sid, free_reduce(concat(inverse(f), g)), budget, length_cap)
    if not inner.found:
        return inner
    h = free_reduce(concat(f, inner.witness))
    if compare(f, h) is not OrderingResult.LT or compare(h, g) is not OrderingResult.LT:
        logger.warning(f"[density] left translate {format_word(h)} left the interval")
        return WitnessReport(False, None, inner.candidates_tried, budget, inner.comparisons)
    return WitnessReport(True, h, inner.candidates_tried, budget, inner.comparisons)


def shrink_centralizer_element(
    r: int,
    u: int,
    v: int,
    target_n: int,
    budget: int = DEFAULTS.density_budget,
) -> WitnessReport:
    """
    For β = Δ_r^{2u} Δ_{r-1}^{2v} (Δ_3^{2u} σ_1^v when r = 3) with v != 0, a positive element
    below β: β σ_{r-1} β^-1 σ_{r-1}^-1 when v < 0 and β^-1 σ_{r-1} β σ_{r-1}^-1 when v > 0.
    """
    if v == 0:
        raise PreconditionError("v = 0 leaves a full twist; there is nothing to shrink")
    beta = centralizer_element(CentralizerParams(r, UVForm(u, v)), target_n)
    if not sigma_sign(beta).is_positive:
        raise PreconditionError(f"Δ_{r}^{2 * u}-family element with u={u}, v={v} is not positive")

    s = generator(r - 1, target_n)
    if v < 0:
        gamma = product([beta, s, inverse(beta), inverse(s)])
    else:
        gamma = product([inverse(beta), s, beta, inverse(s)])
    gamma = free_reduce(gamma)

    meter = _ComparisonBudget(budget)
    ok = (
        meter.compare(identity(target_n), gamma) is OrderingResult.LT
        and meter.compare(gamma, beta) is OrderingResult.LT
    )
    return WitnessReport(ok, gamma if ok else None, 1, budget, meter.used)


# ─────────────────────────────────────────────────────────────
# Verifiers
# ─────────────────────────────────────────────────────────────
@dataclass(frozen=True)
class TrialOutcome:
    trial: int
    found: bool
    candidates_tried: int
    f: Optional[BraidWord] = None
    g: Optional[BraidWord] = None


@dataclass
class DenseSummary:
    subgroup: SubgroupId
    n: int
    trials: int
    successes: int = 0
    total_candidates: int = 0
    failures: List[Tuple[BraidWord, BraidWord]] = field(default_factory=list)
    degenerate: int = 0

    @property
    def success_rate(self) -> float:
        return self.successes / self.trials if self.trials else 1.0

    @property
    def passed(self) -> bool:
        return not self.failures and not self.degenerate

    def to_lines(self) -> List[str]:
        lines = [
            "check=dense",
            f"subgroup={self.subgroup.value}",
            f"n={self.n}",
            f"trials={self.trials}",
            f"successes={self.successes}",
            f"failures={len(self.failures)}",
            f"degenerate={self.degenerate}",
            f"success_rate={self.success_rate:.4f}",
            f"mean_candidates={self.total_candidates / self.trials if self.trials else 0:.2f}",
        ]
        if self.failures:
            f, g = self.failures[0]
            lines.append(f"first_failure={format_word(f)} | {format_word(g)}")
        return lines


@dataclass
class LeastSummary:
    subgroup: SubgroupId
    candidate: BraidWord
    n: int
    trials: int
    checked: int = 0
    skipped: int = 0
    violations: int = 0
    first_counterexample: Optional[BraidWord] = None

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def to_lines(self) -> List[str]:
        lines = [
            "check=least",
            f"subgroup={self.subgroup.value}",
            f"candidate={format_word(self.candidate)}",
            f"n={self.n}",
            f"trials={self.trials}",
            f"checked={self.checked}",
            f"skipped={self.skipped}",
            f"violations={self.violations}",
        ]
        if self.first_counterexample is not None:
            lines.append(f"first_counterexample={format_word(self.first_counterexample)}")
        return lines


def _trial_rng(seed: int, trial: int) -> random.Random:
    return random.Random(f"{seed}:{trial}")


def _dense_trial(args) -> TrialOutcome:
    # Top level so it pickles into worker processes.
    sid, n, trial, seed, size, budget, length_cap, generators = args
    draw = sampler_for(sid, generators)
    rng = _trial_rng(seed, trial)
    for _ in range(_MAX_RESAMPLES):
        f = draw(n, size, rng.randrange(2 ** 32))
        g = draw(n, size, rng.randrange(2 ** 32))
        order = compare(f, g)
        if order is not OrderingResult.EQ:
            break
    else:
        return TrialOutcome(trial, False, 0)
    if order is OrderingResult.GT:
        f, g = g, f
    report = between(sid, f, g, budget, length_cap)
    return TrialOutcome(trial, report.found, report.candidates_tried, f, g)


def verify_dense(
    sid: SubgroupId,
    n: int,
    trials: int,
    seed: int = DEFAULTS.seed,
    workers: int = DEFAULTS.workers,
    generators: Optional[Sequence[BraidWord]] = None,
    budget: int = DEFAULTS.density_budget,
    length_cap: int = DEFAULTS.candidate_length_cap,
    size: int = DEFAULTS.sample_size,
    show_progress: bool = False,
) -> DenseSummary:
    """Sample pairs f < g and look for a subgroup element strictly between them."""
    _require_normal(sid)
    if n < 3:
        raise StrandCountError(f"density verification needs n >= 3, got {n}")
    if trials < 0:
        raise ValueError(f"trials must be non-negative, got {trials}")
    gens = tuple(generators) if generators else None
    sampler_for(sid, gens)

    summary = DenseSummary(sid, n, trials)
    jobs = [(sid, n, t, seed, size, budget, length_cap, gens) for t in range(trials)]
    bar = dict(total=trials, desc=f"dense {sid.value} B_{n}", disable=not show_progress, file=sys.stderr)
    if workers > 1 and trials > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(tqdm(pool.map(_dense_trial, jobs), **bar))
    else:
        outcomes = [_dense_trial(job) for job in tqdm(jobs, **bar)]

    for outcome in sorted(outcomes, key=lambda o: o.trial):
        summary.total_candidates += outcome.candidates_tried
        if outcome.f is None:
            summary.degenerate += 1
        elif outcome.found:
            summary.successes += 1
        else:
            summary.failures.append((outcome.f, outcome.g))
    if not summary.passed:
        logger.warning(
            f"[density] {sid.value} B_{n}: {len(summary.failures)} failures, {summary.degenerate} degenerate"
        )
    return summary


def verify_least(
    sid: SubgroupId,
    candidate: BraidWord,
    n: int,
    trials: int,
    seed: int = DEFAULTS.seed,
    size: int = DEFAULTS.sample_size,
    show_progress: bool = False,
) -> LeastSummary:
    """Check candidate <= w for sampled positive w in the subgroup."""
    if not sid.can_sample:
        raise UnsupportedOperationError(f"{sid.value} has no sampler")
    if candidate.n != n:
        raise StrandCountError(f"candidate has {candidate.n} strands, expected {n}")
    if trials < 0:
        raise ValueError(f"trials must be non-negative, got {trials}")
    _check_member(sid, candidate, "candidate")

    draw = sampler_for(sid)
    summary = LeastSummary(sid, candidate, n, trials)
    for trial in tqdm(range(trials), desc=f"least {sid.value} B_{n}", disable=not show_progress, file=sys.stderr):
        rng = _trial_rng(seed, trial)
        w = None
        for _ in range(_MAX_RESAMPLES):
            drawn = draw(n, size, rng.randrange(2 ** 32))
            sign = sigma_sign(drawn)
            if sign.is_trivial:
                continue
            w = drawn if sign.is_positive else inverse(drawn)
            break
        if w is None:
            summary.skipped += 1
            continue
        summary.checked += 1
        if compare(candidate, w) is OrderingResult.GT:
            summary.violations += 1
            if summary.first_counterexample is None:
                summary.first_counterexample = w
                logger.warning(f"[density] {format_word(w)} is positive and below {format_word(candidate)}")
    return summary
