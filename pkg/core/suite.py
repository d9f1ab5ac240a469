"""
suite.py  –  End-to-end verification run over every claim the toolkit can check.

Checks run in a fixed order and each yields a CheckResult; the report is one line per check.
A failed check never raises, it is reported and turns the exit status to 1.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Tuple

from core.burau import BurauMatrix, burau_det, burau_matrix, expected_det, in_burau_kernel
from core.config import DEFAULTS
from core.density import verify_dense, verify_least
from core.garside import (
    CentralizerParams,
    FRZForm,
    centralizer_element,
    change_of_variables,
    full_twist,
)
from core.laurent import ONE
from core.ordering import OrderingResult, compare, is_trivial, sigma_sign, successor, words_equal
from core.subgroups import SubgroupId, decide, find_brunnian, linking_check_brunnian, sample
from core.words import (
    BraidWord,
    crossing_table,
    exponent_sum,
    generator,
    inverse,
    product,
    random_word,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SuiteConfig:
    trials: int = DEFAULTS.suite_trials
    seed: int = DEFAULTS.seed
    n_min: int = 3
    n_max: int = 5
    workers: int = DEFAULTS.workers
    show_progress: bool = False

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError(f"trials must be positive, got {self.trials}")
        if not 3 <= self.n_min <= self.n_max:
            raise ValueError(f"need 3 <= n_min <= n_max, got {self.n_min}..{self.n_max}")


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    violations: int = 0
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def record(self, ok: bool, detail: str = "") -> None:
        self.cases += 1
        if not ok:
            self.violations += 1
            if not self.detail:
                self.detail = detail

    def to_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.name} cases={self.cases} violations={self.violations}"
        return f"{line} first={self.detail}" if self.detail else line


@dataclass
class SuiteReport:
    results: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_lines(self) -> List[str]:
        lines = [r.to_line() for r in self.results]
        failed = sum(not r.passed for r in self.results)
        lines.append(f"summary checks={len(self.results)} failed={failed}")
        return lines


def _relators(n: int) -> List[BraidWord]:
    out = []
    for i in range(1, n):
        for j in range(i + 2, n):
            out.append(BraidWord(n, (i, j, -i, -j)))
        if i + 1 < n:
            out.append(BraidWord(n, (i, i + 1, i, -(i + 1), -i, -(i + 1))))
    return out


def _random_positive(n: int, rng: random.Random, max_length: int = 8) -> BraidWord:
    letters = tuple(rng.randint(1, n - 1) for _ in range(rng.randint(1, max_length)))
    return BraidWord(n, letters)


# ─────────────────────────────────────────────────────────────
# Individual checks
# ─────────────────────────────────────────────────────────────
def check_relations(cfg: SuiteConfig, rng: random.Random) -> CheckResult:
    result = CheckResult("relation-soundness")
    for n in range(cfg.n_min, cfg.n_max + 1):
        for rel in _relators(n):
            result.record(is_trivial(rel), str(rel))
        for _ in range(cfg.trials):
            w = random_word(n, rng.randint(0, 12), rng)
            rel = rng.choice(_relators(n))
            cut = rng.randint(0, len(w))
            spliced = BraidWord(n, w.letters[:cut] + rel.letters + w.letters[cut:])
            result.record(words_equal(w, spliced), str(spliced))
            result.record(is_trivial(product([w, inverse(w)])), str(w))
            result.record(crossing_table(w).pair_total() == exponent_sum(w), f"crossings {w}")
    return result


def check_trichotomy(cfg: SuiteConfig, rng: random.Random) -> CheckResult:
    result = CheckResult("trichotomy")
    for _ in range(cfg.trials * 4):
        n = rng.randint(cfg.n_min, cfg.n_max)
        a = random_word(n, rng.randint(0, 20), rng)
        b = random_word(n, rng.randint(0, 20), rng)
        result.record(sigma_sign(inverse(a)) == sigma_sign(a).flipped(), str(a))
        ab, ba = compare(a, b), compare(b, a)
        flipped = {OrderingResult.LT: OrderingResult.GT, OrderingResult.GT: OrderingResult.LT}
        result.record(flipped.get(ab, OrderingResult.EQ) is ba, f"{a} | {b}")
    return result


def check_discreteness(cfg: SuiteConfig, rng: random.Random) -> CheckResult:
    """σ_1 is the least positive braid, and g·σ_1 is the successor of g."""
    result = CheckResult("sigma1-least")
    for _ in range(cfg.trials * 2):
        n = rng.randint(cfg.n_min, cfg.n_max)
        w = _random_positive(n, rng)
        if w.letters == (1,):
            continue
        result.record(compare(generator(1, n), w) is OrderingResult.LT, str(w))
        g = random_word(n, rng.randint(0, 10), rng)
        result.record(compare(g, successor(g)) is OrderingResult.LT, str(g))
    return result


def check_centralizers(cfg: SuiteConfig, rng: random.Random) -> CheckResult:
    result = CheckResult("centralizer")
    for r in range(3, min(cfg.n_max, 5) + 1):
        for p in range(-2, 3):
            for q in range(-2, 3):
                params = CentralizerParams(r, FRZForm(p, q))
                c = centralizer_element(params, r)
                other = centralizer_element(change_of_variables(params), r)
                result.record(words_equal(c, other), f"r={r} p={p} q={q}")
                for j in range(1, r - 1):
                    s = generator(j, r)
                    result.record(words_equal(product([c, s]), product([s, c])), f"r={r} p={p} q={q} j={j}")
    return result


def check_burau(cfg: SuiteConfig, rng: random.Random) -> CheckResult:
    result = CheckResult("burau")
    for n in range(3, cfg.n_max + 1):
        for rel in _relators(n):
            result.record(burau_matrix(rel).is_identity(), str(rel))
    for _ in range(cfg.trials):
        n = rng.randint(cfg.n_min, cfg.n_max)
        w = random_word(n, rng.randint(0, 12), rng)
        result.record(burau_det(w) == expected_det(w), str(w))
    printed = BurauMatrix.from_text("1 0 0\n0 1-t t\n0 1 0")
    result.record(burau_matrix(generator(2, 3)) == printed, "rho_3(sigma_2)")
    return result


def check_containments(cfg: SuiteConfig, rng: random.Random) -> Tuple[CheckResult, List[BraidWord]]:
    result = CheckResult("containments")
    for _ in range(cfg.trials):
        seed = rng.randrange(2 ** 32)
        k = sample(SubgroupId.KER_H4, 4, seed=seed)
        result.record(decide(SubgroupId.COMMUTATOR, k), f"ker-h4 {k}")
        n = rng.randint(cfg.n_min, cfg.n_max)
        p = sample(SubgroupId.PURE, n, seed=seed)
        result.record(decide(SubgroupId.PURE, p), f"pure {p}")
        pc = sample(SubgroupId.PURE_COMMUTATOR, n, seed=seed)
        result.record(decide(SubgroupId.PURE, pc) and decide(SubgroupId.COMMUTATOR, pc), f"pure-commutator {pc}")
        h = sample(SubgroupId.SHEPPERD, n, seed=seed)
        result.record(decide(SubgroupId.PURE, h), f"shepperd {h}")
        w = random_word(n, rng.randint(0, 10), rng)
        if in_burau_kernel(w):
            result.record(burau_det(w) == ONE and exponent_sum(w) == 0, f"burau-kernel {w}")

    brunnian = find_brunnian(3, 6)
    result.record(bool(brunnian), "no nontrivial Brunnian word of length <= 6 in B_3")
    for b in brunnian:
        result.record(decide(SubgroupId.COMMUTATOR, b), f"brunnian {b}")
        result.record(linking_check_brunnian(b), f"brunnian linking {b}")
    return result, brunnian


def check_least(cfg: SuiteConfig) -> CheckResult:
    result = CheckResult("least-element")
    for n in range(cfg.n_min, cfg.n_max + 1):
        summary = verify_least(
            SubgroupId.PURE, full_twist(2, n), n, cfg.trials, cfg.seed, show_progress=cfg.show_progress,
        )
        result.cases += summary.checked
        result.violations += summary.violations
        if summary.first_counterexample is not None and not result.detail:
            result.detail = f"pure {summary.first_counterexample}"
    for n in (3, 4):
        summary = verify_least(
            SubgroupId.SHEPPERD, full_twist(n - 1, n), n, cfg.trials, cfg.seed, show_progress=cfg.show_progress,
        )
        result.cases += summary.checked
        result.violations += summary.violations
        if summary.first_counterexample is not None and not result.detail:
            result.detail = f"shepperd {summary.first_counterexample}"
    return result


def check_density(cfg: SuiteConfig, brunnian: List[BraidWord]) -> CheckResult:
    result = CheckResult("density")
    runs = [(SubgroupId.COMMUTATOR, n, None) for n in range(cfg.n_min, min(cfg.n_max, 4) + 1)]
    runs.append((SubgroupId.KER_H4, 4, None))
    runs.append((SubgroupId.PURE_COMMUTATOR, 3, None))
    if brunnian:
        runs.append((SubgroupId.BRUNNIAN, 3, brunnian[:1]))
    for sid, n, gens in runs:
        summary = verify_dense(
            sid, n, cfg.trials, cfg.seed, cfg.workers, generators=gens, show_progress=cfg.show_progress,
        )
        result.cases += summary.trials
        result.violations += len(summary.failures) + summary.degenerate
        if summary.failures and not result.detail:
            f, g = summary.failures[0]
            result.detail = f"{sid.value} {f} | {g}"
    return result


# ─────────────────────────────────────────────────────────────
# Runner
# ─────────────────────────────────────────────────────────────
def run_verification_suite(
    cfg: Optional[SuiteConfig] = None,
    on_result: Optional[Callable[[CheckResult], None]] = None,
) -> SuiteReport:
    cfg = cfg or SuiteConfig()
    rng = random.Random(cfg.seed)
    report = SuiteReport()

    def add(result: CheckResult) -> None:
        level = logging.INFO if result.passed else logging.WARNING
        logger.log(level, f"[suite] {result.to_line()}")
        report.results.append(result)
        if on_result:
            on_result(result)

    add(check_relations(cfg, rng))
    add(check_trichotomy(cfg, rng))
    add(check_discreteness(cfg, rng))
    add(check_centralizers(cfg, rng))
    add(check_burau(cfg, rng))
    containments, brunnian = check_containments(cfg, rng)
    add(containments)
    add(check_least(cfg))
    add(check_density(cfg, brunnian))
    return report
