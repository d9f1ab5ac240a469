"""
ordering.py  –  Dehornoy sign of a braid word via handle reduction.

Indexing follows the "largest generator decides" convention: a word is i-positive when it
only uses σ_1..σ_i and σ_i occurs, always with exponent +1.

A σ_i-handle is a subword σ_i^e u σ_i^-e where u only uses σ_1..σ_{i-1}. Reducing it
deletes the two ends and replaces every σ_{i-1}^d in u by σ_{i-1}^-e σ_i^d σ_{i-1}^e.
We always reduce the handle whose right end comes first; such a handle contains no other
handle, hence is permitted, and sequences of permitted reductions terminate. A word with
no handles is empty or visibly σ-positive / σ-negative in its largest index.
"""

from __future__ import annotations

import functools
import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence, Tuple

from core.config import DEFAULTS
from core.errors import BudgetExceededError, StrandCountError
from core.words import BraidWord, concat, free_reduce_letters, generator, inverse

logger = logging.getLogger(__name__)


class SignKind(Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    TRIVIAL = "trivial"


@dataclass(frozen=True)
class SigmaSign:
    kind: SignKind
    index: Optional[int] = None     # main generator index, None for TRIVIAL

    @classmethod
    def positive(cls, i: int) -> "SigmaSign":
        return cls(SignKind.POSITIVE, i)

    @classmethod
    def negative(cls, i: int) -> "SigmaSign":
        return cls(SignKind.NEGATIVE, i)

    @classmethod
    def trivial(cls) -> "SigmaSign":
        return cls(SignKind.TRIVIAL)

    @property
    def is_positive(self) -> bool:
        return self.kind is SignKind.POSITIVE

    @property
    def is_negative(self) -> bool:
        return self.kind is SignKind.NEGATIVE

    @property
    def is_trivial(self) -> bool:
        return self.kind is SignKind.TRIVIAL

    def flipped(self) -> "SigmaSign":
        if self.is_positive:
            return SigmaSign.negative(self.index)
        if self.is_negative:
            return SigmaSign.positive(self.index)
        return self

    def __str__(self) -> str:
        if self.is_trivial:
            return "trivial"
        return f"{self.kind.value}:{self.index}"


class OrderingResult(Enum):
    LT = "LT"
    EQ = "EQ"
    GT = "GT"


@dataclass(frozen=True)
class ReductionResult:
    word: BraidWord
    steps: int          # handle reductions performed
    max_length: int     # longest intermediate word


# ─────────────────────────────────────────────────────────────
# Handle reduction engine
# ─────────────────────────────────────────────────────────────
def _reduce_letters(letters: Sequence[int], budget: int) -> Tuple[List[int], int, int]:
    w = list(free_reduce_letters(letters))
    max_length = len(w)
    steps = 0

    # stack_before[q] is the "previous letter with index >= |w[q]|" stack as it stood before
    # position q was scanned; a persistent linked list of (position, rest) cells so that we can
    # resume at any earlier position after a rewrite.
    stack_before: List[Optional[tuple]] = [None]
    q = 0
    while q < len(w):
        x = w[q]
        a = abs(x)
        node = stack_before[q]
        while node is not None and abs(w[node[0]]) < a:
            node = node[1]

        if node is not None and abs(w[node[0]]) == a and w[node[0]] == -x:
            p = node[0]
            steps += 1
            if steps > budget:
                raise BudgetExceededError(steps - 1, budget, len(w))

            e = 1 if w[p] > 0 else -1
            below = a - 1
            replacement = []
            for y in w[p + 1:q]:
                if abs(y) == below:
                    d = 1 if y > 0 else -1
                    replacement.extend((-e * below, d * a, e * below))
                else:
                    replacement.append(y)

            # Splice with free reduction at both seams; `restart` is the lowest position touched.
            out = w[:p]
            restart = p
            for y in replacement:
                if out and out[-1] == -y:
                    out.pop()
                    restart = min(restart, len(out))
                else:
                    out.append(y)
            tail = w[q + 1:]
            t = 0
            while t < len(tail) and out and out[-1] == -tail[t]:
                out.pop()
                restart = min(restart, len(out))
                t += 1
            out.extend(tail[t:])
            w = out
            max_length = max(max_length, len(w))

            del stack_before[restart + 1:]
            q = restart
            continue

        if node is not None and abs(w[node[0]]) == a:
            node = node[1]
        stack_before.append((q, node))
        q += 1

    logger.debug(f"[reduce] {len(letters)} letters -> {len(w)} in {steps} steps (peak {max_length})")
    return w, steps, max_length


def reduce_with_stats(w: BraidWord, step_budget: int = DEFAULTS.step_budget) -> ReductionResult:
    if step_budget <= 0:
        raise ValueError(f"step budget must be positive, got {step_budget}")
    letters, steps, max_length = _reduce_letters(w.letters, step_budget)
    return ReductionResult(BraidWord(w.n, tuple(letters)), steps, max_length)


def handle_reduce(w: BraidWord, step_budget: int = DEFAULTS.step_budget) -> BraidWord:
    """Equivalent handle-free word: empty, or σ-definite in its largest index."""
    return reduce_with_stats(w, step_budget).word


def word_sign(letters: Sequence[int]) -> SigmaSign:
    """Sign read off a handle-free word."""
    if not letters:
        return SigmaSign.trivial()
    top = max(abs(e) for e in letters)
    for e in letters:
        if e == top:
            return SigmaSign.positive(top)
        if e == -top:
            return SigmaSign.negative(top)
    raise AssertionError("unreachable")


def sigma_sign(w: BraidWord, step_budget: int = DEFAULTS.step_budget) -> SigmaSign:
    return word_sign(handle_reduce(w, step_budget).letters)


def is_trivial(w: BraidWord, step_budget: int = DEFAULTS.step_budget) -> bool:
    return sigma_sign(w, step_budget).is_trivial


def is_positive(w: BraidWord, step_budget: int = DEFAULTS.step_budget) -> bool:
    return sigma_sign(w, step_budget).is_positive


def words_equal(a: BraidWord, b: BraidWord, step_budget: int = DEFAULTS.step_budget) -> bool:
    """Whether two words represent the same braid."""
    return compare(a, b, step_budget) is OrderingResult.EQ


def compare(a: BraidWord, b: BraidWord, step_budget: int = DEFAULTS.step_budget) -> OrderingResult:
    """a < b iff a^-1 b is σ-positive."""
    if a.n != b.n:
        raise StrandCountError(f"cannot compare braids on {a.n} and {b.n} strands")
    sign = sigma_sign(concat(inverse(a), b), step_budget)
    if sign.is_positive:
        return OrderingResult.LT
    if sign.is_negative:
        return OrderingResult.GT
    return OrderingResult.EQ


def sort_words(words: Sequence[BraidWord], step_budget: int = DEFAULTS.step_budget) -> List[BraidWord]:
    order = {OrderingResult.LT: -1, OrderingResult.EQ: 0, OrderingResult.GT: 1}
    key = functools.cmp_to_key(lambda a, b: order[compare(a, b, step_budget)])
    return sorted(words, key=key)


# In the whole of B_n the ordering is discrete with least positive element σ_1,
# so right multiplication by σ_1^{±1} gives the immediate neighbours.
def successor(g: BraidWord) -> BraidWord:
    return concat(g, generator(1, g.n))


def predecessor(g: BraidWord) -> BraidWord:
    return concat(g, inverse(generator(1, g.n)))
