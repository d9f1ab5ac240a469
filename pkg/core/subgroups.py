"""
subgroups.py  –  Membership predicates and seeded samplers for normal subgroups of B_n.

Which subgroups can be decided and which can only be sampled:

    commutator        decide + sample   exponent sum zero
    pure              decide + sample   trivial permutation
    pure-commutator   sample            [P_n, P_n]
    brunnian          decide            every single-strand deletion is trivial
    burau-kernel      decide            ρ_n(w) = I_n
    ker-h4            decide + sample   h(w) trivial in B_3 (n = 4 only)
    shepperd          sample            H_n, generated by the β_i
"""

from __future__ import annotations

import itertools
import logging
import random
from enum import Enum
from typing import List, Optional, Sequence

from core.burau import in_burau_kernel
from core.config import DEFAULTS
from core.errors import PreconditionError, StrandCountError, UnsupportedOperationError
from core.garside import homo_h, shepperd_word
from core.ordering import is_trivial
from core.words import (
    BraidWord,
    commutator,
    conjugate,
    crossing_table,
    exponent_sum,
    free_reduce,
    free_reduce_letters,
    inverse,
    permutation,
    product,
    random_word,
    remove_strand,
)

logger = logging.getLogger(__name__)


class SubgroupId(Enum):
    COMMUTATOR = "commutator"
    PURE = "pure"
    PURE_COMMUTATOR = "pure-commutator"
    BRUNNIAN = "brunnian"
    BURAU_KERNEL = "burau-kernel"
    KER_H4 = "ker-h4"
    SHEPPERD = "shepperd"

    @property
    def can_decide(self) -> bool:
        return self in _DECIDABLE

    @property
    def can_sample(self) -> bool:
        return self in _SAMPLEABLE

    @property
    def is_normal(self) -> bool:
        """Normal in B_n. H_n is not, so commutators with arbitrary braids can leave it."""
        return self is not SubgroupId.SHEPPERD

    @classmethod
    def from_token(cls, token: str) -> "SubgroupId":
        try:
            return cls(token)
        except ValueError:
            names = ", ".join(s.value for s in cls)
            raise UnsupportedOperationError(f"unknown subgroup {token!r} (expected one of {names})") from None


_DECIDABLE = {
    SubgroupId.COMMUTATOR, SubgroupId.PURE, SubgroupId.BRUNNIAN,
    SubgroupId.BURAU_KERNEL, SubgroupId.KER_H4,
}
_SAMPLEABLE = {
    SubgroupId.COMMUTATOR, SubgroupId.PURE, SubgroupId.PURE_COMMUTATOR,
    SubgroupId.KER_H4, SubgroupId.SHEPPERD,
}


# ─────────────────────────────────────────────────────────────
# Deciding
# ─────────────────────────────────────────────────────────────
def is_brunnian(w: BraidWord, step_budget: int = DEFAULTS.step_budget) -> bool:
    if w.n < 2:
        return True
    return all(is_trivial(remove_strand(w, k), step_budget) for k in range(1, w.n + 1))


def decide(sid: SubgroupId, w: BraidWord, step_budget: int = DEFAULTS.step_budget) -> bool:
    if not sid.can_decide:
        raise UnsupportedOperationError(f"membership in {sid.value} cannot be decided, only sampled")
    if sid is SubgroupId.COMMUTATOR:
        return exponent_sum(w) == 0
    if sid is SubgroupId.PURE:
        return permutation(w).is_identity()
    if sid is SubgroupId.BRUNNIAN:
        return is_brunnian(w, step_budget)
    if sid is SubgroupId.BURAU_KERNEL:
        return in_burau_kernel(w)
    if w.n != 4:
        raise StrandCountError(f"ker-h4 lives in B_4, got a {w.n}-strand word")
    return is_trivial(homo_h(w), step_budget)


def membership_certificate(sid: SubgroupId, w: BraidWord, step_budget: int = DEFAULTS.step_budget) -> bool:
    """
    decide() where available. Sample-only subgroups fall back to decidable necessary
    conditions: pure and exponent sum 0 for [P_n, P_n], pure for H_n. Only for a normal
    subgroup does that suffice to accept a commutator witness; H_n is not normal, so the
    density searches refuse it.
    """
    if sid.can_decide:
        return decide(sid, w, step_budget)
    if sid is SubgroupId.PURE_COMMUTATOR:
        return decide(SubgroupId.PURE, w) and decide(SubgroupId.COMMUTATOR, w)
    return decide(SubgroupId.PURE, w)


def linking_check_brunnian(w: BraidWord) -> bool:
    """True iff every pair of strands crosses with zero signed total (pure braids only)."""
    if not permutation(w).is_identity():
        raise PreconditionError("linking numbers need a pure braid")
    return crossing_table(w).is_zero()


def find_brunnian(
    n: int,
    max_length: int,
    step_budget: int = DEFAULTS.step_budget,
) -> List[BraidWord]:
    """Every freely reduced, nontrivial Brunnian word in B_n of length <= max_length."""
    if n < 3:
        raise StrandCountError("nontrivial Brunnian search needs n >= 3")
    alphabet = [s * i for i in range(1, n) for s in (1, -1)]
    found = []
    for length in range(2, max_length + 1, 2):
        for letters in itertools.product(alphabet, repeat=length):
            if free_reduce_letters(letters) != letters:
                continue
            w = BraidWord(n, letters)
            if exponent_sum(w) != 0 or not permutation(w).is_identity():
                continue
            if is_brunnian(w, step_budget) and not is_trivial(w, step_budget):
                found.append(w)
    logger.info(f"[brunnian] {len(found)} nontrivial words in B_{n} up to length {max_length}")
    return found


# ─────────────────────────────────────────────────────────────
# Sampling
# ─────────────────────────────────────────────────────────────
def _short_word(n: int, rng: random.Random, max_length: int = 3) -> BraidWord:
    return random_word(n, rng.randint(1, max_length), rng)


def _purifier(w: BraidWord) -> BraidWord:
    """A positive word u with permutation(w * u) trivial (bubble sort of the strands)."""
    strand_at = [0] * w.n
    for strand, pos in enumerate(permutation(w).images, 1):
        strand_at[pos - 1] = strand
    letters = []
    swapped = True
    while swapped:
        swapped = False
        for i in range(w.n - 1):
            if strand_at[i] > strand_at[i + 1]:
                strand_at[i], strand_at[i + 1] = strand_at[i + 1], strand_at[i]
                letters.append(i + 1)
                swapped = True
    return BraidWord(w.n, tuple(letters))


def _sample_pure(n: int, size: int, rng: random.Random) -> BraidWord:
    w = random_word(n, max(1, 2 * size), rng)
    return product([w, _purifier(w)])


def _sample_ker_h4(size: int, rng: random.Random) -> BraidWord:
    relator = BraidWord(4, (1, -3))
    parts = []
    for _ in range(size):
        r = relator if rng.random() < 0.5 else inverse(relator)
        parts.append(conjugate(r, _short_word(4, rng)))
    return product(parts, 4)


def sample(
    sid: SubgroupId,
    n: int,
    size: int = DEFAULTS.sample_size,
    seed: int = DEFAULTS.seed,
) -> BraidWord:
    """A freely reduced element of the subgroup; deterministic for a fixed seed."""
    if not sid.can_sample:
        raise UnsupportedOperationError(f"{sid.value} can be decided but has no sampler")
    if n < 2:
        raise StrandCountError(f"sampling needs at least 2 strands, got {n}")
    if size < 1:
        raise ValueError(f"sample size must be positive, got {size}")
    rng = random.Random(seed)

    if sid is SubgroupId.COMMUTATOR:
        parts = [commutator(_short_word(n, rng), _short_word(n, rng)) for _ in range(size)]
        w = product(parts, n)
    elif sid is SubgroupId.PURE:
        w = _sample_pure(n, size, rng)
    elif sid is SubgroupId.PURE_COMMUTATOR:
        parts = [
            commutator(_sample_pure(n, 1, rng), _sample_pure(n, 1, rng))
            for _ in range(size)
        ]
        w = product(parts, n)
    elif sid is SubgroupId.KER_H4:
        if n != 4:
            raise StrandCountError(f"ker-h4 lives in B_4, got n={n}")
        w = _sample_ker_h4(size, rng)
    else:
        if n < 3:
            raise StrandCountError(f"the Shepperd subgroup needs n >= 3, got {n}")
        letters = [rng.randint(1, n) * rng.choice((1, -1)) for _ in range(size)]
        w = shepperd_word(n, letters)
    return free_reduce(w)


def sample_from_generators(
    generators: Sequence[BraidWord],
    n: int,
    size: int = DEFAULTS.sample_size,
    seed: int = DEFAULTS.seed,
) -> BraidWord:
    """Random product of conjugates of the given elements: a sampler for their normal closure."""
    if not generators:
        raise PreconditionError("need at least one generator to sample a normal closure")
    rng = random.Random(seed)
    parts = []
    for _ in range(size):
        g = rng.choice(generators)
        if g.n != n:
            raise StrandCountError(f"generator on {g.n} strands, expected {n}")
        if rng.random() < 0.5:
            g = inverse(g)
        parts.append(conjugate(g, _short_word(n, rng)))
    return free_reduce(product(parts, n))


def sampler_for(
    sid: SubgroupId,
    generators: Optional[Sequence[BraidWord]] = None,
):
    """(n, size, seed) -> word for this subgroup: its own sampler, or a normal-closure sampler."""
    if generators:
        return lambda n, size, seed: sample_from_generators(generators, n, size, seed)
    if not sid.can_sample:
        raise UnsupportedOperationError(f"{sid.value} has no sampler; pass generators")
    return lambda n, size, seed: sample(sid, n, size, seed)
