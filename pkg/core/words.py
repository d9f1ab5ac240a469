"""
words.py  –  Braid words over the Artin generators and the combinatorial maps on them.

A word is a strand count n plus a tuple of signed generator indices: e > 0 is σ_e and
e < 0 is σ_|e|^-1. Words are plain free-group words; equality of braid elements is decided
in core.ordering.

CONVENTION: strands are tracked top to bottom while the word is read left to right. A
permutation's images[k-1] is the final position of the strand that starts at position k.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Sequence, Tuple

from core.errors import StrandCountError, WordFormatError

_INTEGER_TOKEN = re.compile(r"^-?\d+$")
_LETTER_TOKEN = re.compile(r"^s(\d+)(\^-1)?$")


class WordStyle(Enum):
    INTEGER = "integer"     # "1 -2 1"
    LETTER = "letter"       # "s1 s2^-1 s1"


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))
        if self.n < 1:
            raise StrandCountError(f"strand count must be at least 1, got {self.n}")
        for e in self.letters:
            if e == 0 or abs(e) > self.n - 1:
                raise WordFormatError(f"letter {e} is not a generator of B_{self.n}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return concat(self, other)

    def __str__(self) -> str:
        return format_word(self)


@dataclass(frozen=True)
class Permutation:
    images: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"{self.images} is not a permutation of 1..{len(self.images)}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def is_identity(self) -> bool:
        return all(img == k for k, img in enumerate(self.images, 1))

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for k, img in enumerate(self.images, 1):
            inv[img - 1] = k
        return Permutation(tuple(inv))


@dataclass(frozen=True)
class CrossingTable:
    e: Tuple[Tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.e)

    def __getitem__(self, pair: Tuple[int, int]) -> int:
        i, j = pair
        return self.e[i - 1][j - 1]

    def pair_total(self) -> int:
        return sum(self.e[i][j] for i in range(self.n) for j in range(i + 1, self.n))

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.e for v in row)


# ─────────────────────────────────────────────────────────────
# Parsing & formatting
# ─────────────────────────────────────────────────────────────
def _parse_token(token: str) -> int:
    if _INTEGER_TOKEN.match(token):
        value = int(token)
        if value == 0:
            raise WordFormatError("generator index must be at least 1, got 0")
        return value
    m = _LETTER_TOKEN.match(token)
    if m:
        index = int(m.group(1))
        if index < 1:
            raise WordFormatError(f"generator index must be at least 1 in {token!r}")
        return -index if m.group(2) else index
    raise WordFormatError(f"malformed braid letter {token!r}")


def parse_word(text: str, n: Optional[int] = None) -> BraidWord:
    """
    Parse "1 -2 1" or "s1 s2^-1 s1". Without n the strand count is one more than the
    largest index (an empty word is the identity of B_1).
    """
    letters = tuple(_parse_token(tok) for tok in text.split())
    needed = 1 + max((abs(e) for e in letters), default=0)
    if n is None:
        n = needed
    elif needed > n:
        raise WordFormatError(f"index {needed - 1} needs at least {needed} strands, got n={n}")
    return BraidWord(n, letters)


def format_word(w: BraidWord, style: WordStyle = WordStyle.INTEGER) -> str:
    if style is WordStyle.INTEGER:
        return " ".join(str(e) for e in w.letters)
    return " ".join(f"s{e}" if e > 0 else f"s{-e}^-1" for e in w.letters)


# ─────────────────────────────────────────────────────────────
# Group-level word operations
# ─────────────────────────────────────────────────────────────
def identity(n: int) -> BraidWord:
    return BraidWord(n, ())


def generator(i: int, n: int) -> BraidWord:
    return BraidWord(n, (i,))


def _check_same_n(a: BraidWord, b: BraidWord) -> None:
    if a.n != b.n:
        raise StrandCountError(f"strand counts differ: {a.n} vs {b.n}")


def concat(a: BraidWord, b: BraidWord) -> BraidWord:
    _check_same_n(a, b)
    return BraidWord(a.n, a.letters + b.letters)


def product(words: Sequence[BraidWord], n: Optional[int] = None) -> BraidWord:
    if not words:
        if n is None:
            raise StrandCountError("empty product needs an explicit strand count")
        return identity(n)
    n = words[0].n if n is None else n
    letters = []
    for w in words:
        if w.n != n:
            raise StrandCountError(f"strand counts differ: {n} vs {w.n}")
        letters.extend(w.letters)
    return BraidWord(n, tuple(letters))


def inverse(w: BraidWord) -> BraidWord:
    return BraidWord(w.n, tuple(-e for e in reversed(w.letters)))


def power(w: BraidWord, k: int) -> BraidWord:
    base = w if k >= 0 else inverse(w)
    return BraidWord(w.n, base.letters * abs(k))


def commutator(a: BraidWord, b: BraidWord) -> BraidWord:
    """a b a^-1 b^-1"""
    return product([a, b, inverse(a), inverse(b)])


def conjugate(w: BraidWord, g: BraidWord) -> BraidWord:
    """g w g^-1"""
    return product([g, w, inverse(g)])


def free_reduce_letters(letters: Iterable[int]) -> Tuple[int, ...]:
    stack = []
    for e in letters:
        if stack and stack[-1] == -e:
            stack.pop()
        else:
            stack.append(e)
    return tuple(stack)


def free_reduce(w: BraidWord) -> BraidWord:
    return BraidWord(w.n, free_reduce_letters(w.letters))


def exponent_sum(w: BraidWord) -> int:
    return sum(1 if e > 0 else -1 for e in w.letters)


def embed_shift(w: BraidWord, offset: int, target_n: int) -> BraidWord:
    """sh^offset followed by the inclusion into B_target_n (offset 0 is the plain inclusion)."""
    if offset < 0:
        raise StrandCountError(f"shift offset must be non-negative, got {offset}")
    if target_n < w.n + offset:
        raise StrandCountError(
            f"cannot shift a {w.n}-strand word by {offset} into B_{target_n}"
        )
    return BraidWord(target_n, tuple(e + offset if e > 0 else e - offset for e in w.letters))


# ─────────────────────────────────────────────────────────────
# Strand tracking
# ─────────────────────────────────────────────────────────────
def permutation(w: BraidWord) -> Permutation:
    strand_at = list(range(1, w.n + 1))
    for e in w.letters:
        i = abs(e)
        strand_at[i - 1], strand_at[i] = strand_at[i], strand_at[i - 1]
    images = [0] * w.n
    for pos, strand in enumerate(strand_at, 1):
        images[strand - 1] = pos
    return Permutation(tuple(images))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """p then q, so permutation(a * b) == compose(permutation(a), permutation(b))."""
    if p.n != q.n:
        raise StrandCountError(f"permutation sizes differ: {p.n} vs {q.n}")
    return Permutation(tuple(q(p(k)) for k in range(1, p.n + 1)))


def remove_strand(w: BraidWord, k: int) -> BraidWord:
    """Delete the strand that starts at position k, dropping its crossings and reindexing the rest."""
    if w.n < 2:
        raise StrandCountError("removing a strand needs at least 2 strands")
    if not 1 <= k <= w.n:
        raise StrandCountError(f"strand {k} out of range 1..{w.n}")
    pos = k
    kept = []
    for e in w.letters:
        i = abs(e)
        if pos == i:
            pos = i + 1
        elif pos == i + 1:
            pos = i
        elif i + 1 < pos:
            kept.append(e)
        else:
            kept.append(e - 1 if e > 0 else e + 1)
    return BraidWord(w.n - 1, tuple(kept))


def crossing_table(w: BraidWord) -> CrossingTable:
    e = [[0] * w.n for _ in range(w.n)]
    strand_at = list(range(w.n))
    for letter in w.letters:
        i = abs(letter)
        s, t = strand_at[i - 1], strand_at[i]
        sign = 1 if letter > 0 else -1
        e[s][t] += sign
        e[t][s] += sign
        strand_at[i - 1], strand_at[i] = t, s
    return CrossingTable(tuple(tuple(row) for row in e))


def linking_numbers(w: BraidWord) -> Tuple[Tuple[int, ...], ...]:
    """Pairwise linking numbers of a pure braid (half the crossing counts)."""
    if not permutation(w).is_identity():
        raise WordFormatError("linking numbers are only defined for pure braids")
    table = crossing_table(w)
    return tuple(tuple(v // 2 for v in row) for row in table.e)


# ─────────────────────────────────────────────────────────────
# Random words
# ─────────────────────────────────────────────────────────────
def random_word(n: int, length: int, rng: random.Random) -> BraidWord:
    if n < 2:
        return identity(n)
    letters = tuple(rng.randint(1, n - 1) * rng.choice((1, -1)) for _ in range(length))
    return BraidWord(n, letters)
