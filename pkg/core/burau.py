"""
burau.py  –  Unreduced Burau representation ρ_n: B_n -> GL_n(Z[t, t^-1]).

σ_i acts as I_{i-1} ⊕ [[1-t, t], [1, 0]] ⊕ I_{n-i-1}, the 1-t entry at (i, i).
σ_i^-1 acts with the inverse block [[0, 1], [t^-1, 1-t^-1]].
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, List, Tuple

from core.laurent import ONE, T, T_INV, ZERO, LaurentPoly, laurent_mul
from core.words import BraidWord, exponent_sum


# Generator blocks, computed once.
SIGMA_BLOCK = ((ONE - T, T), (ONE, ZERO))
SIGMA_INV_BLOCK = ((ZERO, ONE), (T_INV, ONE - T_INV))


@dataclass(frozen=True)
class BurauMatrix:
    n: int
    entries: Tuple[Tuple[LaurentPoly, ...], ...]

    @classmethod
    def identity(cls, n: int) -> "BurauMatrix":
        return cls(n, tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def from_text(cls, text: str) -> "BurauMatrix":
        """Inverse of to_text: one row per line, entries separated by whitespace."""
        rows = tuple(tuple(LaurentPoly.parse(tok) for tok in line.split()) for line in text.strip().splitlines())
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError(f"Burau matrix text is not square: {[len(r) for r in rows]}")
        return cls(n, rows)

    def __matmul__(self, other: "BurauMatrix") -> "BurauMatrix":
        if self.n != other.n:
            raise ValueError(f"matrix sizes differ: {self.n} vs {other.n}")
        n = self.n
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = ZERO
                for k in range(n):
                    a, b = self.entries[i][k], other.entries[k][j]
                    if not a.is_zero() and not b.is_zero():
                        acc = acc + laurent_mul(a, b)
                row.append(acc)
            rows.append(tuple(row))
        return BurauMatrix(n, tuple(rows))

    def is_identity(self) -> bool:
        return self == BurauMatrix.identity(self.n)

    def to_text(self) -> str:
        """One row per line, entries separated by single spaces."""
        return "\n".join(" ".join(str(x) for x in row) for row in self.entries)


def burau_matrix(w: BraidWord) -> BurauMatrix:
    """ρ_n(w) as the product of generator images, applied as column operations."""
    n = w.n
    m: List[List[LaurentPoly]] = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    for e in w.letters:
        c = abs(e) - 1
        (a, b), (cc, d) = SIGMA_BLOCK if e > 0 else SIGMA_INV_BLOCK
        for row in m:
            x, y = row[c], row[c + 1]
            row[c] = _lin(x, a, y, cc)
            row[c + 1] = _lin(x, b, y, d)
    return BurauMatrix(n, tuple(tuple(row) for row in m))


def _lin(x: LaurentPoly, p: LaurentPoly, y: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    # x*p + y*q, skipping zero products
    acc = ZERO
    if not x.is_zero() and not p.is_zero():
        acc = acc + laurent_mul(x, p)
    if not y.is_zero() and not q.is_zero():
        acc = acc + laurent_mul(y, q)
    return acc


def determinant(m: BurauMatrix) -> LaurentPoly:
    """Laplace expansion along rows, memoised on the remaining column set (exact, division free)."""
    entries = m.entries
    n = m.n

    @lru_cache(maxsize=None)
    def minor(row: int, cols: FrozenSet[int]) -> LaurentPoly:
        if row == n:
            return ONE
        acc = ZERO
        for idx, col in enumerate(sorted(cols)):
            a = entries[row][col]
            if a.is_zero():
                continue
            sub = minor(row + 1, cols - {col})
            if sub.is_zero():
                continue
            term = laurent_mul(a, sub)
            acc = acc + term if idx % 2 == 0 else acc - term
        return acc

    return minor(0, frozenset(range(n)))


def burau_det(w: BraidWord) -> LaurentPoly:
    return determinant(burau_matrix(w))


def expected_det(w: BraidWord) -> LaurentPoly:
    """(-t)^{exponent sum}"""
    return LaurentPoly.monomial(-1, 1) ** exponent_sum(w)


def in_burau_kernel(w: BraidWord) -> bool:
    return burau_matrix(w).is_identity()
