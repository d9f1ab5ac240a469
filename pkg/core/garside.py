"""
garside.py  –  Distinguished braids: half twists, full twists, centralizer elements of
B_{r-1} in B_r, least-element candidates, Shepperd generators, periodic roots of the full
twist, and the homomorphism h: B_4 -> B_3.

Everything is emitted as an explicit word; equality is always left to core.ordering.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import List, Sequence, Union

from core.errors import StrandCountError, WordFormatError
from core.words import (
    BraidWord,
    embed_shift,
    generator,
    inverse,
    power,
    product,
)


@dataclass(frozen=True)
class FRZForm:
    """(σ_{r-1}..σ_2 σ_1^2 σ_2..σ_{r-1})^p Δ_{r-1}^{2q}, or (σ_2 σ_1^2 σ_2)^p σ_1^q when r = 3."""
    p: int
    q: int


@dataclass(frozen=True)
class UVForm:
    """Δ_r^{2u} Δ_{r-1}^{2v}, or Δ_3^{2u} σ_1^v when r = 3."""
    u: int
    v: int


@dataclass(frozen=True)
class CentralizerParams:
    r: int
    form: Union[FRZForm, UVForm]

    def __post_init__(self):
        if self.r < 3:
            raise StrandCountError(f"centralizer C(r) needs r >= 3, got {self.r}")


class CandidateFamily(Enum):
    DELTA = "delta"     # Δ_r^{2u}
    SIGMA1 = "sigma1"   # σ_1^u


class RootKind(Enum):
    DELTA = "delta"         # σ_1 σ_2 ... σ_{m-1}
    EPSILON = "epsilon"     # σ_1^2 σ_2 ... σ_{m-1}


def _check_target(k: int, target_n: int) -> None:
    if target_n < k:
        raise StrandCountError(f"B_{k} does not embed in B_{target_n}")


def delta(k: int, target_n: int) -> BraidWord:
    """Δ_k = (σ_{k-1}..σ_1)(σ_{k-1}..σ_2)...(σ_{k-1}) inside B_target_n."""
    if k < 1:
        raise StrandCountError(f"half twist needs k >= 1, got {k}")
    _check_target(k, target_n)
    letters = []
    for low in range(1, k):
        letters.extend(range(k - 1, low - 1, -1))
    return BraidWord(target_n, tuple(letters))


def full_twist(k: int, target_n: int, power_: int = 1) -> BraidWord:
    """Δ_k^{2·power}"""
    return power(delta(k, target_n), 2 * power_)


def _frz_block(r: int, target_n: int) -> BraidWord:
    # σ_{r-1} ... σ_2 σ_1^2 σ_2 ... σ_{r-1}
    down = list(range(r - 1, 0, -1))
    return BraidWord(target_n, tuple(down + down[::-1]))


def centralizer_element(params: CentralizerParams, target_n: int) -> BraidWord:
    r = params.r
    _check_target(r, target_n)
    form = params.form
    if isinstance(form, FRZForm):
        if r == 3:
            tail = power(generator(1, target_n), form.q)
        else:
            tail = full_twist(r - 1, target_n, form.q)
        return product([power(_frz_block(r, target_n), form.p), tail])
    if r == 3:
        tail = power(generator(1, target_n), form.v)
    else:
        tail = full_twist(r - 1, target_n, form.v)
    return product([full_twist(r, target_n, form.u), tail])


def change_of_variables(params: CentralizerParams) -> CentralizerParams:
    """FRZ(p, q) <-> UV(u, v) with u = p and v = q - 2p (r = 3) or v = q - p (r > 3)."""
    shift = 2 if params.r == 3 else 1
    form = params.form
    if isinstance(form, FRZForm):
        return CentralizerParams(params.r, UVForm(form.p, form.q - shift * form.p))
    return CentralizerParams(params.r, FRZForm(form.u, form.v + shift * form.u))


def least_element_candidates(
    n: int,
    r: int,
    u_max: int,
    family: CandidateFamily = CandidateFamily.DELTA,
) -> List[BraidWord]:
    """
    The only shapes a least positive element of a discretely ordered nontrivial normal
    subgroup of B_n can take: Δ_r^{2u} or σ_1^u for u >= 1.
    """
    if u_max < 1:
        raise ValueError(f"u_max must be at least 1, got {u_max}")
    if family is CandidateFamily.SIGMA1:
        if n < 2:
            raise StrandCountError("σ_1 needs at least 2 strands")
        return [power(generator(1, n), u) for u in range(1, u_max + 1)]
    if not 3 <= r <= n:
        raise StrandCountError(f"r must satisfy 3 <= r <= {n}, got {r}")
    return [full_twist(r, n, u) for u in range(1, u_max + 1)]


def homo_h(w: BraidWord) -> BraidWord:
    """h: B_4 -> B_3 with σ_1 -> σ_1, σ_2 -> σ_2, σ_3 -> σ_1."""
    if w.n != 4:
        raise StrandCountError(f"h is defined on B_4, got a {w.n}-strand word")
    return BraidWord(3, tuple((1 if e > 0 else -1) if abs(e) == 3 else e for e in w.letters))


def shepperd_generator(n: int, i: int) -> BraidWord:
    """β_i = Δ_i^2 sh^i(Δ_{n-i})^-2 for i < n, and β_n = Δ_n^2."""
    if n < 3:
        raise StrandCountError(f"Shepperd generators need n >= 3, got {n}")
    if not 1 <= i <= n:
        raise WordFormatError(f"Shepperd generator index {i} out of range 1..{n}")
    if i == n:
        return full_twist(n, n)
    shifted = embed_shift(delta(n - i, n - i), i, n)
    return product([full_twist(i, n), inverse(shifted), inverse(shifted)])


def shepperd_word(n: int, letters: Sequence[int]) -> BraidWord:
    """Product of β_{|e|}^{sign e} over the given signed indices: an element of H_n."""
    parts = []
    for e in letters:
        if e == 0 or abs(e) > n:
            raise WordFormatError(f"Shepperd letter {e} out of range 1..{n}")
        beta = shepperd_generator(n, abs(e))
        parts.append(beta if e > 0 else inverse(beta))
    return product(parts, n)


def periodic_root(m: int, kind: RootKind, target_n: int) -> BraidWord:
    """δ = σ_1..σ_{m-1} (δ^m = Δ_m^2) or ε = σ_1^2 σ_2..σ_{m-1} (ε^{m-1} = Δ_m^2)."""
    if m < 2:
        raise StrandCountError(f"periodic roots need m >= 2, got {m}")
    _check_target(m, target_n)
    letters = list(range(1, m))
    if kind is RootKind.EPSILON:
        letters.insert(0, 1)
    return BraidWord(target_n, tuple(letters))


def root_order(m: int, kind: RootKind) -> int:
    """The power of the periodic root that equals the full twist Δ_m^2."""
    return m if kind is RootKind.DELTA else m - 1
