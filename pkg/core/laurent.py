"""
laurent.py  –  Integer Laurent polynomials in one variable t.

Sparse map exponent -> nonzero coefficient; Python ints keep coefficients exact.
Text form lists terms by ascending exponent: "t^-1", "1-t", "t-t^2", "0".
"""

from __future__ import annotations

import re
from typing import Dict, Mapping, Union

from core.errors import WordFormatError

_TERM = re.compile(r"([+-]?)(\d*)(t(?:\^(-?\d+))?)?")

Number = Union[int, "LaurentPoly"]


class LaurentPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] = None):
        self._terms: Dict[int, int] = {k: c for k, c in (terms or {}).items() if c != 0}
        self._hash = None

    # ── constructors ──────────────────────────────────────────
    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, c: int, k: int) -> "LaurentPoly":
        return cls({k: c})

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        s = text.replace(" ", "")
        if s in ("", "0"):
            return cls()
        terms: Dict[int, int] = {}
        pos = 0
        while pos < len(s):
            m = _TERM.match(s, pos)
            if not m or m.end() == pos or (not m.group(2) and not m.group(3)):
                raise WordFormatError(f"malformed Laurent polynomial {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            if pos > 0 and not m.group(1):
                raise WordFormatError(f"malformed Laurent polynomial {text!r}")
            coeff = int(m.group(2)) if m.group(2) else 1
            if m.group(3):
                exp = int(m.group(4)) if m.group(4) is not None else 1
            else:
                exp = 0
            terms[exp] = terms.get(exp, 0) + sign * coeff
            pos = m.end()
        return cls(terms)

    # ── views ─────────────────────────────────────────────────
    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    # ── arithmetic ────────────────────────────────────────────
    @staticmethod
    def _coerce(other: Number) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other)
        return NotImplemented

    def __add__(self, other: Number) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: Number) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: Number) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other: Number) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return laurent_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if not self.is_monomial():
                raise ValueError("only monomials are units in Z[t, t^-1]")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("only ±t^k are units in Z[t, t^-1]")
            return LaurentPoly({e * k: c ** (-k)})
        result = LaurentPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, c in sorted(self._terms.items()):
            if k == 0:
                body = str(abs(c))
            else:
                var = "t" if k == 1 else f"t^{k}"
                body = var if abs(c) == 1 else f"{abs(c)}{var}"
            sign = "-" if c < 0 else "+"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{sign}{body}")
        return "".join(parts)


def laurent_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    out: Dict[int, int] = {}
    for ka, ca in a._terms.items():
        for kb, cb in b._terms.items():
            k = ka + kb
            out[k] = out.get(k, 0) + ca * cb
    return LaurentPoly(out)


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
T = LaurentPoly.monomial(1, 1)
T_INV = LaurentPoly.monomial(1, -1)
