"""Sparse integer Laurent polynomials in one variable."""

from __future__ import annotations

import re
from typing import Iterable, Mapping


class LaurentPoly:
    """Immutable polynomial ``sum c_k A^k`` with integer ``k`` and nonzero integer ``c_k``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        acc: dict[int, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = {e: c for e, c in sorted(acc.items()) if c}
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPoly:
        return cls({exponent: coeff})

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def min_exponent(self) -> int:
        return min(self._terms)

    @property
    def max_exponent(self) -> int:
        return max(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials have integer inverses")
            return LaurentPoly({-e * -k: c ** (-k)})
        out = LaurentPoly.constant(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``A^k``."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def mirror(self) -> LaurentPoly:
        """Substitute ``A -> A^-1``."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def substitute_power(self, k: int) -> LaurentPoly:
        """Substitute ``A -> A^k``."""
        return LaurentPoly({e * k: c for e, c in self._terms.items()})

    def unit_normalized(self) -> LaurentPoly:
        """Representative up to multiplication by ``+-A^k``: lowest exponent 0, positive lowest coefficient."""
        if not self._terms:
            return self
        lo = self.min_exponent
        sign = 1 if self._terms[lo] > 0 else -1
        return LaurentPoly({e - lo: sign * c for e, c in self._terms.items()})

    def key(self) -> tuple[tuple[int, int], ...]:
        return tuple(self._terms.items())

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({self._terms})"

    def __str__(self):
        return self.format("A")

    def format(self, var: str = "A") -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = var if e == 1 else f"{var}^{e}"
                body = power if mag == 1 else f"{mag}*{power}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    @classmethod
    def parse(cls, text: str, var: str = "A") -> LaurentPoly:
        """Inverse of :meth:`format`."""
        text = text.replace(" ", "")
        if text == "0":
            return cls()
        term_re = re.compile(
            rf"([+-]?)(\d+)?(\*?)(?:({re.escape(var)})(?:\^\(?(-?\d+)\)?)?)?"
        )
        out: dict[int, int] = {}
        pos = 0
        while pos < len(text):
            m = term_re.match(text, pos)
            if not m or m.end() == pos or (m.group(2) is None and m.group(4) is None):
                raise ValueError(f"cannot parse Laurent polynomial {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            coeff = int(m.group(2)) if m.group(2) else 1
            exp = 0 if m.group(4) is None else int(m.group(5) or 1)
            out[exp] = out.get(exp, 0) + sign * coeff
            pos = m.end()
        return cls(out)


A = LaurentPoly.monomial(1)
ONE = LaurentPoly.constant(1)
# value of an extra crossing-free circle in the bracket
DELTA = LaurentPoly({2: -1, -2: -1})
