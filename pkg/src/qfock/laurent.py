"""Exact integer Laurent polynomials in one variable ``q``.

A :class:`LaurentPoly` is a sparse map ``exponent -> coefficient`` with no
zero coefficients stored. Instances are immutable and hashable.
"""

from __future__ import annotations

import re
from typing import Dict, Iterable, Mapping, Tuple

__all__ = [
    "AsymmetryError",
    "LaurentPoly",
    "ONE",
    "ZERO",
    "Q",
    "antisym_positive_part",
    "bar",
    "derivative_at_one",
    "quantum_ratio_even",
    "quantum_ratio_odd",
]


class AsymmetryError(ValueError):
    """Raised when a polynomial expected to satisfy f(q) = -f(1/q) does not."""



class LaurentPoly:
    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        if coeffs:
            self._c: Dict[int, int] = {int(e): int(c) for e, c in coeffs.items() if c}
        else:
            self._c = {}
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: Dict[int, int]) -> "LaurentPoly":
        # caller guarantees no zero coefficients
        obj = cls.__new__(cls)
        obj._c = coeffs
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls._raw({exponent: coeff} if coeff else {})

    @classmethod
    def const(cls, value: int) -> "LaurentPoly":
        return cls.monomial(0, value)

    # -- inspection -------------------------------------------------------

    @property
    def coeffs(self) -> Dict[int, int]:
        return dict(self._c)

    def terms(self) -> Iterable[Tuple[int, int]]:
        """(exponent, coefficient) pairs in ascending exponent order."""
        return sorted(self._c.items())

    def __getitem__(self, exponent: int) -> int:
        return self._c.get(exponent, 0)

    def __bool__(self) -> bool:
        return bool(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def min_degree(self) -> int | None:
        return min(self._c) if self._c else None

    def max_degree(self) -> int | None:
        return max(self._c) if self._c else None

    def at_one(self) -> int:
        return sum(self._c.values())

    def __call__(self, x):
        return sum(c * x**e for e, c in self._c.items())

    # -- ring operations --------------------------------------------------

    @staticmethod
    def _coerce(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._c)
        for e, c in other._c.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return ZERO
            return LaurentPoly._raw({e: c * other for e, c in self._c.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[int, int] = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._c) == 1:
                ((e, c),) = self._c.items()
                if c in (1, -1):
                    return LaurentPoly.monomial(e * k, c ** (-k))
            raise ValueError("only unit monomials can be inverted")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q**k."""
        return LaurentPoly._raw({e + k: c for e, c in self._c.items()})

    def bar(self) -> "LaurentPoly":
        return LaurentPoly._raw({-e: c for e, c in self._c.items()})

    def derivative_at_one(self) -> int:
        return sum(e * c for e, c in self._c.items())

    def antisym_positive_part(self) -> "LaurentPoly":
        """Return p in qZ[q] with p(q) - p(1/q) == self.

        Raises AsymmetryError unless self(q) == -self(1/q).
        """
        c = self._c
        if 0 in c or any(c.get(-e, 0) != -v for e, v in c.items()):
            raise AsymmetryError(f"not bar-antisymmetric: {self}")
        return LaurentPoly._raw({e: v for e, v in c.items() if e > 0})

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            return self._c == ({0: other} if other else {})
        if isinstance(other, LaurentPoly):
            return self._c == other._c
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    # -- text form ----------------------------------------------------------

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for i, (e, c) in enumerate(sorted(self._c.items())):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + f"q^{e}"
            if i == 0:
                parts.append(("-" if sign == "-" else "") + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def to_latex(self) -> str:
        if not self._c:
            return "0"
        out = []
        for i, (e, c) in enumerate(sorted(self._c.items(), reverse=True)):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                mono = "q" if e == 1 else f"q^{{{e}}}"
                body = ("" if mag == 1 else str(mag)) + mono
            if i == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(("-" if c < 0 else "+") + body)
        return "".join(out)

    _TERM = re.compile(r"^([+-]?)(\d*)\*?(?:q(?:\^\(?(~?\d+)\)?)?)?$")

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Parse the canonical string form (also accepts unicode minus and '*')."""
        s = re.sub(r"\s+", "", text.replace("\u2212", "-"))
        if not s:
            raise ValueError("empty polynomial string")
        # hide exponent signs from the term splitter
        s = re.sub(r"\^(\(?)-", r"^\1~", s)
        out: Dict[int, int] = {}
        for tok in filter(None, re.split(r"(?=[+-])", s)):
            m = cls._TERM.match(tok)
            if not m or tok in "+-" or (not m.group(2) and "q" not in tok):
                raise ValueError(f"cannot parse term {tok!r} in {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            coeff = int(m.group(2)) if m.group(2) else 1
            if "q" in tok:
                exp = int(m.group(3).replace("~", "-")) if m.group(3) else 1
            else:
                exp = 0
            out[exp] = out.get(exp, 0) + sign * coeff
        return cls(out)


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
Q = LaurentPoly.monomial(1)


def bar(f: LaurentPoly) -> LaurentPoly:
    return f.bar()


def derivative_at_one(f: LaurentPoly) -> int:
    return f.derivative_at_one()


def antisym_positive_part(f: LaurentPoly) -> LaurentPoly:
    return f.antisym_positive_part()


def quantum_ratio_even(i: int) -> LaurentPoly:
    """(q^{2i} - q^{-2i}) / (q + q^{-1}) as an honest Laurent polynomial (i >= 0)."""
    return LaurentPoly({2 * i - 1 - 2 * j: (-1) ** j for j in range(2 * i)})


def quantum_ratio_odd(i: int) -> LaurentPoly:
    """(q^{2i+1} + q^{-2i-1}) / (q + q^{-1}) as an honest Laurent polynomial (i >= 0)."""
    return LaurentPoly({2 * i - 2 * j: (-1) ** j for j in range(2 * i + 1)})
