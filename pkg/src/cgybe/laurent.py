"""Exact Laurent-polynomial arithmetic in the two symbols q and p.

A value is a finite sum ``sum c[a, b] * q**a * p**b`` with rational
coefficients and integer (possibly negative) exponents.  Terms live in a
dict keyed by the exponent pair ``(a, b)``; zero coefficients are never
stored, so equality of term dicts is exactly equality of polynomials and
the zero polynomial is the empty dict.

Coefficients are :class:`fractions.Fraction`.  No floating point enters
anywhere in this package: every downstream identity check relies on
"this coefficient is zero" being an exact statement.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping

__all__ = [
    "LaurentQP",
    "Rational",
    "q",
    "p",
    "one",
    "zero",
    "as_laurent",
    "rational_to_str",
    "rational_from_str",
]

# Coefficients are exact rationals; Fraction already keeps gcd-reduced
# num/den with a positive denominator and 0 stored as 0/1.
Rational = Fraction

ExpPair = tuple[int, int]


def rational_to_str(value: Fraction) -> str:
    """Canonical "num/den" string, denominator always present."""
    return f"{value.numerator}/{value.denominator}"


def rational_from_str(text: str) -> Fraction:
    return Fraction(text)


class LaurentQP:
    """Immutable sparse Laurent polynomial in q and p over the rationals."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[ExpPair, Fraction | int] | None = None):
        normalized: dict[ExpPair, Fraction] = {}
        if terms:
            for (a, b), coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff:
                    normalized[(int(a), int(b))] = coeff
        self._terms = normalized

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls) -> "LaurentQP":
        return cls()

    @classmethod
    def one(cls) -> "LaurentQP":
        return cls({(0, 0): 1})

    @classmethod
    def const(cls, value: Fraction | int) -> "LaurentQP":
        return cls({(0, 0): Fraction(value)})

    @classmethod
    def monomial(cls, coeff: Fraction | int, qexp: int = 0, pexp: int = 0) -> "LaurentQP":
        return cls({(qexp, pexp): Fraction(coeff)})

    # ------------------------------------------------------------------
    # structure

    def terms(self) -> dict[ExpPair, Fraction]:
        """Copy of the term dict, exponent pair -> nonzero coefficient."""
        return dict(self._terms)

    def items_sorted(self) -> list[tuple[ExpPair, Fraction]]:
        """Terms sorted by (q exponent, p exponent)."""
        return sorted(self._terms.items())

    def __iter__(self) -> Iterator[tuple[ExpPair, Fraction]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_unit(self) -> bool:
        """True iff the value is a single term, hence invertible in the ring."""
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {(0, 0)}

    def constant_value(self) -> Fraction:
        """The value as a plain rational; raises if q or p actually occurs."""
        if not self._terms:
            return Fraction(0)
        if set(self._terms) == {(0, 0)}:
            return self._terms[(0, 0)]
        raise ValueError(f"not a constant: {self}")

    def unit_inverse(self) -> "LaurentQP":
        """Inverse of a single-term value c*q^a*p^b, namely (1/c)*q^-a*p^-b."""
        if len(self._terms) != 1:
            raise ValueError(f"not a unit of the Laurent ring: {self}")
        ((a, b), coeff), = self._terms.items()
        return LaurentQP({(-a, -b): 1 / coeff})

    # ------------------------------------------------------------------
    # ring operations

    @staticmethod
    def _coerce(value) -> "LaurentQP | None":
        if isinstance(value, LaurentQP):
            return value
        if isinstance(value, (int, Fraction)):
            return LaurentQP.const(value)
        return None

    def __add__(self, other) -> "LaurentQP":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc = dict(self._terms)
        for exps, coeff in other._terms.items():
            acc[exps] = acc.get(exps, Fraction(0)) + coeff
        return LaurentQP(acc)

    __radd__ = __add__

    def __neg__(self) -> "LaurentQP":
        return LaurentQP({exps: -coeff for exps, coeff in self._terms.items()})

    def __sub__(self, other) -> "LaurentQP":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentQP":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "LaurentQP":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc: dict[ExpPair, Fraction] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                key = (a1 + a2, b1 + b2)
                acc[key] = acc.get(key, Fraction(0)) + c1 * c2
        return LaurentQP(acc)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LaurentQP":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.unit_inverse() ** (-exponent)
        result = LaurentQP.one()
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        # Constants hash like their Fraction so e.g. one() == 1 stays sane.
        if self.is_constant():
            return hash(self.constant_value())
        return hash(frozenset(self._terms.items()))

    # ------------------------------------------------------------------
    # evaluation and substitution

    def eval(self, qval: Fraction | int, pval: Fraction | int) -> Fraction:
        """Exact value at the point (qval, pval); both must be nonzero."""
        qval, pval = Fraction(qval), Fraction(pval)
        if qval == 0 or pval == 0:
            raise ValueError("q and p substitutions must be nonzero")
        total = Fraction(0)
        for (a, b), coeff in self._terms.items():
            total += coeff * qval**a * pval**b
        return total

    def subs_p(self, pval: Fraction | int) -> "LaurentQP":
        """Substitute a nonzero rational for p, leaving q symbolic."""
        pval = Fraction(pval)
        if pval == 0:
            raise ValueError("p substitution must be nonzero")
        acc: dict[ExpPair, Fraction] = {}
        for (a, b), coeff in self._terms.items():
            key = (a, 0)
            acc[key] = acc.get(key, Fraction(0)) + coeff * pval**b
        return LaurentQP(acc)

    def subs_q(self, qval: Fraction | int) -> "LaurentQP":
        """Substitute a nonzero rational for q, leaving p symbolic."""
        qval = Fraction(qval)
        if qval == 0:
            raise ValueError("q substitution must be nonzero")
        acc: dict[ExpPair, Fraction] = {}
        for (a, b), coeff in self._terms.items():
            key = (0, b)
            acc[key] = acc.get(key, Fraction(0)) + coeff * qval**a
        return LaurentQP(acc)

    # ------------------------------------------------------------------
    # serialization and display

    def to_json_obj(self) -> list[dict]:
        """List of {"q": a, "p": b, "coeff": "num/den"}, sorted by (a, b)."""
        return [
            {"q": a, "p": b, "coeff": rational_to_str(coeff)}
            for (a, b), coeff in self.items_sorted()
        ]

    @classmethod
    def from_json_obj(cls, obj: list[dict]) -> "LaurentQP":
        return cls({(term["q"], term["p"]): Fraction(term["coeff"]) for term in obj})

    @staticmethod
    def _monomial_str(a: int, b: int, latex: bool) -> str:
        parts = []
        for sym, exp in (("q", a), ("p", b)):
            if exp == 0:
                continue
            if exp == 1:
                parts.append(sym)
            elif latex:
                parts.append(f"{sym}^{{{exp}}}")
            else:
                parts.append(f"{sym}^{exp}")
        return (" " if latex else "*").join(parts)

    def _render(self, latex: bool) -> str:
        if not self._terms:
            return "0"
        # Leading q-powers first for readability: q^2 - q^-2, not the reverse.
        chunks = []
        for (a, b), coeff in sorted(self._terms.items(), reverse=True):
            mono = self._monomial_str(a, b, latex)
            sign = "-" if coeff < 0 else "+"
            mag = -coeff if coeff < 0 else coeff
            if mag.denominator == 1:
                coeff_str = str(mag.numerator)
            elif latex:
                coeff_str = f"\\frac{{{mag.numerator}}}{{{mag.denominator}}}"
            else:
                coeff_str = f"{mag.numerator}/{mag.denominator}"
            if mono and coeff_str == "1":
                body = mono
            elif mono:
                body = f"{coeff_str} {mono}" if latex else f"{coeff_str}*{mono}"
            else:
                body = coeff_str
            chunks.append((sign, body))
        head_sign, head = chunks[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in chunks[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self._render(latex=False)

    def __repr__(self) -> str:
        return f"LaurentQP({self})"

    def to_latex(self) -> str:
        return self._render(latex=True)


def as_laurent(value: "LaurentQP | Fraction | int") -> LaurentQP:
    """Coerce an int or Fraction to a constant polynomial; pass LaurentQP through."""
    if isinstance(value, LaurentQP):
        return value
    return LaurentQP.const(value)


q = LaurentQP.monomial(1, 1, 0)
p = LaurentQP.monomial(1, 0, 1)
one = LaurentQP.one()
zero = LaurentQP.zero()
