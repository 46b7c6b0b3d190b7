"""Exact bivariate polynomials in the two deformation parameters.

Every algebraic identity in this package is checked in the polynomial ring
Q[alpha, q].  ``BiPoly`` is a sparse exact implementation of that ring:
terms are stored as ``{(deg_alpha, deg_q): Fraction}`` with no zero
coefficients, so structural equality is ring equality.

Numeric work (eigenvalues, norms, densities) happens only after evaluating
a ``BiPoly`` at a concrete point via :meth:`BiPoly.eval_fraction` or
:meth:`BiPoly.eval_float`.

>>> p = (ONE + ALPHA) * (ONE + Q)
>>> sorted(p.terms.items())
[((0, 0), Fraction(1, 1)), ((0, 1), Fraction(1, 1)), ((1, 0), Fraction(1, 1)), ((1, 1), Fraction(1, 1))]
>>> p.eval_fraction(Fraction(1), Fraction(-1))
Fraction(0, 1)
"""

from __future__ import annotations

from fractions import Fraction

Term = tuple[int, int]  # (degree in alpha, degree in q)


def _coerce(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact coefficient")


class BiPoly:
    """A polynomial in (alpha, q) with Fraction coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Term, Fraction] | None = None):
        self.terms: dict[Term, Fraction] = {}
        if terms:
            for key, coeff in terms.items():
                if coeff:
                    self.terms[key] = Fraction(coeff)

    # -- constructors ------------------------------------------------------

    @classmethod
    def const(cls, value) -> "BiPoly":
        return cls({(0, 0): _coerce(value)})

    @classmethod
    def monomial(cls, deg_alpha: int, deg_q: int, coeff=1) -> "BiPoly":
        return cls({(deg_alpha, deg_q): _coerce(coeff)})

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> "BiPoly":
        other = as_poly(other)
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            total = out.get(key, _F0) + coeff
            if total:
                out[key] = total
            else:
                out.pop(key, None)
        result = BiPoly.__new__(BiPoly)
        result.terms = out
        return result

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        result = BiPoly.__new__(BiPoly)
        result.terms = {key: -coeff for key, coeff in self.terms.items()}
        return result

    def __sub__(self, other) -> "BiPoly":
        return self + (-as_poly(other))

    def __rsub__(self, other) -> "BiPoly":
        return as_poly(other) + (-self)

    def __mul__(self, other) -> "BiPoly":
        other = as_poly(other)
        out: dict[Term, Fraction] = {}
        for (a1, q1), c1 in self.terms.items():
            for (a2, q2), c2 in other.terms.items():
                key = (a1 + a2, q1 + q2)
                total = out.get(key, _F0) + c1 * c2
                if total:
                    out[key] = total
                else:
                    out.pop(key, None)
        result = BiPoly.__new__(BiPoly)
        result.terms = out
        return result

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "BiPoly":
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = ONE
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = as_poly(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    # -- evaluation --------------------------------------------------------

    def eval_fraction(self, alpha: Fraction, q: Fraction) -> Fraction:
        total = Fraction(0)
        for (da, dq), coeff in self.terms.items():
            total += coeff * alpha**da * q**dq
        return total

    def eval_float(self, alpha: float, q: float) -> float:
        total = 0.0
        for (da, dq), coeff in self.terms.items():
            total += float(coeff) * alpha**da * q**dq
        return total

    def subs_alpha(self, alpha: Fraction) -> "BiPoly":
        """Partial evaluation, leaving a polynomial in q alone."""
        out = BiPoly()
        for (da, dq), coeff in self.terms.items():
            out = out + BiPoly.monomial(0, dq, coeff * alpha**da)
        return out

    def subs_q(self, q: Fraction) -> "BiPoly":
        out = BiPoly()
        for (da, dq), coeff in self.terms.items():
            out = out + BiPoly.monomial(da, 0, coeff * q**dq)
        return out

    # -- serialization -----------------------------------------------------

    def to_list(self) -> list[list[int]]:
        """Sorted ``[deg_alpha, deg_q, numerator, denominator]`` rows."""
        return [
            [da, dq, coeff.numerator, coeff.denominator]
            for (da, dq), coeff in sorted(self.terms.items())
        ]

    @classmethod
    def from_list(cls, rows) -> "BiPoly":
        return cls({(int(da), int(dq)): Fraction(int(num), int(den)) for da, dq, num, den in rows})

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (da, dq), coeff in sorted(self.terms.items()):
            piece = []
            if coeff != 1 or (da == 0 and dq == 0):
                piece.append(str(coeff))
            if da:
                piece.append("a" if da == 1 else f"a^{da}")
            if dq:
                piece.append("q" if dq == 1 else f"q^{dq}")
            parts.append("*".join(piece))
        return " + ".join(parts)


_F0 = Fraction(0)

ZERO = BiPoly()
ONE = BiPoly.const(1)
ALPHA = BiPoly.monomial(1, 0)
Q = BiPoly.monomial(0, 1)


def as_poly(value) -> BiPoly:
    """Coerce ints and Fractions into the ring; pass BiPoly through."""
    if isinstance(value, BiPoly):
        return value
    return BiPoly.const(value)
