"""Exact univariate (Laurent) polynomial arithmetic in the degree variable d.

Coefficients are exact rationals (fractions.Fraction); a polynomial is a
sparse map exponent -> coefficient with no explicit zero entries.  The zero
polynomial is the empty map and has degree -inf.

DLaurent allows negative exponents; DPoly is the subclass restricted to
exponents >= 0.  Arithmetic between two DPoly values stays DPoly, anything
involving a genuine Laurent value is DLaurent.  laurent_reduce() is the one
sanctioned way back from DLaurent to DPoly and raises NonPolynomial if
negative-exponent terms survive.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import NonPolynomial

Rat = Fraction

NEG_INF = float("-inf")


class DLaurent:
    """Sparse Laurent polynomial in d over the rationals. Immutable."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        if coeffs:
            for e, c in coeffs.items():
                c = Fraction(c)
                if c:
                    clean[int(e)] = c
        self._check_exponents(clean)
        object.__setattr__(self, "_coeffs", clean)

    @staticmethod
    def _check_exponents(coeffs):
        pass

    # -- basic queries ---------------------------------------------------

    @property
    def coeffs(self):
        return dict(self._coeffs)

    def is_zero(self):
        return not self._coeffs

    def is_polynomial(self):
        return all(e >= 0 for e in self._coeffs)

    @property
    def degree(self):
        return max(self._coeffs) if self._coeffs else NEG_INF

    @property
    def min_exponent(self):
        return min(self._coeffs) if self._coeffs else NEG_INF

    @property
    def leading_coefficient(self):
        return self._coeffs[max(self._coeffs)] if self._coeffs else Fraction(0)

    def coefficient(self, exponent):
        return self._coeffs.get(exponent, Fraction(0))

    # -- ring operations --------------------------------------------------

    def _result_class(self, other):
        if isinstance(self, DPoly) and isinstance(other, DPoly):
            return DPoly
        return DLaurent

    def __add__(self, other):
        if not isinstance(other, DLaurent):
            return NotImplemented
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, Fraction(0)) + c
        return self._result_class(other)(out)

    def __sub__(self, other):
        if not isinstance(other, DLaurent):
            return NotImplemented
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, Fraction(0)) - c
        return self._result_class(other)(out)

    def __neg__(self):
        return type(self)({e: -c for e, c in self._coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, DLaurent):
            out = {}
            for e1, c1 in self._coeffs.items():
                for e2, c2 in other._coeffs.items():
                    e = e1 + e2
                    out[e] = out.get(e, Fraction(0)) + c1 * c2
            return self._result_class(other)(out)
        if isinstance(other, (int, Fraction)):
            return type(self)({e: c * other for e, c in self._coeffs.items()})
        return NotImplemented

    __rmul__ = __mul__

    def shift_exponents(self, delta):
        """Multiply by the monomial d^delta (Laurent if delta pushes below 0)."""
        cls = DPoly if isinstance(self, DPoly) and (self.is_zero() or self.min_exponent + delta >= 0) else DLaurent
        return cls({e + delta: c for e, c in self._coeffs.items()})

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, DLaurent):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __bool__(self):
        return bool(self._coeffs)

    def __repr__(self):
        return f"{type(self).__name__}({self._coeffs!r})"

    def __str__(self):
        return format_dpoly(self)


class DPoly(DLaurent):
    """Polynomial in d: a DLaurent whose exponents are all >= 0."""

    __slots__ = ()

    @staticmethod
    def _check_exponents(coeffs):
        bad = [e for e in coeffs if e < 0]
        if bad:
            raise ValueError(f"negative exponents in DPoly: {sorted(bad)}")


ZERO = DPoly()
ONE = DPoly({0: 1})
D = DPoly({1: 1})


def dpoly(*coeffs):
    """Build a DPoly from coefficients listed from exponent 0 upward."""
    return DPoly({e: c for e, c in enumerate(coeffs)})


def dpoly_eval(p, d0):
    """Exact value p(d0) as a Fraction."""
    d0 = Fraction(d0)
    return sum((c * d0 ** e for e, c in p._coeffs.items()), Fraction(0))


def dpoly_shift(p, delta):
    """Return q with q(d) = p(d + delta); defined for polynomials only."""
    if not p.is_polynomial():
        raise ValueError("dpoly_shift is only defined on polynomial data")
    out = {}
    for e, c in p._coeffs.items():
        for i in range(e + 1):
            out[i] = out.get(i, Fraction(0)) + c * math.comb(e, i) * Fraction(delta) ** (e - i)
    return DPoly(out)


def laurent_reduce(laurent):
    """Convert a DLaurent to the equal DPoly, or raise NonPolynomial."""
    bad = [(e, c) for e, c in sorted(laurent._coeffs.items()) if e < 0]
    if bad:
        raise NonPolynomial(bad)
    return DPoly(laurent._coeffs)


# -- canonical text/JSON rendering ----------------------------------------


def format_rat(r):
    """Canonical "num/den" text for a rational ("num" when den = 1)."""
    return str(Fraction(r))


def parse_rat(text):
    return Fraction(text)


def dpoly_to_coeff_strings(p):
    """Dense coefficient list from exponent 0 upward, each a Rat string."""
    if not p.is_polynomial():
        raise ValueError("only polynomials have a dense coefficient list")
    if p.is_zero():
        return []
    return [format_rat(p.coefficient(e)) for e in range(p.degree + 1)]


def dpoly_from_coeff_strings(strings):
    return DPoly({e: Fraction(s) for e, s in enumerate(strings)})


def format_dpoly(p, var="d"):
    """Human-readable rendering, highest exponent first, e.g. "d^2 - d"."""
    if p.is_zero():
        return "0"
    pieces = []
    for e in sorted(p._coeffs, reverse=True):
        c = p._coeffs[e]
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if e == 0:
            body = format_rat(mag)
        else:
            dpart = var if e == 1 else f"{var}^{e}"
            body = dpart if mag == 1 else f"{format_rat(mag)}*{dpart}"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"{sign} {body}")
    return " ".join(pieces)
