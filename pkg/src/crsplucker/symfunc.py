"""Two-variable symmetric polynomial calculus in the Schur basis.

All classes live in the basis s_(r1,r2)(a,b) with r1 >= r2 >= 0.  A
SchurClass is a finite map from two-row partitions to d-coefficients
(DLaurent), homogeneous of one {a,b}-degree, stored explicitly as `weight`
so the zero class still carries its grading.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import NamedTuple, Optional

from .exactalg import DLaurent, DPoly, ONE, dpoly


class TwoRowPartition(NamedTuple):
    r1: int
    r2: int

    @property
    def weight(self):
        return self.r1 + self.r2

    @property
    def pi2(self):
        return self.r2

    def is_valid(self):
        return self.r1 >= self.r2 >= 0


def two_row(r1, r2):
    rho = TwoRowPartition(r1, r2)
    if not rho.is_valid():
        raise ValueError(f"not a two-row partition: ({r1}, {r2})")
    return rho


class SignedSchurTerm(NamedTuple):
    sign: int  # -1, 0 or +1
    partition: Optional[TwoRowPartition]  # absent exactly when sign == 0


class SchurClass:
    """Finite map TwoRowPartition -> DLaurent, homogeneous of {a,b}-degree `weight`."""

    __slots__ = ("weight", "_terms")

    def __init__(self, weight, terms=None):
        clean = {}
        for rho, coeff in (terms or {}).items():
            rho = two_row(*rho)
            if rho.weight != weight:
                raise ValueError(f"term {rho} has weight {rho.weight}, class has weight {weight}")
            if not isinstance(coeff, DLaurent):
                coeff = DPoly({0: coeff})
            if not coeff.is_zero():
                clean[rho] = coeff
        object.__setattr__(self, "weight", weight)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, *args):
        raise AttributeError("SchurClass is immutable")

    def coefficient(self, rho):
        return self._terms.get(TwoRowPartition(*rho), DPoly())

    def items(self):
        """Terms in deterministic order: pi2 ascending."""
        return sorted(self._terms.items(), key=lambda kv: kv[0].pi2)

    def partitions(self):
        return [rho for rho, _ in self.items()]

    def is_zero(self):
        return not self._terms

    def __add__(self, other):
        if not isinstance(other, SchurClass):
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        if self.weight != other.weight:
            raise ValueError("cannot add classes of different weights")
        out = dict(self._terms)
        for rho, c in other._terms.items():
            out[rho] = out.get(rho, DPoly()) + c
        return SchurClass(self.weight, out)

    def scale(self, factor):
        """Multiply every coefficient by a scalar, DLaurent or Fraction/int."""
        return SchurClass(self.weight, {rho: c * factor for rho, c in self._terms.items()})

    def map_coefficients(self, fn, weight=None):
        w = self.weight if weight is None else weight
        return SchurClass(w, {rho: fn(c) for rho, c in self._terms.items()})

    def __eq__(self, other):
        if isinstance(other, SchurClass):
            return self.weight == other.weight and self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.weight, frozenset(self._terms.items())))

    def __repr__(self):
        body = ", ".join(f"s{tuple(rho)}: {c}" for rho, c in self.items())
        return f"SchurClass(weight={self.weight}, {{{body}}})"


def unit_class():
    """The class 1 = 1 * s_(0,0)."""
    return SchurClass(0, {TwoRowPartition(0, 0): ONE})


def monomial_divdiff(i, j):
    """Divided difference of the monomial a^i b^j: (a^i b^j - a^j b^i)/(b - a).

    Kills symmetric monomials and returns a single signed Schur term otherwise.
    """
    if i < 0 or j < 0:
        raise ValueError("exponents must be nonnegative")
    if j > i:
        return SignedSchurTerm(1, TwoRowPartition(j - 1, i))
    if j == i:
        return SignedSchurTerm(0, None)
    return SignedSchurTerm(-1, TwoRowPartition(i - 1, j))


def schur_product_support(rho, sigma):
    """The interval of two-row partitions appearing in s_rho * s_sigma.

    Runs from (rho1+sigma1, rho2+sigma2) to the balanced endpoint, stepping
    the second row by 1; every member has multiplicity one.
    """
    i, j = rho
    k, l = sigma
    total = i + j + k + l
    lo = j + l
    hi = min(i + l, j + k)
    return [TwoRowPartition(total - v, v) for v in range(lo, hi + 1)]


def class_product(left, right):
    """Bilinear extension of schur_product_support to whole classes."""
    out = {}
    for rho, c1 in left._terms.items():
        for sigma, c2 in right._terms.items():
            c = c1 * c2
            for tau in schur_product_support(rho, sigma):
                out[tau] = out.get(tau, DPoly()) + c
    return SchurClass(left.weight + right.weight, out)


def shift_both(rho):
    """Expand s_rho(a+x, b+x) as a polynomial in x.

    Returns a list [C_0, ..., C_w], w = weight(rho), with
    s_rho(a+x, b+x) = sum_s x^s C_s(a,b).  C_s has weight w - s, C_0 = s_rho,
    and all coefficients are nonnegative integers.  The coefficient of
    s_(u,v) in C_s is binom(k+1,u+1)binom(l,v) - binom(k+1,v)binom(l,u+1)
    for (k,l) = rho and u + v = w - s.
    """
    k, l = rho
    w = k + l
    out = []
    for s in range(w + 1):
        tw = w - s
        terms = {}
        for v in range(tw // 2 + 1):
            u = tw - v
            c = comb(k + 1, u + 1) * comb(l, v) - comb(k + 1, v) * comb(l, u + 1)
            if c:
                terms[TwoRowPartition(u, v)] = dpoly(c)
        out.append(SchurClass(tw, terms))
    return out


def split_shift(schur_class):
    """Linear extension of shift_both: returns [B_0, ..., B_w], w = weight.

    B_t has weight w - t and B_0 equals the input class.
    """
    w = schur_class.weight
    buckets = [dict() for _ in range(w + 1)]
    for rho, q in schur_class._terms.items():
        for t, ct in enumerate(shift_both(rho)):
            bucket = buckets[t]
            for sigma, c in ct._terms.items():
                scaled = q * c.coefficient(0)
                bucket[sigma] = bucket.get(sigma, DPoly()) + scaled
    return [SchurClass(w - t, b) for t, b in enumerate(buckets)]


def linear_factor_expansion(m, use_shifted_d):
    """Coefficients e_f(d) of prod_{i=0}^{m-1}(i*a + (D-i)*b) = sum_f e_f a^(m-f) b^f.

    D is d+m in the shifted form, plain d otherwise.  e_0 = 0 (the i = 0
    factor has no a part), deg(e_f) = f and leading coefficients are positive.
    Returns the list [e_0, ..., e_m].
    """
    coeffs = [ONE]  # index = power of b so far
    for i in range(m):
        b_part = dpoly(m - i, 1) if use_shifted_d else dpoly(-i, 1)  # D - i
        nxt = [DPoly() for _ in range(len(coeffs) + 1)]
        for f, c in enumerate(coeffs):
            nxt[f] = nxt[f] + c * i
            nxt[f + 1] = nxt[f + 1] + c * b_part
        coeffs = nxt
    return coeffs


def weighted_divdiff(t, m, use_shifted_d=True):
    """The class A_t = divided difference of a^t * prod_{i=0}^{m-1}(i*a + (D-i)*b).

    D = d + m when use_shifted_d is set (the form appearing inside one
    recursion step), plain d otherwise (A_0 is then the length-one class
    itself).  The result has weight m - 1 + t.
    """
    if m < 2:
        raise ValueError("m must be at least 2")
    e = linear_factor_expansion(m, use_shifted_d)
    terms = {}
    for f in range(1, m + 1):
        if e[f].is_zero():
            continue
        sign, rho = monomial_divdiff(t + m - f, f)
        if sign == 0:
            continue
        contrib = e[f] if sign > 0 else -e[f]
        terms[rho] = terms.get(rho, DPoly()) + contrib
    return SchurClass(m - 1 + t, terms)
