"""Plucker formula extraction and independent leading-term verification.

A computed class is read off row by row: the coefficient of s_(c-j, j) is
the formula counting lambda-lines against a codimension c-2j+1 linear
condition.  Each row's degree and leading coefficient are checked against
the closed-form prediction: Kostka numbers up to the threshold, Stirling
numbers of the first kind beyond it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .combinat import (
    InputPartition,
    complete_homogeneous_class,
    factorial_of_multiplicities,
    kostka_two_row,
    stirling_first,
)
from .crs import DEFAULT_POLICY, crs_class
from .errors import BadIndex, BelowValidityFloor, OutOfRange
from .exactalg import DPoly, Rat, dpoly_eval
from .symfunc import SchurClass, TwoRowPartition

KOSTKA = "kostka"
STIRLING = "stirling"


@dataclass(frozen=True)
class PluckerFormula:
    lam: InputPartition
    j: int
    codim_index: int  # c - 2j
    formula: DPoly
    validity_floor: int  # = |lambda|; evaluation below it is refused


@dataclass(frozen=True)
class LeadingPrediction:
    degree: int
    coefficient: Fraction
    regime: str  # KOSTKA or STIRLING
    threshold_pi2: int


@dataclass(frozen=True)
class PluckerRow:
    formula: PluckerFormula
    prediction: LeadingPrediction
    match: bool
    details: str = ""


@dataclass(frozen=True)
class PluckerTable:
    lam: InputPartition
    rows: tuple  # PluckerRow, ordered by j ascending

    def all_match(self):
        return all(row.match for row in self.rows)


def threshold_pi2(lam):
    """Second coordinate of the threshold partition: min(c - lam1 + 1, floor(c/2))."""
    c = lam.codim
    return min(c - lam.largest + 1, c // 2)


def predicted_leading(lam, j):
    """Closed-form leading term of the j-th formula.

    Kostka regime (j up to the threshold): degree |lambda| and coefficient
    K_((c-j,j), reduction) / prod e_i!.  Stirling regime: the degree drops by
    one per extra unit of j and the coefficient is the Stirling number
    sigma_k(1, ..., lam1 - 1) / prod e_i! with k the overshoot.
    """
    if lam.is_empty():
        raise OutOfRange("predictions require a nonempty partition")
    c = lam.codim
    if j < 0 or j > c // 2:
        raise OutOfRange(f"j must lie in [0, {c // 2}], got {j}")
    thr = threshold_pi2(lam)
    denom = factorial_of_multiplicities(lam)
    if j <= thr:
        k = kostka_two_row(TwoRowPartition(c - j, j), lam.reduction)
        return LeadingPrediction(lam.weight, Fraction(k, denom), KOSTKA, thr)
    overshoot = j - (c - lam.largest + 1)
    coeff = Fraction(stirling_first(lam.largest, overshoot), denom)
    return LeadingPrediction(lam.weight - overshoot, coeff, STIRLING, thr)


def _row(lam, j, formula):
    prediction = predicted_leading(lam, j)
    got = (formula.degree, formula.leading_coefficient)
    want = (prediction.degree, prediction.coefficient)
    if got == want:
        return PluckerRow(
            PluckerFormula(lam, j, lam.codim - 2 * j, formula, lam.weight), prediction, True
        )
    details = f"expected degree {want[0]} leading {want[1]}, got degree {got[0]} leading {got[1]}"
    return PluckerRow(
        PluckerFormula(lam, j, lam.codim - 2 * j, formula, lam.weight), prediction, False, details
    )


def plucker_formulas(lam, policy=DEFAULT_POLICY, cache=None):
    """Extract every Schur coefficient of the class of lambda as a formula
    row, with its leading-term prediction and verdict attached."""
    if lam.is_empty():
        raise ValueError("the empty partition has no Plucker formulas")
    cls = crs_class(lam, policy, cache)
    c = lam.codim
    rows = tuple(_row(lam, j, cls.coefficient(TwoRowPartition(c - j, j))) for j in range(c // 2 + 1))
    return PluckerTable(lam, rows)


def verify_leading(lam, policy=DEFAULT_POLICY, cache=None):
    """Compare extracted degrees and leading coefficients with predictions."""
    return plucker_formulas(lam, policy, cache)


def index_to_j(lam, codim_index):
    """Convert a codimension index c - 2j to j, validating parity and range."""
    c = lam.codim
    if (c - codim_index) % 2 != 0:
        raise BadIndex(f"index {codim_index} has the wrong parity for codim {c}")
    j = (c - codim_index) // 2
    if j < 0 or j > c // 2:
        raise BadIndex(f"index {codim_index} is out of range for codim {c}")
    return j


def plucker_value(lam, codim_index, d0, policy=DEFAULT_POLICY, cache=None):
    """The exact number of lambda-lines for degree d0, from the extracted formula.

    Refuses d0 below |lambda|: the identification of the polynomial with the
    enumerative count only holds from there on.
    """
    j = index_to_j(lam, codim_index)
    if d0 < lam.weight:
        raise BelowValidityFloor(d0, lam.weight)
    table = plucker_formulas(lam, policy, cache)
    value = dpoly_eval(table.rows[j].formula.formula, d0)
    if value.denominator != 1 or value < 0:
        raise ArithmeticError(f"Plucker value at d={d0} is not a nonnegative integer: {value}")
    return int(value)


def ym_class_closed_form(m):
    """The class of a single part (m), assembled coefficient by coefficient
    from the closed form: the d^(m-k) coefficient of s_(m-1-i, i) is a signed
    binomial multiple of the Stirling number sigma_k(1, ..., m-1)."""
    from math import comb

    if m < 2:
        raise ValueError("m must be at least 2")
    terms = {}
    for i in range((m - 1) // 2 + 1):
        coeffs = {}
        for k in range(m):
            if i <= k < m - i:
                c = (-1) ** (k + i) * comb(k, i) * stirling_first(m, k)
            elif m - i <= k:
                c = ((-1) ** (k + i) * comb(k, i) - (-1) ** (k + m - i) * comb(k, m - i)) * stirling_first(m, k)
            else:
                c = 0
            if c:
                coeffs[m - k] = Rat(c)
        terms[TwoRowPartition(m - 1 - i, i)] = DPoly(coeffs)
    return SchurClass(m - 1, terms)


def top_degree_class(lam):
    """The coefficient of d^|lambda| of the whole class: (1/prod e_i!) times
    the complete homogeneous class of the reduction."""
    if lam.is_empty():
        raise ValueError("requires a nonempty partition")
    scale = Fraction(1, factorial_of_multiplicities(lam))
    return complete_homogeneous_class(lam.reduction).scale(scale)


def top_degree_slice(schur_class, degree):
    """The indicated d-degree slice of a class, as constant coefficients."""
    return SchurClass(
        schur_class.weight,
        {rho: coeff.coefficient(degree) for rho, coeff in schur_class.items()},
    )
