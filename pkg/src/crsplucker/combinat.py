"""Partition bookkeeping and combinatorial number supply.

Input partitions never contain 1's; the reduction drops 1 from every part
and its weight is the codimension of the corresponding stratum.  Kostka
numbers are computed by direct semistandard-tableau enumeration on the
two-row shape, Stirling numbers of the first kind via the elementary
symmetric polynomial sigma_k(1, ..., m-1).
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import OutOfRange, WeightMismatch
from .symfunc import SchurClass, TwoRowPartition, class_product, unit_class


@dataclass(frozen=True)
class InputPartition:
    """A partition without 1's, stored as a weakly decreasing tuple of parts >= 2."""

    parts: tuple

    def __post_init__(self):
        parts = tuple(sorted((int(p) for p in self.parts), reverse=True))
        for p in parts:
            if p < 2:
                raise ValueError(f"parts must be >= 2, got {p}")
        object.__setattr__(self, "parts", parts)

    @property
    def weight(self):
        return sum(self.parts)

    @property
    def reduction(self):
        return tuple(p - 1 for p in self.parts)

    @property
    def codim(self):
        return self.weight - len(self.parts)

    @property
    def largest(self):
        return self.parts[0] if self.parts else 0

    @property
    def multiplicities(self):
        return Counter(self.parts)

    def is_empty(self):
        return not self.parts

    def remove(self, m):
        """The partition with one copy of part m removed."""
        if m not in self.parts:
            raise ValueError(f"{m} is not a part of {self}")
        parts = list(self.parts)
        parts.remove(m)
        return InputPartition(tuple(parts))

    def canonical_string(self):
        return ",".join(str(p) for p in self.parts)

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if not text:
            return cls(())
        return cls(tuple(int(tok) for tok in text.split(",")))

    def __str__(self):
        return f"({self.canonical_string()})"


def enumerate_partitions_no_ones(max_weight):
    """All nonempty partitions without 1's of weight <= max_weight.

    Deterministic order: weight ascending, then largest parts first.
    """

    def gen(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for p in range(min(cap, remaining), 1, -1):
            if remaining - p == 1:  # would force a trailing 1
                continue
            for rest in gen(remaining - p, p):
                yield (p,) + rest

    out = []
    for w in range(2, max_weight + 1):
        out.extend(InputPartition(parts) for parts in gen(w, w))
    return out


@lru_cache(maxsize=None)
def _ssyt_count(r1, r2, content):
    """Count SSYT of two-row shape (r1, r2) and the given content by filling
    values 1, 2, ... in order.

    After all copies of value v are placed, (A, B) = (cells filled in row 1,
    row 2) must satisfy column strictness: the row-2 cells holding values
    <= v must sit under row-1 cells holding values < v, i.e. B <= A_prev.
    """

    def place(v, a_filled, b_filled):
        if v == len(content):
            return 1 if (a_filled, b_filled) == (r1, r2) else 0
        total = 0
        count = content[v]
        for to_row1 in range(count + 1):
            to_row2 = count - to_row1
            a2, b2 = a_filled + to_row1, b_filled + to_row2
            if a2 > r1 or b2 > r2:
                continue
            if b2 > a_filled:  # column strictness against earlier row-1 values
                continue
            total += place(v + 1, a2, b2)
        return total

    return place(0, 0, 0)


def kostka_two_row(shape, content):
    """Exact SSYT count for a two-row shape and the given content."""
    shape = TwoRowPartition(*shape)
    content = tuple(int(c) for c in content)
    if any(c <= 0 for c in content):
        raise ValueError("content entries must be positive")
    if sum(content) != shape.weight:
        raise WeightMismatch(f"content weight {sum(content)} != shape weight {shape.weight}")
    return _ssyt_count(shape.r1, shape.r2, tuple(sorted(content, reverse=True)))


def kostka_vanishing(shape, reduction):
    """Closed-form vanishing test: the Kostka number for a two-row shape and
    content `reduction` vanishes exactly when r1 < max(reduction)."""
    shape = TwoRowPartition(*shape)
    reduction = tuple(reduction)
    if sum(reduction) != shape.weight:
        raise WeightMismatch(f"content weight {sum(reduction)} != shape weight {shape.weight}")
    if not reduction:
        return False
    return shape.r1 < max(reduction)


def stirling_first(m, k):
    """Unsigned Stirling number of the first kind, sigma_k(1, 2, ..., m-1)."""
    if m < 1 or k < 0 or k > m - 1:
        raise OutOfRange(f"stirling_first requires m >= 1 and 0 <= k <= m-1, got ({m}, {k})")
    sigma = [1] + [0] * k
    for i in range(1, m):
        for j in range(min(k, i), 0, -1):
            sigma[j] += i * sigma[j - 1]
    return sigma[k]


def complete_homogeneous_class(nu):
    """The product of complete symmetric polynomials h_nu = prod h_{nu_i} in
    {a, b}, expanded in the Schur basis; h_i = s_(i,0).

    Expansion coefficients are the two-row Kostka numbers for content nu.
    """
    result = unit_class()
    for part in nu:
        part = int(part)
        if part < 0:
            raise ValueError("parts must be nonnegative")
        if part == 0:
            continue
        h = SchurClass(part, {TwoRowPartition(part, 0): Fraction(1)})
        result = class_product(result, h)
    return result


def factorial_of_multiplicities(partition):
    """prod e_i! over the part multiplicities of an InputPartition."""
    out = 1
    for e in partition.multiplicities.values():
        out *= math.factorial(e)
    return out
