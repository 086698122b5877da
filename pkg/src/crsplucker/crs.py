"""The recursion engine for equivariant classes of coincident root strata.

One step removes a part m from the partition: split the smaller class into
the shift components B_t, pair each with the divided-difference class A_t,
sum (1/e_m) * sum_t (m/d)^t A_t B_t, reduce to polynomial coefficients and
translate d by -m.  Divisibility of each B_t coefficient by d^t and
polynomiality of the final sum are asserted at runtime: both are guaranteed
by the underlying algebra, so a failure is an implementation bug.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass
from fractions import Fraction

from .combinat import InputPartition
from .errors import DivisibilityViolation, NonPolynomial
from .exactalg import dpoly_from_coeff_strings, dpoly_shift, dpoly_to_coeff_strings, laurent_reduce
from .symfunc import SchurClass, TwoRowPartition, class_product, split_shift, unit_class, weighted_divdiff

MIN_PART = "min"
MAX_PART = "max"
EXPLICIT = "explicit"


@dataclass(frozen=True)
class PivotPolicy:
    """Which part to remove at each recursion step.

    The computed class is independent of this choice; alternative policies
    exist to let tests exercise that independence.
    """

    kind: str
    sequence: tuple = ()

    @classmethod
    def min_part(cls):
        return cls(MIN_PART)

    @classmethod
    def max_part(cls):
        return cls(MAX_PART)

    @classmethod
    def explicit(cls, sequence):
        return cls(EXPLICIT, tuple(int(p) for p in sequence))


DEFAULT_POLICY = PivotPolicy.min_part()


class ClassCache:
    """Partition -> fully reduced SchurClass, safe for concurrent readers.

    Only validated polynomial classes are stored; entries loaded from disk
    are re-checked before reuse so a corrupt cache can never poison results.
    """

    def __init__(self):
        self._data = {}
        self._lock = threading.Lock()

    def get(self, partition):
        return self._data.get(partition.canonical_string())

    def put(self, partition, schur_class):
        _validate_class(partition, schur_class)
        with self._lock:
            self._data[partition.canonical_string()] = schur_class

    def __len__(self):
        return len(self._data)

    # -- persistence -------------------------------------------------------

    def save(self, path):
        doc = {
            key: class_to_json(cls, InputPartition.parse(key))
            for key, cls in sorted(self._data.items())
        }
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=1, sort_keys=True)
            fh.write("\n")

    @classmethod
    def load(cls, path):
        """Load a cache file, silently dropping any entry that fails revalidation."""
        cache = cls()
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
        if not isinstance(doc, dict):
            return cache
        for key, payload in doc.items():
            try:
                partition = InputPartition.parse(key)
                loaded = class_from_json(payload)
                if tuple(payload.get("partition", ())) != partition.parts:
                    raise ValueError("partition key/payload mismatch")
                cache.put(partition, loaded)
            except (ValueError, KeyError, TypeError, NonPolynomial):
                continue
        return cache


def _validate_class(partition, schur_class):
    if schur_class.weight != partition.codim:
        raise ValueError(
            f"class for {partition} has weight {schur_class.weight}, expected {partition.codim}"
        )
    for rho, coeff in schur_class.items():
        if not coeff.is_polynomial():
            raise NonPolynomial([(e, c) for e, c in coeff.coeffs.items() if e < 0])


def class_to_json(schur_class, partition=None):
    doc = {
        "codim": schur_class.weight,
        "terms": [
            {"rho": [rho.r1, rho.r2], "coeff": dpoly_to_coeff_strings(coeff)}
            for rho, coeff in schur_class.items()
        ],
    }
    if partition is not None:
        doc = {"partition": list(partition.parts), **doc}
    return doc


def class_from_json(doc):
    terms = {}
    for entry in doc["terms"]:
        r1, r2 = entry["rho"]
        terms[TwoRowPartition(int(r1), int(r2))] = dpoly_from_coeff_strings(entry["coeff"])
    return SchurClass(int(doc["codim"]), terms)


def assert_divisibility(b_class, t):
    """Check d^t divides every coefficient of B_t; raise DivisibilityViolation if not."""
    if t == 0:
        return
    for rho, coeff in b_class.items():
        if not coeff.is_zero() and coeff.min_exponent < t:
            raise DivisibilityViolation(t, rho)


def recursion_step(y_prime, m, e_m):
    """One removal step: from the class of lambda' in d to the class of lambda in d.

    y_prime must be fully reduced (polynomial coefficients).  Computes
    (1/e_m) sum_t m^t d^(-t) A_t B_t, reduces each coefficient to a
    polynomial and then substitutes d -> d - m.
    """
    if m < 2 or e_m < 1:
        raise ValueError("need m >= 2 and e_m >= 1")
    shifted = None
    for t, b_t in enumerate(split_shift(y_prime)):
        assert_divisibility(b_t, t)
        a_t = weighted_divdiff(t, m, use_shifted_d=True)
        term = class_product(a_t, b_t)
        if t:
            factor = Fraction(m) ** t
            term = term.map_coefficients(lambda c: (c * factor).shift_exponents(-t))
        shifted = term if shifted is None else shifted + term
    shifted = shifted.scale(Fraction(1, e_m))
    reduced = shifted.map_coefficients(laurent_reduce)
    return reduced.map_coefficients(lambda p: dpoly_shift(p, -m))


def _next_pivot(partition, policy, depth):
    if policy.kind == MIN_PART:
        return min(partition.parts)
    if policy.kind == MAX_PART:
        return max(partition.parts)
    if policy.kind == EXPLICIT:
        return policy.sequence[depth]
    raise ValueError(f"unknown pivot policy {policy.kind!r}")


def crs_class(partition, policy=DEFAULT_POLICY, cache=None):
    """The equivariant class of the coincident root stratum of `partition`,
    as a SchurClass of weight codim with DPoly coefficients.

    The result is independent of the pivot policy.  A cache may be shared
    across calls; only fully reduced classes are stored in it.
    """
    if policy.kind == EXPLICIT and sorted(policy.sequence) != sorted(partition.parts):
        raise ValueError("explicit pivot sequence must list exactly the parts of the partition")
    if cache is None:
        cache = ClassCache()
    return _crs_class(partition, policy, cache, 0)


def _crs_class(partition, policy, cache, depth):
    if partition.is_empty():
        return unit_class()
    hit = cache.get(partition)
    if hit is not None:
        return hit
    m = _next_pivot(partition, policy, depth)
    e_m = partition.multiplicities[m]
    smaller = _crs_class(partition.remove(m), policy, cache, depth + 1)
    result = recursion_step(smaller, m, e_m)
    cache.put(partition, result)
    return result
