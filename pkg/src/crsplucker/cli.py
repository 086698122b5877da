"""Command-line front end.

Subcommands:
  class    compute and print the class of one partition
  plucker  print the Plucker formula table, or evaluate counts
  verify   sweep all partitions up to a weight and run the consistency checks

Exit codes: 0 success, 1 verification failure, 2 bad input/flags,
3 internal assertion failure, 4 evaluation below the validity floor.
Stdout carries data, stderr diagnostics.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .combinat import InputPartition, enumerate_partitions_no_ones
from .crs import ClassCache, PivotPolicy, class_to_json, crs_class
from .errors import BadIndex, BelowValidityFloor, DivisibilityViolation, NonPolynomial
from .exactalg import format_dpoly, format_rat
from .plucker import (
    plucker_formulas,
    plucker_value,
    top_degree_class,
    top_degree_slice,
    ym_class_closed_form,
)

CACHE_ENV_VAR = "CRS_PLUCKER_CACHE"

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_INTERNAL = 3
EXIT_BELOW_FLOOR = 4


def parse_partition(text):
    try:
        lam = InputPartition.parse(text)
    except ValueError as exc:
        raise ValueError(f"bad partition {text!r}: {exc}") from None
    if lam.is_empty():
        raise ValueError("partition must be nonempty")
    return lam


def _policy(name):
    return PivotPolicy.max_part() if name == "max" else PivotPolicy.min_part()


# -- rendering --------------------------------------------------------------


def render_class_plain(lam, cls):
    if cls.is_zero():
        return f"Y[{lam.canonical_string()}](d) = 0"
    parts = [
        f"({format_dpoly(coeff)}) * s[{rho.r1},{rho.r2}]" for rho, coeff in cls.items()
    ]
    return f"Y[{lam.canonical_string()}](d) = " + " + ".join(parts)


def render_class_latex(lam, cls):
    terms = " + ".join(
        f"\\left({format_dpoly(coeff).replace('*', ' ')}\\right) s_{{{rho.r1},{rho.r2}}}"
        for rho, coeff in cls.items()
    )
    return f"\\left[\\,\\overline Y_{{{lam.canonical_string()}}}(d)\\right] = {terms or '0'}"


def render_table_plain(table):
    lines = []
    for row in table.rows:
        f = row.formula
        lines.append(
            f"Pl[{f.lam.canonical_string()};{f.codim_index}] = {format_dpoly(f.formula)}"
            f"   (predicted degree {row.prediction.degree},"
            f" leading {format_rat(row.prediction.coefficient)},"
            f" {row.prediction.regime}: {'match' if row.match else 'MISMATCH ' + row.details})"
        )
    return "\n".join(lines)


def render_table_json(table):
    from .exactalg import dpoly_to_coeff_strings

    return {
        "partition": list(table.lam.parts),
        "codim": table.lam.codim,
        "rows": [
            {
                "j": row.formula.j,
                "codim_index": row.formula.codim_index,
                "coeff": dpoly_to_coeff_strings(row.formula.formula),
                "predicted_degree": row.prediction.degree,
                "predicted_leading": format_rat(row.prediction.coefficient),
                "regime": row.prediction.regime,
                "match": row.match,
            }
            for row in table.rows
        ],
    }


def render_table_latex(table):
    lines = []
    for row in table.rows:
        f = row.formula
        lines.append(
            f"\\Pl_{{{f.lam.canonical_string()};{f.codim_index}}}(d) = "
            + format_dpoly(f.formula).replace("*", " ")
        )
    return "\n".join(lines)


# -- cache handling ----------------------------------------------------------


def open_cache(path):
    if path and os.path.exists(path):
        return ClassCache.load(path)
    return ClassCache()


def save_cache(cache, path):
    if path:
        cache.save(path)


# -- verification sweep -------------------------------------------------------


@dataclass
class CheckResult:
    name: str
    passed: int = 0
    failures: list = None

    def __post_init__(self):
        if self.failures is None:
            self.failures = []

    def record(self, ok, witness):
        if ok:
            self.passed += 1
        else:
            self.failures.append(witness)


def run_verification(max_weight, pivots="min", cache=None):
    """Sweep all partitions without 1's of weight <= max_weight and run the
    pivot-independence, closed-form, top-degree and leading-term checks.

    Returns a list of CheckResult, one per check.
    """
    partitions = enumerate_partitions_no_ones(max_weight)
    cache = cache if cache is not None else ClassCache()

    pivot_check = CheckResult("pivot-independence")
    closed_form = CheckResult("closed-form-single-part")
    top_degree = CheckResult("top-degree")
    leading = CheckResult("leading-term")

    for lam in partitions:
        cls = crs_class(lam, PivotPolicy.min_part(), cache)

        # pivot independence: recompute with other removal orders, fresh caches
        policies = [PivotPolicy.max_part()]
        if pivots == "all" and len(lam.parts) > 1:
            policies.append(PivotPolicy.explicit(sorted(lam.parts)))
            policies.append(PivotPolicy.explicit(sorted(lam.parts, reverse=True)))
        ok = all(crs_class(lam, p, ClassCache()) == cls for p in policies)
        pivot_check.record(ok, (str(lam), "pivot-independence", "identical classes", "diverged"))

        # single-part closed form
        if len(lam.parts) == 1:
            expected = ym_class_closed_form(lam.parts[0])
            closed_form.record(
                cls == expected, (str(lam), "closed-form-single-part", repr(expected), repr(cls))
            )

        # top d-degree slice
        want = top_degree_class(lam)
        got = top_degree_slice(cls, lam.weight)
        top_degree.record(got == want, (str(lam), "top-degree", repr(want), repr(got)))

        # leading terms of every formula
        table = plucker_formulas(lam, cache=cache)
        for row in table.rows:
            leading.record(
                row.match,
                (
                    str(lam),
                    f"leading-term j={row.formula.j}",
                    f"degree {row.prediction.degree} leading {row.prediction.coefficient}",
                    row.details or "mismatch",
                ),
            )

    return [pivot_check, closed_form, top_degree, leading]


# -- subcommands --------------------------------------------------------------


def cmd_class(args):
    lam = parse_partition(args.partition)
    cache = open_cache(args.cache)
    cls = crs_class(lam, _policy(args.pivot), cache)
    save_cache(cache, args.cache)
    if args.format == "json":
        print(json.dumps(class_to_json(cls, lam), sort_keys=True))
    elif args.format == "latex":
        print(render_class_latex(lam, cls))
    else:
        print(render_class_plain(lam, cls))
    return EXIT_OK


def cmd_plucker(args):
    lam = parse_partition(args.partition)
    cache = open_cache(args.cache)
    if args.codim is not None and args.eval is not None:
        value = plucker_value(lam, args.codim, args.eval, cache=cache)
        save_cache(cache, args.cache)
        print(value)
        return EXIT_OK
    table = plucker_formulas(lam, cache=cache)
    save_cache(cache, args.cache)
    if args.codim is not None:
        from .plucker import index_to_j

        j = index_to_j(lam, args.codim)
        table = type(table)(table.lam, (table.rows[j],))
    elif args.eval is not None:
        values = [
            plucker_value(lam, row.formula.codim_index, args.eval, cache=cache)
            for row in table.rows
        ]
        print("\n".join(str(v) for v in values))
        return EXIT_OK
    if args.format == "json":
        print(json.dumps(render_table_json(table), sort_keys=True))
    elif args.format == "latex":
        print(render_table_latex(table))
    else:
        print(render_table_plain(table))
    return EXIT_OK


def cmd_verify(args):
    if args.max_weight < 2:
        print("--max-weight must be at least 2", file=sys.stderr)
        return EXIT_BAD_INPUT
    cache = open_cache(args.cache)
    results = run_verification(args.max_weight, pivots=args.pivots, cache=cache)
    save_cache(cache, args.cache)
    n_partitions = len(enumerate_partitions_no_ones(args.max_weight))
    if args.format == "json":
        print(
            json.dumps(
                {
                    "max_weight": args.max_weight,
                    "partitions": n_partitions,
                    "checks": [
                        {"name": r.name, "passed": r.passed, "failed": len(r.failures)}
                        for r in results
                    ],
                },
                sort_keys=True,
            )
        )
    else:
        print(f"verified {n_partitions} partitions of weight <= {args.max_weight}")
        for r in results:
            print(f"  {r.name}: {r.passed} passed, {len(r.failures)} failed")
    failures = [w for r in results for w in r.failures]
    if failures:
        lam, check, expected, got = failures[0]
        print(
            f"first failure: partition {lam}, check {check}: expected {expected}, got {got}",
            file=sys.stderr,
        )
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="crsplucker",
        description="Exact classes of coincident root strata and generalized Plucker formulas.",
    )
    parser.add_argument(
        "--cache",
        default=os.environ.get(CACHE_ENV_VAR),
        help=f"path to a JSON class cache (default: ${CACHE_ENV_VAR})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_class = sub.add_parser("class", help="compute the class of one partition")
    p_class.add_argument("partition", help="comma-separated parts, each >= 2, e.g. 10,2,2")
    p_class.add_argument("--format", choices=["plain", "json", "latex"], default="plain")
    p_class.add_argument("--pivot", choices=["min", "max"], default="min")
    p_class.set_defaults(func=cmd_class)

    p_pl = sub.add_parser("plucker", help="Plucker formulas and values")
    p_pl.add_argument("partition")
    p_pl.add_argument("--codim", type=int, default=None, help="codimension index c - 2j")
    p_pl.add_argument("--all", action="store_true", help="print every row (default)")
    p_pl.add_argument("--eval", type=int, default=None, metavar="D0", help="evaluate at degree D0")
    p_pl.add_argument("--format", choices=["plain", "json", "latex"], default="plain")
    p_pl.set_defaults(func=cmd_plucker)

    p_ver = sub.add_parser("verify", help="run the consistency sweep")
    p_ver.add_argument("--max-weight", type=int, required=True)
    p_ver.add_argument("--pivots", choices=["min", "all"], default="min")
    p_ver.add_argument("--format", choices=["plain", "json"], default="plain")
    p_ver.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BelowValidityFloor as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_BELOW_FLOOR
    except (NonPolynomial, DivisibilityViolation) as exc:
        print(f"internal assertion failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ValueError, BadIndex) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
