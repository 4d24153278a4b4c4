"""Certified upper bounds on the ratio by scanning circulant quotients.

Any dominating set of the circulant on Z_p lifts to a periodic dominating
set of Z with the same density, so gamma(p)/p is an upper bound on the
ratio for every p and the scan minimum is a certified bound.  The scan cap
is the caller's; the a-priori bound on the period of an optimal periodic
set (c * 2^c where c spans the step set with 0) is reported in the result
but never enforced, since it is astronomically larger than any practical
cap.

DOMKIT_THREADS caps process-level parallelism of the scan; the reduction
over periods is deterministic regardless of schedule.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .construct import construct_best, verify_dominating
from .formula import RatioResult, family_set
from .model import ConsistencyError, DifferenceSet, PeriodicSet
from .solver import gamma_exact, reduce_mod


@dataclass(frozen=True)
class SearchReport:
    best_ratio: Fraction
    best_period: int
    best_witness: PeriodicSet
    per_period: tuple[tuple[int, int, Fraction], ...]
    cap: int
    theoretical_cap_note: str


@dataclass(frozen=True)
class ConsistencyReport:
    d: int
    s: int
    formula: RatioResult
    search: SearchReport
    constructed: PeriodicSet
    attained_at_construction: bool
    consistent: bool
    violations: tuple[str, ...]


def period_bound(steps: DifferenceSet) -> tuple[int, int]:
    """(c, c * 2^c) where c is the span of the step set together with 0."""
    c = max(max(steps.elements), 0) - min(min(steps.elements), 0)
    return c, c * 2**c


def _scan_period(args):
    elements, p = args
    inst = reduce_mod(DifferenceSet(elements), p)
    cert = gamma_exact(inst)
    return p, cert.gamma, tuple(sorted(cert.witness))


def _resolve_jobs(jobs: int | None) -> int:
    if jobs is None:
        jobs = int(os.environ.get("DOMKIT_THREADS", "1"))
    return max(1, jobs)


def search_ratio(
    steps: DifferenceSet, max_period: int, jobs: int | None = None
) -> SearchReport:
    """Scan periods 1..max_period and report the best certified ratio."""
    if max_period < 1:
        raise ValueError("max_period must be positive")
    jobs = _resolve_jobs(jobs)
    tasks = [(steps.elements, p) for p in range(1, max_period + 1)]
    if jobs == 1 or max_period < 4:
        rows = [_scan_period(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_scan_period, tasks, chunksize=4))
    per_period = tuple((p, g, Fraction(g, p)) for p, g, _ in rows)
    best_p, best_g, best_res = min(rows, key=lambda row: (Fraction(row[1], row[0]), row[0]))
    witness = PeriodicSet(best_p, frozenset(best_res))
    if not verify_dominating(witness, steps):
        raise ConsistencyError("scan produced a non-dominating witness")
    c, bound = period_bound(steps)
    note = (
        f"an optimal periodic dominating set has period at most c*2^c = {bound} "
        f"(c = {c}, span of the steps with 0); reported only, never scanned"
    )
    return SearchReport(
        best_ratio=Fraction(best_g, best_p),
        best_period=best_p,
        best_witness=witness,
        per_period=per_period,
        cap=max_period,
        theoretical_cap_note=note,
    )


def consistency_check(
    d: int, s: int, max_period: int, jobs: int | None = None
) -> ConsistencyReport:
    """Cross-validate formula, construction, and scan for one family member.

    Checks that the scan never beats the closed form, that its minimum
    equals the closed form, and that the constructed period attains it.
    """
    constructed, formula = construct_best(d, s)
    if max_period < constructed.period:
        raise ValueError("cap too small")
    steps = family_set(d, s)
    report = search_ratio(steps, max_period, jobs)
    violations = []
    if report.best_ratio != formula.value:
        violations.append(
            f"scan minimum {report.best_ratio} != formula {formula.value}"
        )
    for p, g, ratio in report.per_period:
        if ratio < formula.value:
            violations.append(f"period {p} beats the formula: {g}/{p}")
    by_period = {p: ratio for p, _, ratio in report.per_period}
    attained = by_period[constructed.period] == formula.value
    if not attained:
        violations.append(
            f"constructed period {constructed.period} does not attain the formula"
        )
    return ConsistencyReport(
        d=d,
        s=s,
        formula=formula,
        search=report,
        constructed=constructed,
        attained_at_construction=attained,
        consistent=not violations,
        violations=tuple(violations),
    )
