"""The eight exit criteria, each returning a pass/fail line with its evidence.

``bridgelab report`` and ``tests/test_acceptance.py`` both run these.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Callable

from bridgelab.classes import (
    all_graphs,
    cycles_at_least,
    cycles_exactly,
    forests,
)
from bridgelab.enumeration import (
    count_row,
    enumerate_all,
    enumerate_connected,
    labelled_count_from_unlabelled,
    labelled_filter_oracle,
    rooted_connected_count,
)
from bridgelab.series import (
    euler_transform,
    labelled_forest_frag_expectation,
    labelled_forests_seq,
    otter_trees_seq,
    renyi_ratio,
    rooted_trees_seq,
    tau_ratio,
)
from bridgelab.verify import (
    TARGETS,
    awkward_example,
    check_bridge_addable,
    check_decomposable,
    check_permutation_invariance,
    exceeds_exp,
    run_theorem1,
)

TAU_TOLERANCE = Decimal("0.005")
TAU_STEP_TOLERANCE = Decimal("0.002")
RENYI_TOLERANCE = Decimal("0.01")


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float
    limit: float | None

    @property
    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        budget = f" (limit {self.limit:.0f}s)" if self.limit else ""
        return f"[{status}] {self.number}. {self.title}: {self.detail} [{self.seconds:.1f}s{budget}]"

    def as_dict(self) -> dict:
        return {
            "criterion": self.number,
            "title": self.title,
            "pass": self.passed,
            "detail": self.detail,
            "seconds": round(self.seconds, 3),
            "limit_seconds": self.limit,
        }


def _cycle_classes():
    return [cycles_at_least(3), cycles_exactly(3), cycles_at_least(4), cycles_exactly(4)]


def labelled_connectivity() -> tuple[bool, str]:
    failures = []
    checked = 0
    for c in [all_graphs(), forests(), *_cycle_classes()]:
        for n in range(1, 8):
            row = count_row(c, n)
            if row.labelled_total == 0:
                continue
            checked += 1
            p = Fraction(row.labelled_connected, row.labelled_total)
            if not exceeds_exp(p, Fraction(-1)):
                failures.append(f"{c} n={n} P={p}")
            if n <= 5:
                oracle = labelled_filter_oracle(c, n).row
                if (oracle.labelled_total, oracle.labelled_connected) != (row.labelled_total, row.labelled_connected):
                    failures.append(f"{c} n={n} oracle mismatch")
    if failures:
        return False, "; ".join(failures)
    return True, f"{checked} (class, n) rows with P >= 1/e, oracle agrees for n <= 5"


def encoding_bound() -> tuple[bool, str]:
    plans = [(forests(), 8), *[(c, 8) for c in _cycle_classes()], (all_graphs(), 7)]
    failed = []
    members = 0
    for c, nmax in plans:
        report = run_theorem1(c, nmax)
        members += sum(r.counts["unlabelled_total"] for r in report.rows)
        if report.failed:
            failed.append(f"{c}: {' | '.join(report.notes)}")
    if failed:
        return False, "; ".join(failed)
    return True, f"{members} members encoded and decoded, codewords distinct, both count bounds hold"


def sequences_match_enumeration() -> tuple[bool, str]:
    mismatches = []
    t = otter_trees_seq(8)
    f = euler_transform(t)
    r = rooted_trees_seq(8)
    f_lab = labelled_forests_seq(8)
    for n in range(1, 9):
        if t[n] != len(enumerate_connected(forests(), n)):
            mismatches.append(f"t({n})")
        if f[n] != len(enumerate_all(forests(), n)):
            mismatches.append(f"f({n})")
        if r[n] != rooted_connected_count(forests(), n):
            mismatches.append(f"r({n})")
        if f_lab[n] != labelled_count_from_unlabelled(enumerate_all(forests(), n)):
            mismatches.append(f"f_lab({n}) vs n!/|Aut|")
        if n <= 5 and f_lab[n] != labelled_filter_oracle(forests(), n).row.labelled_total:
            mismatches.append(f"f_lab({n}) vs oracle")
    if mismatches:
        return False, "mismatch at " + ", ".join(mismatches)
    return True, f"t, f, r, f_lab agree for n <= 8 (f(8)={f[8]}, r(8)={r[8]}, f_lab(8)={f_lab[8]})"


def tau_convergence() -> tuple[bool, str]:
    at200 = tau_ratio(200).decimal()
    at400 = tau_ratio(400).decimal()
    gap = abs(at200 - TARGETS.tau)
    step = abs(at200 - at400)
    ok = gap <= TAU_TOLERANCE and step < TAU_STEP_TOLERANCE
    return ok, (
        f"tau(200)={at200:.6f} |tau(200)-{TARGETS.tau}|={gap:.6f} (tol {TAU_TOLERANCE}); "
        f"tau(400)={at400:.6f} |step|={step:.6f} (tol {TAU_STEP_TOLERANCE})"
    )


def renyi_convergence() -> tuple[bool, str]:
    limit = Decimal("-0.5").exp()
    at300 = renyi_ratio(300).decimal()
    at50 = renyi_ratio(50).decimal()
    gap = abs(at300 - TARGETS.e_minus_half)
    closer = abs(at300 - limit) < abs(at50 - limit)
    ok = gap <= RENYI_TOLERANCE and closer
    return ok, (
        f"renyi(300)={at300:.6f} |.-{TARGETS.e_minus_half}|={gap:.6f} (tol {RENYI_TOLERANCE}); "
        f"|renyi(300)-e^-1/2|={abs(at300 - limit):.6f} < |renyi(50)-e^-1/2|={abs(at50 - limit):.6f}: {closer}"
    )


def frag_bound() -> tuple[bool, str]:
    values = {n: labelled_forest_frag_expectation(n).fraction for n in range(2, 61)}
    worst = max(values, key=values.get)
    exact3 = values[3] == Fraction(5, 7)
    ok = exact3 and all(v < 2 for v in values.values())
    return ok, f"max over 2..60 is {float(values[worst]):.6f} at n={worst}; E[frag] at n=3 = {values[3]}"


def awkward() -> tuple[bool, str]:
    exact = awkward_example(3, "exactly")
    loose = awkward_example(3, "at_least")
    ok = (
        len(exact.members) == 2
        and exact.p_connected == Fraction(1, 2)
        and exact.e_frag == Fraction(exact.n, 4)
        and len(loose.members) == 3
        and loose.p_connected == Fraction(2, 3)
        and loose.e_frag == Fraction(loose.n, 6)
    )
    note = "exactly-3 reproduces 1/2 and n/4; at-least-3 differs" if ok else "unexpected values"
    return ok, (
        f"exactly: {len(exact.members)} members P={exact.p_connected} E[frag]={exact.e_frag}; "
        f"at_least: {len(loose.members)} members P={loose.p_connected} E[frag]={loose.e_frag}; {note}"
    )


def property_suites() -> tuple[bool, str]:
    reports = [check_permutation_invariance(7, trials=20, seed=2024)]
    for c in [all_graphs(), forests(), *_cycle_classes()]:
        reports.append(check_bridge_addable(c, 7))
        reports.append(check_decomposable(c, 7))
    failed = [f"{r.name}/{r.cls}" for r in reports if r.failed]
    if failed:
        return False, "failed: " + ", ".join(failed)
    return True, f"{len(reports)} exhaustive property checks at n <= 7"


CRITERIA: list[tuple[int, str, Callable[[], tuple[bool, str]], float | None]] = [
    (1, "labelled P(connected) >= 1/e", labelled_connectivity, 120),
    (2, "rooted encoding bound and codec roundtrip", encoding_bound, 300),
    (3, "sequences equal enumeration", sequences_match_enumeration, None),
    (4, "tau convergence", tau_convergence, 30),
    (5, "Renyi ratio", renyi_convergence, 30),
    (6, "labelled forest E[frag] < 2", frag_bound, None),
    (7, "awkward example", awkward, None),
    (8, "property suites", property_suites, None),
]


def run_criterion(number: int) -> CriterionResult:
    for num, title, fn, limit in CRITERIA:
        if num == number:
            start = time.perf_counter()
            ok, detail = fn()
            seconds = time.perf_counter() - start
            if limit is not None and seconds > limit:
                ok = False
                detail += f"; exceeded {limit}s"
            return CriterionResult(num, title, ok, detail, seconds, limit)
    raise KeyError(number)


def run_all() -> list[CriterionResult]:
    return [run_criterion(num) for num, *_ in CRITERIA]
