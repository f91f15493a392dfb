"""Acceptance gate: one printed PASS/FAIL line per criterion, all checks exact."""

from __future__ import annotations

import itertools
import json
import time
from fractions import Fraction

import pytest

from eulersym import euler as euler_mod
from eulersym.cli import DEFAULT_WEIGHTS, SweepConfig, main, sweep
from eulersym.dirichlet import enumerate_characters, quadratic_character, trivial_character
from eulersym.euler import euler_numbers, euler_polynomial, power_sum_series_check
from eulersym.fermionic import convergence_trace, finite_level_shift_check
from eulersym.symmetry import REDUNDANCIES, cross_form_check, grid, redundancy_check

from oracles import classical_euler_numbers_by_division

SWEEP_MODULI = (1, 3, 5, 7, 9)
SWEEP_MAX_N = 6
ODD_TRIPLES = list(itertools.product((1, 3, 5), repeat=3))


@pytest.fixture
def report(capsys):
    def emit(number: int, title: str, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} -- {detail}")
    return emit


def sweep_characters():
    return [chi for d in SWEEP_MODULI for chi in enumerate_characters(d)]


def test_criterion_1_classical_specialization(report):
    euler_mod._TABLES.clear()
    euler_mod._poly_int_coeffs.cache_clear()
    euler_polynomial.cache_clear()
    start = time.perf_counter()
    chi = trivial_character()
    got = [v.to_rational() for v in euler_numbers(chi, 8).values]
    oracle = classical_euler_numbers_by_division(8)
    first = got[:4] == [1, Fraction(-1, 2), 0, Fraction(1, 4)]
    reflection = all(
        euler_polynomial(chi, n, x) + euler_polynomial(chi, n, x + 1) == 2 * x**n
        for n in range(9) for x in range(n + 1)
    )
    elapsed = time.perf_counter() - start
    ok = got == oracle and first and reflection and elapsed < 1.0
    report(1, "classical specialization", ok,
           f"table==oracle {got == oracle}, E0..E3 {first}, reflection {reflection}, {elapsed:.3f}s")
    assert ok


def test_criterion_2_generalized_values(report):
    q = quadratic_character(3)
    e0 = euler_numbers(q, 0)[0]
    prefix = sum((-1) ** j * q.signed_values()[j] for j in range(3))
    checked = failed = 0
    for d in range(1, 12, 2):
        for chi in enumerate_characters(d):
            for w in (1, 3, 5):
                checked += 1
                failed += not power_sum_series_check(chi, w, 12)
    ok = e0 == -2 and prefix == -2 and failed == 0
    report(2, "generalized values", ok,
           f"E0={e0}, prefix sum={prefix}, power-sum checks {checked - failed}/{checked}")
    assert ok


def test_criterion_3_theorem_suite(report):
    config = SweepConfig(theorems=tuple(range(1, 9)), moduli=SWEEP_MODULI, max_n=SWEEP_MAX_N,
                         weights=tuple(DEFAULT_WEIGHTS))
    start = time.perf_counter()
    counts = {"pass": 0, "fail": 0, "skip": 0}
    bad_skips = 0
    for rec in sweep(config):
        counts[rec["verdict"]] += 1
        if rec["verdict"] == "skip":
            bad_skips += rec["theorem"] in (1, 7) or rec["skip_reason"] != "parity"
    elapsed = time.perf_counter() - start
    ok = counts["fail"] == 0 and counts["pass"] > 0 and bad_skips == 0 and elapsed <= 600
    report(3, "theorem suite", ok,
           f"{counts['pass']} pass, {counts['fail']} fail, {counts['skip']} parity skips, {elapsed:.1f}s")
    assert ok


def test_criterion_4_cross_form(report):
    checked = points = 0
    failures = []
    for chi in sweep_characters():
        for n in range(SWEEP_MAX_N + 1):
            for w in ODD_TRIPLES:
                r = cross_form_check(chi, n, w)
                checked += 1
                points += r.checked_points
                if not r:
                    failures.append((chi.modulus, chi.index, n, w))
    ok = not failures
    report(4, "cross-form consistency", ok,
           f"{checked} configurations, {points} grid points, {len(failures)} failures")
    assert ok, failures[:5]


def test_criterion_5_redundancy(report):
    checked = 0
    failures = []
    for chi in sweep_characters():
        for n in range(SWEEP_MAX_N + 1):
            for w in ODD_TRIPLES:
                for red in REDUNDANCIES:
                    ys = grid(1, n) if red.theorem_id == 4 else [()]
                    for y in ys:
                        checked += 1
                        if not redundancy_check(red, chi, n, w, y):
                            failures.append((red.label, chi.modulus, chi.index, n, w, y))
    ok = not failures
    report(5, "index-relabeling redundancy", ok, f"{checked} term-table comparisons, {len(failures)} failures")
    assert ok, failures[:5]


def test_criterion_6_fermionic(report):
    shift_checked = shift_failed = 0
    for d in (1, 3, 5):
        for chi in enumerate_characters(d):
            if not chi.is_real:
                continue
            for n in range(5):
                for s in (1, 3, 5):
                    for M in range(1, 46, 2):
                        shift_checked += 1
                        shift_failed += not finite_level_shift_check(chi, n, s, M)
    trace = convergence_trace(trivial_character(), 1, 3, 5)
    closed = trace.partial_sums == [Fraction(3**N - 1, 2) for N in range(1, 6)]
    exact = trace.valuations == [1, 2, 3, 4, 5]
    family = nondecreasing = 0
    for d in (1, 3):
        for chi in enumerate_characters(d):
            for n in range(5):
                for p in (5, 7):
                    t = convergence_trace(chi, n, p, 5)
                    family += 1
                    nondecreasing += t.is_nondecreasing()
    ok = shift_failed == 0 and closed and exact and nondecreasing == family
    report(6, "fermionic checks", ok,
           f"shift {shift_checked - shift_failed}/{shift_checked}, valuations {trace.valuations}, "
           f"nondecreasing traces {nondecreasing}/{family}")
    assert ok


def test_criterion_7_determinism(report, tmp_path, capsys):
    args = ["verify", "--theorems", "1-8", "--moduli", "1,3,5", "--max-n", "3"]
    one, eight = tmp_path / "jobs1.jsonl", tmp_path / "jobs8.jsonl"
    code1 = main(args + ["--jobs", "1", "--out", str(one)])
    code8 = main(args + ["--jobs", "8", "--out", str(eight)])
    identical = one.read_bytes() == eight.read_bytes()
    n_records = len(one.read_bytes().splitlines())
    fault = tmp_path / "fault.jsonl"
    code_fault = main(["verify", "--theorems", "2", "--moduli", "3", "--max-n", "2",
                       "--weights", "1,3,5", "--inject-fault", "--out", str(fault)])
    first_fail = next(json.loads(x) for x in fault.read_text().splitlines())
    located = first_fail["verdict"] == "fail" and "y" in first_fail.get("discrepancy", {})
    capsys.readouterr()
    ok = code1 == 0 and code8 == 0 and identical and code_fault == 1 and located
    report(7, "determinism and fault injection", ok,
           f"{n_records} records byte-identical {identical}, fault exit {code_fault}, "
           f"discrepancy at y={first_fail.get('discrepancy', {}).get('y')}")
    assert ok
