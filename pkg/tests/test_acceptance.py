"""Acceptance suite: every criterion at its stated tolerance.

Each test prints one `ACCEPTANCE <id>: PASS` line (visible with -s or
-rA); pytest -v adds the authoritative pass/fail line per criterion.
Timed budgets are wall-clock on the current interpreter.
"""

import subprocess
import sys
import time

from maxca.automaton import cycle_length_from, stream_bits, unit_seed
from maxca.charpoly import RuleVector, characteristic_polynomial, reverse
from maxca.enumerator import enumerate_maxlen, filter_stats
from maxca.gf2poly import format_poly, weight
from maxca.primitivity import is_primitive
from maxca.tables import load_rows, verify_all

EXPECTED_POLY_COUNTS = [1, 2, 2, 6, 6, 18, 16, 48, 60, 176, 144]  # n = 2..12


def charpoly_str(rules: str) -> str:
    return format_poly(characteristic_polynomial(RuleVector(rules)))


def _timed(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def test_criterion_1_worked_example_reproduction():
    best = min(
        _timed(lambda: (charpoly_str("00000110"), charpoly_str("01100000")))
        for _ in range(10)
    )
    assert charpoly_str("00000110") == "100011101"
    assert charpoly_str("01100000") == "100011101"
    assert best < 1e-3, f"took {best * 1e3:.3f} ms, budget 1 ms"
    print(f"\nACCEPTANCE 1 worked-example reproduction: PASS ({best * 1e6:.0f} us)")


def test_criterion_2_table_verification():
    t0 = time.perf_counter()
    report = verify_all()
    elapsed = time.perf_counter() - t0
    assert elapsed < 10.0, f"took {elapsed:.2f} s, budget 10 s"
    assert report.total == 479

    # All three checks ran on every row: each failure verdict carries a
    # charpoly comparison, a primitivity verdict, and an oracle cycle.
    for v in report.failures:
        assert isinstance(v.charpoly_match, bool)
        assert isinstance(v.poly_primitive, bool)
        assert v.cycle_length is not None

    # Every failure must be independently diagnosed as a transcription
    # defect, never an implementation bug: the algebra route (primitive
    # characteristic polynomial) and the simulation route (full cycle)
    # must agree about the printed rule vector.
    for v in report.failures:
        rv = RuleVector(v.row.rv_str)
        algebra_says_max = is_primitive(characteristic_polynomial(rv))
        oracle_says_max = v.cycle_length == (1 << v.row.n) - 1
        assert algebra_says_max == oracle_says_max

    # The known state of the bundled data: the n=5 block prints sound
    # columns in a scrambled pairing; everything else is 100% clean.
    assert report.passed == 473
    assert {v.row.n for v in report.failures} == {5}
    assert all(v.poly_primitive and v.cycle_length == 31 for v in report.failures)
    print(
        "\nACCEPTANCE 2 table verification: PASS "
        f"({report.passed}/{report.total} rows pass in {elapsed:.2f} s; "
        "6 n=5 rows diagnosed as source mispairings, itemized in the errata)"
    )


def test_criterion_3_count_reproduction():
    for n, want in zip(range(2, 13), EXPECTED_POLY_COUNTS):
        got = len({e.polynomial.bits for e in enumerate_maxlen(n)})
        assert got == want, f"n={n}: {got} != {want}"
    elapsed = _timed(lambda: enumerate_maxlen(12, jobs=1))
    assert elapsed < 5.0, f"n=12 took {elapsed:.2f} s, budget 5 s"
    print(f"\nACCEPTANCE 3 count reproduction: PASS (n=12 in {elapsed:.2f} s)")


def test_criterion_4_oracle_equivalence():
    t0 = time.perf_counter()
    for n in range(2, 11):
        period = (1 << n) - 1
        simulated = {
            mask
            for mask in range(1 << n)
            if cycle_length_from(RuleVector.from_mask(mask, n), unit_seed(n)) == period
        }
        algebraic = {e.rule_vector.mask for e in enumerate_maxlen(n)}
        assert simulated == algebraic, f"n={n} sets differ"
    elapsed = time.perf_counter() - t0
    assert elapsed < 60.0, f"took {elapsed:.2f} s, budget 60 s"
    print(f"\nACCEPTANCE 4 oracle equivalence: PASS (n<=10 in {elapsed:.2f} s)")


def test_criterion_5_filter_soundness():
    for n in range(2, 13):
        for mask in range(1 << n):
            p = characteristic_polynomial(RuleVector.from_mask(mask, n))
            rejected = weight(p) % 2 == 0 or p.bits & 1 == 0
            if rejected:
                assert not is_primitive(p), (n, mask)
        s = filter_stats(n)
        assert s.even_weight + s.zero_constant + s.not_primitive + s.survivors == 1 << n
    print("\nACCEPTANCE 5 filter soundness: PASS (no primitive rejected, n<=12)")


def test_criterion_6_mirror_invariance():
    for n in range(2, 13):
        for mask in range(1 << n):
            rv = RuleVector.from_mask(mask, n)
            assert characteristic_polynomial(reverse(rv)) == characteristic_polynomial(rv)
    for n in range(2, 13):
        pairs = {(e.polynomial.bits, e.rule_vector.mask) for e in enumerate_maxlen(n)}
        assert all((bits, reverse(RuleVector.from_mask(m, n)).mask) in pairs
                   for bits, m in pairs)
    print("\nACCEPTANCE 6 mirror invariance: PASS (exhaustive n<=12)")


def test_criterion_7_m_sequence_balance():
    used = {}
    for n in (4, 8, 12):
        vectors = [r.rv_str for r in load_rows(n)]
        # The n=4 block prints fewer than 5 rows; mirrors are equally
        # published vectors, so top up with those before capping at 5.
        vectors += [str(reverse(RuleVector(v))) for v in vectors]
        deduped = list(dict.fromkeys(vectors))[:5]
        used[n] = len(deduped)
        period = (1 << n) - 1
        for rules in deduped:
            rv = RuleVector(rules)
            ones = sum(stream_bits(rv, unit_seed(n), period, tap=0))
            assert ones == 1 << (n - 1), (n, rules, ones)
    print(f"\nACCEPTANCE 7 m-sequence balance: PASS (vectors used: {used})")


def test_criterion_8_determinism_across_jobs():
    def run(jobs):
        return subprocess.run(
            [sys.executable, "-m", "maxca.cli", "enum", "--n", "12", "--jobs", jobs],
            capture_output=True,
            check=True,
        ).stdout

    one, eight = run("1"), run("8")
    assert one == eight
    assert one.count(b"\n") == 288
    print("\nACCEPTANCE 8 determinism across jobs: PASS (byte-identical)")
