"""Acceptance gate: one printed PASS/FAIL line per criterion.

Each test prints its verdict line directly to the terminal (bypassing
capture) and then asserts it.  Where a claimed identity is internally
inconsistent, acceptance is the deterministic documented verdict, never
the printed value: the third Moufang pattern, the third replayed
derivation, the partial Lemma 6 split, and the printed seventh-slot
rule are expected to land as recorded deviations with witnesses.
"""

import json
import pathlib
import random
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from cl07.blades import N_BLADES, blade_mul
from cl07.multivector import Multivector, gp, inverse
from cl07.octonion import Octonion, circ, table_product
from cl07.genprod import e_units
from cl07.laws import (
    FAILS,
    HOLDS,
    check_lemma,
    check_moufang,
    reproduce_example,
    sigma_scan,
    theorem1_scan,
    verify_table,
)

GOLDENS = pathlib.Path(__file__).parent / "goldens"
OMEGA_TEXT = "1 e1^e2^e3^e4^e5^e6^e7"


@pytest.fixture
def say(capsys):
    def _say(n, ok, detail):
        with capsys.disabled():
            print(f"ACCEPTANCE {n}: {'PASS' if ok else 'FAIL'} - {detail}")
        return ok
    return _say


def test_criterion_01_product_matches_the_oracle(say):
    t0 = time.monotonic()
    bad = sum(
        circ(Octonion.unit(a), Octonion.unit(b)) != table_product(a, b)
        for a in range(8)
        for b in range(8)
    )
    dt = time.monotonic() - t0
    ok = bad == 0 and dt < 1.0
    assert say(1, ok, f"projector product vs hard-coded table, "
                      f"{64 - bad}/64 exact cells in {dt:.3f}s")


def test_criterion_02_successor_rule(say):
    bad = []
    for a in range(1, 8):
        b = a % 7 + 1
        c = (a + 2) % 7 + 1
        if circ(Octonion.unit(a), Octonion.unit(b)) != Octonion.unit(c):
            bad.append(a)
    assert say(2, not bad, f"e_a o e_(a+1) = e_(a+3), indices cycling 1..7, "
                           f"{7 - len(bad)}/7 exact")


def test_criterion_03_moufang_trials(say):
    t0 = time.monotonic()
    verdicts = {i: check_moufang("circ", i) for i in (1, 2, 3, 4)}
    dt = time.monotonic() - t0
    plain_ok = all(verdicts[i].status == HOLDS
                   and verdicts[i].sign_pattern["held"] == 500
                   for i in (1, 2, 4))
    v3 = verdicts[3]
    # The third pattern as printed deviates on every trial, pinned case
    # included, while its swapped-left reading holds; the deterministic
    # documented verdict is the acceptance.
    third_ok = (
        v3.status == FAILS
        and v3.sign_pattern["held"] == 0
        and v3.cases == 501
        and v3.witnesses[0].get("pinned") is True
        and any("held on 500/500 trials" in n for n in v3.notes)
    )
    ok = plain_ok and third_ok and dt < 5.0
    assert say(3, ok, f"500 seeded triples: patterns 1,2,4 hold; pattern 3 "
                      f"as printed fails 501/501 with the swapped reading "
                      f"holding, in {dt:.2f}s")


def test_criterion_04_replayed_derivations(say):
    checks = []
    t2, v2 = reproduce_example(2)
    checks.append(v2.status == HOLDS and "final: -e3" in t2)
    t4, v4 = reproduce_example(4)
    checks.append(v4.status == HOLDS and "claimed final: e3" in t4)
    t5, v5 = reproduce_example(5)
    checks.append(v5.status == HOLDS
                  and "first chain final: e4" in t5
                  and "second chain final: -e4" in t5)
    t1, v1 = reproduce_example(1)
    checks.append(
        v1.status == FAILS
        and "[MISMATCH]" in t1
        and "claimed final: -e2" in t1
        and "evaluator (ascending/ascending): e1 ∘_u e4 = 1 e2" in t1
    )
    # The third replay's printed cases swap roles against exact
    # evaluation; its acceptance is the recorded two-witness verdict.
    t3, v3 = reproduce_example(3)
    w = v3.witnesses
    checks.append(
        v3.status == FAILS
        and len(w) == 2
        and (w[0]["computed_lhs"], w[0]["computed_rhs"]) == ("1 e3", "-1 e3")
        and w[0]["claimed_lhs"] == w[0]["claimed_rhs"] == "-e4"
        and w[1]["computed_lhs"] == w[1]["computed_rhs"] == "-1 e5"
        and (w[1]["claimed_lhs"], w[1]["claimed_rhs"]) == ("e6", "-e6")
    )
    ok = all(checks)
    assert say(4, ok, "replays 2, 4, 5 reach -e3, e3, and the e4/-e4 pair; "
                      "replay 1 flags its off-table step; replay 3 is the "
                      "documented two-witness deviation")


def test_criterion_05_lemma_ledger(say):
    t0 = time.monotonic()
    verdicts = {n: check_lemma(n) for n in (1, 2, 3, 4, 5)}
    dt = time.monotonic() - t0
    checks = [dt < 60.0]
    checks.append(verdicts[4].status == HOLDS and verdicts[4].cases == 7168)
    for n in (1, 2, 3, 5):
        v = verdicts[n]
        rows = v.sign_pattern["by_grade"]
        deviating = sum(r["sigma_minus"] for r in rows)
        checks.append(len(rows) == 8)
        special = [w for w in v.witnesses if "cell" not in w and "u*A" in w]
        checks.append(len(v.witnesses) == deviating + len(special))
    assert say(5, all(checks),
               f"lemmas 1-5 exhaustive over 128 blades in {dt:.2f}s; "
               f"lemma 4 holds under all four fold conventions; per-grade "
               f"sign patterns with a witness for every deviating cell")


def test_criterion_06_derived_unit_frames(say):
    checks = []
    checks.append(e_units(Multivector.scalar(1))
                  == tuple(Octonion.unit(i) for i in range(1, 8)))
    base = verify_table("eunits", Multivector.scalar(1))
    checks.append(base.status == HOLDS and base.sign_pattern["matched"] == 49)
    six = check_lemma(6)
    admissible = [r for r in six.sign_pattern["per_u"] if r["frame"] == "spans"]
    fully = six.sign_pattern["fully_anticommuting"]
    checks.append(len(admissible) >= 10)
    checks.append(len(fully) >= 10)
    checks.append(len(six.witnesses) == sum(
        42 - r["anticommuting_pairs"] for r in admissible))
    for u in (Multivector.scalar(1), Multivector.blade(127, 1),
              Multivector.blade(0b1011, 1)):
        corrected = verify_table("eunits", u, "corrected")
        printed = verify_table("eunits", u, "printed")
        checks.append(corrected.cases == 49)
        checks.append(corrected.sign_pattern["matched"]
                      + len(corrected.witnesses) == 49)
        checks.append(printed.status == FAILS and printed.cases == 0
                      and any("degenerate" in n for n in printed.notes))
    assert say(6, all(checks),
               f"identity frame matches all 49 cells; anticommutation "
               f"checked exactly on {len(admissible)} admissible steers "
               f"({len(fully)} fully anticommuting, deviations witnessed); "
               f"49-entry comparisons emitted under both seventh-slot rules")


def test_criterion_07_sigma_scan(say):
    t0 = time.monotonic()
    first = sigma_scan()
    dt = time.monotonic() - t0
    second = sigma_scan()
    det = first.to_json_dict() == second.to_json_dict()
    rows = {(r["fold_left"], r["fold_right"]):
            (r["uniform_plus"], r["uniform_minus"], r["mixed_count"])
            for r in first.sign_pattern["per_convention"]}
    classes_ok = (
        rows[("ascending", "ascending")] == (["1", OMEGA_TEXT], [], 126)
        and rows[("descending", "descending")] == (["1", OMEGA_TEXT], [], 126)
        and rows[("ascending", "descending")] == (["1"], [OMEGA_TEXT], 126)
        and rows[("descending", "ascending")] == (["1"], [OMEGA_TEXT], 126)
    )
    ok = dt < 60.0 and det and classes_ok
    assert say(7, ok, f"128 blades x 4 conventions in {dt:.2f}s, "
                      f"deterministic; uniform +1 only for the scalar and "
                      f"(per convention) the top blade")


def test_criterion_08_resteering_scan(say):
    v = theorem1_scan(1000, seed=11)
    signs = {w["sign"] for w in v.witnesses}
    checks = [
        v.cases == 1000,
        len(v.witnesses) == 1000,
        signs <= {"+1", "-1", "no_match"},
        v.sign_pattern["collapse_not_plus_one"] == 0,
        v.sign_pattern["by_block"]["collapse"] == {"+1": 100, "-1": 0,
                                                   "no_match": 0},
        all(("lhs" in w and "rhs" in w) for w in v.witnesses
            if w["sign"] == "no_match"),
    ]
    counts = v.sign_pattern["counts"]
    assert say(8, all(checks),
               f"1000 seeded cases, every case classified with witnesses "
               f"({counts}); all scalar-steer collapse cases +1")


def test_criterion_09_clifford_core(say, request):
    full = request.config.getoption("--full")
    t0 = time.monotonic()
    if full:
        triples = ((a, b, c) for a in range(N_BLADES)
                   for b in range(N_BLADES) for c in range(N_BLADES))
        n_triples = N_BLADES ** 3
    else:
        rng = random.Random(90)
        triples = ((rng.randrange(N_BLADES), rng.randrange(N_BLADES),
                    rng.randrange(N_BLADES)) for _ in range(100_000))
        n_triples = 100_000
    bad = 0
    for a, b, c in triples:
        s1, m1 = blade_mul(a, b)
        s2, m2 = blade_mul(m1, c)
        t1, n1 = blade_mul(b, c)
        t2, n2 = blade_mul(a, n1)
        if (s1 * s2, m2) != (t1 * t2, n2):
            bad += 1
    dt = time.monotonic() - t0
    one = Multivector.scalar(1)
    inv_bad = sum(
        gp(inverse(Multivector.blade(m, 1)), Multivector.blade(m, 1)) != one
        for m in range(N_BLADES)
    )
    ok = bad == 0 and inv_bad == 0 and dt < 600.0
    label = "128^3 exhaustive" if full else "seeded 10^5 sample"
    assert say(9, ok, f"associativity on the {label} in {dt:.1f}s, "
                      f"{bad} deviations; inverse(b)*b = 1 on 128/128 blades")


def test_criterion_10_round_trip_and_goldens(say):
    rng = random.Random(404)
    codec_bad = 0
    for _ in range(1000):
        terms = {}
        for _ in range(rng.randint(0, 5)):
            num = rng.randint(-60, 60)
            den = rng.choice([1, 1, 1, 2, 3, 5, 8])
            terms[rng.randrange(N_BLADES)] = Fraction(num, den)
        x = Multivector(terms)
        if Multivector.from_text(x.to_text()) != x:
            codec_bad += 1
        if Multivector.from_json_dict(x.to_json_dict()) != x:
            codec_bad += 1
    stable = True
    for argv, name in [(("table", "circ"), "table_circ.txt"),
                       (("examples", "--n", "5"), "example_5.txt")]:
        want = (GOLDENS / name).read_bytes()
        runs = [subprocess.run([sys.executable, "-m", "cl07.cli", *argv],
                               capture_output=True) for _ in range(2)]
        if not all(r.returncode == 0 and r.stdout == want for r in runs):
            stable = False
    ok = codec_bad == 0 and stable
    assert say(10, ok, "1000-case text and JSON round-trips lossless; "
                       "golden CLI outputs byte-identical across runs")
