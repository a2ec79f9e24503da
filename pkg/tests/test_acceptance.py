"""Acceptance gate: one test per criterion, exact values, stated runtimes.

Each test prints a single PASS line once its assertions hold, so a plain
``pytest -s tests/test_acceptance.py`` reads as a checklist.
"""

import random
import time
from itertools import product

from sstkit import (
    RunProfile,
    analyze_valuedness,
    build_wrun,
    check_equivalence_bounded,
    compose_updates,
    cuts,
    decompose_selectors,
    delay,
    find_dumbbell,
    idempotent_power_words,
    is_finite_ambiguous,
    is_solution,
    nonsolutions_single,
    outputs,
    pump,
    pumped_output_expr,
    semantic_cover,
    valuedness_oracle,
    words_over,
)
from helpers import (
    random_idempotent_update,
    random_single_param_inequality,
    random_sst,
    sample_run_with_loops,
)


def report(n, text):
    print(f"ACCEPTANCE {n}: PASS - {text}")


def test_criterion_1_cuts_and_delay():
    started = time.monotonic()
    assert cuts("abcccbb", 2) == [2, 5, 7]
    leftish = RunProfile(
        (("a", 1), ("b", 1), ("c", 1), ("c", 2), ("c", 2), ("b", 1), ("b", 1)), 2
    )
    rightish = RunProfile(
        (("a", 2), ("b", 2), ("c", 2), ("c", 1), ("c", 2), ("b", 1), ("b", 1)), 2
    )
    assert delay(leftish, rightish, 2).delay == 2
    elapsed = time.monotonic() - started
    assert elapsed < 1.0
    report(1, f"cuts [2, 5, 7] and delay 2 reproduced exactly in {elapsed:.3f}s")


def test_criterion_2_fix_tsc_is_2_valued(fix_tsc):
    started = time.monotonic()
    count, witness = valuedness_oracle(fix_tsc, 6)
    assert count == 2
    elapsed = time.monotonic() - started
    assert elapsed < 30.0
    report(2, f"two-sided counter: max 2 outputs up to length 6 (at {witness!r}) in {elapsed:.1f}s")


def test_criterion_3_fix_tsc1_divergence(fix_tsc1):
    started = time.monotonic()
    for n in range(6):
        expected = {"0" * i + "1" + "0" * (n - i) for i in range(n + 1)}
        assert outputs(fix_tsc1, "0" * n) == expected
    verdict = analyze_valuedness(fix_tsc1)
    assert verdict.kind == "Infinite"
    witness = verdict.witness
    witness.pattern.verify(fix_tsc1)
    run_mid = build_wrun(fix_tsc1, witness.pattern, witness.values, 1)
    run_late = build_wrun(fix_tsc1, witness.pattern, witness.values, 3)
    assert run_mid.input == run_late.input == witness.input
    assert run_mid.output != run_late.output
    assert {run_mid.output, run_late.output} <= outputs(fix_tsc1, witness.input)
    elapsed = time.monotonic() - started
    assert elapsed < 60.0
    report(3, f"marked counter: n+1 outputs on 0^n and a verified Infinite witness in {elapsed:.1f}s")


def test_criterion_4_fix_r2_block_picker(fix_r2):
    assert outputs(fix_r2, "001011") == {"00", "10", "11"}
    count, _ = valuedness_oracle(fix_r2, 6)
    assert count <= 4
    report(4, f"block picker: outputs of '001011' exact, at most {count} <= 4 outputs on <= 3 blocks")


def test_criterion_5_power_word_suite():
    rng = random.Random(2024)
    for case in range(200):
        u = random_idempotent_update(rng, max_vars=3, max_image_len=6)
        sides = {x: idempotent_power_words(u, x) for x in u.variables}
        power = u
        for n in range(1, 6):
            if n > 1:
                power = compose_updates(u, power)
            for x, (left, right) in sides.items():
                expected = tuple(left) * (n - 1) + u.image(x) + tuple(right) * (n - 1)
                assert power.image(x) == expected, (case, x, n)
    report(5, "200 random skeleton-idempotent updates: u^n(x) = left^(n-1) u(x) right^(n-1), n in 1..5, exact")


def test_criterion_6_pumped_output_suite():
    rng = random.Random(4096)
    import sstkit
    pool = [
        sstkit.fixtures.load(name)
        for name in ("FIX-TSC", "FIX-TSC1", "FIX-AMB", "FIX-R2")
    ] + [random_sst(random.Random(77 + i)) for i in range(8)]
    done = 0
    attempts = 0
    while done < 100:
        attempts += 1
        assert attempts < 10_000
        sample = sample_run_with_loops(rng, pool)
        if sample is None:
            continue
        sst, run, loops = sample
        expr = pumped_output_expr(sst, run, loops)
        m = len(loops.intervals)
        assert len(expr.word.factors) <= 2 * m * len(sst.variables)
        for counts in product((1, 2, 3), repeat=m):
            assert expr.output_for_counts(counts) == pump(sst, run, loops, counts).output
        done += 1
    report(6, f"100 random runs with disjoint loops: symbolic pumped output exact over {{1,2,3}}^m ({attempts} attempts)")


def test_criterion_7_cofiniteness_bound_suite():
    rng = random.Random(8888)
    done = 0
    attempts = 0
    while done < 100:
        attempts += 1
        assert attempts < 10_000
        e = random_single_param_inequality(rng)
        if not any(is_solution(e, {"x": v}) for v in range(51)):
            continue
        bad = nonsolutions_single(e, 50)
        bound = len(e.left.factors) + len(e.right.factors)
        assert len(bad) <= bound, (e.render(), bad)
        done += 1
    report(7, f"100 satisfiable one-parameter inequalities: non-solutions in [0,50] within the m+n bound ({attempts} attempts)")


def test_criterion_8_ambiguity_exactness(all_fixtures):
    expected = {
        "FIX-ID": True,
        "FIX-AMB": False,
        "FIX-TSC": False,
        "FIX-TSC1": False,
        "FIX-R2": False,
    }
    for name, sst in all_fixtures.items():
        assert is_finite_ambiguous(sst) == expected[name], name
        if not expected[name]:
            dumbbell = find_dumbbell(sst)
            assert dumbbell is not None
            dumbbell.verify(sst)
    report(8, "finite ambiguity exact on all five bundled machines, dumbbells verified")


def test_criterion_9_decomposition(fix_tsc, fix_r2):
    for sst, k in ((fix_tsc, 2), (fix_r2, 4)):
        selectors = decompose_selectors(sst, k)
        for word in words_over(sst.alphabet, 0, 6):
            expected = outputs(sst, word)
            picks = [sel(word) for sel in selectors]
            concrete = [p for p in picks if p is not None]
            assert len(concrete) == len(set(concrete))  # single-valued, disjoint
            assert set(concrete) == expected
            cover = semantic_cover(sst, word, 1, 100)
            assert {r.output for r in cover} == expected
            for i, r1 in enumerate(cover):
                for r2 in cover[i + 1:]:
                    assert r1.output != r2.output or delay(r1, r2, 1).delay > 100
    report(9, "selector union equals the relation up to length 6; covers preserve and separate outputs")


def test_criterion_10_equivalence_oracle(fix_tsc, fix_tsc1):
    assert check_equivalence_bounded(fix_tsc, fix_tsc1, 4) == "0"
    report(10, "bounded equivalence finds the counterexample '0'")
