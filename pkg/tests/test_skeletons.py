import random
from itertools import product

import pytest

from sstkit import (
    LoopSet,
    NotIdempotentError,
    RunError,
    Skeleton,
    Update,
    compose_skeletons,
    compose_updates,
    enumerate_runs,
    find_loops,
    idempotent_power_words,
    is_idempotent,
    parse_sst,
    pump,
    pumped_output_expr,
    skeleton_monoid,
    skeleton_of,
)
from helpers import random_copyless_update, sample_run_with_loops, random_sst

V2 = ("X1", "X2")

SWAP_DOC = """\
alphabet: a
vars: X1 X2
states: q
initial: q
final q -> X1 X2
trans q a q { X1 := X2 ; X2 := X1 }
"""


def test_skeleton_of_erases_letters():
    u = Update.make(V2, {"X1": ["a", "X1", "b", "X2", "c"], "X2": ["a"]})
    s = skeleton_of(u)
    assert s.image("X1") == ("X1", "X2")
    assert s.image("X2") == ()


def test_skeleton_of_identity_and_swap():
    ident = Update.identity(V2)
    assert skeleton_of(ident) == Skeleton.identity(V2)
    swap = Update.make(V2, {"X1": ["X2"], "X2": ["X1"]})
    assert skeleton_of(swap).image("X1") == ("X2",)
    assert skeleton_of(swap).image("X2") == ("X1",)


def test_is_idempotent():
    collapse = Skeleton(V2, (("X1", "X2"), ()))
    assert is_idempotent(collapse)
    swap = Skeleton(V2, (("X2",), ("X1",)))
    assert not is_idempotent(swap)
    assert is_idempotent(Skeleton.identity(V2))


def test_skeleton_homomorphism():
    rng = random.Random(31)
    for _ in range(60):
        a = random_copyless_update(rng, V2)
        b = random_copyless_update(rng, V2)
        assert skeleton_of(compose_updates(a, b)) == compose_skeletons(
            skeleton_of(a), skeleton_of(b)
        )


def test_monoid_is_finite_and_memoized(all_fixtures):
    for sst in all_fixtures.values():
        m = skeleton_monoid(sst)
        assert Skeleton.identity(sst.variables) in m
        assert skeleton_monoid(sst) is m  # cached
    swap = parse_sst(SWAP_DOC)
    assert len(skeleton_monoid(swap)) == 2


# -- loops ---------------------------------------------------------------------


def test_find_loops_fix_id(fix_id):
    (run,) = enumerate_runs(fix_id, "aa")
    assert set(find_loops(fix_id, run)) == {(0, 1), (1, 2), (0, 2)}


def test_find_loops_excludes_swap():
    swap = parse_sst(SWAP_DOC)
    one = swap.run("q", (0,))
    assert find_loops(swap, one) == []
    two = swap.run("q", (0, 0))
    assert find_loops(swap, two) == [(0, 2)]


def test_find_loops_fix_amb(fix_amb):
    run = fix_amb.run("q", (0, 1))
    assert set(find_loops(fix_amb, run)) == {(0, 1), (1, 2), (0, 2)}


# -- pumping -------------------------------------------------------------------


def test_pump_all_ones_is_identity(fix_tsc):
    run = fix_tsc.run("qA", (0, 3))
    loops = LoopSet.build(fix_tsc, run, [(0, 1), (1, 2)])
    assert pump(fix_tsc, run, loops, [1, 1]).steps == run.steps


def test_pump_fix_id(fix_id):
    (run,) = enumerate_runs(fix_id, "a")
    loops = LoopSet.build(fix_id, run, [(0, 1)])
    pumped = pump(fix_id, run, loops, [3])
    assert pumped.input == "aaa"
    assert pumped.output == "aaa"


def test_pump_fix_amb(fix_amb):
    run = fix_amb.run("q", (0,))
    loops = LoopSet.build(fix_amb, run, [(0, 1)])
    pumped = pump(fix_amb, run, loops, [2])
    assert pumped.steps == (0, 0)
    assert pumped.output == "aa"


def test_pump_rejects_zero_count(fix_id):
    (run,) = enumerate_runs(fix_id, "a")
    loops = LoopSet.build(fix_id, run, [(0, 1)])
    with pytest.raises(RunError):
        pump(fix_id, run, loops, [0])


def test_loopset_rejects_overlap(fix_id):
    (run,) = enumerate_runs(fix_id, "aaa")
    with pytest.raises(RunError):
        LoopSet.build(fix_id, run, [(0, 2), (1, 3)])


def test_pumped_input_repeats_loop_factors(all_fixtures):
    rng = random.Random(37)
    pool = [all_fixtures["FIX-TSC"], all_fixtures["FIX-TSC1"], all_fixtures["FIX-AMB"]]
    done = 0
    while done < 20:
        sample = sample_run_with_loops(rng, pool)
        if sample is None:
            continue
        sst, run, loops = sample
        counts = [rng.randint(1, 3) for _ in loops.intervals]
        pumped = pump(sst, run, loops, counts)
        expected = []
        pos = 0
        for (i, j), n in zip(loops.intervals, counts):
            expected.append(run.input[pos:i])
            expected.append(run.input[i:j] * n)
            pos = j
        expected.append(run.input[pos:])
        assert pumped.input == "".join(expected)
        done += 1


# -- powered context words -------------------------------------------------------


def test_power_words_worked_example():
    u = Update.make(V2, {"X1": ["a", "X1", "b", "X2", "c"], "X2": ["a"]})
    left, right = idempotent_power_words(u, "X1")
    assert (left, right) == ("a", "bac")
    acc = u
    for n in range(2, 6):
        acc = compose_updates(u, acc)
        assert acc.image("X1") == tuple(left) * (n - 1) + u.image("X1") + tuple(right) * (n - 1)


def test_power_words_constant_image():
    u = Update.make(V2, {"X1": ["a", "b"], "X2": ["X2"]})
    assert idempotent_power_words(u, "X1") == ("", "")


def test_power_words_identity():
    ident = Update.identity(V2)
    assert idempotent_power_words(ident, "X1") == ("", "")
    assert idempotent_power_words(ident, "X2") == ("", "")


def test_power_words_rejects_non_idempotent():
    swap = Update.make(V2, {"X1": ["X2"], "X2": ["X1"]})
    with pytest.raises(NotIdempotentError):
        idempotent_power_words(swap, "X1")


# -- symbolic pumped outputs -----------------------------------------------------


def test_pumped_expr_no_loops_is_constant(fix_tsc):
    run = fix_tsc.run("qA", (1, 3))
    expr = pumped_output_expr(fix_tsc, run, LoopSet.build(fix_tsc, run, []))
    assert expr.word.factors == ()
    assert expr.output_for_counts([]) == run.output == "01"


def test_pumped_expr_requires_accepting_run(fix_r2):
    run = fix_r2.run("s0", (0,))
    assert not run.accepting
    with pytest.raises(RunError):
        pumped_output_expr(fix_r2, run, LoopSet.build(fix_r2, run, []))


def test_pumped_expr_fix_id(fix_id):
    (run,) = enumerate_runs(fix_id, "a")
    loops = LoopSet.build(fix_id, run, [(0, 1)])
    expr = pumped_output_expr(fix_id, run, loops)
    for n in (1, 2, 3, 4):
        assert expr.output_for_counts([n]) == "a" * n


def test_pumped_expr_fix_tsc1_prepend(fix_tsc1):
    run = fix_tsc1.run("qA", (0,))  # prepend 0 to X0 = "1"
    loops = LoopSet.build(fix_tsc1, run, [(0, 1)])
    expr = pumped_output_expr(fix_tsc1, run, loops)
    for n in (1, 2, 3):
        assert expr.output_for_counts([n]) == "0" * n + "1"
        assert expr.output_for_counts([n]) == pump(fix_tsc1, run, loops, [n]).output


def test_pumped_expr_matches_evaluator_on_samples(all_fixtures):
    rng = random.Random(41)
    pool = list(all_fixtures.values()) + [random_sst(rng) for _ in range(6)]
    done = 0
    while done < 15:
        sample = sample_run_with_loops(rng, pool)
        if sample is None:
            continue
        sst, run, loops = sample
        if not run.accepting:
            continue
        expr = pumped_output_expr(sst, run, loops)
        m = len(loops.intervals)
        assert len(expr.word.factors) <= 2 * m * len(sst.variables)
        for counts in product((1, 2, 3), repeat=m):
            assert expr.output_for_counts(counts) == pump(sst, run, loops, counts).output
        done += 1
