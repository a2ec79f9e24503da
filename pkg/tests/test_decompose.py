import pytest

from sstkit import (
    InputMismatchError,
    SstKitError,
    check_equivalence_bounded,
    decompose_selectors,
    delay,
    enumerate_runs,
    lex_compare,
    outputs,
    parse_sst,
    ranked_outputs,
    semantic_cover,
    words_over,
)

ID_WITH_DEAD_STATE = """\
alphabet: a
vars: X1
states: q dead
initial: q
final q -> X1
trans q a q { X1 := X1 a }
trans dead a dead { X1 := X1 }
"""


def test_lex_compare_reflexive(fix_amb):
    run = fix_amb.run("q", (0, 1))
    assert lex_compare(run, run) == 0


def test_lex_compare_fix_amb_first_difference(fix_amb):
    t1t2 = fix_amb.run("q", (0, 1))
    t2t1 = fix_amb.run("q", (1, 0))
    assert lex_compare(t1t2, t2t1) == -1
    assert lex_compare(t2t1, t1t2) == 1


def test_lex_compare_fix_tsc_declared_order(fix_tsc):
    prepends = fix_tsc.run("qA", (0, 0))
    appends = fix_tsc.run("qA", (1, 1))
    assert lex_compare(prepends, appends) == -1  # prepend transitions declared first


def test_lex_compare_requires_same_input(fix_tsc):
    with pytest.raises(InputMismatchError):
        lex_compare(fix_tsc.run("qA", (0,)), fix_tsc.run("qA", (2,)))


def test_lex_order_breaks_empty_run_tie_by_start(fix_tsc):
    qa, qb = enumerate_runs(fix_tsc, "")
    assert (qa.start, qb.start) == ("qA", "qB")
    assert lex_compare(qa, qb) == -1


# -- semantic cover -------------------------------------------------------------


def test_cover_deterministic_machine(fix_id):
    for word in ("", "a", "aaa"):
        cover = semantic_cover(fix_id, word, 1, 100)
        assert len(cover) == 1


def test_cover_fix_tsc_two_outputs(fix_tsc):
    cover = semantic_cover(fix_tsc, "01", 1, 100)
    assert len(cover) == 2
    assert {run.output for run in cover} == {"01", "10"}


def test_cover_fix_amb(fix_amb):
    cover = semantic_cover(fix_amb, "aa", 1, 100)
    assert len(cover) == 3
    assert {run.output for run in cover} == {"", "a", "aa"}


def test_cover_preserves_outputs_and_separates(all_fixtures):
    for sst in all_fixtures.values():
        for word in words_over(sst.alphabet, 0, 4):
            cover = semantic_cover(sst, word, 1, 100)
            assert {r.output for r in cover} == outputs(sst, word)
            for i, r1 in enumerate(cover):
                for r2 in cover[i + 1:]:
                    assert r1.output != r2.output or delay(r1, r2, 1).delay > 100


# -- selectors -------------------------------------------------------------------


def test_selectors_fix_tsc(fix_tsc):
    sel1, sel2 = decompose_selectors(fix_tsc, 2)
    assert {sel1("01"), sel2("01")} == {"01", "10"}
    assert sel1("0") == "0"
    assert sel2("0") is None


def test_selector_fix_id_is_the_function(fix_id):
    (sel,) = decompose_selectors(fix_id, 1)
    for word in ("", "a", "aaaa"):
        assert sel(word) == word


def test_selectors_fix_r2_cover_blocks(fix_r2):
    sels = decompose_selectors(fix_r2, 4)
    picked = {sel("001011") for sel in sels}
    assert picked - {None} == {"00", "10", "11"}


def test_selectors_single_valued_and_rank_disjoint(fix_tsc):
    sels = decompose_selectors(fix_tsc, 2)
    for word in words_over(fix_tsc.alphabet, 0, 3):
        picks = [sel(word) for sel in sels]
        concrete = [p for p in picks if p is not None]
        assert len(concrete) == len(set(concrete))
        assert concrete == ranked_outputs(fix_tsc, word)[: len(concrete)]


# -- bounded equivalence ----------------------------------------------------------


def test_equivalence_reflexive(fix_tsc):
    import sstkit
    other = sstkit.fixtures.load("FIX-TSC")
    assert check_equivalence_bounded(fix_tsc, other, 3) is None


def test_equivalence_tsc_vs_tsc1(fix_tsc, fix_tsc1):
    assert check_equivalence_bounded(fix_tsc, fix_tsc1, 4) == "0"


def test_equivalence_sees_empty_input_when_asked(fix_tsc, fix_tsc1):
    assert check_equivalence_bounded(fix_tsc, fix_tsc1, 4, min_len=0) == ""


def test_equivalence_ignores_dead_states(fix_id):
    padded = parse_sst(ID_WITH_DEAD_STATE)
    assert check_equivalence_bounded(fix_id, padded, 5) is None


def test_equivalence_requires_shared_alphabet(fix_id, fix_tsc):
    with pytest.raises(SstKitError):
        check_equivalence_bounded(fix_id, fix_tsc, 2)
