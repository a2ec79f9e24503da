"""Run ordering, per-input semantic covers, and selector decomposition.

A nondeterministic transducer that maps each input to at most k outputs can
be split, input by input, into k single-valued selectors: order the
accepting runs lexicographically and let selector i pick the i-th distinct
output (by its least witnessing run).  The semantic cover refines this: it
keeps only the runs that are not preceded by a lexicographically smaller
run with the same output and small delay, which preserves the realized
relation while separating the survivors by output or by delay.
"""

from __future__ import annotations

from typing import Callable

from .delay import delay
from .errors import InputMismatchError, SstKitError
from .model import Budget, Run, Sst, enumerate_runs, outputs, words_over


def lex_compare(r1: Run, r2: Run) -> int:
    """-1, 0, or 1 per the canonical run order.

    Runs are compared by the rank sequences of their transitions (rank =
    source index, letter index, target index, declaration position), with
    the start-state index breaking the tie between empty runs.  Only
    defined for runs on the same input.
    """
    if r1.input != r2.input:
        raise InputMismatchError("lexicographic comparison requires equal inputs")
    k1 = r1.sst.run_sort_key(r1)
    k2 = r2.sst.run_sort_key(r2)
    return (k1 > k2) - (k1 < k2)


def semantic_cover(
    sst: Sst,
    word: str,
    C: int,
    D: int,
    budget: Budget | int | None = None,
) -> list[Run]:
    """Accepting runs on ``word`` that survive delay-based deduplication.

    A run is dropped when some lexicographically smaller run has the same
    output and delay at most D (with cut parameter C).  The survivors
    produce the same output set as the full run set, and every surviving
    pair either differs in output or has delay greater than D.
    """
    runs = enumerate_runs(sst, word, budget)  # already in lexicographic order
    survivors: list[Run] = []
    for idx, run in enumerate(runs):
        suppressed = False
        for earlier in runs[:idx]:
            if earlier.output == run.output and delay(earlier, run, C).delay <= D:
                suppressed = True
                break
        if not suppressed:
            survivors.append(run)
    return survivors


def ranked_outputs(sst: Sst, word: str, budget: Budget | int | None = None) -> list[str]:
    """Distinct outputs of ``word`` ordered by their least witnessing run."""
    seen: dict[str, None] = {}
    for run in enumerate_runs(sst, word, budget):
        seen.setdefault(run.output, None)
    return list(seen)


def decompose_selectors(
    sst: Sst,
    k: int,
    budget: Budget | int | None = None,
) -> list[Callable[[str], str | None]]:
    """k single-valued selector functions covering the realized relation.

    selector i maps an input to its i-th distinct output in witness order,
    or None when fewer than i outputs exist.  On inputs with at most k
    outputs the union of the selector graphs equals the relation.
    """
    if k < 1:
        raise SstKitError("need at least one selector")

    def make(i: int) -> Callable[[str], str | None]:
        def selector(word: str) -> str | None:
            ranked = ranked_outputs(sst, word, budget)
            return ranked[i] if i < len(ranked) else None

        selector.rank = i + 1  # type: ignore[attr-defined]
        selector.__name__ = f"selector_{i + 1}"
        return selector

    return [make(i) for i in range(k)]


def check_equivalence_bounded(
    a: Sst,
    b: Sst,
    max_len: int,
    budget: Budget | int | None = None,
    min_len: int = 1,
) -> str | None:
    """Compare output sets on every input with min_len <= |u| <= max_len.

    Returns None when all agree, else the first differing input in
    length-lexicographic order.  Like the oracles, the scan starts at
    length 1 by default; pass ``min_len=0`` to include the empty input.
    """
    if set(a.alphabet) != set(b.alphabet):
        raise SstKitError("transducers must share an alphabet")
    shared = Budget.ensure(budget)
    for u in words_over(a.alphabet, min_len, max_len):
        if outputs(a, u, shared) != outputs(b, u, shared):
            return u
    return None
