"""Skeletons, loops, and pumping.

The skeleton of an update is the update with every letter erased; only the
flow of variables into variables remains.  Skeletons compose like updates
and there are finitely many of them, so they form a finite monoid.  A loop
of a run is an interval that starts and ends in the same state and whose
induced update has an idempotent skeleton; repeating (pumping) a loop keeps
the run valid and changes the output in a very disciplined way: each pumped
loop contributes at most two repeated factors per variable, which this
module materializes as a symbolic parameterized word.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from .errors import (
    BudgetExceededError,
    CopylessError,
    NotIdempotentError,
    RunError,
    SstKitError,
)
from .model import Run, Sst, Update, compose_updates
from .wordcomb import ParamWord

SKELETON_MONOID_CAP = 1_000_000


@dataclass(frozen=True)
class Skeleton:
    """A copyless mapping from variables to words of variables."""

    variables: tuple[str, ...]
    images: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        if len(self.images) != len(self.variables):
            raise SstKitError("skeleton must define an image for every variable")
        seen: set[str] = set()
        for image in self.images:
            for tok in image:
                if tok not in self.variables:
                    raise SstKitError(f"skeleton image contains non-variable {tok!r}")
                if tok in seen:
                    raise CopylessError(tok)
                seen.add(tok)

    @classmethod
    def identity(cls, variables: Sequence[str]) -> "Skeleton":
        variables = tuple(variables)
        return cls(variables, tuple((v,) for v in variables))

    @cached_property
    def _index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.variables)}

    def image(self, variable: str) -> tuple[str, ...]:
        return self.images[self._index[variable]]

    def apply_to(self, tokens: Sequence[str]) -> tuple[str, ...]:
        out: list[str] = []
        for tok in tokens:
            out.extend(self.image(tok))
        return tuple(out)


def skeleton_of(update: Update) -> Skeleton:
    """Erase all letters from the images of ``update``."""
    varset = set(update.variables)
    return Skeleton(
        update.variables,
        tuple(tuple(t for t in image if t in varset) for image in update.images),
    )


def compose_skeletons(a: Skeleton, b: Skeleton) -> Skeleton:
    """Same orientation as ``compose_updates``: b applied to a's images."""
    if a.variables != b.variables:
        raise SstKitError("cannot compose skeletons over different variable sets")
    return Skeleton(a.variables, tuple(b.apply_to(a.image(v)) for v in a.variables))


def is_idempotent(s: Skeleton) -> bool:
    return compose_skeletons(s, s) == s


def skeleton_monoid(sst: Sst, cap: int = SKELETON_MONOID_CAP) -> frozenset[Skeleton]:
    """Closure of the transition skeletons under composition, plus the
    identity.  Memoized per transducer; fails loudly beyond ``cap``."""
    cached = getattr(sst, "_skeleton_monoid_cache", None)
    if cached is not None:
        if len(cached) > cap:
            raise BudgetExceededError(
                f"skeleton monoid has {len(cached)} elements, cap is {cap}"
            )
        return cached
    generators = [skeleton_of(t.update) for t in sst.transitions]
    closure: set[Skeleton] = {Skeleton.identity(sst.variables)}
    closure.update(generators)
    frontier = list(closure)
    while frontier:
        s = frontier.pop()
        for g in generators:
            for prod in (compose_skeletons(s, g), compose_skeletons(g, s)):
                if prod not in closure:
                    closure.add(prod)
                    frontier.append(prod)
                    if len(closure) > cap:
                        raise BudgetExceededError(
                            f"skeleton monoid exceeded the cap of {cap} elements"
                        )
    result = frozenset(closure)
    sst._skeleton_monoid_cache = result  # safe: plain attribute, set once
    return result


def transition_skeletons(sst: Sst) -> tuple[Skeleton, ...]:
    cached = getattr(sst, "_transition_skeletons_cache", None)
    if cached is None:
        cached = tuple(skeleton_of(t.update) for t in sst.transitions)
        sst._transition_skeletons_cache = cached
    return cached


# -- loops ------------------------------------------------------------------


def interval_update(sst: Sst, run: Run, i: int, j: int) -> Update:
    """Induced update of the interval [i, j] of ``run`` (steps i+1..j)."""
    if not (0 <= i <= j <= len(run)):
        raise RunError(f"interval [{i}, {j}] outside run of length {len(run)}")
    acc = Update.identity(sst.variables)
    for idx in run.steps[i:j]:
        acc = compose_updates(sst.transitions[idx].update, acc)
    return acc


def find_loops(sst: Sst, run: Run) -> list[tuple[int, int]]:
    """All intervals [i, j] with i < j that are loops of ``run``: equal
    states at both ends and a skeleton-idempotent induced update."""
    skels = transition_skeletons(sst)
    states = run.states
    loops: list[tuple[int, int]] = []
    for i in range(len(run)):
        acc = Skeleton.identity(sst.variables)
        for j in range(i + 1, len(run) + 1):
            acc = compose_skeletons(skels[run.steps[j - 1]], acc)
            if states[i] == states[j] and is_idempotent(acc):
                loops.append((i, j))
    return loops


@dataclass(frozen=True)
class LoopSet:
    """Pairwise disjoint loops of one run, with their induced updates.

    Intervals may touch ([i, j] followed by [j, k]) but not overlap; empty
    intervals [i, i] are allowed and carry the identity update.
    """

    run: Run = field(repr=False)
    intervals: tuple[tuple[int, int], ...]
    updates: tuple[Update, ...] = field(repr=False)

    @classmethod
    def build(cls, sst: Sst, run: Run, intervals: Sequence[tuple[int, int]]) -> "LoopSet":
        ordered = tuple(tuple(iv) for iv in intervals)
        prev_end = None
        states = run.states
        updates = []
        for i, j in ordered:
            if not (0 <= i <= j <= len(run)):
                raise RunError(f"interval [{i}, {j}] outside run of length {len(run)}")
            if prev_end is not None and i < prev_end:
                raise RunError("loop intervals overlap")
            prev_end = j
            if states[i] != states[j]:
                raise RunError(f"interval [{i}, {j}] does not return to the same state")
            update = interval_update(sst, run, i, j)
            if not is_idempotent(skeleton_of(update)):
                raise NotIdempotentError(f"interval [{i}, {j}] is not a loop")
            updates.append(update)
        return cls(run, ordered, tuple(updates))

    def __len__(self) -> int:
        return len(self.intervals)


def pump(sst: Sst, run: Run, loops: LoopSet, counts: Sequence[int]) -> Run:
    """Repeat each loop's transition block ``counts[k]`` times.

    Counts are positive; count 1 leaves the block untouched, so an
    all-ones vector reproduces the original run.
    """
    if loops.run is not run:
        raise RunError("loop set was built for a different run")
    if len(counts) != len(loops.intervals):
        raise RunError("need exactly one count per loop")
    for n in counts:
        if n < 1:
            raise RunError(f"pump counts must be positive, got {n}")
    steps: list[int] = []
    pos = 0
    for (i, j), n in zip(loops.intervals, counts):
        steps.extend(run.steps[pos:i])
        steps.extend(run.steps[i:j] * n)
        pos = j
    steps.extend(run.steps[pos:])
    return Run(sst, run.start, tuple(steps))


# -- the shape of pumped outputs ---------------------------------------------


def idempotent_power_words(u: Update, x: str) -> tuple[str, str]:
    """For a skeleton-idempotent update u and a variable x, the two letter
    words (left, right) with

        u^n(x) = left^(n-1) . u(x) . right^(n-1)      for all n >= 1

    as exact words over letters and variables.  If u(x) contains no
    variable, both sides are empty.
    """
    if not is_idempotent(skeleton_of(u)):
        raise NotIdempotentError("update does not have an idempotent skeleton")
    image = u.image(x)
    if all(tok not in u._varset for tok in image):
        return ("", "")
    # idempotency forces x itself to occur in u(x) whenever any variable does
    if x not in image:
        raise NotIdempotentError(
            f"variable {x!r} does not recur in its own image; update is not a loop body"
        )
    pos = image.index(x)
    left = u.apply_to(image[:pos])
    right = u.apply_to(image[pos + 1:])
    for tok in left + right:
        if tok in u._varset:
            raise NotIdempotentError(
                f"context of {x!r} keeps variable {tok!r}; update is not a loop body"
            )
    return ("".join(left), "".join(right))


@dataclass(frozen=True)
class PumpedOutputExpr:
    """Symbolic output of a run under pumping: a parameterized word whose
    parameters are pump exponents shifted by one (parameter value n-1
    corresponds to pumping a loop n times)."""

    word: ParamWord
    loop_params: tuple[str, ...]

    def output_for_counts(self, counts: Sequence[int]) -> str:
        """Concrete output for pumping loop k ``counts[k]`` times."""
        if len(counts) != len(self.loop_params):
            raise SstKitError("need exactly one count per loop")
        for n in counts:
            if n < 1:
                raise SstKitError(f"pump counts must be positive, got {n}")
        assignment = {p: n - 1 for p, n in zip(self.loop_params, counts)}
        return self.word.instantiate(assignment)


def pumped_output_expr(sst: Sst, run: Run, loops: LoopSet) -> PumpedOutputExpr:
    """Closed form for the outputs of all simultaneous pumpings of ``loops``.

    The result is a word  w0 u1^p_{i1} w1 ... ur^p_{ir} wr  with one
    parameter per loop such that substituting n_k - 1 for loop k's parameter
    yields out(pump(run, loops, (n_1, ..., n_m))) exactly, for every vector
    of positive counts.  At most 2 * len(loops) * len(variables) repeated
    factors appear.
    """
    if loops.run is not run:
        raise RunError("loop set was built for a different run")
    if not run.accepting:
        raise RunError("pumped outputs are only defined for accepting runs")
    params = tuple(f"p{k + 1}" for k in range(len(loops.intervals)))
    varset = sst._var_index

    Lit = str  # items are either a literal letter or a (word, param) power
    contents: dict[str, list] = {
        v: [c for c in sst.initial_assignment[v]] for v in sst.variables
    }

    def apply_plain(update: Update) -> None:
        nonlocal contents
        fresh: dict[str, list] = {}
        for v in sst.variables:
            items: list = []
            for tok in update.image(v):
                if tok in varset:
                    items.extend(contents[tok])
                else:
                    items.append(tok)
            fresh[v] = items
        contents = fresh

    def apply_pumped(update: Update, param: str) -> None:
        nonlocal contents
        sides = {v: idempotent_power_words(update, v) for v in sst.variables}
        fresh: dict[str, list] = {}
        for v in sst.variables:
            left, right = sides[v]
            items: list = []
            if left:
                items.append((left, param))
            for tok in update.image(v):
                if tok in varset:
                    items.extend(contents[tok])
                else:
                    items.append(tok)
            if right:
                items.append((right, param))
            fresh[v] = items
        contents = fresh

    pos = 0
    for (i, j), update, param in zip(loops.intervals, loops.updates, params):
        for idx in run.steps[pos:i]:
            apply_plain(sst.transitions[idx].update)
        apply_pumped(update, param)
        pos = j
    for idx in run.steps[pos:]:
        apply_plain(sst.transitions[idx].update)

    items: list = []
    for tok in sst.final_output[run.end]:
        if tok in varset:
            items.extend(contents[tok])
        else:
            items.append(tok)

    constants: list[str] = []
    factors: list[tuple[str, str]] = []
    buf: list[str] = []
    for item in items:
        if isinstance(item, Lit):
            buf.append(item)
        else:
            constants.append("".join(buf))
            buf = []
            factors.append(item)
    constants.append("".join(buf))
    return PumpedOutputExpr(ParamWord(tuple(constants), tuple(factors)), params)
