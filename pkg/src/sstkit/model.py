"""Core model: copyless updates, streaming string transducers, runs.

A streaming string transducer reads its input once, left to right, while
maintaining a finite set of write-only string variables.  Every transition
applies a *copyless* update (each variable is used at most once across all
right-hand sides), and every final state carries an output expression over
letters and variables whose value at the end of an accepting run is the
produced word.  Nondeterminism makes the realized object a relation: one
input may map to several outputs.

Beyond the model itself this module provides the brute-force substrate the
rest of the package is checked against: exhaustive run enumeration and the
valuedness / ambiguity oracles.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .errors import (
    BudgetExceededError,
    CopylessError,
    RunError,
    SstKitError,
    UnknownSymbolError,
    VariableSetMismatchError,
)

DEFAULT_NODE_BUDGET = 10_000_000


class Budget:
    """Mutable expansion counter shared across one enumeration.

    Enumerations charge one unit per partial-run extension (or per search
    node) and fail loudly instead of truncating silently.
    """

    def __init__(self, limit: int = DEFAULT_NODE_BUDGET):
        self.limit = int(limit)
        self.used = 0

    def charge(self, amount: int = 1) -> None:
        self.used += amount
        if self.used > self.limit:
            raise BudgetExceededError(
                f"budget of {self.limit} expansion nodes exceeded"
            )

    @classmethod
    def ensure(cls, budget: "Budget | int | None") -> "Budget":
        if budget is None:
            return cls()
        if isinstance(budget, Budget):
            return budget
        return cls(int(budget))


@dataclass(frozen=True)
class Update:
    """Copyless mapping from variables to words over letters and variables.

    ``images`` is aligned with ``variables``; a token equal to some declared
    variable name is a variable occurrence, any other token is a letter.
    """

    variables: tuple[str, ...]
    images: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        if len(self.images) != len(self.variables):
            raise SstKitError("update must define an image for every variable")
        varset = set(self.variables)
        seen: set[str] = set()
        for image in self.images:
            for tok in image:
                if tok in varset:
                    if tok in seen:
                        raise CopylessError(tok)
                    seen.add(tok)

    @classmethod
    def make(cls, variables: Sequence[str], images: Mapping[str, Sequence[str]]) -> "Update":
        variables = tuple(variables)
        unknown = set(images) - set(variables)
        if unknown:
            raise UnknownSymbolError(f"update assigns undeclared variables: {sorted(unknown)}")
        missing = set(variables) - set(images)
        if missing:
            raise SstKitError(f"update is missing images for: {sorted(missing)}")
        return cls(variables, tuple(tuple(images[v]) for v in variables))

    @classmethod
    def identity(cls, variables: Sequence[str]) -> "Update":
        variables = tuple(variables)
        return cls(variables, tuple((v,) for v in variables))

    @cached_property
    def _index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.variables)}

    @cached_property
    def _varset(self) -> frozenset[str]:
        return frozenset(self.variables)

    def image(self, variable: str) -> tuple[str, ...]:
        try:
            return self.images[self._index[variable]]
        except KeyError:
            raise UnknownSymbolError(f"unknown variable {variable!r}") from None

    def apply_to(self, tokens: Sequence[str]) -> tuple[str, ...]:
        """Morphic application: substitute this update's images for variables."""
        out: list[str] = []
        for tok in tokens:
            if tok in self._varset:
                out.extend(self.image(tok))
            else:
                out.append(tok)
        return tuple(out)

    def is_identity(self) -> bool:
        return all(image == (v,) for v, image in zip(self.variables, self.images))

    def canonical(self) -> str:
        """Deterministic one-line rendering, variables in declared order."""
        parts = [f"{v} := {' '.join(image)}".rstrip() for v, image in zip(self.variables, self.images)]
        return " ; ".join(parts)


def compose_updates(a: Update, b: Update) -> Update:
    """Sequential composition: ``b`` applied morphically to ``a``'s images.

    The composite maps X to b(a(X)).  For a run that performs ``acc`` and
    then one more step ``step``, the accumulated update is
    ``compose_updates(step, acc)``: the earlier images get substituted into
    the later right-hand sides.
    """
    if a.variables != b.variables:
        raise VariableSetMismatchError(
            f"cannot compose updates over {a.variables} and {b.variables}"
        )
    return Update(a.variables, tuple(b.apply_to(a.image(v)) for v in a.variables))


@dataclass(frozen=True)
class Transition:
    source: str
    letter: str
    update: Update
    target: str


class Sst:
    """A nondeterministic copyless streaming string transducer.

    Immutable after construction; all operations over it are pure, so a
    single instance can be shared freely between threads.

    The first declared variable is conventionally the output variable, but
    outputs are defined by the per-final-state ``final_output`` expressions,
    which may mention any subset of the variables (each at most once).
    """

    def __init__(
        self,
        alphabet: Sequence[str],
        variables: Sequence[str],
        states: Sequence[str],
        initials: Sequence[str],
        finals: Sequence[str],
        final_output: Mapping[str, Sequence[str]],
        transitions: Sequence[Transition],
        initial_assignment: Mapping[str, str] | None = None,
    ):
        self.alphabet = tuple(alphabet)
        self.variables = tuple(variables)
        self.states = tuple(states)
        self.initials = tuple(initials)
        self.finals = tuple(finals)
        self.final_output = {q: tuple(expr) for q, expr in final_output.items()}
        self.transitions = tuple(transitions)
        init = dict(initial_assignment or {})
        self.initial_assignment = {v: init.get(v, "") for v in self.variables}

        self._letter_index = {a: i for i, a in enumerate(self.alphabet)}
        self._state_index = {q: i for i, q in enumerate(self.states)}
        self._var_index = {v: i for i, v in enumerate(self.variables)}
        self._validate()

        by_source: dict[tuple[str, str], list[int]] = {}
        for i, t in enumerate(self.transitions):
            by_source.setdefault((t.source, t.letter), []).append(i)
        self._by_source = {
            key: tuple(sorted(ids, key=self.transition_rank))
            for key, ids in by_source.items()
        }

    def _validate(self) -> None:
        for name, items in (("alphabet", self.alphabet), ("variables", self.variables), ("states", self.states)):
            if len(set(items)) != len(items):
                raise SstKitError(f"duplicate entries in {name}: {items}")
        for a in self.alphabet:
            if len(a) != 1:
                raise SstKitError(f"letters must be single characters, got {a!r}")
        overlap = set(self.alphabet) & set(self.variables)
        if overlap:
            raise SstKitError(f"variables may not collide with letters: {sorted(overlap)}")
        for group, label in ((self.initials, "initial"), (self.finals, "final")):
            if len(set(group)) != len(group):
                raise SstKitError(f"duplicate {label} states: {group}")
            for q in group:
                if q not in self._state_index:
                    raise UnknownSymbolError(f"{label} state {q!r} is not declared")
        if set(self.final_output) != set(self.finals):
            raise SstKitError("final_output must cover exactly the final states")
        for q, expr in self.final_output.items():
            seen: set[str] = set()
            for tok in expr:
                if tok in self._var_index:
                    if tok in seen:
                        raise CopylessError(tok, f"variable {tok!r} occurs twice in the output of {q!r}")
                    seen.add(tok)
                elif tok not in self._letter_index:
                    raise UnknownSymbolError(f"unknown symbol {tok!r} in the output of {q!r}")
        for v, word in self.initial_assignment.items():
            if v not in self._var_index:
                raise UnknownSymbolError(f"initial assignment for unknown variable {v!r}")
            for c in word:
                if c not in self._letter_index:
                    raise UnknownSymbolError(f"initial assignment of {v!r} uses unknown letter {c!r}")
        for t in self.transitions:
            for q in (t.source, t.target):
                if q not in self._state_index:
                    raise UnknownSymbolError(f"transition references unknown state {q!r}")
            if t.letter not in self._letter_index:
                raise UnknownSymbolError(f"transition reads unknown letter {t.letter!r}")
            if t.update.variables != self.variables:
                raise VariableSetMismatchError("transition update is over the wrong variable set")
            for image in t.update.images:
                for tok in image:
                    if tok not in self._var_index and tok not in self._letter_index:
                        raise UnknownSymbolError(f"unknown symbol {tok!r} in update {t.update.canonical()!r}")

    # -- ordering ---------------------------------------------------------

    def transition_rank(self, index: int) -> tuple[int, int, int, int]:
        """Total order on transitions: source, letter, target, then the fixed
        declaration position as the tie break."""
        t = self.transitions[index]
        return (
            self._state_index[t.source],
            self._letter_index[t.letter],
            self._state_index[t.target],
            index,
        )

    def run_sort_key(self, run: "Run"):
        ranks = tuple(self.transition_rank(i) for i in run.steps)
        return (ranks, self._state_index[run.start])

    # -- accessors --------------------------------------------------------

    def transitions_from(self, state: str, letter: str) -> tuple[int, ...]:
        return self._by_source.get((state, letter), ())

    def state_index(self, state: str) -> int:
        return self._state_index[state]

    def run(self, start: str, steps: Iterable[int]) -> "Run":
        return Run(self, start, tuple(steps))

    def empty_run(self, state: str) -> "Run":
        return Run(self, state, ())

    def describe(self) -> dict:
        """Plain-data summary used by reports."""
        return {
            "alphabet": list(self.alphabet),
            "variables": list(self.variables),
            "states": len(self.states),
            "initials": list(self.initials),
            "finals": list(self.finals),
            "transitions": len(self.transitions),
        }


@dataclass(frozen=True)
class Run:
    """A chained sequence of transitions, identified by indices into the
    transducer's declaration list.

    Positions along a run live *between* transitions: a run with n steps has
    positions 0..n, and the interval [i, j] covers steps i+1..j.
    """

    sst: Sst = field(repr=False)
    start: str
    steps: tuple[int, ...]

    def __post_init__(self):
        state = self.start
        if state not in self.sst._state_index:
            raise RunError(f"run starts in unknown state {state!r}")
        for i in self.steps:
            t = self.sst.transitions[i]
            if t.source != state:
                raise RunError(
                    f"broken chaining: expected a transition from {state!r}, got one from {t.source!r}"
                )
            state = t.target

    def __len__(self) -> int:
        return len(self.steps)

    @cached_property
    def states(self) -> tuple[str, ...]:
        """The n+1 states visited, including start and end."""
        out = [self.start]
        for i in self.steps:
            out.append(self.sst.transitions[i].target)
        return tuple(out)

    @property
    def end(self) -> str:
        return self.states[-1]

    @cached_property
    def input(self) -> str:
        return "".join(self.sst.transitions[i].letter for i in self.steps)

    @property
    def input_length(self) -> int:
        return len(self.steps)

    @property
    def accepting(self) -> bool:
        return self.start in self.sst.initials and self.end in self.sst.finals

    @cached_property
    def induced_update(self) -> Update:
        acc = Update.identity(self.sst.variables)
        for i in self.steps:
            acc = compose_updates(self.sst.transitions[i].update, acc)
        return acc

    @cached_property
    def annotated_output(self) -> tuple[tuple[str, int], ...]:
        """Output letters tagged with the step that produced them.

        Step 0 marks initial-assignment letters, step t letters introduced
        by the t-th transition, and step n (= run length) the constant
        letters of the final output expression.  Only defined for accepting
        runs.
        """
        if not self.accepting:
            raise RunError("annotated output is only defined for accepting runs")
        sst = self.sst
        varset = sst._var_index
        contents: dict[str, list[tuple[str, int]]] = {
            v: [(c, 0) for c in sst.initial_assignment[v]] for v in sst.variables
        }
        for step, i in enumerate(self.steps, start=1):
            update = sst.transitions[i].update
            fresh: dict[str, list[tuple[str, int]]] = {}
            for v in sst.variables:
                items: list[tuple[str, int]] = []
                for tok in update.image(v):
                    if tok in varset:
                        items.extend(contents[tok])
                    else:
                        items.append((tok, step))
                fresh[v] = items
            contents = fresh
        last = len(self.steps)
        out: list[tuple[str, int]] = []
        for tok in sst.final_output[self.end]:
            if tok in varset:
                out.extend(contents[tok])
            else:
                out.append((tok, last))
        return tuple(out)

    @cached_property
    def output(self) -> str:
        return "".join(c for c, _ in self.annotated_output)

    def describe(self) -> dict:
        return {"start": self.start, "steps": list(self.steps), "input": self.input}


# -- run evaluation -------------------------------------------------------


def eval_run(sst: Sst, run: Run) -> tuple[tuple[str, int], ...]:
    """Annotated output of an accepting run (letter, producing step)."""
    _check_owner(sst, run)
    if not run.accepting:
        raise RunError("run is not accepting: it must go from an initial to a final state")
    return run.annotated_output


def output_of(sst: Sst, run: Run) -> str:
    return "".join(c for c, _ in eval_run(sst, run))


def output_via_updates(sst: Sst, run: Run) -> str:
    """Second, independent evaluation path: compose all step updates, then
    ground variables with the initial assignment inside the final output
    expression.  Used to cross-check the annotated evaluator."""
    _check_owner(sst, run)
    if not run.accepting:
        raise RunError("run is not accepting")
    composite = run.induced_update
    varset = sst._var_index

    def ground(tokens: Sequence[str]) -> str:
        return "".join(
            sst.initial_assignment[tok] if tok in varset else tok for tok in tokens
        )

    pieces = []
    for tok in sst.final_output[run.end]:
        if tok in varset:
            pieces.append(ground(composite.image(tok)))
        else:
            pieces.append(tok)
    return "".join(pieces)


def _check_owner(sst: Sst, run: Run) -> None:
    if run.sst is not sst:
        raise RunError("run belongs to a different transducer instance")


# -- enumeration ----------------------------------------------------------


def enumerate_runs(sst: Sst, word: str, budget: Budget | int | None = None) -> list[Run]:
    """All accepting runs on ``word``, sorted lexicographically.

    Runs are ordered by the rank sequences of their transitions (see
    ``Sst.transition_rank``), with the start-state index breaking the tie
    between empty runs from different initial states.
    """
    for c in word:
        if c not in sst._letter_index:
            raise UnknownSymbolError(f"input letter {c!r} is not in the alphabet")
    b = Budget.ensure(budget)
    finals = set(sst.finals)
    found: list[Run] = []

    def extend(state: str, pos: int, acc: list[int], start: str) -> None:
        b.charge()
        if pos == len(word):
            if state in finals:
                found.append(Run(sst, start, tuple(acc)))
            return
        for i in sst.transitions_from(state, word[pos]):
            acc.append(i)
            extend(sst.transitions[i].target, pos + 1, acc, start)
            acc.pop()

    for start in sst.initials:
        extend(start, 0, [], start)
    found.sort(key=sst.run_sort_key)
    return found


def outputs(sst: Sst, word: str, budget: Budget | int | None = None) -> set[str]:
    """The set of words produced on ``word`` (deduplicated)."""
    return {run.output for run in enumerate_runs(sst, word, budget)}


def words_over(alphabet: Sequence[str], min_len: int, max_len: int) -> Iterator[str]:
    """Words in length-lexicographic order, letters in declared order."""
    for n in range(min_len, max_len + 1):
        for tup in product(alphabet, repeat=n):
            yield "".join(tup)


def _extremal_scan(
    sst: Sst,
    max_len: int,
    measure: Callable[[str, Budget], int],
    budget: Budget | int | None,
    min_len: int,
) -> tuple[int, str | None]:
    b = Budget.ensure(budget)
    best = -1
    witness: str | None = None
    for u in words_over(sst.alphabet, min_len, max_len):
        n = measure(u, b)
        if n > best:
            best, witness = n, u
    if best < 0:
        return 0, None
    return best, witness


def valuedness_oracle(
    sst: Sst,
    max_len: int,
    budget: Budget | int | None = None,
    min_len: int = 1,
) -> tuple[int, str | None]:
    """Exhaustive scan: max |outputs(u)| over inputs with min_len <= |u| <=
    max_len, plus the first maximizing input in length-lexicographic order.

    ``min_len`` defaults to 1: the scan probes output growth, and the empty
    input is excluded from the default report.  Pass ``min_len=0`` to
    include it.
    """
    return _extremal_scan(sst, max_len, lambda u, b: len(outputs(sst, u, b)), budget, min_len)


def ambiguity_oracle(
    sst: Sst,
    max_len: int,
    budget: Budget | int | None = None,
    min_len: int = 1,
) -> tuple[int, str | None]:
    """Like ``valuedness_oracle`` but counting accepting runs."""
    return _extremal_scan(sst, max_len, lambda u, b: len(enumerate_runs(sst, u, b)), budget, min_len)


# -- reachability ---------------------------------------------------------


def reachable_states(sst: Sst) -> tuple[str, ...]:
    """States reachable from some initial state, in declaration order."""
    seen = set(sst.initials)
    frontier = list(sst.initials)
    while frontier:
        q = frontier.pop()
        for t in sst.transitions:
            if t.source == q and t.target not in seen:
                seen.add(t.target)
                frontier.append(t.target)
    return tuple(q for q in sst.states if q in seen)


def coreachable_states(sst: Sst) -> tuple[str, ...]:
    """States from which some final state is reachable, in declaration order."""
    seen = set(sst.finals)
    frontier = list(sst.finals)
    while frontier:
        q = frontier.pop()
        for t in sst.transitions:
            if t.target == q and t.source not in seen:
                seen.add(t.source)
                frontier.append(t.source)
    return tuple(q for q in sst.states if q in seen)


def shortest_access_run(sst: Sst, target: str) -> Run | None:
    """A shortest run from an initial state to ``target`` (BFS, deterministic)."""
    parents: dict[str, tuple[str, int] | None] = {q: None for q in sst.initials}
    order = list(sst.initials)
    pos = 0
    while pos < len(order):
        q = order[pos]
        pos += 1
        if q == target:
            return _rebuild(sst, parents, q)
        for a in sst.alphabet:
            for i in sst.transitions_from(q, a):
                tgt = sst.transitions[i].target
                if tgt not in parents:
                    parents[tgt] = (q, i)
                    order.append(tgt)
    return None


def shortest_exit_run(sst: Sst, source: str) -> Run | None:
    """A shortest run from ``source`` to a final state (BFS, deterministic)."""
    finals = set(sst.finals)
    parents: dict[str, tuple[str, int] | None] = {source: None}
    order = [source]
    pos = 0
    while pos < len(order):
        q = order[pos]
        pos += 1
        if q in finals:
            return _rebuild(sst, parents, q)
        for a in sst.alphabet:
            for i in sst.transitions_from(q, a):
                tgt = sst.transitions[i].target
                if tgt not in parents:
                    parents[tgt] = (q, i)
                    order.append(tgt)
    return None


def _rebuild(sst: Sst, parents: dict, state: str) -> Run:
    steps: list[int] = []
    q = state
    while parents[q] is not None:
        q, i = parents[q]
        steps.append(i)
    steps.reverse()
    return Run(sst, q, tuple(steps))


def concat_runs(sst: Sst, runs: Sequence[Run]) -> Run:
    """Concatenate chained runs into one run."""
    if not runs:
        raise RunError("cannot concatenate an empty sequence of runs")
    steps: list[int] = []
    state = runs[0].start
    for r in runs:
        _check_owner(sst, r)
        if r.start != state:
            raise RunError(f"runs do not chain: expected start {state!r}, got {r.start!r}")
        steps.extend(r.steps)
        state = r.end
    return Run(sst, runs[0].start, tuple(steps))
