"""Loops and pumping: what repetition does to outputs.

A loop is a run interval that returns to the same state *and* whose update
has an idempotent skeleton (the letter-erased variable flow).  Pumping a
loop keeps the run valid; the output changes by repeating at most two fixed
factors per loop and variable, which `pumped_output_expr` captures as a
parameterized word.
"""

from sstkit import (
    LoopSet,
    Update,
    compose_updates,
    find_loops,
    fixtures,
    idempotent_power_words,
    is_idempotent,
    pump,
    pumped_output_expr,
    skeleton_of,
)

print("=== skeletons ===")
u = Update.make(("X1", "X2"), {"X1": ["a", "X1", "b", "X2", "c"], "X2": ["a"]})
print("update:      ", u.canonical())
print("skeleton:    ", skeleton_of(u).images)
print("idempotent?  ", is_idempotent(skeleton_of(u)))
swap = Update.make(("X1", "X2"), {"X1": ["X2"], "X2": ["X1"]})
print("swap skeleton idempotent?", is_idempotent(skeleton_of(swap)), "(its square is the identity)")

print()
print("=== powers of an idempotent-skeleton update ===")
left, right = idempotent_power_words(u, "X1")
print(f"u^n(X1) = {left!r}^(n-1) . u(X1) . {right!r}^(n-1):")
power = u
for n in range(1, 4):
    if n > 1:
        power = compose_updates(u, power)
    print(f"  n={n}:  {' '.join(power.image('X1'))}")

print()
print("=== pumping a run of the marked counter ===")
tsc1 = fixtures.load("FIX-TSC1")
run = tsc1.run("qA", (0,))  # one prepend of 0 onto X0 = '1'
print("base run: input", repr(run.input), "output", repr(run.output))
loops = LoopSet.build(tsc1, run, find_loops(tsc1, run))
print("loops found:", loops.intervals)
for n in (1, 2, 3):
    pumped = pump(tsc1, run, loops, [n])
    print(f"  pumped x{n}: input {pumped.input!r} output {pumped.output!r}")

expr = pumped_output_expr(tsc1, run, loops)
print("closed form of all pumpings:", expr.word.render(),
      "(parameter = pump count - 1)")
print("instantiations:", [expr.output_for_counts([n]) for n in (1, 2, 3, 4)])

print()
print("=== two disjoint loops at once ===")
amb = fixtures.load("FIX-AMB")
run = amb.run("q", (0, 1))  # append then skip
loops = LoopSet.build(amb, run, [(0, 1), (1, 2)])
expr = pumped_output_expr(amb, run, loops)
print("run 'append, skip' on 'aa'; closed form:", expr.word.render())
for counts in ((1, 1), (3, 1), (2, 4)):
    pumped = pump(amb, run, loops, counts)
    print(f"  counts {counts}: input {pumped.input!r} output {pumped.output!r}"
          f"  closed form agrees: {expr.output_for_counts(counts) == pumped.output}")
