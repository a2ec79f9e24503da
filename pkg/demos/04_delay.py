"""Delay: telling apart two runs that produce the same output.

Weight counts how much of the output prefix up to position j was already
produced after t input letters.  Two runs that assemble the same word in
different orders get a positive delay -- except inside periodic factors,
where assembly order cannot matter; that is why weights are only compared
at the cuts of the output's periodic factorization.
"""

from sstkit import RunProfile, delay, fixtures, weight

print("=== a worked pair of assembly schedules ===")
print("output 'abcccbb' over a 2-letter input; one run produces 'abc__bb'")
print("after the first letter, the other '___c_bb'.")
leftish = RunProfile(
    (("a", 1), ("b", 1), ("c", 1), ("c", 2), ("c", 2), ("b", 1), ("b", 1)), 2
)
rightish = RunProfile(
    (("a", 2), ("b", 2), ("c", 2), ("c", 1), ("c", 2), ("b", 1), ("b", 1)), 2
)
for j in (2, 5, 7):
    print(f"  weight at t=1, j={j}:  {weight(leftish, 1, j)} vs {weight(rightish, 1, j)}")
report = delay(leftish, rightish, 2)
print("cuts of 'abcccbb' at C=2:", list(report.cuts), " -> ab|ccc|bb")
print("delay:", report.delay, "attained at (t, cut) =", report.argmax)
print()
for line in report.table_lines():
    print(line)

print()
print("=== periodic outputs hide the assembly order ===")
tsc = fixtures.load("FIX-TSC")
prepender = tsc.run("qA", (0, 0))
appender = tsc.run("qA", (1, 1))
print("both runs on '00' output", repr(prepender.output),
      "- one prepends, one appends")
print("delay at C=1:", delay(prepender, appender, 1).delay,
      "(a unary-period word has a single cut at its end)")

print()
print("=== where the marker makes runs distinguishable ===")
tsc1 = fixtures.load("FIX-TSC1")
inner = tsc1.run("qA", (0, 1))   # prepend then append around the marker
outer = tsc1.run("qA", (1, 0))   # append then prepend
print("both runs on '00' output", repr(inner.output))
report = delay(inner, outer, 1)
print("cuts:", list(report.cuts), "delay:", report.delay)
