"""Tour of the core model: documents, runs, outputs, and the brute-force
oracles.

A streaming string transducer reads its input once while filling write-only
string variables via copyless updates; a final state says how to stitch the
variables into the output.  Nondeterminism turns it into a relation.
"""

from sstkit import (
    ambiguity_oracle,
    enumerate_runs,
    eval_run,
    fixtures,
    outputs,
    parse_sst,
    valuedness_oracle,
)

print("=== a tiny document ===")
doc = """\
alphabet: 0 1
vars: X1
states: even odd
initial: even
final even -> X1
trans even 0 even { X1 := X1 0 }
trans even 1 odd  { X1 := X1 1 }
trans odd  0 odd  { X1 := X1 0 }
trans odd  1 even { X1 := X1 1 }
"""
sst = parse_sst(doc)
print("parsed:", sst.describe())
print("accepts words with an even number of 1s, copying them verbatim:")
for word in ("", "0110", "01"):
    print(f"  outputs({word!r}) = {sorted(outputs(sst, word))}")

print()
print("=== the two-sided counter ===")
tsc = fixtures.load("FIX-TSC")
print(fixtures.source("FIX-TSC"))
print("on input '01' it emits the 0-block and the 1-block in either order:")
for run in enumerate_runs(tsc, "01"):
    annotated = eval_run(tsc, run)
    print(f"  start={run.start} steps={run.steps} -> {run.output!r}  "
          f"(letters tagged with producing step: {annotated})")

print()
print("=== brute-force oracles ===")
print("max outputs per input (length <= 4):", valuedness_oracle(tsc, 4))
print("max runs per input (length <= 4):   ", ambiguity_oracle(tsc, 4))
print("the relation is 2-valued, yet the number of runs explodes: that gap")
print("(finitely valued but not finitely ambiguous) drives the analyses in")
print("the later demos.")
