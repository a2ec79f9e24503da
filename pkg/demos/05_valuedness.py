"""Ambiguity and valuedness verdicts, with witnesses you can re-run.

Finite ambiguity is decided exactly by the absence of dumbbells.  Finite
valuedness gets a sound partial answer: Finite when no dumbbell exists,
Infinite when a simply divergent W-pattern is found and re-verified, and an
honest Unknown otherwise.
"""

from sstkit import (
    SearchBudget,
    amplify_valuedness,
    analyze_valuedness,
    build_wrun,
    find_dumbbell,
    fixtures,
    outputs,
)

print("=== dumbbells: exact finite-ambiguity ===")
for name in fixtures.names():
    sst = fixtures.load(name)
    dumbbell = find_dumbbell(sst)
    if dumbbell is None:
        print(f"  {name:<9} finitely ambiguous (no dumbbell)")
    else:
        print(f"  {name:<9} NOT finitely ambiguous: loops at {dumbbell.q1}/{dumbbell.q2} "
              f"over shared input {dumbbell.rho1.input!r}")

print()
print("=== the analyzer on three contrasting machines ===")
small = SearchBudget(component_length=2, candidates=3000)

ident = fixtures.load("FIX-ID")
print("FIX-ID:  ", analyze_valuedness(ident).kind, "(deterministic, no dumbbell)")

tsc = fixtures.load("FIX-TSC")
verdict = analyze_valuedness(tsc, small)
print("FIX-TSC: ", verdict.kind,
      f"(dumbbell exists, but no divergence in {verdict.details['search']['candidates_used']} candidates;",
      f"oracle says max {verdict.oracle_reading['max_outputs']} outputs up to length "
      f"{verdict.oracle_reading['max_len']})")

tsc1 = fixtures.load("FIX-TSC1")
verdict = analyze_valuedness(tsc1)
witness = verdict.witness
print("FIX-TSC1:", verdict.kind)
print("  divergent W-pattern: stations", (witness.pattern.r1, witness.pattern.r2, witness.pattern.r3),
      "loop input", repr(witness.pattern.loop_input),
      "exit input", repr(witness.pattern.exit_input))
print("  tuple", witness.values, "-> same input", repr(witness.input),
      "but outputs", repr(witness.output_mark_mid), "vs", repr(witness.output_mark_late))

print()
print("=== replaying the witness by hand ===")
for mark in (1, 3):
    run = build_wrun(tsc1, witness.pattern, witness.values, mark)
    print(f"  mark at block {mark + 1}: input {run.input!r} output {run.output!r}")
print("  both outputs really belong to the relation:",
      {witness.output_mark_mid, witness.output_mark_late} <= outputs(tsc1, witness.input))

print()
print("=== amplification: as many outputs as you like ===")
for m in (3, 5):
    word, outs = amplify_valuedness(tsc1, witness, m)
    print(f"  m={m}: input {word!r} -> {outs}")
print("each list is pairwise distinct and re-verified against full enumeration,")
print("so no uniform bound on the number of outputs can exist.")
