"""Semantic covers and selector decomposition.

Order the accepting runs on each input lexicographically.  The cover keeps
a run only if no smaller run yields the same output within a small delay;
what survives realizes the same relation with its runs separated by output
or by delay.  Selectors go one step further: selector i returns the i-th
distinct output (by least witnessing run), so a k-valued relation splits
into k single-valued functions.
"""

from sstkit import (
    check_equivalence_bounded,
    decompose_selectors,
    enumerate_runs,
    fixtures,
    outputs,
    semantic_cover,
    words_over,
)

tsc = fixtures.load("FIX-TSC")

print("=== covers shrink run explosion to output multiplicity ===")
print("input | runs | cover (C=1, D=100) | outputs")
for word in ("", "01", "0011", "010101"):
    runs = enumerate_runs(tsc, word)
    cover = semantic_cover(tsc, word, 1, 100)
    print(f"{word!r:>8} | {len(runs):>4} | {len(cover):>5} | {sorted(outputs(tsc, word))}")

print()
print("=== two selectors split the two-sided counter ===")
sel1, sel2 = decompose_selectors(tsc, 2)
print("input      sel_1      sel_2")
for word in words_over(tsc.alphabet, 0, 3):
    print(f"{word!r:>8}   {sel1(word)!r:>8}   {sel2(word)!r:>8}")
print("each selector is a partial function; their graphs union to the relation.")

print()
print("=== four selectors for the block picker ===")
r2 = fixtures.load("FIX-R2")
sels = decompose_selectors(r2, 4)
for word in ("00", "0010", "001011", "111111"):
    print(f"  {word!r:>10} -> {[sel(word) for sel in sels]}")

print()
print("=== bounded equivalence as a regression oracle ===")
tsc1 = fixtures.load("FIX-TSC1")
print("two-sided counter vs its marked variant:",
      repr(check_equivalence_bounded(tsc, tsc1, 4)),
      "(first input where the output sets differ)")
print("against itself:", check_equivalence_bounded(tsc, fixtures.load("FIX-TSC"), 5))
