"""Word combinatorics: primitive roots, periodic cuts, and inequalities
between words with parameterized repetitions.

The striking empirical fact exercised here: a one-parameter inequality
between such templates is either never satisfied, or fails for at most
m + n parameter values (the number of repeating factors on the two sides).
"""

from sstkit import (
    Inequality,
    ParamWord,
    cuts,
    find_solution_box,
    find_system_solution,
    instantiate,
    is_solution,
    nonsolutions_single,
    primitive_root,
)

print("=== primitive roots and cuts ===")
for w in ("abab", "aaaa", "abcccbb", "abaab"):
    print(f"  rt({w!r}) = {primitive_root(w)!r}")
print("cuts split a word greedily into maximal factors of small period:")
for w, C in (("abcccbb", 2), ("aaaabbb", 1), ("abcabcX", 3)):
    positions = cuts(w, C)
    marked, prev = [], 0
    for j in positions:
        marked.append(w[prev:j])
        prev = j
    print(f"  cuts({w!r}, C={C}) = {positions}   {'|'.join(marked)}")

print()
print("=== parameterized words ===")
template = ParamWord(("a", "c"), (("b", "x"),))
print("template a (b)^x c at x = 0..3:",
      [instantiate(template, {"x": n}) for n in range(4)])

print()
print("=== the co-finiteness bound ===")
e = Inequality(
    ParamWord(("", ""), (("ab", "x"),)),  # (ab)^x
    ParamWord(("ababab",), ()),           # fixed word ababab
)
print("inequality:", e.render())
bad = nonsolutions_single(e, 30)
print("values in [0,30] where both sides coincide:", bad)
print("left has 1 repeating factor, right has 0, so at most 1 failure. QED-by-scan.")

print()
print("=== systems and solution boxes ===")
e1 = Inequality(ParamWord(("", ""), (("a", "x"),)), ParamWord(("aa",), ()))
e2 = Inequality(ParamWord(("", ""), (("a", "x"),)), ParamWord(("",), ()))
solution = find_system_solution([e1, e2], {"x": (0, 10)})
print("first x solving both a^x != aa and a^x != '':", solution)

box = find_solution_box(e1, seed={"x": 5}, sizes={"x": 3}, bound=20)
lo, hi = box["x"]
print(f"a whole interval of solutions for a^x != aa: [{lo}, {hi}]",
      "- every value verified:",
      all(is_solution(e1, {"x": v}) for v in range(lo, hi + 1)))

two = Inequality(
    ParamWord(("", "", ""), (("a", "x"), ("b", "y"))),
    ParamWord(("aabb",), ()),
)
box = find_solution_box(two, seed={"x": 0, "y": 0}, sizes={"x": 2, "y": 2}, bound=10)
print("a 3x3 solution box for a^x b^y != aabb:", box, "(it must dodge (2,2))")
