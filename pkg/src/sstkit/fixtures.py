"""Bundled example transducers, used by the tests, the demos, and the docs.

FIX-ID    deterministic appender over {a}: the identity function.
FIX-AMB   one state, two transitions on 'a' (append / skip): 2^n runs on a^n,
          outputs {epsilon, a, ..., a^n} -- infinitely ambiguous and
          infinitely valued.
FIX-TSC   two-sided counter: on each bit b it prepends or appends b to the
          variable X_b, and at the end emits X0 X1 or X1 X0 depending on the
          (parallel) state.  2-valued but not finitely ambiguous.
FIX-TSC1  FIX-TSC with X0 initialized to "1": on 0^n it can output any
          0^i 1 0^j with i + j = n, so it is not finite-valued.
FIX-R2    block picker: nondeterministically copies exactly one 2-bit block
          of the input.  At most 4 outputs per input, unboundedly many runs.
"""

from __future__ import annotations

from .model import Sst
from .sstformat import parse_sst

FIX_ID = """\
# the identity function on {a}*
alphabet: a
vars: X1
states: q
initial: q
final q -> X1
trans q a q { X1 := X1 a }
"""

FIX_AMB = """\
# append or skip: 2^n accepting runs on a^n
alphabet: a
vars: X1
states: q
initial: q
final q -> X1
trans q a q { X1 := X1 a }
trans q a q { X1 := X1 }
"""

_TSC_BODY = """\
alphabet: 0 1
vars: X1 X0
states: qA qB
initial: qA qB
{init}final qA -> X0 X1
final qB -> X1 X0
trans qA 0 qA { X0 := 0 X0 ; X1 := X1 }
trans qA 0 qA { X0 := X0 0 ; X1 := X1 }
trans qA 1 qA { X1 := 1 X1 ; X0 := X0 }
trans qA 1 qA { X1 := X1 1 ; X0 := X0 }
trans qB 0 qB { X0 := 0 X0 ; X1 := X1 }
trans qB 0 qB { X0 := X0 0 ; X1 := X1 }
trans qB 1 qB { X1 := 1 X1 ; X0 := X0 }
trans qB 1 qB { X1 := X1 1 ; X0 := X0 }
"""

FIX_TSC = "# two-sided counter, 2-valued\n" + _TSC_BODY.replace("{init}", "")
FIX_TSC1 = (
    "# two-sided counter with a marker planted in X0: not finite-valued\n"
    + _TSC_BODY.replace("{init}", "init X0 = 1\n")
)

FIX_R2 = """\
# copy exactly one 2-bit block of the input
alphabet: 0 1
vars: X1
states: s0 s1 c1 d0 d1
initial: s0
final d0 -> X1
trans s0 0 s1 { X1 := X1 }
trans s0 1 s1 { X1 := X1 }
trans s0 0 c1 { X1 := X1 0 }
trans s0 1 c1 { X1 := X1 1 }
trans s1 0 s0 { X1 := X1 }
trans s1 1 s0 { X1 := X1 }
trans c1 0 d0 { X1 := X1 0 }
trans c1 1 d0 { X1 := X1 1 }
trans d0 0 d1 { X1 := X1 }
trans d0 1 d1 { X1 := X1 }
trans d1 0 d0 { X1 := X1 }
trans d1 1 d0 { X1 := X1 }
"""

SOURCES: dict[str, str] = {
    "FIX-ID": FIX_ID,
    "FIX-AMB": FIX_AMB,
    "FIX-TSC": FIX_TSC,
    "FIX-TSC1": FIX_TSC1,
    "FIX-R2": FIX_R2,
}


def names() -> list[str]:
    return list(SOURCES)


def source(name: str) -> str:
    return SOURCES[name]


def load(name: str) -> Sst:
    """Parse a bundled fixture by name (a fresh instance every call)."""
    return parse_sst(SOURCES[name])
