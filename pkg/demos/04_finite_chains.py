"""Run an automaton on a short open chain and watch boundary effects.

Truncating the infinite rule to 7 sites keeps it an automorphism of the
Pauli algebra for the glider rule. Excitations launched from a site
bounce off the open ends and refocus on the mirror site; meanwhile the
global Y parity of the evolving operator flips in a characteristic
pattern of steps that identifies the initial letter and site.
"""

from cqcalab import glider
from cqcalab.finite_chain import (
    FiniteOperator,
    evolve_finite,
    global_y_parity,
    mirror_time,
    truncate_rule,
)

N, origin = 7, -3
rule = truncate_rule(glider(), N, "open")

print(f"Z on site -2 of a chain labeled {origin}..{origin + N - 1}:")
op = FiniteOperator.single_site(N, -2 - origin, "Z")
for k, o in enumerate(evolve_finite(rule, op, 8)):
    parity = "-" if global_y_parity(o) == -1 else "+"
    print(f"  t={k}: {o}   global Y parity {parity}1")
print()

print("mirror times (step at which the operator refocuses on one site):")
for letter in "XYZ":
    times = [mirror_time(rule, site, letter) for site in range(N)]
    print(f"  {letter}: {times}")
