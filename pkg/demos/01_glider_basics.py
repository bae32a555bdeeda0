"""Walk through the simplest nontrivial automaton: the glider rule.

The rule swaps the two phase-space components and adds the neighbor sum,
which turns a single X into a Z and a single Z into the three-site word
ZXZ. The combination ZYX is special: it is an eigenvector of the rule up
to translation, so it slides one site to the left every step without
changing shape.
"""

from cqcalab import evolve_finite, glider, parse_observable, format_observable
from cqcalab.finite_chain import FiniteOperator, truncate_rule

g = glider()
print("matrix:")
print(g.matrix)
print("class:", g.class_tag)
print()

print("images of the single-site letters:")
for letters in ("X", "Z"):
    image = g.apply(parse_observable(letters))
    print(f"  {letters} -> {format_observable(image)}")

# Y picks up a sign that the infinite-chain phase-space picture drops;
# the finite-chain operator algebra tracks it.
rule = truncate_rule(g, 7, "open")
y = FiniteOperator.single_site(7, 3, "Y")
print(f"  Y -> {evolve_finite(rule, y, 1)[1]}  (sign tracked on a 7-site chain)")
print()

print("the ZYX glider over ten steps:")
v = parse_observable("ZYX@-1")
for k in range(10):
    print(f"  t={k}: {format_observable(v)}")
    v = g.apply(v)
