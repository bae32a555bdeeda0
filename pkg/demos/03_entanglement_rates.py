"""Track entanglement generated from the all-spins-up product state.

For translation-invariant stabilizer states the bipartite entanglement
across any cut equals the one-sided support radius n of the generator,
and the asymptotic growth rate equals the degree of the automaton's
trace. Gliders generate exactly one ebit per step; the fractal rule
averages one per step with oscillations; periodic rules stay bounded.
A shear word can also be run backwards to destroy entanglement first.
"""

from cqcalab import (
    all_spins_up,
    asymptotic_rate,
    entanglement_trajectory,
    fractal,
    glider,
    shear,
    trajectory_csv,
    upper_shear,
    validate_state,
)
from cqcalab.laurent import LaurentPoly, parse_poly

for name, t in (("glider", glider()), ("fractal", fractal())):
    points = entanglement_trajectory(t, all_spins_up(), 12)
    print(f"{name}: E_bi per step = {[p.e_bipartite for p in points]}")
    predicted, empirical = asymptotic_rate(t, all_spins_up(), 256)
    print(f"{name}: predicted rate {predicted}, empirical {empirical}")
print()

print("tripartite entanglement of a finite region saturates at its length:")
seed = validate_state(glider().apply(all_spins_up().xi))
points = entanglement_trajectory(glider(), seed, 16, region_length=10)
print(trajectory_csv(points))

print("running a preparation word backwards first destroys an ebit:")
b = shear(LaurentPoly.one()) @ upper_shear(parse_poly("u^-1 + 1 + u"))
prepared = validate_state(b.apply(all_spins_up().xi))
points = entanglement_trajectory(b.inverse(), prepared, 8)
print("E_bi:", [p.e_bipartite for p in points])
