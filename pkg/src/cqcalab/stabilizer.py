"""Translation-invariant pure stabilizer states and their entanglement.

A state is given by one generator seed: all stabilizer generators are
lattice translates of a single Pauli product whose phase-space label is
mirror-symmetric about the origin with coprime components.  With
generator length 2n + 1, closed forms give the entanglement directly: n
ebits across any bipartite cut, min(2n, L) ebits between a region of L
sites and the rest of the chain.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from typing import NamedTuple

from .automaton import ValidatedCqca
from .laurent import LaurentPoly, gcd
from .phase_space import PhaseVector, symplectic_form


class StateValidationError(ValueError):
    """The seed does not define a pure translation-invariant stabilizer state."""


class NotReflectionSymmetric(StateValidationError):
    pass


class CenterIdentity(StateValidationError):
    pass


class SingleLetterType(StateValidationError):
    pass


class CommonDivisor(StateValidationError):
    def __init__(self, divisor: LaurentPoly):
        super().__init__(f"components share the divisor {divisor}")
        self.divisor = divisor


@dataclasses.dataclass(frozen=True)
class TIStabilizerState:
    """Generator seed xi plus its half-length n (generator length 2n + 1)."""

    xi: PhaseVector
    n: int


def validate_state(v: PhaseVector) -> TIStabilizerState:
    """Check the purity conditions and return the state with its half-length.

    The generator must be mirror-symmetric about the origin and its two
    component polynomials coprime; the named errors pinpoint which of
    the equivalent elementary conditions failed (non-identity center,
    more than one letter type, no shared divisor).
    """
    plus, minus = v.xi_plus, v.xi_minus
    if not (plus.is_reflection_symmetric(0) and minus.is_reflection_symmetric(0)):
        raise NotReflectionSymmetric("seed is not mirror-symmetric about site 0")
    if plus.coefficient(0) == 0 and minus.coefficient(0) == 0:
        raise CenterIdentity("center site carries the identity")
    common = gcd(plus, minus)
    if common != LaurentPoly.one():
        degenerate = plus.is_zero or minus.is_zero or plus == minus
        if degenerate:
            raise SingleLetterType("only one non-identity letter type occurs")
        raise CommonDivisor(common)
    half_length = v.dg()
    assert half_length is not None  # center occupied, so the seed is nonzero
    return TIStabilizerState(v, half_length)


def all_spins_up() -> TIStabilizerState:
    """The product state generated by Z at every site."""
    return validate_state(PhaseVector(LaurentPoly.zero(), LaurentPoly.one()))


def evolve(
    s: TIStabilizerState, t: ValidatedCqca, steps: int
) -> list[TIStabilizerState]:
    """States after 0..steps automaton steps; each element revalidates."""
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    out = [s]
    xi = s.xi
    for _ in range(steps):
        xi = t.apply(xi)
        out.append(validate_state(xi))
    return out


def bipartite_entanglement(s: TIStabilizerState) -> int:
    """Maximally entangled qubit pairs across any bipartite cut: exactly n."""
    return s.n


def tripartite_entanglement(s: TIStabilizerState, region_length: int) -> int:
    """Ebits between a length-L region and the rest of the chain: min(2n, L)."""
    if region_length < 1:
        raise ValueError("region length must be positive")
    return min(2 * s.n, region_length)


class TrajectoryPoint(NamedTuple):
    step: int
    n: int
    e_bipartite: int
    e_tripartite: int | None


def entanglement_trajectory(
    t: ValidatedCqca,
    s: TIStabilizerState,
    steps: int,
    region_length: int | None = None,
) -> list[TrajectoryPoint]:
    """Per-step entanglement record along the evolution of ``s`` under ``t``."""
    points = []
    for k, state in enumerate(evolve(s, t, steps)):
        e_tri = (
            tripartite_entanglement(state, region_length)
            if region_length is not None
            else None
        )
        points.append(TrajectoryPoint(k, state.n, bipartite_entanglement(state), e_tri))
    return points


def trajectory_csv(points: list[TrajectoryPoint]) -> str:
    """Render a trajectory as "t,n,E_bi,E_tri" CSV; E_tri empty when absent."""
    lines = ["t,n,E_bi,E_tri"]
    for p in points:
        tri = "" if p.e_tripartite is None else str(p.e_tripartite)
        lines.append(f"{p.step},{p.n},{p.e_bipartite},{tri}")
    return "\n".join(lines) + "\n"


def asymptotic_rate(
    t: ValidatedCqca, s: TIStabilizerState, steps: int
) -> tuple[int, Fraction]:
    """(predicted, empirical) entanglement rate in ebit pairs per step.

    Predicted is the trace degree.  The empirical slope is taken over the
    second half of the run only, since the early steps may transiently
    destroy entanglement before linear growth sets in.
    """
    if steps < 16:
        raise ValueError("need at least 16 steps for a meaningful slope")
    half = steps // 2
    states = evolve(s, t, steps)
    empirical = Fraction(states[steps].n - states[half].n, steps - half)
    return t.trace_degree(), empirical


def extract_logical_pairs(
    s: TIStabilizerState, cut_bond: int = 0
) -> list[tuple[PhaseVector, PhaseVector]]:
    """Logical X/Z pairs encoded on the right half by the cut generators.

    The cut between sites cut_bond - 1 and cut_bond slices through the 2n
    generators centered at cut_bond - n .. cut_bond + n - 1.  Their
    restrictions to the right half-chain are paired up by symplectic
    Gram-Schmidt over F2: always pair the first remaining restriction
    with the first partner it anticommutes with, then clear the
    symplectic overlap of everything else with that pair.  Exactly n
    anticommuting pairs come out, mutually commuting across pairs.
    """
    n = s.n
    if n == 0:
        return []
    rest = [
        s.xi.shifted(x).restricted(lo=cut_bond)
        for x in range(cut_bond - n, cut_bond + n)
    ]
    pairs = []
    while rest:
        v = rest.pop(0)
        partner_index = next(
            (i for i, w in enumerate(rest) if symplectic_form(v, w)), None
        )
        if partner_index is None:
            continue  # v is central among the remainder; carries no logical qubit
        w = rest.pop(partner_index)
        reduced = []
        for r in rest:
            if symplectic_form(r, w):
                r = r + v
            if symplectic_form(r, v):
                r = r + w
            reduced.append(r)
        rest = reduced
        pairs.append((v, w))
    return pairs
