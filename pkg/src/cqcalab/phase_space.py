"""Phase-space encoding of Pauli products.

A Pauli product (phases dropped) is labeled by a pair of Laurent
polynomials: the X-component marks sites carrying X or Y, the
Z-component marks sites carrying Z or Y.  The symplectic form on these
pairs is 0 for commuting operators and 1 for anticommuting ones, which
is all the commutation information the symbolic layer needs; exact phase
bookkeeping lives in :mod:`cqcalab.finite_chain`.
"""

from __future__ import annotations

import dataclasses

from .laurent import LaurentPoly, coefficient_dot

_LETTER_BITS = {"1": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
_BITS_LETTER = {bits: letter for letter, bits in _LETTER_BITS.items()}


@dataclasses.dataclass(frozen=True)
class PhaseVector:
    """Pair (xi_plus, xi_minus) of Laurent polynomials labeling a Pauli product."""

    xi_plus: LaurentPoly
    xi_minus: LaurentPoly

    @classmethod
    def zero(cls) -> "PhaseVector":
        return cls(LaurentPoly.zero(), LaurentPoly.zero())

    @property
    def is_identity(self) -> bool:
        return self.xi_plus.is_zero and self.xi_minus.is_zero

    def __add__(self, other: "PhaseVector") -> "PhaseVector":
        return PhaseVector(self.xi_plus + other.xi_plus, self.xi_minus + other.xi_minus)

    def dg(self) -> int | None:
        """Max exponent over both components; None for the identity."""
        highs = [p.max_exp for p in (self.xi_plus, self.xi_minus) if not p.is_zero]
        return max(highs) if highs else None

    def support(self) -> tuple[int, int] | None:
        """(leftmost site, rightmost site) touched, or None for the identity."""
        if self.is_identity:
            return None
        lows = [p.min_exp for p in (self.xi_plus, self.xi_minus) if not p.is_zero]
        highs = [p.max_exp for p in (self.xi_plus, self.xi_minus) if not p.is_zero]
        return min(lows), max(highs)

    def letter_at(self, site: int) -> str:
        return _BITS_LETTER[
            (self.xi_plus.coefficient(site), self.xi_minus.coefficient(site))
        ]

    def restricted(self, lo: int | None = None, hi: int | None = None) -> "PhaseVector":
        """Keep only the tensor factors on sites lo..hi (inclusive ends)."""

        def cut(p: LaurentPoly) -> LaurentPoly:
            kept = [
                e
                for e in p.exponents()
                if (lo is None or e >= lo) and (hi is None or e <= hi)
            ]
            return LaurentPoly.from_exponents(kept)

        return PhaseVector(cut(self.xi_plus), cut(self.xi_minus))

    def shifted(self, k: int) -> "PhaseVector":
        """Lattice translation by k sites."""
        return PhaseVector(self.xi_plus.shifted(k), self.xi_minus.shifted(k))

    def __str__(self) -> str:
        return format_observable(self)


def pauli_to_phase_space(letters: str, offset: int = 0) -> PhaseVector:
    """Encode a letter string over {1, X, Y, Z}; the first letter sits at ``offset``."""
    if not letters:
        raise ValueError("empty Pauli string")
    plus_exps = []
    minus_exps = []
    for k, letter in enumerate(letters):
        try:
            x_bit, z_bit = _LETTER_BITS[letter]
        except KeyError:
            raise ValueError(f"illegal Pauli letter {letter!r} at index {k}") from None
        if x_bit:
            plus_exps.append(offset + k)
        if z_bit:
            minus_exps.append(offset + k)
    return PhaseVector(
        LaurentPoly.from_exponents(plus_exps), LaurentPoly.from_exponents(minus_exps)
    )


def phase_space_to_pauli(v: PhaseVector) -> tuple[str, int]:
    """Minimal-width letter string and its offset; the identity is ("1", 0)."""
    span = v.support()
    if span is None:
        return "1", 0
    lo, hi = span
    return "".join(v.letter_at(site) for site in range(lo, hi + 1)), lo


def symplectic_form(a: PhaseVector, b: PhaseVector) -> int:
    """0 iff the labeled operators commute, 1 iff they anticommute."""
    return (
        coefficient_dot(a.xi_plus, b.xi_minus) ^ coefficient_dot(a.xi_minus, b.xi_plus)
    )


def compose_observables(a: PhaseVector, b: PhaseVector) -> PhaseVector:
    """Phase-space image of the operator product (phases dropped)."""
    return a + b


def parse_observable(text: str) -> PhaseVector:
    """Parse the "ZYX@-1" literal format; "@offset" defaults to 0."""
    body, sep, tail = text.strip().partition("@")
    offset = 0
    if sep:
        try:
            offset = int(tail)
        except ValueError:
            raise ValueError(f"bad observable offset {tail!r}") from None
    return pauli_to_phase_space(body, offset)


def format_observable(v: PhaseVector) -> str:
    letters, offset = phase_space_to_pauli(v)
    return letters if offset == 0 else f"{letters}@{offset}"
