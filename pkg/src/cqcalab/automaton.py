"""Symplectic cellular automaton matrices over the F2 Laurent ring.

A 2x2 matrix of Laurent polynomials describes a Clifford cellular
automaton up to phase: column 1 is the image of X = (1, 0), column 2 the
image of Z = (0, 1).  Validation enforces the three automorphism
conditions (monomial determinant of even shift, entries mirror-symmetric
about a common center, coprime columns), centers the matrix, and tags it
with its dynamical class read off the trace.
"""

from __future__ import annotations

import dataclasses
import random as _random

from .laurent import LaurentPoly, gcd, parse_poly, render_poly
from .phase_space import PhaseVector


class CqcaValidationError(ValueError):
    """A matrix violated one of the automaton conditions."""


class DetNotMonomial(CqcaValidationError):
    pass


class DetOddShift(CqcaValidationError):
    pass


class EntriesNotSymmetric(CqcaValidationError):
    def __init__(self, center: int):
        super().__init__(f"entries are not mirror-symmetric about site {center}")
        self.center = center


class ColumnsNotCoprime(CqcaValidationError):
    def __init__(self, column: int):
        super().__init__(f"entries of column {column} share a nontrivial divisor")
        self.column = column


class PureShift(CqcaValidationError):
    """The raw matrix is u**a times the identity, i.e. a bare lattice shift."""


@dataclasses.dataclass(frozen=True)
class Periodic:
    def __str__(self) -> str:
        return "Periodic"


@dataclasses.dataclass(frozen=True)
class Glider:
    speed: int

    def __str__(self) -> str:
        return f"Glider({self.speed})"


@dataclasses.dataclass(frozen=True)
class Fractal:
    def __str__(self) -> str:
        return "Fractal"


ClassTag = Periodic | Glider | Fractal


@dataclasses.dataclass(frozen=True)
class CqcaMatrix:
    """Raw, unvalidated 2x2 Laurent-polynomial matrix."""

    t11: LaurentPoly
    t12: LaurentPoly
    t21: LaurentPoly
    t22: LaurentPoly

    @classmethod
    def from_strings(cls, t11: str, t12: str, t21: str, t22: str) -> "CqcaMatrix":
        return cls(parse_poly(t11), parse_poly(t12), parse_poly(t21), parse_poly(t22))

    def det(self) -> LaurentPoly:
        return self.t11 * self.t22 + self.t12 * self.t21

    def trace(self) -> LaurentPoly:
        return self.t11 + self.t22

    def __matmul__(self, other: "CqcaMatrix") -> "CqcaMatrix":
        return CqcaMatrix(
            self.t11 * other.t11 + self.t12 * other.t21,
            self.t11 * other.t12 + self.t12 * other.t22,
            self.t21 * other.t11 + self.t22 * other.t21,
            self.t21 * other.t12 + self.t22 * other.t22,
        )

    def entries(self) -> tuple[LaurentPoly, LaurentPoly, LaurentPoly, LaurentPoly]:
        return self.t11, self.t12, self.t21, self.t22

    def max_entry_degree(self) -> int:
        """Largest |exponent| over all entries; the neighborhood radius."""
        radius = 0
        for p in self.entries():
            span = p.degree_span()
            if span is not None:
                radius = max(radius, abs(span[0]), abs(span[1]))
        return radius

    def apply(self, v: PhaseVector) -> PhaseVector:
        return PhaseVector(
            self.t11 * v.xi_plus + self.t12 * v.xi_minus,
            self.t21 * v.xi_plus + self.t22 * v.xi_minus,
        )

    def __str__(self) -> str:
        return "[[{}, {}], [{}, {}]]".format(*map(render_poly, self.entries()))


def center(m: CqcaMatrix, a: int) -> CqcaMatrix:
    """Multiply every entry by u**-a, undoing a shift by a sites."""
    return CqcaMatrix(*(p.shifted(-a) for p in m.entries()))


def classify(m: CqcaMatrix) -> ClassTag:
    """Read the dynamical class off the trace of a centered matrix.

    Constant trace: periodic.  Trace u**-n + u**n: gliders moving n sites
    per step.  Anything else: fractal space-time behavior.
    """
    tr = m.trace()
    if tr.is_zero or (tr.mask == 1 and tr.min_exp == 0):
        return Periodic()
    span = tr.degree_span()
    if span is not None and tr.mask.bit_count() == 2 and span[0] == -span[1]:
        return Glider(span[1])
    return Fractal()


@dataclasses.dataclass(frozen=True)
class ValidatedCqca:
    """A centered automaton matrix with its class tag."""

    matrix: CqcaMatrix
    class_tag: ClassTag

    def apply(self, v: PhaseVector) -> PhaseVector:
        return self.matrix.apply(v)

    def trace(self) -> LaurentPoly:
        return self.matrix.trace()

    def trace_degree(self) -> int:
        """dg of the trace polynomial; 0 for constant trace (including zero)."""
        span = self.matrix.trace().degree_span()
        return 0 if span is None else max(span[1], 0)

    def __matmul__(self, other: "ValidatedCqca") -> "ValidatedCqca":
        product = self.matrix @ other.matrix
        return ValidatedCqca(product, classify(product))

    def power(self, k: int) -> "ValidatedCqca":
        if k < 0:
            raise ValueError("negative powers are not supported; use inverse()")
        result = identity()
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def inverse(self) -> "ValidatedCqca":
        # det = 1 after centering, so the adjugate (over F2) is the inverse.
        m = self.matrix
        inv = CqcaMatrix(m.t22, m.t12, m.t21, m.t11)
        return ValidatedCqca(inv, classify(inv))

    def __str__(self) -> str:
        return f"{self.class_tag} {self.matrix}"


def validate(m: CqcaMatrix) -> ValidatedCqca:
    """Check the three automaton conditions, center, and classify.

    Raises DetNotMonomial, DetOddShift, EntriesNotSymmetric,
    ColumnsNotCoprime, or PureShift (a bare shift u**a with a != 0, which
    is rejected rather than silently centered away).
    """
    det = m.det()
    if det.is_zero or det.mask != 1:
        raise DetNotMonomial(f"determinant is {render_poly(det)}, not a single u^2a")
    if det.min_exp % 2:
        raise DetOddShift(f"determinant u^{det.min_exp} has odd shift")
    a = det.min_exp // 2
    for p in m.entries():
        if not p.is_reflection_symmetric(a):
            raise EntriesNotSymmetric(a)
    if gcd(m.t11, m.t21) != LaurentPoly.one():
        raise ColumnsNotCoprime(1)
    if gcd(m.t12, m.t22) != LaurentPoly.one():
        raise ColumnsNotCoprime(2)
    if (
        a != 0
        and m.t12.is_zero
        and m.t21.is_zero
        and m.t11 == m.t22 == LaurentPoly.monomial(a)
    ):
        raise PureShift(f"bare lattice shift by {a} sites")
    centered = center(m, a)
    return ValidatedCqca(centered, classify(centered))


def period(t: ValidatedCqca, cap: int) -> int | None:
    """Smallest p <= cap with t**p the identity, or None if there is none."""
    if cap < 1:
        raise ValueError("cap must be positive")
    ident = identity().matrix
    power = t.matrix
    for p in range(1, cap + 1):
        if power == ident:
            return p
        power = power @ t.matrix
    return None


# -- built-in matrices ------------------------------------------------


def glider() -> ValidatedCqca:
    """The standard glider automaton: X -> Z, Z -> Z x X x Z."""
    return validate(
        CqcaMatrix(
            LaurentPoly.zero(),
            LaurentPoly.one(),
            LaurentPoly.one(),
            LaurentPoly.from_exponents([-1, 1]),
        )
    )


def fractal() -> ValidatedCqca:
    """The standard fractal automaton with trace u^-1 + 1 + u."""
    return validate(
        CqcaMatrix(
            LaurentPoly.from_exponents([-1, 0, 1]),
            LaurentPoly.one(),
            LaurentPoly.one(),
            LaurentPoly.zero(),
        )
    )


def identity() -> ValidatedCqca:
    ident = CqcaMatrix(
        LaurentPoly.one(), LaurentPoly.zero(), LaurentPoly.zero(), LaurentPoly.one()
    )
    return ValidatedCqca(ident, Periodic())


def swap() -> ValidatedCqca:
    """Exchange X and Z everywhere (the Hadamard automaton)."""
    return validate(
        CqcaMatrix(
            LaurentPoly.zero(), LaurentPoly.one(), LaurentPoly.one(), LaurentPoly.zero()
        )
    )


def shear(p: LaurentPoly) -> ValidatedCqca:
    """Lower shear [[1, 0], [p, 1]]; p must be mirror-symmetric about 0."""
    return validate(
        CqcaMatrix(LaurentPoly.one(), LaurentPoly.zero(), p, LaurentPoly.one())
    )


def upper_shear(p: LaurentPoly) -> ValidatedCqca:
    """Upper shear [[1, p], [0, 1]]; p must be mirror-symmetric about 0."""
    return validate(
        CqcaMatrix(LaurentPoly.one(), p, LaurentPoly.zero(), LaurentPoly.one())
    )


def random_cqca(seed: int, word_length: int, max_shear_degree: int) -> ValidatedCqca:
    """Compose a deterministic random word of swaps and symmetric shears.

    Sampling generator words keeps every draw inside the automaton group,
    where naive random entries would almost never validate.
    """
    if word_length < 0:
        raise ValueError("word_length must be nonnegative")
    if max_shear_degree < 1:
        raise ValueError("max_shear_degree must be positive")
    rng = _random.Random(seed)
    result = identity()
    for _ in range(word_length):
        kind = rng.randrange(3)
        if kind == 0:
            factor = swap()
        else:
            p = _random_symmetric_poly(rng, max_shear_degree)
            factor = shear(p) if kind == 1 else upper_shear(p)
        result = result @ factor
    return result


def _random_symmetric_poly(rng: _random.Random, max_degree: int) -> LaurentPoly:
    exps = []
    if rng.randrange(2):
        exps.append(0)
    for k in range(1, max_degree + 1):
        if rng.randrange(2):
            exps += [-k, k]
    return LaurentPoly.from_exponents(exps)


# -- matrix files and names -------------------------------------------

_BUILTINS = {
    "glider": glider,
    "fractal": fractal,
    "identity": identity,
    "swap": swap,
}


def parse_matrix_file(text: str) -> CqcaMatrix:
    """Parse the line-oriented "key value" format with keys t11/t12/t21/t22."""
    values: dict[str, LaurentPoly] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, _, value = line.partition(" ")
        if key not in ("t11", "t12", "t21", "t22"):
            raise ValueError(f"line {lineno}: unknown key {key!r}")
        if key in values:
            raise ValueError(f"line {lineno}: duplicate key {key!r}")
        values[key] = parse_poly(value)
    missing = [k for k in ("t11", "t12", "t21", "t22") if k not in values]
    if missing:
        raise ValueError(f"missing keys: {', '.join(missing)}")
    return CqcaMatrix(values["t11"], values["t12"], values["t21"], values["t22"])


def resolve_matrix(source: str) -> ValidatedCqca:
    """Resolve a built-in name, "shear:<poly>", or a matrix file path."""
    if source in _BUILTINS:
        return _BUILTINS[source]()
    if source.startswith("shear:"):
        return shear(parse_poly(source[len("shear:"):]))
    with open(source, encoding="utf-8") as handle:
        return validate(parse_matrix_file(handle.read()))
