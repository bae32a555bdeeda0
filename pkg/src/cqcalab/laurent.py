"""Exact arithmetic on Laurent polynomials over GF(2).

A polynomial is stored as a Python-int bitset together with the exponent
of its lowest-order term: bit k of ``mask`` is the coefficient of
``u**(min_exp + k)``.  Addition is XOR, multiplication is a carry-less
convolution, so every operation is exact.

Canonical form: the zero polynomial is ``(mask=0, min_exp=0)``; any
nonzero polynomial has bit 0 of the mask set (the offset absorbs trailing
zeros), so equal polynomials compare equal structurally.
"""

from __future__ import annotations

import dataclasses
from typing import Iterator


def _clmul(a: int, b: int) -> int:
    """Carry-less product of two bitset-encoded polynomials."""
    if a.bit_count() > b.bit_count():
        a, b = b, a
    acc = 0
    while a:
        low = a & -a
        acc ^= b * low
        a ^= low
    return acc


def _divmod_bits(a: int, b: int) -> tuple[int, int]:
    """Divide bitset polynomial a by nonzero b, returning (quotient, remainder)."""
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    q = 0
    db = b.bit_length() - 1
    while a.bit_length() - 1 >= db and a:
        shift = (a.bit_length() - 1) - db
        q ^= 1 << shift
        a ^= b << shift
    return q, a


def _gcd_bits(a: int, b: int) -> int:
    while b:
        a, b = b, _divmod_bits(a, b)[1]
    return a


@dataclasses.dataclass(init=False, frozen=True)
class LaurentPoly:
    """An F2-coefficient Laurent polynomial in the formal variable u."""

    mask: int
    min_exp: int

    def __init__(self, mask: int = 0, min_exp: int = 0):
        if mask < 0:
            raise ValueError("coefficient mask must be nonnegative")
        if mask:
            shift = (mask & -mask).bit_length() - 1
            mask >>= shift
            min_exp += shift
        else:
            min_exp = 0
        object.__setattr__(self, "mask", mask)
        object.__setattr__(self, "min_exp", min_exp)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls(0, 0)

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls(1, 0)

    @classmethod
    def monomial(cls, exponent: int) -> "LaurentPoly":
        """The single term u**exponent."""
        return cls(1, exponent)

    @classmethod
    def from_exponents(cls, exponents) -> "LaurentPoly":
        """Sum of u**e over the given exponents; repeats cancel mod 2."""
        exponents = list(exponents)
        if not exponents:
            return cls.zero()
        lo = min(exponents)
        mask = 0
        for e in exponents:
            mask ^= 1 << (e - lo)
        return cls(mask, lo)

    # -- inspection ---------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.mask == 0

    @property
    def max_exp(self) -> int:
        if self.is_zero:
            raise ValueError("the zero polynomial has no maximal exponent")
        return self.min_exp + self.mask.bit_length() - 1

    def degree_span(self) -> tuple[int, int] | None:
        """(lowest exponent, highest exponent), or None for the zero polynomial."""
        if self.is_zero:
            return None
        return self.min_exp, self.max_exp

    def dg(self) -> int | None:
        """Highest exponent with a nonzero coefficient; None for zero.

        Callers must branch on None explicitly; it never compares like a
        number.
        """
        return None if self.is_zero else self.max_exp

    def coefficient(self, exponent: int) -> int:
        k = exponent - self.min_exp
        if k < 0:
            return 0
        return (self.mask >> k) & 1

    def exponents(self) -> Iterator[int]:
        """Exponents with coefficient 1, in increasing order."""
        mask, base = self.mask, self.min_exp
        while mask:
            low = mask & -mask
            yield base + low.bit_length() - 1
            mask ^= low

    def __bool__(self) -> bool:
        return not self.is_zero

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        lo = min(self.min_exp, other.min_exp)
        mask = (self.mask << (self.min_exp - lo)) ^ (other.mask << (other.min_exp - lo))
        return LaurentPoly(mask, lo)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if self.is_zero or other.is_zero:
            return LaurentPoly.zero()
        return LaurentPoly(_clmul(self.mask, other.mask), self.min_exp + other.min_exp)

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative powers are not defined in the polynomial ring")
        result = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shifted(self, k: int) -> "LaurentPoly":
        """Multiply by the unit u**k."""
        if self.is_zero:
            return self
        return LaurentPoly(self.mask, self.min_exp + k)

    def __divmod__(self, other: "LaurentPoly") -> tuple["LaurentPoly", "LaurentPoly"]:
        """Division with remainder in the Laurent ring (divisor nonzero)."""
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        q, r = _divmod_bits(self.mask, other.mask)
        return (
            LaurentPoly(q, self.min_exp - other.min_exp),
            LaurentPoly(r, self.min_exp),
        )

    def divides(self, other: "LaurentPoly") -> bool:
        """True iff self divides other exactly (up to units)."""
        if self.is_zero:
            return other.is_zero
        return divmod(other, self)[1].is_zero

    def unit_normalized(self) -> "LaurentPoly":
        """The associate with min_exp = 0 (units are exactly the monomials u**k)."""
        return LaurentPoly(self.mask, 0)

    # -- structure ----------------------------------------------------

    def is_reflection_symmetric(self, center: int = 0) -> bool:
        """True iff the coefficients are mirror-symmetric about ``center``.

        The zero polynomial is symmetric about every center.
        """
        if self.is_zero:
            return True
        lo, hi = self.min_exp, self.max_exp
        if lo + hi != 2 * center:
            return False
        width = self.mask.bit_length()
        reflected = int(format(self.mask, "b")[::-1], 2) if width else 0
        return reflected == self.mask

    def __str__(self) -> str:
        return render_poly(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({render_poly(self)!r})"


def gcd(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Greatest common divisor, unit-normalized to min_exp = 0.

    Units u**k are quotiented out, so the result is one fixed
    representative per associate class.  Rejects the (0, 0) input.
    """
    if p.is_zero and q.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    return LaurentPoly(_gcd_bits(p.mask, q.mask), 0)


def coefficient_dot(p: LaurentPoly, q: LaurentPoly) -> int:
    """Parity of the coefficientwise scalar product (exponents aligned)."""
    if p.is_zero or q.is_zero:
        return 0
    lo = min(p.min_exp, q.min_exp)
    overlap = (p.mask << (p.min_exp - lo)) & (q.mask << (q.min_exp - lo))
    return overlap.bit_count() & 1


def render_poly(p: LaurentPoly) -> str:
    """Render in increasing exponent order, e.g. "u^-1 + 1 + u"; "0" for zero."""
    if p.is_zero:
        return "0"
    parts = []
    for e in p.exponents():
        if e == 0:
            parts.append("1")
        elif e == 1:
            parts.append("u")
        else:
            parts.append(f"u^{e}")
    return " + ".join(parts)


class PolySyntaxError(ValueError):
    """Malformed polynomial text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def parse_poly(text: str) -> LaurentPoly:
    """Parse "0" or a "+"-separated list of terms "1", "u", "u^<int>".

    Whitespace is ignored.  Repeated identical terms cancel mod 2.
    """
    stripped = [(i, c) for i, c in enumerate(text) if not c.isspace()]
    if not stripped:
        raise PolySyntaxError("empty polynomial", 0)
    exponents: list[int] = []
    pos = 0

    def current() -> str | None:
        return stripped[pos][1] if pos < len(stripped) else None

    def where() -> int:
        return stripped[pos][0] if pos < len(stripped) else len(text)

    def parse_term() -> int:
        nonlocal pos
        c = current()
        if c == "1":
            pos += 1
            return 0
        if c != "u":
            raise PolySyntaxError(f"expected a term, found {c!r}", where())
        pos += 1
        if current() != "^":
            return 1
        pos += 1
        digits = ""
        if current() in ("+", "-"):
            digits += current()
            pos += 1
        if current() is None or not current().isdigit():
            raise PolySyntaxError("expected an integer exponent", where())
        while current() is not None and current().isdigit():
            digits += current()
            pos += 1
        return int(digits)

    if current() == "0":
        pos += 1
        if pos != len(stripped):
            raise PolySyntaxError("unexpected input after '0'", where())
        return LaurentPoly.zero()

    exponents.append(parse_term())
    while pos < len(stripped):
        if current() != "+":
            raise PolySyntaxError(f"expected '+', found {current()!r}", where())
        pos += 1
        exponents.append(parse_term())
    return LaurentPoly.from_exponents(exponents)
