"""Exact scalar and polynomial arithmetic.

Scalars are arbitrary-precision rationals (`fractions.Fraction`), which are
always stored in canonical form: positive denominator, gcd(|num|, den) = 1,
zero as 0/1.  Polynomials are dense coefficient sequences over those
rationals, ascending degree, with no trailing zero coefficient.  Everything
here is immutable and side-effect free, so values can be shared freely
between threads.

A small prime-field layer supports modular rank bounds: residues are plain
ints, the modulus lives on the `PrimeField` context.  The module ships a
fixed list of word-sized primes (the 25 smallest primes above 2^30) so that
modular runs are reproducible; callers select an offset into the list.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction

RationalLike = Union[Fraction, int, str]

# Accepted rational literals: "p", "p/q", optional leading sign.  No floats.
_RATIONAL_RE = re.compile(r"^[+\-−]?\d+(/\d+)?$")


def parse_rational(value: RationalLike) -> Fraction:
    """Parse a rational from an int, Fraction, or a "p/q" / "p" literal.

    Unicode minus (U+2212) is accepted alongside the ASCII hyphen.  Anything
    else — floats in particular — is rejected.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip().replace("−", "-")
        if not _RATIONAL_RE.match(text):
            raise ValueError(f"not a rational literal: {value!r}")
        num, _, den = text.partition("/")
        if den:
            if int(den) == 0:
                raise ValueError(f"zero denominator in rational literal: {value!r}")
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    raise ValueError(f"not a rational value: {value!r} (floats are not accepted)")


def format_rational(x: Fraction) -> str:
    """Render a rational as "p" or "p/q" (canonical form, ASCII minus)."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


# The 25 smallest primes above 2^30.  All lie below 2^31, so a product of a
# residue and an elimination factor fits in a signed 64-bit accumulator.
FIELD_PRIMES: tuple[int, ...] = (
    1073741827, 1073741831, 1073741833, 1073741839, 1073741843,
    1073741857, 1073741891, 1073741909, 1073741939, 1073741953,
    1073741969, 1073741971, 1073741987, 1073741993, 1073742037,
    1073742053, 1073742073, 1073742077, 1073742091, 1073742113,
    1073742169, 1073742203, 1073742209, 1073742223, 1073742233,
)


class BadPrimeError(ValueError):
    """A denominator in the input is divisible by the chosen prime."""

    def __init__(self, prime: int):
        super().__init__(f"prime {prime} divides a denominator; retry with another prime")
        self.prime = prime


class PrimeField:
    """Arithmetic context for Z/pZ with p prime and > 2^30.

    Elements are canonical residues 0 <= r < p, stored as plain ints.
    """

    def __init__(self, p: int):
        if p <= 2**30:
            raise ValueError(f"modulus {p} too small; field primes must exceed 2^30")
        self.p = p

    def reduce(self, x: RationalLike) -> int:
        """Image of a rational in the field; BadPrimeError if p | denominator."""
        x = parse_rational(x)
        den = x.denominator % self.p
        if den == 0:
            raise BadPrimeError(self.p)
        return (x.numerator % self.p) * pow(den, -1, self.p) % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("zero is not invertible")
        return pow(a, -1, self.p)

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


def _lcm_of_denominators(coeffs: Iterable[Fraction]) -> int:
    den = 1
    for c in coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return den


class Poly:
    """Dense univariate polynomial over the rationals.

    Coefficients are stored ascending by degree; the zero polynomial is the
    empty tuple, otherwise the last coefficient is nonzero.  Instances are
    immutable.  Degrees in this package stay small (<= 2g-4), so dense
    storage is the right trade.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [parse_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "Poly":
        return cls(())

    @classmethod
    def constant(cls, c: RationalLike) -> "Poly":
        return cls((c,))

    @classmethod
    def identity(cls) -> "Poly":
        """The polynomial t."""
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots: Sequence[RationalLike]) -> "Poly":
        """Monic polynomial with exactly the given multiset of roots."""
        coeffs = [Fraction(1)]
        for r in roots:
            r = parse_rational(r)
            nxt = [Fraction(0)] * (len(coeffs) + 1)
            for i, c in enumerate(coeffs):
                nxt[i + 1] += c
                nxt[i] -= r * c
            coeffs = nxt
        return cls(coeffs)

    # -- structure ----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, d: int) -> Fraction:
        if 0 <= d < len(self.coeffs):
            return self.coeffs[d]
        return Fraction(0)

    def padded(self, length: int) -> tuple[Fraction, ...]:
        """Coefficients of degrees 0..length-1; degree must be < length."""
        if len(self.coeffs) > length:
            raise ValueError(f"degree {self.degree} exceeds padding length {length}")
        return self.coeffs + (Fraction(0),) * (length - len(self.coeffs))

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Poly):
            return self._mul_poly(other)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c: RationalLike) -> "Poly":
        c = parse_rational(c)
        if c == 0:
            return Poly(())
        return Poly(tuple(c * x for x in self.coeffs))

    def _mul_poly(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(())
        # Clear denominators and convolve over machine ints: much faster
        # than Fraction addition, and exact.
        da = _lcm_of_denominators(a)
        db = _lcm_of_denominators(b)
        ia = [c.numerator * (da // c.denominator) for c in a]
        ib = [c.numerator * (db // c.denominator) for c in b]
        out = [0] * (len(ia) + len(ib) - 1)
        for i, ai in enumerate(ia):
            if ai:
                for j, bj in enumerate(ib):
                    out[i + j] += ai * bj
        d = da * db
        return Poly(tuple(Fraction(n, d) for n in out))

    def derivative(self) -> "Poly":
        return Poly(tuple(i * c for i, c in enumerate(self.coeffs) if i > 0))

    def __call__(self, x: RationalLike) -> Fraction:
        x = parse_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def div_linear(self, root: RationalLike) -> "Poly":
        """Exact quotient by (t - root); synthetic division.

        Truncation is never silent: a nonzero remainder (root is not a root)
        raises ValueError.
        """
        root = parse_rational(root)
        if self.is_zero():
            return Poly(())
        quotient = [Fraction(0)] * (len(self.coeffs) - 1)
        acc = Fraction(0)
        for d in range(len(self.coeffs) - 1, 0, -1):
            acc = self.coeffs[d] + root * acc
            quotient[d - 1] = acc
        remainder = self.coeffs[0] + root * acc
        if remainder != 0:
            raise ValueError(f"{format_rational(root)} is not a root (remainder {format_rational(remainder)})")
        return Poly(quotient)

    # -- comparisons --------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Poly(0)"
        terms = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if d == 0:
                terms.append(format_rational(c))
            elif d == 1:
                terms.append(f"{format_rational(c)}*t")
            else:
                terms.append(f"{format_rational(c)}*t^{d}")
        return "Poly(" + " + ".join(terms) + ")"


def poly_derivative(p: Poly) -> Poly:
    """d p / d t, exactly."""
    return p.derivative()


def poly_from_roots(roots: Sequence[RationalLike]) -> Poly:
    """Monic polynomial with the given roots (empty product is 1)."""
    return Poly.from_roots(roots)


def poly_div_linear(p: Poly, root: RationalLike) -> Poly:
    """Exact quotient p / (t - root); ValueError if root is not a root of p."""
    return p.div_linear(root)
