"""Divisor-class arithmetic on the genus-12 moduli of Prym pairs.

Classes live in the 4-dimensional rational vector space spanned by the
ordered basis (lambda, delta'_0, delta''_0, delta_0^ram): the Hodge class
and the three boundary classes of the partial compactification by 1-nodal
irreducible curves.  Loci of codimension >= 2 are ignored throughout, which
is why four coefficients suffice.

Degree-2 classes upstairs (on the universal family) are formal combinations
of omega^2, omega*P, P^2 and the nodal cycle [Z], where omega = c1 of the
relative dualizing sheaf and P = c1 of the 2-torsion (Prym) bundle.  The
pushforward to the base is the linear extension of

    omega^2   ->  12*lambda - psi[Z]
    omega*P   ->  0
    P^2       ->  -delta_0^ram / 2
    [Z]       ->  delta'_0 + delta''_0 + 2*delta_0^ram

`grr_c1(a, b, with_IZ)` implements the Riemann-Roch degree-1 part for the
pushforward of L = a*omega + b*P (optionally twisted by the ideal of nodes):
push(L^2/2 - L*omega/2 + (omega^2 + [Z])/12 - (with_IZ ? [Z] : 0)).

The genus-12 degeneracy locus of the Gaussian map is a divisor; both source
and target bundles have rank 55, so its class is
55 * c1(target) - 55 * c1(source), with c1(source) = 10 * c1(F_1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import RationalLike, format_rational, parse_rational

# Genus-12 constants: h^0 = 11 sections, both sides of the map have rank 55.
SOURCE_BUNDLE_RANK = 11
MAP_RANK = 55

BASIS = ("lambda", "delta0_prime", "delta0_doubleprime", "delta0_ram")


@dataclass(frozen=True)
class DivisorClass:
    """Exact coefficients over (lambda, delta'_0, delta''_0, delta_0^ram)."""
    lam: Fraction = Fraction(0)
    d0p: Fraction = Fraction(0)
    d0pp: Fraction = Fraction(0)
    d0ram: Fraction = Fraction(0)

    @classmethod
    def of(cls, lam: RationalLike = 0, d0p: RationalLike = 0,
           d0pp: RationalLike = 0, d0ram: RationalLike = 0) -> "DivisorClass":
        return cls(parse_rational(lam), parse_rational(d0p),
                   parse_rational(d0pp), parse_rational(d0ram))

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.lam + other.lam, self.d0p + other.d0p,
                            self.d0pp + other.d0pp, self.d0ram + other.d0ram)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + (-1) * other

    def __mul__(self, scalar) -> "DivisorClass":
        s = parse_rational(scalar)
        return DivisorClass(s * self.lam, s * self.d0p, s * self.d0pp, s * self.d0ram)

    __rmul__ = __mul__

    def coefficients(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.lam, self.d0p, self.d0pp, self.d0ram)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coefficients())

    def is_effective(self) -> bool:
        """Componentwise nonnegativity over the tracked basis."""
        return all(c >= 0 for c in self.coefficients())

    def interior_restriction(self) -> Fraction:
        """Coefficient of lambda: the boundary classes restrict to zero on
        the open moduli."""
        return self.lam

    def to_json_dict(self) -> dict:
        return dict(zip(BASIS, (format_rational(c) for c in self.coefficients())))

    def __str__(self) -> str:
        names = ("L", "d'", "d''", "d^ram")
        parts = [f"{format_rational(c)}*{n}" for c, n in zip(self.coefficients(), names) if c != 0]
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class SurfaceClassExpr:
    """Formal degree-2 class upstairs: coefficients of omega^2, omega*P,
    P^2 and the nodal cycle [Z]."""
    omega2: Fraction = Fraction(0)
    omegaP: Fraction = Fraction(0)
    P2: Fraction = Fraction(0)
    Z: Fraction = Fraction(0)

    @classmethod
    def of(cls, omega2: RationalLike = 0, omegaP: RationalLike = 0,
           P2: RationalLike = 0, Z: RationalLike = 0) -> "SurfaceClassExpr":
        return cls(parse_rational(omega2), parse_rational(omegaP),
                   parse_rational(P2), parse_rational(Z))

    def __add__(self, other: "SurfaceClassExpr") -> "SurfaceClassExpr":
        return SurfaceClassExpr(self.omega2 + other.omega2, self.omegaP + other.omegaP,
                                self.P2 + other.P2, self.Z + other.Z)

    def __sub__(self, other: "SurfaceClassExpr") -> "SurfaceClassExpr":
        return self + (-1) * other

    def __mul__(self, scalar) -> "SurfaceClassExpr":
        s = parse_rational(scalar)
        return SurfaceClassExpr(s * self.omega2, s * self.omegaP, s * self.P2, s * self.Z)

    __rmul__ = __mul__


def square_of_line_bundle(a_omega: RationalLike, b_P: RationalLike) -> SurfaceClassExpr:
    """(a*omega + b*P)^2 expanded in the degree-2 monomials."""
    a = parse_rational(a_omega)
    b = parse_rational(b_P)
    return SurfaceClassExpr.of(a * a, 2 * a * b, b * b, 0)


def pushforward(expr: SurfaceClassExpr) -> DivisorClass:
    """Linear extension of the four pushforward rules."""
    z_push = DivisorClass.of(0, 1, 1, 2)
    omega2_push = DivisorClass.of(12) - z_push
    p2_push = DivisorClass.of(0, 0, 0, Fraction(-1, 2))
    return (expr.omega2 * omega2_push
            + expr.P2 * p2_push
            + expr.Z * z_push)


def grr_c1(a_omega: int, b_P: int, with_IZ: bool) -> DivisorClass:
    """Degree-1 part of the Riemann-Roch pushforward for L = a*omega + b*P,
    optionally twisted by the ideal sheaf of the nodal locus."""
    a = parse_rational(a_omega)
    b = parse_rational(b_P)
    l_squared = square_of_line_bundle(a, b)
    l_omega = SurfaceClassExpr.of(a, b, 0, 0)          # L * omega
    z = SurfaceClassExpr.of(0, 0, 0, 1)
    omega2 = SurfaceClassExpr.of(1, 0, 0, 0)
    expr = (Fraction(1, 2) * l_squared
            - Fraction(1, 2) * l_omega
            + Fraction(1, 12) * (omega2 + z))
    if with_IZ:
        expr = expr - z
    return pushforward(expr)


def hodge_c1(i: int) -> DivisorClass:
    """c1 of the pushforward of (omega tensor P)^i:
    i(i-1)/2 * (12L - d' - d'' - 2d^ram) + L - i^2/4 * d^ram."""
    weight = Fraction(i * (i - 1), 2)
    base = DivisorClass.of(12, -1, -1, -2)
    return weight * base + DivisorClass.of(1) - DivisorClass.of(0, 0, 0, Fraction(i * i, 4))


def source_c1() -> DivisorClass:
    """c1 of the exterior square of the rank-11 section bundle:
    (rank - 1) * c1(F_1) = 10*lambda - 5/2 * delta_0^ram."""
    return (SOURCE_BUNDLE_RANK - 1) * hodge_c1(1)


def degeneracy_class() -> DivisorClass:
    """Class of the genus-12 degeneracy divisor:
    rank * c1(target) - rank * c1(source), both ranks 55."""
    target = grr_c1(3, 2, True)
    return MAP_RANK * target - MAP_RANK * source_c1()


# Canonical class of the partial compactification and the Koszul divisor
# class used in the effectivity comparison.
CANONICAL_CLASS = DivisorClass.of(13, -2, -2, -3)
KOSZUL_DIVISOR = 56 * DivisorClass.of(Fraction(13, 2), -1, -1, Fraction(-3, 2))


@dataclass(frozen=True)
class KodairaReport:
    canonical: DivisorClass
    koszul: DivisorClass
    residual: DivisorClass          # canonical - koszul/28
    residual_effective: bool

    def to_json_dict(self) -> dict:
        return {
            "canonical": self.canonical.to_json_dict(),
            "koszul_divisor": self.koszul.to_json_dict(),
            "residual": self.residual.to_json_dict(),
            "residual_effective": self.residual_effective,
        }


def kodaira_report() -> KodairaReport:
    """canonical - (1/28) * Koszul divisor, and its effectivity verdict."""
    residual = CANONICAL_CLASS - Fraction(1, 28) * KOSZUL_DIVISOR
    return KodairaReport(canonical=CANONICAL_CLASS, koszul=KOSZUL_DIVISOR,
                         residual=residual, residual_effective=residual.is_effective())


def classes_report() -> dict:
    """All class computations keyed by formula name (CLI payload).

    The degeneracy entry tracks only the four basis coefficients; further
    boundary coefficients of its closure are undetermined here.
    """
    deg = degeneracy_class()
    return {
        "hodge_c1_i1": hodge_c1(1).to_json_dict(),
        "source_exterior_square_c1": source_c1().to_json_dict(),
        "grr_target_c1": grr_c1(3, 2, True).to_json_dict(),
        "degeneracy_class": {
            **deg.to_json_dict(),
            "interior_lambda_coefficient": format_rational(deg.interior_restriction()),
            "note": "coefficients beyond the four tracked boundary classes are undetermined",
        },
        "kodaira": kodaira_report().to_json_dict(),
    }
