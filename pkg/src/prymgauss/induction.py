"""Mechanical verification of the genus-induction step (g >= 13).

For the parameter family a_{i,1} = i*a (a != 0, 1), a_{i,2} = i, the
surjectivity induction reduces to the invertibility of one 5x5 block of the
Gaussian-map matrix at the projection node P_r (r = k for even genus,
r = k+1 for odd, k = floor(g/2)).  Its rows are

    nu_{ij,1}(a_{r,1}),  nu'_{ij,1}(a_{r,1}),
    nu_{ij,2}(a_{r,2}),  nu'_{ij,2}(a_{r,2}),  tau_{ij}(P_r)

and its columns are five selected pairs (i, j):

    even genus 2k:   (1,k)   (2,k)   (k,g-2)   (k,g-1)   (k-1,k+1)
    odd genus 2k+1:  (2,k+1) (3,k+1) (k+1,g-2) (k+1,g-1) (k-1,k+2)

Both nu rows of the last column vanish (its indices avoid r), so
det5 = +/- tau * det4, where det4 is the upper-left 4x4 block.  det5 != 0 is
the authoritative verdict.  Two diagnostics accompany it:

* `check_scaled_matrix` asks whether the evaluated 4x4 block equals the
  built-in integer reference matrix up to nonzero row and column scalings
  (a rank-1 scaling test, equivalent to replaying the hand simplification
  without re-deriving every division step);
* `check_tau_closed_form` compares tau_{..}(P_r) against its closed form

    even:  -2 k (k+1) a^(g-2) / A2 * prod_{l != k-1,k,k+1} (k-l)^2
    odd:   -4 (k+1)(k+2) a^(g-2) / A2 * prod_{l != k-1,k+1,k+2} (k+1-l)^2

  (l runs over 1..g-1; A2 = (g-1)!).  The signs above are the ones produced
  by the torsion order used throughout this package (j-derivative on
  component 1 first); the even-parity value is often quoted with the
  opposite sign, which belongs to the swapped order, so the report carries
  a separate `tau_sign_matches_display` diagnostic for it.

Diagnostic failures are reported loudly but never override det5.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .curves import PrymBinaryCurve, build_curve, projection_node_index
from .exact import RationalLike, format_rational, parse_rational
from .gaussmap import nu_wronskian, tau_interior

# Fallback family parameters for retrying an inconclusive diagnostic.
_DIAGNOSTIC_FALLBACKS = (Fraction(5), Fraction(-3), Fraction(9, 2))


def family_curve(genus: int, a: RationalLike) -> PrymBinaryCurve:
    """The induction family: a_{i,1} = i*a, a_{i,2} = i, paper convention."""
    a = parse_rational(a)
    if a in (0, 1):
        raise ValueError("family parameter a must avoid 0 and 1")
    if genus < 13:
        raise ValueError(f"the induction step starts at genus 13, got {genus}")
    a1 = [i * a for i in range(1, genus)]
    a2 = [Fraction(i) for i in range(1, genus)]
    return build_curve(genus, a1, a2, "paper")


def selected_pairs(genus: int) -> tuple[tuple[int, int], ...]:
    """The five column pairs of the induction submatrix."""
    k = genus // 2
    if genus % 2 == 0:
        return ((1, k), (2, k), (k, genus - 2), (k, genus - 1), (k - 1, k + 1))
    return ((2, k + 1), (3, k + 1), (k + 1, genus - 2), (k + 1, genus - 1), (k - 1, k + 2))


@dataclass(frozen=True)
class InductionSubmatrix:
    genus: int
    a: Fraction
    parity: str                     # "even" | "odd"
    node_index: int                 # r
    columns: tuple[tuple[int, int], ...]
    entries: tuple[tuple[Fraction, ...], ...]   # 5 rows x 5 columns


def build_induction_submatrix(genus: int, a: RationalLike,
                              curve: PrymBinaryCurve | None = None) -> InductionSubmatrix:
    """Assemble the 5x5 block from the Gaussian-map primitives."""
    a = parse_rational(a)
    if curve is None:
        curve = family_curve(genus, a)
    r = projection_node_index(genus)
    pairs = selected_pairs(genus)
    pt1 = curve.node_parameter(1, r)
    pt2 = curve.node_parameter(2, r)
    cols = []
    for (i, j) in pairs:
        nu1 = nu_wronskian(curve, i, j, 1)
        nu2 = nu_wronskian(curve, i, j, 2)
        cols.append((nu1(pt1), nu1.derivative()(pt1),
                     nu2(pt2), nu2.derivative()(pt2),
                     tau_interior(curve, i, j, r)))
    entries = tuple(tuple(cols[q][p] for q in range(5)) for p in range(5))
    return InductionSubmatrix(genus=genus, a=a,
                              parity="even" if genus % 2 == 0 else "odd",
                              node_index=r, columns=pairs, entries=entries)


def _det_exact(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Determinant of a small rational matrix (fraction-free on cleared ints)."""
    n = len(rows)
    scale = Fraction(1)
    work: list[list[int]] = []
    for row in rows:
        den = lcm(*(x.denominator for x in row))
        work.append([x.numerator * (den // x.denominator) for x in row])
        scale *= den
    sign = 1
    prev = 1
    for c in range(n):
        pivot = next((r for r in range(c, n) if work[r][c]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            work[c], work[pivot] = work[pivot], work[c]
            sign = -sign
        pv = work[c][c]
        for r in range(c + 1, n):
            f = work[r][c]
            for cc in range(c, n):
                work[r][cc] = (work[r][cc] * pv - f * work[c][cc]) // prev
        prev = pv
    return Fraction(sign * work[n - 1][n - 1]) / scale


def even_reference_matrix(k: int) -> tuple[tuple[int, ...], ...]:
    """Integer reference for the simplified 4x4 block, even genus 2k."""
    return (
        (-k * (k - 2), -k * (k - 1), -2 * (k - 1) ** 2, -(2 * k - 1) * (k - 2)),
        ((k - 2) ** 2, 2 * (k - 1) ** 2, -2 * (k - 1) ** 3, -(2 * k - 1) * (k - 2) ** 2),
        (-k * (k - 2), -k * (k - 1), 2 * (k - 1) ** 2, (2 * k - 1) * (k - 2)),
        ((k - 2) ** 2, 2 * (k - 1) ** 2, 2 * (k - 1) ** 3, (2 * k - 1) * (k - 2) ** 2),
    )


def odd_reference_matrix(k: int) -> tuple[tuple[int, ...], ...]:
    """Integer reference for the simplified 4x4 block, odd genus 2k+1."""
    return (
        (-(k + 1) * (k - 1), -(k + 1) * (k - 2), -(k - 2), -(k - 1)),
        (-(k * k - 2 * k - 1), -(k * k - 4 * k - 2), -(2 * k - 2), -(2 * k - 1)),
        ((k + 1) * (k - 1), (k + 1) * (k - 2), -(k - 2), -(k - 1)),
        ((k * k - 2 * k - 1), (k * k - 4 * k - 2), -(2 * k - 2), -(2 * k - 1)),
    )


def reference_matrix(genus: int) -> tuple[tuple[int, ...], ...]:
    k = genus // 2
    return even_reference_matrix(k) if genus % 2 == 0 else odd_reference_matrix(k)


def _scaling_match(computed: Sequence[Sequence[Fraction]],
                   target: Sequence[Sequence[int]]) -> bool | None:
    """Do nonzero row/column scalars exist with computed * r_p * c_q == target?

    Scalars are solved from the first row and column (gauge r_0 = 1) and
    verified everywhere.  A zero computed entry against a nonzero target is
    an immediate False; an unsolvable gauge yields None (inconclusive).
    """
    n = len(target)
    for p in range(n):
        for q in range(n):
            if computed[p][q] == 0 and target[p][q] != 0:
                return False
            if computed[p][q] != 0 and target[p][q] == 0:
                return False
    try:
        col_scale = [Fraction(target[0][q]) / computed[0][q] for q in range(n)]
        row_scale = [Fraction(1)] + [
            Fraction(target[p][0]) / (computed[p][0] * col_scale[0]) for p in range(1, n)]
    except ZeroDivisionError:
        return None
    if any(s == 0 for s in col_scale) or any(s == 0 for s in row_scale):
        return None
    for p in range(n):
        for q in range(n):
            if computed[p][q] * row_scale[p] * col_scale[q] != target[p][q]:
                return False
    return True


def check_scaled_matrix(genus: int, a: RationalLike,
                        submatrix: InductionSubmatrix | None = None) -> bool | None:
    """Diagnostic: is the evaluated 4x4 block a row/column rescaling of the
    integer reference matrix?  Never overrides the det5 verdict."""
    if submatrix is None:
        submatrix = build_induction_submatrix(genus, a)
    computed = [row[:4] for row in submatrix.entries[:4]]
    return _scaling_match(computed, reference_matrix(genus))


def tau_closed_form(genus: int, a: RationalLike) -> Fraction:
    """Closed form of tau at the projection node for the family parameters,
    in the torsion order used by this package."""
    a = parse_rational(a)
    k = genus // 2
    a2_product = Fraction(1)
    for i in range(1, genus):
        a2_product *= i
    if genus % 2 == 0:
        excluded = (k - 1, k, k + 1)
        center = k
        lead = Fraction(-2 * k * (k + 1))
    else:
        excluded = (k - 1, k + 1, k + 2)
        center = k + 1
        lead = Fraction(-4 * (k + 1) * (k + 2))
    prod = Fraction(1)
    for l in range(1, genus):
        if l not in excluded:
            prod *= (center - l) ** 2
    return lead * a ** (genus - 2) / a2_product * prod


def check_tau_closed_form(genus: int, a: RationalLike,
                          curve: PrymBinaryCurve | None = None) -> bool:
    """Exact comparison of tau at the projection node with its closed form,
    plus the nonvanishing assertion."""
    a = parse_rational(a)
    if curve is None:
        curve = family_curve(genus, a)
    r = projection_node_index(genus)
    pair = selected_pairs(genus)[4]
    value = tau_interior(curve, pair[0], pair[1], r)
    return value != 0 and value == tau_closed_form(genus, a)


@dataclass(frozen=True)
class InductionReport:
    genus: int
    parity: str
    a: Fraction
    node_index: int
    selected_columns: tuple[tuple[int, int], ...]
    det5: Fraction
    det5_nonzero: bool
    scaled4x4_matches: bool | None
    tau_closed_form_matches: bool
    tau_sign_matches_display: bool

    @property
    def ok(self) -> bool:
        """Authoritative verdict only; diagnostics never override det5."""
        return self.det5_nonzero and self.tau_closed_form_matches

    def to_json_dict(self) -> dict:
        return {
            "genus": self.genus,
            "parity": self.parity,
            "a": format_rational(self.a),
            "node_index": self.node_index,
            "selected_columns": [list(p) for p in self.selected_columns],
            "det5": format_rational(self.det5),
            "det5_nonzero": self.det5_nonzero,
            "scaled4x4_matches": self.scaled4x4_matches,
            "tau_closed_form_matches": self.tau_closed_form_matches,
            "tau_sign_matches_display": self.tau_sign_matches_display,
        }


def verify_det5(genus: int, a: RationalLike) -> InductionReport:
    """Compute det5 exactly and run both diagnostics.

    An inconclusive scaling diagnostic is retried with fallback family
    parameters; the det5 verdict always refers to the requested (genus, a).
    """
    a = parse_rational(a)
    curve = family_curve(genus, a)
    sub = build_induction_submatrix(genus, a, curve=curve)
    det5 = _det_exact(sub.entries)
    scaled = check_scaled_matrix(genus, a, submatrix=sub)
    if scaled is None:
        for fallback in _DIAGNOSTIC_FALLBACKS:
            if fallback == a:
                continue
            scaled = check_scaled_matrix(genus, fallback)
            if scaled is not None:
                break
    tau_ok = check_tau_closed_form(genus, a, curve=curve)
    pair = sub.columns[4]
    value = tau_interior(curve, pair[0], pair[1], sub.node_index)
    # Display convention: the even-parity closed form is usually quoted for
    # the swapped torsion order, i.e. with the opposite sign.
    displayed = -tau_closed_form(genus, a) if genus % 2 == 0 else tau_closed_form(genus, a)
    return InductionReport(
        genus=genus, parity=sub.parity, a=a, node_index=sub.node_index,
        selected_columns=sub.columns, det5=det5, det5_nonzero=det5 != 0,
        scaled4x4_matches=scaled, tau_closed_form_matches=tau_ok,
        tau_sign_matches_display=(value == displayed),
    )


def sweep(g_min: int, g_max: int, a_values: Sequence[RationalLike]) -> list[InductionReport]:
    """One report per (genus, a), ordered by (genus, a)."""
    values = sorted({parse_rational(a) for a in a_values})
    reports = []
    for genus in range(g_min, g_max + 1):
        for a in values:
            reports.append(verify_det5(genus, a))
    return reports
