"""Prym-canonical binary curves from explicit rational parameters.

A binary curve of genus g is a union of two rational components meeting
transversally at g+1 nodes.  Each component is embedded in P^(g-2) by g-1
coordinate polynomials alpha[i] of degree <= g-1 in the affine chart t,
built from the parameter rows a1, a2 (one row per component, entries
pairwise distinct and nonzero within a row).  With k = floor(g/2),
M(t) = prod_r (t - a_r) and A2 = prod a2_r, the coordinates are

    alpha_i(t) = M(t) * (delta_i * t - c_i) / (t - a_i),

where delta_i = 1, c_i = 0 for i <= k, and for i > k:

    component 2 (both conventions):  delta_i = 0, c_i =  a2_i / A2
    component 1, convention "paper": delta_i = 0, c_i = -a1_i / A2
    component 1, convention "script":delta_i = 0, c_i = -a1_i * A2

The two conventions differ by the factor A2^2 on the late coordinates of
component 1; "script" reproduces a well-known computer-algebra construction
byte for byte, "paper" is the default normalization.  The second chart
(around u = 0, i.e. t = infinity) is

    uchart_i(u) = MM(u) * (delta_i - c_i * u) / (1 - a_i * u),

with MM(u) = prod_r (1 - a_r u); it satisfies
uchart_i(u) = u^(g-1) * alpha_i(1/u).

Nodes: P_l = e_l (standard basis) for l <= g-1 at parameter t = a_l on each
component; P_g at t = 0 with pattern (0..0, 1..1) (k zeros first); P_{g+1}
at u = 0 with the complementary pattern (1..1, 0..0).

Curves are immutable after construction; all functions here are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import Poly, RationalLike, format_rational, parse_rational

CONVENTIONS = ("paper", "script")


class ParameterError(ValueError):
    """Invalid curve parameters (zero, duplicate, wrong count, bad genus)."""


class PrymBinaryCurve:
    """Genus, parameter rows, and the derived embedding polynomials.

    Treat instances as immutable: every attribute is computed once in the
    constructor and never rewritten, so sharing across threads is safe.
    """

    def __init__(self, genus: int, a1: Sequence[Fraction], a2: Sequence[Fraction],
                 convention: str = "paper"):
        self.genus = genus
        self.convention = convention
        self.a1 = tuple(a1)
        self.a2 = tuple(a2)
        self.k = genus // 2
        self.A1 = _product(self.a1)
        self.A2 = _product(self.a2)
        self.d2 = Fraction(1)
        self.d1 = -self.A1 / self.A2
        m1 = Poly.from_roots(self.a1)
        m2 = Poly.from_roots(self.a2)
        self.M = {1: m1, 2: m2}
        self._alpha = {}
        self._uchart = {}
        for eps in (1, 2):
            for i in range(1, genus):
                self._alpha[(i, eps)] = self._build_alpha(i, eps)
                self._uchart[(i, eps)] = self._build_uchart(i, eps)
        self._dalpha: dict[tuple[int, int], Poly] = {}
        self._node_values: dict[tuple[int, int, int], Fraction] = {}

    # -- construction helpers ------------------------------------------

    def _coeff_pair(self, i: int, eps: int) -> tuple[int, Fraction]:
        """(delta_i, c_i) for the numerator factor delta_i*t - c_i."""
        if i <= self.k:
            return 1, Fraction(0)
        if eps == 2:
            return 0, self.a2[i - 1] / self.A2
        if self.convention == "paper":
            return 0, -self.a1[i - 1] / self.A2
        return 0, -self.a1[i - 1] * self.A2

    def _build_alpha(self, i: int, eps: int) -> Poly:
        a = self.params(eps)[i - 1]
        delta, c = self._coeff_pair(i, eps)
        base = self.M[eps].div_linear(a)
        return base * Poly((-c, delta))

    def _build_uchart(self, i: int, eps: int) -> Poly:
        params = self.params(eps)
        a = params[i - 1]
        delta, c = self._coeff_pair(i, eps)
        # MM(u) = prod (1 - a_r u) is M with coefficients reversed.
        mm = Poly(tuple(reversed(self.M[eps].padded(self.genus))))
        # (1 - a u) = -a (u - 1/a); a is nonzero by the curve invariants.
        base = mm.div_linear(Fraction(1) / a).scale(Fraction(-1) / a)
        return base * Poly((delta, -c))

    # -- accessors ------------------------------------------------------

    def params(self, eps: int) -> tuple[Fraction, ...]:
        if eps == 1:
            return self.a1
        if eps == 2:
            return self.a2
        raise ValueError(f"component index must be 1 or 2, got {eps}")

    def alpha(self, i: int, eps: int) -> Poly:
        """i-th embedding coordinate of component eps in the t chart."""
        return self._alpha[(i, eps)]

    def uchart(self, i: int, eps: int) -> Poly:
        """i-th embedding coordinate of component eps in the u chart."""
        return self._uchart[(i, eps)]

    def alpha_derivative(self, i: int, eps: int) -> Poly:
        """Cached d/dt of alpha(i, eps)."""
        key = (i, eps)
        if key not in self._dalpha:
            self._dalpha[key] = self._alpha[key].derivative()
        return self._dalpha[key]

    def node_parameter(self, eps: int, h: int) -> Fraction:
        """t-coordinate of node P_h on component eps, h = 1..g (P_g at t=0)."""
        if not 1 <= h <= self.genus:
            raise ValueError(f"interior node index must be in 1..{self.genus}, got {h}")
        if h == self.genus:
            return Fraction(0)
        return self.params(eps)[h - 1]

    def alpha_derivative_at_node(self, i: int, eps: int, h: int) -> Fraction:
        """alpha'(i,eps) evaluated at node P_h; memoized per entry."""
        key = (i, eps, h)
        value = self._node_values.get(key)
        if value is None:
            value = self.alpha_derivative(i, eps)(self.node_parameter(eps, h))
            self._node_values[key] = value
        return value

    def __repr__(self) -> str:
        return (f"PrymBinaryCurve(genus={self.genus}, convention={self.convention!r}, "
                f"a1=({', '.join(format_rational(x) for x in self.a1)}), "
                f"a2=({', '.join(format_rational(x) for x in self.a2)}))")


def _product(values: Sequence[Fraction]) -> Fraction:
    out = Fraction(1)
    for v in values:
        out *= v
    return out


def build_curve(genus: int, a1: Sequence[RationalLike], a2: Sequence[RationalLike],
                convention: str = "paper") -> PrymBinaryCurve:
    """Validate parameters and materialize the curve.

    Raises ParameterError naming the offending index pair on any violated
    invariant (duplicate or zero entries within a row, wrong row length).
    """
    if genus < 3:
        raise ParameterError(f"genus must be >= 3, got {genus}")
    if convention not in CONVENTIONS:
        raise ParameterError(f"convention must be one of {CONVENTIONS}, got {convention!r}")
    rows = {}
    for name, row in (("a1", a1), ("a2", a2)):
        vals = [parse_rational(x) for x in row]
        if len(vals) != genus - 1:
            raise ParameterError(f"{name} must have {genus - 1} entries for genus {genus}, got {len(vals)}")
        seen: dict[Fraction, int] = {}
        for idx, v in enumerate(vals, start=1):
            if v == 0:
                raise ParameterError(f"{name}[{idx}] is zero; all parameters must be nonzero")
            if v in seen:
                raise ParameterError(
                    f"{name}[{seen[v]}] and {name}[{idx}] are both {format_rational(v)}; "
                    f"parameters must be pairwise distinct within a component")
            seen[v] = idx
        rows[name] = tuple(vals)
    return PrymBinaryCurve(genus, rows["a1"], rows["a2"], convention)


def node_table(genus: int) -> tuple[tuple[int, ...], ...]:
    """0/1 coordinates of the g+1 nodes in P^(g-2), as the curve hits them."""
    k = genus // 2
    dim = genus - 1
    nodes = []
    for i in range(1, genus):
        nodes.append(tuple(1 if j == i else 0 for j in range(1, genus)))
    nodes.append(tuple(0 if j <= k else 1 for j in range(1, genus)))   # P_g
    nodes.append(tuple(1 if j <= k else 0 for j in range(1, genus)))   # P_{g+1}
    assert all(len(n) == dim for n in nodes)
    return tuple(nodes)


@dataclass(frozen=True)
class NodeCheckReport:
    """Result of checking that both charts hit every node on pattern."""
    genus: int
    convention: str
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def _proportional(vec: Sequence[Fraction], pattern: Sequence[int]) -> int | None:
    """Index of the first coordinate where vec is not a nonzero multiple of
    pattern, or None if it is one."""
    ratio = None
    for idx, (v, p) in enumerate(zip(vec, pattern)):
        if p == 0:
            if v != 0:
                return idx
        else:
            if v == 0:
                return idx
            if ratio is None:
                ratio = v / p
            elif v / p != ratio:
                return idx
    if ratio is None or ratio == 0:
        return 0
    return None


def node_check(curve: PrymBinaryCurve) -> NodeCheckReport:
    """Verify that each chart sends the right parameters to the right nodes.

    For every component eps: the coordinate vector at t = a_l must be a
    nonzero multiple of P_l (l <= g-1), at t = 0 of P_g, and the top-degree
    coefficient vector of P_{g+1}.
    """
    g = curve.genus
    nodes = node_table(g)
    failures = []
    for eps in (1, 2):
        params = curve.params(eps)
        coords = [curve.alpha(i, eps) for i in range(1, g)]
        for l in range(1, g):
            vec = [c(params[l - 1]) for c in coords]
            bad = _proportional(vec, nodes[l - 1])
            if bad is not None:
                failures.append(f"node P_{l}, component {eps}: coordinate {bad + 1} off pattern")
        vec = [c(Fraction(0)) for c in coords]
        bad = _proportional(vec, nodes[g - 1])
        if bad is not None:
            failures.append(f"node P_{g}, component {eps}: coordinate {bad + 1} off pattern")
        vec = [c.coefficient(g - 1) for c in coords]
        bad = _proportional(vec, nodes[g])
        if bad is not None:
            failures.append(f"node P_{g + 1}, component {eps}: coordinate {bad + 1} off pattern")
    return NodeCheckReport(genus=g, convention=curve.convention, failures=tuple(failures))


def projection_node_index(genus: int) -> int:
    """Index r of the node removed by the genus-lowering projection:
    r = k for genus 2k, r = k+1 for genus 2k+1."""
    k = genus // 2
    return k if genus % 2 == 0 else k + 1


def project_node(curve: PrymBinaryCurve) -> PrymBinaryCurve:
    """Project away node P_r, producing the genus-(g-1) curve.

    The parameter rows simply drop index r; the result uses the same
    convention.  Genus 3 cannot be projected (the image would fall below
    the supported genus floor).
    """
    g = curve.genus
    if g < 4:
        raise ParameterError("cannot project a genus-3 curve: the image would have genus 2")
    r = projection_node_index(g)
    a1 = curve.a1[:r - 1] + curve.a1[r:]
    a2 = curve.a2[:r - 1] + curve.a2[r:]
    return build_curve(g - 1, a1, a2, curve.convention)


def torsion_descriptor(curve: PrymBinaryCurve) -> tuple[int, ...]:
    """Sign pattern (h_1..h_{g+1}) describing the 2-torsion gluing:
    +1 for the first k nodes, -1 through P_g, +1 at P_{g+1}.

    Recorded from the construction; this library does not recompute gluing
    data.
    """
    g, k = curve.genus, curve.k
    return tuple([1] * k + [-1] * (g - 1 - k) + [-1, 1])
