"""The first Gaussian map of a Prym-canonical binary curve, as an exact matrix.

For sections sigma_i, sigma_j (the coordinate hyperplane sections) the map
splits into a polynomial part and a torsion part:

* nu_{ij,h}(t) = alpha_{i,h} alpha'_{j,h} - alpha_{j,h} alpha'_{i,h} on
  component h, a polynomial of degree <= 2g-4 (the top terms cancel);
* one scalar per node: at an interior node P_h (h = 1..g, with P_g at t=0)

      tau(i,j)_h = alpha'_{j,1}(a_{h,1}) alpha'_{i,2}(a_{h,2})
                 - alpha'_{i,1}(a_{h,1}) alpha'_{j,2}(a_{h,2}),

  and at P_{g+1} the same expression in the u-chart derivatives at u = 0.

The assembled matrix has one row per pair (i, j), 1 <= i < j <= g-1, in
lexicographic order, and 5g-5 columns: the 2g-3 coefficients of nu_{ij,1}
(ascending degree), the 2g-3 coefficients of nu_{ij,2}, tau at P_1..P_g,
tau at P_{g+1}.  Row assembly only reads the immutable curve, so any
evaluation order produces the identical matrix.

For the default normalization ("paper" convention) each nu_{ij,h} also has a
closed form in three regimes (k = floor(g/2), a = parameter row h, B =
M/((t-a_i)(t-a_j)), a polynomial):

    i < j <= k:      (a_i - a_j) t^2 B^2
    k < i < j:       (a_i - a_j) a_i a_j / A2^2 * B^2
    i <= k < j:      (-1)^h a_j / A2 * (t^2 - 2 a_i t + a_i a_j) B^2

The closed form is the independent cross-check of the Wronskian path; the
assembler always uses the Wronskian (it is convention-independent).
"""

from __future__ import annotations

import hashlib
import json
import struct
from dataclasses import dataclass
from fractions import Fraction

from .curves import PrymBinaryCurve
from .exact import Poly, format_rational, parse_rational


def row_pairs(genus: int) -> tuple[tuple[int, int], ...]:
    """Lexicographic (i, j) pairs, 1 <= i < j <= g-1: the row order."""
    return tuple((i, j) for i in range(1, genus - 1) for j in range(i + 1, genus))


def matrix_shape(genus: int) -> tuple[int, int]:
    """(rows, cols) = ((g-1)(g-2)/2, 5g-5)."""
    return (genus - 1) * (genus - 2) // 2, 5 * genus - 5


def column_layout(genus: int) -> dict:
    """Column block boundaries, matching the row serialization."""
    width = 2 * genus - 3
    return {
        "nu1": [0, width],
        "nu2": [width, 2 * width],
        "tau_interior": [2 * width, 2 * width + genus],
        "tau_infinity": 2 * width + genus,
    }


def nu_wronskian(curve: PrymBinaryCurve, i: int, j: int, h: int) -> Poly:
    """alpha_i alpha_j' - alpha_j alpha_i' on component h (any convention)."""
    ai = curve.alpha(i, h)
    aj = curve.alpha(j, h)
    return ai * curve.alpha_derivative(j, h) - aj * curve.alpha_derivative(i, h)


def nu_closed_form(curve: PrymBinaryCurve, i: int, j: int, h: int) -> Poly:
    """Closed form for nu_{ij,h}; defined for the paper convention and i < j.

    All divisions are exact polynomial divisions; the three regimes are
    dispatched on the position of i, j relative to k.
    """
    if curve.convention != "paper":
        raise ValueError("closed forms are stated for the paper convention only")
    if not 1 <= i < j <= curve.genus - 1:
        raise ValueError(f"need 1 <= i < j <= g-1, got ({i}, {j})")
    a = curve.params(h)
    ai, aj = a[i - 1], a[j - 1]
    k = curve.k
    b = curve.M[h].div_linear(ai).div_linear(aj)
    b2 = b * b
    if j <= k:
        return (b2 * Poly((0, 0, 1))).scale(ai - aj)
    if i > k:
        return b2.scale((ai - aj) * ai * aj / (curve.A2 * curve.A2))
    sign = -1 if h == 1 else 1
    quad = Poly((ai * aj, -2 * ai, 1))
    return (b2 * quad).scale(Fraction(sign) * aj / curve.A2)


def tau_interior(curve: PrymBinaryCurve, i: int, j: int, h: int) -> Fraction:
    """Torsion value of (i, j) at interior node P_h, h = 1..g.

    P_g is the node at t = 0; its evaluation point is the sentinel 0 on both
    components.
    """
    tja = curve.alpha_derivative_at_node(j, 1, h)
    tib = curve.alpha_derivative_at_node(i, 2, h)
    tia = curve.alpha_derivative_at_node(i, 1, h)
    tjb = curve.alpha_derivative_at_node(j, 2, h)
    return tja * tib - tia * tjb


def tau_infinity(curve: PrymBinaryCurve, i: int, j: int) -> Fraction:
    """Torsion value of (i, j) at the node P_{g+1} (u = 0 in the far chart).

    The u-derivative at 0 is the degree-1 coefficient of the chart
    polynomial.
    """
    gja = curve.uchart(j, 1).coefficient(1)
    gib = curve.uchart(i, 2).coefficient(1)
    gia = curve.uchart(i, 1).coefficient(1)
    gjb = curve.uchart(j, 2).coefficient(1)
    return gja * gib - gia * gjb


@dataclass(frozen=True)
class GaussMatrix:
    """Exact matrix of the first Gaussian map plus its layout descriptor."""
    genus: int
    convention: str
    entries: tuple[tuple[Fraction, ...], ...]

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return row_pairs(self.genus)

    @property
    def layout(self) -> dict:
        return column_layout(self.genus)

    def nu_poly(self, row: int, h: int) -> Poly:
        """Reconstruct nu_{ij,h} from the stored coefficient block."""
        width = 2 * self.genus - 3
        start = 0 if h == 1 else width
        return Poly(self.entries[row][start:start + width])


def assemble_matrix(curve: PrymBinaryCurve) -> GaussMatrix:
    """Fill every row: nu coefficient blocks via the Wronskian, then the
    torsion values at P_1..P_g and P_{g+1}."""
    g = curve.genus
    width = 2 * g - 3
    rows = []
    for (i, j) in row_pairs(g):
        nu1 = nu_wronskian(curve, i, j, 1)
        nu2 = nu_wronskian(curve, i, j, 2)
        taus = tuple(tau_interior(curve, i, j, h) for h in range(1, g + 1))
        rows.append(nu1.padded(width) + nu2.padded(width) + taus + (tau_infinity(curve, i, j),))
    return GaussMatrix(genus=g, convention=curve.convention, entries=tuple(rows))


# -- serialization ------------------------------------------------------
#
# JSON: {"genus", "convention", "layout", "rows": [[rational strings]]}.
# Binary (consumed by the rank engine): the header "PGMX" + version byte 1,
# then genus, convention flag (0 = paper, 1 = script), row count and column
# count as little-endian uint32, then every cell in row-major order as a
# uint32 length prefix followed by that many ASCII bytes of the "p" or
# "p/q" decimal literal.  Both formats are stable.

_BIN_MAGIC = b"PGMX"
_BIN_VERSION = 1


def matrix_to_json(matrix: GaussMatrix) -> str:
    payload = {
        "genus": matrix.genus,
        "convention": matrix.convention,
        "layout": {
            "row_pairs": [list(p) for p in matrix.pairs],
            "columns": matrix.layout,
        },
        "rows": [[format_rational(x) for x in row] for row in matrix.entries],
    }
    return json.dumps(payload, separators=(",", ":"), sort_keys=True)


def matrix_from_json(text: str) -> GaussMatrix:
    data = json.loads(text)
    entries = tuple(tuple(parse_rational(x) for x in row) for row in data["rows"])
    matrix = GaussMatrix(genus=data["genus"], convention=data["convention"], entries=entries)
    expected = matrix_shape(matrix.genus)
    if (matrix.rows, matrix.cols) != expected:
        raise ValueError(f"matrix shape {(matrix.rows, matrix.cols)} does not match genus "
                         f"{matrix.genus} (expected {expected})")
    return matrix


def matrix_to_bytes(matrix: GaussMatrix) -> bytes:
    flag = 0 if matrix.convention == "paper" else 1
    out = [_BIN_MAGIC, struct.pack("<BIBII", _BIN_VERSION, matrix.genus, flag,
                                   matrix.rows, matrix.cols)]
    for row in matrix.entries:
        for cell in row:
            text = format_rational(cell).encode("ascii")
            out.append(struct.pack("<I", len(text)))
            out.append(text)
    return b"".join(out)


def matrix_from_bytes(blob: bytes) -> GaussMatrix:
    if blob[:4] != _BIN_MAGIC:
        raise ValueError("not a matrix dump (bad magic)")
    version, genus, flag, nrows, ncols = struct.unpack_from("<BIBII", blob, 4)
    if version != _BIN_VERSION:
        raise ValueError(f"unsupported matrix dump version {version}")
    offset = 4 + struct.calcsize("<BIBII")
    rows = []
    for _ in range(nrows):
        row = []
        for _ in range(ncols):
            (length,) = struct.unpack_from("<I", blob, offset)
            offset += 4
            row.append(parse_rational(blob[offset:offset + length].decode("ascii")))
            offset += length
        rows.append(tuple(row))
    return GaussMatrix(genus=genus, convention="paper" if flag == 0 else "script",
                       entries=tuple(rows))


def matrix_checksum(matrix: GaussMatrix) -> str:
    """SHA-256 of the canonical JSON serialization (regression anchor)."""
    return hashlib.sha256(matrix_to_json(matrix).encode("utf-8")).hexdigest()
