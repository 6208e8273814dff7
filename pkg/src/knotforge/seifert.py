"""Seifert matrices from braid presentations and Tristram-Levine signatures.

Seifert's algorithm applied to a braid-closure diagram gives the surface
of disks (one per strand) joined by twisted bands (one per crossing).
The homology basis consists of the loops through consecutive bands on
each adjacent strand pair; linking numbers of pushoffs follow the usual
band-interleaving rules.  Diagrams must carry braid provenance; the small
knot catalog supplies braid words for every knot used in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diagram import PlanarDiagram, DiagramError
from .exact import (SignatureTriple, det_exact, hermitian_signature_at_root,
                    symmetric_signature)


@dataclass(frozen=True)
class SeifertData:
    matrix: tuple        # Seifert matrix V, size 2g x 2g
    genus: int
    circles: int         # Seifert circles (braid strands)
    bands: int           # crossings

    def to_json(self):
        return {"V": [list(r) for r in self.matrix], "genus": self.genus,
                "circles": self.circles, "bands": self.bands}


def seifert_matrix(d: PlanarDiagram) -> SeifertData:
    """Seifert matrix of a knot given as a braid closure.

    The loop basis: for each adjacent strand pair with bands at word
    positions t_1 < ... < t_k, the loops through bands (t_j, t_j+1).
    """
    if d.braid is None:
        raise DiagramError("Seifert construction needs braid provenance; "
                           "supply the diagram as a braid closure")
    if not d.is_knot():
        raise DiagramError("Seifert matrix implemented for knots only")
    word = d.braid
    strands = d.braid_strands
    positions = {}
    for t, g in enumerate(word):
        positions.setdefault(abs(g), []).append((t, 1 if g > 0 else -1))
    loops = []  # (pair index i, (t1, e1), (t2, e2))
    for i in sorted(positions):
        ts = positions[i]
        for j in range(len(ts) - 1):
            loops.append((i, ts[j], ts[j + 1]))
    r = len(loops)
    V = [[0] * r for _ in range(r)]
    for x in range(r):
        i, (a, ea), (b, eb) = loops[x]
        V[x][x] = -(ea + eb) // 2
        for y in range(r):
            if x == y:
                continue
            i2, (c, ec), (dd, ed) = loops[y]
            if i2 == i:
                # same strand pair: consecutive loops share a band
                if c == b:     # y follows x, shared band b with sign eb
                    V[x][y] += (1 + eb) // 2
                elif dd == a:  # x follows y, shared band a
                    V[x][y] += -(1 - ea) // 2
            elif i2 == i + 1 or i2 == i - 1:
                # adjacent strand pairs: a loop of the higher pair links a
                # loop of the lower pair once when their band intervals
                # interleave; the sign depends on which starts first
                lo, hi = (x, y) if i2 == i + 1 else (y, x)
                _, (a1, _), (b1, _) = loops[lo]
                _, (c1, _), (d1, _) = loops[hi]
                if (x, y) == (lo, hi):
                    if a1 < c1 < b1 < d1:
                        V[x][y] += 1
                    elif c1 < a1 < d1 < b1:
                        V[x][y] += -1
    # connectivity sanity: a knot closure uses every adjacent pair
    rank = r
    if rank % 2 != 0:
        raise DiagramError("Seifert surface rank is odd; diagram is not a knot")
    return SeifertData(tuple(tuple(row) for row in V), rank // 2,
                       strands, len(word))


def symplectic_determinant(V) -> int:
    n = len(V)
    A = [[V[i][j] - V[j][i] for j in range(n)] for i in range(n)]
    return int(det_exact(A))


def seifert_signature(V) -> int:
    n = len(V)
    S = [[V[i][j] + V[j][i] for j in range(n)] for i in range(n)]
    return symmetric_signature(S).signature


def seifert_determinant(V) -> int:
    """|det(V + V^T)| = the knot determinant."""
    n = len(V)
    S = [[V[i][j] + V[j][i] for j in range(n)] for i in range(n)]
    return abs(int(det_exact(S)))


def alexander_polynomial(V):
    """det(V - t V^T) as low-first integer coefficients (not normalized)."""
    n = len(V)
    if n == 0:
        return [1]
    # interpolate the degree <= n polynomial from n+1 exact evaluations
    xs = list(range(n + 1))
    ys = []
    for t in xs:
        A = [[Fraction(V[i][j] - t * V[j][i]) for j in range(n)] for i in range(n)]
        ys.append(det_exact(A))
    coeffs = _lagrange(xs, ys, n)
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise ArithmeticError("Alexander polynomial not integral")
        out.append(int(c))
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _lagrange(xs, ys, deg):
    coeffs = [Fraction(0)] * (deg + 1)
    for i, xi in enumerate(xs):
        poly = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if i == j:
                continue
            poly = _poly_mul_linear(poly, -Fraction(xj))
            denom *= (xi - xj)
        f = ys[i] / denom
        for k, c in enumerate(poly):
            coeffs[k] += f * c
    return coeffs


def _poly_mul_linear(p, const):
    """p(x) * (x + const)."""
    out = [Fraction(0)] * (len(p) + 1)
    for i, c in enumerate(p):
        out[i] += c * const
        out[i + 1] += c
    return out


@dataclass(frozen=True)
class TristramLevine:
    p: int
    signatures: tuple  # sigma at zeta^k, k = 1..p-1
    nullities: tuple

    def to_json(self):
        return {"p": self.p, "sigmas": list(self.signatures),
                "nullities": list(self.nullities)}


def tristram_levine(V, p: int) -> TristramLevine:
    """Signatures of (1-zeta^k)V + (1-zeta^-k)V^T for k = 1..p-1, exact."""
    sigs, nulls = [], []
    for k in range(1, p):
        tri = hermitian_signature_at_root([list(r) for r in V], p, k)
        sigs.append(tri.signature)
        nulls.append(tri.n_zero)
    return TristramLevine(p, tuple(sigs), tuple(nulls))


def murasugi_bound(sigma_K: int) -> Fraction:
    """Murasugi's four-genus bound |sigma|/2."""
    return Fraction(abs(sigma_K), 2)
