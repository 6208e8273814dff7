"""Dihedral genus bounds and the signature-defect bookkeeping.

Implements the lower bound on the homotopy-ribbon p-dihedral genus

    g_p(K, rho) >= (|Xi_p(K, rho)| - rk H_1(M; Z)) / (p - 1) - 1/2,

the Euler characteristic of the singular branched cover, the conversions
between Xi_p and cover signatures, the sharpness / slice-ribbon verdict,
and the parity constraint satisfied by Xi_p when p = 3 mod 4.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil


class BoundsError(ValueError):
    pass


def _check_odd(p):
    if p < 3 or p % 2 == 0:
        raise BoundsError(f"p must be odd and >= 3, got {p}")


@dataclass(frozen=True)
class XiValue:
    value: int
    p: int
    provenance: str = "external"  # from_cover_signature | from_novikov | external

    def __post_init__(self):
        _check_odd(self.p)
        if self.provenance not in ("from_cover_signature", "from_novikov", "external"):
            raise BoundsError(f"unknown provenance {self.provenance!r}")

    def to_json(self):
        return {"value": self.value, "p": self.p, "provenance": self.provenance}


def xi_from_cover_signature(sigma_X: int, p: int) -> XiValue:
    """Xi_p(K, rho) = -sigma(X) for an orientable branching set."""
    return XiValue(-sigma_X, p, "from_cover_signature")


def xi_from_novikov(e_F: int, sigma_novikov: int, p: int) -> XiValue:
    """Xi_p(K) = -(p-1)/4 e(F) - sigma(X', dX').

    For orientable F in S^4 the self-intersection e(F) vanishes and the
    formula reduces to -sigma_novikov.
    """
    _check_odd(p)
    num = (p - 1) * e_F
    if num % 4 != 0:
        raise BoundsError(f"(p-1)*e(F) = {num} is not divisible by 4")
    return XiValue(-num // 4 - sigma_novikov, p, "from_novikov")


def xi_parity_check(xi: XiValue) -> str:
    """'ok' unless p = 3 mod 4 and the value is even (impossible then)."""
    if xi.p % 4 == 3 and xi.value % 2 == 0:
        return "violation"
    return "ok"


def euler_char_cover(p: int, chi_F: int) -> int:
    """chi(X) = 2p - (p-1)/2 * chi(F) - (p-1)/2."""
    _check_odd(p)
    h = (p - 1) // 2
    return 2 * p - h * chi_F - h


@dataclass(frozen=True)
class GenusBoundReport:
    p: int
    xi: XiValue
    rk_H1_M: int
    lower_bound_rational: Fraction
    lower_bound_genus: int
    sigma_K: int | None = None
    murasugi_bound: Fraction | None = None
    sharp: bool = False
    slice_ribbon: bool = False
    g4_conclusion: int | None = None
    parity: str = "ok"
    notes: tuple = ()

    def to_json(self):
        return {
            "p": self.p,
            "xi": self.xi.to_json(),
            "rk_H1_M": self.rk_H1_M,
            "lower_bound_rational": str(self.lower_bound_rational),
            "lower_bound_genus": self.lower_bound_genus,
            "sigma_K": self.sigma_K,
            "murasugi_bound": None if self.murasugi_bound is None else str(self.murasugi_bound),
            "sharp": self.sharp,
            "slice_ribbon": self.slice_ribbon,
            "g4_conclusion": self.g4_conclusion,
            "parity": self.parity,
            "notes": list(self.notes),
        }


def dihedral_genus_lower_bound(xi: XiValue, rk_H1: int) -> GenusBoundReport:
    """Exact rational bound (|Xi| - rk H1(M))/(p-1) - 1/2 and its clamp."""
    if rk_H1 < 0:
        raise BoundsError("rk H_1(M) must be >= 0")
    p = xi.p
    rational = Fraction(abs(xi.value) - rk_H1, p - 1) - Fraction(1, 2)
    genus = max(0, ceil(rational))
    return GenusBoundReport(
        p=p, xi=xi, rk_H1_M=rk_H1,
        lower_bound_rational=rational,
        lower_bound_genus=genus,
        parity=xi_parity_check(xi),
    )


def sharpness_report(sigma_K: int, xi: XiValue, rk_H1: int,
                     definite: bool) -> GenusBoundReport:
    """Sharpness and slice-ribbon verdict of Theorem 1(B).

    When the cover is definite the bound is sharp; when additionally
    |sigma(K)| = 2|Xi|/(p-1) - 1, the topological four-genus and the
    homotopy ribbon p-dihedral genus coincide and equal |sigma|/2.
    """
    base = dihedral_genus_lower_bound(xi, rk_H1)
    p = xi.p
    mur = Fraction(abs(sigma_K), 2)
    condition = Fraction(2 * abs(xi.value), p - 1) - 1 == abs(sigma_K)
    slice_ribbon = bool(definite and condition)
    g4 = None
    notes = []
    if definite:
        notes.append("cover definite: genus bound is sharp")
    if slice_ribbon:
        g4 = abs(sigma_K) // 2
        notes.append("generalized slice-ribbon holds: g4 = dihedral genus = |sigma|/2")
    elif definite and not condition:
        notes.append("signature condition |sigma| = 2|Xi|/(p-1) - 1 fails; bound-only report")
    return GenusBoundReport(
        p=p, xi=xi, rk_H1_M=rk_H1,
        lower_bound_rational=base.lower_bound_rational,
        lower_bound_genus=base.lower_bound_genus,
        sigma_K=sigma_K,
        murasugi_bound=mur,
        sharp=bool(definite),
        slice_ribbon=slice_ribbon,
        g4_conclusion=g4,
        parity=base.parity,
        notes=tuple(notes),
    )


def min_p_bound(xi_values, rk_values):
    """Bound over all colorings: needs a Xi and rk H1 for each coloring.

    Returns ('ok', report) using the minimal |Xi| - rk, or
    ('insufficient data', None) when any coloring lacks a Xi value.
    """
    pairs = list(zip(xi_values, rk_values))
    if not pairs or any(x is None for x, _ in pairs):
        return "insufficient data", None
    best = min(pairs, key=lambda t: abs(t[0].value) - t[1])
    return "ok", dihedral_genus_lower_bound(best[0], best[1])
