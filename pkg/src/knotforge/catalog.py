"""Small knot catalog: PD codes, braid words, and known invariants.

Signature values follow this artifact's convention, pinned by requiring
sigma(K_m) = +2m on the published family (the mirror of the usual table
convention for those knots; the CLI --convention flag flips globally).
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import PlanarDiagram, braid_closure, parse_pd
from .family import km_diagram


TREFOIL_PD = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"


def km_braid(m: int):
    """Braid word closing to K_m (sigma = +2m, det = 18m+9)."""
    return tuple([-2] * (2 * m) + [-1, -1, -2, 1, 3, -2, 3])


@dataclass(frozen=True)
class KnotRecord:
    name: str
    braid: tuple | None = None
    pd: str | None = None
    determinant: int | None = None
    signature: int | None = None
    two_bridge: bool = False

    def diagram(self) -> PlanarDiagram:
        if self.pd is not None:
            return parse_pd(self.pd)
        return braid_closure(list(self.braid))

    def braid_diagram(self) -> PlanarDiagram:
        if self.braid is None:
            raise ValueError(f"{self.name} has no braid form")
        return braid_closure(list(self.braid))


CATALOG = [
    KnotRecord("unknot", braid=(), determinant=1, signature=0, two_bridge=True),
    KnotRecord("trefoil", braid=(-1, -1, -1), pd=TREFOIL_PD,
               determinant=3, signature=2, two_bridge=True),
    KnotRecord("trefoil_r", braid=(1, 1, 1), determinant=3, signature=-2,
               two_bridge=True),
    KnotRecord("figure8", braid=(1, -2, 1, -2), determinant=5, signature=0,
               two_bridge=True),
    KnotRecord("5_1", braid=(1, 1, 1, 1, 1), determinant=5, signature=-4,
               two_bridge=True),
    KnotRecord("5_2m", braid=(-1, -1, -1, -2, 1, -2), determinant=7,
               signature=2, two_bridge=True),
    KnotRecord("6_1", braid=km_braid(0), determinant=9, signature=0,
               two_bridge=True),
    KnotRecord("7_1", braid=(1,) * 7, determinant=7, signature=-6,
               two_bridge=True),
    KnotRecord("8_11m", braid=km_braid(1), determinant=27, signature=2,
               two_bridge=True),
    KnotRecord("8_19", braid=(1, 2) * 4, determinant=3, signature=-6),
    KnotRecord("10_21m", braid=km_braid(2), determinant=45, signature=4,
               two_bridge=True),
    KnotRecord("10_124", braid=(1, 2) * 5, determinant=1, signature=-8),
    KnotRecord("12a723m", braid=km_braid(3), determinant=63, signature=6,
               two_bridge=True),
]


def by_name(name: str) -> KnotRecord:
    for rec in CATALOG:
        if rec.name == name:
            return rec
    raise KeyError(name)


def km_record(m: int) -> KnotRecord:
    """K_m with both the published-figure PD and a braid word."""
    d, white = km_diagram(m)
    return KnotRecord(f"K_{m}", braid=km_braid(m), pd=d.to_pd_text(),
                      determinant=18 * m + 9, signature=2 * m, two_bridge=True)
