"""Fox p-colorings of diagrams and the induced dihedral representations.

A p-coloring assigns a color in Z/p to every arc so that at each crossing
the under-strand colors a, c and the over-strand color b satisfy
a + c = 2b (mod p).  Colors are 1..p externally and 0..p-1 internally.
A coloring is surjective when the induced homomorphism onto D_p is onto,
i.e. when the color differences generate Z/p.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .diagram import PlanarDiagram
from .exact import smith_normal_form

ENUMERATION_CAP = 10 ** 5


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class FoxColoring:
    p: int
    colors: tuple  # colors[arc - 1] in 0..p-1 per PD arc label (internal)

    def color(self, arc: int) -> int:
        """External color of an arc, in 1..p."""
        return p_ext(self.colors[arc - 1], self.p)

    @property
    def surjective(self) -> bool:
        g = 0
        base = self.colors[0]
        for c in self.colors:
            g = gcd(g, (c - base) % self.p)
        return gcd(g, self.p) == 1

    def to_json(self):
        return {
            "p": self.p,
            "colors": {str(a + 1): p_ext(c, self.p) for a, c in enumerate(self.colors)},
            "surjective": self.surjective,
        }


def p_ext(c, p):
    return p if c % p == 0 else c % p


def _check_odd(p):
    if p < 3 or p % 2 == 0:
        raise ColoringError(f"p must be odd and >= 3, got {p}")


def under_arc_classes(d: PlanarDiagram):
    """Group PD arc labels into under-arcs (over-strand labels identified).

    Returns (classes, index) where classes is a list of label tuples and
    index maps each PD label to its class position.
    """
    parent = list(range(d.arc_count + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    for (_, b, _, dd) in d.crossings:
        union(b, dd)
    groups = {}
    for a in range(1, d.arc_count + 1):
        groups.setdefault(find(a), []).append(a)
    classes = [tuple(groups[r]) for r in sorted(groups)]
    index = {}
    for i, cls in enumerate(classes):
        for a in cls:
            index[a] = i
    return classes, index


def coloring_matrix(d: PlanarDiagram, p: int):
    """One row per crossing encoding a + c - 2b over the under-arc classes."""
    _check_odd(p)
    if d.arc_count == 0:
        return []
    classes, index = under_arc_classes(d)
    rows = []
    for (a, b, c, _) in d.crossings:
        row = [0] * len(classes)
        row[index[a]] += 1
        row[index[c]] += 1
        row[index[b]] -= 2
        rows.append(row)
    return rows


def fox_colorings(d: PlanarDiagram, p: int, cap: int = ENUMERATION_CAP):
    """Solve the coloring system mod p.

    Returns (count, colorings, basis).  count is the exact number of
    solutions (p**nullity for prime p); colorings are enumerated only when
    count <= cap; basis generates the solution lattice mod p, expressed on
    under-arc classes.
    """
    _check_odd(p)
    n = d.arc_count
    if n == 0:
        cols = [FoxColoring(p, (c,)) for c in range(p)] if p <= cap else []
        return p, cols, [(1,)]
    classes, index = under_arc_classes(d)
    m = len(classes)
    rows = coloring_matrix(d, p)
    res = smith_normal_form(rows, transforms=True)
    V = res.V
    # solutions x = V y with d_i y_i = 0 mod p: y_i ranges over multiples
    # of p/gcd(d_i, p); columns past the rank are free mod p
    gens = []  # (column index, step, number of values)
    count = 1
    for i in range(m):
        di = res.factors[i] if i < len(res.factors) else 0
        if di == 0:
            gens.append((i, 1, p))
            count *= p
        else:
            g = gcd(di, p)
            if g > 1:
                gens.append((i, p // g, g))
                count *= g

    basis = []
    for i, stp, _num in gens:
        basis.append(tuple((V[r][i] * stp) % p for r in range(m)))

    colorings = []
    if count <= cap:
        idx = [0] * len(gens)
        while True:
            x = [0] * m
            for t, (i, stp, _num) in enumerate(gens):
                y = (idx[t] * stp) % p
                if y:
                    for r in range(m):
                        x[r] = (x[r] + V[r][i] * y) % p
            full = [0] * n
            for a in range(1, n + 1):
                full[a - 1] = x[index[a]] % p
            colorings.append(FoxColoring(p, tuple(full)))
            t = 0
            while t < len(gens):
                idx[t] += 1
                if idx[t] < gens[t][2]:
                    break
                idx[t] = 0
                t += 1
            else:
                break
    return count, colorings, basis


def count_colorings(d: PlanarDiagram, p: int) -> int:
    count, _, _ = fox_colorings(d, p, cap=0)
    return count


def surjective_colorings(d: PlanarDiagram, p: int, cap: int = ENUMERATION_CAP):
    _, cols, _ = fox_colorings(d, p, cap=cap)
    return [c for c in cols if c.surjective]


# --- dihedral representations ------------------------------------------------


def reflection(color: int, p: int):
    """The reflection of D_p fixing `color`, acting on sheets 1..p.

    The reflection fixing i sends x -> 2i - x (mod p); for p = 3 this is
    the transposition model: color 1 -> (2 3), 2 -> (1 3), 3 -> (1 2).
    """
    i = color % p
    return tuple(p_ext(2 * i - x, p) for x in range(1, p + 1))


def perm_compose(f, g):
    """(f o g)(x) = f(g(x)) for permutations of 1..n as tuples."""
    return tuple(f[g[x - 1] - 1] for x in range(1, len(f) + 1))


def coloring_to_rep(col: FoxColoring):
    """Map arc labels to reflections of D_p acting on sheets {1..p}."""
    p = col.p
    return {a + 1: reflection(p_ext(c, p), p) for a, c in enumerate(col.colors)}
