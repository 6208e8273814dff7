"""Homology of irregular dihedral branched covers.

Pipeline: Wirtinger presentation of the knot group, Reidemeister-Schreier
rewriting for the index-p subgroup picked out by a surjective coloring
(the stabilizer of a sheet under the action of D_p on Z/p), branching
relations that kill the meridian lifts closing at fixed sheets, then
abelianization and Smith normal form.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import FoxColoring, coloring_to_rep, under_arc_classes
from .diagram import PlanarDiagram
from .exact import smith_normal_form


class CoverError(ValueError):
    pass


@dataclass(frozen=True)
class GroupPresentation:
    n_generators: int
    relators: tuple  # tuples of nonzero ints; sign = inverse

    @property
    def deficiency(self):
        return self.n_generators - len(self.relators)

    def abelianization(self):
        """(rank, invariant factors) of the abelianized group."""
        rows = []
        for rel in self.relators:
            row = [0] * self.n_generators
            for letter in rel:
                row[abs(letter) - 1] += 1 if letter > 0 else -1
            rows.append(row)
        if not rows:
            return self.n_generators, []
        res = smith_normal_form(rows)
        torsion = [f for f in res.factors if f not in (0, 1)]
        return self.n_generators - res.rank, torsion


def wirtinger(d: PlanarDiagram) -> GroupPresentation:
    """One generator per under-arc, one conjugation relator per crossing.

    At a crossing with incoming under-arc a, over-arc b, outgoing under-arc
    c and sign s, the relator is b^s a b^-s c^-1.
    """
    if d.arc_count == 0:
        return GroupPresentation(1, ())
    classes, index = under_arc_classes(d)
    rels = []
    for ci, (a, b, c, _) in enumerate(d.crossings):
        s = d.crossing_sign(ci)
        ga, gb, gc = index[a] + 1, index[b] + 1, index[c] + 1
        if s > 0:
            rels.append((gb, ga, -gb, -gc))
        else:
            rels.append((-gb, ga, gb, -gc))
    return GroupPresentation(len(classes), tuple(rels))


def _perm_apply(perm, x):
    return perm[x - 1]


def _perm_inverse(perm):
    inv = [0] * len(perm)
    for i, v in enumerate(perm):
        inv[v - 1] = i + 1
    return tuple(inv)


def reidemeister_schreier(pres: GroupPresentation, rep, p: int,
                          basepoint: int = 1):
    """Presentation of the stabilizer-of-basepoint subgroup of index p.

    rep maps generator index (1..n) to a permutation of 1..p (a tuple);
    the action must be transitive, which for dihedral representations is
    equivalent to surjectivity of the coloring.

    Returns (presentation, generator_names) where generator_names[i] is the
    (generator, sheet) pair of the i-th Schreier generator.
    """
    n = pres.n_generators
    inv = {g: _perm_inverse(rep[g]) for g in rep}
    # BFS transversal over the Schreier coset graph on sheets
    tree_pairs = set()  # (gen, sheet) pairs whose Schreier generator is trivial
    seen = {basepoint}
    queue = [basepoint]
    while queue:
        sheet = queue.pop(0)
        for g in range(1, n + 1):
            t = _perm_apply(rep[g], sheet)
            if t not in seen:
                seen.add(t)
                tree_pairs.add((g, sheet))
                queue.append(t)
    if len(seen) != p:
        raise CoverError("representation is not transitive on sheets "
                         "(coloring not surjective)")
    gen_index = {}
    names = []
    for g in range(1, n + 1):
        for sheet in range(1, p + 1):
            if (g, sheet) not in tree_pairs:
                gen_index[(g, sheet)] = len(names) + 1
                names.append((g, sheet))

    def schreier(g, sheet):
        """Index of y_{g,sheet}, or None when it is a tree generator."""
        return gen_index.get((g, sheet))

    relators = []
    for rel in pres.relators:
        for sheet in range(1, p + 1):
            word = []
            cur = sheet
            for letter in rel:
                g = abs(letter)
                if letter > 0:
                    y = schreier(g, cur)
                    if y is not None:
                        word.append(y)
                    cur = _perm_apply(rep[g], cur)
                else:
                    cur = _perm_apply(inv[g], cur)
                    y = schreier(g, cur)
                    if y is not None:
                        word.append(-y)
            relators.append(tuple(word))
    return GroupPresentation(len(names), tuple(relators)), names


@dataclass(frozen=True)
class CoverHomology:
    rank: int
    torsion: tuple

    @property
    def trivial(self):
        return self.rank == 0 and not self.torsion

    def to_json(self):
        return {"rank": self.rank, "torsion": list(self.torsion)}


def unbranched_cover_presentation(d: PlanarDiagram, col: FoxColoring,
                                  basepoint: int = 1):
    if not col.surjective:
        raise CoverError("coloring is not surjective; cover index is not p")
    pres = wirtinger(d)
    classes, _ = under_arc_classes(d)
    rep_arcs = coloring_to_rep(col)
    rep = {i + 1: rep_arcs[cls[0]] for i, cls in enumerate(classes)}
    return reidemeister_schreier(pres, rep, col.p, basepoint), rep


def branched_h1(d: PlanarDiagram, col: FoxColoring,
                basepoint: int = 1) -> CoverHomology:
    """H_1 of the p-fold irregular dihedral cover of S^3 branched along K.

    Adjoins, for every arc and every sheet fixed by the arc's reflection,
    the relation killing the meridian lift that closes there.
    """
    (pres, names), rep = unbranched_cover_presentation(d, col, basepoint)
    gen_index = {name: i + 1 for i, name in enumerate(names)}
    extra = []
    n_wirt = len(under_arc_classes(d)[0])
    for g in range(1, n_wirt + 1):
        perm = rep[g]
        done = set()
        for sheet in range(1, col.p + 1):
            if sheet in done:
                continue
            # each cycle of the meridian action bounds a branching disk
            # upstairs; kill the lift of m^len starting at this sheet
            cycle = [sheet]
            cur = _perm_apply(perm, sheet)
            while cur != sheet:
                cycle.append(cur)
                cur = _perm_apply(perm, cur)
            done.update(cycle)
            word = []
            for s in cycle:
                y = gen_index.get((g, s))
                if y is not None:
                    word.append(y)
            if word:
                extra.append(tuple(word))
    relators = pres.relators + tuple(extra)
    full = GroupPresentation(pres.n_generators, relators)
    rank, torsion = full.abelianization()
    return CoverHomology(rank, tuple(torsion))
