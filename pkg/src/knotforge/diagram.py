"""Planar knot/link diagrams as PD crossing lists.

A crossing is a quadruple (a, b, c, d) of arc labels read counterclockwise
starting at the incoming under-strand, so the under-strand runs a -> c and
the over-strand occupies b and d.  Arc labels are 1..arc_count and every
label appears exactly twice.  Faces come from the rotation system and must
satisfy V - E + F = 2.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field


class DiagramError(ValueError):
    pass


@dataclass(frozen=True)
class PlanarDiagram:
    crossings: tuple
    arc_count: int
    outer_face: int | None = None  # face index to shade black; None = largest
    braid: tuple | None = None     # optional braid word provenance
    braid_strands: int | None = None

    # -- construction -----------------------------------------------------

    @staticmethod
    def from_crossings(crossings, outer_face=None, braid=None, braid_strands=None):
        crossings = tuple(tuple(int(x) for x in c) for c in crossings)
        if not crossings:
            raise DiagramError("empty diagram (use PlanarDiagram.unknot() for the 0-crossing unknot)")
        labels = [x for c in crossings for x in c]
        n = max(labels)
        seen = {}
        for x in labels:
            if x < 1:
                raise DiagramError("arc labels must be positive")
            seen[x] = seen.get(x, 0) + 1
        for x in range(1, n + 1):
            if seen.get(x, 0) != 2:
                raise DiagramError(f"arc label {x} appears {seen.get(x, 0)} times, expected 2")
        d = PlanarDiagram(crossings, n, outer_face, braid, braid_strands)
        d.validate()
        return d

    @staticmethod
    def unknot():
        """The 0-crossing round unknot, admitted as a special value."""
        return PlanarDiagram((), 0, None, (), 1)

    def validate(self):
        if self.arc_count == 0:
            return
        V = len(self.crossings)
        E = 2 * V
        F = len(self.faces())
        if V - E + F != 2:
            raise DiagramError(f"rotation system is not planar: V-E+F = {V - E + F}")
        self.orientations()  # raises if inconsistent

    # -- genus-0 combinatorics --------------------------------------------

    def darts(self):
        return [(ci, s) for ci in range(len(self.crossings)) for s in range(4)]

    def _mate(self):
        """Map each dart (crossing, slot) to the other occurrence of its arc."""
        occ = {}
        mate = {}
        for ci, c in enumerate(self.crossings):
            for s, a in enumerate(c):
                if a in occ:
                    mate[occ[a]] = (ci, s)
                    mate[(ci, s)] = occ[a]
                else:
                    occ[a] = (ci, s)
        return mate

    def faces(self):
        """Faces as dart cycles; next dart = mate then rotate one slot ccw."""
        if self.arc_count == 0:
            return [()]
        mate = self._mate()
        unvisited = set(self.darts())
        out = []
        while unvisited:
            start = min(unvisited)
            cyc = []
            d = start
            while True:
                cyc.append(d)
                unvisited.discard(d)
                cj, sj = mate[d]
                d = (cj, (sj + 1) % 4)
                if d == start:
                    break
            out.append(tuple(cyc))
        return out

    def face_of_dart(self):
        fmap = {}
        for fi, cyc in enumerate(self.faces()):
            for d in cyc:
                fmap[d] = fi
        return fmap

    def corner_face(self, ci, s):
        """Face at the corner of crossing ci between slots s and s+1."""
        return self._corner_faces()[(ci, s)]

    def _corner_faces(self):
        # The face walk leaves crossing cj through the corner between the
        # arrival slot sj and sj+1; record that corner for the cycle's face.
        try:
            return self.__dict__["_corner_cache"]
        except KeyError:
            pass
        mate = self._mate()
        corners = {}
        for fi, cyc in enumerate(self.faces()):
            for d in cyc:
                cj, sj = mate[d]
                corners[(cj, sj)] = fi
        object.__setattr__(self, "_corner_cache", corners)
        return corners

    # -- orientation -------------------------------------------------------

    def orientations(self):
        """Role of every dart: 'in' (head of its arc) or 'out' (tail).

        Under-strand roles are forced (slot 0 in, slot 2 out); over-strand
        roles are solved by propagation: each arc has exactly one head and
        one tail, and at a crossing slot 1 and slot 3 take opposite roles.
        """
        try:
            return self.__dict__["_orient_cache"]
        except KeyError:
            pass
        mate = self._mate()
        role = {}

        def set_role(d, r):
            stack = [(d, r)]
            while stack:
                d, r = stack.pop()
                if d in role:
                    if role[d] != r:
                        raise DiagramError("inconsistent strand orientations")
                    continue
                role[d] = r
                other = mate[d]
                stack.append((other, "out" if r == "in" else "in"))
                ci, s = d
                if s in (1, 3):
                    partner = (ci, 4 - s)  # 1 <-> 3
                    stack.append((partner, "out" if r == "in" else "in"))

        for ci in range(len(self.crossings)):
            set_role((ci, 0), "in")
            set_role((ci, 2), "out")
        # components lying entirely over everything else stay unforced
        for d in self.darts():
            if d not in role:
                set_role(d, "in")
        object.__setattr__(self, "_orient_cache", role)
        return role

    def successor(self):
        """Next arc along the strand for each arc (following orientation)."""
        role = self.orientations()
        succ = {}
        for ci, c in enumerate(self.crossings):
            ins = [s for s in range(4) if role[(ci, s)] == "in"]
            for s in ins:
                # incoming under (slot 0) continues as outgoing under (2);
                # incoming over continues as the opposite over slot
                out_slot = (s + 2) % 4
                succ[c[s]] = c[out_slot]
        return succ

    def components(self):
        """Arc labels grouped by diagram component."""
        if self.arc_count == 0:
            return [(0,)]
        succ = self.successor()
        seen = set()
        comps = []
        for a in range(1, self.arc_count + 1):
            if a in seen:
                continue
            cyc = []
            x = a
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = succ[x]
            comps.append(tuple(cyc))
        return comps

    def n_components(self):
        return len(self.components())

    def is_knot(self):
        return self.n_components() == 1

    def crossing_sign(self, ci):
        """+1 when the over-strand crosses the under-strand left to right.

        With (a,b,c,d) counterclockwise from the incoming under-strand, the
        over-strand runs d->b (sign +1) or b->d (sign -1).
        """
        role = self.orientations()
        return 1 if role[(ci, 3)] == "in" else -1

    def writhe(self):
        return sum(self.crossing_sign(ci) for ci in range(len(self.crossings)))

    # -- surgeries ----------------------------------------------------------

    def mirror(self):
        """Mirror image: reflect the plane, switching every crossing."""
        if self.arc_count == 0:
            return self
        flipped = tuple((a, d, c, b) for (a, b, c, d) in self.crossings)
        mb = None
        if self.braid is not None:
            mb = tuple(-g for g in self.braid)
        return PlanarDiagram.from_crossings(flipped, braid=mb,
                                            braid_strands=self.braid_strands)

    def connected_sum(self, other: "PlanarDiagram") -> "PlanarDiagram":
        """Connected sum of two knot diagrams.

        Splices the highest-labeled arc of self with the lowest-labeled arc
        of the shifted other diagram; immaterial for the unoriented
        invariants computed here.
        """
        if not self.is_knot() or not other.is_knot():
            raise DiagramError("connected sum requires two knot diagrams")
        if other.arc_count == 0:
            return self
        if self.arc_count == 0:
            return other
        n1 = self.arc_count
        x = n1  # highest arc of d1
        y = n1 + 1  # lowest arc of shifted d2
        c2 = [tuple(v + n1 for v in c) for c in other.crossings]
        role1 = self.orientations()
        role2 = other.orientations()
        # head occurrence of x in d1 and of y in shifted d2 get swapped
        crossings = [list(c) for c in self.crossings] + [list(c) for c in c2]
        nc1 = len(self.crossings)

        def head_pos(crossings_list, label, role, offset, orig_label):
            for ci, c in enumerate(crossings_list):
                for s in range(4):
                    if c[s] == label:
                        if role[((ci - offset) if offset else ci, s)] == "in":
                            return ci, s
            raise AssertionError("head occurrence not found")

        hx = head_pos(crossings[:nc1], x, role1, 0, x)
        hy = None
        for ci in range(nc1, len(crossings)):
            for s in range(4):
                if crossings[ci][s] == y and role2[(ci - nc1, s)] == "in":
                    hy = (ci, s)
        assert hy is not None
        crossings[hx[0]][hx[1]] = y
        crossings[hy[0]][hy[1]] = x
        return PlanarDiagram.from_crossings(crossings)

    # -- serialization -------------------------------------------------------

    def to_pd_text(self):
        return " ".join("X[%d,%d,%d,%d]" % c for c in self.crossings)

    def to_json(self):
        return {"crossings": [list(c) for c in self.crossings]}


# ---------------------------------------------------------------------------


_PD_TOKEN = re.compile(r"X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]")


def parse_pd(text: str) -> PlanarDiagram:
    """Parse whitespace-separated X[a,b,c,d] tokens (or a JSON object)."""
    text = text.strip()
    if not text:
        raise DiagramError("empty diagram")
    if text.startswith("{"):
        data = json.loads(text)
        return PlanarDiagram.from_crossings(data["crossings"])
    tokens = _PD_TOKEN.findall(text)
    cleaned = _PD_TOKEN.sub("", text).strip()
    if cleaned:
        raise DiagramError(f"malformed PD code near {cleaned[:20]!r}")
    if not tokens:
        raise DiagramError("no crossings found")
    crossings = [tuple(int(x) for x in t) for t in tokens]
    # normalize arbitrary labels to 1..n
    labels = sorted({x for c in crossings for x in c})
    remap = {old: i + 1 for i, old in enumerate(labels)}
    crossings = [tuple(remap[x] for x in c) for c in crossings]
    return PlanarDiagram.from_crossings(crossings)


def braid_closure(word, strands=None) -> PlanarDiagram:
    """Trace closure of a braid word (i means sigma_i, -i its inverse).

    Positive sigma_i takes the strand in position i over position i+1.
    """
    word = list(word)
    if strands is None:
        strands = (max(abs(g) for g in word) + 1) if word else 1
    if not word:
        return PlanarDiagram.unknot()
    # running edge label per position; fresh labels after each crossing
    nxt = [0] * (strands + 1)
    cur = {}
    fresh = [0]

    def new_edge():
        fresh[0] += 1
        return fresh[0]

    for i in range(1, strands + 1):
        cur[i] = new_edge()
    start = dict(cur)
    crossings = []
    for g in word:
        i = abs(g)
        if not 1 <= i < strands:
            raise DiagramError("braid generator out of range")
        L, R = cur[i], cur[i + 1]
        Lt, Rt = new_edge(), new_edge()
        if g > 0:
            # position i passes over; under-strand is R (bottom-right),
            # which runs BR -> TL; ccw order (BR, TR, TL, BL)
            crossings.append((R, Rt, Lt, L))
        else:
            # under-strand is L (bottom-left), runs BL -> TR;
            # ccw order from BL is (BL, BR, TR, TL)
            crossings.append((L, R, Rt, Lt))
        cur[i], cur[i + 1] = Lt, Rt
    # close up: top label at position j identifies with the start label
    ident = {cur[i]: start[i] for i in range(1, strands + 1)}

    def resolve(x):
        while x in ident and ident[x] != x:
            x = ident[x]
        return x

    crossings = [tuple(resolve(x) for x in c) for c in crossings]
    labels = sorted({x for c in crossings for x in c})
    remap = {old: k + 1 for k, old in enumerate(labels)}
    crossings = [tuple(remap[x] for x in c) for c in crossings]
    return PlanarDiagram.from_crossings(crossings, braid=tuple(word),
                                        braid_strands=strands)
