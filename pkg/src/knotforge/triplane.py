"""Tri-plane diagrams, bridge-sphere arc systems, and the K_m family.

Arc systems live on the marked sphere: punctures on the x-axis, arcs as
exact rational polylines alternating between upper and lower half-planes.
Two-bridge understrand systems come from the billiard line in the unit
square (the pillowcase picture): the square's bottom/right/top/left edges
map to the axis gaps (1,2), (2,3), (3,4) and (4,+) and the bounce sequence
of the line of direction (q, p) gives the crossing word of b(p, q)-type
waves.  A pairwise closure overlays one system with the reflection of the
other, the reflected system passing over the first everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diagram import PlanarDiagram, DiagramError
from .arcs import Arc, arcs_disjoint, axis_crossings, cross, sub, seg_intersection


class TriplaneError(ValueError):
    pass


# ---------------------------------------------------------------------------
# pillowcase waves


def _zig(x: Fraction) -> Fraction:
    r = x % 2
    return r if r <= 1 else 2 - r


def wave_events(a: int, b: int):
    """Bounce data of the two billiard arcs with direction (a, b), b odd.

    Returns two event lists [(start_x, [crossing_xs...], end_x)] in the
    axis model with punctures at 1, 2, 3, 4; crossing positions use
    bottom -> 1+pos, right -> 2+pos, top -> 4-pos, left -> 4+(1-pos).
    """
    if b % 2 == 0:
        raise TriplaneError("wave direction needs odd vertical component")
    corner_axis = {(0, 0): Fraction(1), (1, 0): Fraction(2),
                   (1, 1): Fraction(3), (0, 1): Fraction(4)}

    def edge_to_axis(edge, pos):
        if edge == "bottom":
            return 1 + pos
        if edge == "right":
            return 2 + pos
        if edge == "top":
            return 4 - pos
        return 4 + (1 - pos)

    out = []
    sides = []
    for x0 in (0, 1):
        evs = []
        for k in range(1, a):
            t = Fraction(k, a)
            x_hit = x0 + k
            y = t * b
            evs.append((t, "right" if x_hit % 2 == 1 else "left", _zig(y)))
        for l in range(1, b):
            t = Fraction(l, b)
            x = x0 + t * a
            evs.append((t, "top" if l % 2 == 1 else "bottom", _zig(x)))
        evs.sort()
        xs = [edge_to_axis(e, pos) for (_, e, pos) in evs]
        end = ((x0 + a) % 2, b % 2)
        out.append((corner_axis[(x0, 0)], xs, corner_axis[end]))
        # first excursion lives in billiard cell (x0, 0): front face iff
        # the coordinate parity sum is even
        sides.append(1 if x0 % 2 == 0 else -1)
    return out, sides


def render_staircase(arc_events, side0=1, height_range=(Fraction(1, 3), Fraction(2, 3)),
                     slant=None):
    """Exact embedded polylines from (start, crossings, end) event lists.

    Chords alternate half-planes starting on side0 (+1 upper); each chord
    is a horizontal run at a height graded by nesting depth, and the
    vertical connectors pass transversally through the axis.
    """
    chords = []
    for ai, (sx, xs, ex) in enumerate(arc_events):
        pts = [Fraction(sx)] + [Fraction(x) for x in xs] + [Fraction(ex)]
        side = side0[ai] if isinstance(side0, (list, tuple)) else side0
        for k in range(len(pts) - 1):
            chords.append([side, pts[k], pts[k + 1], ai, k])
            side = -side
    for c in chords:
        lo, hi = min(c[1], c[2]), max(c[1], c[2])
        depth = 1
        for o in chords:
            if o is c or o[0] != c[0]:
                continue
            olo, ohi = min(o[1], o[2]), max(o[1], o[2])
            if lo <= olo and ohi <= hi and (lo, hi) != (olo, ohi):
                depth += 1
        c.append(depth)
    maxdepth = max(c[5] for c in chords)
    h_lo, h_hi = height_range
    step = (h_hi - h_lo) / maxdepth
    if slant is None:
        xs_all = sorted({c[1] for c in chords} | {c[2] for c in chords})
        gaps = [b - a for a, b in zip(xs_all, xs_all[1:]) if b > a]
        slant = (min(gaps) / 4) if gaps else Fraction(1, 64)
    arcs = []
    for ai in sorted({c[3] for c in chords}):
        own = sorted((c for c in chords if c[3] == ai), key=lambda c: c[4])
        pts = [(own[0][1], Fraction(0))]
        for c in own:
            h = c[0] * (h_lo + c[5] * step)
            x1, x2 = c[1], c[2]
            if c is own[0]:
                x1 = x1 + slant * (1 if x2 > x1 else -1)
            if c is own[-1]:
                x2 = x2 - slant * (1 if x2 > x1 else -1)
            pts.append((x1, h))
            pts.append((x2, h))
        pts.append((own[-1][2], Fraction(0)))
        arcs.append(Arc(tuple(pts)))
    return arcs


def wave_arcs(a: int, b: int):
    """Embedded understrand system of the (a, b)-wave, verified disjoint."""
    events, sides = wave_events(a, b)
    arcs = render_staircase(events, side0=sides)
    if not arcs_disjoint(arcs):
        raise TriplaneError("wave rendering is not embedded")
    return arcs


def cap_arc(x1, x2, height, slant=Fraction(1, 96)) -> Arc:
    """A bridge cap over [x1, x2] at the given (signed) height."""
    h = Fraction(height)
    x1, x2 = Fraction(x1), Fraction(x2)
    s = slant if x2 > x1 else -slant
    return Arc(((x1, Fraction(0)), (x1 + s, h), (x2 - s, h), (x2, Fraction(0))))


# ---------------------------------------------------------------------------
# tangles and closures


@dataclass(frozen=True)
class Tangle:
    """A trivial tangle given by its disk-bottom arc system."""
    punctures: tuple       # x positions (Fractions), increasing
    arcs: tuple            # Arc objects with endpoints at punctures

    @property
    def strands(self):
        return len(self.arcs)

    def matching(self):
        """Pairs of puncture indices (1-based) joined by the arcs."""
        pos = {x: i + 1 for i, x in enumerate(self.punctures)}
        return tuple(tuple(sorted((pos[a.start[0]], pos[a.end[0]])))
                     for a in self.arcs)

    def validate(self):
        if len(self.punctures) != 2 * len(self.arcs):
            raise TriplaneError("puncture/strand count mismatch")
        ends = [a.start[0] for a in self.arcs] + [a.end[0] for a in self.arcs]
        if sorted(ends) != sorted(self.punctures):
            raise TriplaneError("arc endpoints do not match punctures")
        if not arcs_disjoint(self.arcs):
            raise TriplaneError("arc system is not embedded")
        return True


@dataclass(frozen=True)
class Closure:
    diagram: PlanarDiagram | None
    n_components: int
    split_circles: int     # crossing-free components
    segments_over: tuple = ()

    @property
    def is_knot(self):
        return self.n_components == 1 and self.diagram is not None


def closure(t1: Tangle, t2: Tangle, detail: bool = False):
    """The link T1 union mirror(T2): reflected T2 arcs pass over T1."""
    if t1.punctures != t2.punctures:
        raise TriplaneError("closure needs matching puncture sets")
    unders = list(t1.arcs)
    overs = [a.reflected() for a in t2.arcs]
    end_at = {}
    for tag, arcs in (("u", unders), ("o", overs)):
        for i, a in enumerate(arcs):
            for x, which in ((a.start[0], "s"), (a.end[0], "e")):
                end_at.setdefault(x, []).append((tag, i, which))
    comps = []
    used = set()
    for i0 in range(len(unders)):
        if ("u", i0) in used:
            continue
        comp = []
        tag, i, enter = "u", i0, "s"
        while (tag, i) not in used:
            used.add((tag, i))
            arc = (unders if tag == "u" else overs)[i]
            flipped = enter == "e"
            pts = tuple(reversed(arc.points)) if flipped else arc.points
            comp.append({"tag": tag, "arc": i, "flipped": flipped, "pts": pts})
            exit_x = pts[-1][0]
            nxt = [e for e in end_at[exit_x] if (e[0], e[1]) != (tag, i)]
            assert len(nxt) == 1, "puncture does not join exactly two arcs"
            tag, i, which = nxt[0]
            enter = "s" if which == "s" else "e"
        comps.append(comp)
    comp_polys = []
    piece_offsets = []
    for comp in comps:
        segs = []
        offs = []
        for piece in comp:
            offs.append((piece["tag"], piece["arc"], piece["flipped"],
                         len(segs), len(piece["pts"]) - 1))
            for (p, q) in zip(piece["pts"], piece["pts"][1:]):
                segs.append((p, q, piece["tag"]))
        comp_polys.append(segs)
        piece_offsets.append(offs)
    events = {}
    crossing_data = []
    for ci1 in range(len(comp_polys)):
        for si1, (p1, q1, tag1) in enumerate(comp_polys[ci1]):
            if tag1 != "u":
                continue
            for ci2 in range(len(comp_polys)):
                for si2, (p2, q2, tag2) in enumerate(comp_polys[ci2]):
                    if tag2 != "o":
                        continue
                    hit = _safe_intersection(p1, q1, p2, q2)
                    if hit is not None:
                        t, u, point = hit
                        cid = len(crossing_data)
                        crossing_data.append({"under": (ci1, si1, t),
                                              "over": (ci2, si2, u),
                                              "point": point})
                        events.setdefault(ci1, []).append((si1 + t, cid, "u"))
                        events.setdefault(ci2, []).append((si2 + u, cid, "o"))
    n_comp = len(comp_polys)
    info = {"comp_polys": comp_polys, "piece_offsets": piece_offsets,
            "events": {ci: sorted(evs) for ci, evs in events.items()},
            "crossings": crossing_data, "edge_of": {}, "edge_interval": {}}
    if not crossing_data:
        out = Closure(None, n_comp, n_comp)
        return (out, info) if detail else out
    edge_counter = [0]
    crossing_slots = {cid: {"u": {}, "o": {}} for cid in range(len(crossing_data))}
    split = 0
    for ci in range(n_comp):
        evs = info["events"].get(ci, [])
        if not evs:
            split += 1
            continue
        mlen = len(evs)
        for k in range(mlen):
            edge_counter[0] += 1
            eid = edge_counter[0]
            _, cid_a, role_a = evs[k]
            _, cid_b, role_b = evs[(k + 1) % mlen]
            crossing_slots[cid_a][role_a]["out"] = eid
            crossing_slots[cid_b][role_b]["in"] = eid
            info["edge_interval"][eid] = (ci, evs[k][0], evs[(k + 1) % mlen][0])
    quads = []
    for cid, data in enumerate(crossing_data):
        ci, si, t = data["under"]
        du = _direction(comp_polys[ci][si])
        ci2, si2, u = data["over"]
        do = _direction(comp_polys[ci2][si2])
        a_edge = crossing_slots[cid]["u"]["in"]
        c_edge = crossing_slots[cid]["u"]["out"]
        o_in = crossing_slots[cid]["o"]["in"]
        o_out = crossing_slots[cid]["o"]["out"]
        if cross(du, do) > 0:
            b_edge, d_edge = o_in, o_out
        else:
            b_edge, d_edge = o_out, o_in
        quads.append((a_edge, b_edge, c_edge, d_edge))
    diagram = PlanarDiagram.from_crossings(quads)
    out = Closure(diagram, n_comp, split)
    return (out, info) if detail else out


def edge_at_param(info, ci, param):
    """Diagram edge covering the point at `param` of component ci."""
    evs = info["events"].get(ci, [])
    if not evs:
        return None
    for eid, (c, lo, hi) in info["edge_interval"].items():
        if c != ci:
            continue
        if lo < hi:
            if lo <= param < hi:
                return eid
        else:  # wraps around
            if param >= lo or param < hi:
                return eid
    raise TriplaneError("parameter not covered by any edge")


def param_of_arc_point(info, tag, arc_index, t_arc):
    """Closure component and parameter of a point on a tangle arc."""
    for ci, offs in enumerate(info["piece_offsets"]):
        for (tg, ai, flipped, off, nseg) in offs:
            if tg == tag and ai == arc_index:
                local = (nseg - t_arc) if flipped else t_arc
                return ci, off + local
    raise TriplaneError("arc not found in closure")


def _direction(seg):
    p, q, _ = seg
    return sub(q, p)


def _safe_intersection(p1, q1, p2, q2):
    try:
        return seg_intersection(p1, q1, p2, q2)
    except ValueError:
        # endpoint touches at shared punctures are joins, not crossings
        shared = {p1, q1} & {p2, q2}
        if shared and all(pt[1] == 0 for pt in shared):
            return None
        raise


# ---------------------------------------------------------------------------
# tri-plane diagrams


@dataclass(frozen=True)
class TriplaneDiagram:
    """Three trivial tangles with matching punctures and endpoint colors."""
    tangles: tuple          # (A, B, C)
    colors: tuple           # color 1..p per puncture (in x order)
    p: int = 3
    singular: bool = True

    @property
    def bridges(self):
        return self.tangles[0].strands

    def closure_counts(self):
        A, B, C = self.tangles
        return (_match_components(A.matching(), B.matching()),
                _match_components(B.matching(), C.matching()),
                _match_components(C.matching(), A.matching()))

    def euler_characteristic(self):
        c1, c2, c3 = self.closure_counts()
        return c1 + c2 + c3 - self.bridges

    def genus(self):
        chi = self.euler_characteristic()
        if (2 - chi) % 2:
            raise TriplaneError("branching surface is not orientable-closed")
        return (2 - chi) // 2

    def to_json(self):
        A, B, C = self.tangles
        return {
            "b": self.bridges,
            "tangles": {name: [[list(map(str, pt)) for pt in arc.points]
                               for arc in t.arcs]
                        for name, t in (("A", A), ("B", B), ("C", C))},
            "colors": list(self.colors),
        }


def _match_components(m1, m2):
    n = max(max(p) for p in list(m1) + list(m2))
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (a, b) in list(m1) + list(m2):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return len({find(x) for x in range(1, n + 1)})


def triplane_euler(tpd: TriplaneDiagram):
    """(chi, genus) of the branching surface from component counts."""
    chi = tpd.euler_characteristic()
    return chi, (2 - chi) // 2


def orientability(tpd: TriplaneDiagram):
    """Coherent face orientations, or the odd obstruction cycle.

    Faces of the cell structure are the closure components (each bounds a
    disk, or the cone for the singular closure); edges are the strands.
    Every strand lies on two faces, which must induce opposite directions.
    Returns ("orientable", assignment) or ("non-orientable", cycle).
    """
    A, B, C = tpd.tangles
    return orientability_matchings(A.matching(), B.matching(), C.matching())


def orientability_matchings(mA, mB, mC):
    tangles_m = (mA, mB, mC)
    faces = []       # (pair name, component as list of (tangle idx, strand idx, flip))
    for (i1, i2) in ((0, 1), (1, 2), (2, 0)):
        m1, m2 = tangles_m[i1], tangles_m[i2]
        # trace components alternating strands of t1 and t2
        ends = {}
        for side, m in ((i1, m1), (i2, m2)):
            for si, (a, b) in enumerate(m):
                ends.setdefault((side, a), []).append((side, si, a, b))
                ends.setdefault((side, b), []).append((side, si, b, a))
        visited = set()
        for si0 in range(len(m1)):
            if (i1, si0) in visited:
                continue
            comp = []
            side, si = i1, si0
            pt = m1[si0][0]
            while (side, si) not in visited:
                visited.add((side, si))
                a, b = (m1 if side == i1 else m2)[si]
                frm = pt
                to = b if frm == a else a
                comp.append((side, si, frm, to))
                other = i2 if side == i1 else i1
                side, si = next((s, x) for (s, x, f, t) in ends[(other, to)])
                pt = to
            faces.append(((i1, i2), comp))
    # constraint graph: strands shared by two faces with directions
    uses = {}
    for fi, (_, comp) in enumerate(faces):
        for (side, si, frm, to) in comp:
            uses.setdefault((side, si), []).append((fi, frm < to))
    assign = {}
    order = sorted(range(len(faces)))
    for root in order:
        if root in assign:
            continue
        assign[root] = 1
        stack = [root]
        while stack:
            f = stack.pop()
            for (strand, us) in uses.items():
                if len(us) != 2:
                    raise TriplaneError("strand not on exactly two faces")
                (f1, d1), (f2, d2) = us
                if f in (f1, f2):
                    g = f2 if f == f1 else f1
                    dg, df = (d2, d1) if f == f1 else (d1, d2)
                    # opposite induced directions: same face orientations
                    # must traverse the strand oppositely
                    want = assign[f] * (-1 if df == dg else 1) * -1
                    want = -want
                    if g in assign:
                        if assign[g] != want:
                            return "non-orientable", (f, g, strand)
                    else:
                        assign[g] = want
                        stack.append(g)
    return "orientable", assign


# ---------------------------------------------------------------------------
# the K_m family


def _wave_closure_coloring(A: Tangle, B: Tangle, p=3):
    """Closure of (A, B) with detail plus one surjective p-coloring."""
    from .coloring import surjective_colorings
    cl, info = closure(A, B, detail=True)
    if cl.diagram is None:
        raise TriplaneError("closure has no crossings; cannot color")
    cols = surjective_colorings(cl.diagram, p)
    if not cols:
        raise TriplaneError("no surjective coloring")
    return cl, info, cols[0]


def km_triplane(n: int, p: int = 3) -> TriplaneDiagram:
    """The singular tri-plane family realizing Xi_3(K_m) = 2m+1, n = 2m+1.

    A is the (12m+5, 18m+9) pillowcase wave split at n poke points, B the
    two Schubert bridges plus n tiny poke bridges, C a flat non-crossing
    cap system; closure(A, B) is the mirror of K_m and the other closures
    are crossing-free 2-component unlinks.
    """
    if n < 1 or n % 2 == 0:
        raise TriplaneError("n must be odd and >= 1")
    m = (n - 1) // 2
    pp, qq = 18 * m + 9, 12 * m + 5
    base = tuple(Fraction(i) for i in (1, 2, 3, 4))
    wave = wave_arcs(qq, pp)
    bridges = [cap_arc(1, 2, Fraction(1, 5)), cap_arc(3, 4, Fraction(1, 5))]
    A0 = Tangle(base, tuple(wave))
    B0 = Tangle(base, tuple(bridges))
    cl, info, col = _wave_closure_coloring(A0, B0, p)

    punct_color = {}
    for x in base:
        ci, param = _param_of_puncture(info, x)
        eid = edge_at_param(info, ci, param)
        punct_color[x] = col.color(eid)
    c_keep = punct_color[Fraction(1)]
    if punct_color[Fraction(2)] != c_keep:
        raise TriplaneError("bridge feet colors differ; unexpected coloring")
    c_poke = punct_color[Fraction(3)]
    if punct_color[Fraction(4)] != c_poke or c_poke == c_keep:
        raise TriplaneError("unexpected bridge colors")

    spots = []
    for ai, arc in enumerate(A0.arcs):
        for (t_arc, x, upward) in axis_crossings(arc):
            if Fraction(2) < x < Fraction(3) or x > Fraction(4):
                ci, param = param_of_arc_point(info, "u", ai, t_arc)
                eid = edge_at_param(info, ci, param)
                spots.append({"arc": ai, "t": t_arc, "x": x,
                              "color": col.color(eid)})
    spots = sorted((s for s in spots if s["color"] == c_poke),
                   key=lambda s: s["x"])
    if len(spots) < n:
        raise TriplaneError(f"only {len(spots)} pokable spots for n = {n}")

    plan = _solve_combinatorics(A0, B0, spots, n, punct_color, c_poke)
    if plan is None:
        raise TriplaneError("no poke/completion combination found")
    subset, c_matching = plan
    A_arcs, B_arcs, punctures = _apply_pokes(A0, B0, subset)
    A = Tangle(tuple(punctures), tuple(A_arcs))
    B = Tangle(tuple(punctures), tuple(B_arcs))
    A.validate()
    B.validate()
    colors = tuple(punct_color.get(x, c_poke) for x in punctures)
    C = _flat_tangle(tuple(punctures), c_matching)
    tpd = TriplaneDiagram((A, B, C), colors, p)
    if tpd.closure_counts() != (1, 2, 2):
        raise TriplaneError(f"closure counts {tpd.closure_counts()} != (1, 2, 2)")
    if orientability(tpd)[0] != "orientable":
        raise TriplaneError("selected surface not orientable")
    return tpd


def _poke_matchings(A0: Tangle, B0: Tangle, subset):
    """Puncture order, A/B matchings and poke-x list after the pokes.

    Pure bookkeeping: each chosen spot (arc, t, x) splits its wave arc and
    adds a tiny bridge; punctures are ordered by x coordinate.
    """
    xs = []
    for x in A0.punctures:
        xs.append(("orig", x))
    for s in subset:
        xs.append(("poke_l", s["x"]))
        xs.append(("poke_r", s["x"]))
    def sort_key(e):
        kind, x = e
        off = {"orig": 0, "poke_l": -1, "poke_r": 1}[kind]
        return (x, off)
    xs.sort(key=sort_key)
    index = {}
    for i, e in enumerate(xs):
        index[e] = i + 1
    # A: split arcs into chains
    mA = []
    by_arc = {}
    for s in subset:
        by_arc.setdefault(s["arc"], []).append(s)
    for ai, arc in enumerate(A0.arcs):
        cuts = sorted(by_arc.get(ai, []), key=lambda s: s["t"])
        endpoints = [("orig", arc.start[0])]
        for s in cuts:
            endpoints.append(("poke_l", s["x"]))
            endpoints.append(("poke_r", s["x"]))
        endpoints.append(("orig", arc.end[0]))
        for k in range(0, len(endpoints), 2):
            mA.append(tuple(sorted((index[endpoints[k]], index[endpoints[k + 1]]))))
    mB = []
    for arc in B0.arcs:
        mB.append(tuple(sorted((index[("orig", arc.start[0])],
                                index[("orig", arc.end[0])]))))
    for s in subset:
        mB.append(tuple(sorted((index[("poke_l", s["x"])],
                                index[("poke_r", s["x"])]))))
    return xs, index, tuple(mA), tuple(mB)


def _solve_combinatorics(A0, B0, spots, n, punct_color, c_poke, cap_per_subset=4000):
    """Search poke subsets and C matchings at the matching level only.

    Subsets poking a single wave arc are tried first: the solutions found
    there follow the regular pattern that generalizes across the family.
    """
    from itertools import combinations

    def subset_order():
        seen = set()
        by_arc = {}
        for i, s in enumerate(spots):
            by_arc.setdefault(s["arc"], []).append(i)
        for ai in sorted(by_arc):
            for chosen in combinations(by_arc[ai], n):
                seen.add(chosen)
                yield chosen
        for chosen in combinations(range(len(spots)), n):
            if chosen not in seen:
                yield chosen

    for chosen in subset_order():
        subset = [spots[i] for i in chosen]
        xs, index, mA, mB = _poke_matchings(A0, B0, subset)
        if _match_components(mA, mB) != 1:
            continue
        colors = []
        for kind, x in xs:
            colors.append(punct_color[x] if kind == "orig" else c_poke)
        npts = len(xs)
        count = 0
        for cand in _colored_noncrossing(list(range(1, npts + 1)), colors):
            count += 1
            if count > cap_per_subset:
                break
            if _match_components(cand, mA) != 2:
                continue
            if _match_components(mB, cand) != 2:
                continue
            if orientability_matchings(mA, mB, cand)[0] != "orientable":
                continue
            return subset, cand
    return None


def _param_of_puncture(info, x):
    """Component and parameter of the puncture vertex at (x, 0)."""
    for ci, segs in enumerate(info["comp_polys"]):
        for si, (pp, qq, tag) in enumerate(segs):
            if pp == (x, 0):
                return ci, Fraction(si)
    raise TriplaneError("puncture vertex not found")


def _apply_pokes(A0: Tangle, B0: Tangle, spots):
    """Split the wave arcs at the chosen axis crossings; add tiny bridges."""
    xs_all = sorted({pt[0] for arc in list(A0.arcs) + list(B0.arcs)
                     for pt in arc.points}
                    | set(A0.punctures)
                    | {s["x"] for s in spots})
    gaps = [b - a for a, b in zip(xs_all, xs_all[1:]) if b != a]
    delta = min(gaps) / 8
    eps = delta / 2
    by_arc = {}
    for s in spots:
        by_arc.setdefault(s["arc"], []).append(s)
    A_arcs = []
    B_arcs = list(B0.arcs)
    new_punctures = []
    for ai, arc in enumerate(A0.arcs):
        cuts = sorted(by_arc.get(ai, []), key=lambda s: s["t"])
        if not cuts:
            A_arcs.append(arc)
            continue
        pts = list(arc.points)
        pieces = []
        start_idx = 0
        prev_tail = None
        for s in cuts:
            si = int(s["t"])  # crossing inside segment si
            x_c = s["x"]
            left, right = x_c - delta, x_c + delta
            piece_pts = ([prev_tail] if prev_tail else []) + pts[start_idx: si + 1] + [(left, Fraction(0))]
            pieces.append(piece_pts)
            prev_tail = (right, Fraction(0))
            start_idx = si + 1
            new_punctures.extend([left, right])
            B_arcs.append(cap_arc(left, right, eps, slant=delta / 4))
        pieces.append([prev_tail] + pts[start_idx:])
        for piece in pieces:
            A_arcs.append(Arc(tuple(piece)))
    punctures = sorted(set(A0.punctures) | set(new_punctures))
    return A_arcs, B_arcs, punctures


def _noncrossing_matchings(points):
    """All non-crossing perfect matchings of an even list of indices."""
    if not points:
        yield ()
        return
    first = points[0]
    for k in range(1, len(points), 2):
        left = points[1:k]
        right = points[k + 1:]
        for ml in _noncrossing_matchings(left):
            for mr in _noncrossing_matchings(right):
                yield ((first, points[k]),) + ml + mr


def _colored_noncrossing(points, colors):
    """Non-crossing perfect matchings pairing equal colors only."""
    if not points:
        yield ()
        return
    first = points[0]
    for k in range(1, len(points), 2):
        if colors[points[k] - 1] != colors[first - 1]:
            continue
        left = points[1:k]
        right = points[k + 1:]
        for ml in _colored_noncrossing(left, colors):
            for mr in _colored_noncrossing(right, colors):
                yield ((first, points[k]),) + ml + mr


def _flat_completions(A: Tangle, B: Tangle, colors):
    """All flat cap tangles C with c(B,C) = c(C,A) = 2, lazily."""
    npts = len(A.punctures)
    mA, mB = A.matching(), B.matching()
    for cand in _colored_noncrossing(list(range(1, npts + 1)), colors):
        if _match_components(cand, mA) != 2:
            continue
        if _match_components(mB, cand) != 2:
            continue
        yield _flat_tangle(A.punctures, cand)


def _find_flat_completion(A: Tangle, B: Tangle, colors) -> Tangle:
    for C in _flat_completions(A, B, colors):
        return C
    raise TriplaneError("no flat completion tangle found")


def _flat_tangle(punctures, matching) -> Tangle:
    """Nested upper caps realizing a non-crossing matching."""
    xs = list(punctures)
    pairs = [(xs[a - 1], xs[b - 1]) for (a, b) in matching]
    depth = {}
    for (x1, x2) in pairs:
        lo, hi = min(x1, x2), max(x1, x2)
        depth[(x1, x2)] = 1 + sum(1 for (y1, y2) in pairs
                                  if lo < min(y1, y2) and max(y1, y2) < hi)
    maxd = max(depth.values())
    arcs = []
    gapmin = min(b - a for a, b in zip(xs, xs[1:]))
    for (x1, x2) in pairs:
        h = Fraction(3, 4) + Fraction(depth[(x1, x2)], 2 * maxd)
        arcs.append(cap_arc(x1, x2, h, slant=gapmin / 16))
    t = Tangle(tuple(punctures), tuple(arcs))
    t.validate()
    return t
