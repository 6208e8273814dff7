"""Exact planar polyline geometry for arc systems on the marked sphere.

Arcs are polylines with rational coordinates; punctures sit on the x-axis.
All intersection tests, crossing signs and sidedness predicates are exact.
The braid-twist construction proposes vertices in floating point and snaps
them to rationals; every topological conclusion drawn afterwards (crossing
patterns, cut crossings, embeddedness) is verified exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import atan2, cos, pi, sin


Point = tuple  # (Fraction, Fraction)


def pt(x, y) -> Point:
    return (Fraction(x), Fraction(y))


def sub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


def dot(u, v):
    return u[0] * v[0] + u[1] * v[1]


def seg_intersection(p1, p2, q1, q2):
    """Proper interior intersection of open segments, or None.

    Returns (t, u, point) with p = p1 + t*(p2-p1), 0 < t < 1, 0 < u < 1.
    Touching endpoints or collinear overlaps raise (the arc systems used
    here are required to be in general position).
    """
    r = sub(p2, p1)
    s = sub(q2, q1)
    denom = cross(r, s)
    qp = sub(q1, p1)
    if denom == 0:
        if cross(qp, r) == 0:
            # collinear: forbid overlap
            rr = dot(r, r)
            t0 = dot(qp, r) / rr
            t1 = t0 + dot(s, r) / rr
            lo, hi = min(t0, t1), max(t0, t1)
            if hi > 0 and lo < 1:
                raise ValueError("collinear overlapping segments")
        return None
    t = cross(qp, s) / denom
    u = cross(qp, r) / denom
    if 0 < t < 1 and 0 < u < 1:
        point = (p1[0] + t * r[0], p1[1] + t * r[1])
        return (t, u, point)
    if (t in (0, 1) and 0 <= u <= 1) or (u in (0, 1) and 0 <= t <= 1):
        raise ValueError("segments touch at an endpoint; not in general position")
    return None


@dataclass(frozen=True)
class Arc:
    """Embedded polyline from puncture to puncture.

    Endpoints lie on the x-axis at puncture positions; interior vertices
    avoid the axis except at transverse crossings inside segments.
    """
    points: tuple  # tuple of (Fraction, Fraction)

    @property
    def start(self):
        return self.points[0]

    @property
    def end(self):
        return self.points[-1]

    def segments(self):
        return list(zip(self.points, self.points[1:]))

    def reversed(self):
        return Arc(tuple(reversed(self.points)))

    def reflected(self):
        """Mirror through the x-axis."""
        return Arc(tuple((x, -y) for (x, y) in self.points))

    def start_direction(self):
        return sub(self.points[1], self.points[0])

    def end_direction(self):
        """Direction pointing away from the endpoint, into the arc."""
        return sub(self.points[-2], self.points[-1])


def arc_pair_intersections(a: Arc, b: Arc, skip_shared_endpoints=False):
    """All interior crossings of two arcs, as (ta_global, tb_global, point).

    Global parameters are (segment index + local t), strictly increasing
    along each arc.  With skip_shared_endpoints, segment pairs that touch
    exactly at a common arc endpoint (a shared puncture) are ignored.
    """
    shared = ({a.start, a.end} & {b.start, b.end}) if skip_shared_endpoints else set()
    out = []
    for i, (p1, p2) in enumerate(a.segments()):
        for j, (q1, q2) in enumerate(b.segments()):
            if shared and ({p1, p2} & {q1, q2} & shared):
                continue
            hit = seg_intersection(p1, p2, q1, q2)
            if hit is not None:
                t, u, point = hit
                out.append((i + t, j + u, point))
    return out


def arcs_disjoint(arcs):
    """Exact check that a family of arcs is pairwise and self disjoint."""
    for a in arcs:
        segs = a.segments()
        for i in range(len(segs)):
            for j in range(i + 2, len(segs)):
                if seg_intersection(*segs[i], *segs[j]) is not None:
                    return False
    for i in range(len(arcs)):
        for j in range(i + 1, len(arcs)):
            shared = {arcs[i].start, arcs[i].end} & {arcs[j].start, arcs[j].end}
            if shared:
                return False
            if arc_pair_intersections(arcs[i], arcs[j]):
                return False
    return True


def axis_crossings(a: Arc):
    """Transverse x-axis crossings as (t_global, x, upward) sorted along a."""
    out = []
    for i, (p1, p2) in enumerate(a.segments()):
        y1, y2 = p1[1], p2[1]
        if y1 == 0 or y2 == 0:
            continue
        if (y1 > 0) != (y2 > 0):
            t = y1 / (y1 - y2)
            x = p1[0] + t * (p2[0] - p1[0])
            out.append((i + t, x, y2 > 0))
    out.sort()
    return out


def snap(value, denom=720720):
    """Snap a float to a nearby Fraction with bounded denominator."""
    return Fraction(round(value * denom), denom)


def snap_point(xy, denom=720720):
    return (snap(xy[0], denom), snap(xy[1], denom))


# --- braid twists ------------------------------------------------------------
#
# The twist construction runs in floating point: arcs are dense polylines,
# each half-twist is the standard polar interpolation supported on a disk
# around the two punctures, and a float empty-triangle pass keeps vertex
# counts small.  The final system is snapped to rational coordinates and
# every topological fact used afterwards is re-established exactly.


def _fpt(p):
    return (float(p[0]), float(p[1]))


def make_twist(punctures, i, sign):
    """The polar half-twist map swapping punctures i, i+1, as a function."""
    a = float(punctures[i - 1])
    b = float(punctures[i])
    cx = (a + b) / 2.0
    margin = (b - a) * 0.35
    r0 = (b - a) / 2.0 + margin / 3.0
    R = (b - a) / 2.0 + margin

    def apply(p):
        x, y = p
        dx, dy = x - cx, y
        rho = (dx * dx + dy * dy) ** 0.5
        if rho >= R:
            return (x, y)
        sh = sign * pi if rho <= r0 else sign * pi * (R - rho) / (R - r0)
        ca, sa = cos(sh), sin(sh)
        return (cx + dx * ca - dy * sa, dx * sa + dy * ca)

    return apply


def adaptive_image(F, p, q, tol=0.02, depth=0, max_depth=18):
    """Polyline approximation of F([p, q]) within chord tolerance tol."""
    fp, fq = F(p), F(q)
    mid = ((p[0] + q[0]) / 2.0, (p[1] + q[1]) / 2.0)
    fm = F(mid)
    # distance of fm from chord fp-fq
    vx, vy = fq[0] - fp[0], fq[1] - fp[1]
    wx, wy = fm[0] - fp[0], fm[1] - fp[1]
    L2 = vx * vx + vy * vy
    if L2 == 0:
        err = ((fm[0] - fp[0]) ** 2 + (fm[1] - fp[1]) ** 2) ** 0.5
    else:
        t = max(0.0, min(1.0, (wx * vx + wy * vy) / L2))
        ex, ey = wx - t * vx, wy - t * vy
        err = (ex * ex + ey * ey) ** 0.5
    if (err <= tol and depth >= 2) or depth >= max_depth:
        return [fp, fm, fq]
    left = adaptive_image(F, p, mid, tol, depth + 1, max_depth)
    right = adaptive_image(F, mid, q, tol, depth + 1, max_depth)
    return left + right[1:]


def _f_orient(a, b, c):
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _f_seg_cross(p1, p2, q1, q2, eps=1e-9):
    d1 = _f_orient(q1, q2, p1)
    d2 = _f_orient(q1, q2, p2)
    d3 = _f_orient(p1, p2, q1)
    d4 = _f_orient(p1, p2, q2)
    if ((d1 > -eps and d2 < eps) or (d1 < eps and d2 > -eps)) and \
       ((d3 > -eps and d4 < eps) or (d3 < eps and d4 > -eps)):
        if max(min(p1[0], p2[0]), min(q1[0], q2[0])) <= \
           min(max(p1[0], p2[0]), max(q1[0], q2[0])) + eps and \
           max(min(p1[1], p2[1]), min(q1[1], q2[1])) <= \
           min(max(p1[1], p2[1]), max(q1[1], q2[1])) + eps:
            return True
    return False


def _f_point_in_tri(p, a, b, c, eps=1e-9):
    d1, d2, d3 = _f_orient(a, b, p), _f_orient(b, c, p), _f_orient(c, a, p)
    has_neg = d1 < -eps or d2 < -eps or d3 < -eps
    has_pos = d1 > eps or d2 > eps or d3 > eps
    return not (has_neg and has_pos)


def simplify_float(pts, others, punctures):
    """Greedy empty-triangle vertex removal on float polylines."""
    pts = list(pts)
    other_segs = [seg for o in others for seg in zip(o, o[1:])]
    changed = True
    while changed:
        changed = False
        k = 1
        while k < len(pts) - 1:
            a, b, c = pts[k - 1], pts[k], pts[k + 1]
            ok = True
            if abs(_f_orient(a, b, c)) > 1e-15:
                for x in punctures:
                    if _f_point_in_tri((float(x), 0.0), a, b, c):
                        ok = False
                        break
                if ok:
                    segs = list(zip(pts, pts[1:]))
                    for idx, (u, v) in enumerate(segs):
                        if idx in (k - 1, k):
                            continue
                        if (_f_seg_cross(u, v, a, c) or _f_point_in_tri(u, a, b, c)
                                or _f_point_in_tri(v, a, b, c)):
                            ok = False
                            break
                if ok:
                    for (u, v) in other_segs:
                        if (_f_seg_cross(u, v, a, c) or _f_point_in_tri(u, a, b, c)
                                or _f_point_in_tri(v, a, b, c)):
                            ok = False
                            break
            if ok:
                del pts[k]
                changed = True
            else:
                k += 1
    return pts


def braid_on_caps(word, punctures, caps, tol=0.02):
    """Arc system of (braid word) applied to the given cap matching.

    caps: list of puncture-index pairs (1-based), realized as nested lower
    semicircle polylines; the word acts by composed half-twists (first
    letter applied first).  Returns exact Arc objects verified disjoint.
    """
    P = [float(x) for x in punctures]
    maps = [make_twist(punctures, abs(g), 1 if g > 0 else -1) for g in word]

    def F(p):
        for f in maps:
            p = f(p)
        return p

    spacing = min(b - a for a, b in zip(P, P[1:])) if len(P) > 1 else 1.0
    depth = {}
    for (i, j) in caps:
        lo, hi = min(i, j), max(i, j)
        d = sum(1 for (a, b) in caps if min(a, b) < lo and max(a, b) > hi)
        depth[(i, j)] = spacing * (0.3 + 0.22 * d)
    float_arcs = []
    for (i, j) in caps:
        y = -depth[(i, j)]
        base = [(P[i - 1], 0.0), (P[i - 1], y), (P[j - 1], y), (P[j - 1], 0.0)]
        pts = []
        for (p, q) in zip(base, base[1:]):
            img = adaptive_image(F, p, q, tol)
            if pts:
                pts.extend(img[1:])
            else:
                pts.extend(img)
        float_arcs.append(pts)
    float_arcs = [simplify_float(a, [b for b in float_arcs if b is not a], punctures)
                  for a in float_arcs]
    return snap_system(float_arcs, punctures)


def snap_system(float_arcs, punctures, denoms=(720720, 98280, 510510, 1441440)):
    """Snap float arc systems to exact rationals and verify embeddedness."""
    last_err = None
    for denom in denoms:
        try:
            out = []
            for pts in float_arcs:
                spts = [snap_point(p, denom) for p in pts]
                spts[0] = _snap_end(pts[0], punctures)
                spts[-1] = _snap_end(pts[-1], punctures)
                spts = _dedupe(spts)
                out.append(Arc(tuple(spts)))
            if not arcs_disjoint(out):
                raise ValueError("snapped arcs are not disjoint")
            for arc in out:
                for (x, y) in arc.points[1:-1]:
                    if y == 0:
                        raise ValueError("interior vertex on the axis")
            return out
        except ValueError as e:
            last_err = e
    raise ValueError(f"could not snap arc system: {last_err}")


def _snap_end(xy, punctures):
    x, y = xy
    best = min(punctures, key=lambda p: abs(float(p) - x))
    if abs(float(best) - x) > 1e-6 or abs(y) > 1e-6:
        raise ValueError("arc endpoint is not at a puncture")
    return (Fraction(best), Fraction(0))


def _dedupe(points):
    out = [points[0]]
    for p in points[1:]:
        if p != out[-1]:
            out.append(p)
    return out
