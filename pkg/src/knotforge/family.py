"""Generators for the K_m knot family and the small knot catalog.

K_m is the two-bridge knot with fraction (18m+9)/(6m+2), drawn as the
alternating diagram whose white Tait graph is the pentagon X1..X5 with a
doubled edge X1X2, single edges X2X3, X3X4, X4X5, X5X1, and a 2m-fold
chord bundle X1X3.  The diagram is produced by the medial construction,
which also pins the white-region labelling X_1..X_5 and the unbounded
face, so the Goeritz pipeline reproduces the published matrices verbatim.
"""

from __future__ import annotations

from .diagram import PlanarDiagram, DiagramError


def _km_tait_faces(m: int):
    """Directed black-face cycles of the K_m white Tait graph.

    Edges: A1, A2 (X1->X2), C1..C<2m> (X1->X3), E23, E34, E45, E51.
    Every edge appears once forward (+) and once backward (-) over all
    cycles; bounded cycles keep the face on the left, the outer cycle
    closes the sphere.
    """
    chords = [f"C{i}" for i in range(1, 2 * m + 1)]
    orient = {"A1": (1, 2), "A2": (1, 2), "E23": (2, 3), "E34": (3, 4),
              "E45": (4, 5), "E51": (5, 1)}
    for c in chords:
        orient[c] = (1, 3)
    faces = []
    faces.append([("A1", 1), ("A2", -1)])  # bigon between the doubled edge
    if m == 0:
        faces.append([("A2", 1), ("E23", 1), ("E34", 1), ("E45", 1), ("E51", 1)])
    else:
        faces.append([("A2", 1), ("E23", 1), (chords[0], -1)])
        for i in range(2 * m - 1):
            faces.append([(chords[i], 1), (chords[i + 1], -1)])
        faces.append([(chords[-1], 1), ("E34", 1), ("E45", 1), ("E51", 1)])
    outer = [("A1", -1), ("E51", -1), ("E45", -1), ("E34", -1), ("E23", -1)]
    faces.append(outer)
    return faces, orient, len(faces) - 1


def medial_diagram(face_cycles, orient, outer_index):
    """Alternating link diagram (medial) of a checkerboard graph.

    face_cycles are the directed black-face boundaries (edge name, +-1);
    orient maps edge names to (tail vertex, head vertex).  Returns the
    PlanarDiagram plus the white-region order (by vertex id ascending) and
    the outer-face index of the built diagram.
    """
    # occurrences: each edge must appear once with +1 and once with -1
    occ = {}
    for fi, cyc in enumerate(face_cycles):
        for pos, (e, s) in enumerate(cyc):
            occ.setdefault(e, {})[s] = (fi, pos)
    for e, d in occ.items():
        if set(d) != {1, -1}:
            raise DiagramError(f"edge {e} does not appear once per direction")

    # arcs: one per face corner (between consecutive cycle entries)
    arc_id = {}
    counter = [0]

    def arc(fi, pos):
        key = (fi, pos)  # arc starting after entry pos of face fi
        if key not in arc_id:
            counter[0] += 1
            arc_id[key] = counter[0]
        return arc_id[key]

    # per crossing (edge), the four corner arcs:
    #   EL: ends here in the left face, SL: starts here in the left face,
    #   ER: ends here in the right face, SR: starts here in the right face
    corners = {}
    for e in occ:
        fL, pL = occ[e][1]
        fR, pR = occ[e][-1]
        nL = len(face_cycles[fL])
        nR = len(face_cycles[fR])
        EL = arc(fL, (pL - 1) % nL)
        SL = arc(fL, pL)
        ER = arc(fR, (pR - 1) % nR)
        SR = arc(fR, pR)
        corners[e] = (SR, ER, SL, EL)

    # trace the medial curve: strand diagonals pair (EL, ER) and (SL, SR);
    # arcs alternate forward/backward traversal along the curve
    ends = {}  # arc -> (edge, tag) at its end crossing
    starts = {}
    for e, (SR, ER, SL, EL) in corners.items():
        ends[EL] = (e, "EL")
        ends[ER] = (e, "ER")
        starts[SL] = (e, "SL")
        starts[SR] = (e, "SR")

    direction = {}  # arc -> +1 traversed with face orientation, -1 against
    n_arcs = counter[0]
    for a0 in range(1, n_arcs + 1):
        if a0 in direction:
            continue
        a, d = a0, 1
        while a not in direction:
            direction[a] = d
            if d == 1:
                e, tag = ends[a]
            else:
                e, tag = starts[a]
            SR, ER, SL, EL = corners[e]
            partner = {"EL": ER, "ER": EL, "SL": SR, "SR": SL}[tag]
            # the diagonal partner carries the strand onward; E-corners both
            # point into the crossing and S-corners both point out, so the
            # traversal direction flips at every crossing
            a, d = partner, -d

    # emit PD tuples: ccw slot order is (SR, ER, SL, EL) cyclically; the
    # (SL, SR) diagonal is the under-strand (this choice realizes the
    # published sign convention with every eta = -1 on the K_m family)
    crossings = []
    for e, (SR, ER, SL, EL) in corners.items():
        if direction[SR] == -1:   # SR flows into the crossing
            quad = (SR, ER, SL, EL)
        else:
            quad = (SL, EL, SR, ER)
        crossings.append(quad)

    d = PlanarDiagram.from_crossings(crossings)

    # locate the built diagram's faces for the outer face and white regions
    cf = d._corner_faces()
    eidx = {e: i for i, e in enumerate(occ)}

    def slot_of(e, target_arc):
        return crossings[eidx[e]].index(target_arc)

    def corner_between(e, arc_x, arc_y):
        # corner between ccw-consecutive slots holding arc_x then arc_y
        s = slot_of(e, arc_x)
        assert crossings[eidx[e]][(s + 1) % 4] == arc_y
        return cf[(eidx[e], s)]

    # region after SR (between SR and ER) is the right face; after ER the
    # head vertex; after SL the left face; after EL the tail vertex
    vertex_face = {}
    face_face = {}
    for e, (SR, ER, SL, EL) in corners.items():
        u, v = orient[e]
        fL, _ = occ[e][1]
        fR, _ = occ[e][-1]
        face_face[fR] = corner_between(e, SR, ER)
        vertex_face[v] = corner_between(e, ER, SL)
        face_face[fL] = corner_between(e, SL, EL)
        vertex_face[u] = corner_between(e, EL, SR)

    white_order = tuple(vertex_face[v] for v in sorted(vertex_face))
    outer_face = face_face[outer_index]
    d2 = PlanarDiagram(d.crossings, d.arc_count, outer_face)
    return d2, white_order, eidx


def km_diagram(m: int):
    """The K_m diagram of the published family, with white labels X1..X5.

    Returns (diagram, white_order): white_order lists the diagram's face
    indices for X_1..X_5 so the Goeritz pipeline reproduces the published
    unreduced matrix row-for-row.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    faces, orient, outer = _km_tait_faces(m)
    d, white_order, _ = medial_diagram(faces, orient, outer)
    return d, white_order
