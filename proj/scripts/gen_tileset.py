#!/usr/bin/env python3
"""Emit data/replicator.tiles: the shape-replicator tile system (tau = 10).

Geometry is written once per role in a canonical frame and rotated into the
four orientations. Conventions:

  outer walk (phase 1, clockwise):  N edge eastward, E edge southward,
                                    S edge westward, W edge northward.
  outer drilling (phase 2) runs each edge in reverse.
  inner walk (phase 3) traces the cavity clockwise and the inner drilling
  (phase 4) reverses it. Phase 5 fills the detached hollow.

Canonical outer frame (north edge): shape top row y = -1, ring row y = 0,
walk direction +x, outward normal +y. Molds are 1x3 perpendicular to the
edge (foot on the ring row). The canonical inner frame is the vertical
mirror: wall row y = 0, cavity top row y = -1, molds hang downward.

Every internal gadget bond carries a unique infinite glue so stray tile
debris can only ever assemble into the genuine gadget.
"""

import sys
from collections import OrderedDict

TAU = 10
GLUES = OrderedDict()


def glue(name, strength):
    if name in GLUES:
        assert GLUES[name] == strength, f"glue {name} redefined"
        return name
    GLUES[name] = strength
    return name


for fam, s in [
    ("C1", 2), ("C2", 9),
    ("N", 9), ("E", 9), ("S", 9), ("W", 9),
    ("n", 9), ("e", 9), ("s", 9), ("w", 9),
    ("D", -7), ("Q", -2), ("q", -5), ("K", 3), ("k", 3),
    ("L", 1), ("R", 2), ("r", 2),
]:
    glue(fam, s)
for i in range(1, 9):
    glue(f"O{i}", 1), glue(f"o{i}", 1)
for i in range(1, 7):
    glue(f"B{i}", 5), glue(f"b{i}", 5)
    glue(f"Z{i}", 9), glue(f"z{i}", 9)
for i in range(1, 5):
    glue(f"T{i}", 1), glue(f"t{i}", 1)
    glue(f"F{i}", -2), glue(f"f{i}", -2)
    glue(f"X{i}", 9), glue(f"x{i}", 9)
    glue(f"Y{i}", 9), glue(f"y{i}", 9)
    glue(f"V{i}", 9), glue(f"v{i}", 9)
    glue(f"U{i}", 9), glue(f"u{i}", 9)
    glue(f"H{i}", 9), glue(f"h{i}", 9)
    glue(f"J{i}", 9), glue(f"j{i}", 9)
    glue(f"S{i}", 9), glue(f"s{i}", 9)
    glue(f"A{i}", 10)
    glue(f"g{i}", 9)
    glue(f"M{i}", 5)
glue("Y5", 9), glue("y5", 9)

_inf = 0


def inf_glue():
    global _inf
    _inf += 1
    GLUES[f"I{_inf}"] = "inf"
    return f"I{_inf}"


N, E, S, W = (0, 1), (1, 0), (0, -1), (-1, 0)
DIRNAME = {N: "n", E: "e", S: "s", W: "w"}


def rot_cw(p):
    return (p[1], -p[0])


def rotate(p, k):
    for _ in range(k % 4):
        p = rot_cw(p)
    return p


def mirror_y(p):
    return (p[0], -p[1])


class Piece:
    def __init__(self, name, phase):
        self.name = name
        self.phase = phase
        self.cells = OrderedDict()

    def cell(self, x, y):
        self.cells.setdefault((x, y), {})
        return self

    def face(self, x, y, d, g):
        self.cell(x, y)
        old = self.cells[(x, y)].get(d)
        assert old is None or old == g, \
            f"{self.name}: face conflict at {(x, y)} {DIRNAME[d]}: {old} vs {g}"
        self.cells[(x, y)][d] = g
        return self

    def fuse(self):
        for (x, y) in list(self.cells):
            for d in (E, N):
                q = (x + d[0], y + d[1])
                if q in self.cells:
                    g = inf_glue()
                    self.face(x, y, d, g)
                    self.face(q[0], q[1], (-d[0], -d[1]), g)
        return self

    def transformed(self, name, k, mirror=False):
        out = Piece(name, self.phase)
        for (x, y), faces in self.cells.items():
            p = mirror_y((x, y)) if mirror else (x, y)
            p = rotate(p, k)
            out.cell(*p)
            for d, g in faces.items():
                dd = mirror_y(d) if mirror else d
                out.face(p[0], p[1], rotate(dd, k), g)
        return out


PIECES = []
BYNAME = {}


def add(p):
    assert p.name not in BYNAME, f"duplicate piece {p.name}"
    PIECES.append(p)
    BYNAME[p.name] = p
    return p


# Outer edge tables: rot turns the canonical north frame into the edge frame.
OUT_E = {
    "n": dict(rot=0, shape="N", P="O1", Q="O2", Z="Z2", X="X2", wall="n"),
    "e": dict(rot=1, shape="E", P="O3", Q="O4", Z="Z1", X="X1", wall="e"),
    "s": dict(rot=2, shape="S", P="O5", Q="O6", Z="Z3", X="X3", wall="s"),
    "w": dict(rot=3, shape="W", P="O7", Q="O8", Z="Z4", X="X4", wall="w"),
}
# Inner wall tables: the canonical inner frame is the mirrored north frame.
IN_E = {
    "n": dict(rot=0, wall="n", P="o1", Q="o2", Z="z1", X="x1"),
    "e": dict(rot=1, wall="e", P="o3", Q="o4", Z="z2", X="x2"),
    "s": dict(rot=2, wall="s", P="o5", Q="o6", Z="z3", X="x3"),
    "w": dict(rot=3, wall="w", P="o7", Q="o8", Z="z4", X="x4"),
}


def build_mold(name, phase, shape_glue, in_link, out_link, exposure, grab="B4",
               foot_in=False):
    """Canonical north-frame mold: foot (0,0) on the ring row, body up."""
    p = Piece(name, phase)
    p.face(0, 0, S, shape_glue)
    p.face(0, 0, E, grab)
    p.face(0, 1, E, "D")
    p.face(0, 2, E, out_link)
    if foot_in:
        p.face(0, 0, W, in_link)
    else:
        p.face(0, 2, W, in_link)
    p.face(0, 2, N, exposure)
    p.fuse()
    return p


def outer_edge(ek):
    t = OUT_E[ek]
    r = t["rot"]
    add(build_mold(f"mold_{ek}_a", 1, t["shape"], t["P"], t["Q"], "T1")
        .transformed(f"mold_{ek}_a", r))
    add(build_mold(f"mold_{ek}_b", 1, t["shape"], t["Q"], t["P"], "F1")
        .transformed(f"mold_{ek}_b", r))
    add(build_mold(f"mold_{ek}_first", 1, t["shape"], t["P"], t["Q"], "T1",
                   foot_in=True).transformed(f"mold_{ek}_first", r))

    p = Piece(f"helper_{ek}", 2)
    p.face(0, 0, E, "B4")
    p.face(0, 0, W, "B4")
    p.face(0, 0, N, t["X"])
    p.face(0, 0, S, t["wall"])
    add(p.transformed(p.name, r))

    p = Piece(f"drill_{ek}", 2)
    p.face(0, 0, S, t["X"])
    p.face(0, 0, W, "D")
    p.face(0, 1, W, t["Z"])
    p.face(0, 1, E, t["Z"])
    p.fuse()
    add(p.transformed(p.name, r))


for ek in OUT_E:
    outer_edge(ek)


def outer_nw():
    p = Piece("start", 1)
    p.face(-1, 0, S, "K")
    p.face(0, 0, S, "C1")
    p.face(1, 0, S, "N")
    p.face(1, 0, E, "O1")
    p.face(0, 0, N, "B1")
    p.face(-1, 0, N, "D")
    p.face(-1, 0, W, "Q")
    p.fuse()
    add(p)

    # first north mold: binds the start at foot level, grab seat B1
    add(build_mold("mold_n_start", 1, "N", "O1", "O2", "T1", grab="B1",
                   foot_in=True))

    p = Piece("helper_n_start", 2)  # cap-side helper, carries the A2 seat
    p.face(0, 0, E, "B4")
    p.face(0, 0, W, "B1")
    p.face(0, 0, N, "X2")
    p.face(0, 0, S, "A2")
    add(p)

    p = Piece("pre_drill", 2)
    p.face(-1, 0, N, "K")
    p.face(-1, 0, E, "C2")
    p.face(-1, 0, S, "B4")
    p.face(-2, 0, S, "D")
    p.face(-3, 0, S, "Z5")
    p.face(-2, 0, N, "Y5")
    p.fuse()
    add(p)

    p = Piece("drill_w_first", 2)  # leaves the C2 cavity face behind
    p.face(0, 0, N, "B4")
    p.face(0, 0, S, "B3")
    p.face(-1, 0, S, "D")
    p.face(-2, 0, N, "Z5")
    p.face(-2, 0, S, "Z6")
    p.face(0, 0, E, "C2")
    p.fuse()
    add(p)

    p = Piece("drill_w_second", 2)  # leaves the Q cavity face behind
    p.face(0, 0, N, "B3")
    p.face(0, 0, S, "B5")
    p.face(-1, 0, S, "D")
    p.face(-2, 0, N, "Z6")
    p.face(-2, 0, S, "Z4")
    p.face(0, 0, E, "Q")
    p.fuse()
    add(p)

    p = Piece("helper_w_first", 2)  # forced under drill_w_second
    p.face(0, 0, N, "B5")
    p.face(0, 0, S, "B4")
    p.face(0, 0, W, "X4")
    p.face(0, 0, E, "w")
    add(p)

    p = Piece("cap", 2)
    p.cell(-1, 1), p.cell(0, 1), p.cell(1, 1), p.cell(2, 1)
    p.cell(2, 0), p.cell(2, 2)
    p.face(2, 2, E, "Z2")
    p.face(2, 0, E, "B1")
    p.face(0, 1, S, "B1")
    p.face(-1, 1, S, "D")
    p.face(2, 0, S, "A3")
    p.face(-1, 1, W, "Y1")
    p.fuse()
    add(p)

    p = Piece("post_drill", 2)
    p.face(0, 0, E, "Q")
    p.face(0, 0, S, "Y5")
    p.face(0, 1, E, "Y1")
    p.fuse()
    add(p)


outer_nw()


def outer_convex(iek, oek):
    """Convex corner leaving edge `iek` for edge `oek` (clockwise turn).
    Canonical n->e frame: shape NE cell (-1,-1); corner ring column x = 0,
    rows -1..2; arm (1,-1),(2,-1); in-edge feet row y = 0 (x <= -1),
    out-edge feet column x = 0 (y <= -2)."""
    ti, to = OUT_E[iek], OUT_E[oek]
    r = ti["rot"]
    tag = f"{iek}{oek}"

    for suf, in_link in (("1", ti["P"]), ("2", ti["Q"])):
        p = Piece(f"corner_{tag}_{suf}", 1)
        p.face(0, 2, W, in_link)       # last in-edge mold's out-link
        p.face(0, -1, W, to["shape"])  # corner cell's out-edge face
        p.face(2, -1, S, to["P"])      # out-link at head level
        p.face(0, -1, S, "B1")         # drill-dance seat
        p.face(1, -1, S, "D")          # arm poke seat
        p.cell(0, 0), p.cell(0, 1)
        p.fuse()
        add(p.transformed(p.name, r))

    # corner drill helper: the blocked ring slot under the corner
    p = Piece(f"cdh_{tag}", 2)
    p.face(0, -2, N, "B1")
    p.face(0, -2, S, "B4")
    p.face(0, -2, E, to["X"])
    p.face(0, -2, W, to["wall"])
    add(p.transformed(p.name, r))

    # corner refill: one piece covering the corner row and column; closes the
    # out-edge chain, pokes the last in-edge mold and seats the in-edge
    # drilling westward
    p = Piece(f"cdx_{tag}", 2)
    p.face(0, -1, S, "B1")     # cdh's freed seat
    p.face(2, -1, S, to["Z"])  # out-edge chain
    p.face(0, -1, W, to["wall"])
    p.face(0, 0, W, "B4")      # grabs the last in-edge mold
    p.face(0, 1, W, "D")       # pokes it
    p.face(0, 2, W, ti["Z"])   # in-edge chain anchor
    p.cell(1, -1)
    p.cell(1, 0)
    p.fuse()
    add(p.transformed(p.name, r))


for a, b in [("n", "e"), ("e", "s"), ("s", "w"), ("w", "n")]:
    outer_convex(a, b)


def outer_concave(iek, oek):
    """Concave corner: edge `iek` runs into a wall that continues as edge
    `oek` (counter-clockwise turn of the boundary). Canonical n->w frame:
    in-edge feet row y = 0 (x <= -1), wall shape column x = 0 (y >= 0),
    wall-edge feet column x = -1 (y >= 4), corner row y = 3."""
    ti, to = OUT_E[iek], OUT_E[oek]
    r = ti["rot"]
    tag = f"{iek}{oek}"

    # type-2: corner-adjacent mold is an A mold (T1 up)
    p = Piece(f"corner_{tag}_2", 1)
    p.face(-1, 3, S, "T1")
    p.face(-1, 3, E, to["shape"])
    p.face(-1, 3, N, to["P"])
    p.face(-1, 3, W, "F1")
    add(p)
    BYNAME.pop(p.name)
    PIECES.pop()
    add(p.transformed(p.name, r))

    # type-1: corner-adjacent mold is a B mold (F1 up); reach back one
    p = Piece(f"corner_{tag}_1", 1)
    p.face(-2, 3, S, "T1")
    p.face(-1, 3, E, to["shape"])
    p.face(-1, 3, N, to["P"])
    p.face(-2, 3, W, "F1")
    p.fuse()
    add(p.transformed(p.name, r))

    # approach row: continues the wall drilling onto the corner row. The D
    # face under its second cell repels the mold mid-seats so the piece can
    # only land where the corner cleared that column.
    p = Piece(f"cva_{tag}", 2)
    p.face(-1, 4, N, "B4")     # wall helper above
    p.face(-3, 4, N, to["Z"])  # wall drill chain
    p.face(-1, 4, E, to["wall"])
    p.face(-1, 4, S, "A4")     # wall filler anchor
    p.face(-2, 4, S, "S4")     # poker anchors
    p.face(-3, 4, S, "Y4")
    p.face(-4, 4, S, "H4")
    p.fuse()
    add(p.transformed(p.name, r))

    # poker, type-2: pokes the B mold two in and kills the corner gadget
    p = Piece(f"cvp_{tag}_2", 2)
    p.face(-2, 3, N, "S4")
    p.face(-3, 3, N, "Y4")
    p.face(-2, 3, S, "F1")     # pokes the B mold under it
    p.face(-2, 3, E, "F1")     # kills the corner gadget
    p.fuse()
    add(p.transformed(p.name, r))

    # poker, type-1
    p = Piece(f"cvp_{tag}_1", 2)
    p.face(-3, 3, N, "Y4")
    p.face(-4, 3, N, "H4")
    p.face(-3, 3, S, "F1")
    p.face(-3, 3, E, "F1")
    p.fuse()
    add(p.transformed(p.name, r))

    # type-1 corner filler (takes the vacated corner cells)
    p = Piece(f"cvq_{tag}_1", 2)
    p.face(-1, 3, N, "A4")
    p.face(-2, 3, S, "A1")     # type-1 wall filler anchor
    p.cell(-2, 3)
    p.fuse()
    add(p.transformed(p.name, r))

    # wall fillers: restore the cavity faces and seat the base drilling
    p = Piece(f"cvw_{tag}_2", 2)
    for y in range(0, 4):
        p.face(-1, y, E, to["wall"])
    p.face(-1, 3, N, "A4")
    p.face(-1, 0, S, ti["wall"])
    p.face(-1, 0, W, "B4")
    p.face(-1, 1, W, "D")
    p.face(-1, 2, W, ti["Z"])
    p.fuse()
    add(p.transformed(p.name, r))

    p = Piece(f"cvw_{tag}_1", 2)
    for y in range(0, 3):
        p.face(-1, y, E, to["wall"])
        p.cell(-2, y)
    p.face(-2, 2, N, "A1")
    p.face(-1, 0, S, ti["wall"])
    p.face(-2, 0, S, ti["wall"])
    p.face(-2, 0, W, "B4")
    p.face(-2, 1, W, "D")
    p.face(-2, 2, W, ti["Z"])
    p.fuse()
    add(p.transformed(p.name, r))


for a, b in [("n", "w"), ("e", "n"), ("s", "e"), ("w", "s")]:
    outer_concave(a, b)


def emit(out):
    out.write(f"tau {TAU}\n")
    for name, s in GLUES.items():
        out.write(f"glue {name} {s}\n")
    tiles = OrderedDict()
    glines = []
    for piece in PIECES:
        glines.append(f"gadget {piece.name} phase={piece.phase}")
        for i, ((x, y), faces) in enumerate(sorted(piece.cells.items())):
            tname = f"{piece.name}.{i}"
            tiles[tname] = dict(faces)
            glines.append(f"  at {x} {y} {tname}")
    for tname, faces in tiles.items():
        by = {DIRNAME[d]: g for d, g in faces.items()}
        out.write(
            f"tile {tname} n={by.get('n', '-')} e={by.get('e', '-')} "
            f"s={by.get('s', '-')} w={by.get('w', '-')}\n")
    for line in glines:
        out.write(line + "\n")


if __name__ == "__main__":
    emit(sys.stdout)
