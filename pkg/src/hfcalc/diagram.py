"""Combinatorial Heegaard diagrams: parsing, face tracing, assembly.

A diagram is described by oriented curve listings with crossing signs.
The sign at a vertex fixes the counterclockwise rotation order of the
four half-edges meeting there:

* positive vertex: alpha-out, beta-out, alpha-in, beta-in;
* negative vertex: alpha-out, beta-in, alpha-in, beta-out.

One bit per vertex therefore turns the two curve families into a rotation
system on a 4-valent graph.  Faces are traced from the rotation system,
and region directives may group several traced circles into a single
region carrying a genus; that is how non-cellular embeddings (needed for
instance by the standard S1 x S2 diagram, whose complement contains an
annulus) are encoded.  Assembly validates the closed-surface Euler
identity, connectivity, and the independence proxy (cutting along either
curve family must not disconnect the surface).  The assembled
``HeegaardDiagram`` is immutable and safe to share between threads.

Dart conventions used throughout: every arc gets a forward dart ``2 * arc``
(along the curve orientation) and a backward dart ``2 * arc + 1``; traced
faces run counterclockwise, so the face containing a dart lies on the
dart's left; quadrant ``i`` at a vertex is the sector between rotation
slots ``i`` and ``i + 1`` and is owned by the face containing the dart in
slot ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping, Sequence

LEFT_AFTER = "left-after"
RIGHT_AFTER = "right-after"
SIDES = (LEFT_AFTER, RIGHT_AFTER)

ALPHA = "alpha"
BETA = "beta"


class DiagramError(Exception):
    """Base class for diagram input problems."""


class ParseError(DiagramError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class ValidationError(DiagramError):
    """A structurally well-formed input that does not describe a surface."""


@dataclass(frozen=True)
class RegionDirective:
    """Grouping of traced circles into one region with a genus.

    ``circles`` is a tuple of canonical circle ids, or None for the
    ``auto`` marker (every unclaimed circle becomes its own disk).
    """

    label: str
    genus: int
    circles: tuple[str, ...] | None
    line: int | None = None


@dataclass(frozen=True)
class CurveSystemInput:
    """Parsed, name-interned curve data before surface assembly."""

    genus: int
    alpha: tuple[tuple[str, tuple[str, ...]], ...]
    beta: tuple[tuple[str, tuple[str, ...]], ...]
    signs: Mapping[str, int]  # vertex name -> +1 / -1
    basepoint: tuple[str, str, str]  # curve, vertex, side
    directives: tuple[RegionDirective, ...] = ()
    source: Mapping[str, tuple[int, int]] = field(default_factory=dict)

    def curve_names(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self.alpha) + tuple(n for n, _ in self.beta)


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

def _parse_alpha_token(tok: str, line: int) -> tuple[str, int]:
    if len(tok) < 2 or tok[-1] not in "+-":
        raise ParseError(f"alpha vertex {tok!r} needs a crossing sign (+ or -)", line)
    return tok[:-1], (1 if tok[-1] == "+" else -1)


def parse_diagram(text: str) -> CurveSystemInput:
    """Parse the line-oriented diagram format into a ``CurveSystemInput``.

    The format (UTF-8, ``#`` comments)::

        heegaard v1
        genus: 1
        alpha a0: x0+ x1+ x2+
        beta  b0: x0 x2 x1
        basepoint: a0 x0 left-after
        region r0: genus=0 circles=auto

    Signs appear only on alpha listings.  Vertex names must occur exactly
    once across the alpha curves and exactly once across the beta curves,
    with identical name sets.  Raises ``ParseError`` with the offending
    line number on malformed input.
    """
    genus: int | None = None
    alpha: list[tuple[str, tuple[str, ...]]] = []
    beta: list[tuple[str, tuple[str, ...]]] = []
    signs: dict[str, int] = {}
    basepoint: tuple[str, str, str] | None = None
    directives: list[RegionDirective] = []
    source: dict[str, tuple[int, int]] = {}
    seen_curves: set[str] = set()
    seen_alpha: dict[str, int] = {}
    seen_beta: dict[str, int] = {}
    header_seen = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if not header_seen:
            if line.strip() != "heegaard v1":
                raise ParseError("expected header 'heegaard v1'", lineno)
            header_seen = True
            continue
        stripped = line.strip()
        keyword = stripped.split(None, 1)[0]

        if keyword == "genus:":
            if genus is not None:
                raise ParseError("duplicate genus line", lineno)
            rest = stripped[len("genus:"):].strip()
            if not rest.isdigit():
                raise ParseError(f"genus must be a nonnegative integer, got {rest!r}", lineno)
            genus = int(rest)
        elif keyword in (ALPHA, BETA):
            body = stripped[len(keyword):].strip()
            if ":" not in body:
                raise ParseError(f"malformed {keyword} line (missing ':')", lineno)
            name, seq = body.split(":", 1)
            name = name.strip()
            if not name:
                raise ParseError(f"{keyword} curve needs a name", lineno)
            if name in seen_curves:
                raise ParseError(f"duplicate curve name {name!r}", lineno)
            seen_curves.add(name)
            toks = seq.split()
            if not toks:
                raise ParseError(f"curve {name!r} lists no vertices; every curve "
                                 "must cross the other family at least once", lineno)
            verts: list[str] = []
            for col, tok in enumerate(toks):
                if keyword == ALPHA:
                    vname, sign = _parse_alpha_token(tok, lineno)
                    if vname in seen_alpha:
                        raise ParseError(f"vertex {vname!r} listed twice on alpha curves", lineno)
                    seen_alpha[vname] = lineno
                    signs[vname] = sign
                else:
                    if tok[-1] in "+-":
                        raise ParseError(f"beta vertex {tok!r} must not carry a sign", lineno)
                    vname = tok
                    if vname in seen_beta:
                        raise ParseError(f"vertex {vname!r} listed twice on beta curves", lineno)
                    seen_beta[vname] = lineno
                verts.append(vname)
                source[f"vertex:{name}:{col}"] = (lineno, col)
            source[f"curve:{name}"] = (lineno, 0)
            (alpha if keyword == ALPHA else beta).append((name, tuple(verts)))
        elif keyword == "basepoint:":
            if basepoint is not None:
                raise ParseError("duplicate basepoint line", lineno)
            toks = stripped[len("basepoint:"):].split()
            if len(toks) != 3:
                raise ParseError("basepoint line must read 'basepoint: CURVE VERTEX SIDE'", lineno)
            if toks[2] not in SIDES:
                raise ParseError(f"basepoint side must be one of {SIDES}", lineno)
            basepoint = (toks[0], toks[1], toks[2])
            source["basepoint"] = (lineno, 0)
        elif keyword == "region":
            body = stripped[len("region"):].strip()
            if ":" not in body:
                raise ParseError("malformed region line (missing ':')", lineno)
            label, rest = body.split(":", 1)
            label = label.strip()
            toks = rest.split()
            if len(toks) < 2 or not toks[0].startswith("genus=") or not toks[1].startswith("circles="):
                raise ParseError("region line must read 'region LABEL: genus=N circles=...'", lineno)
            gtxt = toks[0][len("genus="):]
            if not gtxt.isdigit():
                raise ParseError(f"region genus must be a nonnegative integer, got {gtxt!r}", lineno)
            first = toks[1][len("circles="):]
            if first == "auto":
                if len(toks) > 2:
                    raise ParseError("'circles=auto' takes no further ids", lineno)
                circles: tuple[str, ...] | None = None
            else:
                ids = [first] + toks[2:]
                if not all(ids):
                    raise ParseError("empty circle id", lineno)
                circles = tuple(ids)
            directives.append(RegionDirective(label, int(gtxt), circles, lineno))
            source[f"region:{label}"] = (lineno, 0)
        else:
            raise ParseError(f"unrecognized line {stripped!r}", lineno)

    if not header_seen:
        raise ParseError("empty input; expected header 'heegaard v1'")
    if genus is None:
        raise ParseError("missing 'genus:' line")
    if genus < 1:
        raise ParseError("genus must be at least 1 (the encoding needs at least one curve)")
    if basepoint is None:
        raise ParseError("missing 'basepoint:' line")
    if len(alpha) != genus or len(beta) != genus:
        raise ParseError(
            f"genus {genus} requires {genus} alpha and {genus} beta curves, "
            f"got {len(alpha)} and {len(beta)}")
    if set(seen_alpha) != set(seen_beta):
        missing = set(seen_alpha) ^ set(seen_beta)
        raise ParseError(
            "vertex sets of the two families differ: " + " ".join(sorted(missing)))

    bp_curve, bp_vertex, _ = basepoint
    for name, verts in alpha + beta:
        if name == bp_curve:
            if bp_vertex not in verts:
                raise ParseError(f"basepoint vertex {bp_vertex!r} is not on curve {bp_curve!r}")
            break
    else:
        raise ParseError(f"basepoint curve {bp_curve!r} does not exist")

    return CurveSystemInput(genus, tuple(alpha), tuple(beta), signs,
                            basepoint, tuple(directives), source)


# ---------------------------------------------------------------------------
# Graph structure and face tracing
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Arc:
    """Oriented edge between consecutive vertices along one curve."""

    index: int
    family: str  # ALPHA or BETA
    curve: str
    pos: int  # position along the curve listing
    tail: int  # vertex id
    head: int  # vertex id

    @property
    def name(self) -> str:
        return f"{self.curve}.{self.pos}"


def _dart_name(arcs: Sequence[Arc], dart: int) -> str:
    return arcs[dart // 2].name + ("+" if dart % 2 == 0 else "-")


class _Graph:
    """Vertices, arcs, rotations, and traced faces of a curve system."""

    def __init__(self, inp: CurveSystemInput):
        self.input = inp
        names: list[str] = []
        for _, verts in inp.alpha:
            names.extend(verts)
        self.vertex_names = tuple(names)
        self.vertex_index = {n: i for i, n in enumerate(names)}
        self.signs = tuple(inp.signs[n] for n in names)

        self.alpha = tuple((name, tuple(self.vertex_index[v] for v in verts))
                           for name, verts in inp.alpha)
        self.beta = tuple((name, tuple(self.vertex_index[v] for v in verts))
                          for name, verts in inp.beta)

        arcs: list[Arc] = []
        for family, curves in ((ALPHA, self.alpha), (BETA, self.beta)):
            for name, verts in curves:
                n = len(verts)
                for pos in range(n):
                    arcs.append(Arc(len(arcs), family, name, pos,
                                    verts[pos], verts[(pos + 1) % n]))
        self.arcs = tuple(arcs)
        self.arc_by_name = {a.name: a.index for a in arcs}

        nv = len(names)
        a_out = [-1] * nv
        a_in = [-1] * nv
        b_out = [-1] * nv
        b_in = [-1] * nv
        for arc in arcs:
            out, inn = (a_out, a_in) if arc.family == ALPHA else (b_out, b_in)
            out[arc.tail] = 2 * arc.index
            inn[arc.head] = 2 * arc.index + 1
        rotations = []
        for v in range(nv):
            if self.signs[v] > 0:
                rotations.append((a_out[v], b_out[v], a_in[v], b_in[v]))
            else:
                rotations.append((a_out[v], b_in[v], a_in[v], b_out[v]))
        self.rotations = tuple(rotations)

        # sigma^-1 over darts: previous dart counterclockwise at the origin.
        ndarts = 2 * len(arcs)
        sigma_inv = [-1] * ndarts
        for rot in rotations:
            for i, d in enumerate(rot):
                sigma_inv[d] = rot[(i - 1) % 4]
        # Faces on the left: next dart of a face is sigma^-1 of the reversal.
        face_of_dart = [-1] * ndarts
        faces: list[tuple[int, ...]] = []
        for start in range(ndarts):
            if face_of_dart[start] >= 0:
                continue
            cycle = []
            d = start
            while face_of_dart[d] < 0:
                face_of_dart[d] = len(faces)
                cycle.append(d)
                d = sigma_inv[d ^ 1]
            faces.append(tuple(cycle))
        self.face_of_dart = tuple(face_of_dart)

        canon_faces = []
        for cyc in faces:
            k = min(range(len(cyc)), key=lambda i: _dart_name(self.arcs, cyc[i]))
            canon_faces.append(cyc[k:] + cyc[:k])
        self.faces = tuple(tuple(c) for c in canon_faces)
        self.face_names = tuple(_dart_name(self.arcs, c[0]) for c in self.faces)

    def dart_name(self, dart: int) -> str:
        return _dart_name(self.arcs, dart)

    def origin(self, dart: int) -> int:
        arc = self.arcs[dart // 2]
        return arc.tail if dart % 2 == 0 else arc.head


def trace_faces(inp: CurveSystemInput) -> tuple[tuple[tuple[str, str], ...], ...]:
    """Trace the rotation-system faces of a parsed curve system.

    Each circle is returned as a cyclic tuple of ``(arc_name, direction)``
    pairs with direction ``'+'`` (along the curve orientation) or ``'-'``,
    rotated to start at its lexicographically smallest dart and sorted by
    that starting dart.  Every directed arc side occurs in exactly one
    circle, so the total length of all circles is twice the arc count.
    """
    g = _Graph(inp)
    circles = []
    for cyc in g.faces:
        circles.append(tuple((g.arcs[d // 2].name, "+" if d % 2 == 0 else "-") for d in cyc))
    return tuple(sorted(circles, key=lambda c: c[0]))


# ---------------------------------------------------------------------------
# Regions and assembled diagrams
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Region:
    """A complement region: one or more traced circles plus a genus."""

    index: int
    label: str
    genus: int
    faces: tuple[int, ...]  # face indices

    @property
    def boundary_circles(self) -> int:
        return len(self.faces)

    @property
    def chi(self) -> int:
        return 2 - 2 * self.genus - len(self.faces)


@dataclass(frozen=True)
class Quadrant:
    vertex: str
    position: int  # 0..3 between rotation slots position and position + 1
    region: int


class HeegaardDiagram:
    """Validated immutable diagram; all queries are read-only.

    Not constructed directly: use ``assemble_regions`` or ``load_diagram``.
    """

    def __init__(self, graph: _Graph, regions: tuple[Region, ...],
                 region_of_face: tuple[int, ...], basepoint_region: int):
        self._graph = graph
        self.input = graph.input
        self.genus = graph.input.genus
        self.vertex_names = graph.vertex_names
        self.vertex_index = dict(graph.vertex_index)
        self.signs = graph.signs
        self.alpha = graph.alpha
        self.beta = graph.beta
        self.arcs = graph.arcs
        self.rotations = graph.rotations
        self.faces = graph.faces
        self.face_names = graph.face_names
        self.face_of_dart = graph.face_of_dart
        self.regions = regions
        self.region_of_face = region_of_face
        self.basepoint_region = basepoint_region
        self.corner_counts = tuple(
            sum(len(self.faces[f]) for f in r.faces) for r in regions)

    # -- basic queries ----------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return len(self.vertex_names)

    @property
    def n_arcs(self) -> int:
        return len(self.arcs)

    @property
    def n_regions(self) -> int:
        return len(self.regions)

    def vertex_id(self, name: str) -> int:
        try:
            return self.vertex_index[name]
        except KeyError:
            raise KeyError(f"unknown vertex {name!r}") from None

    def dart_name(self, dart: int) -> str:
        return self._graph.dart_name(dart)

    def left_region(self, arc: int) -> int:
        """Region on the left of the arc's forward direction."""
        return self.region_of_face[self.face_of_dart[2 * arc]]

    def right_region(self, arc: int) -> int:
        return self.region_of_face[self.face_of_dart[2 * arc + 1]]

    def quadrant_region(self, vertex: int, position: int) -> int:
        """Region owning the sector between rotation slots position, position+1."""
        dart = self.rotations[vertex][position]
        return self.region_of_face[self.face_of_dart[dart]]

    def quadrant_regions(self, vertex: int) -> tuple[int, int, int, int]:
        rot = self.rotations[vertex]
        return tuple(self.region_of_face[self.face_of_dart[d]] for d in rot)

    def region_label(self, index: int) -> str:
        return self.regions[index].label

    def canonical_region_name(self, index: int) -> str:
        """Lexicographically minimal circle id among the region's circles."""
        return min(self.face_names[f] for f in self.regions[index].faces)


def quadrants_at(diagram: HeegaardDiagram, vertex: str) -> tuple[Quadrant, ...]:
    """The four quadrants at a vertex, in rotation order.

    The owning regions need not be distinct.  Raises ``KeyError`` for an
    unknown vertex name.
    """
    v = diagram.vertex_id(vertex)
    return tuple(Quadrant(vertex, i, diagram.quadrant_region(v, i)) for i in range(4))


def _canon_circle(circle) -> tuple:
    pairs = tuple((str(a), str(d)) for a, d in circle)
    k = min(range(len(pairs)), key=lambda i: pairs[i][0] + pairs[i][1])
    return pairs[k:] + pairs[:k]


def _check_faces_argument(graph: _Graph, faces) -> None:
    if faces is None:
        return
    expected = {_canon_circle(c) for c in trace_faces(graph.input)}
    given = {_canon_circle(c) for c in faces}
    if given != expected:
        raise ValidationError("supplied face circles do not match the rotation-system trace")


def assemble_regions(inp: CurveSystemInput,
                     faces=None,
                     directives: Sequence[RegionDirective] | None = None) -> HeegaardDiagram:
    """Group traced circles into regions and validate the closed surface.

    ``faces`` may be the output of ``trace_faces`` (it is re-derived and
    cross-checked); ``directives`` defaults to the ones parsed from the
    input.  Unclaimed circles each become their own disk region.  Raises
    ``ValidationError`` on an Euler mismatch, a doubly claimed circle, an
    unknown circle id, a disconnected surface, or a curve family whose
    removal disconnects the surface.
    """
    graph = _Graph(inp)
    _check_faces_argument(graph, faces)
    if directives is None:
        directives = inp.directives

    # Circles may be referenced through any of their darts; the canonical
    # id (the minimal dart) is what serialization emits.
    face_index: dict[str, int] = {}
    for f, cyc in enumerate(graph.faces):
        for d in cyc:
            face_index[graph.dart_name(d)] = f
    claimed: dict[int, str] = {}
    regions: list[Region] = []
    auto_seen = False
    for d in directives:
        if d.genus < 0:
            raise ValidationError(f"region {d.label!r}: genus must be nonnegative")
        if d.circles is None:
            if auto_seen:
                raise ValidationError("more than one 'circles=auto' region directive")
            if d.genus != 0:
                raise ValidationError("'circles=auto' regions must have genus 0")
            auto_seen = True
            continue
        fids = []
        for cid in d.circles:
            if cid not in face_index:
                raise ValidationError(
                    f"region {d.label!r} references unknown circle {cid!r}; "
                    f"known circles: {' '.join(graph.face_names)}")
            f = face_index[cid]
            if f in claimed:
                raise ValidationError(
                    f"circle {cid!r} claimed by both {claimed[f]!r} and {d.label!r}")
            claimed[f] = d.label
            fids.append(f)
        regions.append(Region(len(regions), d.label, d.genus, tuple(sorted(fids))))

    for f, name in sorted(enumerate(graph.face_names), key=lambda p: p[1]):
        if f not in claimed:
            regions.append(Region(len(regions), name, 0, (f,)))

    region_of_face = [-1] * len(graph.faces)
    for r in regions:
        for f in r.faces:
            region_of_face[f] = r.index

    nv = len(graph.vertex_names)
    ne = len(graph.arcs)
    assert ne == 2 * nv  # one alpha and one beta arc slot per vertex
    chi = nv - ne + sum(r.chi for r in regions)
    if chi != 2 - 2 * inp.genus:
        raise ValidationError(
            f"Euler characteristic mismatch: V - E + sum chi(region) = "
            f"{nv} - {ne} + {sum(r.chi for r in regions)} = {chi}, "
            f"but genus {inp.genus} requires {2 - 2 * inp.genus}")

    # Connectivity of graph union regions.
    parent = list(range(nv))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        parent[find(x)] = find(y)

    for arc in graph.arcs:
        union(arc.tail, arc.head)
    for r in regions:
        anchor = graph.origin(graph.faces[r.faces[0]][0])
        for f in r.faces[1:]:
            union(anchor, graph.origin(graph.faces[f][0]))
    if len({find(v) for v in range(nv)}) != 1:
        raise ValidationError("diagram is disconnected (graph plus regions)")

    # Cutting along one family must keep the region adjacency connected.
    for family, fam_name in ((BETA, ALPHA), (ALPHA, BETA)):
        rparent = list(range(len(regions)))

        def rfind(x: int) -> int:
            while rparent[x] != x:
                rparent[x] = rparent[rparent[x]]
                x = rparent[x]
            return x

        for arc in graph.arcs:
            if arc.family == family:
                l = region_of_face[graph.face_of_dart[2 * arc.index]]
                r_ = region_of_face[graph.face_of_dart[2 * arc.index + 1]]
                rparent[rfind(l)] = rfind(r_)
        if len({rfind(i) for i in range(len(regions))}) != 1:
            raise ValidationError(
                f"cutting along the {fam_name} curves disconnects the surface; "
                f"the {fam_name} family is not independent")

    bp_curve, bp_vertex, side = inp.basepoint
    bp_arc = None
    for arc in graph.arcs:
        if arc.curve == bp_curve and arc.tail == graph.vertex_index[bp_vertex]:
            bp_arc = arc.index
            break
    if bp_arc is None:
        raise ValidationError(
            f"basepoint locator ({bp_curve}, {bp_vertex}) resolves to nothing")
    dart = 2 * bp_arc if side == LEFT_AFTER else 2 * bp_arc + 1
    basepoint_region = region_of_face[graph.face_of_dart[dart]]

    return HeegaardDiagram(graph, tuple(regions), tuple(region_of_face), basepoint_region)


def load_diagram(text: str) -> HeegaardDiagram:
    """Parse, trace, and assemble in one step."""
    inp = parse_diagram(text)
    return assemble_regions(inp, trace_faces(inp), inp.directives)


# ---------------------------------------------------------------------------
# Canonical serialization and input transformations
# ---------------------------------------------------------------------------

def serialize(diagram: HeegaardDiagram) -> str:
    """Canonical text form: curves sorted by name, each cycle rotated to
    start at its lexicographically minimal vertex, region directives only
    for non-disk regions.

    Re-parsing the output yields the same diagram (vertex and curve names
    preserved; arc positions and region labels are derived data and may
    shift consistently).
    """
    inp = diagram.input
    offsets: dict[str, int] = {}
    lines = ["heegaard v1", f"genus: {inp.genus}"]

    def emit(family: str, curves) -> None:
        for name, verts in sorted(curves, key=lambda c: c[0]):
            k = min(range(len(verts)), key=lambda i: verts[i])
            offsets[name] = k
            rotated = verts[k:] + verts[:k]
            if family == ALPHA:
                toks = [v + ("+" if inp.signs[v] > 0 else "-") for v in rotated]
            else:
                toks = list(rotated)
            label = "alpha" if family == ALPHA else "beta "
            lines.append(f"{label} {name}: {' '.join(toks)}")

    emit(ALPHA, inp.alpha)
    emit(BETA, inp.beta)
    lines.append("basepoint: " + " ".join(inp.basepoint))

    curve_len = {name: len(verts) for name, verts in inp.alpha + inp.beta}

    def new_dart_name(dart: int) -> str:
        arc = diagram.arcs[dart // 2]
        pos = (arc.pos - offsets[arc.curve]) % curve_len[arc.curve]
        return f"{arc.curve}.{pos}" + ("+" if dart % 2 == 0 else "-")

    special = [r for r in diagram.regions if r.genus > 0 or len(r.faces) > 1]
    entries = []
    for r in special:
        ids = sorted(min(new_dart_name(d) for d in diagram.faces[f]) for f in r.faces)
        entries.append((ids[0], r.genus, ids))
    for k, (_, genus, ids) in enumerate(sorted(entries)):
        lines.append(f"region r{k}: genus={genus} circles={' '.join(ids)}")
    return "\n".join(lines) + "\n"


def reverse_curve(inp: CurveSystemInput, curve: str) -> CurveSystemInput:
    """Reverse the listed orientation of one curve.

    Reversing a curve's orientation flips the handedness of every crossing
    on it, so the signs of its vertices are flipped along with the listing
    order; the described surface and all grading quantities are unchanged.
    Arc names on the reversed curve change (arc ``curve.p`` becomes
    ``curve.(n-2-p mod n)`` with direction flipped), so region directives
    and the basepoint locator are mapped through that dart bijection; the
    basepoint stays in the same region.
    """
    names = dict(inp.alpha + inp.beta)
    if curve not in names:
        raise KeyError(f"unknown curve {curve!r}")
    flipped = set(names[curve])
    n = len(names[curve])

    def map_dart(arc_curve: str, pos: int, direction: str) -> tuple[str, int, str]:
        if arc_curve != curve:
            return arc_curve, pos, direction
        return arc_curve, (n - 2 - pos) % n, ("-" if direction == "+" else "+")

    def map_dart_id(cid: str) -> str:
        arc, direction = cid[:-1], cid[-1]
        c, pos = arc.rsplit(".", 1)
        c2, p2, d2 = map_dart(c, int(pos), direction)
        return f"{c2}.{p2}{d2}"

    def flip_listing(curves):
        return tuple((nm, tuple(reversed(v)) if nm == curve else v) for nm, v in curves)

    signs = {v: (-s if v in flipped else s) for v, s in inp.signs.items()}
    directives = tuple(
        replace(d, circles=None if d.circles is None
                else tuple(map_dart_id(x) for x in d.circles))
        for d in inp.directives)

    # Relocate the basepoint: resolve the old locator to a dart, map it,
    # and express the mapped dart as a locator in the new listings.
    bp_curve, bp_vertex, side = inp.basepoint
    old_pos = names[bp_curve].index(bp_vertex)
    direction = "+" if side == LEFT_AFTER else "-"
    c2, p2, d2 = map_dart(bp_curve, old_pos, direction)
    new_listing = tuple(reversed(names[c2])) if c2 == curve else names[c2]
    new_bp = (c2, new_listing[p2], LEFT_AFTER if d2 == "+" else RIGHT_AFTER)

    return replace(inp, alpha=flip_listing(inp.alpha), beta=flip_listing(inp.beta),
                   signs=signs, basepoint=new_bp, directives=directives, source={})


def rename(inp: CurveSystemInput,
           vertex_map: Mapping[str, str] | None = None,
           curve_map: Mapping[str, str] | None = None) -> CurveSystemInput:
    """Rename vertices and/or curves; the diagram is unchanged otherwise.

    Maps may be partial; both must be injective on the names they touch.
    Region directives are rewritten (circle ids mention curve names).
    """
    vmap = dict(vertex_map or {})
    cmap = dict(curve_map or {})

    def v(name: str) -> str:
        return vmap.get(name, name)

    def c(name: str) -> str:
        return cmap.get(name, name)

    def do(curves):
        return tuple((c(n), tuple(v(x) for x in verts)) for n, verts in curves)

    def fix_circle(cid: str) -> str:
        arc, sign = cid[:-1], cid[-1]
        curve, pos = arc.rsplit(".", 1)
        return f"{c(curve)}.{pos}{sign}"

    directives = tuple(
        replace(d, circles=None if d.circles is None
                else tuple(fix_circle(x) for x in d.circles))
        for d in inp.directives)
    bp = (c(inp.basepoint[0]), v(inp.basepoint[1]), inp.basepoint[2])
    new_names = [c(n) for n, _ in inp.alpha + inp.beta] + [v(x) for x in inp.signs]
    if len(set(new_names)) != len(new_names):
        raise ValueError("rename maps collide")
    return replace(inp, alpha=do(inp.alpha), beta=do(inp.beta),
                   signs={v(k): s for k, s in inp.signs.items()},
                   basepoint=bp, directives=directives, source={})
