"""Generators, connecting domains, Spin^c classes, and gradings.

A generator picks one intersection point on each alpha and each beta
curve.  Two generators are connected exactly when the corner system --
the integer linear system asking for a 2-chain of regions whose boundary
runs along the alpha curves from the first generator to the second and
back along the beta curves -- has an integer solution; solvability
partitions the generators into Spin^c classes.

All index quantities are computed exactly:

* Euler measure  e(D) = sum a_k (chi(D_k) - corners(D_k)/4);
* point measure  n_w(D) = (1/4) sum of the multiplicities of the four
  quadrants at w;
* Maslov index   mu(A) = e(D) + n_x(D) + n_y(D), an integer for every
  solution of the corner system;
* relative grading  gr(x, y) = mu(A) - 2 n_z(D(A)), well defined modulo
  the class divisibility d, which is the gcd of mu(P) - 2 n_z(P) over the
  lattice of periodic (homogeneous) classes P.

Quarter-integers are carried as ``fractions.Fraction`` end to end; any
non-integral Maslov index signals an internal inconsistency and raises.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Sequence

from .diagram import ALPHA, BETA, HeegaardDiagram
from .zlattice import AffineSolutionSet, IntMatrix, gcd_over_lattice, smith_invariants, solve_integer_system


class GradingError(Exception):
    pass


class NoConnectingClassError(GradingError):
    """The two generators lie in different Spin^c classes."""


class NoPositiveRepresentative(GradingError):
    """No nonnegative lattice translate found within the search radius."""

    def __init__(self, radius: int):
        self.radius = radius
        super().__init__(f"no nonnegative representative within radius {radius}")


class ConsistencyError(GradingError):
    """An exact identity failed; indicates a bug, not a user error."""


class MixedLabelError(GradingError):
    """A twisted element mixes generators of different grading labels."""


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Generator:
    """A tuple of intersection points, one per alpha curve (by index).

    The selected vertices occupy pairwise distinct beta curves, so the
    beta indices form a permutation of the alpha indices.
    """

    vertices: tuple[int, ...]

    def display(self, diagram: HeegaardDiagram) -> str:
        return ",".join(diagram.vertex_names[v] for v in self.vertices)

    @classmethod
    def from_display(cls, diagram: HeegaardDiagram, text: str) -> "Generator":
        names = [t.strip() for t in text.split(",") if t.strip()]
        ids = [diagram.vertex_id(n) for n in names]
        gens = {g.vertices: g for g in enumerate_generators(diagram)}
        key = tuple(sorted(ids))
        for verts, g in gens.items():
            if tuple(sorted(verts)) == key:
                return g
        raise KeyError(f"{text!r} is not a generator of this diagram")


def _curve_membership(diagram: HeegaardDiagram):
    """vertex -> (alpha index, beta index)."""
    alpha_of = [-1] * diagram.n_vertices
    beta_of = [-1] * diagram.n_vertices
    for i, (_, verts) in enumerate(diagram.alpha):
        for v in verts:
            alpha_of[v] = i
    for j, (_, verts) in enumerate(diagram.beta):
        for v in verts:
            beta_of[v] = j
    return alpha_of, beta_of


def enumerate_generators(diagram: HeegaardDiagram) -> tuple[Generator, ...]:
    """All generators, in a deterministic order.

    Backtracks over alpha curves in diagram order, choosing vertices in
    listing order and skipping beta curves already used.  The empty result
    is allowed (a diagram may have no generators in some class setups).
    """
    _, beta_of = _curve_membership(diagram)
    out: list[Generator] = []
    chosen: list[int] = []
    used_beta: set[int] = set()

    def rec(i: int) -> None:
        if i == diagram.genus:
            out.append(Generator(tuple(chosen)))
            return
        for v in diagram.alpha[i][1]:
            b = beta_of[v]
            if b in used_beta:
                continue
            used_beta.add(b)
            chosen.append(v)
            rec(i + 1)
            chosen.pop()
            used_beta.remove(b)

    rec(0)
    return tuple(out)


# ---------------------------------------------------------------------------
# Corner system and domains
# ---------------------------------------------------------------------------

def build_corner_system(diagram: HeegaardDiagram, x: Generator, y: Generator
                        ) -> tuple[IntMatrix, tuple[int, ...]]:
    """Linear system for region multiplicities of a class connecting x to y.

    Unknowns are the region coefficients.  For each vertex there is one
    alpha row and one beta row: the boundary of (boundary of D restricted
    to the alpha curves) must be y - x as a 0-chain, and x - y on the
    beta side.  The coefficient of the boundary on an oriented arc is
    (left-region multiplicity) - (right-region multiplicity).
    """
    nv, nr = diagram.n_vertices, diagram.n_regions
    rows = [[0] * nr for _ in range(2 * nv)]
    for arc in diagram.arcs:
        left = diagram.left_region(arc.index)
        right = diagram.right_region(arc.index)
        base = 0 if arc.family == ALPHA else nv
        # d(arc) = head - tail applied to the arc coefficient.
        rows[base + arc.head][left] += 1
        rows[base + arc.head][right] -= 1
        rows[base + arc.tail][left] -= 1
        rows[base + arc.tail][right] += 1
    rhs = [0] * (2 * nv)
    for v in x.vertices:
        rhs[v] -= 1          # alpha rows: y - x
        rhs[diagram.n_vertices + v] += 1  # beta rows: x - y
    for v in y.vertices:
        rhs[v] += 1
        rhs[diagram.n_vertices + v] -= 1
    return IntMatrix.from_rows(rows, nr), tuple(rhs)


@lru_cache(maxsize=None)
def homogeneous_lattice(diagram: HeegaardDiagram) -> tuple[tuple[int, ...], ...]:
    """Basis of the lattice of periodic classes (kernel of the corner system).

    The kernel does not depend on the generator pair; the all-ones vector
    (the class of the full surface) always belongs to it.
    """
    gens = enumerate_generators(diagram)
    x = gens[0] if gens else Generator(())
    m, rhs = build_corner_system(diagram, x, x)
    return solve_integer_system(m, rhs).kernel


@dataclass(frozen=True, eq=False)
class Domain:
    """Integer 2-chain of regions connecting ``source`` to ``target``."""

    diagram: HeegaardDiagram
    source: Generator
    target: Generator
    coefficients: tuple[int, ...]

    @property
    def lattice(self) -> tuple[tuple[int, ...], ...]:
        return homogeneous_lattice(self.diagram)

    def translate(self, steps: Sequence[int]) -> "Domain":
        """Add an integer combination of the homogeneous lattice basis."""
        basis = self.lattice
        if len(steps) != len(basis):
            raise ValueError(f"expected {len(basis)} lattice steps")
        coeffs = list(self.coefficients)
        for s, vec in zip(steps, basis):
            for i, v in enumerate(vec):
                coeffs[i] += s * v
        return replace(self, coefficients=tuple(coeffs))


def solve_domain(diagram: HeegaardDiagram, x: Generator, y: Generator) -> Domain | None:
    """A connecting domain from x to y, or None when none exists.

    None means the generators lie in different Spin^c classes; it is a
    valid mathematical answer, not an error.  The returned domain carries
    access to the homogeneous lattice through ``Domain.lattice``.
    """
    m, rhs = build_corner_system(diagram, x, y)
    sol = solve_integer_system(m, rhs)
    if sol.is_empty:
        return None
    return Domain(diagram, x, y, sol.particular)


def positive_representative(domain: Domain, radius: int = 8) -> Domain:
    """A lattice translate with all coefficients nonnegative.

    Searches integer combinations of the lattice basis with coordinates
    bounded by ``radius``, by increasing max-norm shells and then
    lexicographically, so the result is deterministic and small.  Since
    the all-ones vector lies in the lattice, a large enough radius always
    succeeds; failure raises ``NoPositiveRepresentative`` with the radius.
    """
    basis = domain.lattice
    base = domain.coefficients
    if not basis:
        if all(c >= 0 for c in base):
            return domain
        raise NoPositiveRepresentative(radius)
    rank = len(basis)
    for shell in range(radius + 1):
        for combo in itertools.product(range(-shell, shell + 1), repeat=rank):
            if max((abs(c) for c in combo), default=0) != shell:
                continue
            coeffs = list(base)
            for s, vec in zip(combo, basis):
                for i, v in enumerate(vec):
                    coeffs[i] += s * v
            if all(c >= 0 for c in coeffs):
                return replace(domain, coefficients=tuple(coeffs))
    raise NoPositiveRepresentative(radius)


def _coeffs(domain) -> Sequence[int]:
    return domain.coefficients if isinstance(domain, Domain) else domain


# ---------------------------------------------------------------------------
# Measures and the index
# ---------------------------------------------------------------------------

def euler_measure(diagram: HeegaardDiagram, domain) -> Fraction:
    """e(D) = sum a_k (chi(region k) - corners(region k)/4).

    Every corner of an elementary region is convex, so the concave term
    vanishes region by region.
    """
    coeffs = _coeffs(domain)
    total = Fraction(0)
    for r, a in zip(diagram.regions, coeffs):
        if a:
            total += a * (Fraction(r.chi) - Fraction(diagram.corner_counts[r.index], 4))
    return total


def point_measure(diagram: HeegaardDiagram, domain, vertex: str | int) -> Fraction:
    """n_w(D): one quarter of the total multiplicity of the four quadrants at w."""
    v = vertex if isinstance(vertex, int) else diagram.vertex_id(vertex)
    coeffs = _coeffs(domain)
    return Fraction(sum(coeffs[r] for r in diagram.quadrant_regions(v)), 4)


def generator_measure(diagram: HeegaardDiagram, domain, gen: Generator) -> Fraction:
    """n_x(D): sum of the point measures at the generator's vertices."""
    return sum((point_measure(diagram, domain, v) for v in gen.vertices), Fraction(0))


def basepoint_multiplicity(diagram: HeegaardDiagram, domain) -> int:
    """n_z(D): the coefficient of the basepoint region."""
    return _coeffs(domain)[diagram.basepoint_region]


def _check_connecting(diagram: HeegaardDiagram, x: Generator, y: Generator, coeffs) -> None:
    m, rhs = build_corner_system(diagram, x, y)
    if m.mul_vec(list(coeffs)) != tuple(rhs):
        raise ConsistencyError("domain does not satisfy the corner system for (x, y)")


def maslov_index(diagram: HeegaardDiagram, x: Generator, y: Generator, domain) -> int:
    """mu(A) = e(D) + n_x(D) + n_y(D); exact, and an integer for every
    domain satisfying the corner system (checked)."""
    coeffs = _coeffs(domain)
    _check_connecting(diagram, x, y, coeffs)
    total = (euler_measure(diagram, coeffs)
             + generator_measure(diagram, coeffs, x)
             + generator_measure(diagram, coeffs, y))
    if total.denominator != 1:
        raise ConsistencyError(f"non-integral Maslov index {total}")
    return int(total)


# ---------------------------------------------------------------------------
# Spin^c classes, divisibility, relative grading
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SpincClass:
    """Equivalence class of generators under connecting domains."""

    index: int
    members: tuple[Generator, ...]
    anchor: Generator
    divisibility: int


def _grading_value(diagram: HeegaardDiagram, x: Generator, y: Generator, coeffs) -> int:
    total = (euler_measure(diagram, coeffs)
             + generator_measure(diagram, coeffs, x)
             + generator_measure(diagram, coeffs, y)
             - 2 * basepoint_multiplicity(diagram, coeffs))
    if total.denominator != 1:
        raise ConsistencyError(f"non-integral grading value {total}")
    return int(total)


def divisibility(diagram: HeegaardDiagram, anchor: Generator) -> int:
    """gcd of mu(P) - 2 n_z(P) over the periodic lattice, evaluated at the
    anchor with x = y; 0 encodes an integer-valued relative grading.

    The full-surface class contributes mu = 2 and n_z = 1, hence 0.
    """
    values = [_grading_value(diagram, anchor, anchor, vec)
              for vec in homogeneous_lattice(diagram)]
    g = 0
    for v in values:
        g = gcd(g, abs(v))
    return g


def _anchor_key(diagram: HeegaardDiagram, g: Generator) -> tuple[str, ...]:
    return tuple(sorted(diagram.vertex_names[v] for v in g.vertices))


@lru_cache(maxsize=None)
def spinc_partition(diagram: HeegaardDiagram) -> tuple[SpincClass, ...]:
    """Partition the generators by corner-system solvability.

    Solvability is an equivalence relation; the implementation verifies
    transitivity explicitly (every pair inside a class must connect, every
    pair across classes must not).  Each class gets a deterministic anchor
    (lexicographically minimal sorted vertex names) and its divisibility.
    """
    gens = enumerate_generators(diagram)
    classes: list[list[Generator]] = []
    for g in gens:
        for cls in classes:
            if solve_domain(diagram, cls[0], g) is not None:
                cls.append(g)
                break
        else:
            classes.append([g])

    for cls in classes:
        for a, b in itertools.combinations(cls, 2):
            if solve_domain(diagram, a, b) is None:
                raise ConsistencyError("connectivity of generators is not transitive")
    for c1, c2 in itertools.combinations(classes, 2):
        for a in c1:
            for b in c2:
                if solve_domain(diagram, a, b) is not None:
                    raise ConsistencyError("distinct classes contain a connected pair")

    out = []
    for i, cls in enumerate(classes):
        anchor = min(cls, key=lambda g: _anchor_key(diagram, g))
        out.append(SpincClass(i, tuple(cls), anchor, divisibility(diagram, anchor)))
    return tuple(out)


def spinc_class_of(diagram: HeegaardDiagram, g: Generator) -> SpincClass:
    for cls in spinc_partition(diagram):
        if g in cls.members:
            return cls
    raise KeyError(f"{g} is not a generator of this diagram")


def relative_grading(diagram: HeegaardDiagram, x: Generator, y: Generator) -> int:
    """gr(x, y) = mu(A) - 2 n_z(A) for any connecting A, reduced mod d.

    Independent of the choice of A: two choices differ by a periodic
    class, whose grading value is a multiple of d by construction.
    Raises ``NoConnectingClassError`` when the classes differ.
    """
    dom = solve_domain(diagram, x, y)
    if dom is None:
        raise NoConnectingClassError(
            f"{x.display(diagram)} and {y.display(diagram)} lie in different Spin^c classes")
    value = _grading_value(diagram, x, y, dom.coefficients)
    d = spinc_class_of(diagram, x).divisibility
    return value % d if d else value


# ---------------------------------------------------------------------------
# Grading labels
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GradingLabel:
    """Affine grading coordinate: offset relative to the class anchor.

    ``modulus`` 0 means integer-valued; otherwise the offset is a residue
    in [0, modulus).  ``level`` records the accumulated [x, i] shifts.
    """

    spinc: int
    offset: int
    modulus: int
    level: int = 0


@lru_cache(maxsize=None)
def grading_table(diagram: HeegaardDiagram) -> tuple[tuple[Generator, GradingLabel], ...]:
    """Label every generator: (class id, grading offset relative to anchor).

    The anchor of each class gets offset 0; label differences within a
    class realize the relative grading.
    """
    rows = []
    for g in enumerate_generators(diagram):
        cls = spinc_class_of(diagram, g)
        off = relative_grading(diagram, g, cls.anchor)
        rows.append((g, GradingLabel(cls.index, off, cls.divisibility)))
    return tuple(rows)


def label_of(diagram: HeegaardDiagram, g: Generator) -> GradingLabel:
    for gen, label in grading_table(diagram):
        if gen == g:
            return label
    raise KeyError(f"{g} is not a generator of this diagram")


def shift_label(label: GradingLabel, i: int) -> GradingLabel:
    """The [x, i] action: the grading moves by 2 i (mod d when d > 0)."""
    off = label.offset + 2 * i
    if label.modulus:
        off %= label.modulus
    return replace(label, offset=off, level=label.level + i)


@dataclass(frozen=True)
class TwistedElement:
    """Formal sum of group-ring multiples of generators.

    Each summand pairs an exponent vector over a fixed H^1 basis with a
    generator; the exponent is ignored by the grading.
    """

    summands: tuple[tuple[tuple[int, ...], Generator], ...]

    def __post_init__(self):
        if not self.summands:
            raise ValueError("twisted element must have at least one summand")


def twisted_label(diagram: HeegaardDiagram, element: TwistedElement) -> GradingLabel:
    """Grading of a twisted element: the common label of its generators.

    The twisting exponents are ignored.  Raises ``MixedLabelError`` when
    the summands are not homogeneous.
    """
    labels = {label_of(diagram, g) for _, g in element.summands}
    if len(labels) != 1:
        raise MixedLabelError(f"summands carry {len(labels)} distinct labels")
    return labels.pop()


# ---------------------------------------------------------------------------
# Q-grading shift arithmetic
# ---------------------------------------------------------------------------

def theta_and_shift(c1_squared, chi: int, sigma: int) -> tuple[Fraction, Fraction]:
    """theta = c1^2 - 2 chi - 3 sigma and the grading shift theta / 4.

    ``c1_squared`` is the self-pairing of (the Poincare dual of) the first
    Chern class of the almost-complex 4-manifold; chi and sigma are its
    Euler characteristic and signature.
    """
    theta = Fraction(c1_squared) - 2 * chi - 3 * sigma
    return theta, theta / 4


def gr0_of_theta(theta) -> Fraction:
    """Absolute Q-grading coordinate (2 + theta) / 4 of a torsion class."""
    return (2 + Fraction(theta)) / 4


# ---------------------------------------------------------------------------
# First homology of the underlying 3-manifold
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Homology:
    b1: int
    torsion: tuple[int, ...]

    @property
    def order(self) -> int:
        """|H1|, or 0 when infinite."""
        if self.b1:
            return 0
        out = 1
        for t in self.torsion:
            out *= t
        return out


@lru_cache(maxsize=None)
def homology_of_Y(diagram: HeegaardDiagram) -> Homology:
    """H1 of the 3-manifold: H1(surface) / (alpha and beta curve classes).

    The surface's 1-skeleton is the diagram graph extended by one bridge
    edge between consecutive boundary circles of every multi-circle
    region and two loop edges per unit of region genus (the bridges make
    paths through a region visible to the cycle space; the loops carry
    the region's own handles).  Cycle coordinates live on the non-tree
    edges of a spanning forest; each region imposes one relation (the sum
    of its boundary circles), each curve one more, and the Smith form of
    the relation matrix gives b1 and the torsion coefficients.
    """
    nv = diagram.n_vertices
    parent = list(range(nv))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    edges: list[tuple[int, int]] = [(a.tail, a.head) for a in diagram.arcs]
    arc_edge = list(range(len(diagram.arcs)))

    def circle_anchor(face: int) -> int:
        d = diagram.faces[face][0]
        arc = diagram.arcs[d // 2]
        return arc.tail if d % 2 == 0 else arc.head

    for r in diagram.regions:
        a0 = circle_anchor(r.faces[0])
        for f in r.faces[1:]:
            edges.append((a0, circle_anchor(f)))
        for _ in range(2 * r.genus):
            edges.append((a0, a0))

    nontree: list[int] = []
    for idx, (u, v) in enumerate(edges):
        ru, rv = find(u), find(v)
        if ru == rv:
            nontree.append(idx)
        else:
            parent[ru] = rv

    col_of = {e: i for i, e in enumerate(nontree)}
    ncols = len(nontree)

    def walk_row(darts) -> list[int]:
        row = [0] * ncols
        for d in darts:
            e = arc_edge[d // 2]
            if e in col_of:
                row[col_of[e]] += 1 if d % 2 == 0 else -1
        return row

    rows = []
    for r in diagram.regions:
        acc = [0] * ncols
        for f in r.faces:
            for i, x in enumerate(walk_row(diagram.faces[f])):
                acc[i] += x
        rows.append(acc)
    for curves in (diagram.alpha, diagram.beta):
        for name, _ in curves:
            darts = [2 * a.index for a in diagram.arcs if a.curve == name]
            rows.append(walk_row(darts))

    inv = smith_invariants(IntMatrix.from_rows(rows, ncols))
    nonzero = [d for d in inv if d]
    b1 = ncols - len(nonzero)
    torsion = tuple(d for d in nonzero if d > 1)
    return Homology(b1, torsion)
