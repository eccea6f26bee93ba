"""Layer decomposition, corner classification, and audit identities."""

import itertools
import random
from fractions import Fraction

import pytest

from hfcalc.atlas import build_torus_diagram
from hfcalc.grading import (enumerate_generators, homogeneous_lattice, maslov_index,
                            solve_domain)
from hfcalc.layers import (AUXILIARY, BOUNDARY_DEGENERATE, CONCAVE, CONVEX, EDGE_POINT,
                           INTERIOR, INTERIOR_DEGENERATE, audit_index, classify_corner,
                           decompose_layers, layer_euler, layer_index)


def kinds(mults, level, in_x, in_y):
    return [c.kind for c in classify_corner(mults, level, in_x, in_y)]


def shapes(mults, level, in_x, in_y):
    return [c.shape for c in classify_corner(mults, level, in_x, in_y)]


# ---------------------------------------------------------------------------
# classify_corner
# ---------------------------------------------------------------------------

def test_classify_convex_x_corner():
    (c,) = classify_corner((1, 0, 0, 0), 1, True, False)
    assert c.kind == CONVEX and c.shape == CONVEX and c.role == "x"


def test_classify_concave_y_corner():
    (c,) = classify_corner((1, 1, 1, 0), 1, False, True)
    assert c.kind == CONCAVE and c.role == "y"


def test_classify_auxiliary_convex_at_level_two():
    (c,) = classify_corner((2, 1, 1, 1), 2, False, False)
    assert c.kind == AUXILIARY and c.shape == CONVEX
    assert c.sign == 1  # jumps a = -1, b = -1 have equal signs


def test_classify_auxiliary_negative_type():
    out = classify_corner((1, 2, 1, 0), 2, False, False)
    assert [c.kind for c in out] == [AUXILIARY]
    assert out[0].sign == -1  # a = +1, b = -1


def test_classify_edge_and_interior():
    assert kinds((1, 1, 0, 0), 1, False, False) == [EDGE_POINT]
    assert kinds((1, 1, 1, 1), 1, False, False) == [INTERIOR]
    assert kinds((1, 1, 1, 1), 1, True, True) == [INTERIOR_DEGENERATE]
    assert kinds((0, 0, 0, 0), 1, True, False) == []


def test_classify_degenerate_shapes():
    assert kinds((1, 1, 0, 0), 1, True, True) == [BOUNDARY_DEGENERATE]
    assert shapes((1, 0, 0, 0), 1, True, True) == [CONVEX]
    assert kinds((1, 0, 0, 0), 1, True, True) == [BOUNDARY_DEGENERATE]


def test_classify_opposite_pattern_splits():
    out = classify_corner((1, 0, 1, 0), 1, False, False)
    assert len(out) == 2
    assert all(c.shape == CONVEX for c in out)
    assert [c.quadrants for c in out] == [(0,), (2,)]


def test_classify_interior_role():
    (c,) = classify_corner((2, 1, 1, 1), 1, True, False)
    assert c.kind == INTERIOR and c.role == "x"


# ---------------------------------------------------------------------------
# decompose_layers / layer_euler / layer_index
# ---------------------------------------------------------------------------

def test_decompose_zero_domain(s1s2):
    x, y = enumerate_generators(s1s2)
    assert decompose_layers(s1s2, x, x, [0] * s1s2.n_regions) == ()


def test_decompose_single_layer(s1s2):
    x, y = enumerate_generators(s1s2)
    layers = decompose_layers(s1s2, x, y, [0, 1, 0])
    assert len(layers) == 1


def test_decompose_rejects_negative(s1s2):
    x, y = enumerate_generators(s1s2)
    with pytest.raises(ValueError):
        decompose_layers(s1s2, x, y, [-1, 1, 0])


def test_decompose_nesting(s1s2):
    x, y = enumerate_generators(s1s2)
    coeffs = [2, 1, 1]
    layers = decompose_layers(s1s2, x, y, coeffs)
    assert len(layers) == 2
    assert set(layers[1].regions) <= set(layers[0].regions)
    assert layers[0].regions == (0, 1, 2)
    assert layers[1].regions == (0,)


def test_layer_euler_square():
    # A single parallelogram of the two-region torus diagram: a disk,
    # counted as 4 clusters - 4 arcs + 1.
    d = build_torus_diagram(2, 1).diagram
    x, y = enumerate_generators(d)
    (layer,) = decompose_layers(d, x, y, [1, 0])
    assert layer_euler(d, layer) == 1
    assert len(layer.clusters) == 4
    assert len(layer.arcs) == 4


def test_layer_euler_annulus():
    # Two adjacent parallelograms of the three-region torus diagram glue
    # into an annulus.
    d = build_torus_diagram(3, 1).diagram
    gens = enumerate_generators(d)
    coeffs = [1, 1, 0]
    (layer,) = decompose_layers(d, gens[0], gens[0], coeffs)
    assert layer_euler(d, layer) == 0


def test_layer_euler_full_torus(s3):
    (g,) = enumerate_generators(s3)
    (layer,) = decompose_layers(s3, g, g, [1])
    # one interior cluster, two arcs, one region of chi 1
    assert layer_euler(s3, layer) == 0


def test_layer_index_bigon(s1s2):
    x, y = enumerate_generators(s1s2)
    bigon = [1 if s1s2.canonical_region_name(i) == "a0.0+" else 0
             for i in range(s1s2.n_regions)]
    (layer,) = decompose_layers(s1s2, x, y, bigon)
    assert layer_index(s1s2, x, y, layer) == 1
    assert layer_index(s1s2, x, y, layer) == maslov_index(s1s2, x, y, bigon)


def test_layer_index_rectangle_with_two_x_two_y_corners():
    # Synthetic level set: the square of the two-region torus diagram with
    # the two vertices declared x- and y-corners; each vertex splits into
    # two opposite convex clusters, so chi - p/4 + n_x + n_y = 1.
    d = build_torus_diagram(2, 1).diagram
    x, y = enumerate_generators(d)
    (layer,) = decompose_layers(d, x, y, [1, 0])
    assert layer_index(d, x, y, layer) == 1


def test_layer_index_zero_domain_sum(s1s2):
    x, _ = enumerate_generators(s1s2)
    layers = decompose_layers(s1s2, x, x, [0] * s1s2.n_regions)
    assert sum((layer_index(s1s2, x, x, l) for l in layers), Fraction(0)) == 0


# ---------------------------------------------------------------------------
# audit_index
# ---------------------------------------------------------------------------

def test_audit_bigon(s1s2):
    x, y = enumerate_generators(s1s2)
    bigon = [1 if s1s2.canonical_region_name(i) == "a0.0+" else 0
             for i in range(s1s2.n_regions)]
    report = audit_index(s1s2, x, y, bigon)
    assert report.maslov == 1
    assert report.layer_sum == 1
    assert len(report.layers) == 1
    assert report.layers[0].chi == 1
    assert report.layers[0].concave == 0
    assert report.single_layer_identity is True


def test_audit_zero_domain(s1s2):
    x, _ = enumerate_generators(s1s2)
    report = audit_index(s1s2, x, x, [0] * s1s2.n_regions)
    assert report.layers == ()
    assert report.layer_sum == 0 == report.maslov


def test_audit_bigon_plus_full_surface(s1s2):
    x, y = enumerate_generators(s1s2)
    bigon = [1 if s1s2.canonical_region_name(i) == "a0.0+" else 0
             for i in range(s1s2.n_regions)]
    coeffs = [c + 1 for c in bigon]
    report = audit_index(s1s2, x, y, coeffs)
    assert report.maslov == 3
    assert report.layer_sum == 3
    assert len(report.layers) == 2


def test_audit_interior_degenerate_full_surface(s3):
    (g,) = enumerate_generators(s3)
    report = audit_index(s3, g, g, [1])
    assert report.maslov == 2
    assert report.layers[0].interior_degenerate == 1


def test_audit_exercises_auxiliary_corners(two_finger):
    gens = {g.display(two_finger): g for g in enumerate_generators(two_finger)}
    x, y = gens["x0"], gens["x2"]
    dom = solve_domain(two_finger, x, y)
    rng = random.Random(3)
    seen_aux = False
    for _ in range(200):
        steps = [rng.randint(-3, 3) for _ in dom.lattice]
        cand = dom.translate(steps)
        if any(c < 0 for c in cand.coefficients):
            continue
        report = audit_index(two_finger, x, y, cand)
        if report.positive_vertices or report.negative_vertices:
            seen_aux = True
    assert seen_aux


@pytest.mark.parametrize("fixture", ["s1s2", "d2_diagram", "two_finger"])
def test_audit_identities_over_translates(fixture, request):
    d = request.getfixturevalue(fixture)
    gens = enumerate_generators(d)
    rank = len(homogeneous_lattice(d))
    audited = 0
    for x in gens:
        for y in gens:
            base = solve_domain(d, x, y)
            if base is None:
                continue
            seen = set()
            for combo in itertools.product(range(-3, 4), repeat=rank):
                cand = base.translate(combo)
                c = cand.coefficients
                if any(v < 0 for v in c) or max(c, default=0) > 3 or c in seen:
                    continue
                seen.add(c)
                audit_index(d, x, y, cand)  # raises AuditError on failure
                audited += 1
    assert audited > 10
