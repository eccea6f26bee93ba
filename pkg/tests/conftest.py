"""Shared fixtures: the benchmark diagrams used across the test modules."""

import pytest

from hfcalc.atlas import build_annulus_open_book, build_s1s2, build_torus_diagram
from hfcalc.diagram import load_diagram

S3_TEXT = """heegaard v1
genus: 1
alpha a0: x0+
beta  b0: x0
basepoint: a0 x0 left-after
"""

L31_TEXT = """heegaard v1
genus: 1
alpha a0: x0+ x1+ x2+
beta  b0: x0 x2 x1
basepoint: a0 x0 right-after
"""

# Same curves as the S1 x S2 diagram but with the other valid circle
# pairing: one class of two generators with divisibility 2 (a Spin^c
# structure with nontorsion first Chern class).
D2_TEXT = """heegaard v1
genus: 1
alpha a0: x0+ x1-
beta  b0: x0 x1
basepoint: a0 x1 left-after
region rA: genus=0 circles=a0.0+ a0.1-
"""

# An S1 x S2 diagram with two finger pairs: one class of four generators,
# rich in auxiliary corners.
TWO_FINGER_TEXT = """heegaard v1
genus: 1
alpha a0: x0+ x1- x2+ x3-
beta  b0: x0 x1 x2 x3
basepoint: a0 x3 left-after
region rA: genus=0 circles=a0.0- a0.1+
"""


@pytest.fixture(scope="session")
def s3():
    return load_diagram(S3_TEXT)


@pytest.fixture(scope="session")
def l31():
    return load_diagram(L31_TEXT)


@pytest.fixture(scope="session")
def s1s2():
    return build_s1s2().diagram


@pytest.fixture(scope="session")
def d2_diagram():
    return load_diagram(D2_TEXT)


@pytest.fixture(scope="session")
def two_finger():
    return load_diagram(TWO_FINGER_TEXT)


@pytest.fixture(scope="session")
def atlas_suite():
    """The builder outputs exercised by the invariance and rank tests."""
    diagrams = [build_torus_diagram(p, 1).diagram for p in range(1, 6)]
    diagrams.append(build_s1s2().diagram)
    diagrams.extend(build_annulus_open_book(n).diagram for n in range(0, 4))
    return diagrams
