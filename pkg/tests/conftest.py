import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from socle_lab.field import Field
from socle_lab.ring import RingPresentation


@pytest.fixture
def gf():
    return Field.prime()


@pytest.fixture
def qq():
    return Field.rationals()


@pytest.fixture
def plane(gf):
    return RingPresentation(gf, "xy")


@pytest.fixture
def embedded(gf):
    # line with an embedded point
    return RingPresentation(gf, "xy", ["x^2, x*y"])


@pytest.fixture
def buchsbaum(gf):
    return RingPresentation(gf, "xyuv", ["x*u, x*v, y*u, y*v"])


@pytest.fixture
def example2(gf):
    return RingPresentation(gf, "xyw", ["x^2*w, w^2"])
