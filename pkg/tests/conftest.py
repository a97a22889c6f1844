import math

import numpy as np
import pytest

from src.libs.rootiter import Exponent
from src.models import StarParams, StarTip, single_cusp
from src.star2d import symmetric_star


@pytest.fixture
def rng():
    """Seeded generator so random samples are reproducible."""
    return np.random.default_rng(20240611)


@pytest.fixture
def cube_root_cusp():
    """|x - 0.2|^(1/3) with zero background."""
    return single_cusp(a=0.2, r=1, s=3)


@pytest.fixture
def one_tip_star():
    """A single tip at angle 0."""
    return StarParams(
        r0=0.4,
        tips=(StarTip(0.0, 0.3, 4.0, Exponent(1, 3)),),
        sharpness=25.0,
    )


@pytest.fixture
def five_tip_star():
    """The shipped symmetric star."""
    return symmetric_star(
        tips=5,
        r0=0.45,
        weight=0.28,
        decay=4.0,
        exponent=Exponent(1, 3),
        sharpness=25.0,
        theta0=math.pi / 2,
    )


@pytest.fixture
def out_dir(tmp_path):
    """Per-test output directory for experiment files."""
    return tmp_path / "results"
