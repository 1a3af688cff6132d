from __future__ import annotations

import pytest

from lightcone_detectors.quadrature import QuadratureConfig
from lightcone_detectors.scenario import Scenario


@pytest.fixture
def cfg() -> QuadratureConfig:
    return QuadratureConfig(rel_tol=1e-8, uv_damping=0.05)


@pytest.fixture
def bench() -> Scenario:
    return Scenario()
