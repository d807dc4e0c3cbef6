from typing import Dict

import numpy as np
import pytest

from bounded_credible.models import get_model
from bounded_credible.pivots import get_pivot
from bounded_credible.schemas.pivot_models import PivotModel
from bounded_credible.schemas.pivots import PivotDistribution

from .helpers import CATALOG_MODEL_PARAMS


@pytest.fixture(name="standard_normal", scope="session")
def fixture_standard_normal() -> PivotDistribution:
    return get_pivot("normal")


@pytest.fixture(name="exponential", scope="session")
def fixture_exponential() -> PivotDistribution:
    return get_pivot("exponential")


@pytest.fixture(name="rng")
def fixture_rng() -> np.random.Generator:
    return np.random.default_rng(20240917)


@pytest.fixture(name="catalog_models", scope="session")
def fixture_catalog_models() -> Dict[str, PivotModel]:
    return {
        name: get_model(name, params) for name, params in CATALOG_MODEL_PARAMS.items()
    }


@pytest.fixture(name="get_catalog_model")
def fixture_get_catalog_model(catalog_models):
    def _get_catalog_model(name: str) -> PivotModel:
        return catalog_models[name]

    return _get_catalog_model
