import numpy as np
import pytest

from polygen.constants.presets import PRESETS
from polygen.primitives.polynomial import RootSet
from polygen.primitives.seeds import AffineParams, SecondOrderParams, SeedSpec
from tests.helpers import START


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def start() -> RootSet:
    return START


@pytest.fixture
def isochronous_seed() -> SeedSpec:
    example = PRESETS["1a"]
    params = AffineParams.from_multipliers(example.multipliers, example.offsets)
    return SeedSpec("affine", params, 2)


@pytest.fixture
def asymptotic_seed() -> SeedSpec:
    example = PRESETS["1b"]
    params = AffineParams.from_multipliers(example.multipliers, example.offsets)
    return SeedSpec("affine", params, 2)


@pytest.fixture
def second_order_seed() -> SeedSpec:
    example = PRESETS["4"]
    params = SecondOrderParams.from_multipliers(example.multipliers, example.offsets)
    return SeedSpec("second-order-multiplicative", params, 2)


@pytest.fixture
def second_order_start() -> tuple[RootSet, RootSet]:
    x0, x1 = PRESETS["4"].initial
    return RootSet(x0), RootSet(x1)
