"""
テスト共通の設定。

src/start.py と同じように src を sys.path に追加し、シード固定の乱数を提供する。
シードは pytest --seed N で変えられる（既定は SURFEXT_SEED または固定値）。
"""

from __future__ import annotations

import os
import sys
from typing import Callable

import numpy as np
import pytest

SRC_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "src")
if SRC_DIR not in sys.path:
    sys.path.insert(0, SRC_DIR)

from surfext import config  # noqa: E402
from surfext.homology import HomologySpace  # noqa: E402
from surfext.twist import HomologyAction, random_symplectic  # noqa: E402


def pytest_addoption(parser: pytest.Parser) -> None:
    parser.addoption("--seed", type=int, default=None, help="乱数を使うテストのシード")


def resolve_seed(option: int | None) -> int:
    return config.get_default_seed() if option is None else option


@pytest.fixture
def seed(request: pytest.FixtureRequest) -> int:
    return resolve_seed(request.config.getoption("--seed"))


@pytest.fixture
def rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


@pytest.fixture
def random_action(rng: np.random.Generator) -> Callable[[HomologySpace], HomologyAction]:
    """
    長さ 1..3g+3 のランダムな横断写像の積を返す関数。短い積も混ぜて d の大きい作用も出す。
    """

    def make(space: HomologySpace) -> HomologyAction:
        length = int(rng.integers(1, 3 * space.genus + 4))
        return random_symplectic(space, rng, length)

    return make
