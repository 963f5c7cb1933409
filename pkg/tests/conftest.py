import pathlib

import pytest

from gbott import StageSpec, TowerSpec, product_tower

DATA = pathlib.Path(__file__).parent / "data"


def hirzebruch(a: int) -> TowerSpec:
    """Height-2 tower of lines with a single twist coefficient."""
    return TowerSpec((StageSpec(1), StageSpec(1, ((a,),))))


@pytest.fixture
def qtwin_a() -> TowerSpec:
    """P(C^3 + L) over CP^2, L the tautological line bundle."""
    return TowerSpec((StageSpec(2), StageSpec(3, ((0,), (0,), (1,)))))


@pytest.fixture
def qtwin_b() -> TowerSpec:
    """P(C^3 + L^2) over CP^2: Q-isomorphic to qtwin_a but not
    Z-isomorphic."""
    return TowerSpec((StageSpec(2), StageSpec(3, ((0,), (0,), (2,)))))


@pytest.fixture
def cp2_x_cp3() -> TowerSpec:
    return product_tower((2, 3))


@pytest.fixture
def data_dir() -> pathlib.Path:
    return DATA
