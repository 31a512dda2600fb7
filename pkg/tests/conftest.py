"""
공용 테스트 픽스처
"""

import pytest

from src.application.simulation.services.dataset_generation import draw_dataset
from src.domain.smoothing.value_objects.kernel_spec import KernelFamily, KernelSpec
from src.domain.survival.value_objects.observation import SurvivalSample


@pytest.fixture
def km_sample() -> SurvivalSample:
    """
    공변량이 모두 같은 5개 관측치

    가중치가 균등하므로 Beran 추정은 Kaplan-Meier 와 같습니다.
    Q̂ 점프: z=1 → 1/5, z=3 → 7/15, z=4 → 11/15
    """
    return SurvivalSample.create(
        [0.0] * 5, [1.0, 2.0, 3.0, 4.0, 5.0], [1, 0, 1, 1, 0]
    ).unwrap()


@pytest.fixture
def spread_sample() -> SurvivalSample:
    """공변량이 흩어진 소표본"""
    return SurvivalSample.create(
        [-1.0, -0.5, 0.0, 0.5, 1.0, -0.75, 0.25, 0.75],
        [1.0, 2.5, 0.5, 3.0, 2.0, 1.5, 3.5, 4.0],
        [1, 1, 0, 1, 1, 1, 0, 1],
    ).unwrap()


@pytest.fixture
def wide_spec() -> KernelSpec:
    """모든 관측치에 양의 가중치를 주는 넓은 창"""
    return KernelSpec(family=KernelFamily.BIWEIGHT, bandwidth=5.0)


@pytest.fixture(scope="session")
def simulated_sample() -> SurvivalSample:
    """참 모형에서 생성한 n=100 표본"""
    return draw_dataset(100, 7, 0).unwrap().sample
