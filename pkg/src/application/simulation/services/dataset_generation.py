"""
모의 자료 생성 모듈
"""

from dataclasses import dataclass

from rfs.core.result import Failure, Result, Success

from ....domain.errors import EstimationError
from ....domain.simulation.value_objects.true_model import SimulatedData, TrueModel
from ....domain.survival.value_objects.observation import SurvivalSample
from ....shared.random_streams import StreamPurpose, stream_for
from ..dto.simulation_dto import SimulationConfig


@dataclass(frozen=True)
class GeneratedDataset:
    """표본과 숨겨진 참값 (치유 여부, 비치유 응답)"""

    sample: SurvivalSample
    truth: SimulatedData
    run_index: int


def draw_dataset(
    n: int,
    seed: int,
    run_index: int,
    model: TrueModel | None = None,
    purpose: StreamPurpose = StreamPurpose.DATASET,
) -> Result[GeneratedDataset, EstimationError]:
    """
    (seed, run_index) 스트림으로 크기 n 자료 생성

    Args:
        n: 표본 크기
        seed: 시드
        run_index: 반복 번호
        model: 참 모형 (기본 설정)
        purpose: 스트림 용도 (커버리지 연구는 COVERAGE)

    Returns:
        Result: 사건이 하나도 없는 극단적 자료면 NO_EVENTS
    """
    model = model or TrueModel()
    truth = model.draw(stream_for(seed, run_index, purpose), n)
    sample = SurvivalSample.create(truth.x, truth.z, truth.delta, tie_seed=seed)
    if sample.is_failure():
        return Failure(sample.unwrap_error())
    return Success(GeneratedDataset(sample=sample.unwrap(), truth=truth, run_index=run_index))


def generate_dataset(
    config: SimulationConfig, run_index: int
) -> Result[GeneratedDataset, EstimationError]:
    """설정의 n, seed, 점수 함수로 run_index 번째 자료 생성"""
    return draw_dataset(config.n, config.seed, run_index, config.true_model())
