"""
Monte Carlo 시뮬레이션 서비스 모듈

반복마다 자료를 생성하고 경험 대역폭으로 모형을 적합한 뒤, 평가 지점과 AMISE 격자에서
F̂ − F 의 제곱오차를 모아 n 배한 평균(AMSE)과 적분(AMISE)을 계산합니다.

반복은 스레드 풀에서 실행되지만 결과는 반복 번호 순서로 모아 직렬로 줄이므로
워커 수와 무관하게 보고서가 비트 단위로 같습니다.
"""

import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import List, Sequence, Tuple

import numpy as np
from numpy.typing import NDArray
from rfs.core.result import Failure, Result, Success
from scipy.integrate import trapezoid

from ....domain.cure_model.services.cure_estimators import fit_cure_model
from ....domain.cure_model.services.error_distribution import estimate_F
from ....domain.cure_model.value_objects.score_function import ScoreFunction
from ....domain.errors import ErrorKind, EstimationError, estimation_error
from ....domain.smoothing.services.kernel_smoothing import default_bandwidth, sample_sigma
from ....domain.smoothing.value_objects.kernel_spec import BandwidthRule, KernelFamily, KernelSpec
from ....shared.logging import get_logger
from ..dto.simulation_dto import MonteCarloReport, SimulationConfig
from .dataset_generation import generate_dataset

logger = get_logger(__name__)


@dataclass(frozen=True)
class RunOutcome:
    """
    반복 하나의 결과

    Attributes:
        run_index: 반복 번호
        bandwidth: 사용한 대역폭
        point_errors: 평가 지점별 (F̂ − F)²
        grid_errors: AMISE 격자의 (F̂ − F)²
    """

    run_index: int
    bandwidth: float
    point_errors: NDArray[np.float64]
    grid_errors: NDArray[np.float64]


def simulate_run(config: SimulationConfig, run_index: int) -> Result[RunOutcome, EstimationError]:
    """
    반복 하나 실행

    Args:
        config: 시뮬레이션 설정
        run_index: 반복 번호

    Returns:
        Result[RunOutcome, EstimationError]: F̂ 자체를 계산할 수 없을 때만 실패
    """
    dataset = generate_dataset(config, run_index)
    if dataset.is_failure():
        return Failure(dataset.unwrap_error())
    sample = dataset.unwrap().sample

    rule = BandwidthRule(c=config.c, gamma=config.gamma)
    bandwidth = default_bandwidth(rule, sample.n, sample_sigma(sample.x))
    spec = KernelSpec(family=KernelFamily(config.kernel), bandwidth=bandwidth)
    score = ScoreFunction(p_l=config.score_threshold, scale=config.score_scale)

    model = fit_cure_model(sample, spec, score)
    if model.is_failure():
        return Failure(model.unwrap_error())

    points = np.asarray(config.eval_points, dtype=np.float64)
    grid = config.amise_points()
    values = estimate_F(model.unwrap(), np.concatenate((points, grid)))
    if values.is_failure():
        return Failure(values.unwrap_error())

    truth = config.true_model().error_cdf(np.concatenate((points, grid)))
    squared = (np.asarray(values.unwrap()) - truth) ** 2
    return Success(
        RunOutcome(
            run_index=run_index,
            bandwidth=bandwidth,
            point_errors=squared[: len(points)],
            grid_errors=squared[len(points) :],
        )
    )


class MonteCarloService:
    """
    Monte Carlo 시뮬레이션 서비스

    (n, C, γ) 조합마다 run_monte_carlo 를 실행해 표 형태 결과를 만듭니다.
    """

    def __init__(self, max_workers: int = 1):
        """
        서비스 초기화

        Args:
            max_workers: 반복 병렬 처리 워커 수 (기본값: 1)
        """
        self._max_workers = max(1, int(max_workers))

    def run_monte_carlo(
        self, config: SimulationConfig
    ) -> Result[MonteCarloReport, EstimationError]:
        """
        AMSE / AMISE 계산

        Args:
            config: 시뮬레이션 설정

        Returns:
            Result: 모든 반복이 실패하면 ALL_RUNS_FAILED
        """
        start_time = time.time()
        logger.log_operation(
            "run_monte_carlo",
            n=config.n,
            runs=config.runs,
            rule=config.rule_label,
            seed=config.seed,
        )

        with ThreadPoolExecutor(max_workers=self._max_workers) as executor:
            outcomes = list(
                executor.map(lambda index: simulate_run(config, index), range(config.runs))
            )

        successes: List[RunOutcome] = []
        failure_kinds: Counter = Counter()
        for outcome in outcomes:
            if outcome.is_success():
                successes.append(outcome.unwrap())
            else:
                failure_kinds[outcome.unwrap_error().kind.value] += 1

        if not successes:
            error = estimation_error(
                ErrorKind.ALL_RUNS_FAILED,
                f"run_monte_carlo: {config.runs}번 반복이 모두 실패했습니다 ({dict(failure_kinds)})",
                failures=dict(failure_kinds),
            )
            logger.log_error_with_context(error, "run_monte_carlo")
            return Failure(error)

        point_mse = np.mean(np.vstack([run.point_errors for run in successes]), axis=0)
        grid_mse = np.mean(np.vstack([run.grid_errors for run in successes]), axis=0)
        amise = config.n * float(trapezoid(grid_mse, config.amise_points()))

        report = MonteCarloReport(
            amse={float(t): config.n * float(v) for t, v in zip(config.eval_points, point_mse)},
            amise=amise,
            runs=config.runs,
            failures=config.runs - len(successes),
            failure_kinds=dict(failure_kinds),
            mean_bandwidth=float(np.mean([run.bandwidth for run in successes])),
            config=config,
        )

        if report.failures:
            logger.warning("일부 반복 실패", failures=report.failures, kinds=dict(failure_kinds))
        logger.log_performance(
            "run_monte_carlo",
            (time.time() - start_time) * 1000,
            n=config.n,
            rule=config.rule_label,
            amise=amise,
        )
        return Success(report)

    def run_grid(
        self,
        base: SimulationConfig,
        sample_sizes: Sequence[int],
        rules: Sequence[Tuple[float, float]],
    ) -> Result["MonteCarloTables", EstimationError]:
        """
        n × (C, γ) 조합 전체 실행

        모든 조합은 같은 seed 를 써서 같은 n 에서는 같은 자료를 공유합니다.

        Returns:
            Result: 한 조합이라도 ALL_RUNS_FAILED 면 실패
        """
        reports: List[MonteCarloReport] = []
        for n, (c, gamma) in product(sample_sizes, rules):
            config = SimulationConfig(
                **{**base.model_dump(), "n": int(n), "c": float(c), "gamma": float(gamma)}
            )
            result = self.run_monte_carlo(config)
            if result.is_failure():
                return Failure(result.unwrap_error())
            reports.append(result.unwrap())
        return Success(MonteCarloTables(reports=reports))


@dataclass(frozen=True)
class MonteCarloTables:
    """조합별 보고서 묶음 (행 순서: n 다음 (C, γ))"""

    reports: List[MonteCarloReport] = field(default_factory=list)

    @property
    def eval_points(self) -> List[float]:
        return list(self.reports[0].config.eval_points) if self.reports else []


def run_monte_carlo(
    config: SimulationConfig, workers: int = 1
) -> Result[MonteCarloReport, EstimationError]:
    """MonteCarloService 단축 함수"""
    return MonteCarloService(max_workers=workers).run_monte_carlo(config)
