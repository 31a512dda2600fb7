"""
부트스트랩 신뢰대 서비스 모듈

적합된 모형에서 자료를 다시 생성해 F̂ 를 재적합하고, 점별 백분위 신뢰대를 만듭니다.

복제 하나의 절차:
1. 공변량을 복원추출
2. F̂ 의 계단 표현에서 역변환으로 오차를 뽑고 J 가중 위치 0, 척도 1 로 표준화
3. 비치유 응답 m̂(x*) + ŝ(x*)·ε*
4. Bernoulli(π̂(x*)) 로 치유 여부, 치유면 응답 +∞
5. x* 의 Beran 중도절단 분포에서 역변환으로 중도절단 시간
6. z* = min, δ* = 1[응답 ≤ 중도절단] 로 재적합 후 격자 위 F̂*
"""

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
from numpy.typing import NDArray
from rfs.core.result import Failure, Result, Success

from ....domain.cure_model.entities.fitted_cure_model import FittedCureModel
from ....domain.cure_model.services.cure_estimators import fit_cure_model
from ....domain.cure_model.services.error_distribution import (
    DEFAULT_GRID_STEPS,
    collect_standardized_fits,
    estimate_F,
    estimate_F_grid,
)
from ....domain.cure_model.value_objects.score_function import (
    empirical_breakpoints,
    standardization_constants,
)
from ....domain.errors import ErrorKind, EstimationError, estimation_error
from ....domain.survival.value_objects.observation import SurvivalSample, TiePolicy
from ....shared.logging import get_logger
from ....shared.random_streams import StreamPurpose, stream_for
from ..dto.bootstrap_dto import BAND_TOLERANCE, BootstrapConfig, ConfidenceBand

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class ResamplingPlan:
    """
    원 적합에서 고정되는 재표본 재료

    Attributes:
        model: 원 모형 (재적합에 같은 커널 설정와 점수 함수를 사용)
        covariates: 재추출 대상 공변량 (m̂, ŝ 가 정의된 관측치)
        locations: 각 공변량의 m̂
        scales: 각 공변량의 ŝ
        cure: 각 공변량의 π̂
        censor_times: 각 공변량의 Beran 중도절단 분포 점프 위치
        censor_levels: 점프 직후 누적 확률
        draw_grid: 오차 추출용 F̂ 격자
        draw_values: 격자 위 F̂
        max_z: 원 표본의 최대 관측 시간
        tie_seed: 복제 자료의 동점 jitter 시드
    """

    model: FittedCureModel
    covariates: NDArray[np.float64]
    locations: NDArray[np.float64]
    scales: NDArray[np.float64]
    cure: NDArray[np.float64]
    censor_times: List[NDArray[np.float64]]
    censor_levels: List[NDArray[np.float64]]
    draw_grid: NDArray[np.float64]
    draw_values: NDArray[np.float64]
    max_z: float
    tie_seed: int = 0

    @classmethod
    def from_model(
        cls, model: FittedCureModel, draw_steps: int = DEFAULT_GRID_STEPS, tie_seed: int = 0
    ) -> Result["ResamplingPlan", EstimationError]:
        """
        모형으로부터 재표본 계획 생성

        Returns:
            Result: F̂ 를 계산할 수 없으면 NO_VALID_COVARIATES
        """
        estimate = estimate_F_grid(model, None, None, draw_steps)
        if estimate.is_failure():
            return Failure(estimate.unwrap_error())
        draw = estimate.unwrap()

        fits = collect_standardized_fits(model)
        included = fits.included
        return Success(
            cls(
                model=model,
                covariates=np.array([fit.x0 for fit in included]),
                locations=np.array([fit.location for fit in included]),
                scales=np.array([fit.scale for fit in included]),
                cure=np.array([fit.pi_hat for fit in included]),
                censor_times=[fit.table.censor_times for fit in included],
                censor_levels=[fit.table.censor_levels for fit in included],
                draw_grid=draw.grid,
                draw_values=draw.values,
                max_z=float(np.max(model.sample.z)),
                tie_seed=tie_seed,
            )
        )

    @property
    def n(self) -> int:
        return self.model.n

    def draw_errors(self, uniforms: NDArray[np.float64]) -> NDArray[np.float64]:
        """F̂ 계단 표현의 역변환: F̂(t) ≥ u 인 가장 작은 격자점"""
        index = np.searchsorted(self.draw_values, uniforms, side="left")
        return self.draw_grid[np.minimum(index, len(self.draw_grid) - 1)]

    def draw_censoring(
        self, picks: NDArray[np.int64], uniforms: NDArray[np.float64]
    ) -> NDArray[np.float64]:
        """
        공변량별 Beran 중도절단 분포의 역변환

        중도절단 점프가 없으면 +∞, 마지막 누적 확률을 넘으면 가장 큰 중도절단 시간.
        """
        draws = np.empty(len(picks), dtype=np.float64)
        for k, (pick, u) in enumerate(zip(picks, uniforms)):
            times = self.censor_times[pick]
            if len(times) == 0:
                draws[k] = np.inf
                continue
            index = int(np.searchsorted(self.censor_levels[pick], u, side="left"))
            draws[k] = times[min(index, len(times) - 1)]
        return draws


def draw_replicate(
    plan: ResamplingPlan, rng: np.random.Generator
) -> Result[SurvivalSample, EstimationError]:
    """
    부트스트랩 자료 하나 생성

    난수 소비 순서는 공변량, 오차, 치유 지시자, 중도절단 순으로 고정입니다.

    Returns:
        Result: 추출된 오차의 척도가 퇴화하면 DEGENERATE_SCALE
    """
    n = plan.n
    picks = rng.integers(0, len(plan.covariates), n)

    raw_errors = plan.draw_errors(rng.uniform(0.0, float(plan.draw_values[-1]), n))
    constants = standardization_constants(
        plan.model.score, np.sort(raw_errors), empirical_breakpoints(n)
    )
    if constants.is_failure():
        return Failure(constants.unwrap_error())
    center, spread = constants.unwrap()
    errors = (raw_errors - center) / spread

    uncured = plan.locations[picks] + plan.scales[picks] * errors
    cured = rng.random(n) < plan.cure[picks]
    response = np.where(cured, np.inf, uncured)

    censoring = plan.draw_censoring(picks, rng.random(n))
    censoring[np.isinf(response) & np.isinf(censoring)] = plan.max_z

    return SurvivalSample.create(
        plan.covariates[picks],
        np.minimum(response, censoring),
        (response <= censoring).astype(np.int64),
        tie_policy=TiePolicy.JITTER,
        tie_seed=plan.tie_seed,
    )


def _replicate_curve(
    plan: ResamplingPlan, rng: np.random.Generator, grid: NDArray[np.float64]
) -> Result[NDArray[np.float64], EstimationError]:
    sample = draw_replicate(plan, rng)
    if sample.is_failure():
        return Failure(sample.unwrap_error())
    refit = fit_cure_model(sample.unwrap(), plan.model.spec, plan.model.score)
    if refit.is_failure():
        return Failure(refit.unwrap_error())
    return estimate_F(refit.unwrap(), grid)


class BootstrapService:
    """
    부트스트랩 신뢰대 서비스

    복제는 (seed, 복제 번호, 시도 번호) 로 정해지는 독립 스트림을 쓰고 재추출 순서도
    복제 번호 순으로 고정되므로 워커 수와 무관하게 결과가 같습니다.
    """

    def __init__(self, max_workers: int = 1):
        """
        서비스 초기화

        Args:
            max_workers: 복제 병렬 처리 워커 수 (기본값: 1)
        """
        self._max_workers = max(1, int(max_workers))

    def _attempt(
        self,
        plan: ResamplingPlan,
        config: BootstrapConfig,
        grid: NDArray[np.float64],
        replicate: int,
        attempt: int,
    ) -> Result[NDArray[np.float64], EstimationError]:
        rng = stream_for(config.seed, replicate, StreamPurpose.BOOTSTRAP, attempt)
        curve = _replicate_curve(plan, rng, grid)
        if curve.is_failure():
            logger.debug(
                "부트스트랩 복제 재추출",
                replicate=replicate,
                attempt=attempt,
                reason=curve.unwrap_error().kind.value,
            )
        return curve

    def _run_replicates(
        self, plan: ResamplingPlan, config: BootstrapConfig, grid: NDArray[np.float64]
    ) -> Result[Tuple[List[NDArray[np.float64]], int], EstimationError]:
        """
        전체 시도 예산 안에서 모든 복제 실행

        라운드 k 에서는 아직 실패 상태인 복제들을 번호 순으로 k 번째 스트림으로 다시 뽑습니다.
        남은 복제를 모두 한 번 더 시도할 예산이 없으면 BOOTSTRAP_UNSTABLE 입니다.
        """
        budget = config.max_attempts * config.replicates
        curves: List[Optional[NDArray[np.float64]]] = [None] * config.replicates
        pending = list(range(config.replicates))
        used = 0
        attempt = 0
        last_error: Optional[EstimationError] = None

        with ThreadPoolExecutor(max_workers=self._max_workers) as executor:
            while pending:
                if used + len(pending) > budget:
                    return Failure(
                        estimation_error(
                            ErrorKind.BOOTSTRAP_UNSTABLE,
                            f"bootstrap_F_band: 시도 예산 {budget}번 안에 복제 "
                            f"{len(pending)}개를 완료하지 못했습니다 (마지막 사유: {last_error})",
                            budget=budget,
                            pending=len(pending),
                            last_kind=last_error.kind.value if last_error else None,
                        )
                    )
                outcomes = list(
                    executor.map(
                        lambda r, a=attempt: self._attempt(plan, config, grid, r, a), pending
                    )
                )
                used += len(pending)
                retry = []
                for replicate, outcome in zip(pending, outcomes):
                    if outcome.is_success():
                        curves[replicate] = np.atleast_1d(outcome.unwrap())
                    else:
                        last_error = outcome.unwrap_error()
                        retry.append(replicate)
                pending = retry
                attempt += 1

        return Success(([curve for curve in curves if curve is not None], used))

    def bootstrap_F_band(
        self,
        model: FittedCureModel,
        config: BootstrapConfig,
        t_lo: Optional[float] = None,
        t_hi: Optional[float] = None,
        steps: int = DEFAULT_GRID_STEPS,
        tie_seed: int = 0,
    ) -> Result[ConfidenceBand, EstimationError]:
        """
        F̂ 의 점별 백분위 부트스트랩 신뢰대

        Args:
            model: 적합된 모형
            config: 부트스트랩 설정
            t_lo: 신뢰대 격자 하한 (None 이면 F̂ 기본 범위)
            t_hi: 신뢰대 격자 상한 (None 이면 F̂ 기본 범위)
            steps: 격자 점 개수
            tie_seed: 복제 자료의 동점 jitter 시드

        Returns:
            Result[ConfidenceBand, EstimationError]
        """
        plan_result = ResamplingPlan.from_model(model, steps, tie_seed)
        if plan_result.is_failure():
            return Failure(plan_result.unwrap_error())
        plan = plan_result.unwrap()

        if t_lo is None and t_hi is None:
            return self._band(plan, config, plan.draw_grid)

        lo = float(plan.draw_grid[0]) if t_lo is None else t_lo
        hi = float(plan.draw_grid[-1]) if t_hi is None else t_hi
        if not lo < hi:
            return Failure(
                estimation_error(
                    ErrorKind.INVALID_ARGUMENT, f"t_lo < t_hi 이어야 합니다: {lo}, {hi}"
                )
            )
        return self._band(plan, config, np.linspace(lo, hi, steps))

    def band_at(
        self,
        model: FittedCureModel,
        config: BootstrapConfig,
        points: Sequence[float],
        tie_seed: int = 0,
    ) -> Result[ConfidenceBand, EstimationError]:
        """임의의 t 지점들에서의 신뢰대 (오차 추출 격자는 기본 범위)"""
        if len(points) == 0:
            return Failure(estimation_error(ErrorKind.INVALID_ARGUMENT, "points 가 비어있습니다"))
        plan_result = ResamplingPlan.from_model(model, DEFAULT_GRID_STEPS, tie_seed)
        if plan_result.is_failure():
            return Failure(plan_result.unwrap_error())
        return self._band(plan_result.unwrap(), config, np.asarray(points, dtype=np.float64))

    def _band(
        self, plan: ResamplingPlan, config: BootstrapConfig, grid: NDArray[np.float64]
    ) -> Result[ConfidenceBand, EstimationError]:
        start_time = time.time()
        logger.log_operation(
            "bootstrap_F_band", replicates=config.replicates, level=config.level, seed=config.seed
        )

        point_result = estimate_F(plan.model, grid)
        if point_result.is_failure():
            return Failure(point_result.unwrap_error())
        point = np.atleast_1d(np.asarray(point_result.unwrap(), dtype=np.float64))

        outcome = self._run_replicates(plan, config, grid)
        if outcome.is_failure():
            logger.log_error_with_context(outcome.unwrap_error(), "bootstrap_F_band")
            return Failure(outcome.unwrap_error())
        curves, attempts = outcome.unwrap()

        lower_q, upper_q = config.quantile_levels
        lower, upper = np.quantile(np.vstack(curves), [lower_q, upper_q], axis=0)
        lower = np.clip(lower, 0.0, 1.0)
        upper = np.clip(upper, 0.0, 1.0)

        outside = int(
            np.count_nonzero((point < lower - BAND_TOLERANCE) | (point > upper + BAND_TOLERANCE))
        )
        notes = []
        if attempts > config.replicates:
            notes.append(f"{attempts - config.replicates}번 재추출이 필요했습니다")
        if outside:
            notes.append(f"격자점 {outside}개에서 점추정이 신뢰대 밖입니다")
        warning = "; ".join(notes) or None

        logger.log_performance(
            "bootstrap_F_band",
            (time.time() - start_time) * 1000,
            replicates=config.replicates,
            attempts=attempts,
            point_outside=outside,
        )
        return Success(
            ConfidenceBand(
                grid=grid.tolist(),
                lower=lower.tolist(),
                point=point.tolist(),
                upper=upper.tolist(),
                level=config.level,
                replicates=config.replicates,
                attempts=attempts,
                point_outside=outside,
                warning=warning,
            )
        )


def bootstrap_F_band(
    model: FittedCureModel,
    config: BootstrapConfig,
    workers: int = 1,
    t_lo: Optional[float] = None,
    t_hi: Optional[float] = None,
    steps: int = DEFAULT_GRID_STEPS,
) -> Result[ConfidenceBand, EstimationError]:
    """BootstrapService 단축 함수"""
    return BootstrapService(max_workers=workers).bootstrap_F_band(model, config, t_lo, t_hi, steps)
