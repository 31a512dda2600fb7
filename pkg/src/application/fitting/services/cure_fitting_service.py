"""
모형 적합 서비스 모듈

대역폭 결정, 모형 적합, 공변량 격자 곡선, F̂ 격자 평가를 하나의 흐름으로 묶습니다.
"""

import time
from dataclasses import dataclass
from typing import List, Optional

import numpy as np
from numpy.typing import ArrayLike
from rfs.core.result import Failure, Result, Success

from ....domain.cure_model.entities.error_dist_estimate import ErrorDistEstimate
from ....domain.cure_model.entities.fitted_cure_model import FittedCureModel
from ....domain.cure_model.services.cure_estimators import (
    estimate_m,
    estimate_pi,
    estimate_s,
    fit_cure_model,
)
from ....domain.cure_model.services.error_distribution import estimate_F_grid
from ....domain.errors import ErrorKind, EstimationError, estimation_error
from ....domain.smoothing.services.kernel_smoothing import default_bandwidth, sample_sigma
from ....domain.smoothing.value_objects.kernel_spec import KernelSpec
from ....domain.survival.value_objects.observation import SurvivalSample
from ....shared.logging import get_logger
from ..dto.fit_request_dto import MIN_FIT_ROWS, FitRequestDTO
from ..dto.fit_response_dto import (
    CurvePointDTO,
    ErrorDistributionDTO,
    FitResponseDTO,
    FitSummaryDTO,
)

logger = get_logger(__name__)


@dataclass(frozen=True)
class ResolvedBandwidth:
    """결정된 커널 설정와 그 출처"""

    spec: KernelSpec
    sigma_x: float
    rule_label: Optional[str]


def resolve_kernel_spec(
    sample: SurvivalSample, request: FitRequestDTO
) -> Result[ResolvedBandwidth, EstimationError]:
    """
    커널 설정 결정

    명시적 대역폭이 있으면 그대로, 없으면 a_n = C·σ̂_X·n^(−1/4−γ)·(log n)^(1/4+γ).

    Returns:
        Result: σ̂_X 가 0 이거나 정의되지 않으면 INVALID_ARGUMENT
    """
    sigma_x = sample_sigma(sample.x) if sample.n > 1 else float("nan")

    if request.bandwidth is not None:
        spec = KernelSpec.create(request.bandwidth, request.kernel_family)
        if spec.is_failure():
            return Failure(spec.unwrap_error())
        return Success(ResolvedBandwidth(spec=spec.unwrap(), sigma_x=sigma_x, rule_label=None))

    rule_result = request.to_bandwidth_rule()
    if rule_result.is_failure():
        return Failure(rule_result.unwrap_error())
    rule = rule_result.unwrap()

    if not sigma_x > 0:
        return Failure(
            estimation_error(
                ErrorKind.INVALID_ARGUMENT,
                f"default_bandwidth: 공변량 표준편차가 양수가 아닙니다 (σ̂_X={sigma_x})",
                n=sample.n,
            )
        )

    spec = KernelSpec.create(default_bandwidth(rule, sample.n, sigma_x), request.kernel_family)
    if spec.is_failure():
        return Failure(spec.unwrap_error())
    return Success(ResolvedBandwidth(spec=spec.unwrap(), sigma_x=sigma_x, rule_label=rule.label()))


def evaluate_curves(model: FittedCureModel, x_grid: ArrayLike) -> List[CurvePointDTO]:
    """
    공변량 격자 위의 π̂, m̂, ŝ

    각 점의 실패는 해당 값만 비우고 error 에 첫 실패 종류를 기록합니다.
    """
    points: List[CurvePointDTO] = []
    for x0 in np.asarray(x_grid, dtype=np.float64):
        values = {}
        error: Optional[str] = None
        estimators = (("pi_hat", estimate_pi), ("m_hat", estimate_m), ("s_hat", estimate_s))
        for name, estimator in estimators:
            result = estimator(model, float(x0))
            if result.is_success():
                values[name] = result.unwrap()
            elif error is None:
                error = result.unwrap_error().kind.value
        points.append(CurvePointDTO(x=float(x0), error=error, **values))
    return points


@dataclass(frozen=True)
class FitOutcome:
    """적합 결과 묶음"""

    model: FittedCureModel
    estimate: ErrorDistEstimate
    response: FitResponseDTO


class CureFittingService:
    """
    모형 적합 서비스

    표본과 요청으로부터 모형, F̂ 격자, 곡선, 요약을 만듭니다.
    """

    def fit_model(
        self, sample: SurvivalSample, request: FitRequestDTO
    ) -> Result[tuple[FittedCureModel, ResolvedBandwidth], EstimationError]:
        """
        모형만 적합

        Args:
            sample: 생존 표본
            request: 적합 요청

        Returns:
            Result[(FittedCureModel, ResolvedBandwidth), EstimationError]
        """
        if sample.n < MIN_FIT_ROWS:
            return Failure(
                estimation_error(
                    ErrorKind.INVALID_ARGUMENT,
                    f"적합에는 최소 {MIN_FIT_ROWS}개 관측치가 필요합니다 (입력 {sample.n}개)",
                )
            )

        resolved = resolve_kernel_spec(sample, request)
        if resolved.is_failure():
            return Failure(resolved.unwrap_error())
        bandwidth = resolved.unwrap()

        score = request.to_score_function()
        if score.is_failure():
            return Failure(score.unwrap_error())

        model = fit_cure_model(sample, bandwidth.spec, score.unwrap())
        if model.is_failure():
            return Failure(model.unwrap_error())
        return Success((model.unwrap(), bandwidth))

    def fit(
        self, sample: SurvivalSample, request: FitRequestDTO
    ) -> Result[FitOutcome, EstimationError]:
        """
        적합 전체 흐름

        Args:
            sample: 생존 표본
            request: 적합 요청

        Returns:
            Result[FitOutcome, EstimationError]: 실패 메시지는 실패한 추정기를 밝힘
        """
        start_time = time.time()
        logger.log_operation("fit", n=sample.n, kernel=request.kernel)

        fitted = self.fit_model(sample, request)
        if fitted.is_failure():
            logger.log_error_with_context(fitted.unwrap_error(), "fit")
            return Failure(fitted.unwrap_error())
        model, bandwidth = fitted.unwrap()

        estimate_result = estimate_F_grid(
            model, request.grid_lo, request.grid_hi, request.grid_steps
        )
        if estimate_result.is_failure():
            logger.log_error_with_context(estimate_result.unwrap_error(), "estimate_F_grid")
            return Failure(estimate_result.unwrap_error())
        estimate = estimate_result.unwrap()

        x_grid = np.linspace(float(np.min(sample.x)), float(np.max(sample.x)), request.curve_steps)
        curves = evaluate_curves(model, x_grid)

        summary = FitSummaryDTO(
            n=sample.n,
            censored_fraction=sample.censored_fraction,
            jittered=sample.jittered,
            kernel=request.kernel,
            bandwidth=bandwidth.spec.bandwidth,
            bandwidth_rule=bandwidth.rule_label,
            sigma_x=bandwidth.sigma_x,
            tau0_hat=model.tau0_hat,
            t_max=estimate.t_max,
            grid_lo=float(estimate.grid[0]),
            grid_hi=float(estimate.grid[-1]),
            grid_steps=len(estimate.grid),
            n_included=estimate.n_included,
            excluded=dict(estimate.excluded),
            clamped=estimate.clamped,
            warning=estimate.warning,
        )
        response = FitResponseDTO(
            summary=summary,
            curves=curves,
            error_distribution=ErrorDistributionDTO.from_domain(estimate),
        )

        logger.log_performance(
            "fit",
            (time.time() - start_time) * 1000,
            bandwidth=bandwidth.spec.bandwidth,
            n_included=estimate.n_included,
        )
        return Success(FitOutcome(model=model, estimate=estimate, response=response))
