"""
오차 분포 추정 서비스

F̂(t) = (1/n) Σⱼ Q̂(t·ŝ(Xⱼ) + m̂(Xⱼ) | Xⱼ) / (1 − π̂(Xⱼ))

국소 적합이 없는 관측치(빈 창, 국소 사건 없음, 척도 퇴화)는 평균에서 제외하고
제외 수를 기록합니다. 각 국소 비율은 평균 전에 [0, 1] 로 자릅니다.
"""

from collections import Counter
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np
from numpy.typing import ArrayLike, NDArray
from rfs.core.result import Failure, Result, Success

from ....shared.logging import get_logger
from ...errors import ErrorKind, EstimationError, estimation_error
from ..entities.error_dist_estimate import ErrorDistEstimate
from ..entities.fitted_cure_model import FittedCureModel, LocalFit
from .cure_estimators import local_fit

logger = get_logger(__name__)

DEFAULT_GRID_STEPS = 512
EXCLUSION_WARNING_FRACTION = 0.10
# 기본 격자 하한 여유 (최소 표준화 잔차 아래)
GRID_LOWER_MARGIN = 0.5


@dataclass(frozen=True)
class StandardizedFits:
    """관측치 순서대로 포함된 국소 적합과 제외 통계"""

    included: List[LocalFit]
    responses: List[float]
    excluded: Counter
    n: int

    @property
    def excluded_count(self) -> int:
        return int(sum(self.excluded.values()))

    @property
    def warning(self) -> Optional[str]:
        if self.excluded_count > EXCLUSION_WARNING_FRACTION * self.n:
            return (
                f"{self.excluded_count}/{self.n} 개 관측치가 F̂ 평균에서 제외되었습니다 "
                f"({dict(self.excluded)})"
            )
        return None


def collect_standardized_fits(model: FittedCureModel) -> StandardizedFits:
    """표본의 각 관측치에 대해 m̂, ŝ 가 정의된 국소 적합을 모음"""
    included: List[LocalFit] = []
    responses: List[float] = []
    excluded: Counter = Counter()
    for x, z in zip(model.sample.x, model.sample.z):
        result = local_fit(model, float(x))
        if result.is_failure():
            excluded[result.unwrap_error().kind.value] += 1
            continue
        fit = result.unwrap()
        if not fit.is_standardizable:
            reason = fit.location_error or fit.scale_error
            excluded[reason.kind.value] += 1
            continue
        included.append(fit)
        responses.append(float(z))
    return StandardizedFits(included=included, responses=responses, excluded=excluded, n=model.n)


def local_error_cdf(fit: LocalFit, t: NDArray[np.float64]) -> NDArray[np.float64]:
    """
    국소 항 Q̂(t·ŝ + m̂ | x) / (1 − π̂(x)) (자르기 전)

    분모는 Q̂(τ̂₀|x) 로, 우연속 규약에서 1 − π̂(x) 와 같습니다.
    """
    responses = t * fit.scale + fit.location
    return np.asarray(fit.table.q_hat(responses), dtype=np.float64) / fit.uncured_mass


def _average(
    fits: StandardizedFits, t: NDArray[np.float64]
) -> Tuple[NDArray[np.float64], int]:
    ratios = np.vstack([local_error_cdf(fit, t) for fit in fits.included])
    clamped = int(np.count_nonzero(np.any(ratios > 1.0, axis=1)))
    return np.mean(np.clip(ratios, 0.0, 1.0), axis=0), clamped


def _no_valid_covariates(fits: StandardizedFits) -> EstimationError:
    return estimation_error(
        ErrorKind.NO_VALID_COVARIATES,
        f"estimate_F: 모든 관측치({fits.n}개)가 제외되어 F̂ 를 계산할 수 없습니다",
        excluded=dict(fits.excluded),
    )


def estimate_F(
    model: FittedCureModel, t: ArrayLike
) -> Result[float | NDArray[np.float64], EstimationError]:
    """
    F̂(t) 평가 (스칼라 또는 배열)

    Args:
        model: 적합된 모형
        t: 표준화 오차 척도의 평가점

    Returns:
        Result: 모든 관측치가 제외되면 NO_VALID_COVARIATES
    """
    fits = collect_standardized_fits(model)
    if not fits.included:
        return Failure(_no_valid_covariates(fits))

    points = np.atleast_1d(np.asarray(t, dtype=np.float64))
    values, _ = _average(fits, points)
    if np.ndim(t) == 0:
        return Success(float(values[0]))
    return Success(values)


def estimated_upper_support(fits: StandardizedFits, tau0_hat: float) -> float:
    """maxⱼ (τ̂₀ − m̂(Xⱼ)) / ŝ(Xⱼ)"""
    return max((tau0_hat - fit.location) / fit.scale for fit in fits.included)


def default_grid_range(model: FittedCureModel) -> Result[Tuple[float, float], EstimationError]:
    """
    기본 격자 범위 [최소 표준화 잔차 − 0.5, 추정 상한 지지점]

    Returns:
        Result[(t_lo, t_hi), EstimationError]
    """
    fits = collect_standardized_fits(model)
    if not fits.included:
        return Failure(_no_valid_covariates(fits))
    return Success(_grid_range(fits, model.tau0_hat))


def _grid_range(fits: StandardizedFits, tau0_hat: float) -> Tuple[float, float]:
    residuals = [
        (z - fit.location) / fit.scale for z, fit in zip(fits.responses, fits.included)
    ]
    t_hi = estimated_upper_support(fits, tau0_hat)
    t_lo = min(min(residuals) - GRID_LOWER_MARGIN, t_hi - GRID_LOWER_MARGIN)
    return float(t_lo), float(t_hi)


def estimate_F_grid(
    model: FittedCureModel,
    t_lo: Optional[float] = None,
    t_hi: Optional[float] = None,
    steps: int = DEFAULT_GRID_STEPS,
) -> Result[ErrorDistEstimate, EstimationError]:
    """
    균등 격자 위에서 F̂ 평가

    Args:
        model: 적합된 모형
        t_lo: 격자 하한 (None 이면 기본 범위)
        t_hi: 격자 상한 (None 이면 기본 범위)
        steps: 격자점 수 (≥ 2)

    Returns:
        Result[ErrorDistEstimate, EstimationError]
    """
    if steps < 2:
        return Failure(
            estimation_error(ErrorKind.INVALID_ARGUMENT, f"steps 는 2 이상이어야 합니다: {steps}")
        )

    fits = collect_standardized_fits(model)
    if not fits.included:
        return Failure(_no_valid_covariates(fits))

    if t_lo is None or t_hi is None:
        default_lo, default_hi = _grid_range(fits, model.tau0_hat)
        t_lo = default_lo if t_lo is None else t_lo
        t_hi = default_hi if t_hi is None else t_hi

    if not t_lo < t_hi:
        return Failure(
            estimation_error(
                ErrorKind.INVALID_ARGUMENT,
                f"t_lo < t_hi 이어야 합니다. 입력값: t_lo={t_lo}, t_hi={t_hi}",
            )
        )

    grid = np.linspace(t_lo, t_hi, steps)
    values, clamped = _average(fits, grid)

    warning = fits.warning
    if fits.excluded_count:
        logger.info(
            "F̂ 평균에서 관측치 제외",
            excluded=dict(fits.excluded),
            n=fits.n,
        )
    if warning:
        logger.warning(warning, excluded=fits.excluded_count, n=fits.n)
    if clamped:
        logger.info("국소 비율 1 초과로 잘림", clamped=clamped)

    return Success(
        ErrorDistEstimate(
            grid=grid,
            values=values,
            t_max=estimated_upper_support(fits, model.tau0_hat),
            n_included=len(fits.included),
            excluded=dict(fits.excluded),
            clamped=clamped,
            warning=warning,
        )
    )
