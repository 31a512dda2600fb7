"""
치유 모형 추정 서비스

τ̂₀, π̂(x), ξ̂(q|x), m̂(x), ŝ(x) 를 계산합니다.

m̂ 과 v̂ 는 L-functional 입니다. ξ̂((1 − π̂)p | x) 는 p 에 대한 계단 함수이므로
적분은 각 계단 구간의 I(p) 차분으로 정확히 계산합니다 (수치 적분 없음).
"""

from typing import Optional

import numpy as np
from numpy.typing import NDArray
from rfs.core.result import Failure, Result, Success

from ....shared.logging import get_logger
from ...errors import ErrorKind, EstimationError, estimation_error
from ...smoothing.value_objects.kernel_spec import KernelSpec
from ...survival.services.beran import BeranTable, Continuity
from ...survival.value_objects.observation import SurvivalSample
from ..entities.fitted_cure_model import FittedCureModel, LocalFit
from ..value_objects.score_function import ScoreFunction, weighted_moments

logger = get_logger(__name__)

# q 가 Q̂(τ̂₀|x0) 를 이만큼까지 넘는 것은 반올림 오차로 봄
QUANTILE_TOLERANCE = 1e-12


def estimate_tau0(sample: SurvivalSample) -> Result[float, EstimationError]:
    """
    τ̂₀ = max{zⱼ : δⱼ = 1}

    Returns:
        Result: 사건이 없으면 NO_EVENTS
    """
    events = sample.z[sample.delta == 1]
    if len(events) == 0:
        return Failure(estimation_error(ErrorKind.NO_EVENTS, "estimate_tau0: 비중도절단 관측치가 없습니다"))
    return Success(float(np.max(events)))


def quantile_breakpoints(levels: NDArray[np.float64]) -> NDArray[np.float64]:
    """
    ξ̂((1 − π̂)p) 의 p 축 구간 경계

    k 번째 점프 수준 q_k 에 대해 P_k = q_k / Q̂(τ̂₀) 이고 P_0 = 0, P_K = 1 입니다.
    """
    scaled = levels / levels[-1]
    scaled[-1] = 1.0
    return np.concatenate(([0.0], scaled))


def fit_local(
    sample: SurvivalSample,
    spec: KernelSpec,
    score: ScoreFunction,
    tau0_hat: float,
    x0: float,
) -> Result[LocalFit, EstimationError]:
    """
    x0 에서 π̂, m̂, v̂ 계산

    창이 비어 있으면 실패하고, 국소 사건이 없거나 척도가 퇴화하면
    성공한 LocalFit 안에 해당 오류를 담아 돌려줍니다.

    Args:
        sample: 생존 표본
        spec: 커널 설정
        score: 점수 함수
        tau0_hat: τ̂₀
        x0: 평가 공변량

    Returns:
        Result[LocalFit, EstimationError]
    """
    table_result = BeranTable.build(sample, spec, x0)
    if table_result.is_failure():
        return Failure(table_result.unwrap_error())
    table = table_result.unwrap()

    pi_hat = float(np.clip(1.0 - table.q_hat(tau0_hat), 0.0, 1.0))
    times = table.event_times
    levels = table.event_levels

    if len(times) == 0:
        error = estimation_error(
            ErrorKind.NO_LOCAL_EVENTS,
            f"estimate_m/estimate_s: x0={x0} 의 창 안에 가중치가 양수인 비중도절단 관측치가 없습니다",
            x0=float(x0),
        )
        return Success(
            LocalFit(
                x0=float(x0),
                table=table,
                pi_hat=pi_hat,
                location_error=error,
                scale_error=error,
            )
        )

    first, second = weighted_moments(score, times, quantile_breakpoints(levels))
    variance = second - first * first

    scale_error: Optional[EstimationError] = None
    if len(times) < 2 or not variance > 0:
        scale_error = estimation_error(
            ErrorKind.DEGENERATE_SCALE,
            f"estimate_s: x0={x0} 에서 v̂={variance!r} (점프 {len(times)}개)",
            x0=float(x0),
            variance=variance,
            jumps=int(len(times)),
        )

    return Success(
        LocalFit(
            x0=float(x0),
            table=table,
            pi_hat=pi_hat,
            location=first,
            variance=variance,
            scale_error=scale_error,
        )
    )


def fit_cure_model(
    sample: SurvivalSample, spec: KernelSpec, score: Optional[ScoreFunction] = None
) -> Result[FittedCureModel, EstimationError]:
    """
    모형 적합

    표본의 서로 다른 공변량마다 국소 적합을 먼저 모두 계산한 뒤 모형을 고정합니다.

    Args:
        sample: 생존 표본
        spec: 커널 설정
        score: 점수 함수 (기본: logistic step)

    Returns:
        Result[FittedCureModel, EstimationError]
    """
    score = score or ScoreFunction()
    tau0_result = estimate_tau0(sample)
    if tau0_result.is_failure():
        return Failure(tau0_result.unwrap_error())
    tau0_hat = tau0_result.unwrap()

    local_fits = {
        float(x0): fit_local(sample, spec, score, tau0_hat, float(x0)) for x0 in np.unique(sample.x)
    }

    unusable = sum(
        1 for r in local_fits.values() if r.is_failure() or not r.unwrap().is_standardizable
    )
    logger.debug(
        "국소 적합 완료",
        n=sample.n,
        covariates=len(local_fits),
        unusable=unusable,
        bandwidth=spec.bandwidth,
        tau0_hat=tau0_hat,
    )
    return Success(FittedCureModel.freeze(sample, spec, score, tau0_hat, local_fits))


def local_fit(model: FittedCureModel, x0: float) -> Result[LocalFit, EstimationError]:
    """캐시된 국소 적합, 표본 밖 x0 는 즉석 계산"""
    cached = model.cached(x0)
    if cached is not None:
        return cached
    return fit_local(model.sample, model.spec, model.score, model.tau0_hat, x0)


def estimate_pi(
    model: FittedCureModel, x0: float, continuity: Continuity = Continuity.RIGHT
) -> Result[float, EstimationError]:
    """
    π̂(x0) = 1 − Q̂(τ̂₀|x0)

    Args:
        model: 적합된 모형
        x0: 평가 공변량
        continuity: 기본은 우연속, LEFT 는 원식 그대로의 좌연속 평가

    Returns:
        Result: [0, 1] 값, 창이 비면 EMPTY_WINDOW
    """
    fit_result = local_fit(model, x0)
    if fit_result.is_failure():
        return Failure(fit_result.unwrap_error())
    fit = fit_result.unwrap()
    if continuity is Continuity.RIGHT:
        return Success(fit.pi_hat)
    return Success(float(np.clip(1.0 - fit.table.q_hat(model.tau0_hat, continuity), 0.0, 1.0)))


def quantile_xi(model: FittedCureModel, x0: float, q: float) -> Result[float, EstimationError]:
    """
    ξ̂(q|x0) = inf{y ≤ τ̂₀ : Q̂(y|x0) ≥ q}

    q = 0 이면 가장 작은 점프 위치를 돌려줍니다.

    Returns:
        Result: q > Q̂(τ̂₀|x0) 이면 QUANTILE_OUT_OF_RANGE
    """
    if not q >= 0.0:
        return Failure(
            estimation_error(ErrorKind.INVALID_ARGUMENT, f"quantile_xi: q 는 0 이상이어야 합니다: {q}")
        )

    fit_result = local_fit(model, x0)
    if fit_result.is_failure():
        return Failure(fit_result.unwrap_error())
    table = fit_result.unwrap().table

    times = table.event_times
    levels = table.event_levels
    if len(times) == 0:
        return Failure(
            estimation_error(
                ErrorKind.NO_LOCAL_EVENTS, f"quantile_xi: x0={x0} 에서 Q̂ 에 점프가 없습니다", x0=float(x0)
            )
        )
    if q > levels[-1] + QUANTILE_TOLERANCE:
        return Failure(
            estimation_error(
                ErrorKind.QUANTILE_OUT_OF_RANGE,
                f"quantile_xi: q={q!r} 가 Q̂(τ̂₀|x0)={float(levels[-1])!r} 를 넘습니다",
                x0=float(x0),
                q=float(q),
                upper=float(levels[-1]),
            )
        )

    index = min(int(np.searchsorted(levels, q, side="left")), len(times) - 1)
    return Success(float(times[index]))


def estimate_m(model: FittedCureModel, x0: float) -> Result[float, EstimationError]:
    """m̂(x0) = ∫₀¹ ξ̂((1 − π̂(x0))p | x0) J(p) dp"""
    fit_result = local_fit(model, x0)
    if fit_result.is_failure():
        return Failure(fit_result.unwrap_error())
    return fit_result.unwrap().location_result()


def estimate_s(model: FittedCureModel, x0: float) -> Result[float, EstimationError]:
    """
    ŝ(x0) = √v̂(x0), v̂ = ∫₀¹ ξ̂²((1 − π̂)p | x0) J(p) dp − m̂²

    Returns:
        Result: v̂ ≤ 0 이거나 점프가 하나뿐이면 DEGENERATE_SCALE
    """
    fit_result = local_fit(model, x0)
    if fit_result.is_failure():
        return Failure(fit_result.unwrap_error())
    return fit_result.unwrap().scale_result()
