"""
Beran 조건부 product-limit 추정 서비스

M̂, M̂¹ (Stone 방식 조건부 (부분)분포), Q̂ (Beran 추정량),
그리고 부트스트랩에서 필요한 중도절단 분포의 Beran 추정량을 제공합니다.

x0 마다 정렬된 가중치/지시자 배열과 누적곱 표를 한 번 만들어 두고,
t 평가는 searchsorted 로 O(log n) 에 처리합니다.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Union

import numpy as np
from numpy.typing import ArrayLike, NDArray
from rfs.core.result import Failure, Result, Success

from ...errors import EstimationError
from ...smoothing.services.kernel_smoothing import (
    WINDOW_UNDERFLOW,
    normalize_kernel_weights,
    raw_kernel_weights,
)
from ...smoothing.value_objects.kernel_spec import KernelSpec
from ..value_objects.observation import SurvivalSample

Scalar = Union[float, NDArray[np.float64]]


class Continuity(str, Enum):
    """
    계단 함수 평가 규약

    Values:
        RIGHT: Z₍ⱼ₎ ≤ t 인 인자까지 곱함 (기본값, Z¹_max 의 점프 포함)
        LEFT: Z₍ⱼ₎ < t 인 인자까지 곱함 (원식 그대로, 감사용)
    """

    RIGHT = "right"
    LEFT = "left"


def _as_output(values: NDArray[np.float64], t: ArrayLike) -> Scalar:
    return float(values) if np.ndim(t) == 0 else values


@dataclass(frozen=True, eq=False)
class BeranTable:
    """
    x0 에서의 국소 product-limit 표 (생성 후 불변)

    Attributes:
        x0: 평가 공변량
        z: 오름차순 관측 시간
        delta: z 순서의 사건 지시자
        weights: z 순서의 정규화 NW 가중치
        cum_weights: M̂ 계단 값 (가중치 누적합)
        cum_event_weights: M̂¹ 계단 값 (δ 가중 누적합)
        event_survival: 사건 인자 누적곱 ∏(1 − hⱼ)^δⱼ
        censor_survival: 중도절단 인자 누적곱 ∏(1 − hⱼ)^(1−δⱼ)
        event_jump: 해당 위치에서 Q̂ 가 실제로 증가하는지 여부
        censor_jump: 해당 위치가 중도절단 분포의 점프인지 여부
    """

    x0: float
    z: NDArray[np.float64]
    delta: NDArray[np.int64]
    weights: NDArray[np.float64]
    cum_weights: NDArray[np.float64]
    cum_event_weights: NDArray[np.float64]
    event_survival: NDArray[np.float64]
    censor_survival: NDArray[np.float64]
    event_jump: NDArray[np.bool_]
    censor_jump: NDArray[np.bool_]

    @classmethod
    def build(
        cls, sample: SurvivalSample, spec: KernelSpec, x0: float
    ) -> Result["BeranTable", EstimationError]:
        """
        x0 에 대한 표 생성

        product-limit 인자는 정규화 전 커널 값으로 계산합니다. 비율 kⱼ/Σ_{k≥j}kₖ 은
        척도와 무관하고, 가중치 0 인 관측치를 추가해도 결과가 비트 단위로 같습니다.

        Args:
            sample: 생존 표본
            spec: 커널 설정
            x0: 평가 공변량

        Returns:
            Result: 성공 시 BeranTable, 창이 비면 EMPTY_WINDOW
        """
        raw = raw_kernel_weights(x0, sample.x_sorted, spec)
        weights_result = normalize_kernel_weights(raw, x0, spec)
        if weights_result.is_failure():
            return Failure(weights_result.unwrap_error())
        weights = weights_result.unwrap()

        remaining = np.cumsum(raw[::-1])[::-1]
        positive = (raw > 0.0) & (remaining > WINDOW_UNDERFLOW)
        # 남은 가중치가 0 인 인자는 건너뜀
        hazard = np.zeros_like(raw)
        np.divide(raw, remaining, out=hazard, where=positive)
        hazard = np.minimum(hazard, 1.0)

        delta = sample.delta_sorted
        event_factor = 1.0 - hazard * delta
        censor_factor = 1.0 - hazard * (1 - delta)

        return Success(
            cls(
                x0=float(x0),
                z=sample.z_sorted,
                delta=delta,
                weights=weights,
                cum_weights=np.minimum(np.cumsum(weights), 1.0),
                cum_event_weights=np.minimum(np.cumsum(weights * delta), 1.0),
                event_survival=np.cumprod(event_factor),
                censor_survival=np.cumprod(censor_factor),
                event_jump=positive & (delta == 1) & (event_factor < 1.0),
                censor_jump=positive & (delta == 0) & (censor_factor < 1.0),
            )
        )

    def _position(self, t: ArrayLike, continuity: Continuity) -> NDArray[np.int64]:
        side = "right" if continuity is Continuity.RIGHT else "left"
        return np.searchsorted(self.z, np.asarray(t, dtype=np.float64), side=side) - 1

    def _step(self, table: NDArray[np.float64], t: ArrayLike, continuity: Continuity) -> Scalar:
        position = self._position(t, continuity)
        values = np.where(position >= 0, table[np.maximum(position, 0)], 0.0)
        return _as_output(values, t)

    def m_hat(self, t: ArrayLike) -> Scalar:
        """M̂(t|x0) = Σ 1[zⱼ ≤ t]·Wⱼ(x0)"""
        return self._step(self.cum_weights, t, Continuity.RIGHT)

    def m1_hat(self, t: ArrayLike) -> Scalar:
        """M̂¹(t|x0) = Σ δⱼ·1[zⱼ ≤ t]·Wⱼ(x0)"""
        return self._step(self.cum_event_weights, t, Continuity.RIGHT)

    def q_hat(self, t: ArrayLike, continuity: Continuity = Continuity.RIGHT) -> Scalar:
        """Q̂(t|x0) = 1 − ∏_{z₍ⱼ₎ ≤ t}(1 − W₍ⱼ₎/Σ_{k≥j}W₍ₖ₎)^δ₍ⱼ₎"""
        return self._step(1.0 - self.event_survival, t, continuity)

    def censor_cdf(self, t: ArrayLike, continuity: Continuity = Continuity.RIGHT) -> Scalar:
        """중도절단 분포 P(C ≤ t | X = x0) 의 Beran 추정"""
        return self._step(1.0 - self.censor_survival, t, continuity)

    @property
    def event_times(self) -> NDArray[np.float64]:
        """Q̂ 의 점프 위치 (오름차순)"""
        return self.z[self.event_jump]

    @property
    def event_levels(self) -> NDArray[np.float64]:
        """점프 직후 Q̂ 값 (비감소)"""
        return 1.0 - self.event_survival[self.event_jump]

    @property
    def censor_times(self) -> NDArray[np.float64]:
        """중도절단 분포의 점프 위치"""
        return self.z[self.censor_jump]

    @property
    def censor_levels(self) -> NDArray[np.float64]:
        """점프 직후 중도절단 분포 값"""
        return 1.0 - self.censor_survival[self.censor_jump]


def subdist_M(
    sample: SurvivalSample, spec: KernelSpec, t: ArrayLike, x0: float
) -> Result[Scalar, EstimationError]:
    """
    조건부 분포 M̂(t|x0)

    Args:
        sample: 생존 표본
        spec: 커널 설정
        t: 평가 시점 (스칼라 또는 배열)
        x0: 평가 공변량

    Returns:
        Result: 성공 시 [0, 1] 값, 창이 비면 EMPTY_WINDOW
    """
    table = BeranTable.build(sample, spec, x0)
    if table.is_failure():
        return Failure(table.unwrap_error())
    return Success(table.unwrap().m_hat(t))


def subdist_M1(
    sample: SurvivalSample, spec: KernelSpec, t: ArrayLike, x0: float
) -> Result[Scalar, EstimationError]:
    """조건부 부분분포 M̂¹(t|x0), 항상 M̂ 이하"""
    table = BeranTable.build(sample, spec, x0)
    if table.is_failure():
        return Failure(table.unwrap_error())
    return Success(table.unwrap().m1_hat(t))


def beran_Q(
    sample: SurvivalSample,
    spec: KernelSpec,
    t: ArrayLike,
    x0: float,
    continuity: Continuity = Continuity.RIGHT,
) -> Result[Scalar, EstimationError]:
    """
    Beran 추정량 Q̂(t|x0)

    Args:
        sample: 생존 표본
        spec: 커널 설정
        t: 평가 시점
        x0: 평가 공변량
        continuity: RIGHT (기본) 또는 LEFT

    Returns:
        Result: 성공 시 비감소 [0, 1] 값, 창이 비면 EMPTY_WINDOW
    """
    table = BeranTable.build(sample, spec, x0)
    if table.is_failure():
        return Failure(table.unwrap_error())
    return Success(table.unwrap().q_hat(t, continuity))


def beran_censor(
    sample: SurvivalSample,
    spec: KernelSpec,
    t: ArrayLike,
    x0: float,
    continuity: Continuity = Continuity.RIGHT,
) -> Result[Scalar, EstimationError]:
    """중도절단 분포 P(C ≤ t | X = x0) 의 Beran 추정 (지수에 1−δ 사용)"""
    table = BeranTable.build(sample, spec, x0)
    if table.is_failure():
        return Failure(table.unwrap_error())
    return Success(table.unwrap().censor_cdf(t, continuity))
