"""
적합된 치유 모형 Entity

표본, 커널 설정, 점수 함수와 τ̂₀ 를 묶고, 표본 공변량별 국소 적합(LocalFit)을
생성 시점에 모두 계산해 보관합니다. 생성 후에는 변경되지 않습니다.
"""

import math
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping, Optional

from rfs.core.result import Failure, Result, Success

from ...errors import EstimationError
from ...smoothing.value_objects.kernel_spec import KernelSpec
from ...survival.services.beran import BeranTable
from ...survival.value_objects.observation import SurvivalSample
from ..value_objects.score_function import ScoreFunction


@dataclass(frozen=True, eq=False)
class LocalFit:
    """
    x0 에서의 국소 적합 결과

    π̂ 는 창이 비어있지 않으면 항상 정의되지만, m̂ 과 ŝ 는 국소 사건이 없거나
    척도가 퇴화하면 정의되지 않습니다. 그 경우 해당 오류를 함께 보관합니다.

    Attributes:
        x0: 공변량
        table: Beran 표
        pi_hat: 치유 비율 추정값 (우연속)
        location: m̂(x0), 정의되지 않으면 None
        variance: v̂(x0), 정의되지 않으면 None
        location_error: m̂ 실패 사유
        scale_error: ŝ 실패 사유
    """

    x0: float
    table: BeranTable
    pi_hat: float
    location: Optional[float] = None
    variance: Optional[float] = None
    location_error: Optional[EstimationError] = None
    scale_error: Optional[EstimationError] = None

    @property
    def scale(self) -> Optional[float]:
        """ŝ(x0) = √v̂"""
        if self.variance is None or self.scale_error is not None:
            return None
        return math.sqrt(self.variance)

    @property
    def uncured_mass(self) -> float:
        """Q̂(τ̂₀|x0), 즉 마지막 점프 직후 수준"""
        levels = self.table.event_levels
        return float(levels[-1]) if len(levels) else 0.0

    @property
    def is_standardizable(self) -> bool:
        """m̂, ŝ 가 모두 정의되어 F̂ 평균에 포함될 수 있는지 여부"""
        return self.location_error is None and self.scale_error is None

    def location_result(self) -> Result[float, EstimationError]:
        if self.location_error is not None:
            return Failure(self.location_error)
        return Success(self.location)

    def scale_result(self) -> Result[float, EstimationError]:
        if self.scale_error is not None:
            return Failure(self.scale_error)
        if self.location_error is not None:
            return Failure(self.location_error)
        return Success(self.scale)


@dataclass(frozen=True, eq=False)
class FittedCureModel:
    """
    적합된 위치-척도 혼합 치유 모형

    Attributes:
        sample: 생존 표본
        spec: 커널 설정
        score: 점수 함수
        tau0_hat: τ̂₀ = 가장 큰 비중도절단 관측 시간
        local_fits: 표본 공변량 값 → 국소 적합 결과 (읽기 전용)
    """

    sample: SurvivalSample
    spec: KernelSpec
    score: ScoreFunction
    tau0_hat: float
    local_fits: Mapping[float, Result[LocalFit, EstimationError]] = field(
        default_factory=lambda: MappingProxyType({}), repr=False
    )

    @classmethod
    def freeze(
        cls,
        sample: SurvivalSample,
        spec: KernelSpec,
        score: ScoreFunction,
        tau0_hat: float,
        local_fits: Mapping[float, Result[LocalFit, EstimationError]],
    ) -> "FittedCureModel":
        """완성된 국소 적합 사전으로 모형 생성 (이후 캐시는 읽기 전용)"""
        return cls(
            sample=sample,
            spec=spec,
            score=score,
            tau0_hat=float(tau0_hat),
            local_fits=MappingProxyType(dict(local_fits)),
        )

    def cached(self, x0: float) -> Optional[Result[LocalFit, EstimationError]]:
        """x0 가 표본 공변량이면 미리 계산된 결과"""
        return self.local_fits.get(float(x0))

    @property
    def n(self) -> int:
        return self.sample.n
