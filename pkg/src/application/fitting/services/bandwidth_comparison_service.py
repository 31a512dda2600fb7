"""
대역폭 비교 서비스 모듈

같은 자료에 여러 (C, γ) 규칙으로 F̂ 를 적합하고 공통 격자 위에서 비교합니다.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

import numpy as np
from numpy.typing import NDArray
from rfs.core.result import Failure, Result, Success

from ....domain.cure_model.entities.error_dist_estimate import ErrorDistEstimate
from ....domain.cure_model.services.error_distribution import default_grid_range, estimate_F_grid
from ....domain.errors import ErrorKind, EstimationError, estimation_error
from ....domain.survival.value_objects.observation import SurvivalSample
from ....shared.logging import get_logger
from ..dto.fit_request_dto import FitRequestDTO
from .cure_fitting_service import CureFittingService

logger = get_logger(__name__)


@dataclass(frozen=True)
class BandwidthComparison:
    """
    대역폭 비교 결과

    Attributes:
        grid: 공통 격자
        labels: 규칙 라벨 ("C,γ") 목록
        bandwidths: 규칙별 대역폭
        curves: 규칙별 F̂ 값
        max_sup_distance: 모든 쌍 중 가장 큰 sup 거리
        worst_pair: 그 쌍의 라벨
    """

    grid: NDArray[np.float64]
    labels: List[str]
    bandwidths: List[float]
    curves: List[NDArray[np.float64]]
    max_sup_distance: float
    worst_pair: Tuple[str, str] | None

    def to_dict(self) -> Dict[str, object]:
        return {
            "configurations": [
                {"rule": label, "bandwidth": bandwidth}
                for label, bandwidth in zip(self.labels, self.bandwidths)
            ],
            "max_sup_distance": self.max_sup_distance,
            "worst_pair": list(self.worst_pair) if self.worst_pair else None,
        }


class BandwidthComparisonService:
    """여러 대역폭 규칙의 F̂ 비교"""

    def __init__(self, fitting_service: CureFittingService | None = None):
        self._fitting = fitting_service or CureFittingService()

    def compare(
        self,
        sample: SurvivalSample,
        request: FitRequestDTO,
        rules: Sequence[Tuple[float, float]],
    ) -> Result[BandwidthComparison, EstimationError]:
        """
        규칙별 적합 후 공통 격자에서 비교

        격자 범위는 요청에 주어지지 않으면 각 적합의 기본 범위를 모두 덮도록 잡습니다.

        Args:
            sample: 생존 표본
            request: 공통 적합 옵션
            rules: (C, γ) 목록 (하나 이상)

        Returns:
            Result[BandwidthComparison, EstimationError]
        """
        if not rules:
            return Failure(
                estimation_error(ErrorKind.INVALID_ARGUMENT, "비교할 대역폭 규칙이 없습니다")
            )

        models = []
        for c, gamma in rules:
            fitted = self._fitting.fit_model(sample, request.with_rule(c, gamma))
            if fitted.is_failure():
                return Failure(fitted.unwrap_error())
            models.append(fitted.unwrap())

        lows, highs = [], []
        for model, _ in models:
            grid_range = default_grid_range(model)
            if grid_range.is_failure():
                return Failure(grid_range.unwrap_error())
            lo, hi = grid_range.unwrap()
            lows.append(lo)
            highs.append(hi)
        t_lo = request.grid_lo if request.grid_lo is not None else min(lows)
        t_hi = request.grid_hi if request.grid_hi is not None else max(highs)

        estimates: List[ErrorDistEstimate] = []
        for model, _ in models:
            estimate = estimate_F_grid(model, t_lo, t_hi, request.grid_steps)
            if estimate.is_failure():
                return Failure(estimate.unwrap_error())
            estimates.append(estimate.unwrap())

        labels = [bandwidth.rule_label or "" for _, bandwidth in models]
        max_distance, worst = 0.0, None
        for (i, first), (j, second) in combinations(enumerate(estimates), 2):
            distance = first.sup_distance(second)
            if worst is None or distance > max_distance:
                max_distance, worst = distance, (labels[i], labels[j])

        logger.info(
            "대역폭 비교 완료",
            configurations=len(rules),
            max_sup_distance=max_distance,
        )
        return Success(
            BandwidthComparison(
                grid=estimates[0].grid,
                labels=labels,
                bandwidths=[bandwidth.spec.bandwidth for _, bandwidth in models],
                curves=[estimate.values for estimate in estimates],
                max_sup_distance=max_distance,
                worst_pair=worst,
            )
        )
