"""
오차 분포 추정 결과 Entity
"""

from dataclasses import dataclass, field
from typing import Mapping, Optional

import numpy as np
from numpy.typing import NDArray


@dataclass(frozen=True, eq=False)
class ErrorDistEstimate:
    """
    격자 위의 F̂ 값과 진단 정보

    Attributes:
        grid: 오름차순 표준화 오차 격자
        values: 각 격자점의 F̂(t), 비감소이며 [0, 1] 범위
        t_max: 추정 상한 지지점 maxⱼ (τ̂₀ − m̂(Xⱼ))/ŝ(Xⱼ)
        n_included: 평균에 포함된 관측치 수
        excluded: 제외 사유(ErrorKind 값)별 관측치 수
        clamped: 국소 비율이 1 을 넘어 잘린 관측치 수
        warning: 제외 비율이 10% 를 넘으면 경고 문구
    """

    grid: NDArray[np.float64]
    values: NDArray[np.float64]
    t_max: float
    n_included: int
    excluded: Mapping[str, int] = field(default_factory=dict)
    clamped: int = 0
    warning: Optional[str] = None

    @property
    def excluded_count(self) -> int:
        return int(sum(self.excluded.values()))

    def sup_distance(self, other: "ErrorDistEstimate") -> float:
        """같은 격자 위 두 추정의 상한 거리 sup_t |F̂₁(t) − F̂₂(t)|"""
        if self.grid.shape != other.grid.shape or not np.array_equal(self.grid, other.grid):
            raise ValueError("grids differ")
        return float(np.max(np.abs(self.values - other.values)))
