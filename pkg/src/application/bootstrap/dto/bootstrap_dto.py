"""
부트스트랩 DTO 모듈
"""

from typing import Dict, List, Optional

from pydantic import BaseModel, Field, model_validator

# lower ≤ upper 및 [0, 1] 검사 허용 오차
BAND_TOLERANCE = 1e-9


class BootstrapConfig(BaseModel):
    """
    부트스트랩 설정

    replicates 는 1 이상, level 은 (0, 1) 이어야 합니다.
    """

    replicates: int = Field(default=300, description="부트스트랩 반복 횟수", ge=1)
    level: float = Field(default=0.95, description="신뢰 수준", gt=0.0, lt=1.0)
    seed: int = Field(default=0, description="난수 시드 (64-bit)", ge=0, lt=2**64)
    max_attempts: int = Field(default=3, description="복제 수 대비 전체 시도 예산 배수", ge=1)

    @property
    def quantile_levels(self) -> tuple[float, float]:
        """(1 − level)/2, 1 − (1 − level)/2"""
        alpha = 1.0 - self.level
        return alpha / 2.0, 1.0 - alpha / 2.0


class ConfidenceBand(BaseModel):
    """
    F̂ 의 점별 백분위 신뢰대

    Attributes:
        grid: t 격자
        lower: 하한
        point: 원 표본의 F̂(t)
        upper: 상한
    """

    grid: List[float]
    lower: List[float]
    point: List[float]
    upper: List[float]
    level: float = Field(..., gt=0.0, lt=1.0)
    replicates: int = Field(..., ge=1)
    attempts: int = Field(..., ge=1, description="전체 시도 횟수 (재추출 포함)")
    point_outside: int = Field(default=0, ge=0, description="점추정이 신뢰대 밖인 격자점 수")
    warning: Optional[str] = None

    @model_validator(mode="after")
    def validate_band(self) -> "ConfidenceBand":
        """길이 일치, lower ≤ upper, [0, 1] 범위"""
        sizes = {len(self.grid), len(self.lower), len(self.point), len(self.upper)}
        if len(sizes) != 1:
            raise ValueError("grid/lower/point/upper 길이가 다릅니다")
        for lo, hi in zip(self.lower, self.upper):
            if lo > hi + BAND_TOLERANCE:
                raise ValueError(f"lower > upper: {lo} > {hi}")
            if lo < -BAND_TOLERANCE or hi > 1.0 + BAND_TOLERANCE:
                raise ValueError(f"신뢰대가 [0, 1] 밖입니다: [{lo}, {hi}]")
        return self

    def rows(self) -> List[tuple[float, float, float, float]]:
        """(t, lower, point, upper) 행"""
        return list(zip(self.grid, self.lower, self.point, self.upper))


class CoverageConfig(BaseModel):
    """
    부트스트랩 신뢰대 커버리지 연구 설정

    참 모형에서 datasets 개의 자료를 만들어 각각 신뢰대를 구하고,
    참 F(t) 가 신뢰대 안에 들어간 비율을 지점별로 셉니다.
    """

    n: int = Field(default=100, description="자료별 표본 크기", ge=10)
    datasets: int = Field(default=200, description="자료 개수", ge=1)
    replicates: int = Field(default=100, description="자료별 부트스트랩 반복 횟수", ge=1)
    level: float = Field(default=0.95, description="명목 신뢰 수준", gt=0.0, lt=1.0)
    seed: int = Field(default=0, description="난수 시드 (64-bit)", ge=0, lt=2**64)
    c: float = Field(default=0.75, description="대역폭 비례 상수 C", gt=0.0)
    gamma: float = Field(default=1.0 / 16.0, description="대역폭 지수 γ")
    points: List[float] = Field(
        default_factory=lambda: [-1.0, 0.0, 1.0], description="커버리지를 셀 t 지점"
    )

    @model_validator(mode="after")
    def validate_points(self) -> "CoverageConfig":
        if not self.points:
            raise ValueError("points 는 비어있을 수 없습니다")
        return self


class CoverageReport(BaseModel):
    """지점별 경험적 커버리지"""

    points: List[float]
    coverage: List[float] = Field(..., description="지점별 포함 비율")
    mean_width: List[float] = Field(..., description="지점별 평균 신뢰대 폭")
    datasets: int = Field(..., ge=1, description="신뢰대를 계산한 자료 수")
    failures: Dict[str, int] = Field(default_factory=dict, description="실패 종류별 자료 수")
    config: CoverageConfig
