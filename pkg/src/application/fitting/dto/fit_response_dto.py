"""
모형 적합 응답 DTO 모듈

적합 결과를 fit.json / curves.csv / fhat.csv 로 내보낼 수 있는 형태로 표현합니다.
"""

from typing import Dict, List, Optional

from pydantic import BaseModel, Field

from ....domain.cure_model.entities.error_dist_estimate import ErrorDistEstimate


class CurvePointDTO(BaseModel):
    """
    공변량 한 점의 π̂, m̂, ŝ

    정의되지 않은 값은 None 이고, 첫 번째 실패 사유가 error 에 담깁니다.
    """

    x: float = Field(..., description="공변량")
    pi_hat: Optional[float] = Field(default=None, description="치유 비율 π̂(x)")
    m_hat: Optional[float] = Field(default=None, description="위치 m̂(x)")
    s_hat: Optional[float] = Field(default=None, description="척도 ŝ(x)")
    error: Optional[str] = Field(default=None, description="에러 종류")


class ErrorDistributionDTO(BaseModel):
    """F̂ 격자 값"""

    t: List[float] = Field(..., description="표준화 오차 격자")
    f_hat: List[float] = Field(..., description="F̂(t)")

    @classmethod
    def from_domain(cls, estimate: ErrorDistEstimate) -> "ErrorDistributionDTO":
        return cls(t=estimate.grid.tolist(), f_hat=estimate.values.tolist())


class FitSummaryDTO(BaseModel):
    """
    적합 요약 DTO

    fit.json 의 본문입니다.
    """

    n: int = Field(..., description="표본 크기", ge=1)
    censored_fraction: float = Field(..., description="중도절단 비율", ge=0.0, le=1.0)
    jittered: bool = Field(default=False, description="동점 jitter 적용 여부")

    kernel: str = Field(..., description="커널 종류")
    bandwidth: float = Field(..., description="사용한 대역폭 a", gt=0.0)
    bandwidth_rule: Optional[str] = Field(
        default=None, description="대역폭 규칙 'C,γ' (명시적 대역폭이면 None)"
    )
    sigma_x: float = Field(..., description="공변량 표본 표준편차")

    tau0_hat: float = Field(..., description="τ̂₀ (가장 큰 비중도절단 관측 시간)")
    t_max: float = Field(..., description="추정 상한 지지점")

    grid_lo: float = Field(..., description="F̂ 격자 하한")
    grid_hi: float = Field(..., description="F̂ 격자 상한")
    grid_steps: int = Field(..., description="F̂ 격자 점 개수", ge=2)

    n_included: int = Field(..., description="F̂ 평균에 포함된 관측치 수", ge=0)
    excluded: Dict[str, int] = Field(default_factory=dict, description="제외 사유별 관측치 수")
    clamped: int = Field(default=0, description="국소 비율이 잘린 관측치 수", ge=0)
    warning: Optional[str] = Field(default=None, description="제외 비율 경고")


class FitResponseDTO(BaseModel):
    """모형 적합 응답 DTO"""

    summary: FitSummaryDTO
    curves: List[CurvePointDTO] = Field(default_factory=list)
    error_distribution: ErrorDistributionDTO
