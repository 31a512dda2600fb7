"""
Monte Carlo 시뮬레이션 DTO 모듈
"""

from typing import Dict, List

import numpy as np
from pydantic import BaseModel, Field, field_validator, model_validator

from ....domain.cure_model.value_objects.score_function import ScoreFunction
from ....domain.simulation.value_objects.true_model import TrueModel
from ....domain.smoothing.value_objects.kernel_spec import KernelFamily
from ....shared.config import SimulationSettings


class SimulationConfig(BaseModel):
    """
    시뮬레이션 설정

    eval_points 와 AMISE 격자는 참 오차 분포의 지지집합 (τ_F 이하) 안에 있어야 합니다.
    """

    n: int = Field(default=100, description="표본 크기", ge=10)
    runs: int = Field(default=1000, description="Monte Carlo 반복 횟수", ge=1)
    c: float = Field(default=0.75, description="대역폭 비례 상수 C", gt=0.0)
    gamma: float = Field(default=1.0 / 16.0, description="대역폭 지수 γ")
    seed: int = Field(default=0, description="난수 시드 (64-bit)", ge=0, lt=2**64)
    kernel: str = Field(default="biweight", description="커널 종류")
    score_threshold: float = Field(default=1e-4, description="점수 함수 하한 p_l", ge=0.0, lt=1.0)
    score_scale: float = Field(default=1e-4, description="점수 함수 logistic 스케일", gt=0.0)
    eval_points: List[float] = Field(
        default_factory=lambda: [-2.0, -1.0, 0.0, 1.0, 2.0], description="AMSE 평가 지점"
    )
    amise_lo: float = Field(default=-2.5, description="AMISE 적분 하한")
    amise_hi: float = Field(default=2.0, description="AMISE 적분 상한")
    amise_steps: int = Field(default=91, description="AMISE 사다리꼴 격자 점 개수", ge=2)

    @field_validator("kernel")
    @classmethod
    def validate_kernel(cls, v: str) -> str:
        result = KernelFamily.from_string(v)
        if result.is_failure():
            raise ValueError(result.unwrap_error().message)
        return result.unwrap().value

    @model_validator(mode="after")
    def validate_support(self) -> "SimulationConfig":
        """평가 지점과 AMISE 격자가 참 지지집합 안인지 검사"""
        if not self.eval_points:
            raise ValueError("eval_points 는 비어있을 수 없습니다")
        if not self.amise_lo < self.amise_hi:
            raise ValueError(f"amise_lo < amise_hi 이어야 합니다: {self.amise_lo}, {self.amise_hi}")
        tau_f = self.true_model().tau_f
        beyond = [t for t in [*self.eval_points, self.amise_hi] if t > tau_f]
        if beyond:
            raise ValueError(f"평가 지점 {beyond} 가 참 오차 지지집합 상한 τ_F={tau_f:.6f} 을 넘습니다")
        return self

    @classmethod
    def from_settings(cls, settings: SimulationSettings, **overrides: object) -> "SimulationConfig":
        """설정 기본값에 CLI 값을 덮어써서 생성 (None 은 무시)"""
        values: Dict[str, object] = {
            "runs": settings.simulation_runs,
            "eval_points": list(settings.eval_points),
            "amise_lo": settings.amise_lo,
            "amise_hi": settings.amise_hi,
            "amise_steps": settings.amise_steps,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def true_model(self) -> TrueModel:
        """설정의 점수 함수로 표준화한 참 모형"""
        return TrueModel(score=ScoreFunction(p_l=self.score_threshold, scale=self.score_scale))

    def amise_points(self) -> np.ndarray:
        return np.linspace(self.amise_lo, self.amise_hi, self.amise_steps)

    @property
    def rule_label(self) -> str:
        return f"{self.c:g},{self.gamma:g}"


class MonteCarloReport(BaseModel):
    """
    Monte Carlo 결과

    amse 의 키는 평가 지점 t, 값은 n × 평균제곱오차입니다.
    """

    amse: Dict[float, float] = Field(..., description="t → n·MSE(t)")
    amise: float = Field(..., description="n·∫MSE(t)dt", ge=0.0)
    runs: int = Field(..., description="반복 횟수", ge=1)
    failures: int = Field(default=0, description="실패한 반복 수", ge=0)
    failure_kinds: Dict[str, int] = Field(default_factory=dict, description="실패 종류별 수")
    mean_bandwidth: float = Field(..., description="반복별 대역폭 평균", gt=0.0)
    config: SimulationConfig

    @model_validator(mode="after")
    def validate_counts(self) -> "MonteCarloReport":
        if self.failures > self.runs:
            raise ValueError("failures 는 runs 이하여야 합니다")
        if any(value < 0 for value in self.amse.values()):
            raise ValueError("amse 값은 음수일 수 없습니다")
        return self
