"""
모형 적합 요청 DTO 모듈

CLI 플래그와 설정에서 받은 추정 옵션을 도메인 객체로 변환합니다.
"""

from typing import Optional

from pydantic import BaseModel, Field, field_validator, model_validator
from rfs.core.result import Result

from ....domain.errors import EstimationError
from ....domain.cure_model.value_objects.score_function import ScoreForm, ScoreFunction
from ....domain.smoothing.value_objects.kernel_spec import BandwidthRule, KernelFamily
from ....domain.survival.value_objects.observation import TiePolicy
from ....shared.config import EstimationSettings

# 적합 명령에 필요한 최소 관측치 수
MIN_FIT_ROWS = 10


class FitRequestDTO(BaseModel):
    """
    모형 적합 요청 DTO

    대역폭은 `bandwidth` 가 주어지면 그대로 쓰고, 아니면 (c, gamma) 규칙으로 계산합니다.
    """

    kernel: str = Field(default="biweight", description="커널 종류 (biweight | epanechnikov)")

    bandwidth: Optional[float] = Field(
        default=None, description="명시적 대역폭 a (지정 시 c/gamma 무시)", gt=0.0
    )

    c: float = Field(default=0.75, description="대역폭 비례 상수 C", gt=0.0)

    gamma: float = Field(default=1.0 / 16.0, description="대역폭 지수 γ")

    score_threshold: float = Field(
        default=1e-4, description="점수 함수 하한 p_l", ge=0.0, lt=1.0
    )

    score_scale: float = Field(default=1e-4, description="점수 함수 logistic 스케일", gt=0.0)

    score_form: str = Field(
        default="logistic_step", description="점수 함수 형태 (logistic_step | uniform)"
    )

    score_upper: float = Field(default=1.0, description="점수 함수 상한 p_u", gt=0.0, le=1.0)

    score_renormalize: bool = Field(default=False, description="∫₀¹ J = 1 이 되도록 J 정규화")

    grid_lo: Optional[float] = Field(default=None, description="F̂ 격자 하한 (기본: 자료 기반)")

    grid_hi: Optional[float] = Field(default=None, description="F̂ 격자 상한 (기본: 추정 τ_F)")

    grid_steps: int = Field(default=512, description="F̂ 격자 점 개수", ge=2)

    curve_steps: int = Field(default=101, description="곡선 공변량 격자 점 개수", ge=2)

    tie_policy: str = Field(default="jitter", description="동점 처리 방식 (jitter | strict)")

    tie_seed: int = Field(default=0, description="동점 jitter 시드", ge=0)

    @field_validator("kernel")
    @classmethod
    def validate_kernel(cls, v: str) -> str:
        """커널 이름 검증"""
        result = KernelFamily.from_string(v)
        if result.is_failure():
            raise ValueError(result.unwrap_error().message)
        return result.unwrap().value

    @field_validator("score_form")
    @classmethod
    def validate_score_form(cls, v: str) -> str:
        """점수 함수 형태 검증"""
        try:
            return ScoreForm(v.strip().lower()).value
        except ValueError as e:
            raise ValueError(f"지원하지 않는 점수 함수 형태: {v}") from e

    @field_validator("tie_policy")
    @classmethod
    def validate_tie_policy(cls, v: str) -> str:
        """동점 정책 검증"""
        try:
            return TiePolicy(v.strip().lower()).value
        except ValueError as e:
            raise ValueError(f"지원하지 않는 동점 정책: {v}") from e

    @model_validator(mode="after")
    def validate_grid(self) -> "FitRequestDTO":
        """격자 범위가 모두 주어졌으면 t_lo < t_hi"""
        if self.grid_lo is None or self.grid_hi is None:
            return self
        if not self.grid_lo < self.grid_hi:
            raise ValueError(f"grid_lo < grid_hi 이어야 합니다: {self.grid_lo}, {self.grid_hi}")
        return self

    @classmethod
    def from_settings(cls, settings: EstimationSettings, **overrides: object) -> "FitRequestDTO":
        """
        설정 기본값에 CLI 값을 덮어써서 생성

        Args:
            settings: 추정 설정
            **overrides: None 이 아닌 값만 반영

        Returns:
            FitRequestDTO
        """
        values = {
            "kernel": settings.kernel,
            "c": settings.bandwidth_c,
            "gamma": settings.bandwidth_gamma,
            "score_threshold": settings.score_threshold,
            "score_scale": settings.score_scale,
            "score_form": settings.score_form,
            "score_upper": settings.score_upper,
            "score_renormalize": settings.score_renormalize,
            "grid_steps": settings.grid_steps,
            "curve_steps": settings.curve_steps,
            "tie_policy": settings.tie_policy,
            "tie_seed": settings.tie_seed,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    @property
    def kernel_family(self) -> KernelFamily:
        return KernelFamily(self.kernel)

    @property
    def tie(self) -> TiePolicy:
        return TiePolicy(self.tie_policy)

    def to_bandwidth_rule(self) -> Result[BandwidthRule, EstimationError]:
        """(c, gamma) 를 BandwidthRule 로 변환"""
        return BandwidthRule.create(self.c, self.gamma)

    def to_score_function(self) -> Result[ScoreFunction, EstimationError]:
        """점수 함수 생성"""
        return ScoreFunction.create(
            p_l=self.score_threshold,
            scale=self.score_scale,
            form=self.score_form,
            p_u=self.score_upper,
            renormalize=self.score_renormalize,
        )

    def with_rule(self, c: float, gamma: float) -> "FitRequestDTO":
        """대역폭 규칙만 바꾼 요청 (명시적 대역폭 해제)"""
        return self.model_copy(update={"c": c, "gamma": gamma, "bandwidth": None})

