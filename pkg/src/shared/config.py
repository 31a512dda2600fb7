"""
환경 변수 설정 모듈

.env 파일의 환경 변수를 로딩하고 추정/시뮬레이션 기본값을 타입 안전하게 관리합니다.
CLI 플래그가 지정되면 여기의 기본값보다 우선합니다.
"""

from typing import List

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class EstimationSettings(BaseSettings):
    """
    추정기 기본 설정
    """

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    kernel: str = Field(default="biweight", description="커널 종류 (biweight | epanechnikov)")

    # 대역폭 규칙 C·σ̂_X·n^(−1/4−γ)·log^(1/4+γ)(n)
    bandwidth_c: float = Field(default=0.75, description="대역폭 비례 상수 C")
    bandwidth_gamma: float = Field(default=1.0 / 16.0, description="대역폭 지수 γ")

    score_threshold: float = Field(default=1e-4, description="점수 함수 하한 p_l")
    score_scale: float = Field(default=1e-4, description="점수 함수 logistic 스케일")
    score_form: str = Field(
        default="logistic_step", description="점수 함수 형태 (logistic_step | uniform)"
    )
    score_upper: float = Field(default=1.0, description="점수 함수 상한 p_u")
    score_renormalize: bool = Field(default=False, description="∫₀¹ J = 1 이 되도록 J 정규화")

    grid_steps: int = Field(default=512, description="F̂ 평가 격자 점 개수")
    curve_steps: int = Field(default=101, description="π̂/m̂/ŝ 곡선 공변량 격자 점 개수")

    tie_policy: str = Field(default="jitter", description="동점 처리 방식 (jitter | strict)")
    tie_seed: int = Field(default=0, description="동점 jitter 시드")


class BootstrapSettings(BaseSettings):
    """
    부트스트랩 기본 설정
    """

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    bootstrap_replicates: int = Field(default=300, description="부트스트랩 반복 횟수")
    bootstrap_level: float = Field(default=0.95, description="신뢰 수준")


class SimulationSettings(BaseSettings):
    """
    Monte Carlo 기본 설정
    """

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    simulation_runs: int = Field(default=1000, description="Monte Carlo 반복 횟수")
    eval_points: List[float] = Field(
        default_factory=lambda: [-2.0, -1.0, 0.0, 1.0, 2.0],
        description="AMSE 평가 지점",
    )
    amise_lo: float = Field(default=-2.5, description="AMISE 적분 하한")
    amise_hi: float = Field(default=2.0, description="AMISE 적분 상한")
    amise_steps: int = Field(default=91, description="AMISE 사다리꼴 격자 점 개수")


class Settings(BaseSettings):
    """
    전체 애플리케이션 설정
    """

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # 애플리케이션 설정
    log_level: str = Field(default="INFO", description="로그 레벨")
    environment: str = Field(default="development", description="실행 환경")

    # 병렬 처리 (Monte Carlo 반복/부트스트랩 복제)
    workers: int = Field(default=1, description="워커 스레드 수")

    estimation: EstimationSettings = Field(default_factory=EstimationSettings)
    bootstrap: BootstrapSettings = Field(default_factory=BootstrapSettings)
    simulation: SimulationSettings = Field(default_factory=SimulationSettings)


# 싱글톤 인스턴스
_settings: Settings | None = None


def get_settings() -> Settings:
    """
    설정 인스턴스를 반환 (싱글톤 패턴)

    Returns:
        Settings: 애플리케이션 설정 인스턴스
    """
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings
