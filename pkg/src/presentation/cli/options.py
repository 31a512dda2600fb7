"""
하위 명령 공통 옵션

명령 클래스들이 상속하는 플래그 묶음입니다. 지정하지 않은 값(None)은
Settings (.env / 환경 변수) 기본값으로 채우고, 매니페스트에는 채운 값을 기록합니다.
"""

from pathlib import Path
from typing import Any, ClassVar, Dict, FrozenSet, List, Mapping, Optional

from pydantic import BaseModel, Field

from ...application.fitting.dto.fit_request_dto import FitRequestDTO
from ...infrastructure.io.adapters.csv_dataset_adapter import DatasetFile, load_csv
from ...infrastructure.io.adapters.manifest import RunManifest
from ...shared.config import Settings, get_settings
from ...shared.logging import LogLevel, setup_logging
from .errors import EXIT_USAGE, CommandError, unwrap_or_exit


class CommonOptions(BaseModel):
    """출력 위치, 병렬도, 로깅 플래그"""

    # 출력 바이트에 영향을 주지 않아 매니페스트에서 빠지는 인자
    RUNTIME_ONLY: ClassVar[FrozenSet[str]] = frozenset(
        {"out_dir", "workers", "json_logs", "log_level"}
    )
    COMMAND: ClassVar[str] = ""

    out_dir: Path = Field(default=Path("out"), description="출력 디렉토리")
    workers: Optional[int] = Field(default=None, description="워커 스레드 수", ge=1)
    json_logs: bool = Field(default=False, description="stderr 로그를 JSON 으로 출력")
    log_level: Optional[str] = Field(default=None, description="로그 레벨 (DEBUG, INFO, ...)")

    def start(self) -> Settings:
        """설정 로딩과 로깅 초기화"""
        settings = get_settings()
        name = (self.log_level or settings.log_level).upper()
        try:
            level = LogLevel(name)
        except ValueError as e:
            raise CommandError(EXIT_USAGE, f"지원하지 않는 로그 레벨: {name}") from e
        setup_logging(
            level=level,
            enable_json=self.json_logs or settings.environment == "production",
        )
        return settings

    def resolved_workers(self, settings: Settings) -> int:
        return self.workers if self.workers is not None else settings.workers

    def manifest_arguments(self, resolved: Optional[Mapping[str, Any]] = None) -> Dict[str, Any]:
        """
        재실행에 필요한 인자 (런타임 전용 인자 제외)

        Args:
            resolved: 설정에서 채운 실제 값. 지정하지 않은(None) 인자를 이 값으로 바꿔
                재실행이 그때의 .env / 환경 변수에 의존하지 않게 합니다.
        """
        arguments = self.model_dump(mode="json", exclude=set(self.RUNTIME_ONLY))
        if not resolved:
            return arguments
        return {
            key: resolved.get(key, value) if value is None else value
            for key, value in arguments.items()
        }

    def finish(
        self,
        outputs: List[Path],
        config: Dict[str, Any],
        input_sha256: Optional[str] = None,
        resolved: Optional[Mapping[str, Any]] = None,
    ) -> Path:
        """매니페스트를 쓰고 출력 목록을 stdout 에 알림"""
        manifest = RunManifest(
            command=self.COMMAND,
            arguments=self.manifest_arguments(resolved),
            config=config,
            input_sha256=input_sha256,
            outputs=[path.name for path in outputs],
        )
        manifest_path = manifest.write(self.out_dir)
        for path in [*outputs, manifest_path]:
            print(f"wrote {path}")
        return manifest_path


class ModelOptions(BaseModel):
    """커널, 점수 함수, F̂ 격자, 동점 처리 플래그"""

    kernel: Optional[str] = Field(default=None, description="커널 (biweight | epanechnikov)")
    score_threshold: Optional[float] = Field(default=None, description="점수 함수 하한 p_l")
    score_scale: Optional[float] = Field(default=None, description="점수 함수 logistic 스케일")
    score_form: Optional[str] = Field(
        default=None, description="점수 함수 형태 (logistic_step | uniform)"
    )
    score_upper: Optional[float] = Field(default=None, description="점수 함수 상한 p_u")
    score_renormalize: Optional[bool] = Field(
        default=None, description="∫₀¹ J = 1 이 되도록 J 정규화"
    )
    grid_lo: Optional[float] = Field(default=None, description="F̂ 격자 하한")
    grid_hi: Optional[float] = Field(default=None, description="F̂ 격자 상한")
    grid_steps: Optional[int] = Field(default=None, description="F̂ 격자 점 개수")
    tie_policy: Optional[str] = Field(default=None, description="동점 처리 (jitter | strict)")
    tie_seed: Optional[int] = Field(default=None, description="동점 jitter 시드")

    def model_overrides(self) -> Dict[str, Any]:
        return {
            "kernel": self.kernel,
            "score_threshold": self.score_threshold,
            "score_scale": self.score_scale,
            "score_form": self.score_form,
            "score_upper": self.score_upper,
            "score_renormalize": self.score_renormalize,
            "grid_lo": self.grid_lo,
            "grid_hi": self.grid_hi,
            "grid_steps": self.grid_steps,
            "tie_policy": self.tie_policy,
            "tie_seed": self.tie_seed,
        }


class DatasetOptions(BaseModel):
    """입력 CSV 플래그"""

    input: Path = Field(..., description="x,z,delta CSV 경로")
    header: bool = Field(default=True, description="첫 줄이 헤더인지 여부")
    log_transform: bool = Field(default=False, description="z ↦ ln(z) 변환 (z > 0 필요)")

    def load_dataset(self, request: FitRequestDTO) -> DatasetFile:
        return unwrap_or_exit(
            load_csv(
                self.input,
                has_header=self.header,
                log_transform_z=self.log_transform,
                tie_policy=request.tie,
                tie_seed=request.tie_seed,
            ),
            "load_csv",
        )
