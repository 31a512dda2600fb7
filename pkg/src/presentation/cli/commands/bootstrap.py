"""
bootstrap / coverage 명령
"""

from typing import ClassVar, List, Optional

from pydantic import Field

from ....application.bootstrap.dto.bootstrap_dto import BootstrapConfig, CoverageConfig
from ....application.bootstrap.services.bootstrap_service import BootstrapService
from ....application.bootstrap.services.coverage_study import CoverageStudy
from ....application.fitting.services.cure_fitting_service import CureFittingService
from ....infrastructure.io.adapters.report_writer import band_frame, write_frame, write_json
from ..errors import unwrap_or_exit
from ..options import CommonOptions
from .fitting import FitCommand


class BootstrapCommand(FitCommand):
    """F̂ 부트스트랩 신뢰대: band.csv (t, lower, point, upper), band.json"""

    COMMAND: ClassVar[str] = "bootstrap"

    replicates: Optional[int] = Field(default=None, description="부트스트랩 반복 횟수", ge=1)
    level: Optional[float] = Field(default=None, description="신뢰 수준", gt=0.0, lt=1.0)
    seed: int = Field(default=0, description="난수 시드", ge=0, lt=2**64)

    def cli_cmd(self) -> None:
        settings = self.start()
        request = self.fit_request(settings)
        config = BootstrapConfig(
            replicates=(
                self.replicates
                if self.replicates is not None
                else settings.bootstrap.bootstrap_replicates
            ),
            level=self.level if self.level is not None else settings.bootstrap.bootstrap_level,
            seed=self.seed,
        )
        dataset = self.load_dataset(request)

        model, _ = unwrap_or_exit(
            CureFittingService().fit_model(dataset.sample, request), "fit_model"
        )
        service = BootstrapService(max_workers=self.resolved_workers(settings))
        band = unwrap_or_exit(
            service.bootstrap_F_band(
                model,
                config,
                request.grid_lo,
                request.grid_hi,
                request.grid_steps,
                tie_seed=request.tie_seed,
            ),
            "bootstrap_F_band",
        )

        outputs = [
            write_frame(self.out_dir / "band.csv", band_frame(band)),
            write_json(
                self.out_dir / "band.json",
                band.model_dump(mode="json", exclude={"grid", "lower", "point", "upper"}),
            ),
        ]
        resolved = request.model_dump(mode="json")
        self.finish(
            outputs,
            {**resolved, "bootstrap": config.model_dump(mode="json")},
            dataset.sha256,
            {**resolved, "replicates": config.replicates, "level": config.level},
        )


class CoverageCommand(CommonOptions):
    """참 모형 자료로 신뢰대 커버리지 측정: coverage.json"""

    COMMAND: ClassVar[str] = "coverage"

    n: int = Field(default=100, description="자료별 표본 크기", ge=10)
    datasets: int = Field(default=200, description="자료 개수", ge=1)
    replicates: int = Field(default=100, description="자료별 부트스트랩 반복 횟수", ge=1)
    level: float = Field(default=0.95, description="신뢰 수준", gt=0.0, lt=1.0)
    seed: int = Field(default=0, description="난수 시드", ge=0, lt=2**64)
    c: float = Field(default=0.75, description="대역폭 비례 상수 C", gt=0.0)
    gamma: float = Field(default=1.0 / 16.0, description="대역폭 지수 γ")
    points: List[float] = Field(default_factory=lambda: [0.0], description="t 지점")

    def cli_cmd(self) -> None:
        settings = self.start()
        config = CoverageConfig(**self.manifest_arguments())
        study = CoverageStudy(max_workers=self.resolved_workers(settings))
        report = unwrap_or_exit(study.run(config), "coverage_study")

        outputs = [
            write_json(self.out_dir / "coverage.json", report.model_dump(mode="json")),
        ]
        self.finish(outputs, config.model_dump(mode="json"))
