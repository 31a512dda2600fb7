"""
fit / compare 명령

CSV 자료에 모형을 적합해 fit.json, curves.csv, fhat.csv 를 쓰거나,
여러 대역폭 규칙의 F̂ 를 공통 격자에서 비교합니다.
"""

from itertools import product
from typing import ClassVar, List, Optional

from pydantic import Field

from ....application.fitting.dto.fit_request_dto import FitRequestDTO
from ....application.fitting.services.bandwidth_comparison_service import (
    BandwidthComparisonService,
)
from ....application.fitting.services.cure_fitting_service import CureFittingService
from ....infrastructure.io.adapters.report_writer import (
    comparison_frame,
    curves_frame,
    fhat_frame,
    write_frame,
    write_json,
)
from ....shared.config import Settings
from ..errors import unwrap_or_exit
from ..options import CommonOptions, DatasetOptions, ModelOptions


class FitCommand(CommonOptions, ModelOptions, DatasetOptions):
    """모형 적합: fit.json, curves.csv, fhat.csv"""

    COMMAND: ClassVar[str] = "fit"

    bandwidth: Optional[float] = Field(
        default=None, description="명시적 대역폭 a (지정 시 --c/--gamma 무시)"
    )
    c: Optional[float] = Field(default=None, description="대역폭 비례 상수 C")
    gamma: Optional[float] = Field(default=None, description="대역폭 지수 γ")
    curve_steps: Optional[int] = Field(default=None, description="곡선 공변량 격자 점 개수")

    def fit_request(self, settings: Settings) -> FitRequestDTO:
        return FitRequestDTO.from_settings(
            settings.estimation,
            bandwidth=self.bandwidth,
            c=self.c,
            gamma=self.gamma,
            curve_steps=self.curve_steps,
            **self.model_overrides(),
        )

    def cli_cmd(self) -> None:
        request = self.fit_request(self.start())
        dataset = self.load_dataset(request)
        outcome = unwrap_or_exit(CureFittingService().fit(dataset.sample, request), "fit")
        response = outcome.response

        outputs = [
            write_json(
                self.out_dir / "fit.json",
                {
                    "input": {
                        "path": dataset.path,
                        "rows": dataset.rows,
                        "log_transformed": dataset.log_transformed,
                    },
                    **response.summary.model_dump(mode="json"),
                },
            ),
            write_frame(self.out_dir / "curves.csv", curves_frame(response.curves)),
            write_frame(self.out_dir / "fhat.csv", fhat_frame(response.error_distribution)),
        ]
        resolved = request.model_dump(mode="json")
        self.finish(outputs, resolved, dataset.sha256, resolved)


class CompareCommand(CommonOptions, ModelOptions, DatasetOptions):
    """대역폭 규칙 비교: compare.csv, compare.json (규칙은 --c × --gamma 조합)"""

    COMMAND: ClassVar[str] = "compare"

    c: List[float] = Field(default_factory=lambda: [0.75, 1.125], description="C 목록")
    gamma: List[float] = Field(
        default_factory=lambda: [1.0 / 16.0, 1.0 / 28.0], description="γ 목록"
    )

    def cli_cmd(self) -> None:
        settings = self.start()
        request = FitRequestDTO.from_settings(settings.estimation, **self.model_overrides())
        dataset = self.load_dataset(request)

        rules = list(product(self.c, self.gamma))
        comparison = unwrap_or_exit(
            BandwidthComparisonService().compare(dataset.sample, request, rules), "compare"
        )

        outputs = [
            write_frame(self.out_dir / "compare.csv", comparison_frame(comparison)),
            write_json(self.out_dir / "compare.json", comparison.to_dict()),
        ]
        self.finish(
            outputs,
            {**request.model_dump(mode="json"), "rules": [list(rule) for rule in rules]},
            dataset.sha256,
            request.model_dump(mode="json"),
        )
