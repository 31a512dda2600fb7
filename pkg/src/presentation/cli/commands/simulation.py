"""
simulate / generate 명령
"""

from itertools import product
from typing import ClassVar, List, Optional

from pydantic import Field

from ....application.simulation.dto.simulation_dto import SimulationConfig
from ....application.simulation.services.dataset_generation import draw_dataset
from ....application.simulation.services.monte_carlo_service import MonteCarloService
from ....infrastructure.io.adapters.csv_dataset_adapter import write_dataset_csv
from ....infrastructure.io.adapters.report_writer import (
    amise_table,
    amse_table,
    simulation_payload,
    write_frame,
    write_json,
)
from ..errors import unwrap_or_exit
from ..options import CommonOptions


class SimulateCommand(CommonOptions):
    """
    Monte Carlo AMSE / AMISE: table1.csv, table2.csv, report.json

    --n, --c, --gamma 는 여러 번 줄 수 있고 그 조합 전체를 실행합니다.
    """

    COMMAND: ClassVar[str] = "simulate"

    n: List[int] = Field(default_factory=lambda: [100], description="표본 크기 목록")
    c: Optional[List[float]] = Field(default=None, description="C 목록")
    gamma: Optional[List[float]] = Field(default=None, description="γ 목록")
    runs: Optional[int] = Field(default=None, description="Monte Carlo 반복 횟수")
    seed: int = Field(default=0, description="난수 시드", ge=0, lt=2**64)
    kernel: Optional[str] = Field(default=None, description="커널 (biweight | epanechnikov)")
    score_threshold: Optional[float] = Field(default=None, description="점수 함수 하한 p_l")
    score_scale: Optional[float] = Field(default=None, description="점수 함수 logistic 스케일")
    eval_points: Optional[List[float]] = Field(default=None, description="AMSE 평가 지점")
    amise_lo: Optional[float] = Field(default=None, description="AMISE 적분 하한")
    amise_hi: Optional[float] = Field(default=None, description="AMISE 적분 상한")
    amise_steps: Optional[int] = Field(default=None, description="AMISE 격자 점 개수")

    def cli_cmd(self) -> None:
        settings = self.start()
        estimation = settings.estimation
        c_values = self.c or [estimation.bandwidth_c]
        gamma_values = self.gamma or [estimation.bandwidth_gamma]

        base = SimulationConfig.from_settings(
            settings.simulation,
            n=self.n[0],
            c=c_values[0],
            gamma=gamma_values[0],
            runs=self.runs,
            seed=self.seed,
            kernel=self.kernel or estimation.kernel,
            score_threshold=(
                self.score_threshold
                if self.score_threshold is not None
                else estimation.score_threshold
            ),
            score_scale=self.score_scale or estimation.score_scale,
            eval_points=self.eval_points,
            amise_lo=self.amise_lo,
            amise_hi=self.amise_hi,
            amise_steps=self.amise_steps,
        )

        service = MonteCarloService(max_workers=self.resolved_workers(settings))
        tables = unwrap_or_exit(
            service.run_grid(base, self.n, list(product(c_values, gamma_values))), "simulate"
        )

        outputs = [
            write_frame(self.out_dir / "table1.csv", amse_table(tables.reports)),
            write_frame(self.out_dir / "table2.csv", amise_table(tables.reports)),
            write_json(self.out_dir / "report.json", simulation_payload(tables.reports)),
        ]
        config = base.model_dump(mode="json")
        self.finish(outputs, config, resolved={**config, "c": c_values, "gamma": gamma_values})


class GenerateCommand(CommonOptions):
    """참 모형에서 자료 하나를 뽑아 dataset.csv (x,z,delta) 로 저장"""

    COMMAND: ClassVar[str] = "generate"

    n: int = Field(default=100, description="표본 크기", ge=10)
    seed: int = Field(default=0, description="난수 시드", ge=0, lt=2**64)
    index: int = Field(default=0, description="스트림 번호 (Monte Carlo 반복 번호와 같음)", ge=0)

    def cli_cmd(self) -> None:
        self.start()
        dataset = unwrap_or_exit(draw_dataset(self.n, self.seed, self.index), "generate")
        outputs = [write_dataset_csv(dataset.sample, self.out_dir / "dataset.csv")]
        self.finish(outputs, self.manifest_arguments())
