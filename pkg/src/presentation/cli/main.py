"""
cure-model 명령줄 진입점

하위 명령:
    fit        CSV 자료에 모형 적합 (fit.json, curves.csv, fhat.csv)
    compare    여러 (C, γ) 규칙의 F̂ 비교 (compare.csv, compare.json)
    bootstrap  F̂ 의 부트스트랩 신뢰대 (band.csv, band.json)
    coverage   참 모형 자료로 신뢰대 커버리지 측정 (coverage.json)
    simulate   Monte Carlo AMSE / AMISE 표 (table1.csv, table2.csv, report.json)
    generate   참 모형 자료 생성 (dataset.csv)
    replay     manifest.json 재실행

종료 코드: 0 성공, 2 사용법/검증 오류, 3 추정 실패
"""

import sys
from typing import Optional, Sequence

from dotenv import load_dotenv
from pydantic import ValidationError
from pydantic_settings import (
    BaseSettings,
    CliApp,
    CliSubCommand,
    SettingsConfigDict,
    SettingsError,
)

from .commands import (
    BootstrapCommand,
    CompareCommand,
    CoverageCommand,
    FitCommand,
    GenerateCommand,
    SimulateCommand,
)
from .commands.replay import ReplayCommand
from .errors import EXIT_OK, EXIT_USAGE, CommandError


class CureModelCli(BaseSettings):
    """비모수 위치-척도 혼합 치유 모형 추정"""

    model_config = SettingsConfigDict(
        cli_prog_name="cure-model",
        cli_kebab_case=True,
        cli_implicit_flags=True,
        env_prefix="CURE_MODEL_CLI_",
    )

    fit: CliSubCommand[FitCommand]
    compare: CliSubCommand[CompareCommand]
    bootstrap: CliSubCommand[BootstrapCommand]
    coverage: CliSubCommand[CoverageCommand]
    simulate: CliSubCommand[SimulateCommand]
    generate: CliSubCommand[GenerateCommand]
    replay: CliSubCommand[ReplayCommand]

    def cli_cmd(self) -> None:
        CliApp.run_subcommand(self)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    CLI 실행

    Args:
        argv: 인자 목록 (None 이면 sys.argv[1:])

    Returns:
        int: 종료 코드
    """
    # .env 파일 로드 (환경 변수 설정)
    load_dotenv()

    try:
        CliApp.run(CureModelCli, cli_args=list(argv) if argv is not None else None)
    except CommandError as e:
        print(f"error: {e.message}", file=sys.stderr)
        return e.exit_code
    except (ValidationError, SettingsError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
