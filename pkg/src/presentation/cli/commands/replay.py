"""
replay 명령

매니페스트에 기록된 명령을 같은 인자로 다시 실행합니다.
"""

import hashlib
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, Field

from ....infrastructure.io.adapters.manifest import RunManifest
from ....shared.logging import get_logger
from ..errors import EXIT_USAGE, CommandError, unwrap_or_exit
from . import COMMANDS

logger = get_logger(__name__)


class ReplayCommand(BaseModel):
    """매니페스트 재실행 (출력 디렉토리 기본값: 매니페스트가 있는 디렉토리)"""

    manifest: Path = Field(..., description="manifest.json 경로")
    out_dir: Optional[Path] = Field(default=None, description="출력 디렉토리")
    workers: Optional[int] = Field(default=None, description="워커 스레드 수", ge=1)
    json_logs: bool = Field(default=False, description="stderr 로그를 JSON 으로 출력")

    def cli_cmd(self) -> None:
        recorded = unwrap_or_exit(RunManifest.load(self.manifest), "load_manifest")
        command_cls = COMMANDS.get(recorded.command)
        if command_cls is None:
            raise CommandError(EXIT_USAGE, f"알 수 없는 명령: {recorded.command}")

        command = command_cls.model_validate(
            {
                **recorded.arguments,
                "out_dir": self.out_dir or self.manifest.parent,
                "workers": self.workers,
                "json_logs": self.json_logs,
            }
        )
        if recorded.input_sha256 is not None:
            self._verify_input(Path(recorded.arguments["input"]), recorded.input_sha256)

        logger.info("매니페스트 재실행", command=recorded.command, manifest=str(self.manifest))
        command.cli_cmd()

    @staticmethod
    def _verify_input(path: Path, expected: str) -> None:
        try:
            actual = hashlib.sha256(path.read_bytes()).hexdigest()
        except OSError as e:
            raise CommandError(EXIT_USAGE, f"입력 파일을 읽을 수 없습니다: {path} ({e})") from e
        if actual != expected:
            raise CommandError(
                EXIT_USAGE,
                f"입력 파일 체크섬이 매니페스트와 다릅니다: {path} "
                f"(기록 {expected[:12]}…, 현재 {actual[:12]}…)",
            )
