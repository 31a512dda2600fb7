"""
실행 매니페스트 어댑터

명령 이름과 해석이 끝난 인자, 도구 버전, 입력 체크섬을 기록해
같은 매니페스트로 다시 실행하면 출력 파일이 바이트 단위로 같게 합니다.
"""

import json
from importlib.metadata import PackageNotFoundError, version
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError
from rfs.core.result import Failure, Result, Success

from ....domain.errors import ErrorKind, EstimationError, estimation_error
from .csv_dataset_adapter import PathLike
from .report_writer import SCHEMA_VERSION, write_json

MANIFEST_FILE = "manifest.json"
DISTRIBUTION_NAME = "cure-lsm"


def tool_version() -> str:
    """설치된 배포판 버전 (소스 트리에서 실행하면 "0+source")"""
    try:
        return version(DISTRIBUTION_NAME)
    except PackageNotFoundError:
        return "0+source"


class RunManifest(BaseModel):
    """
    실행 매니페스트

    Attributes:
        command: 하위 명령 이름 (fit, simulate, bootstrap, ...)
        arguments: 출력에 영향을 주는 명령 인자 전체
        config: 해석이 끝난 추정/시뮬레이션 설정
        version: 도구 버전
        input_sha256: 입력 CSV 의 SHA-256 (입력이 없으면 None)
        outputs: 같은 디렉토리에 쓴 파일 이름
    """

    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(default=SCHEMA_VERSION, alias="schema")
    command: str
    arguments: Dict[str, Any] = Field(default_factory=dict)
    config: Dict[str, Any] = Field(default_factory=dict)
    version: str = Field(default_factory=tool_version)
    input_sha256: Optional[str] = None
    outputs: List[str] = Field(default_factory=list)

    def write(self, out_dir: PathLike) -> Path:
        """out_dir/manifest.json 저장"""
        payload = self.model_dump(mode="json", by_alias=True)
        payload.pop("schema")
        return write_json(Path(out_dir) / MANIFEST_FILE, payload)

    @classmethod
    def load(cls, path: PathLike) -> Result["RunManifest", EstimationError]:
        """
        매니페스트 읽기

        Returns:
            Result: 읽기/형식 오류는 PARSE_ERROR
        """
        source = Path(path)
        try:
            payload = json.loads(source.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as e:
            return Failure(
                estimation_error(
                    ErrorKind.PARSE_ERROR, f"매니페스트를 읽을 수 없습니다: {source} ({e})"
                )
            )
        try:
            manifest = cls.model_validate(payload)
        except ValidationError as e:
            return Failure(
                estimation_error(
                    ErrorKind.PARSE_ERROR,
                    f"매니페스트 형식 오류: {source} ({e.error_count()}개 필드)",
                    errors=[error["loc"] for error in e.errors()],
                )
            )
        if manifest.schema_version != SCHEMA_VERSION:
            return Failure(
                estimation_error(
                    ErrorKind.PARSE_ERROR,
                    f"지원하지 않는 매니페스트 schema: {manifest.schema_version}",
                )
            )
        return Success(manifest)
