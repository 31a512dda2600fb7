"""
CSV 데이터셋 어댑터

x,z,delta 형식의 UTF-8 CSV 를 읽어 SurvivalSample 로 변환하고,
표본을 같은 형식으로 다시 씁니다. 실수는 17 유효숫자로 기록해 왕복이 정확합니다.
"""

import hashlib
import io
from dataclasses import dataclass
from pathlib import Path
from typing import Union

import numpy as np
import pandas as pd
from rfs.core.result import Failure, Result, Success

from ....domain.errors import ErrorKind, EstimationError, estimation_error
from ....domain.survival.value_objects.observation import SurvivalSample, TiePolicy
from ....shared.logging import get_logger

logger = get_logger(__name__)

COLUMNS = ("x", "z", "delta")
FLOAT_FORMAT = "%.17g"

PathLike = Union[str, Path]


@dataclass(frozen=True)
class DatasetFile:
    """
    읽어들인 데이터셋

    Attributes:
        sample: 검증된 표본
        path: 원본 경로
        sha256: 원본 파일 바이트의 SHA-256
        rows: 데이터 행 수
        log_transformed: z ↦ ln(z) 적용 여부
    """

    sample: SurvivalSample
    path: str
    sha256: str
    rows: int
    log_transformed: bool = False


def _parse_error(message: str, **context: object) -> Failure:
    return Failure(estimation_error(ErrorKind.PARSE_ERROR, message, **context))


def _select_columns(frame: pd.DataFrame, has_header: bool) -> Result[pd.DataFrame, EstimationError]:
    if has_header:
        lowered = {str(name).strip().lower(): name for name in frame.columns}
        missing = [name for name in COLUMNS if name not in lowered]
        if missing:
            return _parse_error(
                f"헤더에 {missing} 열이 없습니다 (필요: x,z,delta)", header=list(map(str, frame.columns))
            )
        selected = frame[[lowered[name] for name in COLUMNS]]
    else:
        if frame.shape[1] != len(COLUMNS):
            return _parse_error(
                f"열 개수가 {frame.shape[1]}개입니다 (필요: x,z,delta 3개)", columns=frame.shape[1]
            )
        selected = frame
    selected = selected.copy()
    selected.columns = list(COLUMNS)
    return Success(selected)


def _to_numeric(
    frame: pd.DataFrame, first_line: int
) -> Result[dict[str, np.ndarray], EstimationError]:
    """열별 실수 변환 (실패하면 첫 번째 문제 셀의 파일 행 번호와 열 이름)"""
    parsed: dict[str, np.ndarray] = {}
    for column in COLUMNS:
        raw = frame[column].astype(str).str.strip()
        values = pd.to_numeric(raw, errors="coerce").to_numpy(dtype=np.float64)
        bad = ~np.isfinite(values)
        if column == "delta":
            bad |= ~np.isin(values, (0.0, 1.0))
        if bad.any():
            index = int(np.flatnonzero(bad)[0])
            line = first_line + index
            expected = "0 또는 1" if column == "delta" else "유한한 실수"
            return _parse_error(
                f"{line}행 '{column}' 열 값 '{raw.iloc[index]}' 을 해석할 수 없습니다 ({expected})",
                row=line,
                column=column,
                value=str(raw.iloc[index]),
            )
        parsed[column] = values
    return Success(parsed)


def load_csv(
    path: PathLike,
    has_header: bool = True,
    log_transform_z: bool = False,
    tie_policy: TiePolicy = TiePolicy.JITTER,
    tie_seed: int = 0,
) -> Result[DatasetFile, EstimationError]:
    """
    CSV 파일을 읽어 DatasetFile 생성

    Args:
        path: CSV 경로
        has_header: 첫 줄이 헤더인지 여부
        log_transform_z: z ↦ ln(z) 적용 (z > 0 필요)
        tie_policy: 동점 처리 방식
        tie_seed: jitter 시드

    Returns:
        Result: PARSE_ERROR (행/열 명시), NON_POSITIVE_TIME, 또는 표본 검증 에러
    """
    source = Path(path)
    try:
        data = source.read_bytes()
    except OSError as e:
        return Failure(
            estimation_error(
                ErrorKind.INVALID_ARGUMENT, f"파일을 읽을 수 없습니다: {source} ({e})", path=str(source)
            )
        )

    # 1. 문자열 그대로 읽기
    try:
        frame = pd.read_csv(
            io.BytesIO(data),
            header=0 if has_header else None,
            dtype=str,
            keep_default_na=False,
            encoding="utf-8",
        )
    except (pd.errors.EmptyDataError, pd.errors.ParserError, UnicodeDecodeError) as e:
        return _parse_error(f"CSV 파싱 실패: {source} ({e})", path=str(source))

    if frame.empty:
        return _parse_error(f"데이터 행이 없습니다: {source}", path=str(source))

    # 2. 열 선택 및 실수 변환
    selected = _select_columns(frame, has_header)
    if selected.is_failure():
        return Failure(selected.unwrap_error())
    numeric = _to_numeric(selected.unwrap(), first_line=2 if has_header else 1)
    if numeric.is_failure():
        return Failure(numeric.unwrap_error())
    columns = numeric.unwrap()

    # 3. 로그 변환
    z = columns["z"]
    if log_transform_z:
        non_positive = np.flatnonzero(z <= 0)
        if len(non_positive):
            line = int(non_positive[0]) + (2 if has_header else 1)
            return Failure(
                estimation_error(
                    ErrorKind.NON_POSITIVE_TIME,
                    f"{line}행 z={z[non_positive[0]]!r} 는 로그 변환할 수 없습니다 (z > 0 필요)",
                    row=line,
                    count=len(non_positive),
                )
            )
        z = np.log(z)

    # 4. 표본 검증
    sample = SurvivalSample.create(
        columns["x"], z, columns["delta"].astype(np.int64), tie_policy=tie_policy, tie_seed=tie_seed
    )
    if sample.is_failure():
        return Failure(sample.unwrap_error())

    logger.info(
        "데이터셋 로드",
        path=str(source),
        rows=len(frame),
        log_transform=log_transform_z,
        jittered=sample.unwrap().jittered,
    )
    return Success(
        DatasetFile(
            sample=sample.unwrap(),
            path=str(source),
            sha256=hashlib.sha256(data).hexdigest(),
            rows=len(frame),
            log_transformed=log_transform_z,
        )
    )


def dataset_frame(sample: SurvivalSample) -> pd.DataFrame:
    """표본을 x,z,delta DataFrame 으로 (원래 순서)"""
    return pd.DataFrame({"x": sample.x, "z": sample.z, "delta": sample.delta.astype(np.int64)})


def write_dataset_csv(sample: SurvivalSample, path: PathLike) -> Path:
    """표본을 헤더 있는 x,z,delta CSV 로 저장"""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    dataset_frame(sample).to_csv(
        target, index=False, float_format=FLOAT_FORMAT, lineterminator="\n"
    )
    return target
