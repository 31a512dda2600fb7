"""
추정 에러 정의

도메인/애플리케이션 연산은 예외 대신 Result[T, EstimationError] 를 반환합니다.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict


class ErrorKind(str, Enum):
    """
    에러 종류

    Values:
        EMPTY_WINDOW: x0 의 커널 창 안에 관측치가 없음 (대역폭 과소 또는 x0 가 범위 밖)
        NO_EVENTS: 비중도절단 관측치가 하나도 없음 (τ̂₀ 정의 불가)
        NO_LOCAL_EVENTS: 창 안에 양의 가중치를 가진 사건이 없음 (Q̂ ≡ 0)
        QUANTILE_OUT_OF_RANGE: q 가 Q̂(τ̂₀|x0) 를 초과
        DEGENERATE_SCALE: 국소 분산 v̂ 이 퇴화
        NO_VALID_COVARIATES: F̂ 평균에 포함할 공변량이 없음
        BOOTSTRAP_UNSTABLE: 부트스트랩 재적합 재시도 한도 초과
        ALL_RUNS_FAILED: 모든 Monte Carlo 반복 실패
        PARSE_ERROR: 입력 파일 파싱 실패
        NON_POSITIVE_TIME: 로그 변환 시 z ≤ 0
        TIED_RESPONSES: strict 모드에서 동점 응답 발견
        INVALID_ARGUMENT: 잘못된 인자
    """

    EMPTY_WINDOW = "empty_window"
    NO_EVENTS = "no_events"
    NO_LOCAL_EVENTS = "no_local_events"
    QUANTILE_OUT_OF_RANGE = "quantile_out_of_range"
    DEGENERATE_SCALE = "degenerate_scale"
    NO_VALID_COVARIATES = "no_valid_covariates"
    BOOTSTRAP_UNSTABLE = "bootstrap_unstable"
    ALL_RUNS_FAILED = "all_runs_failed"
    PARSE_ERROR = "parse_error"
    NON_POSITIVE_TIME = "non_positive_time"
    TIED_RESPONSES = "tied_responses"
    INVALID_ARGUMENT = "invalid_argument"

    @property
    def is_validation(self) -> bool:
        """입력 검증 계열 에러 여부 (CLI 종료 코드 2)"""
        return self in _VALIDATION_KINDS


_VALIDATION_KINDS = frozenset(
    {
        ErrorKind.PARSE_ERROR,
        ErrorKind.NON_POSITIVE_TIME,
        ErrorKind.TIED_RESPONSES,
        ErrorKind.INVALID_ARGUMENT,
    }
)


@dataclass(frozen=True)
class EstimationError:
    """
    추정 에러 값 객체

    Attributes:
        kind: 에러 종류
        message: 사람이 읽을 수 있는 메시지 (실패한 추정기 이름 포함)
        context: 디버깅 컨텍스트 (x0, 대역폭 등)
    """

    kind: ErrorKind
    message: str
    context: Dict[str, Any] = field(default_factory=dict)

    def __str__(self) -> str:
        return f"[{self.kind.value}] {self.message}"

    def to_dict(self) -> Dict[str, Any]:
        """딕셔너리 변환"""
        return {"kind": self.kind.value, "message": self.message, "context": dict(self.context)}


def estimation_error(kind: ErrorKind, message: str, **context: Any) -> EstimationError:
    """EstimationError 생성 헬퍼"""
    return EstimationError(kind=kind, message=message, context=context)
