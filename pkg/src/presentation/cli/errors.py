"""
CLI 에러와 종료 코드

Result 의 Failure 를 종료 코드가 붙은 CommandError 로 바꿉니다.
"""

from typing import TypeVar

from rfs.core.result import Result

from ...domain.errors import EstimationError
from ...shared.logging import get_logger

logger = get_logger(__name__)

T = TypeVar("T")

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_ESTIMATION = 3


class CommandError(Exception):
    """
    종료 코드가 있는 명령 실패

    Attributes:
        exit_code: 2 (입력/검증 오류) 또는 3 (추정 실패)
        message: stderr 로 출력할 메시지
        kind: 원인 에러 종류
    """

    def __init__(self, exit_code: int, message: str, kind: str | None = None):
        super().__init__(message)
        self.exit_code = exit_code
        self.message = message
        self.kind = kind

    @classmethod
    def from_error(cls, error: EstimationError) -> "CommandError":
        """검증 계열은 2, 추정 계열은 3"""
        code = EXIT_USAGE if error.kind.is_validation else EXIT_ESTIMATION
        return cls(code, str(error), error.kind.value)


def unwrap_or_exit(result: Result[T, EstimationError], operation: str) -> T:
    """
    Success 면 값을, Failure 면 로그를 남기고 CommandError

    Args:
        result: 연산 결과
        operation: 로그에 남길 연산 이름
    """
    if result.is_failure():
        error = result.unwrap_error()
        logger.log_error_with_context(error, operation)
        raise CommandError.from_error(error)
    return result.unwrap()
