"""
통합 로깅 시스템

추정기/시뮬레이션 전반에서 사용하는 구조화 로거
"""

import json
import logging
import sys
from datetime import datetime, timezone
from enum import Enum
from typing import Any, Dict, Optional, TextIO


class LogLevel(str, Enum):
    """로그 레벨"""
    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"
    CRITICAL = "CRITICAL"


def _json_default(value: Any) -> Any:
    # numpy 스칼라 등은 float/str 로 변환
    try:
        return float(value)
    except (TypeError, ValueError):
        return str(value)


class UnifiedLogger:
    """
    통합 로거 클래스

    모든 로그를 message/context/timestamp 구조의 JSON 으로 기록합니다.
    """

    def __init__(self, name: str, context: Optional[Dict[str, Any]] = None):
        """
        로거 초기화

        Args:
            name: 로거 이름 (일반적으로 __name__ 사용)
            context: 기본 컨텍스트 (모든 로그에 포함됨)
        """
        self.name = name
        self.context = context or {}
        self._logger = logging.getLogger(name)

    def _format_log_data(self, message: str, **kwargs: Any) -> Dict[str, Any]:
        return {
            "message": message,
            "context": {**self.context, **kwargs},
            "timestamp": datetime.now(timezone.utc).isoformat(),
        }

    def _emit(self, level: int, message: str, /, **kwargs: Any) -> None:
        if not self._logger.isEnabledFor(level):
            return
        log_data = self._format_log_data(message, **kwargs)
        self._logger.log(level, json.dumps(log_data, ensure_ascii=False, default=_json_default))

    def debug(self, message: str, **kwargs: Any) -> None:
        """DEBUG 레벨 로그"""
        self._emit(logging.DEBUG, message, **kwargs)

    def info(self, message: str, **kwargs: Any) -> None:
        """INFO 레벨 로그"""
        self._emit(logging.INFO, message, **kwargs)

    def warning(self, message: str, **kwargs: Any) -> None:
        """WARNING 레벨 로그"""
        self._emit(logging.WARNING, message, **kwargs)

    def error(self, message: str, **kwargs: Any) -> None:
        """ERROR 레벨 로그"""
        self._emit(logging.ERROR, message, **kwargs)

    # ===========================================
    # 특수 로깅 메서드
    # ===========================================

    def log_operation(self, operation: str, status: str = "started", **metadata: Any) -> None:
        """
        작업 로깅

        Args:
            operation: 작업 이름 (예: "monte_carlo", "bootstrap")
            status: 작업 상태 (started, completed, failed)
            **metadata: 추가 메타데이터
        """
        self.info(f"작업 {status}", operation=operation, status=status, **metadata)

    def log_performance(self, operation: str, duration_ms: float, **metadata: Any) -> None:
        """
        성능 메트릭 로깅

        Args:
            operation: 측정 대상 작업
            duration_ms: 실행 시간 (밀리초)
            **metadata: 추가 성능 지표
        """
        self.info("성능 메트릭", operation=operation, duration_ms=round(duration_ms, 3), **metadata)

    def log_error_with_context(self, error: Any, operation: str, **context: Any) -> None:
        """
        에러와 컨텍스트를 함께 로깅

        Args:
            error: 예외 또는 EstimationError
            operation: 에러 발생 작업
            **context: 디버깅 컨텍스트
        """
        self.error(
            f"에러 발생: {error}",
            operation=operation,
            error_type=getattr(getattr(error, "kind", None), "value", type(error).__name__),
            error_message=str(error),
            **context,
        )


# ===========================================
# 전역 함수
# ===========================================

def get_logger(name: str, context: Optional[Dict[str, Any]] = None) -> UnifiedLogger:
    """
    로거 인스턴스 생성

    Args:
        name: 로거 이름 (일반적으로 __name__ 사용)
        context: 기본 컨텍스트

    Returns:
        UnifiedLogger 인스턴스
    """
    return UnifiedLogger(name, context)


def setup_logging(
    level: LogLevel = LogLevel.INFO,
    enable_json: bool = True,
    stream: Optional[TextIO] = None,
) -> None:
    """
    로깅 시스템 초기화

    CLI 는 stdout 을 결과 요약에 사용하므로 기본 출력 스트림은 stderr 입니다.

    Args:
        level: 로그 레벨
        enable_json: JSON 형식 로깅 활성화 (False면 텍스트 형식)
        stream: 콘솔 핸들러 출력 스트림 (None 이면 호출 시점의 sys.stderr)
    """
    root_logger = logging.getLogger()
    root_logger.setLevel(getattr(logging, level.value))

    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    console_handler = logging.StreamHandler(stream or sys.stderr)
    console_handler.setLevel(getattr(logging, level.value))

    if enable_json:
        formatter = logging.Formatter("%(message)s")
    else:
        formatter = logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s")

    console_handler.setFormatter(formatter)
    root_logger.addHandler(console_handler)

