"""
점수 함수 Value Object

L-functional 위치 m 과 척도 s 를 정의하는 가중 함수 J 와 그 원시함수 I(q) = ∫₀^q J(p)dp,
그리고 계단형 분위수 함수에 대한 J 가중 적분을 제공합니다.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Tuple

import numpy as np
from numpy.typing import ArrayLike, NDArray
from rfs.core.result import Failure, Result, Success

from ...errors import ErrorKind, EstimationError, estimation_error


class ScoreForm(str, Enum):
    """
    점수 함수 형태

    Values:
        LOGISTIC_STEP: p ≤ p_l 에서 0, 그 위에서 logistic(p/scale) (계단 함수의 매끄러운 근사)
        UNIFORM: (p_l, p_u] 에서 상수 1/(p_u − p_l)
    """

    LOGISTIC_STEP = "logistic_step"
    UNIFORM = "uniform"


def _softplus(x: NDArray[np.float64]) -> NDArray[np.float64]:
    return np.logaddexp(0.0, x)


@dataclass(frozen=True)
class ScoreFunction:
    """
    점수 함수 J

    Attributes:
        p_l: 하한 임계값, p ≤ p_l 에서 J = 0
        scale: logistic 스케일
        form: 형태
        p_u: 상한 임계값, p > p_u 에서 J = 0
        renormalize: True 면 J 를 I(1) 로 나눠 정확히 적분 1 로 맞춤
    """

    p_l: float = 1e-4
    scale: float = 1e-4
    form: ScoreForm = ScoreForm.LOGISTIC_STEP
    p_u: float = 1.0
    renormalize: bool = False

    @classmethod
    def create(
        cls,
        p_l: float = 1e-4,
        scale: float = 1e-4,
        form: ScoreForm | str = ScoreForm.LOGISTIC_STEP,
        p_u: float = 1.0,
        renormalize: bool = False,
    ) -> Result["ScoreFunction", EstimationError]:
        """
        ScoreFunction 생성

        검증 규칙:
        - 0 ≤ p_l < p_u ≤ 1
        - scale > 0

        Returns:
            Result[ScoreFunction, EstimationError]
        """
        try:
            form = ScoreForm(form)
        except ValueError:
            return Failure(
                estimation_error(ErrorKind.INVALID_ARGUMENT, f"지원하지 않는 점수 함수 형태: {form}")
            )
        if not (0.0 <= p_l < p_u <= 1.0):
            return Failure(
                estimation_error(
                    ErrorKind.INVALID_ARGUMENT,
                    f"0 ≤ p_l < p_u ≤ 1 이어야 합니다. 입력값: p_l={p_l}, p_u={p_u}",
                )
            )
        if not scale > 0:
            return Failure(
                estimation_error(ErrorKind.INVALID_ARGUMENT, f"scale 은 양수여야 합니다: {scale}")
            )
        return Success(
            cls(
                p_l=float(p_l),
                scale=float(scale),
                form=form,
                p_u=float(p_u),
                renormalize=renormalize,
            )
        )

    @classmethod
    def uniform(cls, p_l: float = 0.0, p_u: float = 1.0) -> "ScoreFunction":
        """균등 점수 함수 (p_l=0, p_u=1 이면 J ≡ 1)"""
        return cls(p_l=p_l, form=ScoreForm.UNIFORM, p_u=p_u)

    def _raw_mass(self, q: NDArray[np.float64]) -> NDArray[np.float64]:
        clipped = np.clip(q, self.p_l, self.p_u)
        if self.form is ScoreForm.UNIFORM:
            return (clipped - self.p_l) / (self.p_u - self.p_l)
        offset = _softplus(np.float64(self.p_l / self.scale))
        return self.scale * (_softplus(clipped / self.scale) - offset)

    def _raw_density(self, p: NDArray[np.float64]) -> NDArray[np.float64]:
        active = (p > self.p_l) & (p <= self.p_u)
        if self.form is ScoreForm.UNIFORM:
            return np.where(active, 1.0 / (self.p_u - self.p_l), 0.0)
        return np.where(active, 1.0 / (1.0 + np.exp(-p / self.scale)), 0.0)

    @property
    def _normalizer(self) -> float:
        if not self.renormalize:
            return 1.0
        return float(self._raw_mass(np.float64(1.0)))

    def density(self, p: ArrayLike) -> NDArray[np.float64]:
        """J(p)"""
        return self._raw_density(np.asarray(p, dtype=np.float64)) / self._normalizer

    def mass(self, q: ArrayLike) -> NDArray[np.float64]:
        """I(q) = ∫₀^q J(p)dp (닫힌 형태)"""
        return self._raw_mass(np.asarray(q, dtype=np.float64)) / self._normalizer

    @property
    def total_mass(self) -> float:
        """I(1), 기본 J 에서는 1 − 1e−4·softplus(1) ≈ 0.99987"""
        return float(self.mass(1.0))


def weighted_moments(
    score: ScoreFunction, values: NDArray[np.float64], breakpoints: NDArray[np.float64]
) -> Tuple[float, float]:
    """
    계단형 분위수 함수의 J 가중 1, 2차 적률

    ξ(p) = values[k] (p ∈ (breakpoints[k], breakpoints[k+1]]) 일 때
    (∫ξJ, ∫ξ²J) 를 구간별 I 차분으로 정확히 계산합니다.

    Args:
        score: 점수 함수
        values: 계단 값 (K 개)
        breakpoints: 0 = P₀ < … < P_K = 1 (K+1 개)

    Returns:
        (∫ξJ dp, ∫ξ²J dp)
    """
    increments = np.diff(score.mass(breakpoints))
    first = float(np.dot(increments, values))
    second = float(np.dot(increments, values * values))
    return first, second


def standardization_constants(
    score: ScoreFunction, values: NDArray[np.float64], breakpoints: NDArray[np.float64]
) -> Result[Tuple[float, float], EstimationError]:
    """
    J 가중 위치 0, 척도 1 로 만드는 아핀 상수

    a = ∫ξJ / I(1), b = sqrt(∫ξ²J − a²·I(1)) 로 두면 (ξ − a)/b 의
    J 가중 위치는 0, J 가중 2차 적률은 1 이 됩니다 (I(1) ≠ 1 이어도 정확).

    Returns:
        Result[(a, b), EstimationError]: b² ≤ 0 이면 DEGENERATE_SCALE
    """
    first, second = weighted_moments(score, values, breakpoints)
    return standardize_moments(first, second, score.total_mass)


def standardize_moments(
    first: float, second: float, total: float
) -> Result[Tuple[float, float], EstimationError]:
    """J 가중 적률 (∫ξJ, ∫ξ²J) 와 I(1) 로부터 (a, b)"""
    location = first / total
    spread = second - location * location * total
    if not spread > 0:
        return Failure(
            estimation_error(
                ErrorKind.DEGENERATE_SCALE,
                "standardization_constants: 표준화 척도가 퇴화했습니다",
                spread=spread,
            )
        )
    return Success((location, float(np.sqrt(spread))))


def empirical_breakpoints(n: int) -> NDArray[np.float64]:
    """크기 n 경험 분위수 함수의 구간 경계 0, 1/n, …, 1"""
    return np.arange(n + 1, dtype=np.float64) / n
