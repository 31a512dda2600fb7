"""
모의실험 참 모형 Value Object

공변량 X ~ U[−1, 1] 에서
    m(x) = 1 + 2x + 1.25·cos(πx²),  s(x) = 1 + 0.5·cos(πx),
    π(x) = logistic(x − 7/4)
이고, 오차는 2 에서 위로 절단한 표준정규분포를 J 가중 위치 0, 척도 1 이 되도록
아핀 표준화한 분포입니다. 중도절단 시간은 두 성분의 동일 비율 혼합입니다.
"""

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Tuple

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy import integrate
from scipy.special import expit, ndtr, ndtri

from ...cure_model.value_objects.score_function import ScoreFunction, standardize_moments

ErrorCdf = Callable[[ArrayLike], NDArray[np.float64]]
ErrorSampler = Callable[[np.random.Generator, int], NDArray[np.float64]]

# quad 를 나눌 지점: J 의 logistic 구간이 사실상 1 에 도달하는 위치 (p_l + 50·scale)
LOGISTIC_SETTLE = 50.0


@lru_cache(maxsize=16)
def truncated_normal_constants(truncation: float, score: ScoreFunction) -> Tuple[float, float]:
    """
    절단 정규 분위수 함수 ξ₀(p) = Φ⁻¹(p·Φ(c)) 의 표준화 상수 (a*, b*)

    (ξ₀ − a*)/b* 가 ∫ξJ = 0, ∫ξ²J = 1 을 만족합니다.
    """
    mass = float(ndtr(truncation))

    def quantile(p: float) -> float:
        return float(ndtri(p * mass))

    def weight(p: float) -> float:
        return float(score.density(p))

    lower = score.p_l
    upper = score.p_u
    pieces = [lower, min(lower + LOGISTIC_SETTLE * score.scale, upper), upper]
    first = second = 0.0
    for a, b in zip(pieces[:-1], pieces[1:]):
        if b <= a:
            continue
        first += integrate.quad(
            lambda p: quantile(p) * weight(p), a, b, epsabs=1e-13, epsrel=1e-12, limit=200
        )[0]
        second += integrate.quad(
            lambda p: quantile(p) ** 2 * weight(p), a, b, epsabs=1e-13, epsrel=1e-12, limit=200
        )[0]

    # 절단 정규의 분산은 양수이므로 실패하지 않음
    return standardize_moments(first, second, score.total_mass).unwrap()


@dataclass(frozen=True)
class SimulatedData:
    """
    모의 표본과 숨겨진 참값

    Attributes:
        x: 공변량
        z: 관측 시간 min(Y, C)
        delta: 1[Y ≤ C]
        cured: 치유 여부
        uncured_response: 치유되지 않았을 때의 응답 m(X) + s(X)ε
        censoring: 중도절단 시간
    """

    x: NDArray[np.float64]
    z: NDArray[np.float64]
    delta: NDArray[np.int64]
    cured: NDArray[np.bool_]
    uncured_response: NDArray[np.float64]
    censoring: NDArray[np.float64]


@dataclass(frozen=True)
class TrueModel:
    """
    참 모형

    Attributes:
        truncation: 오차 정규분포의 상한 절단점
        cure_center: 치유 곡선 중심
        censor_mean: 첫 번째 중도절단 성분의 평균
        censor_variance: 첫 번째 중도절단 성분의 분산
        censor_shift: 두 번째 성분에서 m(X) 에 더하는 이동량
        score: 오차 표준화에 쓰는 점수 함수
    """

    truncation: float = 2.0
    cure_center: float = 1.75
    censor_mean: float = 10.0
    censor_variance: float = 0.5
    censor_shift: float = 0.5
    score: ScoreFunction = field(default_factory=ScoreFunction)

    def m(self, x: ArrayLike) -> NDArray[np.float64]:
        x = np.asarray(x, dtype=np.float64)
        return 1.0 + 2.0 * x + 1.25 * np.cos(np.pi * x * x)

    def s(self, x: ArrayLike) -> NDArray[np.float64]:
        x = np.asarray(x, dtype=np.float64)
        return 1.0 + 0.5 * np.cos(np.pi * x)

    def pi(self, x: ArrayLike) -> NDArray[np.float64]:
        """치유 확률 π(x) = logistic(x − 7/4)"""
        return expit(np.asarray(x, dtype=np.float64) - self.cure_center)

    @property
    def error_constants(self) -> Tuple[float, float]:
        """(a*, b*): ε = (ξ₀ − a*)/b*"""
        return truncated_normal_constants(self.truncation, self.score)

    @property
    def tau_f(self) -> float:
        """오차 분포의 상한 지지점 (c − a*)/b*"""
        a, b = self.error_constants
        return (self.truncation - a) / b

    def error_cdf(self, t: ArrayLike) -> NDArray[np.float64]:
        """F(t) = Φ(a* + b*·t) / Φ(c), t ≥ τ_F 에서 1"""
        a, b = self.error_constants
        t = np.asarray(t, dtype=np.float64)
        values = ndtr(a + b * t) / ndtr(self.truncation)
        return np.where(t >= self.tau_f, 1.0, np.clip(values, 0.0, 1.0))

    def error_quantile(self, p: ArrayLike) -> NDArray[np.float64]:
        """ξ_F(p) = (Φ⁻¹(p·Φ(c)) − a*)/b*"""
        a, b = self.error_constants
        p = np.asarray(p, dtype=np.float64)
        return (ndtri(p * ndtr(self.truncation)) - a) / b

    def sample_errors(self, rng: np.random.Generator, size: int) -> NDArray[np.float64]:
        """역변환 표본추출"""
        return self.error_quantile(rng.random(size))

    def draw(self, rng: np.random.Generator, n: int) -> SimulatedData:
        """
        크기 n 모의 표본 생성

        난수 소비 순서는 X, ε, 치유 지시자, 혼합 성분, 두 중도절단 성분 순으로 고정입니다.
        """
        x = rng.uniform(-1.0, 1.0, n)
        errors = self.sample_errors(rng, n)
        cured = rng.random(n) < self.pi(x)
        first_component = rng.random(n) < 0.5
        normal_censor = rng.normal(self.censor_mean, math.sqrt(self.censor_variance), n)
        shifted_censor = self.m(x) + self.censor_shift + rng.standard_normal(n)

        censoring = np.where(first_component, normal_censor, shifted_censor)
        uncured = self.m(x) + self.s(x) * errors
        response = np.where(cured, np.inf, uncured)

        return SimulatedData(
            x=x,
            z=np.minimum(response, censoring),
            delta=(response <= censoring).astype(np.int64),
            cured=cured,
            uncured_response=uncured,
            censoring=censoring,
        )


def true_error_distribution(model: TrueModel | None = None) -> Tuple[ErrorCdf, ErrorSampler]:
    """참 오차 분포의 (CDF, 표본추출기)"""
    model = model or TrueModel()
    return model.error_cdf, model.sample_errors
