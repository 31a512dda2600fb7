"""
커널 평활 서비스

커널 함수, Nadaraya–Watson 가중치, 과소평활 경험 대역폭을 제공합니다.
모든 함수는 입력에 대한 순수 함수입니다.
"""

import math

import numpy as np
from numpy.typing import ArrayLike, NDArray
from rfs.core.result import Failure, Result, Success

from ....shared.logging import get_logger
from ...errors import ErrorKind, EstimationError, estimation_error
from ..value_objects.kernel_spec import BandwidthRule, KernelFamily, KernelSpec

logger = get_logger(__name__)

# 분모가 이보다 작으면 빈 창과 구별할 수 없음
WINDOW_UNDERFLOW = 1e-300


def kernel_values(family: KernelFamily, u: ArrayLike) -> NDArray[np.float64]:
    """
    K(u) 벡터 평가

    u·u 로만 계산하므로 K(u) 와 K(−u) 는 비트 단위로 같습니다.

    Args:
        family: 커널 종류
        u: 정규화 거리 (x0 − xⱼ)/a

    Returns:
        K(u) 배열, |u| ≥ 1 에서 0
    """
    u = np.asarray(u, dtype=np.float64)
    u2 = u * u
    inside = u2 < 1.0
    one_minus = np.where(inside, 1.0 - u2, 0.0)

    if family is KernelFamily.BIWEIGHT:
        return (15.0 / 16.0) * one_minus * one_minus
    if family is KernelFamily.EPANECHNIKOV:
        return 0.75 * one_minus
    raise ValueError(f"Unknown kernel: {family}")


def kernel_eval(spec: KernelSpec, u: float) -> float:
    """
    단일 점에서 K(u)

    Args:
        spec: 커널 설정 (대역폭은 사용하지 않음)
        u: 정규화 거리

    Returns:
        K(u) ≥ 0
    """
    return float(kernel_values(spec.family, np.float64(u)))


def raw_kernel_weights(x0: float, xs: ArrayLike, spec: KernelSpec) -> NDArray[np.float64]:
    """정규화 전 커널 값 K((x0 − xⱼ)/a)"""
    xs = np.asarray(xs, dtype=np.float64)
    return kernel_values(spec.family, (x0 - xs) / spec.bandwidth)


def nw_weights(
    x0: float, xs: ArrayLike, spec: KernelSpec
) -> Result[NDArray[np.float64], EstimationError]:
    """
    Nadaraya–Watson 가중치 Wⱼ(x0) = K((x0−xⱼ)/a) / Σₖ K((x0−xₖ)/a)

    Args:
        x0: 평가 공변량
        xs: 표본 공변량
        spec: 커널 설정

    Returns:
        Result: 성공 시 합이 1인 가중치 배열, 창이 비면 EMPTY_WINDOW
    """
    return normalize_kernel_weights(raw_kernel_weights(x0, xs, spec), x0, spec)


def normalize_kernel_weights(
    raw: NDArray[np.float64], x0: float, spec: KernelSpec
) -> Result[NDArray[np.float64], EstimationError]:
    """커널 값을 합이 1 이 되도록 정규화, 분모가 사실상 0 이면 EMPTY_WINDOW"""
    total = float(raw.sum())

    if not total > WINDOW_UNDERFLOW:
        return Failure(
            estimation_error(
                ErrorKind.EMPTY_WINDOW,
                f"nw_weights: x0={x0} 의 대역폭 {spec.bandwidth} 창 안에 관측치가 없습니다",
                x0=float(x0),
                bandwidth=spec.bandwidth,
            )
        )

    return Success(raw / total)


def default_bandwidth(rule: BandwidthRule, n: int, sigma_x: float) -> float:
    """
    과소평활 경험 대역폭 C·σ_X·n^(−1/4−γ)·(log n)^(1/4+γ)

    대역폭은 자동으로 넓히거나 하한을 두지 않습니다.

    Args:
        rule: 대역폭 규칙 (C, γ)
        n: 표본 크기 (≥ 2)
        sigma_x: 공변량 표본 표준편차 (> 0)

    Returns:
        대역폭 a_n
    """
    if not rule.within_undersmoothing_range:
        logger.warning(
            "대역폭 지수가 과소평활 범위 (0, 1/12) 밖입니다",
            gamma=rule.gamma,
            c=rule.c,
        )

    exponent = 0.25 + rule.gamma
    return rule.c * sigma_x * n ** (-exponent) * math.log(n) ** exponent


def sample_sigma(xs: ArrayLike) -> float:
    """공변량 표본 표준편차 σ̂_X (자유도 n−1)"""
    return float(np.std(np.asarray(xs, dtype=np.float64), ddof=1))
