"""
관측치/표본 Value Object

우측 중도절단 (x, z, δ) 관측치와, z 오름차순 정렬 정보를 함께 가진 표본입니다.
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, Tuple

import numpy as np
from numpy.typing import ArrayLike, NDArray
from rfs.core.result import Failure, Result, Success

from ....shared.logging import get_logger
from ....shared.random_streams import StreamPurpose, stream_for
from ...errors import ErrorKind, EstimationError, estimation_error

logger = get_logger(__name__)

# 동점 jitter 크기 (range(z) 대비)
JITTER_RELATIVE = 1e-9


class TiePolicy(str, Enum):
    """
    동점 응답 처리 방식

    Values:
        JITTER: 결정적(시드 고정) jitter 로 동점 해소
        STRICT: 동점이면 TIED_RESPONSES 실패
    """

    JITTER = "jitter"
    STRICT = "strict"


@dataclass(frozen=True)
class Observation:
    """
    단일 관측치

    Attributes:
        x: 공변량
        z: 관측 시간 min(Y, C)
        delta: 사건 지시자 (1 = 비중도절단)
    """

    x: float
    z: float
    delta: int


@dataclass(frozen=True, eq=False)
class SurvivalSample:
    """
    생존 표본

    생성 후 불변이며 z 는 서로 다릅니다 (create 가 동점을 해소).

    Attributes:
        x: 공변량 배열
        z: 관측 시간 배열
        delta: 사건 지시자 배열 (0/1)
        sorted_index: z 오름차순 순열
        jittered: 동점 jitter 적용 여부
    """

    x: NDArray[np.float64]
    z: NDArray[np.float64]
    delta: NDArray[np.int64]
    sorted_index: NDArray[np.int64] = field(repr=False)
    jittered: bool = False

    @classmethod
    def create(
        cls,
        x: ArrayLike,
        z: ArrayLike,
        delta: ArrayLike,
        tie_policy: TiePolicy = TiePolicy.JITTER,
        tie_seed: int = 0,
    ) -> Result["SurvivalSample", EstimationError]:
        """
        표본 생성 팩토리 메소드

        검증 규칙:
        - 길이가 같고 비어있지 않음
        - x, z 유한, δ ∈ {0, 1}
        - 비중도절단 관측치가 최소 하나 (τ̂₀ 필요)
        - 동점 z 는 정책에 따라 jitter 또는 실패

        Args:
            x: 공변량
            z: 관측 시간
            delta: 사건 지시자
            tie_policy: 동점 처리 방식
            tie_seed: jitter 시드

        Returns:
            Result[SurvivalSample, EstimationError]
        """
        xs = np.asarray(x, dtype=np.float64).ravel()
        zs = np.asarray(z, dtype=np.float64).ravel()
        ds_raw = np.asarray(delta).ravel()

        if not (len(xs) == len(zs) == len(ds_raw)):
            return Failure(
                estimation_error(
                    ErrorKind.INVALID_ARGUMENT,
                    f"x, z, delta 길이가 다릅니다: {len(xs)}, {len(zs)}, {len(ds_raw)}",
                )
            )
        if len(xs) == 0:
            return Failure(estimation_error(ErrorKind.INVALID_ARGUMENT, "표본은 비어있을 수 없습니다"))
        if not (np.all(np.isfinite(xs)) and np.all(np.isfinite(zs))):
            return Failure(estimation_error(ErrorKind.INVALID_ARGUMENT, "x, z 는 유한해야 합니다"))
        if not np.all((ds_raw == 0) | (ds_raw == 1)):
            return Failure(estimation_error(ErrorKind.INVALID_ARGUMENT, "delta 는 0 또는 1 이어야 합니다"))

        ds = ds_raw.astype(np.int64)
        if not np.any(ds == 1):
            return Failure(
                estimation_error(ErrorKind.NO_EVENTS, "비중도절단 관측치가 없어 τ̂₀ 를 정할 수 없습니다")
            )

        jittered = False
        if len(np.unique(zs)) < len(zs):
            if tie_policy is TiePolicy.STRICT:
                return Failure(
                    estimation_error(
                        ErrorKind.TIED_RESPONSES,
                        f"동점 응답 {len(zs) - len(np.unique(zs))}개 (strict 모드)",
                    )
                )
            separated = break_ties(zs, ds, tie_seed)
            if separated.is_failure():
                return Failure(separated.unwrap_error())
            zs = separated.unwrap()
            jittered = True
            logger.info("동점 응답에 jitter 적용", n=len(zs), tie_seed=tie_seed)

        order = np.argsort(zs, kind="stable")
        return Success(cls(x=xs, z=zs, delta=ds, sorted_index=order, jittered=jittered))

    @classmethod
    def from_observations(
        cls,
        observations: Iterable[Observation],
        tie_policy: TiePolicy = TiePolicy.JITTER,
        tie_seed: int = 0,
    ) -> Result["SurvivalSample", EstimationError]:
        """Observation 목록으로부터 생성"""
        obs = list(observations)
        return cls.create(
            [o.x for o in obs],
            [o.z for o in obs],
            [o.delta for o in obs],
            tie_policy=tie_policy,
            tie_seed=tie_seed,
        )

    @property
    def n(self) -> int:
        """표본 크기"""
        return int(len(self.z))

    @property
    def observations(self) -> Tuple[Observation, ...]:
        """Observation 튜플 (원래 순서)"""
        return tuple(
            Observation(x=float(xi), z=float(zi), delta=int(di))
            for xi, zi, di in zip(self.x, self.z, self.delta)
        )

    @cached_property
    def z_sorted(self) -> NDArray[np.float64]:
        """오름차순 z₍ⱼ₎"""
        return self.z[self.sorted_index]

    @cached_property
    def delta_sorted(self) -> NDArray[np.int64]:
        """z₍ⱼ₎ 순서의 δ₍ⱼ₎"""
        return self.delta[self.sorted_index]

    @cached_property
    def x_sorted(self) -> NDArray[np.float64]:
        """z₍ⱼ₎ 순서의 공변량"""
        return self.x[self.sorted_index]

    @property
    def censored_fraction(self) -> float:
        """중도절단 비율"""
        return float(np.mean(self.delta == 0))

    def transform_z(
        self, location: float, scale: float
    ) -> Result["SurvivalSample", EstimationError]:
        """z ↦ location + scale·z 변환 표본 (scale > 0)"""
        if not scale > 0:
            return Failure(estimation_error(ErrorKind.INVALID_ARGUMENT, "scale 은 양수여야 합니다"))
        return SurvivalSample.create(self.x, location + scale * self.z, self.delta)


def break_ties(
    z: NDArray[np.float64], delta: NDArray[np.int64], seed: int
) -> Result[NDArray[np.float64], EstimationError]:
    """
    동점 z 를 결정적으로 분리

    동점 그룹 안에서는 사건(δ=1)을 중도절단보다 앞에 두고, 같은 δ 끼리는
    시드 고정 순열로 순서를 정한 뒤 k·ε 만큼 더합니다.
    ε 은 서로 다른 값들 사이의 최소 간격의 절반보다 작게 잡아 순서통계량을 보존합니다.

    Args:
        z: 관측 시간
        delta: 사건 지시자
        seed: jitter 시드

    Returns:
        Result: 동점이 없는 새 z 배열, 부동소수점 반올림으로 jitter 가 사라지면 TIED_RESPONSES
    """
    rng = stream_for(seed, 0, StreamPurpose.TIES)
    z = np.array(z, dtype=np.float64)
    distinct = np.unique(z)
    spread = float(distinct[-1] - distinct[0])
    magnitude = JITTER_RELATIVE * (spread if spread > 0 else max(float(np.max(np.abs(z))), 1.0))
    if len(distinct) > 1:
        magnitude = min(magnitude, float(np.min(np.diff(distinct))) / 2.0)

    priority = rng.permutation(len(z))
    for value in distinct:
        members = np.flatnonzero(z == value)
        if len(members) < 2:
            continue
        # 사건 먼저, 그다음 시드 순열
        ordered = members[np.lexsort((priority[members], 1 - delta[members]))]
        step = magnitude / len(members)
        for k, idx in enumerate(ordered):
            z[idx] = value + k * step

    remaining = len(z) - len(np.unique(z))
    if remaining:
        return Failure(
            estimation_error(
                ErrorKind.TIED_RESPONSES,
                f"jitter 후에도 동점 응답 {remaining}개가 남았습니다 (값 크기에 비해 간격이 너무 작음)",
                remaining=remaining,
            )
        )
    return Success(z)
