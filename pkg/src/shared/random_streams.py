"""
난수 스트림 모듈

(seed, index, purpose) 로 식별되는 Philox 스트림을 만듭니다.
같은 식별자는 실행 순서나 워커 수와 무관하게 항상 같은 난수열을 냅니다.
"""

from enum import IntEnum

import numpy as np


class StreamPurpose(IntEnum):
    """스트림 용도 태그"""

    DATASET = 0
    TIES = 1
    BOOTSTRAP = 2
    COVERAGE = 3


def make_generator(seed: int, *key: int) -> np.random.Generator:
    """
    카운터 기반 Philox Generator 생성

    Args:
        seed: 사용자 시드 (64-bit)
        *key: 스트림 분기 키 (예: run_index, purpose)

    Returns:
        np.random.Generator
    """
    sequence = np.random.SeedSequence(
        entropy=int(seed) & 0xFFFFFFFFFFFFFFFF,
        spawn_key=tuple(int(k) for k in key),
    )
    return np.random.Generator(np.random.Philox(sequence))


def stream_for(
    seed: int, index: int, purpose: StreamPurpose, attempt: int = 0
) -> np.random.Generator:
    """
    용도별 스트림

    Args:
        seed: 사용자 시드
        index: 반복/복제 인덱스
        purpose: 스트림 용도
        attempt: 재시도 번호 (부트스트랩 재추출용)
    """
    return make_generator(seed, index, int(purpose), attempt)


def derive_seed(seed: int, *key: int) -> int:
    """(seed, key) 로부터 독립적인 64-bit 하위 시드"""
    sequence = np.random.SeedSequence(
        entropy=int(seed) & 0xFFFFFFFFFFFFFFFF,
        spawn_key=tuple(int(k) for k in key),
    )
    return int(sequence.generate_state(1, np.uint64)[0])
