"""
부트스트랩 신뢰대 커버리지 연구 모듈
"""

import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from typing import List

import numpy as np
from rfs.core.result import Failure, Result, Success

from ....domain.cure_model.services.cure_estimators import fit_cure_model
from ....domain.errors import ErrorKind, EstimationError, estimation_error
from ....domain.simulation.value_objects.true_model import TrueModel
from ....domain.smoothing.services.kernel_smoothing import default_bandwidth, sample_sigma
from ....domain.smoothing.value_objects.kernel_spec import BandwidthRule, KernelFamily, KernelSpec
from ....shared.logging import get_logger
from ....shared.random_streams import StreamPurpose, derive_seed
from ...simulation.services.dataset_generation import draw_dataset
from ..dto.bootstrap_dto import BootstrapConfig, ConfidenceBand, CoverageConfig, CoverageReport
from .bootstrap_service import BootstrapService

logger = get_logger(__name__)


class CoverageStudy:
    """
    참 모형 자료로 신뢰대의 경험적 커버리지 측정

    자료 i 는 (seed, i, COVERAGE) 스트림에서, 그 자료의 부트스트랩 시드는
    (seed, i) 에서 유도합니다. 자료 단위로 병렬 처리하고 집계는 자료 번호 순으로 하므로
    결과가 워커 수와 무관합니다.
    """

    def __init__(self, max_workers: int = 1, model: TrueModel | None = None):
        """
        Args:
            max_workers: 자료 병렬 처리 워커 수 (자료 안의 부트스트랩은 직렬)
            model: 자료 생성 참 모형 (기본값: TrueModel())
        """
        self._max_workers = max(1, int(max_workers))
        self._bootstrap = BootstrapService(max_workers=1)
        self._model = model or TrueModel()

    def _dataset_band(
        self, config: CoverageConfig, rule: BandwidthRule, index: int
    ) -> Result[ConfidenceBand, EstimationError]:
        """자료 index 를 생성하고 적합한 뒤 평가 지점의 신뢰대 계산"""
        dataset = draw_dataset(config.n, config.seed, index, self._model, StreamPurpose.COVERAGE)
        if dataset.is_failure():
            return Failure(dataset.unwrap_error())
        sample = dataset.unwrap().sample
        spec = KernelSpec(
            family=KernelFamily.BIWEIGHT,
            bandwidth=default_bandwidth(rule, sample.n, sample_sigma(sample.x)),
        )
        model = fit_cure_model(sample, spec, self._model.score)
        if model.is_failure():
            return Failure(model.unwrap_error())
        return self._bootstrap.band_at(
            model.unwrap(),
            BootstrapConfig(
                replicates=config.replicates,
                level=config.level,
                seed=derive_seed(config.seed, index, StreamPurpose.COVERAGE),
            ),
            config.points,
            tie_seed=config.seed,
        )

    def run(self, config: CoverageConfig) -> Result[CoverageReport, EstimationError]:
        """
        커버리지 연구 실행

        Returns:
            Result: 신뢰대를 하나도 만들지 못하면 ALL_RUNS_FAILED
        """
        start_time = time.time()
        logger.log_operation(
            "coverage_study", n=config.n, datasets=config.datasets, replicates=config.replicates
        )

        points = np.asarray(config.points, dtype=np.float64)
        truth = self._model.error_cdf(points)
        rule = BandwidthRule(c=config.c, gamma=config.gamma)

        hits = np.zeros(len(points))
        widths = np.zeros(len(points))
        used = 0
        failures: Counter = Counter()

        with ThreadPoolExecutor(max_workers=self._max_workers) as executor:
            bands = list(
                executor.map(
                    lambda index: self._dataset_band(config, rule, index), range(config.datasets)
                )
            )

        for band in bands:
            if band.is_failure():
                failures[band.unwrap_error().kind.value] += 1
                continue
            lower = np.asarray(band.unwrap().lower)
            upper = np.asarray(band.unwrap().upper)
            hits += (lower <= truth) & (truth <= upper)
            widths += upper - lower
            used += 1

        if used == 0:
            error = estimation_error(
                ErrorKind.ALL_RUNS_FAILED,
                f"coverage_study: 신뢰대를 계산한 자료가 없습니다 ({dict(failures)})",
                failures=dict(failures),
            )
            logger.log_error_with_context(error, "coverage_study")
            return Failure(error)

        coverage: List[float] = (hits / used).tolist()
        logger.log_performance(
            "coverage_study",
            (time.time() - start_time) * 1000,
            datasets=used,
            coverage=coverage,
        )
        return Success(
            CoverageReport(
                points=list(config.points),
                coverage=coverage,
                mean_width=(widths / used).tolist(),
                datasets=used,
                failures=dict(failures),
                config=config,
            )
        )
