"""
부트스트랩 신뢰대 서비스 테스트
"""

import threading

import numpy as np
import pytest
from pydantic import ValidationError
from rfs.core.result import Failure, Success

from src.application.bootstrap.dto.bootstrap_dto import (
    BAND_TOLERANCE,
    BootstrapConfig,
    ConfidenceBand,
    CoverageConfig,
)
from src.application.bootstrap.services import bootstrap_service
from src.application.bootstrap.services.bootstrap_service import (
    BootstrapService,
    ResamplingPlan,
    bootstrap_F_band,
    draw_replicate,
)
from src.application.bootstrap.services.coverage_study import CoverageStudy
from src.domain.cure_model.services.cure_estimators import fit_cure_model
from src.domain.errors import ErrorKind, estimation_error
from src.domain.smoothing.services.kernel_smoothing import default_bandwidth, sample_sigma
from src.domain.smoothing.value_objects.kernel_spec import BandwidthRule, KernelSpec
from src.domain.survival.services.beran import beran_censor
from src.shared.random_streams import StreamPurpose, stream_for


@pytest.fixture(scope="module")
def fitted_model(simulated_sample):
    sigma = sample_sigma(simulated_sample.x)
    bandwidth = default_bandwidth(BandwidthRule(), simulated_sample.n, sigma)
    return fit_cure_model(simulated_sample, KernelSpec(bandwidth=bandwidth)).unwrap()


class TestBootstrapConfig:
    """부트스트랩 설정 테스트 스위트"""

    @pytest.mark.parametrize("kwargs", [{"level": 1.5}, {"level": 0.0}, {"replicates": 0}])
    def test_invalid_config_raises_validation_error(self, kwargs):
        """level ∉ (0, 1) 또는 replicates < 1 은 거부"""
        with pytest.raises(ValidationError):
            BootstrapConfig(**kwargs)

    def test_quantile_levels(self):
        """95% 수준이면 2.5%, 97.5% 분위수"""
        lower, upper = BootstrapConfig(level=0.95).quantile_levels
        assert lower == pytest.approx(0.025)
        assert upper == pytest.approx(0.975)

    def test_band_with_crossed_limits_is_rejected(self):
        """lower > upper 인 신뢰대는 생성 불가"""
        with pytest.raises(ValidationError):
            ConfidenceBand(
                grid=[0.0],
                lower=[0.6],
                point=[0.5],
                upper=[0.4],
                level=0.9,
                replicates=1,
                attempts=1,
            )

    def test_coverage_config_requires_points(self):
        """커버리지 지점이 비면 거부"""
        with pytest.raises(ValidationError):
            CoverageConfig(points=[])


class TestResamplingPlan:
    """재표본 계획 테스트 스위트"""

    def test_plan_uses_standardizable_observations(self, fitted_model):
        """재추출 공변량은 m̂, ŝ 가 정의된 관측치"""
        # When
        plan = ResamplingPlan.from_model(fitted_model).unwrap()

        # Then
        assert len(plan.covariates) == len(plan.locations) == len(plan.scales)
        assert np.all(plan.scales > 0.0)
        assert np.all((plan.cure >= 0.0) & (plan.cure <= 1.0))
        assert np.all(np.diff(plan.draw_values) >= 0.0)

    def test_censoring_draws_follow_beran_censoring_distribution(self, fitted_model):
        """역변환 추출의 경험분포가 중도절단 분포 수준과 일치"""
        # Given
        plan = ResamplingPlan.from_model(fitted_model).unwrap()
        pick = next(i for i, times in enumerate(plan.censor_times) if len(times) >= 2)
        uniforms = (np.arange(10_000) + 0.5) / 10_000

        # When
        draws = plan.draw_censoring(np.full(len(uniforms), pick), uniforms)

        # Then
        times = plan.censor_times[pick]
        levels = plan.censor_levels[pick]
        for time, level in zip(times[:-1], levels[:-1]):
            assert float(np.mean(draws <= time)) == pytest.approx(level, abs=1e-4)
        assert set(np.unique(draws)) <= set(times)

    def test_random_censoring_draws_match_beran_censor_below_last_time(self, fitted_model):
        """난수 추출의 경험 CDF 가 마지막 중도절단 시간 전까지 beran_censor 와 일치"""
        # Given
        plan = ResamplingPlan.from_model(fitted_model).unwrap()
        pick = max(range(len(plan.censor_times)), key=lambda i: len(plan.censor_times[i]))
        times = plan.censor_times[pick]
        points = np.concatenate([times[:-1], (times[:-1] + times[1:]) / 2.0])
        rng = stream_for(17, 0, StreamPurpose.BOOTSTRAP)

        # When
        draws = plan.draw_censoring(np.full(20_000, pick), rng.random(20_000))

        # Then
        expected = np.atleast_1d(
            beran_censor(
                fitted_model.sample, fitted_model.spec, points, float(plan.covariates[pick])
            ).unwrap()
        )
        empirical = np.array([np.mean(draws <= t) for t in points])
        assert len(times) >= 2
        assert empirical == pytest.approx(expected, abs=0.015)
        assert np.all(draws <= times[-1])

    def test_replicate_draw_is_deterministic(self, fitted_model):
        """같은 스트림은 같은 복제 자료"""
        # Given
        plan = ResamplingPlan.from_model(fitted_model).unwrap()

        # When
        first = draw_replicate(plan, stream_for(4, 0, StreamPurpose.BOOTSTRAP)).unwrap()
        second = draw_replicate(plan, stream_for(4, 0, StreamPurpose.BOOTSTRAP)).unwrap()

        # Then
        assert first.n == fitted_model.n
        assert np.array_equal(first.z, second.z)
        assert np.array_equal(first.delta, second.delta)
        assert np.all(np.isfinite(first.z))


class TestBootstrapService:
    """부트스트랩 신뢰대 테스트 스위트"""

    def test_single_replicate_band_collapses(self, fitted_model):
        """replicates=1 이면 lower = upper"""
        # When
        band = BootstrapService().bootstrap_F_band(
            fitted_model, BootstrapConfig(replicates=1, seed=8), -2.0, 2.0, 9
        ).unwrap()

        # Then
        assert band.lower == band.upper
        assert band.grid == pytest.approx(np.linspace(-2.0, 2.0, 9).tolist())
        assert band.attempts >= 1

    def test_band_is_ordered_and_bounded(self, fitted_model):
        """0 ≤ lower ≤ upper ≤ 1"""
        # When
        band = bootstrap_F_band(
            fitted_model, BootstrapConfig(replicates=10, seed=1), steps=33
        ).unwrap()

        # Then
        lower = np.asarray(band.lower)
        upper = np.asarray(band.upper)
        assert np.all(lower <= upper)
        assert lower.min() >= 0.0
        assert upper.max() <= 1.0
        assert len(band.rows()) == 33

    def test_band_is_independent_of_worker_count(self, fitted_model):
        """같은 seed 면 워커 수와 무관하게 같은 신뢰대"""
        # Given
        config = BootstrapConfig(replicates=6, seed=21)

        # When
        serial = BootstrapService(1).bootstrap_F_band(fitted_model, config, -1.0, 1.0, 5)
        parallel = BootstrapService(3).bootstrap_F_band(fitted_model, config, -1.0, 1.0, 5)

        # Then
        assert serial.unwrap().model_dump() == parallel.unwrap().model_dump()

    def test_point_outside_counts_grid_points_beyond_band(self, fitted_model):
        """point_outside 는 점추정이 [lower, upper] 밖인 격자점 수"""
        # When
        band = BootstrapService().bootstrap_F_band(
            fitted_model, BootstrapConfig(replicates=1, seed=8), -2.0, 2.0, 17
        ).unwrap()

        # Then
        point = np.asarray(band.point)
        outside = (point < np.asarray(band.lower) - BAND_TOLERANCE) | (
            point > np.asarray(band.upper) + BAND_TOLERANCE
        )
        assert band.point_outside == int(np.count_nonzero(outside))

    def test_band_at_points(self, fitted_model):
        """임의 지점에서의 신뢰대"""
        band = BootstrapService().band_at(
            fitted_model, BootstrapConfig(replicates=3, seed=2), [0.0, 1.0]
        ).unwrap()
        assert band.grid == [0.0, 1.0]
        assert len(band.point) == 2

    def test_band_at_without_points_returns_failure(self, fitted_model):
        """지점이 없으면 INVALID_ARGUMENT"""
        result = BootstrapService().band_at(fitted_model, BootstrapConfig(replicates=1), [])
        assert result.unwrap_error().kind is ErrorKind.INVALID_ARGUMENT

    def test_inverted_grid_returns_failure(self, fitted_model):
        """t_lo ≥ t_hi 는 INVALID_ARGUMENT"""
        result = BootstrapService().bootstrap_F_band(
            fitted_model, BootstrapConfig(replicates=1), 1.0, -1.0, 5
        )
        assert result.unwrap_error().kind is ErrorKind.INVALID_ARGUMENT

    def test_unusable_model_returns_failure(self, simulated_sample):
        """F̂ 를 계산할 수 없는 모형은 NO_VALID_COVARIATES"""
        model = fit_cure_model(simulated_sample, KernelSpec(bandwidth=1e-7)).unwrap()
        result = BootstrapService().bootstrap_F_band(model, BootstrapConfig(replicates=1))
        assert result.unwrap_error().kind is ErrorKind.NO_VALID_COVARIATES


class TestCoverageStudy:
    """커버리지 연구 테스트 스위트"""

    def test_small_study_reports_fraction_per_point(self):
        """지점별 커버리지는 0 과 1 사이의 자료 비율"""
        # Given
        config = CoverageConfig(n=80, datasets=2, replicates=3, seed=5, points=[-1.0, 0.0])

        # When
        report = CoverageStudy().run(config).unwrap()

        # Then
        assert report.datasets + sum(report.failures.values()) == 2
        assert len(report.coverage) == 2
        for value in report.coverage:
            assert value * report.datasets == pytest.approx(round(value * report.datasets))
            assert 0.0 <= value <= 1.0
        assert all(width >= 0.0 for width in report.mean_width)

    def test_study_is_reproducible(self):
        """같은 설정은 같은 결과"""
        config = CoverageConfig(n=80, datasets=2, replicates=2, seed=9, points=[0.0])
        first = CoverageStudy().run(config).unwrap()
        second = CoverageStudy(max_workers=2).run(config).unwrap()
        assert first.model_dump() == second.model_dump()

    def test_datasets_run_concurrently_and_reduce_in_order(self, monkeypatch):
        """자료 단위 병렬 실행, 집계는 자료 번호 순"""
        # Given: 자료 번호마다 다른 신뢰대를 돌려주는 가짜 계산
        threads = set()

        def fake_band(self, config, rule, index):
            threads.add(threading.get_ident())
            barrier.wait(timeout=5)
            width = 0.1 * (index + 1)
            return Success(
                ConfidenceBand(
                    grid=[0.0],
                    lower=[0.5 - width],
                    point=[0.5],
                    upper=[0.5 + width],
                    level=0.95,
                    replicates=1,
                    attempts=1,
                )
            )

        barrier = threading.Barrier(3)
        monkeypatch.setattr(CoverageStudy, "_dataset_band", fake_band)
        config = CoverageConfig(n=80, datasets=3, replicates=1, seed=1, points=[0.0])

        # When
        report = CoverageStudy(max_workers=3).run(config).unwrap()

        # Then
        assert len(threads) == 3
        assert report.datasets == 3
        assert report.mean_width == pytest.approx([2 * (0.1 + 0.2 + 0.3) / 3])


class TestReplicateAttemptBudget:
    """복제 재추출 예산 테스트 스위트"""

    @pytest.fixture
    def scripted_attempts(self, monkeypatch):
        """(복제, 시도) 별 성공 여부를 정하는 가짜 스트림과 재적합"""
        calls = []
        failing = {}

        def fake_stream(seed, index, purpose, attempt=0):
            return index, attempt

        def fake_curve(plan, rng, grid):
            replicate, attempt = rng
            calls.append((replicate, attempt))
            if attempt < failing.get(replicate, 0):
                return Failure(estimation_error(ErrorKind.DEGENERATE_SCALE, "scripted"))
            return Success(np.full(len(grid), 0.1 * (replicate + 1)))

        monkeypatch.setattr(bootstrap_service, "stream_for", fake_stream)
        monkeypatch.setattr(bootstrap_service, "_replicate_curve", fake_curve)
        return calls, failing

    def test_replicate_needing_extra_draws_succeeds_within_total_budget(
        self, fitted_model, scripted_attempts
    ):
        """한 복제가 4번 실패해도 전체 예산 안이면 성공"""
        # Given
        calls, failing = scripted_attempts
        failing[2] = 4
        config = BootstrapConfig(replicates=5, seed=3)

        # When
        band = BootstrapService(2).bootstrap_F_band(fitted_model, config, -1.0, 1.0, 3)

        # Then
        assert band.is_success()
        assert band.unwrap().attempts == 5 + 4
        assert (2, 4) in calls
        assert band.unwrap().warning is not None

    def test_exhausted_budget_returns_bootstrap_unstable(self, fitted_model, scripted_attempts):
        """전체 시도가 3 × replicates 를 넘으면 BOOTSTRAP_UNSTABLE"""
        # Given
        calls, failing = scripted_attempts
        failing[0] = 100
        config = BootstrapConfig(replicates=4, seed=3)

        # When
        result = BootstrapService().bootstrap_F_band(fitted_model, config, -1.0, 1.0, 3)

        # Then
        assert result.unwrap_error().kind is ErrorKind.BOOTSTRAP_UNSTABLE
        assert len(calls) <= 3 * 4
        assert [attempt for replicate, attempt in calls if replicate == 0] == list(range(9))

    def test_retry_order_is_independent_of_worker_count(self, fitted_model, scripted_attempts):
        """재추출 순서와 결과가 워커 수와 무관"""
        # Given
        calls, failing = scripted_attempts
        failing.update({1: 2, 3: 1})
        config = BootstrapConfig(replicates=4, seed=3)

        # When
        serial = BootstrapService(1).bootstrap_F_band(fitted_model, config, -1.0, 1.0, 3)
        serial_calls = sorted(calls)
        calls.clear()
        parallel = BootstrapService(4).bootstrap_F_band(fitted_model, config, -1.0, 1.0, 3)

        # Then
        assert serial.unwrap().model_dump() == parallel.unwrap().model_dump()
        assert serial_calls == sorted(calls)
