"""
모의실험 참 모형 테스트
"""

import numpy as np
import pytest

from src.domain.simulation.value_objects.true_model import TrueModel, true_error_distribution
from src.shared.random_streams import StreamPurpose, stream_for

MIDPOINTS = 1_000_000


@pytest.fixture(scope="module")
def true_model() -> TrueModel:
    return TrueModel()


@pytest.fixture(scope="module")
def midpoint_grid() -> np.ndarray:
    return (np.arange(MIDPOINTS) + 0.5) / MIDPOINTS


class TestErrorStandardization:
    """오차 분포 표준화 테스트 스위트"""

    def test_weighted_location_is_zero(self, true_model, midpoint_grid):
        """∫ξ_F(p)J(p)dp = 0"""
        # When
        xi = true_model.error_quantile(midpoint_grid)
        weight = true_model.score.density(midpoint_grid)

        # Then
        assert float(np.mean(xi * weight)) == pytest.approx(0.0, abs=1e-6)

    def test_weighted_second_moment_is_one(self, true_model, midpoint_grid):
        """∫ξ_F²(p)J(p)dp = 1"""
        # When
        xi = true_model.error_quantile(midpoint_grid)
        weight = true_model.score.density(midpoint_grid)

        # Then
        assert float(np.mean(xi * xi * weight)) == pytest.approx(1.0, abs=1e-6)

    def test_cdf_reaches_one_at_upper_support(self, true_model):
        """F(τ_F) = 1, 그 직전은 1 미만"""
        assert float(true_model.error_cdf(true_model.tau_f)) == 1.0
        assert float(true_model.error_cdf(true_model.tau_f - 1e-3)) < 1.0
        assert float(true_model.error_cdf(-10.0)) == pytest.approx(0.0, abs=1e-12)

    def test_quantile_inverts_cdf(self, true_model):
        """ξ_F(F(t)) = t"""
        t = np.linspace(-2.5, 1.5, 9)
        assert true_model.error_quantile(true_model.error_cdf(t)) == pytest.approx(t, abs=1e-8)

    def test_sampler_mean_matches_quantile_integral(self, true_model, midpoint_grid):
        """표본 평균이 ∫ξ_F(p)dp 와 3σ/√N 이내"""
        # Given
        cdf, sampler = true_error_distribution(true_model)
        expected = float(np.mean(true_model.error_quantile(midpoint_grid)))

        # When
        draws = sampler(stream_for(11, 0, StreamPurpose.DATASET), 1_000_000)

        # Then
        tolerance = 3.0 * float(np.std(draws)) / 1000.0
        assert float(np.mean(draws)) == pytest.approx(expected, abs=tolerance)
        assert np.all(draws <= true_model.tau_f + 1e-12)
        assert float(cdf(0.0)) == float(true_model.error_cdf(0.0))


class TestRegressionFunctions:
    """참 회귀 함수 테스트 스위트"""

    def test_scale_is_bounded_below(self, true_model):
        """s(x) ≥ 1/2"""
        x = np.linspace(-1.0, 1.0, 201)
        assert true_model.s(x).min() >= 0.5

    def test_cure_probability_at_center(self, true_model):
        """π(7/4) = 1/2"""
        assert float(true_model.pi(1.75)) == pytest.approx(0.5)

    def test_location_values(self, true_model):
        """m(0) = 2.25, m(±1) = 1 ± 2 − 1.25"""
        assert float(true_model.m(0.0)) == pytest.approx(2.25)
        assert float(true_model.m(1.0)) == pytest.approx(1.75)
        assert float(true_model.m(-1.0)) == pytest.approx(-2.25)


class TestDraw:
    """모의 표본 생성 테스트 스위트"""

    def test_draw_is_deterministic_per_stream(self, true_model):
        """같은 스트림은 같은 자료"""
        # When
        first = true_model.draw(stream_for(3, 0, StreamPurpose.DATASET), 50)
        second = true_model.draw(stream_for(3, 0, StreamPurpose.DATASET), 50)

        # Then
        assert np.array_equal(first.z, second.z)
        assert np.array_equal(first.delta, second.delta)

    def test_cured_subjects_are_censored(self, true_model):
        """치유된 개체는 항상 중도절단"""
        data = true_model.draw(stream_for(3, 1, StreamPurpose.DATASET), 2000)
        assert np.all(data.delta[data.cured] == 0)
        assert np.all(np.isfinite(data.z))

    def test_marginal_fractions(self, true_model):
        """치유 약 16%, 비치유 중 중도절단 약 18%, 전체 중도절단 약 31%"""
        # When
        data = true_model.draw(stream_for(2024, 0, StreamPurpose.DATASET), 1_000_000)

        # Then
        uncured = ~data.cured
        censored_uncured = float(np.mean(data.delta[uncured] == 0))
        assert float(np.mean(data.cured)) == pytest.approx(0.16, abs=0.005)
        assert censored_uncured == pytest.approx(0.18, abs=0.02)
        assert float(np.mean(data.delta == 0)) == pytest.approx(0.31, abs=0.02)
