"""
치유 모형 추정량 테스트
"""

import numpy as np
import pytest

from src.domain.cure_model.services.cure_estimators import (
    estimate_m,
    estimate_pi,
    estimate_s,
    estimate_tau0,
    fit_cure_model,
    quantile_xi,
)
from src.domain.cure_model.value_objects.score_function import ScoreFunction
from src.domain.errors import ErrorKind
from src.domain.smoothing.value_objects.kernel_spec import KernelSpec
from src.domain.survival.services.beran import BeranTable, Continuity
from src.domain.survival.value_objects.observation import SurvivalSample


def riemann_moments(table: BeranTable, score: ScoreFunction, points: int = 1_000_000):
    """ξ̂((1 − π̂)p)·J(p) 의 중점 규칙 적분 (∫ξJ, ∫ξ²J)"""
    times = table.event_times
    levels = table.event_levels
    p = (np.arange(points) + 0.5) / points
    index = np.minimum(np.searchsorted(levels, p * levels[-1], side="left"), len(times) - 1)
    xi = times[index]
    weight = score.density(p)
    return float(np.mean(xi * weight)), float(np.mean(xi * xi * weight))


class TestTau0:
    """τ̂₀ 테스트 스위트"""

    def test_tau0_is_largest_uncensored_time(self, km_sample):
        """τ̂₀ = max{zⱼ : δⱼ = 1}"""
        assert estimate_tau0(km_sample).unwrap() == 4.0


class TestKaplanMeierCase:
    """균등 가중치 표본의 손 계산 값 테스트 스위트"""

    def test_pi_hat_is_one_minus_q_at_tau0(self, km_sample, wide_spec):
        """π̂ = 1 − Q̂(τ̂₀) = 4/15"""
        # Given
        model = fit_cure_model(km_sample, wide_spec, ScoreFunction.uniform()).unwrap()

        # When
        result = estimate_pi(model, 0.0)

        # Then
        assert result.is_success()
        assert result.unwrap() == pytest.approx(4.0 / 15.0)

    def test_left_continuous_pi_excludes_last_jump(self, km_sample, wide_spec):
        """좌연속 π̂ 는 τ̂₀ 의 점프를 빼고 1 − 7/15"""
        model = fit_cure_model(km_sample, wide_spec).unwrap()
        left = estimate_pi(model, 0.0, Continuity.LEFT).unwrap()
        assert left == pytest.approx(8.0 / 15.0)

    def test_location_and_scale_match_hand_computation(self, km_sample, wide_spec):
        """균등 J 에서 m̂ = 31/11, ŝ = √172/11"""
        # Given
        model = fit_cure_model(km_sample, wide_spec, ScoreFunction.uniform()).unwrap()

        # When
        m_hat = estimate_m(model, 0.0)
        s_hat = estimate_s(model, 0.0)

        # Then
        assert m_hat.unwrap() == pytest.approx(31.0 / 11.0, rel=1e-12)
        assert s_hat.unwrap() == pytest.approx(np.sqrt(172.0) / 11.0, rel=1e-12)

    @pytest.mark.parametrize(
        "q, expected", [(0.0, 1.0), (0.1, 1.0), (0.3, 3.0), (0.5, 4.0), (0.7, 4.0)]
    )
    def test_quantile_returns_first_time_reaching_level(self, km_sample, wide_spec, q, expected):
        """ξ̂(q) = inf{y : Q̂(y) ≥ q}"""
        model = fit_cure_model(km_sample, wide_spec).unwrap()
        assert quantile_xi(model, 0.0, q).unwrap() == expected

    def test_quantile_above_cure_mass_returns_failure(self, km_sample, wide_spec):
        """q > Q̂(τ̂₀) 는 QUANTILE_OUT_OF_RANGE"""
        # Given
        model = fit_cure_model(km_sample, wide_spec).unwrap()

        # When
        result = quantile_xi(model, 0.0, 0.8)

        # Then
        assert result.is_failure()
        assert result.unwrap_error().kind is ErrorKind.QUANTILE_OUT_OF_RANGE
        assert "quantile_xi" in result.unwrap_error().message

    def test_negative_quantile_level_returns_failure(self, km_sample, wide_spec):
        """q < 0 은 INVALID_ARGUMENT"""
        model = fit_cure_model(km_sample, wide_spec).unwrap()
        assert quantile_xi(model, 0.0, -0.1).unwrap_error().kind is ErrorKind.INVALID_ARGUMENT

    def test_out_of_sample_covariate_is_computed_on_demand(self, km_sample, wide_spec):
        """표본 밖 x0 도 즉석 계산"""
        # Given
        model = fit_cure_model(km_sample, wide_spec, ScoreFunction.uniform()).unwrap()

        # When
        result = estimate_m(model, 0.5)

        # Then
        assert model.cached(0.5) is None
        assert result.unwrap() == pytest.approx(31.0 / 11.0)


class TestDefaultScoreMoments:
    """기본 점수 함수의 J 가중 적분 테스트 스위트"""

    @pytest.mark.parametrize("x0", [-0.5, 0.0, 0.5])
    def test_location_and_scale_match_riemann_sum(self, spread_sample, x0):
        """m̂, ŝ 가 중점 규칙 적분과 일치"""
        # Given
        spec = KernelSpec(bandwidth=1.5)
        score = ScoreFunction()
        model = fit_cure_model(spread_sample, spec, score).unwrap()
        table = BeranTable.build(spread_sample, spec, x0).unwrap()

        # When
        m_hat = estimate_m(model, x0).unwrap()
        s_hat = estimate_s(model, x0).unwrap()

        # Then
        first, second = riemann_moments(table, score)
        assert m_hat == pytest.approx(first, abs=2e-5)
        assert s_hat == pytest.approx(np.sqrt(second - first * first), abs=2e-5)


class TestEquivariance:
    """위치-척도 동변성 테스트 스위트"""

    @pytest.mark.parametrize("x0", [-0.75, 0.0, 0.25])
    def test_affine_response_transform_moves_location_and_scale(self, spread_sample, x0):
        """z ↦ a + b·z 이면 m̂ ↦ a + b·m̂, ŝ ↦ b·ŝ, π̂ 불변"""
        # Given
        spec = KernelSpec(bandwidth=1.5)
        score = ScoreFunction.uniform()
        shift, stretch = -2.0, 3.0
        original = fit_cure_model(spread_sample, spec, score).unwrap()
        moved = fit_cure_model(spread_sample.transform_z(shift, stretch).unwrap(), spec, score)

        # When
        moved_model = moved.unwrap()

        # Then
        assert estimate_m(moved_model, x0).unwrap() == pytest.approx(
            shift + stretch * estimate_m(original, x0).unwrap(), rel=1e-9
        )
        assert estimate_s(moved_model, x0).unwrap() == pytest.approx(
            stretch * estimate_s(original, x0).unwrap(), rel=1e-9
        )
        assert estimate_pi(moved_model, x0).unwrap() == pytest.approx(
            estimate_pi(original, x0).unwrap(), abs=1e-12
        )


class TestLocalFailures:
    """국소 추정 실패 테스트 스위트"""

    def test_single_local_jump_gives_degenerate_scale(self):
        """점프가 하나뿐이면 ŝ 는 DEGENERATE_SCALE, m̂ 는 정의됨"""
        # Given
        sample = SurvivalSample.create([0.0] * 3, [1.0, 2.0, 3.0], [1, 0, 0]).unwrap()
        model = fit_cure_model(sample, KernelSpec(bandwidth=1.0), ScoreFunction.uniform()).unwrap()

        # When
        m_hat = estimate_m(model, 0.0)
        s_hat = estimate_s(model, 0.0)

        # Then
        assert m_hat.unwrap() == pytest.approx(1.0)
        assert s_hat.is_failure()
        assert s_hat.unwrap_error().kind is ErrorKind.DEGENERATE_SCALE
        assert "estimate_s" in s_hat.unwrap_error().message

    def test_window_without_events_gives_no_local_events(self):
        """창 안에 사건이 없으면 NO_LOCAL_EVENTS, π̂ = 1"""
        # Given
        sample = SurvivalSample.create([0.0, 0.0, 5.0, 5.0], [1.0, 2.0, 3.0, 4.0], [0, 0, 1, 1])
        model = fit_cure_model(sample.unwrap(), KernelSpec(bandwidth=1.0)).unwrap()

        # When
        m_hat = estimate_m(model, 0.0)

        # Then
        assert m_hat.unwrap_error().kind is ErrorKind.NO_LOCAL_EVENTS
        assert estimate_s(model, 0.0).unwrap_error().kind is ErrorKind.NO_LOCAL_EVENTS
        assert estimate_pi(model, 0.0).unwrap() == 1.0
        assert quantile_xi(model, 0.0, 0.0).unwrap_error().kind is ErrorKind.NO_LOCAL_EVENTS

    def test_empty_window_propagates(self, spread_sample):
        """창이 비면 모든 추정기가 EMPTY_WINDOW"""
        model = fit_cure_model(spread_sample, KernelSpec(bandwidth=0.2)).unwrap()
        assert estimate_pi(model, 3.0).unwrap_error().kind is ErrorKind.EMPTY_WINDOW
        assert estimate_m(model, 3.0).unwrap_error().kind is ErrorKind.EMPTY_WINDOW
