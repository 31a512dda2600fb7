"""
모형 적합 서비스 테스트
"""

import numpy as np
import pytest
from pydantic import ValidationError

from src.application.fitting.dto.fit_request_dto import FitRequestDTO
from src.application.fitting.services.bandwidth_comparison_service import (
    BandwidthComparisonService,
)
from src.application.fitting.services.cure_fitting_service import (
    CureFittingService,
    evaluate_curves,
    resolve_kernel_spec,
)
from src.domain.cure_model.services.cure_estimators import fit_cure_model
from src.domain.cure_model.value_objects.score_function import ScoreForm
from src.domain.errors import ErrorKind
from src.domain.smoothing.services.kernel_smoothing import default_bandwidth, sample_sigma
from src.domain.smoothing.value_objects.kernel_spec import BandwidthRule, KernelSpec
from src.domain.survival.value_objects.observation import SurvivalSample
from src.shared.config import EstimationSettings


class TestFitRequestDTO:
    """적합 요청 DTO 테스트 스위트"""

    def test_from_settings_ignores_none_overrides(self):
        """None 인 CLI 값은 설정 기본값을 유지"""
        # Given
        settings = EstimationSettings(bandwidth_c=1.125, grid_steps=64)

        # When
        request = FitRequestDTO.from_settings(settings, c=None, grid_steps=32, kernel=None)

        # Then
        assert request.c == 1.125
        assert request.grid_steps == 32
        assert request.kernel == "biweight"

    def test_kernel_name_is_normalized(self):
        """커널 이름은 소문자로 정규화"""
        assert FitRequestDTO(kernel="EPANECHNIKOV").kernel == "epanechnikov"

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"kernel": "gaussian"},
            {"grid_lo": 1.0, "grid_hi": 0.5},
            {"tie_policy": "random"},
            {"bandwidth": 0.0},
            {"grid_steps": 1},
            {"score_form": "gaussian"},
            {"score_upper": 1.5},
        ],
    )
    def test_invalid_request_raises_validation_error(self, kwargs):
        """잘못된 옵션은 ValidationError"""
        with pytest.raises(ValidationError):
            FitRequestDTO(**kwargs)

    def test_score_options_reach_score_function(self):
        """형태, 상한, 정규화 옵션이 점수 함수에 전달"""
        # Given
        settings = EstimationSettings(score_renormalize=True)

        # When
        request = FitRequestDTO.from_settings(
            settings, score_form="UNIFORM", score_threshold=0.1, score_upper=0.9
        )
        score = request.to_score_function().unwrap()

        # Then
        assert request.score_form == "uniform"
        assert score.form is ScoreForm.UNIFORM
        assert (score.p_l, score.p_u, score.renormalize) == (0.1, 0.9, True)
        assert float(score.mass(1.0)) == pytest.approx(1.0)

    def test_default_score_options_keep_logistic_step(self):
        """기본 점수 함수는 정규화하지 않은 logistic 계단"""
        score = FitRequestDTO().to_score_function().unwrap()
        assert score.form is ScoreForm.LOGISTIC_STEP
        assert score.renormalize is False

    def test_with_rule_clears_explicit_bandwidth(self):
        """규칙 변경 시 명시적 대역폭 해제"""
        request = FitRequestDTO(bandwidth=0.3).with_rule(1.125, 1.0 / 28.0)
        assert request.bandwidth is None
        assert request.c == 1.125


class TestResolveKernelSpec:
    """대역폭 결정 테스트 스위트"""

    def test_rule_bandwidth_uses_sample_sigma(self, simulated_sample):
        """명시적 대역폭이 없으면 a_n 공식"""
        # When
        resolved = resolve_kernel_spec(simulated_sample, FitRequestDTO()).unwrap()

        # Then
        expected = default_bandwidth(BandwidthRule(), 100, sample_sigma(simulated_sample.x))
        assert resolved.spec.bandwidth == expected
        assert resolved.rule_label == "0.75,0.0625"

    def test_explicit_bandwidth_wins(self, simulated_sample):
        """명시적 대역폭은 그대로 사용"""
        resolved = resolve_kernel_spec(simulated_sample, FitRequestDTO(bandwidth=0.4)).unwrap()
        assert resolved.spec.bandwidth == 0.4
        assert resolved.rule_label is None

    def test_constant_covariate_returns_failure(self, km_sample):
        """σ̂_X = 0 이면 규칙 대역폭을 정할 수 없음"""
        result = resolve_kernel_spec(km_sample, FitRequestDTO())
        assert result.unwrap_error().kind is ErrorKind.INVALID_ARGUMENT


class TestCureFittingService:
    """모형 적합 서비스 테스트 스위트"""

    def test_fit_with_default_request_returns_success(self, simulated_sample):
        """기본 옵션 적합 시 요약, 곡선, F̂ 격자를 반환"""
        # Given
        service = CureFittingService()

        # When
        result = service.fit(simulated_sample, FitRequestDTO(curve_steps=21))

        # Then
        assert result.is_success()
        outcome = result.unwrap()
        summary = outcome.response.summary
        assert summary.n == 100
        assert summary.grid_steps == 512
        assert summary.n_included + sum(summary.excluded.values()) == 100
        assert summary.tau0_hat == outcome.model.tau0_hat
        assert len(outcome.response.curves) == 21
        values = np.asarray(outcome.response.error_distribution.f_hat)
        assert np.all(np.diff(values) >= 0.0)

    def test_fit_with_explicit_grid(self, simulated_sample):
        """격자 범위를 지정하면 그 범위에서 평가"""
        # When
        outcome = CureFittingService().fit(
            simulated_sample, FitRequestDTO(grid_lo=-2.0, grid_hi=2.0, grid_steps=9)
        )

        # Then
        grid = outcome.unwrap().response.error_distribution.t
        assert grid == pytest.approx(np.linspace(-2.0, 2.0, 9).tolist())

    def test_fit_with_too_few_rows_returns_failure(self, spread_sample):
        """관측치가 10개 미만이면 INVALID_ARGUMENT"""
        result = CureFittingService().fit(spread_sample, FitRequestDTO(bandwidth=1.0))
        assert result.unwrap_error().kind is ErrorKind.INVALID_ARGUMENT

    def test_fit_with_tiny_bandwidth_returns_no_valid_covariates(self, simulated_sample):
        """모든 창이 자기 자신뿐이면 NO_VALID_COVARIATES"""
        result = CureFittingService().fit(simulated_sample, FitRequestDTO(bandwidth=1e-7))
        assert result.is_failure()
        assert result.unwrap_error().kind is ErrorKind.NO_VALID_COVARIATES

    def test_curves_record_first_failure(self, spread_sample):
        """정의되지 않은 점은 값이 비고 에러 종류가 남음"""
        # Given
        model = fit_cure_model(spread_sample, KernelSpec(bandwidth=0.2)).unwrap()

        # When
        points = evaluate_curves(model, [0.0, 0.5, 10.0])

        # Then
        censored_only, _, outside = points
        assert censored_only.pi_hat == 1.0
        assert censored_only.m_hat is None
        assert censored_only.error == "no_local_events"
        assert outside.pi_hat is None
        assert outside.error == "empty_window"


class TestBandwidthComparison:
    """대역폭 비교 서비스 테스트 스위트"""

    def test_compare_two_rules_reports_sup_distance(self, simulated_sample):
        """두 규칙의 F̂ 를 같은 격자에서 비교"""
        # Given
        rules = [(0.75, 1.0 / 16.0), (1.125, 1.0 / 28.0)]

        # When
        result = BandwidthComparisonService().compare(
            simulated_sample, FitRequestDTO(grid_steps=64), rules
        )

        # Then
        comparison = result.unwrap()
        assert comparison.labels == ["0.75,0.0625", "1.125,0.0357143"]
        assert len(comparison.curves) == 2
        expected = float(np.max(np.abs(comparison.curves[0] - comparison.curves[1])))
        assert comparison.max_sup_distance == expected
        assert comparison.worst_pair == ("0.75,0.0625", "1.125,0.0357143")
        assert comparison.bandwidths[0] < comparison.bandwidths[1]

    def test_compare_without_rules_returns_failure(self, simulated_sample):
        """규칙이 없으면 INVALID_ARGUMENT"""
        result = BandwidthComparisonService().compare(simulated_sample, FitRequestDTO(), [])
        assert result.unwrap_error().kind is ErrorKind.INVALID_ARGUMENT

    def test_to_dict_lists_configurations(self, simulated_sample):
        """요약 딕셔너리"""
        comparison = BandwidthComparisonService().compare(
            simulated_sample, FitRequestDTO(grid_steps=16), [(0.75, 1.0 / 16.0)]
        ).unwrap()
        payload = comparison.to_dict()
        assert payload["configurations"][0]["rule"] == "0.75,0.0625"
        assert payload["worst_pair"] is None
        assert payload["max_sup_distance"] == 0.0


def test_sample_from_observations_matches_arrays():
    """Observation 목록으로 만든 표본"""
    sample = SurvivalSample.create([0.0, 1.0], [1.0, 2.0], [1, 0]).unwrap()
    rebuilt = SurvivalSample.from_observations(sample.observations).unwrap()
    assert np.array_equal(rebuilt.z, sample.z)
