"""
커널 평활 테스트
"""

import numpy as np
import pytest
from scipy import integrate

from src.domain.errors import ErrorKind
from src.domain.smoothing.services.kernel_smoothing import (
    default_bandwidth,
    kernel_eval,
    kernel_values,
    nw_weights,
    raw_kernel_weights,
    sample_sigma,
)
from src.domain.smoothing.value_objects.kernel_spec import BandwidthRule, KernelFamily, KernelSpec


class TestKernelValues:
    """커널 함수 테스트 스위트"""

    @pytest.mark.parametrize("family", list(KernelFamily))
    def test_kernel_is_bitwise_symmetric(self, family):
        """K(u) 와 K(−u) 가 비트 단위로 같음"""
        # Given: 임의의 정규화 거리
        u = np.random.default_rng(3).uniform(-1.2, 1.2, 1000)

        # When: 양쪽 부호로 평가
        left = kernel_values(family, u)
        right = kernel_values(family, -u)

        # Then: 완전히 같음
        assert np.array_equal(left, right)

    @pytest.mark.parametrize("family", list(KernelFamily))
    def test_kernel_integrates_to_one(self, family):
        """∫K(u)du = 1"""
        # When
        total, _ = integrate.quad(lambda u: float(kernel_values(family, u)), -1.0, 1.0)

        # Then
        assert total == pytest.approx(1.0, abs=1e-10)

    def test_kernel_vanishes_outside_support(self):
        """|u| ≥ 1 에서 0"""
        # Given
        spec = KernelSpec()

        # Then
        assert kernel_eval(spec, 1.0) == 0.0
        assert kernel_eval(spec, -1.5) == 0.0
        assert kernel_eval(spec, 0.0) == pytest.approx(15.0 / 16.0)

    def test_epanechnikov_peak(self):
        """Epanechnikov 커널의 최댓값 3/4"""
        assert kernel_eval(KernelSpec(family=KernelFamily.EPANECHNIKOV), 0.0) == 0.75


class TestNwWeights:
    """Nadaraya–Watson 가중치 테스트 스위트"""

    def test_weights_sum_to_one_when_window_is_populated(self):
        """창 안에 관측치가 있으면 가중치 합 1"""
        # Given
        xs = np.linspace(-1.0, 1.0, 21)
        spec = KernelSpec(bandwidth=0.4)

        # When
        result = nw_weights(0.1, xs, spec)

        # Then
        assert result.is_success()
        weights = result.unwrap()
        assert weights.sum() == pytest.approx(1.0, abs=1e-12)
        assert np.all(weights >= 0.0)
        assert np.all(weights[np.abs(xs - 0.1) >= 0.4] == 0.0)

    def test_weights_are_proportional_to_kernel_values(self):
        """가중치 비율이 커널 값 비율과 같음"""
        # Given
        xs = np.array([0.0, 0.2, 0.5])
        spec = KernelSpec(bandwidth=1.0)

        # When
        weights = nw_weights(0.0, xs, spec).unwrap()
        raw = raw_kernel_weights(0.0, xs, spec)

        # Then
        assert weights == pytest.approx(raw / raw.sum())

    def test_empty_window_returns_failure(self):
        """창 밖의 x0 는 EMPTY_WINDOW"""
        # Given
        xs = np.array([-1.0, 0.0, 1.0])

        # When
        result = nw_weights(10.0, xs, KernelSpec(bandwidth=0.5))

        # Then
        assert result.is_failure()
        assert result.unwrap_error().kind is ErrorKind.EMPTY_WINDOW
        assert "nw_weights" in result.unwrap_error().message


class TestDefaultBandwidth:
    """경험 대역폭 테스트 스위트"""

    def test_bandwidth_matches_reference_value(self):
        """C=9/8, γ=1/28, n=284, σ=12.3 이면 약 4.51"""
        # Given
        rule = BandwidthRule(c=9.0 / 8.0, gamma=1.0 / 28.0)

        # When
        bandwidth = default_bandwidth(rule, 284, 12.3)

        # Then
        assert bandwidth == pytest.approx(4.51, abs=0.02)

    def test_bandwidth_shrinks_with_sample_size(self):
        """n 이 커지면 대역폭이 줄어듦"""
        rule = BandwidthRule()
        assert default_bandwidth(rule, 1000, 1.0) < default_bandwidth(rule, 100, 1.0)

    @pytest.mark.parametrize(
        "c, gamma",
        [(0.75, 1.0 / 16.0), (0.75, 1.0 / 28.0), (1.125, 1.0 / 16.0), (1.125, 1.0 / 28.0)],
    )
    def test_bandwidth_is_strictly_decreasing_over_practical_sizes(self, c, gamma):
        """n = 8, …, 10⁴ 전 구간에서 대역폭이 엄격히 감소"""
        # Given
        rule = BandwidthRule.create(c, gamma).unwrap()

        # When
        values = np.array([default_bandwidth(rule, n, 1.3) for n in range(8, 10_001)])

        # Then
        assert np.all(np.diff(values) < 0.0)
        assert np.all(values > 0.0)

    def test_gamma_outside_range_still_computes(self):
        """γ 가 (0, 1/12) 밖이면 경고만 하고 값은 계산"""
        # Given
        rule = BandwidthRule.create(0.75, 0.2).unwrap()

        # When
        bandwidth = default_bandwidth(rule, 100, 1.0)

        # Then
        assert not rule.within_undersmoothing_range
        assert bandwidth > 0.0

    def test_non_positive_constant_returns_failure(self):
        """C ≤ 0 은 INVALID_ARGUMENT"""
        result = BandwidthRule.create(0.0, 1.0 / 16.0)
        assert result.is_failure()
        assert result.unwrap_error().kind is ErrorKind.INVALID_ARGUMENT

    def test_sample_sigma_uses_unbiased_variance(self):
        """σ̂_X 는 자유도 n−1"""
        assert sample_sigma([1.0, 2.0, 3.0]) == pytest.approx(1.0)


class TestKernelSpec:
    """KernelSpec 생성 테스트 스위트"""

    def test_create_with_name_returns_success(self):
        """커널 이름 문자열로 생성"""
        result = KernelSpec.create(0.5, " Epanechnikov ")
        assert result.is_success()
        assert result.unwrap().family is KernelFamily.EPANECHNIKOV

    @pytest.mark.parametrize("bandwidth", [0.0, -1.0, float("inf"), float("nan")])
    def test_create_with_invalid_bandwidth_returns_failure(self, bandwidth):
        """양의 유한값이 아닌 대역폭은 INVALID_ARGUMENT"""
        result = KernelSpec.create(bandwidth)
        assert result.is_failure()
        assert result.unwrap_error().kind is ErrorKind.INVALID_ARGUMENT

    def test_create_with_unknown_kernel_returns_failure(self):
        """지원하지 않는 커널 이름"""
        result = KernelSpec.create(1.0, "gaussian")
        assert result.is_failure()
        assert "gaussian" in result.unwrap_error().message
