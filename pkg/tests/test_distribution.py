import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import integrate

from vmtaper.distribution import (
    VonMisesParams,
    vm_circular_variance,
    vm_gaussian_limit_error,
    vm_pdf,
    vm_uniform_limit_error,
    wrap_angle,
)

I0_3 = 4.8807925858650240856  # mpmath
VAR_KAPPA_1 = 0.55361003410346549295  # 1 - I1(1)/I0(1), mpmath


def test_uniform_at_zero_concentration():
    for x in (-3.0, 0.0, 1.0, math.pi):
        assert vm_pdf(x, VonMisesParams(0.0, 0.0)) == pytest.approx(1 / (2 * math.pi), rel=1e-15)


def test_mode_value():
    p = VonMisesParams(1.2, 3.0)
    assert vm_pdf(1.2, p) == pytest.approx(math.exp(3) / (2 * math.pi * I0_3), rel=1e-14)


@pytest.mark.parametrize("kappa", [0.0, 0.5, 1.0, 5.0, 20.0])
def test_normalization(kappa):
    p = VonMisesParams(0.0, kappa)
    total, _ = integrate.quad(lambda x: vm_pdf(x, p), -math.pi, math.pi,
                              epsabs=1e-13, epsrel=1e-13)
    assert total == pytest.approx(1.0, abs=1e-10)


@given(st.floats(-math.pi, math.pi), st.floats(0, math.pi), st.floats(0, 30))
def test_symmetric_about_mean(mu, delta, kappa):
    p = VonMisesParams(mu, kappa)
    assert vm_pdf(mu + delta, p) == pytest.approx(vm_pdf(mu - delta, p), rel=1e-12)


@given(st.floats(-math.pi, math.pi), st.floats(0, 30))
def test_mode_at_mean(mu, kappa):
    p = VonMisesParams(mu, kappa)
    xs = np.linspace(-math.pi, math.pi, 721)
    assert vm_pdf(mu, p) >= np.max(vm_pdf(xs, p)) * (1 - 1e-12)


def test_peak_nondecreasing_in_kappa():
    peaks = [vm_pdf(0.0, VonMisesParams(0.0, k)) for k in np.linspace(0, 50, 101)]
    assert np.all(np.diff(peaks) >= 0)


def test_wrapping_gives_periodic_extension():
    p = VonMisesParams(-1.8, 5.0)
    x = np.linspace(-math.pi, math.pi, 50)
    np.testing.assert_allclose(vm_pdf(x + 2 * math.pi, p), vm_pdf(x, p), rtol=1e-12)
    assert wrap_angle(3 * math.pi / 2) == pytest.approx(-math.pi / 2)
    assert VonMisesParams(2 * math.pi + 0.5, 1.0).mu == pytest.approx(0.5)


def test_negative_kappa_rejected():
    with pytest.raises(ValueError):
        VonMisesParams(0.0, -1.0)


def test_circular_variance():
    assert vm_circular_variance(VonMisesParams(0.0, 0.0)) == 1.0
    assert vm_circular_variance(VonMisesParams(0.0, 1.0)) == pytest.approx(VAR_KAPPA_1, rel=1e-13)
    v100 = vm_circular_variance(VonMisesParams(0.0, 100.0))
    assert v100 < 0.006
    assert v100 == pytest.approx(1 / 200, rel=0.01)


def test_gaussian_limit():
    def err(kappa):
        s = 1 / math.sqrt(kappa)
        return vm_gaussian_limit_error(kappa, np.linspace(-3 * s, 3 * s, 201))

    assert err(100.0) < 0.01
    assert err(1000.0) < 0.001
    assert err(1000.0) < err(100.0)


def test_uniform_limit():
    # relative deviation from 1/(2 pi) is about kappa for small kappa
    assert vm_uniform_limit_error(1e-3, np.linspace(-math.pi, math.pi, 721)) < 1.1e-3
    assert vm_uniform_limit_error(1e-6, np.linspace(-math.pi, math.pi, 721)) < 1.1e-6


def test_limit_error_argument_checks():
    with pytest.raises(ValueError):
        vm_gaussian_limit_error(10.0, [])
    with pytest.raises(ValueError):
        vm_gaussian_limit_error(0.0, [0.0])
