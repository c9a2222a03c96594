"""von Mises (circular normal) density on [-pi, pi] and its limiting forms."""

import math
from dataclasses import dataclass

import numpy as np

from vmtaper.special import bessel_i0e, bessel_i_nu_scaled


def wrap_angle(x):
    """Map angles onto [-pi, pi] via x - 2 pi round(x / 2 pi)."""
    x = np.asarray(x, dtype=float)
    return x - 2.0 * np.pi * np.round(x / (2.0 * np.pi))


@dataclass(frozen=True)
class VonMisesParams:
    mu: float = 0.0
    kappa: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.mu) and math.isfinite(self.kappa)):
            raise ValueError("mu and kappa must be finite")
        if self.kappa < 0:
            raise ValueError("kappa must be >= 0")
        object.__setattr__(self, "mu", float(wrap_angle(self.mu)))


def vm_pdf(x, params):
    """Density e^{kappa cos(x - mu)} / (2 pi I0(kappa)).

    Arguments outside [-pi, pi] are wrapped, so the result is the periodic
    extension of the density.
    """
    if params.kappa < 0:
        raise ValueError("kappa must be >= 0")
    d = wrap_angle(np.asarray(x, dtype=float) - params.mu)
    k = params.kappa
    # e^{k cos d} / I0(k) == e^{k (cos d - 1)} / i0e(k): no overflow for large k
    out = np.exp(k * (np.cos(d) - 1.0)) / (2.0 * np.pi * bessel_i0e(k))
    if np.ndim(x) == 0:
        return float(out)
    return out


def vm_circular_variance(params):
    """Circular variance 1 - I1(kappa) / I0(kappa)."""
    if params.kappa < 0:
        raise ValueError("kappa must be >= 0")
    k = params.kappa
    if k == 0:
        return 1.0
    return 1.0 - bessel_i_nu_scaled(1.0, k) / bessel_i0e(k)


def gaussian_pdf(x, variance):
    x = np.asarray(x, dtype=float)
    return np.exp(-0.5 * x * x / variance) / math.sqrt(2.0 * math.pi * variance)


def vm_gaussian_limit_error(kappa, grid):
    """Largest deviation between the zero-mean von Mises density and N(0, 1/kappa).

    The deviation is measured over ``grid`` and expressed relative to the
    Gaussian peak value.
    """
    if kappa <= 0:
        raise ValueError("kappa must be > 0")
    xs = np.asarray(grid, dtype=float)
    if xs.size == 0:
        raise ValueError("grid must not be empty")
    variance = 1.0 / kappa
    vm = vm_pdf(xs, VonMisesParams(0.0, kappa))
    gauss = gaussian_pdf(xs, variance)
    peak = 1.0 / math.sqrt(2.0 * math.pi * variance)
    return float(np.max(np.abs(vm - gauss)) / peak)


def vm_uniform_limit_error(kappa, grid):
    """Largest relative deviation of the density from 1/(2 pi) over ``grid``."""
    xs = np.asarray(grid, dtype=float)
    if xs.size == 0:
        raise ValueError("grid must not be empty")
    vm = vm_pdf(xs, VonMisesParams(0.0, kappa))
    return float(np.max(np.abs(vm * 2.0 * np.pi - 1.0)))


def vm_mode_value(params):
    return float(vm_pdf(params.mu, params))

