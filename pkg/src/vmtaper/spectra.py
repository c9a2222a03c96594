"""Window spectra: numeric references and the analytic forms checked against them.

Numeric references are :func:`dtft` (direct summation) and
:func:`continuous_ft` (adaptive quadrature).  The analytic evaluators are

* :func:`analytic_dtft` -- Dirichlet kernel, cosine-alpha combination and the
  von Mises aliased-sinc series;
* :func:`analytic_continuous` -- continuous-time counterparts;
* :func:`vonmises_continuous_series` -- von Mises sample-function series;
* :func:`vonmises_continuous_closed_form` -- the real-order Bessel closed form,
  kept to measure how far it is from the quadrature reference;
* :func:`kaiser_continuous_closed_form`.
"""

import enum
import math
from dataclasses import dataclass

import numpy as np

from vmtaper._backend import kernels
from vmtaper.special import asinc, bessel_i0e, bessel_i_nu_scaled, sa
from vmtaper.windows import CosineAlpha, Kaiser, Rectangular, VonMises, sample

DEFAULT_DTFT_POINTS = 4097
DEFAULT_CONTINUOUS_POINTS = 2049
QUAD_TOL = 1e-10
QUAD_MAX_DEPTH = 30


class Domain(enum.Enum):
    CONTINUOUS = "continuous"
    DTFT = "dtft"


@dataclass(frozen=True, eq=False)
class FrequencyGrid:
    points: np.ndarray
    domain: Domain

    def __post_init__(self):
        pts = np.array(self.points, dtype=float)
        if pts.ndim != 1 or pts.size == 0:
            raise ValueError("grid points must be a non-empty 1-D sequence")
        if not np.all(np.isfinite(pts)):
            raise ValueError("grid points must be finite")
        if pts.size > 1 and np.any(np.diff(pts) <= 0):
            raise ValueError("grid points must be strictly increasing")
        if self.domain is Domain.DTFT and np.any(np.abs(pts) > np.pi):
            raise ValueError("DTFT grid points must lie in [-pi, pi]")
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    def __len__(self):
        return self.points.size

    def __eq__(self, other):
        if not isinstance(other, FrequencyGrid):
            return NotImplemented
        return self.domain is other.domain and np.array_equal(self.points, other.points)


def symmetric_points(half_width, n_points):
    """``n_points`` on [-half_width, half_width], exactly mirror-symmetric."""
    if n_points < 1:
        raise ValueError("n_points must be >= 1")
    if n_points == 1:
        return np.zeros(1)
    right = np.linspace(0.0, half_width, n_points // 2 + 1)
    if n_points % 2:
        return np.concatenate([-right[:0:-1], right])
    # even count: mirror the half-step-offset positive points
    step = 2.0 * half_width / (n_points - 1)
    pos = half_width - step * np.arange(n_points // 2)[::-1]
    return np.concatenate([-pos[::-1], pos])


def dtft_grid(n_points=DEFAULT_DTFT_POINTS):
    return FrequencyGrid(symmetric_points(np.pi, n_points), Domain.DTFT)


def continuous_grid(N, n_points=DEFAULT_CONTINUOUS_POINTS):
    """Symmetric grid on [-4 pi (N+1)/N, 4 pi (N+1)/N] rad/s."""
    return FrequencyGrid(
        symmetric_points(4.0 * np.pi * (N + 1) / N, n_points), Domain.CONTINUOUS
    )


@dataclass(frozen=True, eq=False)
class Spectrum:
    grid: FrequencyGrid
    values: np.ndarray

    def __post_init__(self):
        vals = np.array(self.values, dtype=complex)
        if vals.shape != self.grid.points.shape:
            raise ValueError("spectrum values must match the grid length")
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    @property
    def omega(self):
        return self.grid.points

    @property
    def magnitude(self):
        return np.abs(self.values)

    def db(self):
        """20 log10(|W| / max |W|), floored at the smallest normal double."""
        mag = self.magnitude
        peak = mag.max()
        if peak == 0:
            return np.full_like(mag, -np.inf)
        return 20.0 * np.log10(np.maximum(mag / peak, np.finfo(float).tiny))


def _require(grid, domain):
    if grid.domain is not domain:
        raise ValueError(f"expected a {domain.value} grid, got {grid.domain.value}")


def _shift_phase(spec, omega):
    if not spec.causal:
        return 1.0
    return np.exp(-1j * omega * (spec.N / 2))


def dtft(w, grid):
    """W(e^{j omega}) = sum_n w[n] e^{-j n omega}, by direct summation."""
    _require(grid, Domain.DTFT)
    values = kernels.dtft_direct(w.first_index, w.coefficients, grid.points)
    return Spectrum(grid, values)


def continuous_ft(spec, grid, tol=QUAD_TOL):
    """int w(t) e^{-j w t} dt over the support, by adaptive Gauss-Kronrod."""
    _require(grid, Domain.CONTINUOUS)
    lo, hi = spec.support
    values = kernels.window_ft(
        spec.family.code, float(spec.family.param), spec.N, lo, hi,
        grid.points, tol, tol, QUAD_MAX_DEPTH,
    )
    return Spectrum(grid, values)


@dataclass(frozen=True, eq=False)
class SeriesCoefficients:
    """c_k = I_k(beta) e^{-beta} for k = 0..K."""

    beta: float
    terms: np.ndarray

    @property
    def K(self):
        return self.terms.size - 1

    def symmetric(self):
        """Coefficients for k = -K..K (c_{-k} = c_k)."""
        return np.concatenate([self.terms[:0:-1], self.terms])


def vonmises_series_coefficients(beta, eps=1e-14):
    """Scaled Bessel coefficients of e^{beta cos x} = sum_k I_|k|(beta) cos(k x).

    Stops at the first K with c_K < eps.  An exactly-zero c_K (only at
    beta = 0) ends the series without being stored, so beta = 0 gives ``[1]``.
    """
    if not (math.isfinite(beta) and beta >= 0):
        raise ValueError("beta must be >= 0")
    if not eps > 0:
        raise ValueError("eps must be > 0")
    terms = []
    k = 0
    while True:
        c = bessel_i_nu_scaled(float(k), beta)
        if c == 0.0:
            break
        terms.append(c)
        if c < eps:
            break
        k += 1
    return SeriesCoefficients(float(beta), np.array(terms))


def _vonmises_dtft_series(N, beta, omega, eps):
    coeffs = vonmises_series_coefficients(beta, eps)
    K = coeffs.K
    out = np.zeros_like(omega)
    for k, c in zip(range(-K, K + 1), coeffs.symmetric()):
        out += c * asinc(N + 1, omega - k * np.pi / N)
    return out


def analytic_dtft(spec, grid, truncation_eps=1e-14):
    """Closed-form / series DTFT of rectangular, cosine-alpha and von Mises windows."""
    _require(grid, Domain.DTFT)
    fam = spec.family
    N = spec.N
    omega = grid.points
    if isinstance(fam, Rectangular):
        values = asinc(N + 1, omega)
    elif isinstance(fam, CosineAlpha):
        cosine_tip = 0.5 * (asinc(N + 1, omega - 2 * np.pi / N)
                            + asinc(N + 1, omega + 2 * np.pi / N))
        values = fam.alpha * asinc(N + 1, omega) + (1.0 - fam.alpha) * cosine_tip
    elif isinstance(fam, VonMises):
        if not truncation_eps > 0:
            raise ValueError("truncation_eps must be > 0")
        values = _vonmises_dtft_series(N, fam.beta, omega, truncation_eps)
    elif isinstance(fam, Kaiser):
        raise ValueError("no discrete closed form for the Kaiser window; use dtft()")
    else:
        raise TypeError(f"unknown window family {fam!r}")
    return Spectrum(grid, values * _shift_phase(spec, omega))


def vonmises_continuous_series(spec, grid, eps=1e-14):
    """N sum_n c_|n| Sa(N w / 2 - n pi / 2), the exact FT of the von Mises window."""
    _require(grid, Domain.CONTINUOUS)
    if not isinstance(spec.family, VonMises):
        raise ValueError("vonmises_continuous_series needs a VonMises window")
    N = spec.N
    w = grid.points
    coeffs = vonmises_series_coefficients(spec.family.beta, eps)
    K = coeffs.K
    x = N * w / 2.0
    out = np.zeros_like(w)
    for n, c in zip(range(-K, K + 1), coeffs.symmetric()):
        out += c * sa(x - n * np.pi / 2.0)
    return Spectrum(grid, N * out * _shift_phase(spec, w))


def vonmises_continuous_closed_form(spec, grid):
    """2 N I_{|N w / pi|}(beta) e^{-beta}, evaluated as written.

    This is the Fourier transform over a full period of the exponent's cosine,
    not over the window's half-period support, so it does not equal
    :func:`continuous_ft`; :func:`closed_form_deviation` quantifies the gap.
    """
    _require(grid, Domain.CONTINUOUS)
    if not isinstance(spec.family, VonMises):
        raise ValueError("vonmises_continuous_closed_form needs a VonMises window")
    N = spec.N
    w = grid.points
    order = np.abs(N * w / np.pi)
    values = 2.0 * N * bessel_i_nu_scaled(order, spec.family.beta)
    return Spectrum(grid, values * _shift_phase(spec, w))


def kaiser_continuous_closed_form(spec, grid):
    """(N / I0(beta)) Sa(sqrt((N w / 2)^2 - beta^2)), continued to sinh below beta."""
    _require(grid, Domain.CONTINUOUS)
    if not isinstance(spec.family, Kaiser):
        raise ValueError("kaiser_continuous_closed_form needs a Kaiser window")
    N = spec.N
    beta = spec.family.beta
    w = grid.points
    u = (N * w / 2.0) ** 2 - beta * beta
    out = np.empty_like(w)
    osc = u >= 0
    # everything divided by I0(beta) = i0e(beta) e^beta, kept in scaled form
    out[osc] = sa(np.sqrt(u[osc])) * np.exp(-beta)
    r = np.sqrt(-u[~osc])
    # sinh(r) / r = e^r (1 - e^{-2r}) / (2r)
    sinh_over_r = np.where(r > 1e-8, -np.expm1(-2.0 * r) / (2.0 * np.maximum(r, 1e-300)), 1.0)
    out[~osc] = sinh_over_r * np.exp(r - beta)
    values = N * out / bessel_i0e(beta)
    return Spectrum(grid, values * _shift_phase(spec, w))


def analytic_continuous(spec, grid, eps=1e-14):
    """Closed-form continuous FT for every family (series for von Mises)."""
    _require(grid, Domain.CONTINUOUS)
    fam = spec.family
    N = spec.N
    w = grid.points
    x = N * w / 2.0
    if isinstance(fam, Rectangular):
        values = N * sa(x)
    elif isinstance(fam, CosineAlpha):
        tip = 0.5 * N * (sa(x - np.pi) + sa(x + np.pi))
        values = fam.alpha * N * sa(x) + (1.0 - fam.alpha) * tip
    elif isinstance(fam, Kaiser):
        return kaiser_continuous_closed_form(spec, grid)
    elif isinstance(fam, VonMises):
        return vonmises_continuous_series(spec, grid, eps)
    else:
        raise TypeError(f"unknown window family {fam!r}")
    return Spectrum(grid, values * _shift_phase(spec, w))


@dataclass(frozen=True)
class ErrorStats:
    max_abs: float
    max_rel: float
    rms: float


def compare(a, b):
    """Error of ``a`` against reference ``b``.

    Relative errors only count points where |b| > 1e-12 max|b|.
    """
    if a.grid != b.grid:
        raise ValueError("spectra are on different grids")
    diff = np.abs(a.values - b.values)
    ref = np.abs(b.values)
    mask = ref > 1e-12 * ref.max() if ref.size else ref.astype(bool)
    max_rel = float(np.max(diff[mask] / ref[mask])) if np.any(mask) else 0.0
    return ErrorStats(
        max_abs=float(diff.max()),
        max_rel=max_rel,
        rms=float(np.sqrt(np.mean(diff * diff))),
    )


def numeric_spectrum(spec, grid):
    """Reference spectrum for ``spec`` on ``grid`` (DTFT or quadrature)."""
    if grid.domain is Domain.DTFT:
        return dtft(sample(spec), grid)
    return continuous_ft(spec, grid)


def closed_form_deviation(spec, omegas):
    """Relative gap between the real-order Bessel closed form and quadrature.

    Returns one ``(omega, closed_form, quadrature, relative_deviation)`` row
    per frequency.
    """
    grid = FrequencyGrid(np.asarray(omegas, float), Domain.CONTINUOUS)
    closed = vonmises_continuous_closed_form(spec, grid).values
    ref = continuous_ft(spec, grid).values
    rows = []
    for w, c, r in zip(grid.points, closed, ref):
        rows.append((float(w), c, r, float(abs(c - r) / abs(r))))
    return rows
