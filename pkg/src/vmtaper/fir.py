"""Window-method FIR low-pass design."""

import math
from dataclasses import dataclass

import numpy as np

from vmtaper.spectra import Domain, FrequencyGrid, Spectrum
from vmtaper._backend import kernels
from vmtaper.special import sa
from vmtaper.windows import sample


def _check_cutoff(omega_c):
    if not (math.isfinite(omega_c) and 0.0 < omega_c < math.pi):
        raise ValueError("omega_c must lie in (0, pi)")


@dataclass(frozen=True)
class LowpassSpec:
    omega_c: float
    N: int

    def __post_init__(self):
        _check_cutoff(self.omega_c)
        if int(self.N) != self.N or self.N < 2 or self.N % 2:
            raise ValueError("N must be an even integer >= 2")


class FirFilter:
    """Real taps ``h[first_index], ..., h[first_index + N]``."""

    def __init__(self, first_index, taps):
        self.first_index = int(first_index)
        self.taps = np.array(taps, dtype=float)
        self.taps.setflags(write=False)

    @property
    def N(self):
        return self.taps.size - 1

    @property
    def indices(self):
        return np.arange(self.first_index, self.first_index + self.taps.size)

    def to_causal(self):
        return FirFilter(0, self.taps)

    def __len__(self):
        return self.taps.size

    def __repr__(self):
        return f"FirFilter(first_index={self.first_index}, N={self.N})"


def ideal_lowpass_tap(omega_c, n):
    """Ideal low-pass impulse response (omega_c / pi) Sa(omega_c n)."""
    _check_cutoff(omega_c)
    return (omega_c / math.pi) * sa(omega_c * np.asarray(n, dtype=float))


def design(lp, window):
    """Multiply the centred window by the ideal response, tap for tap."""
    if window.N != lp.N:
        raise ValueError(f"window N={window.N} does not match filter N={lp.N}")
    if window.causal:
        raise ValueError("design with the centred (non-causal) window, shift afterwards")
    w = sample(window)
    # even symmetry of both factors is preserved exactly by using |n|
    h = ideal_lowpass_tap(lp.omega_c, np.abs(w.indices))
    return FirFilter(w.first_index, w.coefficients * h)


def frequency_response(f, grid):
    """H(e^{j omega}) by direct summation over the taps."""
    if grid.domain is not Domain.DTFT:
        raise ValueError("frequency_response needs a DTFT grid")
    return Spectrum(grid, kernels.dtft_direct(f.first_index, f.taps, grid.points))


@dataclass(frozen=True)
class ResponseReport:
    passband_ripple_db: float
    stopband_attenuation_db: float
    transition_width: float
    passband_edge: float
    stopband_edge: float


def _band_stats(omega, mag, omega_c, delta):
    pb = omega <= omega_c - delta
    sb = omega >= omega_c + delta
    if pb.sum() < 2 or sb.sum() < 2:
        raise ValueError("degenerate pass or stop band; increase N or grid_size")
    return mag[pb], mag[sb]


def _transition_width(omega, mag, omega_c):
    """Transition width from the first stopband null.

    Window-method responses fall monotonically from the cutoff to their first
    zero, where the stopband ripples start; the passband edge is its mirror
    image about the cutoff.
    """
    start = max(int(np.searchsorted(omega, omega_c)), 1)
    for i in range(start, omega.size - 1):
        if mag[i] <= mag[i - 1] and mag[i] < mag[i + 1]:
            half_width = omega[i] - omega_c
            if half_width >= omega_c:
                break
            return 2.0 * half_width
    raise ValueError("transition band swallows the passband or stopband; "
                     "increase N or use a lighter taper")


def response_report(f, lp, grid_size=4096):
    """Passband ripple, stopband attenuation and transition width.

    Bands are ``[0, omega_c - delta]`` and ``[omega_c + delta, pi]`` with
    delta half the measured transition width.  Attenuation is the stopband
    peak relative to the mean passband gain.
    """
    if grid_size < 1024:
        raise ValueError("grid_size must be >= 1024")
    omega = np.linspace(0.0, math.pi, int(grid_size))
    mag = np.abs(frequency_response(f, FrequencyGrid(omega, Domain.DTFT)).values)
    width = _transition_width(omega, mag, lp.omega_c)
    delta = 0.5 * width
    pass_mag, stop_mag = _band_stats(omega, mag, lp.omega_c, delta)
    mean = pass_mag.mean()
    return ResponseReport(
        passband_ripple_db=float(20.0 * np.log10(pass_mag.max() / pass_mag.min())),
        stopband_attenuation_db=float(-20.0 * np.log10(stop_mag.max() / mean)),
        transition_width=float(width),
        passband_edge=float(lp.omega_c - delta),
        stopband_edge=float(lp.omega_c + delta),
    )
