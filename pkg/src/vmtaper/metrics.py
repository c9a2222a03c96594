"""Figures of merit for windows (Harris conventions).

Spectral quantities are read off a dense direct-sum DTFT on [0, pi] with
``2**ceil(log2((N + 1) * oversample))`` points over the full circle.
Widths are reported in bins of 2 pi / (N + 1).

ENBW follows the DFT-even convention: the ``N + 1``-tap symmetric window is
one period of an ``N``-periodic sequence, so its two end taps share one slot
and carry weight 1/2 each.  That keeps the rectangular window at exactly one
bin and the Hann window at exactly 1.5 bins.
"""

import math
from dataclasses import dataclass

import numpy as np

from vmtaper.spectra import Domain, FrequencyGrid, dtft
from vmtaper.windows import SampledWindow, sample

THREE_DB = 10.0 ** (-3.0 / 20.0)
DEEP_NULL = 1e-3


@dataclass(frozen=True)
class WindowMetrics:
    coherent_gain: float
    enbw_bins: float
    highest_sidelobe_db: float
    mainlobe_width_3db_bins: float
    scalloping_loss_db: float


def _period_weights(n_taps):
    weights = np.ones(n_taps)
    if n_taps > 1:
        weights[0] = weights[-1] = 0.5
    return weights


def enbw_bins(coefficients):
    """Equivalent noise bandwidth in bins, DFT-even convention."""
    c = np.asarray(coefficients, dtype=float)
    wt = _period_weights(c.size)
    period = max(c.size - 1, 1)
    s1 = float(np.sum(wt * c))
    s2 = float(np.sum(wt * c * c))
    if s1 == 0:
        raise ValueError("window has zero sum")
    return period * s2 / (s1 * s1)


def enbw_bins_parseval(coefficients, n_points=8192):
    """ENBW through the spectrum: noise power from Parseval, gain from W(0)."""
    c = np.asarray(coefficients, dtype=float)
    period = max(c.size - 1, 1)
    # one period of the DFT-even sequence: drop the duplicated end tap
    # (matches the half-weighted sums for symmetric windows)
    seq = c[:-1] if c.size > 1 else c
    omega = -np.pi + 2.0 * np.pi * np.arange(n_points) / n_points
    grid = FrequencyGrid(omega, Domain.DTFT)
    spec = dtft(SampledWindow(0, seq), grid).values
    # discrete Parseval: exact while n_points exceeds the sequence length
    noise = float(np.mean(np.abs(spec) ** 2))
    dc = float(np.sum(seq))
    return period * noise / (dc * dc)


def _parabolic_peak(y_left, y_mid, y_right):
    denom = y_left - 2.0 * y_mid + y_right
    if denom >= 0:
        return 0.0, y_mid
    offset = 0.5 * (y_left - y_right) / denom
    return offset, y_mid - 0.25 * (y_left - y_right) * offset


def _mainlobe_edge(mag):
    """Index of the first null right of omega = 0."""
    peak = mag[0]
    first_min = None
    for i in range(1, mag.size - 1):
        if mag[i] <= mag[i - 1] and mag[i] < mag[i + 1]:
            if mag[i] < DEEP_NULL * peak:
                return i
            if first_min is None:
                first_min = i
    if first_min is None:
        raise ValueError("no main-lobe null found; increase oversample")
    # no deep null: heavy tapers have shallow sampled nulls
    return first_min


def compute_metrics(w, oversample=64):
    """Coherent gain, ENBW, highest sidelobe, -3 dB width and scalloping loss."""
    if int(oversample) != oversample or oversample < 16:
        raise ValueError("oversample must be an integer >= 16")
    c = w.coefficients
    if not np.any(c):
        raise ValueError("all-zero window")
    taps = c.size
    total = 2 ** math.ceil(math.log2(taps * oversample))
    half = np.arange(total // 2 + 1) * (2.0 * np.pi / total)
    half[-1] = np.pi
    mag = np.abs(dtft(w, FrequencyGrid(half, Domain.DTFT)).values)
    peak = mag[0]
    db = 20.0 * np.log10(np.maximum(mag / peak, np.finfo(float).tiny))

    edge = _mainlobe_edge(mag)
    side = db[edge:]
    hsl = -np.inf
    for i in range(1, side.size - 1):
        if side[i] >= side[i - 1] and side[i] > side[i + 1]:
            _, level = _parabolic_peak(side[i - 1], side[i], side[i + 1])
            hsl = max(hsl, level)
    if side.size and side[-1] > side[-2]:
        hsl = max(hsl, side[-1])  # maximum sitting on omega = pi

    below = np.nonzero(mag[:edge + 1] < THREE_DB * peak)[0]
    if below.size == 0:
        raise ValueError("main lobe never falls 3 dB; increase oversample")
    j = below[0]
    frac = (mag[j - 1] - THREE_DB * peak) / (mag[j - 1] - mag[j])
    w3 = half[j - 1] + frac * (half[j] - half[j - 1])
    bin_width = 2.0 * np.pi / taps

    scallop_grid = FrequencyGrid([0.0, np.pi / taps], Domain.DTFT)
    sv = np.abs(dtft(w, scallop_grid).values)

    return WindowMetrics(
        coherent_gain=float(np.sum(c) / taps),
        enbw_bins=enbw_bins(c),
        highest_sidelobe_db=float(hsl),
        mainlobe_width_3db_bins=float(2.0 * w3 / bin_width),
        scalloping_loss_db=float(-20.0 * np.log10(sv[1] / sv[0])),
    )


def metric_table(specs, oversample=64):
    """``[(spec, compute_metrics(sample(spec)))]`` in input order."""
    specs = list(specs)
    if not specs:
        raise ValueError("need at least one window spec")
    return [(spec, compute_metrics(sample(spec), oversample)) for spec in specs]
