"""Acceptance criteria, one PASS/FAIL line each.

Run ``pytest tests/test_acceptance.py -v`` or ``python tests/test_acceptance.py``.

Two criteria cannot hold as stated and are marked ``xfail(strict=True)``: they
print FAIL with the measured numbers, and the suite turns red if they ever
start passing.  The attainable parts of those criteria are asserted by
separate ordinary tests.
"""

import math
import sys
import time

import numpy as np
import pytest

from vmtaper.distribution import VonMisesParams, gaussian_pdf, vm_gaussian_limit_error, vm_pdf
from vmtaper.fir import LowpassSpec, design, frequency_response, response_report
from vmtaper.metrics import compute_metrics
from vmtaper.spectra import (
    Domain,
    FrequencyGrid,
    analytic_dtft,
    compare,
    continuous_ft,
    continuous_grid,
    dtft,
    dtft_grid,
    kaiser_continuous_closed_form,
    vonmises_continuous_series,
    vonmises_series_coefficients,
)
from vmtaper.validation import closed_form_checks, run_validation
from vmtaper.windows import (
    CosineAlpha,
    Kaiser,
    Rectangular,
    VonMises,
    WindowSpec,
    hamming,
    hann,
    sample,
)

ALL_FAMILIES = [Rectangular(), CosineAlpha(0.25), hann(), hamming(), Kaiser(2.0), Kaiser(5.0),
                VonMises(1.0), VonMises(5.0)]
_lines = []


def _emit(number, title, passed, detail):
    line = f"[{'PASS' if passed else 'FAIL'}] criterion {number:>2}: {title} -- {detail}"
    _lines.append(line)
    return line


def criterion_1():
    t0 = time.perf_counter()
    grid = dtft_grid(4097)
    w = grid.points
    worst = 0.0
    for N in (4, 8, 64):
        # closed form written out here, with the removable points filled in
        with np.errstate(invalid="ignore", divide="ignore"):
            ref = np.sin((N + 1) * w / 2) / np.sin(w / 2)
        ref[w == 0] = N + 1
        v = dtft(sample(WindowSpec(Rectangular(), N)), grid).values
        worst = max(worst, float(np.max(np.abs(v - ref))))
    dt = time.perf_counter() - t0
    return worst <= 1e-9 and dt < 1.0, f"max abs err {worst:.2e} (<= 1e-9), {dt:.3f} s (< 1 s)"


def criterion_2():
    t0 = time.perf_counter()
    grid = dtft_grid(4097)
    worst = 0.0
    for N in (8, 16, 32):
        for beta in (1.0, 5.0):
            spec = WindowSpec(VonMises(beta), N)
            err = compare(analytic_dtft(spec, grid, 1e-14), dtft(sample(spec), grid))
            worst = max(worst, err.max_abs)
    dt = time.perf_counter() - t0
    return worst <= 1e-9 and dt < 5.0, f"max abs err {worst:.2e} (<= 1e-9), {dt:.3f} s (< 5 s)"


def criterion_3():
    t0 = time.perf_counter()
    worst = 0.0
    for N in (8, 16, 32):
        grid = continuous_grid(N)
        for beta in (1.0, 5.0):
            spec = WindowSpec(VonMises(beta), N)
            err = compare(vonmises_continuous_series(spec, grid, 1e-14), continuous_ft(spec, grid))
            worst = max(worst, err.max_abs)
    dt = time.perf_counter() - t0
    return (worst <= 1e-8 and dt < 30.0,
            f"max abs err {worst:.2e} (<= 1e-8) on {len(grid)}-point grids, {dt:.2f} s (< 30 s)")


def criterion_4():
    checks = run_validation()
    series = [c for c in checks if c.name == "vonmises continuous Sa series"]
    closed = [c for c in checks if c.name.startswith("vonmises continuous closed-form")]
    reported = {(c.params) for c in closed}
    wanted = {f"beta={b:g} N=8 w={k}pi/N" for b in (1, 5) for k in (0, 1, 2)}
    ok = bool(series) and all(c.passed() for c in series) and wanted <= reported
    devs = ", ".join(f"{c.params}: {c.value:.3e}" for c in closed)
    return ok, f"series rows PASS; closed-form rel. deviation (INFO) {devs}"


def criterion_5():
    worst = 0.0
    for beta in (2.0, 5.0):
        spec = WindowSpec(Kaiser(beta), 16)
        grid = continuous_grid(16)
        err = compare(kaiser_continuous_closed_form(spec, grid), continuous_ft(spec, grid))
        worst = max(worst, err.max_rel)
    return worst <= 1e-6, f"max rel err {worst:.2e} (<= 1e-6) vs continuous-window quadrature"


def _gaussian_pointwise_rel(kappa=100.0):
    s = 1.0 / math.sqrt(kappa)
    x = np.linspace(-3 * s, 3 * s, 601)
    vm = vm_pdf(x, VonMisesParams(0.0, kappa))
    g = gaussian_pdf(x, 1.0 / kappa)
    return float(np.max(np.abs(vm / g - 1.0))), vm_gaussian_limit_error(kappa, x)


def _uniform_rel(kappa=1e-3):
    x = np.linspace(-math.pi, math.pi, 721)
    return float(np.max(np.abs(vm_pdf(x, VonMisesParams(0.0, kappa)) * 2 * math.pi - 1)))


def _family_limit():
    a = sample(WindowSpec(VonMises(1e-12), 64)).coefficients
    return float(np.max(np.abs(a - 1.0)))


def criterion_6():
    fam = _family_limit()
    pointwise, peak_rel = _gaussian_pointwise_rel()
    uni = _uniform_rel()
    ok = fam <= 1e-11 and pointwise <= 0.01 and uni <= 1e-3
    return ok, (f"family limit {fam:.1e} (<= 1e-11); Gaussian k=100 pointwise rel "
                f"{pointwise:.2%} (<= 1%) [peak-normalised {peak_rel:.2%}]; uniform k=1e-3 "
                f"rel {uni:.5%} (<= 0.1%)")


def criterion_7():
    worst_ratio, monotone = 0.0, True
    per_beta = []
    for beta in (1.0, 3.0, 5.0, 10.0):
        c = vonmises_series_coefficients(beta, 1e-300).terms[:51]
        monotone &= bool(np.all(np.diff(c) <= 0))
        ratio = float(np.max(c) * math.sqrt(2 * math.pi * beta))
        per_beta.append(f"{beta:g}:{ratio:.3f}")
        worst_ratio = max(worst_ratio, ratio)
    ok = monotone and worst_ratio <= 1.0
    return ok, (f"monotone non-increasing: {monotone}; max c_k*sqrt(2 pi beta) "
                f"{' '.join(per_beta)} (<= 1), attained at k=0")


def criterion_8():
    m = {name: compute_metrics(sample(WindowSpec(fam, 64)), 64)
         for name, fam in (("rect", Rectangular()), ("hann", hann()), ("hamming", hamming()))}
    ok = (m["rect"].enbw_bins == 1.0
          and abs(m["rect"].highest_sidelobe_db + 13.26) <= 0.05
          and abs(m["hann"].enbw_bins - 1.5) <= 0.005
          and abs(m["hann"].highest_sidelobe_db + 31.5) <= 0.3
          and abs(m["hamming"].highest_sidelobe_db + 42.7) <= 0.5)
    return ok, (f"rect ENBW {m['rect'].enbw_bins:.6f}, HSL {m['rect'].highest_sidelobe_db:.3f} dB; "
                f"hann ENBW {m['hann'].enbw_bins:.6f}, HSL {m['hann'].highest_sidelobe_db:.3f} dB; "
                f"hamming HSL {m['hamming'].highest_sidelobe_db:.3f} dB")


def criterion_9():
    lp = LowpassSpec(math.pi / 2, 32)
    filters = {name: design(lp, WindowSpec(fam, 32))
               for name, fam in (("rect", Rectangular()), ("vonmises5", VonMises(5.0)))}
    att = {k: response_report(f, lp).stopband_attenuation_db for k, f in filters.items()}
    grid = dtft_grid(4097)
    linear = True
    for f in filters.values():
        v = frequency_response(f, grid).values
        linear &= bool(np.array_equal(f.taps, f.taps[::-1]))
        linear &= bool(np.max(np.abs(v.imag)) <= 1e-10 * np.abs(v).max())
    ok = abs(att["rect"] - 21.0) <= 1.0 and att["vonmises5"] > att["rect"] and linear
    return ok, (f"rect {att['rect']:.2f} dB (21 +/- 1), vonmises(5) {att['vonmises5']:.2f} dB, "
                f"linear phase: {linear}")


def criterion_10():
    omega = np.linspace(-np.pi, np.pi, 8192)
    fine = FrequencyGrid(omega, Domain.DTFT)
    sym = dtft_grid(4097)
    worst_parseval, worst_conj = 0.0, 0.0
    for fam in ALL_FAMILIES:
        for causal in (False, True):
            spec = WindowSpec(fam, 32, causal)
            w = sample(spec)
            p = np.abs(dtft(w, fine).values) ** 2
            energy = np.trapezoid(p, omega) if hasattr(np, "trapezoid") else np.trapz(p, omega)
            energy /= 2 * np.pi
            worst_parseval = max(worst_parseval,
                                 abs(energy / np.sum(w.coefficients ** 2) - 1.0))
            for s in (dtft(w, sym), continuous_ft(spec, continuous_grid(32, 257))):
                v = s.values
                worst_conj = max(worst_conj,
                                 float(np.max(np.abs(v[::-1] - np.conj(v))) / max(1.0, np.abs(v).max())))
    ok = worst_parseval <= 1e-8 and worst_conj <= 1e-12
    return ok, (f"{len(ALL_FAMILIES)} windows x 2 variants, N=32: Parseval rel {worst_parseval:.1e} "
                f"(<= 1e-8), conjugate symmetry {worst_conj:.1e} (<= 1e-12)")


CRITERIA = {
    1: ("rectangular DTFT = Dirichlet kernel", criterion_1),
    2: ("von Mises discrete asinc series", criterion_2),
    3: ("von Mises continuous Sa series", criterion_3),
    4: ("closed-form adjudication report", criterion_4),
    5: ("Kaiser closed form", criterion_5),
    6: ("limiting behaviours", criterion_6),
    7: ("coefficient monotonicity and bound", criterion_7),
    8: ("metric oracle values", criterion_8),
    9: ("FIR sanity", criterion_9),
    10: ("Parseval and conjugate symmetry", criterion_10),
}
KNOWN_UNATTAINABLE = {
    6: "pointwise Gaussian error at 3 sigma is ~3.3% and the uniform error at k=1e-3 is "
       "k + k^2/4 > 0.1%; both are properties of the density itself",
    7: "c_0 = I_0(beta) e^-beta exceeds 1/sqrt(2 pi beta) for every beta > 0",
}


def _check(number, capsys):
    title, fn = CRITERIA[number]
    passed, detail = fn()
    with capsys.disabled():
        print("\n" + _emit(number, title, passed, detail))
    assert passed, detail


@pytest.mark.parametrize("number", [
    pytest.param(n, marks=pytest.mark.xfail(strict=True, reason=KNOWN_UNATTAINABLE[n]))
    if n in KNOWN_UNATTAINABLE else n
    for n in CRITERIA
])
def test_criterion(number, capsys):
    _check(number, capsys)


# attainable parts of criteria 6 and 7, asserted on their own

def test_criterion_6_family_limit():
    assert _family_limit() <= 1e-11


def test_criterion_6_gaussian_limit_peak_normalised():
    assert _gaussian_pointwise_rel()[1] <= 0.01


def test_criterion_6_uniform_limit_within_rounding_of_bound():
    # the exact deviation is e^k / I0(k) - 1 = 1.0002499e-3 at k = 1e-3
    assert _uniform_rel() == pytest.approx(1.0002499166302219e-3, rel=1e-9)


def test_criterion_7_monotone():
    for beta in (1.0, 3.0, 5.0, 10.0):
        c = vonmises_series_coefficients(beta, 1e-300).terms[:51]
        assert np.all(np.diff(c) <= 0)


def test_criterion_4_closed_form_deviation_nonzero():
    devs = [c.value for c in closed_form_checks()]
    assert len(devs) == 6 and max(devs) > 1e-3


if __name__ == "__main__":
    failures = 0
    for number, (title, fn) in CRITERIA.items():
        passed, detail = fn()
        failures += not passed
        print(_emit(number, title, passed, detail))
    sys.exit(1 if failures else 0)
