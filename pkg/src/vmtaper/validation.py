"""Analytic-versus-reference checks behind ``vmtaper validate``.

EXACT rows are identities that must hold to the stated tolerance.  INFO rows
quantify closed forms that are known not to hold exactly (the real-order
Bessel closed form of the continuous von Mises spectrum and the coefficient
bound 1/sqrt(2 pi beta)); they only fail under ``strict``.
"""

import math
from dataclasses import dataclass

import numpy as np

from vmtaper import spectra
from vmtaper.spectra import (
    analytic_dtft,
    closed_form_deviation,
    compare,
    continuous_ft,
    continuous_grid,
    dtft,
    dtft_grid,
    kaiser_continuous_closed_form,
    vonmises_continuous_series,
)
from vmtaper.special import bessel_i_nu_scaled
from vmtaper.windows import CosineAlpha, Kaiser, Rectangular, VonMises, WindowSpec, sample

EXACT = "EXACT"
INFO = "INFO"


@dataclass(frozen=True)
class Check:
    name: str
    params: str
    metric: str
    value: float
    tolerance: float
    kind: str

    def status(self, strict=False):
        if self.kind == INFO and not strict:
            return "INFO"
        return "PASS" if self.value <= self.tolerance else "FAIL"

    def passed(self, strict=False):
        return self.status(strict) != "FAIL"


def dirichlet_checks(points=spectra.DEFAULT_DTFT_POINTS):
    grid = dtft_grid(points)
    for N in (4, 8, 64):
        spec = WindowSpec(Rectangular(), N)
        err = compare(dtft(sample(spec), grid), analytic_dtft(spec, grid))
        yield Check("rect dtft = dirichlet kernel", f"N={N}", "max_abs",
                    err.max_abs, 1e-9, EXACT)


def cosine_checks(points=spectra.DEFAULT_DTFT_POINTS):
    grid = dtft_grid(points)
    for alpha in (0.0, 0.5, 0.54):
        for causal in (False, True):
            spec = WindowSpec(CosineAlpha(alpha), 16, causal)
            err = compare(analytic_dtft(spec, grid), dtft(sample(spec), grid))
            yield Check("cosine-alpha dtft combination",
                        f"alpha={alpha:g} N=16 causal={causal}", "max_abs",
                        err.max_abs, 1e-10, EXACT)


def vonmises_discrete_checks(points=spectra.DEFAULT_DTFT_POINTS, eps=1e-14):
    grid = dtft_grid(points)
    for N in (8, 16, 32):
        for beta in (1.0, 5.0):
            spec = WindowSpec(VonMises(beta), N)
            err = compare(analytic_dtft(spec, grid, eps), dtft(sample(spec), grid))
            yield Check("vonmises discrete asinc series", f"beta={beta:g} N={N}",
                        "max_abs", err.max_abs, 1e-9, EXACT)


def vonmises_continuous_checks(points=spectra.DEFAULT_CONTINUOUS_POINTS, eps=1e-14):
    for N in (8, 16, 32):
        grid = continuous_grid(N, points)
        for beta in (1.0, 5.0):
            spec = WindowSpec(VonMises(beta), N)
            err = compare(vonmises_continuous_series(spec, grid, eps),
                          continuous_ft(spec, grid))
            yield Check("vonmises continuous Sa series", f"beta={beta:g} N={N}",
                        "max_abs", err.max_abs, 1e-8, EXACT)


def kaiser_checks(points=spectra.DEFAULT_CONTINUOUS_POINTS):
    N = 16
    grid = continuous_grid(N, points)
    for beta in (2.0, 5.0):
        spec = WindowSpec(Kaiser(beta), N)
        err = compare(kaiser_continuous_closed_form(spec, grid), continuous_ft(spec, grid))
        yield Check("kaiser closed form = continuous FT", f"beta={beta:g} N={N}",
                    "max_rel", err.max_rel, 1e-6, EXACT)


def closed_form_checks(Ns=(8,), betas=(1.0, 5.0)):
    for N in Ns:
        for beta in betas:
            spec = WindowSpec(VonMises(beta), N)
            omegas = [0.0, math.pi / N, 2.0 * math.pi / N]
            for w, _, _, dev in closed_form_deviation(spec, omegas):
                yield Check("vonmises continuous closed-form (Bessel I_nu)",
                            f"beta={beta:g} N={N} w={w / (math.pi / N):g}pi/N",
                            "rel_dev", dev, 1e-8, INFO)


def coefficient_bound_checks(betas=(1.0, 3.0, 5.0, 10.0), kmax=50):
    for beta in betas:
        c = bessel_i_nu_scaled(np.arange(kmax + 1, dtype=float), beta)
        ratio = float(np.max(c) * math.sqrt(2.0 * math.pi * beta))
        # value is max_k c_k / (1/sqrt(2 pi beta)); the bound claims <= 1
        yield Check("coefficient bound 1/sqrt(2 pi beta)", f"beta={beta:g} k<={kmax}",
                    "max_ratio", ratio, 1.0, INFO)


def run_validation(dtft_points=spectra.DEFAULT_DTFT_POINTS, continuous_points=257):
    checks = []
    checks += dirichlet_checks(dtft_points)
    checks += cosine_checks(dtft_points)
    checks += vonmises_discrete_checks(dtft_points)
    checks += vonmises_continuous_checks(continuous_points)
    checks += kaiser_checks(continuous_points)
    checks += closed_form_checks()
    checks += coefficient_bound_checks()
    return checks
