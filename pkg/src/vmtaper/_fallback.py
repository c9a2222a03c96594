"""Pure-Python/numpy versions of the compiled kernels in ``_kernels.pyx``."""

import numpy as np

from vmtaper.quadrature import integrate, oscillation_panels
from vmtaper.windows import CosineAlpha, Kaiser, Rectangular, VonMises, shape

_FAMILIES = {0: Rectangular, 1: CosineAlpha, 2: Kaiser, 3: VonMises}


def dtft_direct(first_index, coeffs, omegas):
    """sum_n w[n] e^{-j n omega}, summed in ascending n for every omega."""
    c = np.asarray(coeffs, dtype=float)
    w = np.asarray(omegas, dtype=float)
    re = np.zeros_like(w)
    im = np.zeros_like(w)
    for k, ck in enumerate(c):
        x = float(first_index + k) * w
        re += ck * np.cos(x)
        im -= ck * np.sin(x)
    return re + 1j * im


def window_ft(code, param, N, lo, hi, omegas, abs_tol=1e-10, rel_tol=1e-10,
              max_depth=30):
    """Continuous Fourier transform of a window over its support [lo, hi]."""
    family = Rectangular() if code == 0 else _FAMILIES[code](param)
    centre = 0.5 * (lo + hi)
    out = np.empty(len(omegas), dtype=complex)
    for i, omega in enumerate(np.asarray(omegas, dtype=float)):
        def integrand(t, omega=omega):
            return shape(family, N, t - centre) * np.exp(-1j * omega * t)

        out[i], _ = integrate(
            integrand, lo, hi, abs_tol=abs_tol, rel_tol=rel_tol,
            max_depth=max_depth,
            initial_panels=oscillation_panels(omega, hi - lo),
        )
    return out
