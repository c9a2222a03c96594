r"""Special functions used by the windows and their spectra.

* :func:`sa` -- the sample function :math:`\sin(x)/x`.
* :func:`bessel_i0`, :func:`bessel_i0e` -- modified Bessel function of the
  first kind, order zero (plain and exponentially scaled).
* :func:`bessel_i_nu`, :func:`bessel_i_nu_scaled` -- real, non-negative order.
* :func:`asinc` -- the unnormalized aliased sinc (Dirichlet kernel)
  :math:`\sin(M\omega/2)/\sin(\omega/2)`, peak value ``M``.

All functions accept scalars or array-likes and return the same kind.
"""

import math

import numpy as np

from vmtaper.quadrature import integrate

#: Above this argument I0 switches from the ascending series to the
#: large-argument asymptotic expansion.
I0_SERIES_MAX = 30.0
#: Above this argument the real-order function uses the integral
#: representation instead of the ascending series.
I_NU_SERIES_MAX = 100.0

SERIES_RTOL = 1e-16
SERIES_MAX_TERMS = 500


def _scalar_or_array(out, like):
    if np.ndim(like) == 0:
        return float(out)
    return out


def _check_finite(x, name):
    if not np.all(np.isfinite(x)):
        raise ValueError(f"{name} must be finite")


def sa(x):
    """Sample function sin(x)/x with Sa(0) = 1."""
    xa = np.asarray(x, dtype=float)
    _check_finite(xa, "x")
    out = np.ones_like(xa)
    small = np.abs(xa) < 1e-5
    # two-term Taylor is exact to double precision below 1e-5
    xs = xa[small]
    out[small] = 1.0 - xs * xs / 6.0
    xb = xa[~small]
    out[~small] = np.sin(xb) / xb
    return _scalar_or_array(out, x)


def _i0_series(z):
    """Ascending series, vectorized; returns I0(z)."""
    q = 0.25 * z * z
    term = np.ones_like(z)
    total = np.ones_like(z)
    for n in range(1, SERIES_MAX_TERMS + 1):
        term = term * q / (n * n)
        total = total + term
        if np.all(term <= SERIES_RTOL * total):
            break
    return total


def _i0e_asymptotic(z):
    """e^{-z} I0(z) from the large-argument expansion (valid for z >= 30)."""
    # terms shrink until k ~ 2z, far past the point where they drop below
    # SERIES_RTOL for every z >= I0_SERIES_MAX
    total = np.ones_like(z)
    term = np.ones_like(z)
    for k in range(1, 60):
        term = term * (2 * k - 1) ** 2 / (8.0 * k * z)
        total = total + term
        if np.all(term <= SERIES_RTOL * total):
            break
    return total / np.sqrt(2.0 * np.pi * z)


def bessel_i0e(z):
    """Exponentially scaled I0: e^{-z} I0(z) for z >= 0."""
    za = np.asarray(z, dtype=float)
    _check_finite(za, "z")
    if np.any(za < 0):
        raise ValueError("bessel_i0 is defined here for z >= 0 only")
    out = np.empty_like(za)
    low = za <= I0_SERIES_MAX
    out[low] = _i0_series(za[low]) * np.exp(-za[low])
    out[~low] = _i0e_asymptotic(za[~low])
    return _scalar_or_array(out, z)


def bessel_i0(z):
    """Modified Bessel function of the first kind, order zero, for z >= 0.

    Uses the ascending series up to ``I0_SERIES_MAX`` (all terms positive, so
    no cancellation) and the scaled asymptotic expansion above it.
    """
    za = np.asarray(z, dtype=float)
    _check_finite(za, "z")
    if np.any(za < 0):
        raise ValueError("bessel_i0 is defined here for z >= 0 only")
    out = np.empty_like(za)
    low = za <= I0_SERIES_MAX
    out[low] = _i0_series(za[low])
    with np.errstate(over="ignore"):
        out[~low] = _i0e_asymptotic(za[~low]) * np.exp(za[~low])
    return _scalar_or_array(out, z)


def _i_nu_series_scaled(nu, z):
    """e^{-z} I_nu(z) from the ascending series, summed in log-scaled form."""
    if z == 0.0:
        return 1.0 if nu == 0.0 else 0.0
    # log(z) - log(2) rather than log(z / 2): z / 2 underflows for subnormal z
    log_first = nu * (math.log(z) - math.log(2.0)) - math.lgamma(nu + 1.0) - z
    q = 0.25 * z * z
    term = 1.0
    total = 1.0
    for k in range(1, SERIES_MAX_TERMS + 1):
        term *= q / (k * (k + nu))
        total += term
        if term <= SERIES_RTOL * total:
            break
    return math.exp(log_first) * total


def _i_nu_integral_scaled(nu, z):
    """e^{-z} I_nu(z) from the integral representation.

    (1/pi) int_0^pi e^{z(cos t - 1)} cos(nu t) dt
      - (sin(nu pi)/pi) int_0^inf e^{-z(cosh t + 1) - nu t} dt
    """
    first, _ = integrate(
        lambda t: np.exp(z * (np.cos(t) - 1.0)) * np.cos(nu * t),
        0.0, math.pi, abs_tol=1e-15, rel_tol=1e-12,
        initial_panels=max(1, int(math.ceil(nu / 2.0))),
    )
    first /= math.pi
    s = math.sin(nu * math.pi)
    if nu == math.floor(nu) or s == 0.0:
        return first
    # unscaled integrand e^{-z cosh t - nu t}; stop where it is below 1e-18
    cutoff = 18.0 * math.log(10.0)
    if z >= cutoff:
        return first
    t_max = 1.0
    while z * math.cosh(t_max) + nu * t_max < cutoff:
        t_max *= 2.0
    second, _ = integrate(
        lambda t: np.exp(-z * (np.cosh(t) + 1.0) - nu * t),
        0.0, t_max, abs_tol=1e-30, rel_tol=1e-12,
    )
    return first - s / math.pi * second


def _i_nu_scaled_scalar(nu, z):
    if not (math.isfinite(nu) and math.isfinite(z)):
        raise ValueError("nu and z must be finite")
    if nu < 0:
        raise ValueError("negative order is out of scope (nu must be >= 0)")
    if z < 0:
        raise ValueError("bessel_i_nu is defined here for z >= 0 only")
    if z <= I_NU_SERIES_MAX:
        return _i_nu_series_scaled(nu, z)
    return _i_nu_integral_scaled(nu, z)


def bessel_i_nu_scaled(nu, z):
    """e^{-z} I_nu(z); broadcasts over ``nu`` and ``z``."""
    nu_a, z_a = np.broadcast_arrays(np.asarray(nu, float), np.asarray(z, float))
    out = np.array([_i_nu_scaled_scalar(n, x)
                    for n, x in zip(nu_a.ravel(), z_a.ravel())])
    if nu_a.ndim == 0:
        return float(out[0])
    return out.reshape(nu_a.shape)


def bessel_i_nu(nu, z):
    r"""Modified Bessel function of the first kind of real order nu >= 0.

    For ``z <= I_NU_SERIES_MAX`` the ascending series
    :math:`\sum_k (z/2)^{2k+\nu} / (k!\,\Gamma(k+\nu+1))` is summed (every
    term positive, so it keeps full relative accuracy even when
    :math:`I_\nu(z)` is many orders of magnitude below :math:`I_0(z)`).
    Larger arguments use the integral representation with adaptive
    Gauss-Kronrod quadrature.
    """
    scaled = bessel_i_nu_scaled(nu, z)
    with np.errstate(over="ignore"):
        out = np.asarray(scaled) * np.exp(np.asarray(z, float))
    if np.ndim(out) == 0:
        return float(out)
    return out


def asinc(M, omega):
    """Unnormalized aliased sinc sin(M w / 2) / sin(w / 2).

    The removable singularities at w = 2 pi m are filled with their limit
    M (-1)^{m (M - 1)}, so ``asinc(M, 0) == M``.
    """
    if int(M) != M or M < 1:
        raise ValueError("M must be a positive integer")
    M = int(M)
    w = np.asarray(omega, dtype=float)
    _check_finite(w, "omega")
    m = np.round(w / (2.0 * np.pi))
    delta = w - 2.0 * np.pi * m
    sign = np.where((m.astype(np.int64) * (M - 1)) % 2 == 0, 1.0, -1.0)
    den = np.sin(0.5 * delta)
    out = np.full_like(w, float(M))
    nz = den != 0.0
    out[nz] = np.sin(0.5 * M * delta[nz]) / den[nz]
    out = sign * out
    return _scalar_or_array(out, omega)
