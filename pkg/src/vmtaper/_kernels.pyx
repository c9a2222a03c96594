# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: direct DTFT summation and adaptive Gauss-Kronrod window
Fourier transforms.  Same signatures and semantics as ``_fallback``."""

import numpy as np
cimport numpy as cnp
from libc.math cimport sin, cos, exp, sqrt, fabs, ceil, M_PI

cnp.import_array()

cdef enum:
    MAX_STACK = 128

cdef double XGK[8]
cdef double WGK[8]
cdef double WG[4]

XGK[:] = [0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
          0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
          0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
          0.207784955007898467600689403773245, 0.0]
WGK[:] = [0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
          0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
          0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
          0.204432940075298892414161999234649, 0.209482141084727828012999174891714]
WG[:] = [0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
         0.381830050505118944950369775488975, 0.417959183673469387755102040816327]


def dtft_direct(long first_index, coeffs, omegas):
    """sum_n w[n] e^{-j n omega}, summed in ascending n for every omega."""
    cdef const double[::1] c = np.ascontiguousarray(coeffs, dtype=np.float64)
    cdef const double[::1] w = np.ascontiguousarray(omegas, dtype=np.float64)
    cdef Py_ssize_t nw = w.shape[0], nc = c.shape[0], i, k
    out = np.empty(nw, dtype=np.complex128)
    cdef double complex[::1] o = out
    cdef double re, im, x, n
    for i in range(nw):
        re = 0.0
        im = 0.0
        for k in range(nc):
            n = <double>(first_index + k)
            x = n * w[i]
            re += c[k] * cos(x)
            im -= c[k] * sin(x)
        o[i] = re + 1j * im
    return out


cdef double _i0e(double z) nogil:
    cdef double q, term, total, t
    cdef int n, k
    if z <= 30.0:
        q = 0.25 * z * z
        term = 1.0
        total = 1.0
        for n in range(1, 501):
            term = term * q / (<double>n * n)
            total += term
            if term <= 1e-16 * total:
                break
        return total * exp(-z)
    total = 1.0
    term = 1.0
    for k in range(1, 60):
        term = term * (2.0 * k - 1.0) * (2.0 * k - 1.0) / (8.0 * k * z)
        total += term
        if term <= 1e-16 * total:
            break
    return total / sqrt(2.0 * M_PI * z)


cdef inline double _shape(int code, double param, double i0e_param,
                          double N, double u) nogil:
    cdef double x, arg
    u = fabs(u)
    if code == 0:
        return 1.0
    if code == 1:
        return 1.0 - (1.0 - param) * (1.0 - cos(2.0 * M_PI * u / N))
    if code == 2:
        x = u / (N / 2.0)
        x = 1.0 - x * x
        if x < 0.0:
            x = 0.0
        arg = param * sqrt(x)
        return _i0e(arg) / i0e_param * exp(arg - param)
    return exp(param * (cos(M_PI * u / N) - 1.0))


cdef void _gk15(int code, double param, double i0e_param, double N,
                double centre, double omega, double a, double b,
                double *kre, double *kim, double *err) nogil:
    cdef double half = 0.5 * (b - a), mid = 0.5 * (a + b)
    cdef double kr = 0.0, ki = 0.0, gr = 0.0, gi = 0.0
    cdef double t, f, fr, fi, dt
    cdef int j
    for j in range(8):
        if j == 7:
            t = mid
            f = _shape(code, param, i0e_param, N, t - centre)
            fr = f * cos(omega * t)
            fi = -f * sin(omega * t)
            kr += WGK[7] * fr
            ki += WGK[7] * fi
            gr += WG[3] * fr
            gi += WG[3] * fi
        else:
            dt = half * XGK[j]
            t = mid - dt
            f = _shape(code, param, i0e_param, N, t - centre)
            fr = f * cos(omega * t)
            fi = -f * sin(omega * t)
            t = mid + dt
            f = _shape(code, param, i0e_param, N, t - centre)
            fr += f * cos(omega * t)
            fi += -f * sin(omega * t)
            kr += WGK[j] * fr
            ki += WGK[j] * fi
            if j % 2 == 1:
                gr += WG[j // 2] * fr
                gi += WG[j // 2] * fi
    kre[0] = half * kr
    kim[0] = half * ki
    err[0] = half * sqrt((kr - gr) * (kr - gr) + (ki - gi) * (ki - gi))


def window_ft(int code, double param, long N, double lo, double hi,
              omegas, double abs_tol=1e-10, double rel_tol=1e-10,
              int max_depth=30):
    """Continuous Fourier transform of a window over its support [lo, hi].

    Depth-first adaptive bisection; each interval must meet its width share
    of max(abs_tol, rel_tol |estimate|).
    """
    cdef const double[::1] w = np.ascontiguousarray(omegas, dtype=np.float64)
    cdef Py_ssize_t nw = w.shape[0], i
    out = np.empty(nw, dtype=np.complex128)
    cdef double complex[::1] o = out
    cdef double Nd = <double>N
    cdef double centre = 0.5 * (lo + hi)
    cdef double width = hi - lo
    cdef double i0e_param = _i0e(param) if code == 2 else 1.0
    cdef double sa[MAX_STACK]
    cdef double sb[MAX_STACK]
    cdef int sd[MAX_STACK]
    cdef int top, depth, p, panels
    cdef double omega, a, b, m, kr, ki, er, tr, ti, tol, est_r, est_i
    with nogil:
        for i in range(nw):
            omega = w[i]
            panels = <int>ceil(fabs(omega) * width / (2.0 * M_PI))
            if panels < 1:
                panels = 1
            # coarse whole-range estimate sets the tolerance
            est_r = 0.0
            est_i = 0.0
            for p in range(panels):
                a = lo + width * p / panels
                b = lo + width * (p + 1) / panels
                _gk15(code, param, i0e_param, Nd, centre, omega, a, b, &kr, &ki, &er)
                est_r += kr
                est_i += ki
            tol = rel_tol * sqrt(est_r * est_r + est_i * est_i)
            if tol < abs_tol:
                tol = abs_tol
            tr = 0.0
            ti = 0.0
            for p in range(panels):
                top = 0
                sa[0] = lo + width * p / panels
                sb[0] = lo + width * (p + 1) / panels
                sd[0] = 0
                while top >= 0:
                    a = sa[top]
                    b = sb[top]
                    depth = sd[top]
                    top -= 1
                    _gk15(code, param, i0e_param, Nd, centre, omega, a, b, &kr, &ki, &er)
                    if er <= tol * (b - a) / width or depth >= max_depth or top + 2 >= MAX_STACK:
                        tr += kr
                        ti += ki
                    else:
                        m = 0.5 * (a + b)
                        top += 1
                        sa[top] = m
                        sb[top] = b
                        sd[top] = depth + 1
                        top += 1
                        sa[top] = a
                        sb[top] = m
                        sd[top] = depth + 1
            o[i] = tr + 1j * ti
    return out
