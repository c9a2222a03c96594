"""Compiled kernels versus the numpy fallback.

    python benchmarks/bench_backends.py [--repeat 3]

Times ``dtft_direct`` and ``window_ft`` on the grids the library uses by
default and checks that both backends agree.
"""

import argparse
import time

import numpy as np

from vmtaper import _backend, _fallback
from vmtaper.spectra import DEFAULT_CONTINUOUS_POINTS, DEFAULT_DTFT_POINTS, continuous_grid, dtft_grid
from vmtaper.windows import CosineAlpha, Kaiser, Rectangular, VonMises, WindowSpec, sample

CASES = [Rectangular(), CosineAlpha(0.5), Kaiser(5.0), VonMises(5.0)]


def best_of(fn, repeat):
    best = np.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--n", type=int, default=64, help="window N for the DTFT case")
    args = parser.parse_args(argv)

    if not _backend.COMPILED:
        print("compiled extension not available; only the fallback can be timed")
    backends = [("compiled", _backend.kernels)] if _backend.COMPILED else []
    backends.append(("fallback", _fallback))

    print(f"{'kernel':<12}{'window':<18}" + "".join(f"{n:>12}" for n, _ in backends)
          + f"{'speed-up':>10}{'max diff':>11}")
    omega = dtft_grid(DEFAULT_DTFT_POINTS).points
    for fam in CASES:
        w = sample(WindowSpec(fam, args.n))
        times, outs = [], []
        for _, k in backends:
            t, out = best_of(lambda k=k: k.dtft_direct(w.first_index, w.coefficients, omega),
                             args.repeat)
            times.append(t)
            outs.append(out)
        _row("dtft_direct", fam, times, outs)

    N = 16
    cw = continuous_grid(N, DEFAULT_CONTINUOUS_POINTS).points
    for fam in CASES:
        lo, hi = WindowSpec(fam, N).support
        call = (fam.code, float(fam.param), N, lo, hi, cw, 1e-10, 1e-10, 30)
        times, outs = [], []
        for _, k in backends:
            t, out = best_of(lambda k=k: k.window_ft(*call), args.repeat)
            times.append(t)
            outs.append(out)
        _row("window_ft", fam, times, outs)


def _row(kernel, fam, times, outs):
    label = f"{fam.name}({fam.label()})" if fam.label() else fam.name
    cells = "".join(f"{t * 1e3:>10.2f}ms" for t in times)
    if len(times) == 2:
        extra = f"{times[1] / times[0]:>9.1f}x{np.max(np.abs(outs[0] - outs[1])):>11.1e}"
    else:
        extra = ""
    print(f"{kernel:<12}{label:<18}{cells}{extra}")


if __name__ == "__main__":
    main()
