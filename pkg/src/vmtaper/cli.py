"""``vmtaper`` command line: window, spectrum, validate, compare, fir, dist.

Exit codes: 0 success, 1 validation failure, 2 usage error.
"""

import argparse
import math
import sys

import numpy as np

from vmtaper import __version__, fir, spectra
from vmtaper.distribution import VonMisesParams, gaussian_pdf, vm_circular_variance, vm_pdf
from vmtaper.metrics import metric_table
from vmtaper.tables import Table, render, spectrum_table, window_table
from vmtaper.validation import run_validation
from vmtaper.windows import (
    CosineAlpha,
    Kaiser,
    Rectangular,
    VonMises,
    WindowSpec,
    sample,
)

FAMILIES = ("rect", "cosine", "hann", "hamming", "kaiser", "vonmises")
METHODS = ("numeric", "analytic", "series", "closed-form")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def make_family(name, alpha=None, beta=None):
    if name == "rect":
        return Rectangular()
    if name == "hann":
        return CosineAlpha(0.5)
    if name == "hamming":
        return CosineAlpha(0.54)
    if name == "cosine":
        if alpha is None:
            raise UsageError("--alpha is required for the cosine family")
        return CosineAlpha(alpha)
    if beta is None:
        raise UsageError(f"--beta is required for the {name} family")
    if beta < 0:
        raise UsageError("beta must be >= 0")
    return Kaiser(beta) if name == "kaiser" else VonMises(beta)


def parse_spec_string(text):
    """``family[:param]:N``, e.g. ``rect:64``, ``kaiser:5:64``, ``cosine:0.25:32``."""
    parts = text.split(":")
    name = parts[0]
    if name not in FAMILIES:
        raise UsageError(f"unknown window family {name!r} in {text!r}")
    needs_param = name in ("cosine", "kaiser", "vonmises")
    if len(parts) != (3 if needs_param else 2):
        raise UsageError(f"bad window spec {text!r}; expected family[:param]:N")
    try:
        N = int(parts[-1])
        param = float(parts[1]) if needs_param else None
    except ValueError:
        raise UsageError(f"bad number in window spec {text!r}") from None
    family = make_family(name, alpha=param, beta=param)
    return WindowSpec(family, N)


def _add_window_flags(p, require_n=True):
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--alpha", type=float)
    p.add_argument("--beta", type=float)
    p.add_argument("--n", type=int, required=require_n, help="support length (even); N+1 taps")
    p.add_argument("--causal", action="store_true")


def _add_output_flags(p):
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output", "-o", help="output file (default: stdout)")


def _window_spec(args, n=None):
    family = make_family(args.family, args.alpha, args.beta)
    return WindowSpec(family, args.n if n is None else n, getattr(args, "causal", False))


def build_parser():
    parser = _Parser(prog="vmtaper", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"vmtaper {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("window", help="window coefficients")
    _add_window_flags(p)
    _add_output_flags(p)

    p = sub.add_parser("spectrum", help="window spectrum on a frequency grid")
    _add_window_flags(p)
    p.add_argument("--method", choices=METHODS, default="numeric")
    p.add_argument("--domain", choices=("dtft", "continuous"), default="dtft")
    p.add_argument("--points", type=int)
    p.add_argument("--eps", type=float, default=1e-14, help="series truncation")
    _add_output_flags(p)

    p = sub.add_parser("validate", help="analytic spectra against numeric references")
    p.add_argument("--strict", action="store_true", help="INFO rows count as failures")
    p.add_argument("--points", type=int, default=spectra.DEFAULT_DTFT_POINTS,
                   help="DTFT grid size")
    p.add_argument("--continuous-points", type=int, default=257)
    _add_output_flags(p)

    p = sub.add_parser("compare", help="figures of merit for several windows")
    p.add_argument("--specs", nargs="+", required=True, metavar="FAMILY[:PARAM]:N")
    p.add_argument("--oversample", type=int, default=64)
    _add_output_flags(p)

    p = sub.add_parser("fir", help="window-method low-pass FIR design")
    p.add_argument("--wc", type=float, required=True, help="cutoff, rad/sample")
    _add_window_flags(p)
    p.add_argument("--points", type=int, default=4096, help="response grid size")
    p.add_argument("--response", help="also write the frequency response here")
    _add_output_flags(p)

    p = sub.add_parser("dist", help="von Mises density on [-pi, pi]")
    p.add_argument("--kappa", type=float, required=True)
    p.add_argument("--mu", type=float, default=0.0)
    p.add_argument("--points", type=int, default=361)
    _add_output_flags(p)
    return parser


def _spectrum(spec, method, domain, points, eps):
    if domain == "dtft":
        grid = spectra.dtft_grid(points or spectra.DEFAULT_DTFT_POINTS)
        if method == "numeric":
            return spectra.dtft(sample(spec), grid)
        if method == "closed-form":
            raise UsageError("closed-form applies to the continuous domain only")
        if method == "series" and not isinstance(spec.family, VonMises):
            raise UsageError("series applies to the vonmises family only")
        if isinstance(spec.family, Kaiser):
            raise UsageError("no discrete closed form for kaiser; use --method numeric")
        return spectra.analytic_dtft(spec, grid, eps)
    grid = spectra.continuous_grid(spec.N, points or spectra.DEFAULT_CONTINUOUS_POINTS)
    if method == "numeric":
        return spectra.continuous_ft(spec, grid)
    if method == "analytic":
        return spectra.analytic_continuous(spec, grid, eps)
    if method == "series":
        if not isinstance(spec.family, VonMises):
            raise UsageError("series applies to the vonmises family only")
        return spectra.vonmises_continuous_series(spec, grid, eps)
    if isinstance(spec.family, VonMises):
        return spectra.vonmises_continuous_closed_form(spec, grid)
    if isinstance(spec.family, Kaiser):
        return spectra.kaiser_continuous_closed_form(spec, grid)
    raise UsageError("closed-form exists for the vonmises and kaiser families only")


def cmd_window(args):
    return [window_table(sample(_window_spec(args)))], 0


def cmd_spectrum(args):
    if args.points is not None and args.points < 1:
        raise UsageError("--points must be >= 1")
    spec = _window_spec(args)
    s = _spectrum(spec, args.method, args.domain, args.points, args.eps)
    table = spectrum_table(s)
    table.meta = {"method": args.method, "domain": args.domain}
    return [table], 0


def cmd_validate(args):
    checks = run_validation(args.points, args.continuous_points)
    rows = [(c.name, c.params, c.metric, c.value, c.tolerance, c.kind,
             c.status(args.strict)) for c in checks]
    table = Table(["check", "params", "metric", "value", "tolerance", "kind", "status"],
                  rows, name="validation")
    ok = all(c.passed(args.strict) for c in checks)
    return [table], 0 if ok else 1


def cmd_compare(args):
    specs = [parse_spec_string(s) for s in args.specs]
    rows = []
    for spec, m in metric_table(specs, args.oversample):
        rows.append((spec.family.name, spec.family.label(), spec.N, m.coherent_gain,
                     m.enbw_bins, m.highest_sidelobe_db, m.mainlobe_width_3db_bins,
                     m.scalloping_loss_db))
    cols = ["family", "params", "N", "coherent_gain", "enbw_bins", "hsl_db",
            "w3db_bins", "scallop_db"]
    return [Table(cols, rows, name="metrics")], 0


def cmd_fir(args):
    if args.causal:
        raise UsageError("fir designs centred filters; --causal is not accepted")
    lp = fir.LowpassSpec(args.wc, args.n)
    f = fir.design(lp, _window_spec(args))
    report = fir.response_report(f, lp, args.points)
    taps = Table(["index", "tap"], zip(f.indices.tolist(), f.taps.tolist()), name="taps")
    rep = Table(
        ["passband_ripple_db", "stopband_attenuation_db", "transition_width",
         "passband_edge", "stopband_edge"],
        [(report.passband_ripple_db, report.stopband_attenuation_db,
          report.transition_width, report.passband_edge, report.stopband_edge)],
        name="report",
    )
    extra = None
    if args.response:
        grid = spectra.dtft_grid(args.points + 1 if args.points % 2 == 0 else args.points)
        extra = [spectrum_table(fir.frequency_response(f, grid))]
    return [taps, rep], 0, extra


def cmd_dist(args):
    if args.points < 2:
        raise UsageError("--points must be >= 2")
    params = VonMisesParams(args.mu, args.kappa)
    x = np.linspace(-math.pi, math.pi, args.points)
    pdf = vm_pdf(x, params)
    cols = ["x", "pdf"]
    rows = [x, pdf]
    if params.kappa > 0:
        cols.append("gaussian_limit")
        rows.append(gaussian_pdf(x - params.mu, 1.0 / params.kappa))
    table = Table(cols, zip(*rows), name="density",
                  meta={"circular_variance": vm_circular_variance(params)})
    return [table], 0


COMMANDS = {
    "window": cmd_window,
    "spectrum": cmd_spectrum,
    "validate": cmd_validate,
    "compare": cmd_compare,
    "fir": cmd_fir,
    "dist": cmd_dist,
}


def _emit(text, path):
    if path:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        result = COMMANDS[args.command](args)
    except (UsageError, ValueError) as exc:
        print(f"vmtaper: error: {exc}", file=sys.stderr)
        return 2
    tables, code = result[0], result[1]
    generated_by = f"vmtaper {__version__}: vmtaper {' '.join(argv)}"
    _emit(render(tables, generated_by, args.format), args.output)
    if len(result) > 2 and result[2]:
        _emit(render(result[2], generated_by, args.format), args.response)
    return code


if __name__ == "__main__":
    sys.exit(main())
