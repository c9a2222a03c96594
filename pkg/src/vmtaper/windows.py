"""Window families in their four variants.

Every family is defined by a shape on the centred support ``|t| <= N/2``.
Continuous windows evaluate that shape at real ``t``; discrete windows sample
it at the integers, giving ``N + 1`` taps.  Causal variants shift the support
to ``[0, N]``.

>>> spec = WindowSpec(VonMises(5.0), 8)
>>> sample(spec).coefficients[4]
1.0
"""

import math
from dataclasses import dataclass
from typing import ClassVar, Union

import numpy as np

from vmtaper.special import bessel_i0e


def _check_param(value, name, lo, hi=math.inf):
    if not math.isfinite(value) or not lo <= value <= hi:
        bound = f"in [{lo}, {hi}]" if math.isfinite(hi) else f">= {lo}"
        raise ValueError(f"{name} must be {bound}")


@dataclass(frozen=True)
class Rectangular:
    code: ClassVar[int] = 0
    name: ClassVar[str] = "rect"

    @property
    def param(self):
        return 0.0

    def label(self):
        return ""


@dataclass(frozen=True)
class CosineAlpha:
    """alpha + (1 - alpha) cos(2 pi t / N); Hann is 0.5, Hamming 0.54."""

    alpha: float
    code: ClassVar[int] = 1
    name: ClassVar[str] = "cosine"

    def __post_init__(self):
        _check_param(self.alpha, "alpha", 0.0, 1.0)

    @property
    def param(self):
        return self.alpha

    def label(self):
        return f"alpha={self.alpha:g}"


@dataclass(frozen=True)
class Kaiser:
    beta: float
    code: ClassVar[int] = 2
    name: ClassVar[str] = "kaiser"

    def __post_init__(self):
        _check_param(self.beta, "beta", 0.0)

    @property
    def param(self):
        return self.beta

    def label(self):
        return f"beta={self.beta:g}"


@dataclass(frozen=True)
class VonMises:
    """Circular normal window e^{beta (cos(pi t / N) - 1)}."""

    beta: float
    code: ClassVar[int] = 3
    name: ClassVar[str] = "vonmises"

    def __post_init__(self):
        _check_param(self.beta, "beta", 0.0)

    @property
    def param(self):
        return self.beta

    def label(self):
        return f"beta={self.beta:g}"


WindowFamily = Union[Rectangular, CosineAlpha, Kaiser, VonMises]


def hann():
    return CosineAlpha(0.5)


def hamming():
    return CosineAlpha(0.54)


@dataclass(frozen=True)
class WindowSpec:
    family: WindowFamily
    N: int
    causal: bool = False

    def __post_init__(self):
        if isinstance(self.N, bool) or int(self.N) != self.N:
            raise ValueError("N must be an integer")
        if self.N < 2 or self.N % 2:
            raise ValueError("N must be an even integer >= 2")
        object.__setattr__(self, "N", int(self.N))

    @property
    def first_index(self):
        return 0 if self.causal else -self.N // 2

    @property
    def support(self):
        """Continuous support ``(lo, hi)``."""
        return (0.0, float(self.N)) if self.causal else (-self.N / 2, self.N / 2)

    def with_causal(self, causal=True):
        return WindowSpec(self.family, self.N, causal)


class SampledWindow:
    """Immutable tap sequence ``w[first_index], ..., w[first_index + N]``."""

    __slots__ = ("first_index", "coefficients")

    def __init__(self, first_index, coefficients):
        coeffs = np.array(coefficients, dtype=float)
        if coeffs.ndim != 1 or coeffs.size < 1:
            raise ValueError("coefficients must be a non-empty 1-D sequence")
        coeffs.setflags(write=False)
        object.__setattr__(self, "first_index", int(first_index))
        object.__setattr__(self, "coefficients", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("SampledWindow is immutable")

    @property
    def N(self):
        return self.coefficients.size - 1

    @property
    def indices(self):
        return np.arange(self.first_index, self.first_index + self.coefficients.size)

    @property
    def causal(self):
        return self.first_index == 0

    def __len__(self):
        return self.coefficients.size

    def __eq__(self, other):
        if not isinstance(other, SampledWindow):
            return NotImplemented
        return (self.first_index == other.first_index
                and np.array_equal(self.coefficients, other.coefficients))

    def __hash__(self):
        return hash((self.first_index, self.coefficients.tobytes()))

    def __repr__(self):
        return f"SampledWindow(first_index={self.first_index}, N={self.N})"


def shape(family, N, u):
    """Family shape at offsets ``u`` from the window centre (``|u| <= N/2``).

    The even symmetry is enforced by evaluating on ``|u|``.
    """
    u = np.abs(np.asarray(u, dtype=float))
    if isinstance(family, Rectangular):
        return np.ones_like(u)
    if isinstance(family, CosineAlpha):
        # written so that the centre value is exactly 1 for every alpha
        return 1.0 - (1.0 - family.alpha) * (1.0 - np.cos(2.0 * np.pi * u / N))
    if isinstance(family, Kaiser):
        b = family.beta
        x = u / (N / 2.0)
        arg = b * np.sqrt(np.clip(1.0 - x * x, 0.0, None))
        # I0(arg) / I0(b) through scaled values to avoid overflow at large beta
        return bessel_i0e(arg) / bessel_i0e(b) * np.exp(arg - b)
    if isinstance(family, VonMises):
        return np.exp(family.beta * (np.cos(np.pi * u / N) - 1.0))
    raise TypeError(f"unknown window family {family!r}")


def eval_continuous(spec, t):
    """Value of the continuous window at ``t`` (zero outside the support)."""
    t_arr = np.asarray(t, dtype=float)
    u = t_arr - spec.N / 2 if spec.causal else t_arr
    inside = np.abs(u) <= spec.N / 2
    out = np.zeros_like(u)
    out[inside] = shape(spec.family, spec.N, u[inside])
    if out.ndim == 0:
        return float(out)
    return out


def sample(spec):
    """Discrete window: ``N + 1`` taps, sampled at the integer indices."""
    if spec.N % 2:
        raise ValueError("N must be even")
    n = np.arange(spec.first_index, spec.first_index + spec.N + 1)
    return SampledWindow(spec.first_index, eval_continuous(spec, n))


def to_causal(w):
    """Shift a centred window to start at index 0 (no-op if already causal)."""
    if w.first_index == 0:
        return w
    if w.first_index != -(w.N // 2) or w.N % 2:
        raise ValueError("window is neither centred nor causal")
    return SampledWindow(0, w.coefficients)
