"""von Mises (circular normal) tapering windows.

Windows, their spectra (numeric and analytic), figures of merit and
window-method FIR low-pass design.
"""

__version__ = "0.1.0"

from vmtaper._backend import NAME as backend  # noqa: E402
from vmtaper.windows import (  # noqa: E402
    CosineAlpha,
    Kaiser,
    Rectangular,
    SampledWindow,
    VonMises,
    WindowSpec,
    eval_continuous,
    hamming,
    hann,
    sample,
    to_causal,
)
