import pytest

from vmtaper import _backend, _fallback


@pytest.fixture(params=["default", "python"])
def kernels(request, monkeypatch):
    """Run a test against the selected backend and the pure-Python fallback."""
    if request.param == "python":
        import vmtaper.fir
        import vmtaper.spectra

        monkeypatch.setattr(vmtaper.spectra, "kernels", _fallback)
        monkeypatch.setattr(vmtaper.fir, "kernels", _fallback)
        return _fallback
    return _backend.kernels
