import pytest

from powersieve import _backend

BACKENDS = ["numpy"] + (["numba"] if _backend.numba_available() else [])


@pytest.fixture(params=BACKENDS)
def backend(request, monkeypatch):
    """Run a test once per kernel backend."""
    monkeypatch.setenv("POWERSIEVE_BACKEND", request.param)
    return request.param
