"""Kernel backend selection.

Hot inner loops exist twice: a numba @njit version and a pure-numpy
fallback.  POWERSIEVE_BACKEND picks one:

    unset / "auto"  use numba when importable, numpy otherwise
    "numba"         require numba, fail loudly if missing
    "numpy"         force the pure-numpy path

POWERSIEVE_THREADS caps numba's thread pool (0 or unset = numba default).
The environment is re-read on every call so tests can flip it.
"""

import os

BACKEND_ENV = "POWERSIEVE_BACKEND"
THREADS_ENV = "POWERSIEVE_THREADS"

_numba_import_ok: bool | None = None


def numba_available() -> bool:
    global _numba_import_ok
    if _numba_import_ok is None:
        try:
            import numba  # noqa: F401

            _numba_import_ok = True
        except ImportError:
            _numba_import_ok = False
    return _numba_import_ok


def selected() -> str:
    """Return the active backend name, "numba" or "numpy"."""
    mode = os.environ.get(BACKEND_ENV, "auto").strip().lower()
    if mode in ("", "auto"):
        return "numba" if numba_available() else "numpy"
    if mode == "numba":
        if not numba_available():
            raise RuntimeError(f"{BACKEND_ENV}=numba but numba is not importable")
        return "numba"
    if mode == "numpy":
        return "numpy"
    raise ValueError(f"unknown {BACKEND_ENV}={mode!r}; expected auto, numba or numpy")


def use_numba() -> bool:
    return selected() == "numba"


def thread_cap() -> int:
    """Configured thread cap; 0 means leave numba's default alone."""
    raw = os.environ.get(THREADS_ENV, "0").strip()
    try:
        n = int(raw) if raw else 0
    except ValueError as exc:
        raise ValueError(f"{THREADS_ENV} must be an integer, got {raw!r}") from exc
    return max(n, 0)


def apply_thread_cap() -> None:
    """Apply POWERSIEVE_THREADS to numba, if both are in play."""
    n = thread_cap()
    if n > 0 and numba_available():
        import numba

        numba.set_num_threads(min(n, numba.config.NUMBA_NUM_THREADS))


def kernels():
    """Import and return the kernel module for the active backend."""
    if use_numba():
        apply_thread_cap()
        from . import _kernels_nb

        return _kernels_nb
    from . import _kernels_np

    return _kernels_np
