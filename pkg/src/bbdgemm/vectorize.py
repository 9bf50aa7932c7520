"""Portable batch-loop acceleration hint for generated kernels.

Generated kernels carry a single loop over the batch index with a fully
unrolled body.  :func:`vectorize_batch_loop` is the source-level hint placed
on that loop's function: when the optional JIT backend (numba) is installed
and enabled, the loop is compiled so the backend's auto-vectorizer can turn
the batch dimension into vector lanes; when the backend is missing, the hint
is simply ignored and the plain interpreted loop runs with identical
results.  There is no architecture-specific code on either path.

Calling the decorated kernel never changes numerics: both paths execute the
same statements in the same order on IEEE doubles.
"""

from __future__ import annotations

import functools
import inspect
import os
import threading
from contextlib import contextmanager

import numpy as np

from .core import AccessKind, matrix_span, parse_kernel_name

try:  # the JIT backend is optional; everything works without it
    import numba
except ImportError:  # pragma: no cover - exercised only on numba-free installs
    numba = None

__all__ = [
    "jit_available",
    "jit_env_allowed",
    "jit_enabled",
    "enable_jit",
    "use_jit",
    "jit_compile",
    "vectorize_batch_loop",
]

_override: bool | None = None


def jit_available() -> bool:
    """True when the optional JIT backend is importable."""
    return numba is not None


def jit_env_allowed() -> bool:
    """True unless ``BBDGEMM_JIT`` turns compilation off for the process.

    This is the master switch: when false, neither generated kernels nor the
    reference oracle's compiled twin are used.
    """
    value = os.environ.get("BBDGEMM_JIT", "").strip().lower()
    if value in ("0", "off", "false", "no"):
        return False
    return numba is not None


def jit_enabled() -> bool:
    """True when decorated kernels will run through the JIT backend.

    Runtime toggles (:func:`enable_jit`, :func:`use_jit`) only affect the
    generated kernels; they deliberately leave the oracle untouched so the
    two sides of an equivalence check never share a switch.
    """
    if _override is not None:
        return _override and jit_env_allowed()
    return jit_env_allowed()


def enable_jit(on: bool | None) -> None:
    """Force the JIT path on/off; ``None`` restores the default."""
    global _override
    _override = on


@contextmanager
def use_jit(on: bool):
    """Temporarily force the JIT path on or off."""
    global _override
    previous = _override
    _override = on
    try:
        yield
    finally:
        _override = previous


def jit_compile(fn):
    """Compile *fn* with the JIT backend, caching to disk when possible.

    Returns *fn* unchanged when the backend is unavailable.
    """
    if numba is None:
        return fn
    cache = False
    try:
        source = inspect.getsourcefile(fn)
        cache = bool(source) and os.path.exists(source)
    except TypeError:
        cache = False
    return numba.njit(cache=cache)(fn)


def _as_scalar_view(buffer):
    # memoryview indexing hands back plain floats, which the interpreted
    # loop processes noticeably faster than numpy scalars.
    if isinstance(buffer, np.ndarray) and buffer.dtype == np.float64:
        return memoryview(buffer)
    return buffer


def _interp_arg(payload, kind: AccessKind):
    if kind is AccessKind.Indexed:
        if isinstance(payload, (list, tuple)):
            return [_as_scalar_view(entry) for entry in payload]
        return payload
    return _as_scalar_view(payload)


def _gather(table, E: int, span: int) -> np.ndarray:
    return np.stack([np.asarray(table[e], dtype=np.float64)[:span] for e in range(E)])


def _jit_ready(payload) -> bool:
    return (
        isinstance(payload, np.ndarray)
        and payload.dtype == np.float64
        and payload.ndim == 1
        and payload.flags.c_contiguous
    )


def vectorize_batch_loop(name: str):
    """Decorator marking a generated kernel's batch loop for acceleration.

    *name* must be the kernel's own canonical name; the operand roles needed
    to stage pointer-table arguments for the JIT backend are recovered from
    it.  Without the backend the decorated function behaves exactly like the
    undecorated one (apart from the E == 0 early-out, which touches no
    memory on any path).
    """
    spec = parse_kernel_name(name)
    kinds = (spec.access_a, spec.access_b, spec.access_c)

    def decorate(py_fn):
        compiled = []
        compile_lock = threading.Lock()

        def jitted():
            with compile_lock:
                if not compiled:
                    compiled.append(jit_compile(py_fn))
            return compiled[0]

        @functools.wraps(py_fn)
        def wrapper(E, alpha, A, lda, B, ldb, beta, C, ldc):
            if E == 0:
                return
            if jit_enabled() and _try_jit(E, alpha, A, lda, B, ldb, beta, C, ldc):
                return
            py_fn(
                E,
                alpha,
                _interp_arg(A, kinds[0]),
                lda,
                _interp_arg(B, kinds[1]),
                ldb,
                beta,
                _interp_arg(C, kinds[2]),
                ldc,
            )

        def _try_jit(E, alpha, A, lda, B, ldb, beta, C, ldc) -> bool:
            payloads = []
            scatter = []
            for which, payload, ld, kind in zip("ABC", (A, B, C), (lda, ldb, ldc), kinds):
                span = matrix_span(spec, which, ld)
                if kind is AccessKind.Indexed:
                    # Pointer tables become a dense (E, span) staging array;
                    # row e is batch element e, so table[e][idx] still holds.
                    try:
                        staged = _gather(payload, E, span)
                    except (TypeError, ValueError, IndexError):
                        return False
                    payloads.append(staged)
                    if which == "C":
                        scatter.append((payload, staged, span))
                else:
                    if not _jit_ready(payload):
                        return False
                    payloads.append(payload)
            jit_fn = jitted()
            if jit_fn is py_fn:  # backend unavailable after all
                return False
            jit_fn(
                int(E),
                float(alpha),
                payloads[0],
                int(lda),
                payloads[1],
                int(ldb),
                float(beta),
                payloads[2],
                int(ldc),
            )
            for table, staged, span in scatter:
                for e in range(E):
                    table[e][:span] = staged[e]
            return True

        wrapper.__wrapped__ = py_fn
        wrapper.spec = spec
        wrapper.kernel_name = name
        return wrapper

    return decorate
