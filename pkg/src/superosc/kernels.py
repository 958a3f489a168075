"""Kernel backend selection.

The package ships the hot loops twice: :mod:`superosc._kernels` is the
pure-Python copy, and ``superosc._ckernels`` is the same source compiled
to a C extension at install time (see ``setup.py``).  The compiled copy
is preferred when importable; setting the environment variable
``SUPEROSC_PURE_PYTHON=1`` forces the interpreted one.  Both backends
produce bit-identical results; ``benchmarks/bench_kernels.py`` compares
their speed.
"""

import os

if os.environ.get("SUPEROSC_PURE_PYTHON"):
    from . import _kernels as _impl
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels as _impl


def backend_name():
    """Either ``"compiled"`` or ``"pure-python"``."""
    return "compiled" if _impl.__name__.endswith("_ckernels") else "pure-python"


dot = _impl.dot
norm2 = _impl.norm2
mat_vec = _impl.mat_vec
mat_mul = _impl.mat_mul
cholesky_factor = _impl.cholesky_factor
cholesky_solve_factored = _impl.cholesky_solve_factored
jacobi_eigen = _impl.jacobi_eigen
