"""Build script: compiles the kernel module to a C extension when
Cython is available; the pure-Python copy remains the fallback.

The extension is produced from the same source file as the fallback
(`src/superosc/_kernels.py` is copied to `_ckernels.pyx` and
cythonized), so both backends run identical algorithms.
"""

import shutil
from pathlib import Path

from setuptools import setup

HERE = Path(__file__).resolve().parent
KERNELS = HERE / "src" / "superosc" / "_kernels.py"
PYX = HERE / "src" / "superosc" / "_ckernels.pyx"


def extension_modules():
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        return []
    source = KERNELS.read_text()
    if not PYX.exists() or PYX.read_text() != source:
        shutil.copyfile(KERNELS, PYX)
    try:
        return cythonize(
            [Extension("superosc._ckernels", [str(PYX.relative_to(HERE))])],
            language_level="3",
            quiet=True,
        )
    except Exception:
        return []


setup(ext_modules=extension_modules())
