"""Kernel selection: compiled extension when available, pure Python otherwise.

Set VNCORE_PURE=1 to force the Python fallback (used by the benchmark and
for debugging).
"""

import os

if os.environ.get("VNCORE_PURE") == "1":
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

matmul = _impl.matmul
kron = _impl.kron
BACKEND = _impl.BACKEND
