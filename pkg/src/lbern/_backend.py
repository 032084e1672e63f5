"""Backend selection: compiled kernels when available, NumPy otherwise.

Set LB_BACKEND=python (or =cython) to force a backend; forcing cython raises
if the extension is missing rather than silently falling back.
"""

import os

_forced = os.environ.get("LB_BACKEND", "").strip().lower()

if _forced == "python":
    from . import _kernels_py as kernels
elif _forced == "cython":
    from . import _kernels as kernels  # type: ignore[no-redef]
else:
    try:
        from . import _kernels as kernels  # type: ignore[no-redef]
    except ImportError:
        from . import _kernels_py as kernels  # type: ignore[no-redef]

BACKEND = kernels.NAME

bernstein_row = kernels.bernstein_row
lambda_row = kernels.lambda_row
lambda_apply = kernels.lambda_apply
sup_abs_error = kernels.sup_abs_error
