"""Hot-loop kernels: compiled core with a Python fallback, chosen at import.

The Cython extension (``native``) is preferred when it is built; otherwise
the numpy lane (``pyloops``) is used. Both lanes are integer-only and agree
exactly, so the selection never changes results, only speed.

Set FAREY_LT_BACKEND=python to force the fallback, or FAREY_LT_BACKEND=native
to insist on the extension (ImportError if it is missing).
"""

from __future__ import annotations

import importlib
import os

from . import pyloops

_requested = os.environ.get("FAREY_LT_BACKEND")

native = None
if _requested != "python":
    try:
        native = importlib.import_module(".native", __name__)
    except ImportError:
        if _requested == "native":
            raise ImportError(
                "FAREY_LT_BACKEND=native but the compiled kernels are not built; "
                "run 'pip install -e .' to build them"
            ) from None

_impl = native if native is not None else pyloops

BACKEND: str = "native" if native is not None else "python"

chi_table = _impl.chi_table
trace_batch = _impl.trace_batch
coprime_histogram = _impl.coprime_histogram
congruence_pair_counts = _impl.congruence_pair_counts
