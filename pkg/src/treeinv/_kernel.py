"""Enumeration-kernel selection.

Imports the compiled kernel when it is built and usable, otherwise the
pure-Python twin.  Setting TREEINV_PURE=1 forces the pure kernel; both
produce identical output, so the choice is purely about speed.
"""

from __future__ import annotations

import os

if os.environ.get("TREEINV_PURE") == "1":
    from treeinv import _treecore_py as _impl

    BACKEND = "pure"
else:
    try:
        from treeinv import _treecore as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from treeinv import _treecore_py as _impl  # type: ignore[no-redef]

        BACKEND = "pure"

decode_parents = _impl.decode_parents
labeled_shape_census = _impl.labeled_shape_census
