"""Python bindings for the greedy-approximation laboratory.

The compiled extension normally sits next to this file (installed layout).
For in-tree test runs the build directory can be pointed to with the
GREEDYLAB_CORE_DIR environment variable.
"""

import os
import sys

_core_dir = os.environ.get("GREEDYLAB_CORE_DIR")
if _core_dir and _core_dir not in sys.path:
    sys.path.insert(0, _core_dir)

try:
    from _core import *  # type: ignore  # noqa: F401,F403  (in-tree layout)
    from _core import __doc__ as _core_doc  # type: ignore
except ImportError:
    from ._core import *  # type: ignore  # noqa: F401,F403
    from ._core import __doc__ as _core_doc  # type: ignore

__doc__ = (__doc__ or "") + "\n\n" + (_core_doc or "")
