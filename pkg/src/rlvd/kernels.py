"""Kernel backend selection.

Prefers the compiled extension; falls back to the pure-Python twin when the
extension is unavailable or `RLVD_PURE_KERNELS=1` is set. Both expose the
same functions with identical behaviour.
"""

import os

if os.environ.get("RLVD_PURE_KERNELS") == "1":
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl


def backend_name() -> str:
    return _impl.BACKEND


is_independent_set = _impl.is_independent_set
is_clique_set = _impl.is_clique_set
two_color = _impl.two_color
is_bipartite = _impl.is_bipartite
co_two_color = _impl.co_two_color
is_co_bipartite = _impl.is_co_bipartite
reachable = _impl.reachable
components = _impl.components
rl_label = _impl.rl_label
coarse_splits_22 = _impl.coarse_splits_22
oct_solve = _impl.oct_solve
canonical_form = _impl.canonical_form
