"""Kernel backend selection.

The compiled extension ``quolat._fast`` is preferred when it was built;
otherwise the pure-Python twin ``quolat._pure`` is used.  Setting the
environment variable ``QUOLAT_PURE=1`` forces the pure backend.  Both expose
the same functions with identical semantics and discovery order.
"""

from __future__ import annotations

import os

from quolat._pure import (  # noqa: F401  (shared constants and error type)
    STOP_BUDGET,
    STOP_REASONS,
    STOP_SATURATED,
    STOP_TARGET,
    CapacityError,
)

if os.environ.get("QUOLAT_PURE"):
    from quolat import _pure as _impl
else:
    try:
        from quolat import _fast as _impl  # type: ignore[attr-defined]
    except ImportError:
        from quolat import _pure as _impl

BACKEND = "pure" if _impl.__name__.endswith("_pure") else "compiled"

transitive_closure = _impl.transitive_closure
join_rows = _impl.join_rows
meet_rows = _impl.meet_rows
is_transitive = _impl.is_transitive
saturate_join = _impl.saturate_join
pair_closure = _impl.pair_closure
table_closure = _impl.table_closure
canonical_subset = _impl.canonical_subset
