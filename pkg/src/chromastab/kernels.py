"""Backend selection for the bitmask kernels.

The compiled ``_ckernels`` extension is used when importable; setting
``CHROMASTAB_PURE_PYTHON=1`` forces the pure-Python mirror.
"""

from __future__ import annotations

import os

if os.environ.get("CHROMASTAB_PURE_PYTHON", "") not in ("", "0"):
    from . import _pykernels as backend
else:
    try:
        from . import _ckernels as backend
    except ImportError:  # extension not built
        from . import _pykernels as backend

BACKEND = backend.NAME

is_bipartite = backend.is_bipartite
shortest_odd_cycle = backend.shortest_odd_cycle
odd_cycle_packing = backend.odd_cycle_packing
frustration = backend.frustration
min_mono_partition = backend.min_mono_partition
k_coloring = backend.k_coloring
chromatic_number = backend.chromatic_number
cycle_census = backend.cycle_census
canonical_labeling = backend.canonical_labeling
fast32_conditions = backend.fast32_conditions


def available_backends():
    """Kernel modules importable in this environment, compiled first."""
    from . import _pykernels

    mods = []
    try:
        from . import _ckernels

        mods.append(_ckernels)
    except ImportError:
        pass
    mods.append(_pykernels)
    return mods
