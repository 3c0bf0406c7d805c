"""Kernel selection: compiled Cython backend when built, pure Python otherwise.

Set ``BIGRES_KERNEL=python`` or ``BIGRES_KERNEL=cython`` to force a backend
(the benchmark uses this); with ``cython`` forced, a missing extension is an
error instead of a silent fallback.
"""

import os

_forced = os.environ.get("BIGRES_KERNEL", "").strip().lower()

if _forced == "python":
    from . import _pykernel as impl
elif _forced == "cython":
    from . import _cykernel as impl  # type: ignore[no-redef]
else:
    try:
        from . import _cykernel as impl  # type: ignore[no-redef]
    except ImportError:
        from . import _pykernel as impl

BACKEND = impl.BACKEND
KernelOrder = impl.KernelOrder
mono_mul = impl.mono_mul
mono_div = impl.mono_div
mono_divides = impl.mono_divides
mono_lcm = impl.mono_lcm
add_scaled = impl.add_scaled
reduce_full = impl.reduce_full


def make_kernel_order(module_order):
    """Build this backend's comparison oracle from an `orders.ModuleOrder`."""
    kind = {"top": 0, "pot": 1, "schreyer": 2}[module_order.kind]
    return KernelOrder(
        module_order.ring_order.rows,
        kind,
        module_order.comp_monos,
        module_order.comp_ties,
    )
