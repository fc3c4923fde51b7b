__all__ = [
        "DecompositionStep", "incremental_sombor", "base_sombor", "strip_last",
        "attach", "decompose", "iter_decomposition", "base_tree", "replay",
        "trace_records", "recompose",
]

from .recursion import DecompositionStep
from .recursion import incremental_sombor, base_sombor
from .recursion import strip_last, attach
from .recursion import decompose, iter_decomposition, base_tree
from .recursion import replay, trace_records, recompose
