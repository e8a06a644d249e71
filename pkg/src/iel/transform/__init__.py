"""Executable admissibility results: proof-to-proof rewriters."""

from .convert import expand_to_minus, monotonize, set_normalize
from .cut import CutInstance, eliminate_cut, eliminate_cuts
from .structural import (TransformError, contract, fit, invert_left, k_contract, k_eliminate,
                         ki1_close, ki_ext, weaken)

__all__ = [
    "CutInstance", "TransformError", "contract", "eliminate_cut", "eliminate_cuts",
    "expand_to_minus", "fit", "invert_left", "k_contract", "k_eliminate", "ki1_close",
    "ki_ext", "monotonize", "set_normalize", "weaken",
]
