"""Array typing helpers shared by the numerical subpackages.

Evaluators accept either a Python float or a numpy array and return the
same kind of value. ``as_output`` restores the scalar case after a
vectorized computation.
"""

from typing import TypeAlias

import numpy as np
import numpy.typing as npt

FloatArray: TypeAlias = npt.NDArray[np.float64]
IntArray: TypeAlias = npt.NDArray[np.int64]
BoolArray: TypeAlias = npt.NDArray[np.bool_]
RealInput: TypeAlias = float | FloatArray


def as_array(x: RealInput) -> FloatArray:
    """Return ``x`` as a float64 array without copying when possible."""
    return np.asarray(x, dtype=np.float64)


def as_output(template: RealInput, values: FloatArray) -> RealInput:
    """Match the scalar-or-array kind of ``template``.

    Args:
        template: The caller's original argument.
        values: Result of the vectorized computation.

    Returns:
        ``values`` unchanged for array input, a Python float otherwise.
    """
    if isinstance(template, np.ndarray):
        return values
    return float(values)
