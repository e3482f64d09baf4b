"""Chunked evaluation of reconstructions on equispaced grids.

Grid points are split into fixed-size chunks that are evaluated either
sequentially or on a thread pool. Chunks are reassembled in grid order, so
the result does not depend on scheduling.
"""

from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor

import numpy as np
import structlog

from shannonlab.core.config import get_settings
from shannonlab.core.types import FloatArray
from shannonlab.reconstruct.models import Reconstructor

logger = structlog.get_logger(__name__)


def equispaced_grid(t_lo: float, t_hi: float, S: int) -> FloatArray:
    """Return S equispaced points on [t_lo, t_hi], both endpoints included.

    Raises:
        ValueError: If t_lo >= t_hi or S < 2.
    """
    if not t_lo < t_hi:
        raise ValueError(f"grid needs t_lo < t_hi, got [{t_lo}, {t_hi}]")
    if S < 2:
        raise ValueError(f"grid needs S >= 2 points, got {S}")
    return np.linspace(t_lo, t_hi, S)


class GridEvaluator:
    """Evaluates reconstructions chunk by chunk, optionally in parallel.

    Attributes:
        chunk_size: Grid points per vectorized block.
        workers: Thread count; 1 evaluates sequentially.
    """

    def __init__(
        self, chunk_size: int | None = None, workers: int | None = None
    ) -> None:
        """Initialize the evaluator.

        Args:
            chunk_size: Grid points per block, defaults to the configured size.
            workers: Thread count, defaults to the configured count.

        Raises:
            ValueError: If chunk_size or workers is smaller than one.
        """
        settings = get_settings()
        self.chunk_size = (
            chunk_size if chunk_size is not None else settings.grid_chunk_size
        )
        self.workers = workers if workers is not None else settings.workers
        if self.chunk_size < 1 or self.workers < 1:
            raise ValueError("chunk_size and workers must be positive")
        self._log = logger.bind(component="GridEvaluator")

    def map(
        self, func: Callable[[FloatArray], FloatArray], t: FloatArray
    ) -> FloatArray:
        """Apply a vectorized function to ``t`` chunk by chunk.

        Args:
            func: Function returning one value per input point.
            t: One-dimensional evaluation points.

        Returns:
            Concatenated results in the order of ``t``.
        """
        chunks = [
            t[start : start + self.chunk_size]
            for start in range(0, t.size, self.chunk_size)
        ]
        if self.workers == 1 or len(chunks) == 1:
            parts = [func(chunk) for chunk in chunks]
        else:
            with ThreadPoolExecutor(max_workers=self.workers) as executor:
                parts = list(executor.map(func, chunks))
        if not parts:
            return np.empty(0, dtype=np.float64)
        return np.concatenate(parts)

    def evaluate(
        self, r: Reconstructor, t_lo: float, t_hi: float, S: int
    ) -> FloatArray:
        """Evaluate ``r`` at S equispaced points spanning [t_lo, t_hi].

        Raises:
            ValueError: If the grid is malformed.
            CoverageError: If the samples miss a required index.
        """
        grid = equispaced_grid(t_lo, t_hi, S)
        self._log.debug(
            "grid_evaluation_start",
            method=r.method.kind,
            points=S,
            chunk_size=self.chunk_size,
            workers=self.workers,
        )
        values = self.map(r.evaluate_array, grid)
        self._log.debug("grid_evaluation_complete", method=r.method.kind, points=S)
        return values


def evaluate_on_grid(
    r: Reconstructor,
    t_lo: float,
    t_hi: float,
    S: int,
    evaluator: GridEvaluator | None = None,
) -> FloatArray:
    """Evaluate ``r`` at S equispaced points spanning [t_lo, t_hi] inclusive.

    Args:
        r: Reconstructor to evaluate.
        t_lo: Left grid endpoint.
        t_hi: Right grid endpoint.
        S: Number of grid points, at least 2.
        evaluator: Chunking strategy, a configured default when None.

    Returns:
        Reconstruction values, one per grid point.

    Raises:
        ValueError: If t_lo >= t_hi or S < 2.
        CoverageError: If the samples miss a required index.
    """
    return (evaluator or GridEvaluator()).evaluate(r, t_lo, t_hi, S)


def max_abs_error(
    r: Reconstructor,
    reference: Callable[[FloatArray], FloatArray],
    t_lo: float,
    t_hi: float,
    S: int,
    evaluator: GridEvaluator | None = None,
) -> float:
    """Return max |reference(t) - r(t)| over the equispaced grid."""
    engine = evaluator or GridEvaluator()
    grid = equispaced_grid(t_lo, t_hi, S)

    def deviation(chunk: FloatArray) -> FloatArray:
        result: FloatArray = np.abs(reference(chunk) - r.evaluate_array(chunk))
        return result

    return float(np.max(engine.map(deviation, grid)))
