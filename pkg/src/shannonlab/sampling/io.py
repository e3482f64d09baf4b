"""Two-column text serialization of sample sets.

File layout::

    # L=256.0
    -3 0.0
    -2 1.2345
    ...

Values are written in shortest round-trip decimal so a read after a write
reproduces the samples exactly.
"""

import re
from pathlib import Path

import numpy as np
import pandas as pd
import structlog

from shannonlab.sampling.errors import SampleFormatError
from shannonlab.sampling.models import SampleSet

logger = structlog.get_logger(__name__)

_HEADER = re.compile(r"^#\s*L\s*=\s*(\S+)\s*$")


def write_sample_set(s: SampleSet, path: Path) -> None:
    """Write ``s`` to ``path`` as a header line plus ``index value`` rows.

    Args:
        s: Samples to write.
        path: Destination file, overwritten if present.
    """
    frame = pd.DataFrame({"index": s.indices, "value": s.array})
    with path.open("w", encoding="utf-8", newline="") as handle:
        handle.write(f"# L={s.L!r}\n")
        frame.to_csv(handle, sep=" ", header=False, index=False, lineterminator="\n")
    logger.debug("sample_set_written", path=str(path), count=len(s))


def _parse_rate(header: str) -> float:
    match = _HEADER.match(header)
    if match is None:
        raise SampleFormatError(1, "expected header '# L=<rate>'")
    try:
        rate = float(match.group(1))
    except ValueError as exc:
        raise SampleFormatError(1, f"rate {match.group(1)!r} is not a number") from exc
    if not rate > 0.0:
        raise SampleFormatError(1, f"rate must be positive, got {rate}")
    return rate


def read_sample_set(path: Path) -> SampleSet:
    """Read a sample set written by :func:`write_sample_set`.

    Args:
        path: Source file.

    Returns:
        The parsed SampleSet.

    Raises:
        SampleFormatError: If the header, a row, or the index sequence is
            malformed.
    """
    with path.open(encoding="utf-8") as handle:
        header = handle.readline()
        rate = _parse_rate(header)
        try:
            raw = pd.read_csv(
                handle,
                sep=r"\s+",
                header=None,
                names=["index", "value"],
                dtype=str,
                engine="python",
            )
        except pd.errors.ParserError as exc:
            raise SampleFormatError(None, f"unreadable rows: {exc}") from exc
        except pd.errors.EmptyDataError as exc:
            raise SampleFormatError(2, "no sample rows") from exc

    if raw.empty:
        raise SampleFormatError(2, "no sample rows")

    indices = pd.to_numeric(raw["index"], errors="coerce")
    values = pd.to_numeric(raw["value"], errors="coerce")
    finite = np.isfinite(values.fillna(0.0).to_numpy(dtype=np.float64))
    bad = indices.isna() | values.isna() | (indices != indices.round()) | ~finite
    if bad.any():
        row = int(np.flatnonzero(bad.to_numpy())[0])
        raise SampleFormatError(
            row + 2, "expected an integer index and a finite number"
        )

    k = indices.to_numpy(dtype=np.int64)
    gaps = np.flatnonzero(np.diff(k) != 1)
    if gaps.size:
        row = int(gaps[0]) + 1
        raise SampleFormatError(row + 2, f"index {k[row]} breaks the contiguous range")

    exact = raw["value"].to_numpy(dtype=np.float64)
    samples = SampleSet.from_array(rate, int(k[0]), exact)
    logger.debug("sample_set_read", path=str(path), count=len(samples))
    return samples
