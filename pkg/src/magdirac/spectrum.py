"""Shared container for exact point spectra with multiplicities.

Eigenvalues arrive as (value, multiplicity, label) triples from the model
modules; the container sorts them and chain-merges values closer than the
merge tolerance, adding multiplicities and concatenating labels.  The
default tolerance 1e-9 can be overridden through the MAGDIRAC_TOLERANCE
environment variable.
"""

import os
from dataclasses import dataclass

import numpy as np

DEFAULT_TOLERANCE = 1e-9


def merge_tolerance() -> float:
    """Active merge tolerance (MAGDIRAC_TOLERANCE override, else 1e-9)."""
    raw = os.environ.get("MAGDIRAC_TOLERANCE")
    if raw is None or raw.strip() == "":
        return DEFAULT_TOLERANCE
    try:
        tol = float(raw)
    except ValueError:
        raise ValueError(f"MAGDIRAC_TOLERANCE is not a number: {raw!r}")
    if not np.isfinite(tol) or tol <= 0.0:
        raise ValueError(f"MAGDIRAC_TOLERANCE must be a positive number, got {raw!r}")
    return tol


@dataclass(frozen=True)
class SpectrumEntry:
    """One eigenvalue with its total multiplicity and contributing labels."""

    value: float
    multiplicity: int
    labels: tuple


class Spectrum:
    """Ascending list of distinct eigenvalues with multiplicities."""

    def __init__(self, entries):
        self.entries = list(entries)

    @classmethod
    def from_triples(cls, triples, tolerance: float | None = None) -> "Spectrum":
        """Build from (value, multiplicity, label) triples, merging values
        that form a chain with consecutive gaps <= tolerance."""
        tol = merge_tolerance() if tolerance is None else float(tolerance)
        items = sorted(triples, key=lambda tr: tr[0])
        entries = []
        i = 0
        while i < len(items):
            j = i + 1
            while j < len(items) and items[j][0] - items[j - 1][0] <= tol:
                j += 1
            group = items[i:j]
            mult = sum(g[1] for g in group)
            value = sum(g[0] * g[1] for g in group) / mult
            labels = tuple(g[2] for g in group)
            entries.append(SpectrumEntry(float(value), int(mult), labels))
            i = j
        return cls(entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def values(self) -> np.ndarray:
        return np.array([e.value for e in self.entries], dtype=np.float64)

    def multiplicities(self) -> np.ndarray:
        return np.array([e.multiplicity for e in self.entries], dtype=np.int64)

    def total_multiplicity(self) -> int:
        return int(sum(e.multiplicity for e in self.entries))

    def min_abs(self) -> float:
        """Smallest eigenvalue in absolute value."""
        if not self.entries:
            raise ValueError("spectrum is empty")
        return float(min(abs(e.value) for e in self.entries))

    def first_positive(self) -> float:
        """Smallest strictly positive eigenvalue."""
        pos = [e.value for e in self.entries if e.value > 0.0]
        if not pos:
            raise ValueError("spectrum has no positive eigenvalues")
        return float(min(pos))

    def in_window(self, lo: float, hi: float) -> "Spectrum":
        """Entries with lo <= value <= hi."""
        return Spectrum([e for e in self.entries if lo <= e.value <= hi])

    def multiplicity_at(self, value: float, tolerance: float | None = None) -> int:
        """Total multiplicity within tolerance of the given value."""
        tol = merge_tolerance() if tolerance is None else float(tolerance)
        return int(
            sum(e.multiplicity for e in self.entries if abs(e.value - value) <= tol)
        )
