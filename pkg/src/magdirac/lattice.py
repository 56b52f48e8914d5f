"""Full-rank lattices in R^n: basis/dual bookkeeping and shifted-ball
enumeration.

A lattice is stored by its basis matrix whose *columns* are the generators.
The dual basis columns gamma_j* satisfy <gamma_i, gamma_j*> = delta_ij.
Enumeration of {m in Z^n : |basis @ m + shift| <= radius} runs on the
Cholesky factor of the Gram matrix and is complete by construction (every
candidate is membership-checked exactly at the boundary, inclusive up to an
absolute 1e-9 slack on the radius).
"""

import warnings
from dataclasses import dataclass, field

import numpy as np

from ._kernels import enumerate_core


@dataclass
class Lattice:
    """Full-rank lattice given by generator columns."""

    basis: np.ndarray
    n: int = field(init=False)
    gram: np.ndarray = field(init=False)
    dual_basis: np.ndarray = field(init=False)

    def __post_init__(self):
        basis = np.array(self.basis, dtype=np.float64)
        if basis.ndim != 2 or basis.shape[0] != basis.shape[1]:
            raise ValueError(f"basis must be square, got shape {basis.shape}")
        if not np.all(np.isfinite(basis)):
            raise ValueError("basis contains non-finite entries")
        self.n = basis.shape[0]
        self.gram = basis.T @ basis
        try:
            np.linalg.cholesky(self.gram)
        except np.linalg.LinAlgError:
            raise ValueError("basis is singular (Gram matrix not positive definite)")
        det_b = np.linalg.det(basis)
        det_g = np.linalg.det(self.gram)
        if abs(det_g - det_b**2) > 1e-12 * max(1.0, abs(det_g)):
            raise ValueError(
                f"Gram determinant {det_g!r} inconsistent with basis determinant "
                f"squared {det_b**2!r}"
            )
        cond = np.linalg.cond(basis)
        if cond > 1e6:
            warnings.warn(
                f"lattice basis is badly conditioned (cond = {cond:.3e}); "
                "enumeration accuracy may degrade",
                stacklevel=2,
            )
        self.dual_basis = np.linalg.inv(basis).T
        pairing = basis.T @ self.dual_basis
        if not np.allclose(pairing, np.eye(self.n), atol=1e-12):
            raise ValueError("dual pairing failed to reproduce the identity")
        basis.setflags(write=False)
        self.gram.setflags(write=False)
        self.dual_basis.setflags(write=False)
        self.basis = basis

    @classmethod
    def from_rows(cls, rows) -> "Lattice":
        """Lattice whose generators are the *rows* of the given matrix."""
        return cls(np.array(rows, dtype=np.float64).T)

    def dual(self) -> "Lattice":
        """The dual lattice, generated by the dual basis columns."""
        return Lattice(self.dual_basis)

    def point(self, m) -> np.ndarray:
        """Standard coordinates of the lattice point with integer coords m."""
        return self.basis @ np.asarray(m, dtype=np.float64)

    def enumerate_shifted(self, shift, radius: float) -> np.ndarray:
        """Integer vectors m with |basis @ m + shift| <= radius (+1e-9).

        Returns an (count, n) int64 array in lexicographic row order.  The
        boundary is inclusive: points at distance exactly ``radius`` are
        always returned.
        """
        shift = np.asarray(shift, dtype=np.float64)
        if shift.shape != (self.n,):
            raise ValueError(f"shift has shape {shift.shape}, expected ({self.n},)")
        radius = float(radius)
        if not np.isfinite(radius):
            raise ValueError(f"radius must be finite, got {radius!r}")
        if radius < 0.0:
            return np.empty((0, self.n), dtype=np.int64)
        center = np.linalg.solve(self.basis, shift)
        upper = np.linalg.cholesky(self.gram).T.copy()
        points = enumerate_core(upper, center, radius + 1e-9)
        if points.shape[0] > 1:
            order = np.lexsort(points.T[::-1])
            points = points[order]
        return points
