"""Exact spectrum of the magnetic Dirac operator on flat tori R^n / Gamma.

A spin-c structure on the torus is described by a spin structure delta in
{0, 1}^n, flat connection parameters theta in [0, 1)^n, and a harmonic
(constant-coefficient) magnetic potential A, stored as a covector in
standard coordinates.  Each dual-lattice mode gamma* = dual_basis @ m is
shifted twice,

    theta_mode  = gamma* + (1/2) sum_j (delta_j + theta_j) gamma_j*
    theta_prime = theta_mode + A / (4 pi),

and contributes eigenvalues +-2 pi |theta_prime|, each of multiplicity
N / 2 = 2^(floor(n/2) - 1) when n >= 2.  A mode with theta_prime = 0
contributes the single eigenvalue 0 with full multiplicity N; this happens
exactly when A = -4 pi theta_mode.  For n = 1 the spinor space is
one-dimensional and each mode contributes the single *signed* eigenvalue
2 pi theta_prime, so the one-dimensional spectrum is asymmetric unless
delta + theta + L A / (2 pi) is an integer.
"""

import warnings
from dataclasses import dataclass, field

import numpy as np

from .lattice import Lattice
from .spectrum import Spectrum

ZERO_MODE_TOL = 1e-10


@dataclass
class SpinCData:
    """Spin-c structure data on a flat torus."""

    lattice: Lattice
    delta: np.ndarray
    theta: np.ndarray
    A: np.ndarray

    def __post_init__(self):
        n = self.lattice.n
        delta = np.asarray(self.delta, dtype=np.int64)
        if delta.shape != (n,):
            raise ValueError(f"delta has shape {delta.shape}, expected ({n},)")
        if not np.all((delta == 0) | (delta == 1)):
            raise ValueError(f"delta entries must be 0 or 1, got {delta.tolist()}")
        theta = np.asarray(self.theta, dtype=np.float64)
        if theta.shape != (n,):
            raise ValueError(f"theta has shape {theta.shape}, expected ({n},)")
        if not np.all(np.isfinite(theta)):
            raise ValueError("theta contains non-finite entries")
        if np.any(theta < 0.0) or np.any(theta >= 1.0):
            warnings.warn(
                "theta reduced into [0, 1) (holonomy parameters are periodic)",
                stacklevel=2,
            )
            theta = np.mod(theta, 1.0)
        A = np.asarray(self.A, dtype=np.float64)
        if A.shape != (n,):
            raise ValueError(f"A has shape {A.shape}, expected ({n},)")
        if not np.all(np.isfinite(A)):
            raise ValueError("A contains non-finite entries")
        delta.setflags(write=False)
        theta.setflags(write=False)
        A.setflags(write=False)
        self.delta = delta
        self.theta = theta
        self.A = A

    @property
    def n(self) -> int:
        return self.lattice.n

    @property
    def spinor_dim(self) -> int:
        return 2 ** (self.n // 2)

    def base_shift(self) -> np.ndarray:
        """Shift common to all modes: dual @ (delta + theta)/2 + A/(4 pi)."""
        half = (self.delta + self.theta) / 2.0
        return self.lattice.dual_basis @ half + self.A / (4.0 * np.pi)

    def theta_mode(self, m) -> np.ndarray:
        """Dual point shifted by spin structure and holonomy only (no A)."""
        m = np.asarray(m, dtype=np.float64)
        half = (self.delta + self.theta) / 2.0
        return self.lattice.dual_basis @ (m + half)

    def theta_prime(self, m) -> np.ndarray:
        """Shifted dual point of the mode with integer coordinates m."""
        return self.theta_mode(m) + self.A / (4.0 * np.pi)


def potential_from_fluxes(lattice: Lattice, fluxes) -> np.ndarray:
    """Harmonic potential with prescribed holonomies over the generators.

    The line integral of the returned covector along generator gamma_j
    equals fluxes[j], since A = sum_j fluxes[j] gamma_j*.
    """
    fluxes = np.asarray(fluxes, dtype=np.float64)
    if fluxes.shape != (lattice.n,):
        raise ValueError(f"fluxes has shape {fluxes.shape}, expected ({lattice.n},)")
    return lattice.dual_basis @ fluxes


def mode_eigenvalues(data: SpinCData, m) -> list[tuple[float, int]]:
    """(value, multiplicity) pairs contributed by one dual mode."""
    tp = data.theta_prime(m)
    r = float(np.linalg.norm(tp))
    N = data.spinor_dim
    if data.n == 1:
        return [(2.0 * np.pi * float(tp[0]), 1)]
    if r <= ZERO_MODE_TOL:
        return [(0.0, N)]
    half = N // 2
    return [(-2.0 * np.pi * r, half), (2.0 * np.pi * r, half)]


def spectrum(data: SpinCData, cutoff: float, merge_tol: float | None = None) -> Spectrum:
    """All eigenvalues with |value| <= cutoff, merged across modes.

    Labels are the integer mode coordinates (as tuples); a merged entry
    lists every contributing mode.
    """
    cutoff = float(cutoff)
    if not np.isfinite(cutoff) or cutoff <= 0.0:
        raise ValueError(f"cutoff must be a positive number, got {cutoff!r}")
    radius = cutoff / (2.0 * np.pi)
    modes = data.lattice.dual().enumerate_shifted(data.base_shift(), radius)
    triples = []
    edge = cutoff + 1e-12
    for m in modes:
        label = tuple(int(c) for c in m)
        for value, mult in mode_eigenvalues(data, m):
            if abs(value) <= edge:
                triples.append((value, mult, label))
    return Spectrum.from_triples(triples, tolerance=merge_tol)


def zero_mode(data: SpinCData) -> np.ndarray | None:
    """Integer coordinates of the zero mode, or None.

    A zero mode exists exactly when the potential cancels one shifted dual
    point, A = -4 pi theta_mode; the candidate is found by rounding the
    real solution of dual_basis @ m = -base_shift and accepted when
    |theta_prime| <= 1e-10.
    """
    m = np.linalg.solve(data.lattice.dual_basis, -data.base_shift())
    m_int = np.rint(m).astype(np.int64)
    if np.linalg.norm(data.theta_prime(m_int)) <= ZERO_MODE_TOL:
        return m_int
    return None


@dataclass
class SymmetryReport:
    """Result of checking the spectrum for symmetry under value negation."""

    symmetric: bool
    max_mismatch: float
    witness: tuple | None = None
    detail: str = ""


def symmetry_check(data: SpinCData, cutoff: float) -> SymmetryReport:
    """Check whether the spectrum below the cutoff is symmetric about 0.

    For n >= 2 every mode contributes both signs, so this always passes;
    for n = 1 the spectrum is a shifted arithmetic progression and is
    symmetric only when delta + theta + L A / (2 pi) is an integer.
    """
    spec = spectrum(data, cutoff)
    entries = spec.entries
    worst = 0.0
    witness = None
    for e in entries:
        mirrored = sum(
            x.multiplicity for x in entries if abs(x.value + e.value) <= 1e-9
        )
        gap = float(abs(e.multiplicity - mirrored))
        if gap > worst:
            worst = gap
            witness = (e.value, e.multiplicity, mirrored)
    if witness is None:
        return SymmetryReport(True, 0.0, None, "every eigenvalue mirrors")
    return SymmetryReport(
        False,
        worst,
        witness,
        f"value {witness[0]!r} has multiplicity {witness[1]} but its negative "
        f"has {witness[2]}",
    )
