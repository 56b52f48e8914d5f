"""Exact spectrum of the magnetic Dirac operator on the round 3-sphere.

The operator is D + it c(xi) with xi the unit Hopf vector field and t the
real coupling.  Its full point spectrum splits into three families indexed
by a level k >= 0, every member carrying multiplicity k + 1:

    plus:    3/2 + t + k
    minus:   3/2 - t + k
    branch:  1/2 +- sqrt(f0(k, p, t)),   0 <= p < k,

with the branch discriminant

    f0(k, p, t) = (1 + t + 2p - k)^2 + 4(k - p)(p + 1).

The degenerate cases p = k and p = -1 fold the plus/minus families into the
same square-root expression, f0(k, k, t) = (1 + t + k)^2 and
f0(k, -1, t) = (1 - t + k)^2, and f0(k, p, -t) = f0(k, k - p - 1, t) makes
the spectrum even in t.  The flow-invariant (basic) sector consists of the
branch modes with k = 2p + 1, where f0 collapses to t^2 + 4(p + 1)^2.
"""

from fractions import Fraction

import numpy as np

from .spectrum import Spectrum


def f0(k: int, p: int, t: float) -> float:
    """Branch discriminant (1 + t + 2p - k)^2 + 4(k - p)(p + 1).

    Valid for 0 <= p < k; the extensions p = k and p = -1 reproduce the
    squared plus/minus family values and are accepted too.
    """
    k = _check_level(k)
    p = int(p)
    if not -1 <= p <= k:
        raise ValueError(f"branch index p={p} outside -1..k for k={k}")
    return (1.0 + t + 2 * p - k) ** 2 + 4.0 * (k - p) * (p + 1)


def _check_level(k) -> int:
    if not isinstance(k, (int, np.integer)):
        raise ValueError(f"level must be an integer, got {k!r}")
    k = int(k)
    if k < 0:
        raise ValueError(f"level must be non-negative, got {k}")
    return k


def _check_coupling(t) -> float:
    t = float(t)
    if not np.isfinite(t):
        raise ValueError(f"coupling must be finite, got {t!r}")
    return t


def spectrum(t: float, cutoff: float, merge_tol: float | None = None) -> Spectrum:
    """All eigenvalues with |value| <= cutoff, merged with multiplicities.

    Labels are (family, k, p, sign) tuples; plus/minus members carry
    p = None, sign = None.  Merging uses the active tolerance; at t = 0 the
    plus/minus values and all k positive branch values of level k coincide
    at 3/2 + k, which therefore appears once with multiplicity
    (k + 2)(k + 1).
    """
    t = _check_coupling(t)
    cutoff = float(cutoff)
    if not np.isfinite(cutoff) or cutoff <= 0.0:
        raise ValueError(f"cutoff must be a positive number, got {cutoff!r}")

    edge = cutoff + 1e-12
    # branch values satisfy |1/2 -+ sqrt(f0)| >= 2 sqrt(k) - 1/2, so no
    # family contributes once 4k > (cutoff + 1/2)^2
    k_max = int(np.ceil(max((cutoff + 0.5) ** 2 / 4.0, cutoff + abs(t)))) + 1
    triples = []
    for k in range(k_max + 1):
        mult = k + 1
        v = 1.5 + t + k
        if abs(v) <= edge:
            triples.append((v, mult, ("plus", k, None, None)))
        v = 1.5 - t + k
        if abs(v) <= edge:
            triples.append((v, mult, ("minus", k, None, None)))
        for p in range(k):
            root = np.sqrt(f0(k, p, t))
            for sign in (1, -1):
                v = 0.5 + sign * root
                if abs(v) <= edge:
                    triples.append((v, mult, ("branch", k, p, sign)))
    return Spectrum.from_triples(triples, tolerance=merge_tol)


def lambda1(t: float, cutoff: float | None = None) -> float:
    """Smallest eigenvalue in absolute value.

    The default cutoff 5 + |t| always contains the minimizer, since the
    minus family alone gives an eigenvalue of magnitude <= 3/2 + |t|.
    """
    t = _check_coupling(t)
    if cutoff is None:
        cutoff = 5.0 + abs(t)
    return spectrum(t, cutoff).min_abs()


def lambda1_basic(t: float) -> float:
    """First positive eigenvalue on flow-invariant spinors.

    Basic modes are the branch pairs with k = 2p + 1, whose values are
    1/2 +- sqrt(t^2 + 4(p + 1)^2); the positive ones increase with p, so
    the minimum sits at p = 0.
    """
    t = _check_coupling(t)
    return 0.5 + np.sqrt(t * t + 4.0)


def collision_t(k: int, p: int, k2: int, p2: int) -> float:
    """Coupling t at which branch curves (k, p) and (k2, p2) collide.

    Solves f0(k, p, t) = f0(k2, p2, t), which is linear in t with slope
    2(p - p2) - (k - k2); raises ValueError when that slope vanishes (the
    curves are parallel translates and never cross, or coincide).
    The value is computed in exact rational arithmetic before conversion.
    """
    k = _check_level(k)
    k2 = _check_level(k2)
    p, p2 = int(p), int(p2)
    if not 0 <= p < k:
        raise ValueError(f"branch index p={p} outside 0..k-1 for k={k}")
    if not 0 <= p2 < k2:
        raise ValueError(f"branch index p={p2} outside 0..k-1 for k={k2}")
    if 2 * (p - p2) == k - k2:
        raise ValueError(
            f"curves (k={k}, p={p}) and (k={k2}, p={p2}) have equal slope "
            "in t; no collision point"
        )
    delta = (k2 - p2) * (p2 + 1) - (k - p) * (p + 1)
    tc = (
        Fraction(2 * delta, 2 * (p - p2) - (k - k2))
        + Fraction(k + k2, 2)
        - p
        - p2
        - 1
    )
    return float(tc)


def curve_samples(t_values, k_max: int, window: tuple[float, float] | None = None):
    """Eigenvalue curves sampled on a coupling grid.

    Returns (t, family, k, p, sign, value) tuples for every family member
    of level <= k_max, keeping only values inside the window (default: no
    filter).  Branch rows carry the sign of the square root; plus/minus
    rows have p = None, sign = None.
    """
    k_max = _check_level(k_max)
    rows = []
    for t in t_values:
        t = _check_coupling(t)
        for k in range(k_max + 1):
            rows.append((t, "plus", k, None, None, 1.5 + t + k))
            rows.append((t, "minus", k, None, None, 1.5 - t + k))
            for p in range(k):
                root = np.sqrt(f0(k, p, t))
                rows.append((t, "branch", k, p, 1, 0.5 + root))
                rows.append((t, "branch", k, p, -1, 0.5 - root))
    if window is not None:
        lo, hi = float(window[0]), float(window[1])
        rows = [r for r in rows if lo <= r[5] <= hi]
    return rows
