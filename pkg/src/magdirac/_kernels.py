"""Hot numerical kernels: cyclic Jacobi diagonalization and lattice-point
enumeration.

Both kernels are written in a numba-compatible subset of Python/numpy.  The
module exposes two names per kernel: ``*_py`` is the plain-Python reference
implementation, and the unsuffixed name is the active backend (JIT-compiled
when numba is enabled, the same function object otherwise).  Both paths run
the identical algorithm, so results agree bit-for-bit up to floating-point
scheduling.
"""

import numpy as np

from ._backend import NUMBA_ENABLED, maybe_njit


def jacobi_eigvals_py(H):
    """Eigenvalues of a Hermitian matrix by cyclic Jacobi sweeps.

    ``H`` is a square complex128 array, assumed Hermitian; it is destroyed.
    Returns ``(values ascending, converged)`` where convergence means the
    off-diagonal Frobenius norm was driven below 1e-14 * (1 + ||H||_F).
    Deterministic: fixed (p, q) sweep order, no pivot searching.
    """
    n = H.shape[0]
    vals = np.empty(n, dtype=np.float64)
    if n == 1:
        vals[0] = H[0, 0].real
        return vals, True

    fro = 0.0
    for a in range(n):
        for b in range(n):
            fro += abs(H[a, b]) ** 2
    thresh = 1e-14 * (1.0 + np.sqrt(fro))

    converged = False
    for _sweep in range(100):
        off = 0.0
        for a in range(n - 1):
            for b in range(a + 1, n):
                off += 2.0 * abs(H[a, b]) ** 2
        if np.sqrt(off) <= thresh:
            converged = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                beta = abs(H[p, q])
                if beta <= 1e-300:
                    continue
                u = H[p, q] / beta  # unit modulus phase of the pivot entry
                app = H[p, p].real
                aqq = H[q, q].real
                tau = (aqq - app) / (2.0 * beta)
                # smaller-magnitude root of tt^2 + 2*tau*tt - 1 = 0
                if tau >= 0.0:
                    tt = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    tt = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + tt * tt)
                s = tt * c
                # unitary G = [[c, s*u], [-s*conj(u), c]] on columns p, q
                for r in range(n):
                    hrp = H[r, p]
                    hrq = H[r, q]
                    H[r, p] = c * hrp - s * np.conj(u) * hrq
                    H[r, q] = s * u * hrp + c * hrq
                for r in range(n):
                    hpr = H[p, r]
                    hqr = H[q, r]
                    H[p, r] = c * hpr - s * u * hqr
                    H[q, r] = s * np.conj(u) * hpr + c * hqr
                H[p, q] = 0.0
                H[q, p] = 0.0
                H[p, p] = complex(H[p, p].real, 0.0)
                H[q, q] = complex(H[q, q].real, 0.0)

    for a in range(n):
        vals[a] = H[a, a].real
    return np.sort(vals), converged


def enumerate_core_py(R, center, r_eff):
    """All integer vectors m with |R @ (m + center)| <= r_eff.

    ``R`` is the upper-triangular Cholesky factor (positive diagonal) of the
    quadratic form; the search walks coordinates from the last to the first,
    bounding each coordinate by the budget left over from the levels already
    fixed.  Interior bounds carry a generous slack and every candidate is
    re-checked exactly against r_eff at the leaf, so slack never admits a
    wrong point and pruning never loses a right one.
    Returns an (count, n) int64 array in traversal order.
    """
    n = R.shape[0]
    r2 = r_eff * r_eff
    slack = 1e-7

    m = np.zeros(n, dtype=np.int64)
    lo = np.zeros(n, dtype=np.int64)
    hi = np.zeros(n, dtype=np.int64)
    rem = np.zeros(n, dtype=np.float64)
    spart = np.zeros(n, dtype=np.float64)

    cap = 64
    out = np.empty((cap, n), dtype=np.int64)
    count = 0

    i = n - 1
    rem[i] = r2
    spart[i] = 0.0
    t = np.sqrt(rem[i]) + slack
    lo[i] = np.int64(np.ceil((-t - spart[i]) / R[i, i] - center[i]))
    hi[i] = np.int64(np.floor((t - spart[i]) / R[i, i] - center[i]))
    m[i] = lo[i] - 1

    while True:
        m[i] += 1
        if m[i] > hi[i]:
            i += 1
            if i == n:
                break
            continue
        ui = R[i, i] * (m[i] + center[i]) + spart[i]
        contrib = ui * ui
        if contrib > rem[i] + slack:
            continue
        if i == 0:
            # exact membership check, independent of the pruning slack
            q = 0.0
            for a in range(n):
                acc = 0.0
                for b in range(a, n):
                    acc += R[a, b] * (m[b] + center[b])
                q += acc * acc
            if q <= r2:
                if count == cap:
                    cap *= 2
                    grown = np.empty((cap, n), dtype=np.int64)
                    grown[:count] = out[:count]
                    out = grown
                for a in range(n):
                    out[count, a] = m[a]
                count += 1
        else:
            i -= 1
            rem[i] = max(rem[i + 1] - contrib, 0.0)
            acc = 0.0
            for j in range(i + 1, n):
                acc += R[i, j] * (m[j] + center[j])
            spart[i] = acc
            t = np.sqrt(rem[i]) + slack
            lo[i] = np.int64(np.ceil((-t - spart[i]) / R[i, i] - center[i]))
            hi[i] = np.int64(np.floor((t - spart[i]) / R[i, i] - center[i]))
            m[i] = lo[i] - 1

    return out[:count].copy()


if NUMBA_ENABLED:
    jacobi_eigvals = maybe_njit(cache=True)(jacobi_eigvals_py)
    enumerate_core = maybe_njit(cache=True)(enumerate_core_py)
else:
    jacobi_eigvals = jacobi_eigvals_py
    enumerate_core = enumerate_core_py
