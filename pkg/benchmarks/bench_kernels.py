"""Timing comparison of the JIT-compiled kernels against the plain-Python
reference implementations (and LAPACK, where applicable).

Run from the repository root:

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --sizes 16,64,128 --repeats 3

The same script reports the pure-numpy fallback numbers when run with
MAGDIRAC_NO_NUMBA=1 (both columns then time the reference implementation).
"""

import argparse
import time

import numpy as np

from magdirac import backend_name
from magdirac._kernels import (
    enumerate_core,
    enumerate_core_py,
    jacobi_eigvals,
    jacobi_eigvals_py,
)
from magdirac.lattice import Lattice


def best_of(fn, repeats):
    best = np.inf
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def random_hermitian(rng, dim):
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return ((a + a.conj().T) / 2.0).astype(np.complex128)


def bench_jacobi(sizes, repeats, rng):
    print("cyclic Jacobi eigenvalues (complex Hermitian)")
    print(f"{'dim':>6} {'kernel':>12} {'python':>12} {'lapack':>12}  max|delta|")
    for dim in sizes:
        H = random_hermitian(rng, dim)
        jacobi_eigvals(H.copy())  # warm-up / JIT compile
        t_kernel = best_of(lambda: jacobi_eigvals(H.copy()), repeats)
        t_python = best_of(lambda: jacobi_eigvals_py(H.copy()), repeats)
        t_lapack = best_of(lambda: np.linalg.eigvalsh(H), repeats)
        delta = np.max(
            np.abs(jacobi_eigvals(H.copy())[0] - np.linalg.eigvalsh(H))
        )
        print(
            f"{dim:>6} {t_kernel * 1e3:>10.3f}ms {t_python * 1e3:>10.3f}ms "
            f"{t_lapack * 1e3:>10.3f}ms  {delta:.2e}"
        )


def bench_enumerate(radii, repeats, rng):
    print()
    print("lattice ball enumeration")
    print(f"{'n':>3} {'radius':>7} {'points':>8} {'kernel':>12} {'python':>12}")
    for n in (2, 3, 4):
        lat = Lattice.from_rows(rng.normal(size=(n, n)) + 3.0 * np.eye(n))
        R = np.linalg.cholesky(lat.gram).T.copy()
        shift = rng.normal(size=n)
        center = np.linalg.solve(lat.basis, shift)
        for radius in radii:
            enumerate_core(R, center, radius)  # warm-up / JIT compile
            pts = enumerate_core(R, center, radius)
            t_kernel = best_of(lambda: enumerate_core(R, center, radius), repeats)
            t_python = best_of(
                lambda: enumerate_core_py(R, center, radius), repeats
            )
            print(
                f"{n:>3} {radius:>7.1f} {len(pts):>8} "
                f"{t_kernel * 1e3:>10.3f}ms {t_python * 1e3:>10.3f}ms"
            )


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--sizes", default="8,16,32,64,128",
        help="comma-separated Jacobi matrix dimensions",
    )
    parser.add_argument(
        "--radii", default="5,10,20",
        help="comma-separated enumeration radii",
    )
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    ns = parser.parse_args()

    print(f"active backend: {backend_name()}")
    rng = np.random.default_rng(ns.seed)
    sizes = [int(s) for s in ns.sizes.split(",")]
    radii = [float(r) for r in ns.radii.split(",")]
    bench_jacobi(sizes, ns.repeats, rng)
    bench_enumerate(radii, ns.repeats, rng)


if __name__ == "__main__":
    main()
