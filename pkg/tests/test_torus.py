"""Flat-torus spectrum: modes, zero modes, symmetry."""

import numpy as np
import pytest

from magdirac import torus
from magdirac.lattice import Lattice
from magdirac.torus import SpinCData


def square(n):
    return Lattice.from_rows(np.eye(n))


def test_mode_eigenvalues_match_shifted_dual_norm():
    rng = np.random.default_rng(51)
    for n in (2, 3, 4):
        lat = Lattice.from_rows(rng.normal(size=(n, n)) + 3 * np.eye(n))
        data = SpinCData(
            lat,
            rng.integers(0, 2, size=n),
            rng.uniform(0, 1, size=n),
            rng.normal(size=n),
        )
        N = 2 ** (n // 2)
        for _ in range(20):
            m = rng.integers(-4, 5, size=n)
            tp = lat.dual_basis @ (m + (data.delta + data.theta) / 2.0)
            tp = tp + data.A / (4 * np.pi)
            r = 2 * np.pi * np.linalg.norm(tp)
            got = torus.mode_eigenvalues(data, m)
            assert got == [(-r, N // 2), (r, N // 2)] or (
                r <= 2 * np.pi * torus.ZERO_MODE_TOL and got == [(0.0, N)]
            )


def test_mode_eigenvalues_signed_for_circle():
    lat = square(1)
    data = SpinCData(lat, [1], [0.0], np.array([0.0]))
    assert torus.mode_eigenvalues(data, [0]) == [(np.pi, 1)]
    assert torus.mode_eigenvalues(data, [-1]) == [(-np.pi, 1)]


def test_square_torus_spectrum_bottom():
    data = SpinCData(square(2), [1, 0], [0.0, 0.0], np.zeros(2))
    spec = torus.spectrum(data, 7.0)
    assert [(e.value, e.multiplicity) for e in spec] == [
        (-np.pi, 2),
        (np.pi, 2),
    ]
    modes = {m for e in spec for m in e.labels}
    assert modes == {(0, 0), (-1, 0)}


def test_trivial_structure_has_kernel_of_full_rank():
    for n in (1, 2, 3):
        data = SpinCData(square(n), [0] * n, [0.0] * n, np.zeros(n))
        zm = torus.zero_mode(data)
        assert zm is not None and np.array_equal(zm, np.zeros(n, dtype=np.int64))
        spec = torus.spectrum(data, 5.0)
        assert spec.multiplicity_at(0.0) == 2 ** (n // 2)


def test_zero_mode_constructed_and_destroyed():
    rng = np.random.default_rng(52)
    for _ in range(20):
        n = int(rng.integers(1, 5))
        lat = Lattice.from_rows(rng.normal(size=(n, n)) + 3 * np.eye(n))
        data = SpinCData(
            lat,
            rng.integers(0, 2, size=n),
            rng.uniform(0, 1, size=n),
            np.zeros(n),
        )
        m0 = rng.integers(-3, 4, size=n)
        A = -4.0 * np.pi * data.theta_mode(m0)
        tuned = SpinCData(lat, data.delta, data.theta, A)
        zm = torus.zero_mode(tuned)
        assert zm is not None and np.array_equal(zm, m0)
        # a generic perturbation removes the kernel
        broken = SpinCData(lat, data.delta, data.theta, A + 0.37)
        assert torus.zero_mode(broken) is None


def test_zero_mode_multiplicity_is_full_spinor_rank():
    lat = square(3)
    data = SpinCData(lat, [1, 1, 0], [0.2, 0.0, 0.7], np.zeros(3))
    A = -4.0 * np.pi * data.theta_mode([1, -2, 0])
    tuned = SpinCData(lat, data.delta, data.theta, A)
    spec = torus.spectrum(tuned, 4.0)
    assert spec.multiplicity_at(0.0) == 2  # N, not N/2
    # every nonzero value carries N/2 = 1 per contributing mode
    for e in spec:
        if abs(e.value) > 1e-9:
            assert e.multiplicity == len(e.labels)


def test_circle_symmetry_condition():
    lat = square(1)
    sym = torus.symmetry_check(
        SpinCData(lat, [1], [0.0], np.array([0.0])), 10.0
    )
    assert sym.symmetric
    asym = torus.symmetry_check(
        SpinCData(lat, [1], [0.0], np.array([1.0])), 10.0
    )
    assert not asym.symmetric
    assert asym.witness is not None
    # delta + theta + L A/(2 pi) integer restores the symmetry
    back = torus.symmetry_check(
        SpinCData(lat, [1], [0.0], np.array([2.0 * np.pi])), 10.0
    )
    assert back.symmetric
    frac = torus.symmetry_check(
        SpinCData(lat, [0], [0.5], np.array([0.0])), 10.0
    )
    assert not frac.symmetric


def test_higher_dimensions_always_symmetric():
    rng = np.random.default_rng(53)
    for _ in range(10):
        n = int(rng.integers(2, 5))
        lat = Lattice.from_rows(rng.normal(size=(n, n)) + 3 * np.eye(n))
        data = SpinCData(
            lat,
            rng.integers(0, 2, size=n),
            rng.uniform(0, 1, size=n),
            rng.normal(size=n),
        )
        rep = torus.symmetry_check(data, {2: 12.0, 3: 8.0, 4: 5.0}[n])
        assert rep.symmetric, rep


def test_fluxes_helper_prescribes_holonomies():
    rng = np.random.default_rng(54)
    lat = Lattice.from_rows(rng.normal(size=(3, 3)) + 3 * np.eye(3))
    fluxes = rng.normal(size=3)
    A = torus.potential_from_fluxes(lat, fluxes)
    # line integral over generator j is <A, b_j>
    assert np.allclose(A @ lat.basis, fluxes, atol=1e-12)


def test_spin_data_validation():
    lat = square(2)
    with pytest.raises(ValueError):
        SpinCData(lat, [2, 0], [0.0, 0.0], np.zeros(2))
    with pytest.raises(ValueError):
        SpinCData(lat, [0], [0.0, 0.0], np.zeros(2))
    with pytest.raises(ValueError):
        SpinCData(lat, [0, 0], [0.0, np.nan], np.zeros(2))
    with pytest.warns(UserWarning):
        SpinCData(lat, [0, 0], [1.3, 0.0], np.zeros(2))


def test_spectrum_cutoff_validation_and_window():
    data = SpinCData(square(2), [1, 0], [0.0, 0.0], np.zeros(2))
    with pytest.raises(ValueError):
        torus.spectrum(data, 0.0)
    spec = torus.spectrum(data, 8.0)
    assert all(abs(e.value) <= 8.0 + 1e-9 for e in spec)
    assert spec.total_multiplicity() > 4
