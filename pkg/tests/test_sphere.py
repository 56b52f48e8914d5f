"""Closed-form 3-sphere spectrum of the twisted operator."""

import numpy as np
import pytest

from magdirac import sphere


def test_f0_definition_and_scalar_edges():
    rng = np.random.default_rng(41)
    for _ in range(200):
        k = int(rng.integers(0, 20))
        p = int(rng.integers(-1, k + 1))
        t = float(rng.uniform(-6, 6))
        expected = (1 + t + 2 * p - k) ** 2 + 4 * (k - p) * (p + 1)
        assert abs(sphere.f0(k, p, t) - expected) < 1e-12 * (1 + abs(expected))
    for k in range(6):
        t = 0.37
        assert abs(sphere.f0(k, k, t) - (1 + t + k) ** 2) < 1e-12
        assert abs(sphere.f0(k, -1, t) - (1 - t + k) ** 2) < 1e-12


def test_f0_parity_and_zero_coupling_degeneracy():
    rng = np.random.default_rng(42)
    for _ in range(100):
        k = int(rng.integers(1, 15))
        p = int(rng.integers(0, k))
        t = float(rng.uniform(-5, 5))
        assert abs(sphere.f0(k, p, -t) - sphere.f0(k, k - p - 1, t)) < 1e-10
        assert abs(sphere.f0(k, p, 0.0) - (k + 1) ** 2) < 1e-12


def test_f0_lower_bound_off_scalar_edges():
    for k in range(1, 25):
        for p in range(k):
            t = 123.456  # any coupling
            assert sphere.f0(k, p, t) >= 4 * (k - p) * (p + 1) - 1e-9
            assert 4 * (k - p) * (p + 1) >= 4 * k


def test_f0_rejects_bad_indices():
    with pytest.raises(ValueError):
        sphere.f0(2, 3, 0.0)
    with pytest.raises(ValueError):
        sphere.f0(2, -2, 0.0)
    with pytest.raises(ValueError):
        sphere.f0(-1, 0, 0.0)


def test_spectrum_at_zero_coupling_merges_to_classical_multiplicities():
    spec = sphere.spectrum(0.0, 12.0)
    for k in range(11):
        assert spec.multiplicity_at(1.5 + k) == (k + 2) * (k + 1), k
        if 1.5 + k <= 12.0 and k >= 1:
            assert spec.multiplicity_at(-(0.5 + k)) == k * (k + 1), k
    # no eigenvalues in the open gap (-3/2, 3/2)
    assert len(spec.in_window(-1.4, 1.4)) == 0


def test_spectrum_frozen_values_at_half():
    spec = sphere.spectrum(0.5, 3.0)
    got = [(e.value, e.multiplicity) for e in spec]
    expected = [
        (0.5 - np.sqrt(10.25), 3),
        (0.5 - np.sqrt(8.25), 3),
        (0.5 - np.sqrt(4.25), 2),
        (1.0, 1),
        (2.0, 3),
        (0.5 + np.sqrt(4.25), 2),
        (3.0, 5),
    ]
    assert len(got) == len(expected)
    for (gv, gm), (ev, em) in zip(got, expected):
        assert abs(gv - ev) < 1e-12
        assert gm == em


def test_spectrum_labels_carry_quantum_numbers():
    spec = sphere.spectrum(0.5, 3.0)
    by_value = {round(e.value, 9): e for e in spec}
    entry = by_value[round(0.5 + np.sqrt(4.25), 9)]
    assert entry.labels == (("branch", 1, 0, +1),)
    entry = by_value[round(1.0, 9)]
    assert entry.labels == (("minus", 0, None, None),)


def test_spectrum_invariant_under_coupling_sign_flip():
    rng = np.random.default_rng(43)
    for _ in range(10):
        t = float(rng.uniform(0, 4))
        a = sphere.spectrum(t, 6.0)
        b = sphere.spectrum(-t, 6.0)
        assert np.allclose(a.values(), b.values(), atol=1e-9)
        assert np.array_equal(a.multiplicities(), b.multiplicities())


def test_spectrum_is_complete_against_dense_cutoff_scan():
    # raising the cutoff must not add values inside the smaller window
    small = sphere.spectrum(1.3, 4.0)
    large = sphere.spectrum(1.3, 9.0).in_window(-4.0, 4.0)
    assert np.allclose(small.values(), large.values())
    assert np.array_equal(small.multiplicities(), large.multiplicities())


def test_lambda1_cases():
    assert sphere.lambda1(0.0) == pytest.approx(1.5, abs=1e-12)
    assert sphere.lambda1(2.0) == pytest.approx(0.5, abs=1e-12)
    assert sphere.lambda1(2.5) == pytest.approx(0.0, abs=1e-12)
    assert sphere.lambda1(-0.7) == pytest.approx(0.8, abs=1e-12)
    rng = np.random.default_rng(44)
    for _ in range(25):
        t = float(rng.uniform(-8, 8))
        ks = np.arange(0, int(np.ceil(abs(t))) + 3)
        expected = float(np.min(np.abs(1.5 - abs(t) + ks)))
        assert sphere.lambda1(t) == pytest.approx(expected, abs=1e-9)


def test_lambda1_basic_closed_form():
    for t in np.linspace(-6, 6, 25):
        assert sphere.lambda1_basic(t) == pytest.approx(
            0.5 + np.sqrt(t * t + 4.0), abs=1e-12
        )


def test_collision_example_and_consistency():
    t = sphere.collision_t(1, 0, 2, 1)
    assert t == pytest.approx(-2.5, abs=0)
    assert sphere.f0(1, 0, t) == pytest.approx(10.25, abs=1e-12)
    assert sphere.f0(2, 1, t) == pytest.approx(10.25, abs=1e-12)

    rng = np.random.default_rng(45)
    found = 0
    while found < 60:
        k, k2 = int(rng.integers(1, 12)), int(rng.integers(1, 12))
        p, p2 = int(rng.integers(0, k)), int(rng.integers(0, k2))
        if (k, p) == (k2, p2) or 2 * (p - p2) == k - k2:
            continue
        t = sphere.collision_t(k, p, k2, p2)
        assert abs(sphere.f0(k, p, t) - sphere.f0(k2, p2, t)) < 1e-10 * (
            1.0 + abs(sphere.f0(k, p, t))
        )
        found += 1


def test_collision_rejects_parallel_or_invalid():
    with pytest.raises(ValueError):
        sphere.collision_t(2, 1, 4, 2)  # equal slopes never cross
    with pytest.raises(ValueError):
        sphere.collision_t(1, 1, 2, 0)  # p out of branch range
    with pytest.raises(ValueError):
        sphere.collision_t(1, 0, 1, 0)  # identical curve


def test_curve_samples_window_and_content():
    rows = sphere.curve_samples([0.0], 1, window=(-5.0, 5.0))
    got = {(fam, k, p, s, round(v, 9)) for _, fam, k, p, s, v in rows}
    assert ("plus", 0, None, None, 1.5) in got
    assert ("minus", 0, None, None, 1.5) in got
    assert ("branch", 1, 0, 1, 2.5) in got
    assert ("branch", 1, 0, -1, -1.5) in got

    rows = sphere.curve_samples(np.linspace(-5, 5, 11), 5, window=(-5.0, 5.0))
    assert all(-5.0 <= v <= 5.0 for *_, v in rows)
    assert {r[0] for r in rows} == set(np.linspace(-5, 5, 11))


def test_spectrum_rejects_bad_cutoff():
    with pytest.raises(ValueError):
        sphere.spectrum(0.0, -1.0)
