"""Spectrum container: merging, queries, tolerance override."""

import numpy as np
import pytest

from magdirac.spectrum import Spectrum, merge_tolerance


def test_merge_combines_close_values_with_weighted_mean():
    spec = Spectrum.from_triples(
        [(1.0, 2, "a"), (1.0 + 5e-10, 3, "b"), (2.0, 1, "c")],
        tolerance=1e-9,
    )
    assert len(spec) == 2
    first = spec.entries[0]
    assert first.multiplicity == 5
    assert abs(first.value - (2 * 1.0 + 3 * (1.0 + 5e-10)) / 5) < 1e-15
    assert first.labels == ("a", "b")
    assert spec.entries[1].multiplicity == 1


def test_merge_is_chained_across_consecutive_gaps():
    # values 0, 0.8e-9, 1.6e-9: pairwise gaps below tolerance chain together
    spec = Spectrum.from_triples(
        [(0.0, 1, None), (0.8e-9, 1, None), (1.6e-9, 1, None)],
        tolerance=1e-9,
    )
    assert len(spec) == 1
    assert spec.entries[0].multiplicity == 3


def test_no_merge_beyond_tolerance():
    spec = Spectrum.from_triples(
        [(0.0, 1, None), (1e-6, 1, None)], tolerance=1e-9
    )
    assert len(spec) == 2


def test_values_sorted_and_total_multiplicity():
    spec = Spectrum.from_triples(
        [(3.0, 2, None), (-1.0, 4, None), (0.5, 1, None)]
    )
    assert np.all(np.diff(spec.values()) > 0)
    assert spec.total_multiplicity() == 7
    assert list(spec.multiplicities()) == [4, 1, 2]


def test_min_abs_and_first_positive():
    spec = Spectrum.from_triples(
        [(-0.25, 1, None), (0.5, 1, None), (2.0, 1, None)]
    )
    assert spec.min_abs() == 0.25
    assert spec.first_positive() == 0.5
    with pytest.raises(ValueError):
        Spectrum([]).min_abs()
    neg = Spectrum.from_triples([(-1.0, 1, None)])
    with pytest.raises(ValueError):
        neg.first_positive()


def test_in_window_and_multiplicity_at():
    spec = Spectrum.from_triples(
        [(-2.0, 1, None), (0.0, 3, None), (1.5, 2, None)]
    )
    win = spec.in_window(-0.5, 1.5)
    assert [e.value for e in win] == [0.0, 1.5]
    assert spec.multiplicity_at(0.0) == 3
    assert spec.multiplicity_at(1.5 + 1e-12, 1e-9) == 2
    assert spec.multiplicity_at(0.7) == 0


def test_tolerance_environment_override(monkeypatch):
    monkeypatch.setenv("MAGDIRAC_TOLERANCE", "1e-3")
    assert merge_tolerance() == 1e-3
    spec = Spectrum.from_triples([(0.0, 1, None), (5e-4, 1, None)])
    assert len(spec) == 1
    monkeypatch.setenv("MAGDIRAC_TOLERANCE", "not-a-number")
    with pytest.raises(ValueError):
        merge_tolerance()
    monkeypatch.setenv("MAGDIRAC_TOLERANCE", "-1e-9")
    with pytest.raises(ValueError):
        merge_tolerance()
    monkeypatch.delenv("MAGDIRAC_TOLERANCE")
    assert merge_tolerance() == 1e-9
