import math

import numpy as np
import pytest

import ghzhs


def test_ghz_density_matrix():
    rho = ghzhs.ghz_density()
    m = rho.entries
    assert m.shape == (8, 8)
    for i, j in [(0, 0), (0, 7), (7, 0), (7, 7)]:
        assert m[i, j] == 0.5
    assert abs(m).sum() == pytest.approx(2.0)
    assert rho.purity() == pytest.approx(1.0, abs=1e-12)


def test_decompose_matches_eq8():
    c = ghzhs.decompose(ghzhs.ghz_density())
    assert c.coefficient("XXX") == pytest.approx(1.0, abs=1e-12)
    assert c.coefficient("XYY") == pytest.approx(-1.0, abs=1e-12)
    assert c.coefficient("IZZ") == pytest.approx(1.0, abs=1e-12)
    assert c.coefficient("IIX") == pytest.approx(0.0, abs=1e-12)
    assert c.purity_sum() == pytest.approx(8.0, abs=1e-12)
    assert np.allclose(c.t_bc(), np.diag([0, 0, 1.0]), atol=1e-12)


def test_reconstruct_round_trip():
    rho = ghzhs.random_density(seed=7, n_parties=3, rank=4)
    c = ghzhs.decompose(rho)
    rebuilt = ghzhs.reconstruct(c)
    assert np.max(np.abs(rebuilt - rho.entries)) < 1e-12


def test_numpy_constructor_and_validation():
    rho = ghzhs.DensityMatrix(1, np.eye(2, dtype=complex) / 2)
    assert ghzhs.partial_trace(rho, [0]).n_parties == 1
    with pytest.raises(ghzhs.ValidationError):
        ghzhs.DensityMatrix(1, np.diag([0.9, 0.0]).astype(complex))


def test_correlation_closed_form():
    settings = ghzhs.PhaseSettings(math.pi / 2, 0.0, 0.0)
    assert ghzhs.correlation(settings) == pytest.approx(1.0, abs=1e-12)
    triple = ghzhs.PhaseSettings(0.3, 0.8, -0.4)
    assert ghzhs.correlation(triple) == pytest.approx(math.sin(0.7), abs=1e-12)


def test_ghsz_report():
    report = ghzhs.ghsz_contradiction_report()
    assert report.contradiction
    assert report.max_lhv_constraints == 3
    assert report.local_realist_fourth == 1.0
    assert report.product == pytest.approx(-1.0, abs=1e-12)


def test_locality_verification():
    rho = ghzhs.ghz_density()
    u = ghzhs.LocalUnitary(0, ghzhs.beam_splitter_unitary(0.7))
    report = ghzhs.verify_locality(rho, u, 1e-12)
    assert report.passed
    unchanged = {b.block for b in report.unchanged_blocks}
    assert unchanged == {"unit", "s", "p", "t_bc"}
    sweep = ghzhs.locality_sweep(rho, party=1, n_trials=10, seed=3, tol=1e-12)
    assert sweep.passed


def test_sampling_is_deterministic():
    settings = ghzhs.PhaseSettings(0.2, 0.4, 0.6)
    a = ghzhs.sample_outcomes(settings, count=5000, seed=11)
    b = ghzhs.sample_outcomes(settings, count=5000, seed=11)
    assert a == b
    assert sum(a) == 5000
