# imports - module imports
from nlsid.design import (
    build_grid,
    synthesize_multisine,
    sine_excitation,
    line_amplitudes
)
from nlsid.exception import SynthesisError

# imports - test imports
import pytest
import numpy as np

def test_synthesize_multisine():
    grid = build_grid(1000, 1024, 5, 300, kind = "odd")
    real = synthesize_multisine(grid, rms_target = 0.5, seed = 42)

    assert real.samples.shape == (1024,)
    assert real.rms == pytest.approx(0.5, rel = 1e-12)

    spectrum = np.fft.rfft(real.samples)
    excited  = grid.excited_bins
    others   = np.setdiff1d(np.arange(grid.n_bins), excited)

    assert np.allclose(np.abs(spectrum[excited]), np.sqrt(1024) * real.amplitudes[excited])
    assert np.max(np.abs(spectrum[others])) < 1e-9 * np.max(np.abs(spectrum))

    # flat profile
    assert np.allclose(real.amplitudes[excited], real.amplitudes[excited][0])

def test_synthesize_multisine_seed():
    grid = build_grid(1000, 1024, 5, 300)

    a = synthesize_multisine(grid, seed = 1)
    b = synthesize_multisine(grid, seed = 1)
    c = synthesize_multisine(grid, seed = 2)

    assert np.array_equal(a.samples, b.samples)
    assert not np.allclose(a.samples, c.samples)

    assert np.array_equal(a.periods(3)[1024:2048], a.samples)

def test_synthesize_multisine_profile():
    grid    = build_grid(1000, 1000, 10, 20)
    profile = np.linspace(1, 2, grid.n_excited)
    real    = synthesize_multisine(grid, amplitude_profile = profile, rms_target = None)

    assert np.allclose(real.amplitudes[grid.excited_bins], profile)

    with pytest.raises(SynthesisError):
        synthesize_multisine(grid, amplitude_profile = {30: 1.0})

    with pytest.raises(SynthesisError):
        synthesize_multisine(grid, amplitude_profile = np.ones(3))

    with pytest.raises(SynthesisError):
        synthesize_multisine(grid, rms_target = 0)

def test_synthesize_multisine_redistribute():
    grid  = build_grid(1000, 1000, 1, 200, kind = "odd_sparse", seed = 0, group_size = 4)
    plain = synthesize_multisine(grid, rms_target = None)
    moved = synthesize_multisine(grid, rms_target = None, redistribute = True)

    k = grid.excited_bins[0]
    assert moved.amplitudes[k] == pytest.approx(plain.amplitudes[k] * np.sqrt(4 / 3))

def test_sine_excitation():
    real = sine_excitation(1000, 1000, 50, amplitude = 2.0, phase = 0.3)
    t    = np.arange(1000)

    assert np.allclose(real.samples, 2.0 * np.cos(2 * np.pi * 50 * t / 1000 + 0.3))
    assert line_amplitudes(real)[50] == pytest.approx(1.0)

def test_synthesize_multisine_phase_expectation():
    grid   = build_grid(1000, 64, 10, 300)
    n      = 1000
    phases = np.array([synthesize_multisine(grid, seed = seed).phases[grid.excited_bins] for seed in range(n)])

    assert np.all(np.abs(np.mean(np.exp(1j * phases), axis = 0)) < 3 / np.sqrt(n))

def test_synthesize_multisine_periodic():
    grid = build_grid(1000, 256, 1, 400, kind = "odd")
    real = synthesize_multisine(grid, seed = 3)

    # two periods on the 2N grid: only the even bins carry energy
    X = np.fft.fft(real.periods(2))
    assert np.max(np.abs(X[1::2])) < 1e-12 * np.max(np.abs(X))
