# imports - module imports
from nlsid.design.grid import (
    FrequencyGrid,
    build_grid,
    EXCITED,
    ODD_DETECTION,
    EVEN_DETECTION,
    OUT_OF_BAND
)
from nlsid.exception   import GridError

# imports - test imports
import pytest
import numpy as np

def test_build_grid_full():
    grid = build_grid(1000, 1000, 10, 100)

    assert grid.f0      == 1.0
    assert grid.n_bins  == 501
    assert grid.excited_bins.tolist() == list(range(10, 101))
    assert not grid.detection_bins.size

    assert np.allclose(grid.frequencies([10, 20]), [10.0, 20.0])

def test_build_grid_odd():
    grid = build_grid(1000, 1000, 10, 100, kind = "odd")

    assert np.all(grid.excited_bins % 2 == 1)
    assert grid.excited_bins[0] == 11 and grid.excited_bins[-1] == 99
    assert np.all(grid.even_detection_bins % 2 == 0)

    classes = grid.classify()
    assert classes[11] == EXCITED
    assert classes[12] == EVEN_DETECTION
    assert classes[300] == OUT_OF_BAND

def test_build_grid_odd_sparse():
    grid  = build_grid(1000, 1000, 1, 200, kind = "odd_sparse", seed = 3, group_size = 4, drops_per_group = 1)
    odd   = np.arange(1, 201, 2)

    assert grid.detection_bins.size == odd.size // 4
    assert np.array_equal(np.union1d(grid.excited_bins, grid.detection_bins), odd)
    assert not np.intersect1d(grid.excited_bins, grid.detection_bins).size

    for g in range(odd.size // 4):
        group = odd[g * 4:(g + 1) * 4]
        assert np.intersect1d(group, grid.detection_bins).size == 1

    again = build_grid(1000, 1000, 1, 200, kind = "odd_sparse", seed = 3, group_size = 4, drops_per_group = 1)
    assert again == grid

    classes = grid.classify()
    assert classes[grid.detection_bins[0]] == ODD_DETECTION

def test_build_grid_zippered():
    grids = [build_grid(1000, 1000, 10, 100, kind = "zippered", channel_index = c, n_channels = 2)
        for c in range(2)]

    assert not np.intersect1d(grids[0].excited_bins, grids[1].excited_bins).size
    assert np.array_equal(np.union1d(grids[0].excited_bins, grids[1].excited_bins), np.arange(10, 101))

def test_build_grid_errors():
    with pytest.raises(GridError):
        build_grid(1000, 1001, 10, 100)

    with pytest.raises(GridError):
        build_grid(1000, 1000, 10, 500)

    with pytest.raises(GridError):
        build_grid(1000, 1000, 100, 10)

    with pytest.raises(GridError):
        build_grid(1000, 1000, 10, 100, kind = "foobar")

    with pytest.raises(GridError):
        build_grid(1000, 1000, 10, 100, kind = "odd_sparse")

    with pytest.raises(GridError):
        FrequencyGrid(sample_rate = 1000.0, n_samples = 1000, excited_bins = [10, 11], detection_bins = [11])

def test_grid_dict():
    grid = build_grid(1000, 1000, 10, 100, kind = "odd_sparse", seed = 1, group_size = 3)
    assert FrequencyGrid.from_dict(grid.to_dict()) == grid
