import json
import sys

import numpy as np
import pytest

from mixlat.core import ProductRieszSpace
from mixlat.grid import GridSpace
from mixlat.laws import law_rng
from mixlat.ray import RaySpace, random_ray_space

# (n, k) shapes of the random ray-space fixtures
RAY_SHAPES = ((2, 4), (3, 5), (4, 6), (5, 8), (3, 8))
FIXTURE_SEED = 2024


def random_ray_spaces():
    rng = law_rng(FIXTURE_SEED, "fixtures")
    return [random_ray_space(rng, n, k) for n, k in RAY_SHAPES]


@pytest.fixture
def quadrant():
    return RaySpace(np.eye(2), [1.0, 1.0])


@pytest.fixture
def grid3():
    return GridSpace(2)


@pytest.fixture
def product4():
    return ProductRieszSpace(4)


@pytest.fixture(scope="session")
def ray_spaces():
    return random_ray_spaces()


@pytest.fixture
def spec_files(tmp_path):
    """Space and set JSON files for CLI tests."""
    files = {
        "quadrant": {"type": "ray_cone", "A": [[1, 0], [0, 1]], "x_hat": [1, 1]},
        "grid3": {"type": "bv_grid", "m": 2},
        "p4": {"type": "product_riesz", "n": 4},
        "r3": {"type": "ray_cone", "A": np.eye(3).tolist(), "x_hat": [1, 1, 1]},
        "pts": {"type": "points", "pts": [[0, 0], [3, 1]]},
        "box3": {"type": "box", "lo": [-1, -1, -1], "hi": [1, 1, 1]},
    }
    paths = {}
    for name, body in files.items():
        path = tmp_path / f"{name}.json"
        path.write_text(json.dumps(body), encoding="utf-8")
        paths[name] = str(path)
    return paths


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS, key=lambda s: int(s.split()[2].rstrip(":"))):
        terminalreporter.write_line(line)
