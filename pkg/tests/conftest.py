import os
from pathlib import Path

import pytest

from odac import Dataset

REPO_ROOT = Path(__file__).resolve().parent.parent


def random_dataset(rng, q, n, scale=10.0):
    return Dataset(rng.uniform(-scale, scale, size=(q, n)))


def grid_dataset(rng, q, n, step=0.0625, span=2000):
    """Data on a dyadic grid: +/- translation by grid multiples stays exact."""
    return Dataset(rng.integers(-span, span, size=(q, n)) * step)


@pytest.fixture(scope="session")
def iris_groups():
    """Iris feature rows grouped by species, or None when unavailable.

    Prefers a user-supplied UCI-format file (data/iris.data, iris.data,
    or $ODAC_IRIS); falls back to scikit-learn's bundled copy.
    """
    from odac import read_species_table

    candidates = [
        os.environ.get("ODAC_IRIS"),
        REPO_ROOT / "data" / "iris.data",
        REPO_ROOT / "iris.data",
    ]
    for path in candidates:
        if path and Path(path).is_file():
            return read_species_table(Path(path), label_column=-1)
    try:
        from sklearn.datasets import load_iris
    except ImportError:
        return None
    bunch = load_iris()
    names = [f"Iris-{name}" for name in bunch.target_names]
    return {
        names[t]: bunch.data[bunch.target == t].astype(float)
        for t in range(len(names))
    }


@pytest.fixture(scope="session")
def wilt_labeled():
    """User-supplied wilt benchmark as a LabeledDataset, or None.

    Expects CSV with 6 feature columns behind data/wilt.csv (or
    $ODAC_WILT), label column named `outlier` when a header is present,
    else the last column; labels 0/1.
    """
    from odac import read_csv

    candidates = [
        os.environ.get("ODAC_WILT"),
        REPO_ROOT / "data" / "wilt.csv",
        REPO_ROOT / "wilt.csv",
    ]
    for path in candidates:
        if path and Path(path).is_file():
            with open(path, "r", encoding="utf-8") as handle:
                first = handle.readline()
            has_header = any(c.isalpha() for c in first.split(",")[0])
            label = "outlier" if has_header else -1
            return read_csv(Path(path), has_header=has_header, label_column=label)
    return None
