import pathlib

import pytest

from dseq.store import ResultCache

DATA_DIR = pathlib.Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def session_cache(tmp_path_factory):
    """One cache shared across the whole run so later tests reuse records."""
    path = tmp_path_factory.mktemp("cache") / "dseq-cache.csv"
    with ResultCache(path) as cache:
        yield cache


def golden_rows(number: int) -> list[tuple[int, tuple[int, ...]]]:
    """Rows of tests/data/table<number>.csv as (prime, counts) pairs."""
    lines = (DATA_DIR / f"table{number}.csv").read_text().splitlines()
    assert lines[0] == "prime,c0,c1,c2,c3,c4,c5,c6,c7,c8,c9"
    rows = []
    for line in lines[1:]:
        parts = [int(x) for x in line.split(",")]
        rows.append((parts[0], tuple(parts[1:])))
    return rows
