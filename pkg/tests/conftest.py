import pytest

from hypercolor import build, projective_plane, random_regular_linear, sunflower


@pytest.fixture(scope="session")
def fano():
    return projective_plane(2)


def small_corpus():
    """Named instances with at most 20 vertices, for oracle cross-checks."""
    return [
        ("fano", projective_plane(2)),
        ("single_edge", build(3, [[0, 1, 2]])),
        ("two_disjoint_rank3", build(6, [[0, 1, 2], [3, 4, 5]])),
        ("sunflower_4_2", sunflower(4, 2)),
        ("sunflower_3_3", sunflower(3, 3)),
        ("sunflower_5_3", sunflower(5, 3)),
        ("regular_7_3", random_regular_linear(7, 3, seed=2)),
        ("regular_10_3", random_regular_linear(10, 3, seed=4)),
        ("regular_12_3", random_regular_linear(12, 3, seed=1)),
    ]
