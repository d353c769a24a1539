import itertools

import pytest

from hypercolor import (
    GenerationFailed,
    GeneratorSpec,
    InvalidParameters,
    NotPrime,
    dual,
    generate,
    is_linear,
    projective_plane,
    random_regular_linear,
    random_uniform_linear,
    regularity,
    stats,
    sunflower,
    uniform_rank,
)
from hypercolor.core import dumps_instance


def test_projective_plane_q2_is_fano():
    h = projective_plane(2)
    assert h.num_vertices == 7 and h.num_edges == 7
    assert regularity(h) == 3 and uniform_rank(h) == 3
    assert is_linear(h)
    # any two lines meet in exactly one point
    for e, f in itertools.combinations(h.edges, 2):
        assert len(set(e) & set(f)) == 1


def test_projective_plane_q3():
    h = projective_plane(3)
    assert h.num_vertices == 13 and h.num_edges == 13
    assert regularity(h) == 4 and uniform_rank(h) == 4
    assert is_linear(h)


def test_projective_plane_rejects_non_primes():
    for q in (0, 1, 4, 6, 9):
        with pytest.raises(NotPrime):
            projective_plane(q)


def test_sunflower_star():
    h = sunflower(4, 2)
    assert h.num_vertices == 5
    assert h.degree(0) == 4
    assert uniform_rank(h) == 2 and is_linear(h)


def test_sunflower_rank3():
    h = sunflower(3, 3)
    assert h.num_vertices == 7
    assert h.degree(0) == 3
    assert all(h.degree(v) == 1 for v in range(1, 7))


@pytest.mark.parametrize("n,rank", [(2, 2), (5, 4), (9, 3)])
def test_sunflower_predicates(n, rank):
    h = sunflower(n, rank)
    assert is_linear(h)
    assert uniform_rank(h) == rank
    assert max(h.degrees()) == n


def test_sunflower_rejects_bad_parameters():
    with pytest.raises(InvalidParameters):
        sunflower(1, 2)
    with pytest.raises(InvalidParameters):
        sunflower(3, 1)


def test_random_regular_linear_predicates():
    h = random_regular_linear(50, 4, seed=1)
    assert h.num_edges == 50
    assert regularity(h) == 4
    assert is_linear(h)
    assert min(h.ranks()) >= 2


def test_random_regular_linear_small_packing():
    for seed in range(5):
        h = random_regular_linear(7, 3, seed=seed)
        assert h.num_edges == 7
        assert regularity(h) == 3
        assert is_linear(h)


def test_random_regular_linear_infeasible():
    with pytest.raises(GenerationFailed):
        random_regular_linear(2, 3, seed=0)
    with pytest.raises(InvalidParameters):
        random_regular_linear(10, 2, seed=0)


def test_random_regular_rank_cap_holds():
    """Linearity caps every rank at floor((n-1)/(r-1)); the packing inherits it."""
    for n, r in ((20, 3), (30, 4), (40, 5)):
        h = random_regular_linear(n, r, seed=9)
        assert max(h.ranks()) <= (n - 1) // (r - 1)


def test_dual_of_regular_output_is_uniform_linear():
    for n, r, seed in ((20, 3, 0), (24, 4, 5), (30, 5, 2)):
        h = random_regular_linear(n, r, seed=seed)
        d = dual(h)
        assert uniform_rank(d) == r
        assert is_linear(d)


def test_random_uniform_linear_high_degree():
    h = random_uniform_linear(30, 3, 10, True, seed=7)
    assert h.num_edges == 10
    assert uniform_rank(h) == 3
    assert is_linear(h)
    assert max(h.degrees()) >= 5


def test_random_uniform_linear_plain():
    h = random_uniform_linear(9, 3, 3, False, seed=1)
    assert h.num_edges == 3
    assert uniform_rank(h) == 3
    assert is_linear(h)


def test_random_uniform_linear_infeasible():
    with pytest.raises(GenerationFailed):
        random_uniform_linear(2, 3, 1, False, seed=0)
    with pytest.raises(InvalidParameters):
        random_uniform_linear(10, 1, 2, False, seed=0)


def test_seed_determinism_byte_identical():
    for spec in (
        GeneratorSpec("random_regular_linear", (30, 3), 42),
        GeneratorSpec("random_uniform_linear", (25, 3, 8, 1), 42),
        GeneratorSpec("sunflower", (5, 3), 0),
        GeneratorSpec("projective_plane", (3,), 0),
    ):
        first = dumps_instance(generate(spec))
        second = dumps_instance(generate(spec))
        assert first == second, spec.kind


def test_different_seeds_usually_differ():
    a = dumps_instance(generate(GeneratorSpec("random_regular_linear", (30, 3), 1)))
    b = dumps_instance(generate(GeneratorSpec("random_regular_linear", (30, 3), 2)))
    assert a != b


def test_generate_rejects_unknown_kind_and_bad_arity():
    with pytest.raises(InvalidParameters):
        generate(GeneratorSpec("moebius", (1,), 0))
    with pytest.raises(InvalidParameters):
        generate(GeneratorSpec("sunflower", (4,), 0))


def test_generated_regular_instances_respect_vertex_cap():
    for n, r in ((20, 3), (20, 5), (50, 4)):
        for seed in range(3):
            s = stats(random_regular_linear(n, r, seed=seed))
            assert s.vertex_bound_N is not None
            assert s.num_vertices <= s.vertex_bound_N
