import random

import pytest

from connect4 import (
    ValidationError,
    build_iterated_graph,
    count_admissible_subgraphs,
    dimension_vs_nr,
    enumerate_decompositions,
    enumerate_standard_sets,
    report,
)
from connect4.staircase import empty, random_standard_set
from connect4.stratum import CAVEAT, decomposition_dimension, projection_sizes, stratum_table

from conftest import DELTA_1, DELTA_2, TETRA, ss


def test_tetrahedron_report():
    r = report(TETRA)
    assert projection_sizes(TETRA) == [4, 3, 2]
    assert r.dimension == 9
    assert r.irreducible_components == r.connected_components == 2


def test_size_six_examples():
    assert report(DELTA_1).dimension == 11
    assert report(DELTA_2).dimension == 12
    assert report(DELTA_1).irreducible_components == 1
    assert report(DELTA_2).irreducible_components == 1


def test_caveat_is_attached():
    assert report(TETRA).to_json()["caveat"] == CAVEAT


def test_empty_staircase_rejected():
    with pytest.raises(ValidationError):
        report(empty(3))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_single_point_bound_is_equal(n):
    b = dimension_vs_nr(ss((0,) * n))
    assert (b.dimension, b.bound, b.relation) == (n, n, "equal")


def test_one_variable_bound_is_equal():
    for r in range(1, 8):
        b = dimension_vs_nr(ss(*[(k,) for k in range(r)]))
        assert (b.dimension, b.bound, b.relation) == (r, r, "equal")


def test_size_six_bound_is_strict():
    b = dimension_vs_nr(DELTA_1)
    assert (b.dimension, b.bound, b.relation) == (11, 18, "strict")


def test_bound_and_slicing_dimension_exhaustive():
    for dim in (1, 2, 3, 4):
        for size in range(1, 8):
            for delta in enumerate_standard_sets(dim, size):
                b = dimension_vs_nr(delta)
                assert b.dimension <= b.bound
                for dec in enumerate_decompositions(delta):
                    assert decomposition_dimension(dec) == b.dimension


def test_components_equal_admissible_subgraphs():
    rng = random.Random(17)
    for _ in range(40):
        delta = random_standard_set(rng, rng.randint(1, 4), rng.randint(1, 8))
        g = build_iterated_graph(delta)
        assert report(delta).irreducible_components == count_admissible_subgraphs(g)


def test_table_contains_tetrahedron():
    rows = stratum_table(3, 4)
    assert len(rows) == 13
    row = next(r for r in rows if r["delta"] == TETRA)
    assert (row["dimension"], row["d"], row["n_times_r"]) == (9, 2, 12)
