import pytest

from sumcolor.generators import complete, cycle, path, star
from sumcolor.graph import IsolatedEdgeError, from_edge_list
from sumcolor.oracle import (
    SearchLimitExceeded,
    color_within,
    exact_index,
    exact_index_witness,
    exact_sr,
)
from sumcolor.verify import verify


def test_star_k13():
    assert exact_index(star(3), 2, 10) == 3


def test_p3_values():
    assert exact_index(path(3), 1, 5) == 2
    assert exact_sr(path(3), 1, 5) == 1
    assert exact_sr(path(3), 2, 5) == 2


def test_c4_r2():
    assert exact_index(cycle(4), 2, 10) == 4


def test_witness_is_valid_and_lexicographically_first():
    res = exact_index_witness(cycle(5), 2, 10)
    assert verify(cycle(5), res.witness, 2).ok
    assert max(res.witness.values()) == res.value


def test_k_max_too_small_returns_none():
    assert exact_index(cycle(4), 2, 3) is None


def test_node_limit():
    with pytest.raises(SearchLimitExceeded):
        exact_index(complete(6), 2, 12, node_limit=50)


def test_isolated_edge_rejected():
    with pytest.raises(IsolatedEdgeError):
        exact_index(from_edge_list(2, [(0, 1)]), 2, 5)


def test_color_within_is_any_solution():
    col = color_within(path(3), 2, 9)
    assert verify(path(3), col, 2).ok
