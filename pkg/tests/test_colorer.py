import pytest
from hypothesis import given, settings

from sumcolor.colorer import (
    AlgoState,
    InfeasibleStep,
    PairSet,
    RunStats,
    _RootStep,
    _exchange,
    _select_case,
    build_ordering,
    color_distinguishing,
    extend_after_reduction,
    finalize_root_pair,
    initial_coloring,
    reduce_degree_two,
    run_constructive,
)
from sumcolor.generators import complete, complete_bipartite, cycle, de_bruijn_undirected, path, star
from sumcolor.graph import IsolatedEdgeError, bound_params, edge_key, from_edge_list
from sumcolor.targeted import final_step_state, is_legitimate, targeted_states
from sumcolor.verify import verify

from strategies import graphs


def _assert_ok(g, r, col):
    rep = verify(g, col, r)
    assert rep.ok, rep.to_text()
    if g.m:
        assert rep.max_color <= bound_params(max(g.max_degree, 2), r).palette_max


# --- pair sets ---------------------------------------------------------------


def test_pairset_containing():
    k = 5
    for value in range(1, 200):
        ps = PairSet.containing(value, k)
        assert value in ps
        assert ps.members == (ps.s, ps.s + 2 * k)
        assert ps.s % (4 * k) < 2 * k


def test_pairsets_partition_integers():
    k = 3
    seen = {}
    for value in range(0, 120):
        seen.setdefault(PairSet.containing(value, k), []).append(value)
    assert all(len(v) == 2 for v in seen.values() if max(v) < 100)


def test_pairset_rejects_upper_half():
    with pytest.raises(ValueError):
        PairSet(7, 3)


# --- ordering and initial colouring -------------------------------------------


def test_ordering_puts_root_pair_last():
    g = complete_bipartite(3, 4)
    o = build_ordering(g)
    a, b = o.root_pair
    assert list(o.sequence[-2:]) == [a, b]
    assert g.degree(b) >= g.degree(a)
    assert o.position[b] == g.n
    # the parent of every other vertex comes later in the ordering
    for v in o.sequence[:-1]:
        assert o.position[o.parent[v]] > o.position[v]


def test_ordering_lower_root_swaps_roles():
    g = complete_bipartite(2, 4)
    hi, lo = build_ordering(g, "higher"), build_ordering(g, "lower")
    assert hi.root_pair == lo.root_pair[::-1]
    with pytest.raises(ValueError):
        build_ordering(g, "middle")


def test_ordering_rejects_star():
    with pytest.raises(ValueError):
        build_ordering(star(4))


def test_initial_coloring_window():
    g = complete(5)
    o = build_ordering(g)
    params = bound_params(g.max_degree, 2)
    st = initial_coloring(g, o, params, 2)
    two_k = 2 * params.k_val
    for e, c in st.color.items():
        if e in o.tree_edges():
            assert c == two_k + 1
        else:
            assert two_k + 1 <= c <= two_k + g.max_degree
    assert st.fixed == set(g.edges) - o.tree_edges()


def test_set_color_guards_palette():
    g = complete(4)
    params = bound_params(3, 2)
    st = initial_coloring(g, build_ordering(g), params, 2)
    with pytest.raises(InfeasibleStep) as info:
        st.set_color(g.edges[0], params.palette_max + 1, "test")
    assert "color" in info.value.dump


# --- whole runs ---------------------------------------------------------------


@pytest.mark.parametrize("r", [2, 3, 4])
@pytest.mark.parametrize(
    "g",
    [path(3), path(7), cycle(4), cycle(9), star(5), complete(4), complete(6),
     complete_bipartite(3, 3), complete_bipartite(2, 5), de_bruijn_undirected(2, 3)],
    ids=lambda g: f"n{g.n}m{g.m}",
)
def test_classical_graphs(g, r):
    _assert_ok(g, r, color_distinguishing(g, r, check=True))


def test_disconnected_graph_uses_per_component_palettes():
    g = from_edge_list(9, [(0, 1), (1, 2), (3, 4), (3, 5), (3, 6), (3, 7), (4, 5), (5, 6), (8, 2)])
    col = color_distinguishing(g, 2)
    assert verify(g, col, 2).ok


def test_isolated_edges_rejected():
    with pytest.raises(IsolatedEdgeError):
        color_distinguishing(from_edge_list(5, [(0, 1), (2, 3), (3, 4)]), 2)


def test_radius_one_rejected():
    with pytest.raises(ValueError):
        color_distinguishing(path(4), 1)


def test_star_uses_delta_colours():
    assert max(color_distinguishing(star(6), 3).values()) == 6


def test_bridged_reduction_for_large_radius():
    stats = RunStats()
    color_distinguishing(cycle(10), 5, stats=stats)
    assert stats.bridged_reductions > 0 and stats.reductions == 0


def test_reduction_counts_for_small_radius():
    stats = RunStats()
    color_distinguishing(cycle(10), 3, stats=stats)
    assert stats.reductions > 0 and stats.bridged_reductions == 0


def test_reduce_degree_two_picks_lowest():
    assert reduce_degree_two(path(5)) == (1, 0, 2)
    assert reduce_degree_two(complete(4)) is None


def test_extension_avoids_neighbour_sums():
    g = path(5)
    params = bound_params(2, 2)
    col = extend_after_reduction(g, 2, 1, 3, {(0, 1): 1, (3, 4): 1}, 2, params, [])
    assert verify(g, col, 2).ok


def test_run_constructive_state():
    g = complete(5)
    state, stats = run_constructive(g, 2, check=True)
    assert stats.main_steps == g.n - 2
    assert len(state.pairsets) == g.n - 2
    assert verify(g, state.color, 2).ok
    a, b = state.ordering.root_pair
    assert len(state.touches[edge_key(a, b)]) == 1


# --- final step: case selection and the rare cases ------------------------------


@pytest.mark.parametrize(
    "ja,jb,da,db,case",
    [
        (0, 0, 3, 3, 1),
        (4, 1, 3, 3, 1),
        (4, 1, 4, 2, 2),
        (5, 1, 5, 2, 2),
        (2, 2, 3, 3, 3),
        (1, 4, 2, 4, 4),
        (1, 5, 2, 5, 4),
        (1, 4, 3, 3, 5),
        (4, 4, 3, 3, None),
    ],
)
def test_select_case(ja, jb, da, db, case):
    assert _select_case(ja, jb, da, db) == case


@pytest.mark.parametrize("t", targeted_states(), ids=lambda t: t.name)
def test_targeted_states_reach_their_case(t):
    state = final_step_state(t.graph, t.r, t.root, t.color)
    assert is_legitimate(state)
    stats = RunStats()
    col = finalize_root_pair(state, stats)
    assert stats.cases == {t.expected_case: 1}
    _assert_ok(t.graph, t.r, col)


def _case4_root_step():
    t = targeted_states()[0]
    state = final_step_state(t.graph, t.r, t.root, t.color)
    return state, _RootStep(state)


def test_exchange_keeps_first_sum_and_root_residue():
    state, rs = _case4_root_step()
    first = rs.b
    rho = rs.residues[0]
    opts = rs.first_options(first, rho)
    tried = 0
    for d1 in opts:
        d2 = d1 + 2 * rs.two_k
        if d2 not in opts:
            continue
        stats = RunStats()
        cfg = _exchange(rs, first, rho, [d1, d2], stats)
        assert cfg is not None and stats.exchanges == 1
        assert rs.first_sum(first, cfg.x, cfg.first) in (d1, d2)
        assert cfg.x % rs.two_k == rho
        tried += 1
    assert tried


def test_exchange_result_applies_cleanly():
    state, rs = _case4_root_step()
    first, rho = rs.b, rs.residues[0]
    opts = rs.first_options(first, rho)
    cfg = _exchange(rs, first, rho, [opts[0], opts[0] + 2 * rs.two_k], None)
    rs.apply(first, cfg)
    second = rs.other(first)
    assert state.sum_at(second) not in rs.blocked[second]
    assert state.sum_at(second) != state.sum_at(first)
    assert all(1 <= c <= state.params.palette_max for c in state.color.values())


def test_exchange_precondition():
    state, rs = _case4_root_step()
    with pytest.raises(InfeasibleStep, match="precondition"):
        _exchange(rs, rs.b, rs.residues[0], [10, 11], None)


# --- property tests -------------------------------------------------------------


@given(graphs(min_n=3, max_n=10, connected=True))
@settings(max_examples=150, deadline=None)
def test_random_connected_graphs_r2(g):
    _assert_ok(g, 2, color_distinguishing(g, 2, check=True))


@given(graphs(min_n=3, max_n=9, connected=True))
@settings(max_examples=80, deadline=None)
def test_random_connected_graphs_r3_r4(g):
    for r in (3, 4):
        _assert_ok(g, r, color_distinguishing(g, r, check=True))


@given(graphs(min_n=3, max_n=9, connected=True))
@settings(max_examples=80, deadline=None)
def test_lower_root_variant(g):
    _assert_ok(g, 2, color_distinguishing(g, 2, check=True, root="lower"))
