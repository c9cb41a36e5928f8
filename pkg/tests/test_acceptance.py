"""The seven acceptance criteria at their stated tolerances.

Each test records a one-line verdict that the terminal summary prints.
"""

import random
from collections import Counter

import pytest

from sumcolor.cli import targeted_case_counts
from sumcolor.colorer import InfeasibleStep, RunStats, color_distinguishing, reduce_degree_two, run_constructive
from sumcolor.generators import de_bruijn_undirected, cycle, star
from sumcolor.graph import bfs_distances, bound_params, edge_key, is_star, r_neighborhood
from sumcolor.oracle import SearchLimitExceeded, exact_index, exact_index_witness, exact_sr
from sumcolor.proper import is_proper, vizing_color
from sumcolor.verify import verify

from conftest import ACCEPTANCE


def _record(num, ok, detail):
    ACCEPTANCE[num] = (ok, detail)
    print(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {detail}")


@pytest.fixture(scope="module")
def corpus_run(full_corpus):
    """Colour the whole corpus for r = 2 and r = 3 once; shared by criteria 1 and 7."""
    stats = RunStats()
    failures, infeasible = [], 0
    for r in (2, 3):
        for gid, g in full_corpus:
            try:
                col = color_distinguishing(g, r, stats=stats)
            except InfeasibleStep:
                infeasible += 1
                continue
            rep = verify(g, col, r)
            if not rep.ok or rep.max_color > bound_params(g.max_degree, r).palette_max:
                failures.append((gid, r))
    return len(full_corpus), stats, failures, infeasible


def test_criterion_1_corpus_colourings(corpus_run):
    count, _, failures, infeasible = corpus_run
    ok = not failures and infeasible == 0
    _record(1, ok, f"{count} graphs x r in {{2,3}}: {len(failures)} failures, {infeasible} infeasible")
    assert ok, failures[:10]


def test_criterion_2_bound_identities():
    bad = []
    for d in range(2, 31):
        if bound_params(d, 2).palette_max != 13 * d - 6:
            bad.append((d, 2))
        if bound_params(d, 3).palette_max != 6 * d * d + d:
            bad.append((d, 3))
    for d in range(2, 13):
        for r in range(4, 9):
            if bound_params(d, r).palette_max > 6 * d ** (r - 1):
                bad.append((d, r))
    _record(2, not bad, f"closed forms on delta 2..30 and the r>=4 inequality on 2..12 x 4..8: {len(bad)} mismatches")
    assert not bad


def test_criterion_3_stars():
    bad = [(d, r) for d in range(2, 7) for r in (2, 3) if exact_index(star(d), r, 12) != d]
    _record(3, not bad, f"exact index of K_1,d equals d for d in 2..6, r in {{2,3}}: {len(bad)} mismatches")
    assert not bad


def test_criterion_4_oracle_cross_check(small_corpus):
    bad = []
    for gid, g in small_corpus:
        k_max = min(bound_params(g.max_degree, 2).palette_max, 12)
        res = exact_index_witness(g, 2, k_max)
        constructive = max(color_distinguishing(g, 2).values())
        if res is None or res.value > constructive or not verify(g, res.witness, 2).ok:
            bad.append(gid)
    anchor = exact_index(cycle(4), 2, 12)
    ok = not bad and anchor == 4
    _record(4, ok, f"{len(small_corpus)} graphs with n <= 6, r = 2: {len(bad)} failures; C_4 anchor = {anchor}")
    assert ok, bad


def test_criterion_5_inequality_chain(small_corpus):
    compared, bad = 0, []
    for gid, g in small_corpus:
        for r in (2, 3):
            try:
                proper = exact_index(g, r, 12, node_limit=200_000)
                loose = exact_sr(g, r, 12, node_limit=200_000)
            except SearchLimitExceeded:
                continue
            if proper is None or loose is None:
                continue
            compared += 1
            if proper < loose:
                bad.append((gid, r))
    db_ok = True
    for d, r in ((2, 2), (2, 3)):
        g = de_bruijn_undirected(d, r)
        reach = all(len(bfs_distances(g, v, r)) == g.n for v in range(g.n))
        col = color_distinguishing(g, r)
        sums = [sum(col[edge_key(v, u)] for u in g.adj[v]) for v in range(g.n)]
        db_ok &= reach and verify(g, col, r).ok and len(set(sums)) == g.n
    ok = not bad and db_ok and compared > 0
    _record(5, ok, f"index >= s_r on {compared} instances ({len(bad)} violations); de Bruijn (2,2),(2,3) all sums distinct: {db_ok}")
    assert ok


def _main_path(g):
    return g.n >= 4 and not is_star(g) and reduce_degree_two(g) is None


def test_criterion_6_property_suites(full_corpus):
    violations = Counter()
    main_runs = 0
    for gid, g in full_corpus:
        # d^r(v) <= d(v) M
        for r in (2, 3):
            m_quot = bound_params(g.max_degree, r).m_quot
            for v in range(g.n):
                if len(r_neighborhood(g, v, r)) > g.degree(v) * m_quot:
                    violations["neighbourhood size"] += 1
        # Vizing within Delta + 1
        col = vizing_color(g)
        if not is_proper(g, col) or max(col.values()) > g.max_degree + 1:
            violations["vizing"] += 1
        if not _main_path(g):
            continue
        for r in (2, 3):
            main_runs += 1
            try:
                state, _ = run_constructive(g, r, check=True)
            except (AssertionError, InfeasibleStep):
                violations["step invariants"] += 1
                continue
            two_k = state.two_k
            for v in range(g.n):
                res = [state.color[e] % two_k for e in g.incident(v)]
                if len(res) != len(set(res)):
                    violations["mod-2K properness"] += 1
            for v, ps in state.pairsets.items():
                for u in r_neighborhood(g, v, r):
                    if u in state.pairsets and set(ps.members) & set(state.pairsets[u].members):
                        violations["pair set overlap"] += 1
            if any(len(t) > 2 for t in state.touches.values()):
                violations["touch budget"] += 1
            if len(state.touches[edge_key(*state.ordering.root_pair)]) != 1:
                violations["root edge touched twice"] += 1
    # verifier monotonicity on random colourings
    rng = random.Random(0)
    for gid, g in full_corpus[::25]:
        col = {e: rng.randint(1, 5) for e in g.edges}
        prev = set()
        for r in range(1, 5):
            cur = {(u, v) for u, v, _, _ in verify(g, col, r).conflicts}
            if not prev <= cur:
                violations["verifier monotonicity"] += 1
            prev = cur
    total = sum(violations.values())
    _record(6, total == 0, f"{len(full_corpus)} graphs, {main_runs} instrumented runs: {dict(violations) or 'no violations'}")
    assert total == 0, violations


def test_criterion_7_branch_coverage(corpus_run):
    _, stats, _, _ = corpus_run
    natural = dict(sorted(stats.cases.items()))
    extra = RunStats()
    results = targeted_case_counts(extra)
    merged = Counter(stats.cases) + Counter(extra.cases)
    missing = [c for c in range(1, 6) if not merged[c]]
    ok = not missing and all(ok for _, ok in results)
    _record(
        7, ok,
        f"corpus cases {natural}; targeted constructions {dict(sorted(extra.cases.items()))}; unreached {missing or 'none'}",
    )
    assert ok
