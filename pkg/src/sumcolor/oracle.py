"""Exhaustive search for the r-distant sum distinguishing index and its non-proper variant.

Intended for small graphs only (roughly m <= 10 edges with k <= 12 runs in
seconds; denser six-vertex graphs take longer).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Edge, Graph, bfs_distances, validate_colorable


class SearchLimitExceeded(RuntimeError):
    """The node budget ran out before the search could decide."""


@dataclass(frozen=True)
class ExactResult:
    value: int
    witness: dict[Edge, int]


def _edge_order(g: Graph) -> list[Edge]:
    # fail-first: edges whose lighter endpoint is busiest go first
    return sorted(g.edges, key=lambda e: (-min(g.degree(e[0]), g.degree(e[1])), e))


class _Search:
    def __init__(self, g: Graph, r: int, proper: bool, node_limit: int | None):
        self.g = g
        self.proper = proper
        self.node_limit = node_limit
        self.nodes = 0
        self.order = _edge_order(g)
        # each vertex only needs to be compared against r-neighbours finished before it
        self.near = [
            [u for u in bfs_distances(g, v, r) if u != v] for v in range(g.n)
        ]

    def solve(self, k: int) -> dict[Edge, int] | None:
        g = self.g
        self.k = k
        self.sums = [0] * g.n
        self.left = [g.degree(v) for v in range(g.n)]
        self.used = [set() for _ in range(g.n)]
        self.assign: list[int] = []
        if self._extend(0):
            return dict(sorted(zip(self.order, self.assign)))
        return None

    def _finished_ok(self, v: int) -> bool:
        s = self.sums[v]
        for u in self.near[v]:
            if self.left[u] == 0 and self.sums[u] == s:
                return False
        return True

    def _extend(self, i: int) -> bool:
        if i == len(self.order):
            return True
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise SearchLimitExceeded(f"node limit {self.node_limit} exceeded")
        u, v = self.order[i]
        sums, left, used = self.sums, self.left, self.used
        left[u] -= 1
        left[v] -= 1
        for c in range(1, self.k + 1):
            if self.proper and (c in used[u] or c in used[v]):
                continue
            sums[u] += c
            sums[v] += c
            if (left[u] or self._finished_ok(u)) and (left[v] or self._finished_ok(v)):
                if self.proper:
                    used[u].add(c)
                    used[v].add(c)
                self.assign.append(c)
                if self._extend(i + 1):
                    return True
                self.assign.pop()
                if self.proper:
                    used[u].discard(c)
                    used[v].discard(c)
            sums[u] -= c
            sums[v] -= c
        left[u] += 1
        left[v] += 1
        return False


def _deepen(
    g: Graph, r: int, k_max: int, proper: bool, node_limit: int | None
) -> ExactResult | None:
    if r < 1:
        raise ValueError(f"radius must be >= 1, got {r}")
    if k_max < 1:
        raise ValueError(f"k_max must be >= 1, got {k_max}")
    validate_colorable(g)
    search = _Search(g, r, proper, node_limit)
    k_lo = max(1, g.max_degree) if proper else 1
    for k in range(k_lo, k_max + 1):
        witness = search.solve(k)
        if witness is not None:
            return ExactResult(k, witness)
    return None


def exact_index_witness(
    g: Graph, r: int, k_max: int, node_limit: int | None = None
) -> ExactResult | None:
    """Least k <= k_max with a proper r-distant sum distinguishing colouring, plus a witness.

    The witness is the first colouring found when edges are taken in the
    fail-first order and colours are tried in increasing order, i.e. the
    lexicographically smallest one in that edge order.
    """
    return _deepen(g, r, k_max, True, node_limit)


def exact_index(g: Graph, r: int, k_max: int, node_limit: int | None = None) -> int | None:
    res = exact_index_witness(g, r, k_max, node_limit)
    return None if res is None else res.value


def exact_sr_witness(
    g: Graph, r: int, k_max: int, node_limit: int | None = None
) -> ExactResult | None:
    """Same search with properness dropped (adjacent edges may share colours)."""
    return _deepen(g, r, k_max, False, node_limit)


def exact_sr(g: Graph, r: int, k_max: int, node_limit: int | None = None) -> int | None:
    res = exact_sr_witness(g, r, k_max, node_limit)
    return None if res is None else res.value


def color_within(g: Graph, r: int, k_max: int) -> dict[Edge, int] | None:
    """Any proper r-distant sum distinguishing colouring with colours <= k_max (no minimality)."""
    if g.m == 0:
        return {}
    return _Search(g, r, True, None).solve(k_max)
