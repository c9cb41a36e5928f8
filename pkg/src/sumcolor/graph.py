"""Simple undirected graphs, truncated BFS, Moore-bound arithmetic and edge-list I/O."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, TextIO

Edge = tuple[int, int]


class GraphError(ValueError):
    """Malformed graph input (bad endpoint, loop, duplicate edge, bad file)."""


class IsolatedEdgeError(GraphError):
    """The graph has a connected component equal to K_2."""

    def __init__(self, components: list[tuple[int, int]]):
        self.components = components
        listing = ", ".join(f"{{{u},{v}}}" for u, v in components)
        super().__init__(f"graph has isolated edge component(s): {listing}")


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    Build instances with :func:`from_edge_list`; the constructor trusts its
    arguments.
    """

    n: int
    edges: tuple[Edge, ...]
    adj: tuple[tuple[int, ...], ...] = field(repr=False)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self._edge_set

    @property
    def _edge_set(self) -> frozenset[Edge]:
        # cached lazily; frozen dataclass so go through object.__setattr__
        try:
            return self.__dict__["_es"]
        except KeyError:
            es = frozenset(self.edges)
            object.__setattr__(self, "_es", es)
            return es

    def incident(self, v: int) -> list[Edge]:
        return [edge_key(v, u) for u in self.adj[v]]

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges)


def from_edge_list(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    seen: set[Edge] = set()
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for pair in pairs:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"endpoint out of range [0, {n}) in edge ({u}, {v})")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v})")
        e = edge_key(u, v)
        if e in seen:
            raise GraphError(f"duplicate edge ({u}, {v})")
        seen.add(e)
        nbrs[u].append(v)
        nbrs[v].append(u)
    return Graph(n, tuple(sorted(seen)), tuple(tuple(sorted(a)) for a in nbrs))


def bfs_distances(g: Graph, source: int, limit: int | None = None) -> dict[int, int]:
    """Distances from ``source`` to every vertex within ``limit`` hops (all if None)."""
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        d = dist[u]
        if limit is not None and d >= limit:
            continue
        for w in g.adj[u]:
            if w not in dist:
                dist[w] = d + 1
                queue.append(w)
    return dist


def r_neighborhood(g: Graph, v: int, r: int) -> set[int]:
    """Vertices other than ``v`` at distance at most ``r`` from ``v``."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range [0, {g.n})")
    if r < 1:
        raise ValueError(f"radius must be >= 1, got {r}")
    out = set(bfs_distances(g, v, r))
    out.discard(v)
    return out


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest vertex."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = sorted(bfs_distances(g, s))
        for v in comp:
            seen[v] = True
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    return g.n == 0 or len(bfs_distances(g, 0)) == g.n


def diameter(g: Graph) -> int:
    """Largest finite distance; raises GraphError for disconnected graphs."""
    best = 0
    for v in range(g.n):
        dist = bfs_distances(g, v)
        if len(dist) != g.n:
            raise GraphError("diameter of a disconnected graph is infinite")
        best = max(best, max(dist.values()))
    return best


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph relabelled to ``0..k-1`` plus the map back to ``g``'s labels."""
    orig = sorted(vertices)
    index = {v: i for i, v in enumerate(orig)}
    pairs = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return from_edge_list(len(orig), pairs), orig


def validate_colorable(g: Graph) -> None:
    """Raise :class:`IsolatedEdgeError` listing every K_2 component of ``g``."""
    bad = []
    for comp in connected_components(g):
        if len(comp) == 2:
            bad.append((comp[0], comp[1]))
    if bad:
        raise IsolatedEdgeError(bad)


def is_star(g: Graph) -> bool:
    """True for K_{1,k} with k >= 2 (connectedness assumed by callers)."""
    if g.n < 3 or g.m != g.n - 1:
        return False
    return g.max_degree == g.n - 1


@dataclass(frozen=True)
class BoundParams:
    """Moore bound and derived budget quantities for maximum degree Δ and radius r.

    ``m_quot`` is (M_{Δ,r} - 1)/Δ, ``k_val`` is that plus Δ - 1, and the
    constructive colouring never uses a colour above ``palette_max``.
    """

    delta: int
    r: int
    moore: int
    m_quot: int
    k_val: int
    palette_max: int


def moore_bound(delta: int, r: int) -> int:
    """1 + Δ + Δ(Δ-1) + ... + Δ(Δ-1)^(r-1)."""
    return 1 + sum(delta * (delta - 1) ** i for i in range(r))


def bound_params(delta: int, r: int) -> BoundParams:
    if delta < 2:
        raise ValueError(f"maximum degree must be >= 2, got {delta}")
    if r < 2:
        raise ValueError(f"radius must be >= 2, got {r}")
    moore = moore_bound(delta, r)
    m_quot, rem = divmod(moore - 1, delta)
    if rem:
        raise ArithmeticError(f"Moore bound {moore} - 1 not divisible by {delta}")
    k_val = m_quot + delta - 1
    return BoundParams(delta, r, moore, m_quot, k_val, 6 * k_val + delta)


# --- edge-list text format -------------------------------------------------


def _data_lines(stream: TextIO) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(stream, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def read_edge_list(stream: TextIO) -> Graph:
    """Parse ``n m`` followed by ``m`` lines of ``u v`` (``#`` lines are comments)."""
    lines = _data_lines(stream)
    try:
        lineno, head = next(lines)
    except StopIteration:
        raise GraphError("empty graph file: missing 'n m' header") from None
    if len(head) != 2:
        raise GraphError(f"line {lineno}: expected 'n m', got {' '.join(head)!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphError(f"line {lineno}: non-integer header {' '.join(head)!r}") from None
    pairs = []
    seen: set[Edge] = set()
    for lineno, parts in lines:
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {' '.join(parts)!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer vertex in {' '.join(parts)!r}") from None
        try:
            # validate incrementally so errors carry the line number
            from_edge_list(n, [(u, v)])
        except GraphError as exc:
            raise GraphError(f"line {lineno}: {exc}") from None
        if edge_key(u, v) in seen:
            raise GraphError(f"line {lineno}: duplicate edge ({u}, {v})")
        seen.add(edge_key(u, v))
        pairs.append((u, v))
    if len(pairs) != m:
        raise GraphError(f"header announces {m} edges but file has {len(pairs)}")
    return from_edge_list(n, pairs)


def write_edge_list(g: Graph, stream: TextIO, comments: Iterable[str] = ()) -> None:
    for c in comments:
        stream.write(f"# {c}\n")
    stream.write(f"{g.n} {g.m}\n")
    for u, v in g.edges:
        stream.write(f"{u} {v}\n")
