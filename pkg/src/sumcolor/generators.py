"""Graph families: classical graphs, small connected graphs, G(n, p) and undirected de Bruijn graphs."""

from __future__ import annotations

import itertools
import random
from functools import lru_cache
from typing import Iterator

from .graph import Graph, from_edge_list

MAX_ENUMERATION_ORDER = 8
# connected graphs on n unlabelled vertices (OEIS A001349)
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}
ENUMERATION_MODE = "isomorphism classes (canonical form by colour refinement + individualisation)"


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def star(k: int) -> Graph:
    """K_{1,k} with centre 0."""
    if k < 1:
        raise ValueError(f"star needs k >= 1 leaves, got {k}")
    return from_edge_list(k + 1, [(0, i) for i in range(1, k + 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"complete graph needs n >= 1, got {n}")
    return from_edge_list(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}: parts ``0..a-1`` and ``a..a+b-1``."""
    if a < 1 or b < 1:
        raise ValueError(f"complete bipartite needs positive part sizes, got {a}, {b}")
    return from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])


CLASSICAL = {
    "path": path,
    "cycle": cycle,
    "star": star,
    "complete": complete,
    "complete_bipartite": complete_bipartite,
}


def classical(kind: str, *sizes: int) -> Graph:
    try:
        make = CLASSICAL[kind]
    except KeyError:
        raise ValueError(f"unknown family {kind!r}; choose from {sorted(CLASSICAL)}") from None
    try:
        return make(*sizes)
    except TypeError:
        raise ValueError(f"wrong number of sizes for {kind}: {sizes}") from None


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdős–Rényi G(n, p); reproducible from ``seed``."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    return from_edge_list(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def de_bruijn_undirected(d: int, r: int, max_vertices: int = 1 << 20) -> Graph:
    """Symmetrised shift graph on words of length ``r`` over ``d`` letters.

    Word ``x`` (read as a base-``d`` integer) is joined to ``(x*d + a) mod d^r``
    for every letter ``a``; loops are dropped and parallel edges merged.  The
    result has maximum degree at most 2d and diameter at most r.
    """
    if d < 2 or r < 1:
        raise ValueError(f"need d >= 2 and r >= 1, got d={d}, r={r}")
    size = d**r
    if size > max_vertices:
        raise OverflowError(f"d^r = {size} exceeds the vertex budget {max_vertices}")
    pairs = set()
    for x in range(size):
        for a in range(d):
            y = (x * d + a) % size
            if x != y:
                pairs.add((min(x, y), max(x, y)))
    return from_edge_list(size, sorted(pairs))


def de_bruijn_word(x: int, d: int, r: int) -> str:
    digits = []
    for _ in range(r):
        x, a = divmod(x, d)
        digits.append("0123456789abcdefghijklmnopqrstuvwxyz"[a])
    return "".join(reversed(digits))


# --- exhaustive enumeration of small connected graphs ----------------------


def _refine(n: int, nbrs: list[list[int]], colors: list[int]) -> list[int]:
    ncolors = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in nbrs[v]))) for v in range(n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [ranks[s] for s in sigs]
        if len(ranks) == ncolors:
            return colors
        ncolors = len(ranks)


def canonical_form(n: int, edges: list[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    """Canonical edge tuple: equal for two graphs iff they are isomorphic."""
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    best: tuple | None = None

    def search(colors: list[int]) -> None:
        nonlocal best
        colors = _refine(n, nbrs, colors)
        if len(set(colors)) == n:
            cert = tuple(sorted((min(colors[u], colors[v]), max(colors[u], colors[v])) for u, v in edges))
            if best is None or cert < best:
                best = cert
            return
        # individualise each vertex of the first smallest non-singleton cell
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min((k for k, v in counts.items() if v > 1), key=lambda k: (counts[k], k))
        for v in range(n):
            if colors[v] == target:
                search([2 * c + (0 if w == v else 1) for w, c in enumerate(colors)])

    search([len(nbrs[v]) for v in range(n)])
    return best if best is not None else ()


@lru_cache(maxsize=None)
def _connected_forms(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    if n == 1:
        return ((),)
    out = {}
    for form in _connected_forms(n - 1):
        # every connected graph has a non-cut vertex, so extending connected
        # (n-1)-vertex graphs by one vertex reaches every class
        for mask in range(1, 1 << (n - 1)):
            new = list(form) + [(u, n - 1) for u in range(n - 1) if mask >> u & 1]
            cert = canonical_form(n, new)
            out.setdefault(cert, None)
    return tuple(sorted(out, key=lambda f: (len(f), f)))


def all_connected(n: int) -> Iterator[Graph]:
    """Every connected graph on ``n`` vertices, one per isomorphism class.

    Graphs come in canonical labelling, ordered by edge count then edge list.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > MAX_ENUMERATION_ORDER:
        raise ValueError(f"exhaustive enumeration supports n <= {MAX_ENUMERATION_ORDER}, got {n}")
    for form in _connected_forms(n):
        yield from_edge_list(n, form)


def corpus(n_min: int, n_max: int, drop_isolated_edges: bool = True) -> Iterator[tuple[str, Graph]]:
    """``(graph id, graph)`` for every connected graph with n_min <= n <= n_max."""
    for n in range(n_min, n_max + 1):
        for i, g in enumerate(all_connected(n)):
            if drop_isolated_edges and g.n == 2:
                continue
            yield f"c{n}-{i:05d}", g
