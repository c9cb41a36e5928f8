"""Proper edge colouring with at most Δ+1 colours (Misra & Gries, 1992).

The algorithm colours the edges one at a time.  For an uncoloured edge
``(x, f)`` it builds a maximal fan around ``x``, flips a two-coloured path
starting at ``x`` so that a colour ``d`` becomes free on both ``x`` and some
fan vertex ``w``, rotates the fan up to ``w`` and paints ``(x, w)`` with ``d``.

Ties are always broken towards the lowest vertex index and lowest colour, so
the result is a deterministic function of the graph.
"""

from __future__ import annotations

from .graph import Edge, Graph, edge_key

Coloring = dict[Edge, int]


class _State:
    def __init__(self, g: Graph, ncolors: int):
        self.g = g
        self.ncolors = ncolors
        self.color: Coloring = {}
        # at[v][c] -> neighbour joined to v by the edge of colour c
        self.at: list[dict[int, int]] = [{} for _ in range(g.n)]

    def get(self, u: int, v: int) -> int | None:
        return self.color.get(edge_key(u, v))

    def set(self, u: int, v: int, c: int | None) -> None:
        old = self.color.pop(edge_key(u, v), None)
        if old is not None:
            del self.at[u][old]
            del self.at[v][old]
        if c is not None:
            self.color[edge_key(u, v)] = c
            self.at[u][c] = v
            self.at[v][c] = u

    def is_free(self, v: int, c: int) -> bool:
        return c not in self.at[v]

    def first_free(self, v: int) -> int:
        for c in range(1, self.ncolors + 1):
            if c not in self.at[v]:
                return c
        raise AssertionError(f"no free colour at vertex {v}")

    def maximal_fan(self, x: int, f: int) -> list[int]:
        fan = [f]
        in_fan = {f}
        extended = True
        while extended:
            extended = False
            last = fan[-1]
            for w in self.g.adj[x]:
                if w in in_fan:
                    continue
                c = self.get(x, w)
                if c is not None and self.is_free(last, c):
                    fan.append(w)
                    in_fan.add(w)
                    extended = True
                    break
        return fan

    def invert_path(self, x: int, c: int, d: int) -> None:
        # the cd_x path starts with the d-edge at x (c is free on x)
        path = []
        cur, col = x, d
        while col in self.at[cur]:
            nxt = self.at[cur][col]
            path.append((cur, nxt, col))
            cur = nxt
            col = c if col == d else d
        for u, v, _ in path:
            self.set(u, v, None)
        for u, v, col in path:
            self.set(u, v, c if col == d else d)

    def is_fan_prefix(self, x: int, fan: list[int], k: int) -> bool:
        if self.get(x, fan[0]) is not None:
            return False
        for i in range(1, k + 1):
            c = self.get(x, fan[i])
            if c is None or not self.is_free(fan[i - 1], c):
                return False
        return True

    def rotate(self, x: int, fan: list[int], k: int) -> None:
        shifted = [self.get(x, fan[i + 1]) for i in range(k)]
        for i in range(k + 1):
            self.set(x, fan[i], None)
        for i in range(k):
            self.set(x, fan[i], shifted[i])


def vizing_color(g: Graph) -> Coloring:
    """Proper colouring of ``g``'s edges with colours in ``1..Δ(g)+1``."""
    st = _State(g, g.max_degree + 1)
    for x, f in g.edges:
        fan = st.maximal_fan(x, f)
        c = st.first_free(x)
        d = st.first_free(fan[-1])
        if c != d:
            st.invert_path(x, c, d)
        for k, w in enumerate(fan):
            if st.is_free(w, d) and st.is_fan_prefix(x, fan, k):
                st.rotate(x, fan, k)
                st.set(x, w, d)
                break
        else:
            raise AssertionError(f"Misra-Gries found no rotation point for edge ({x}, {f})")
    return dict(sorted(st.color.items()))


def remap_colors(coloring: Coloring, offset: int) -> Coloring:
    if offset < 0:
        raise ValueError(f"offset must be non-negative, got {offset}")
    return {e: c + offset for e, c in coloring.items()}


def is_proper(g: Graph, coloring: Coloring) -> bool:
    for v in range(g.n):
        seen = set()
        for e in g.incident(v):
            c = coloring[e]
            if c in seen:
                return False
            seen.add(c)
    return True
