"""Independent certificate checker for sum-distinguishing edge colourings.

Shares nothing with the constructive colourer except the graph type: distances
are recomputed from scratch with a plain BFS for every vertex.
"""

from __future__ import annotations

from collections import deque
from dataclasses import asdict, dataclass, field
from typing import Mapping, TextIO

from .graph import Edge, Graph, GraphError, edge_key


class ColoringError(ValueError):
    """A colouring that does not match its graph (missing, unknown or bad colours)."""


@dataclass
class VerificationReport:
    proper: bool
    distinguishing: bool
    max_color: int
    properness_violations: list[tuple[int, Edge, Edge]] = field(default_factory=list)
    conflicts: list[tuple[int, int, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.proper and self.distinguishing

    def as_dict(self) -> dict:
        return asdict(self)

    def to_text(self) -> str:
        lines = [
            f"proper\t{'yes' if self.proper else 'no'}",
            f"distinguishing\t{'yes' if self.distinguishing else 'no'}",
            f"max_color\t{self.max_color}",
        ]
        for v, e, f in self.properness_violations:
            lines.append(f"clash\tvertex {v}\t{e[0]}-{e[1]}\t{f[0]}-{f[1]}")
        for u, v, d, s in self.conflicts:
            lines.append(f"conflict\t{u}\t{v}\tdistance {d}\tsum {s}")
        return "\n".join(lines)


def _check_total(g: Graph, coloring: Mapping[Edge, int]) -> dict[Edge, int]:
    normalized = {edge_key(*e): c for e, c in coloring.items()}
    missing = [e for e in g.edges if e not in normalized]
    if missing:
        raise ColoringError(f"colouring is partial; missing edges: {missing}")
    edge_set = set(g.edges)
    extra = [e for e in normalized if e not in edge_set]
    if extra:
        raise ColoringError(f"colouring has edges not in the graph: {extra}")
    bad = [(e, c) for e, c in normalized.items() if not isinstance(c, int) or c < 1]
    if bad:
        raise ColoringError(f"colours must be positive integers: {bad}")
    return normalized


def weighted_degree(g: Graph, coloring: Mapping[Edge, int], v: int) -> int:
    return sum(coloring[edge_key(v, u)] for u in g.adj[v])


def _distances_from(g: Graph, s: int, r: int) -> dict[int, int]:
    dist = {s: 0}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        if dist[u] == r:
            continue
        for w in g.adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def verify(g: Graph, coloring: Mapping[Edge, int], r: int) -> VerificationReport:
    """Check properness and r-distant sum distinction; every violation is listed."""
    if r < 1:
        raise ValueError(f"radius must be >= 1, got {r}")
    col = _check_total(g, coloring)

    clashes = []
    for v in range(g.n):
        inc = sorted(edge_key(v, u) for u in g.adj[v])
        for i, e in enumerate(inc):
            for f in inc[i + 1:]:
                if col[e] == col[f]:
                    clashes.append((v, e, f))

    sums = [weighted_degree(g, col, v) for v in range(g.n)]
    conflicts = []
    for u in range(g.n):
        for v, d in _distances_from(g, u, r).items():
            if v > u and sums[u] == sums[v]:
                conflicts.append((u, v, d, sums[u]))
    conflicts.sort()

    return VerificationReport(
        proper=not clashes,
        distinguishing=not conflicts,
        max_color=max(col.values(), default=0),
        properness_violations=clashes,
        conflicts=conflicts,
    )


# --- colouring file format: one "u v color" line per edge -----------------


def read_coloring(stream: TextIO) -> dict[Edge, int]:
    out: dict[Edge, int] = {}
    for lineno, raw in enumerate(stream, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise GraphError(f"line {lineno}: expected 'u v color', got {line!r}")
        try:
            u, v, c = (int(p) for p in parts)
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer field in {line!r}") from None
        if u == v:
            raise GraphError(f"line {lineno}: self-loop ({u}, {v})")
        e = edge_key(u, v)
        if e in out:
            raise GraphError(f"line {lineno}: edge ({u}, {v}) coloured twice")
        out[e] = c
    return out


def write_coloring(coloring: Mapping[Edge, int], stream: TextIO) -> None:
    for (u, v), c in sorted(coloring.items()):
        stream.write(f"{u} {v} {c}\n")
