"""Constructive proper edge colouring whose vertex sums separate all pairs within distance r.

For a graph G with maximum degree Δ >= 2 and no isolated edges, every colour
lies in ``[1, 6K + Δ]`` where ``K = (M_{Δ,r} - 1)/Δ + Δ - 1``.  Per connected
component the construction is:

* stars get colours ``1..Δ``; components on at most three vertices are
  solved exactly;
* a degree-2 vertex whose neighbours have degree <= 3 is removed, the rest is
  coloured recursively and the two edges are added back greedily;
* otherwise vertices are ordered by a BFS from an adjacent pair of maximum
  degree sum (the root pair, processed last).  The BFS tree gets colour 2K+1,
  the remaining edges a Vizing colouring shifted into ``[2K+1, 2K+Δ]``.
  Each vertex in turn then settles its sum inside a two-element set
  ``{s, s+2K}`` (``s mod 4K < 2K``) that is disjoint from the sets of its
  earlier r-neighbours, by choosing the residue of its tree edge to its
  parent and by moving other incident colours by ±2K.  Finally the root pair
  is settled jointly through the colour of the edge between the two roots.

Colours around every vertex stay pairwise distinct modulo 2K, which yields
properness.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator

from .graph import (
    BoundParams,
    Edge,
    Graph,
    bound_params,
    connected_components,
    edge_key,
    from_edge_list,
    induced_subgraph,
    is_star,
    r_neighborhood,
    validate_colorable,
)
from .oracle import color_within
from .proper import vizing_color

Coloring = dict[Edge, int]


class InfeasibleStep(RuntimeError):
    """A greedy step found no admissible choice (the construction guarantees one)."""

    def __init__(self, message: str, dump: dict | None = None):
        super().__init__(message)
        self.dump = dump or {}

    def __str__(self) -> str:
        base = super().__str__()
        if not self.dump:
            return base
        return f"{base}\nstate: {self.dump}"


class CaseExhaustion(InfeasibleStep):
    """None of the five root-pair cases matched the selected residue."""


@dataclass
class RunStats:
    """Counters collected while colouring; pass one in to instrument a run."""

    cases: Counter = field(default_factory=Counter)
    base_cases: Counter = field(default_factory=Counter)
    reductions: int = 0
    bridged_reductions: int = 0
    main_steps: int = 0
    exchanges: int = 0

    def merge(self, other: "RunStats") -> None:
        self.cases.update(other.cases)
        self.base_cases.update(other.base_cases)
        self.reductions += other.reductions
        self.bridged_reductions += other.bridged_reductions
        self.main_steps += other.main_steps
        self.exchanges += other.exchanges


@dataclass(frozen=True)
class PairSet:
    """The two admissible final sums ``{s, s + 2K}`` with ``s mod 4K`` in ``[0, 2K)``."""

    s: int
    k_val: int

    def __post_init__(self) -> None:
        if self.s < 0 or self.s % (4 * self.k_val) >= 2 * self.k_val:
            raise ValueError(f"{self.s} is not a base of the family for K={self.k_val}")

    @classmethod
    def containing(cls, value: int, k_val: int) -> "PairSet":
        if value % (4 * k_val) < 2 * k_val:
            return cls(value, k_val)
        return cls(value - 2 * k_val, k_val)

    @property
    def members(self) -> tuple[int, int]:
        return (self.s, self.s + 2 * self.k_val)

    def __contains__(self, value: int) -> bool:
        return value == self.s or value == self.s + 2 * self.k_val


@dataclass
class Ordering:
    """Vertex sequence ``v_1..v_n`` (``sequence[i-1]`` is ``v_i``) from a BFS rooted at ``v_n``."""

    sequence: list[int]
    parent: dict[int, int]
    root_pair: tuple[int, int]

    def __post_init__(self) -> None:
        self.position = {v: i + 1 for i, v in enumerate(self.sequence)}

    def tree_edges(self) -> set[Edge]:
        return {edge_key(v, p) for v, p in self.parent.items()}


@dataclass
class AlgoState:
    graph: Graph
    ordering: Ordering
    params: BoundParams
    r: int
    color: Coloring
    pairsets: dict[int, PairSet] = field(default_factory=dict)
    touches: dict[Edge, list[tuple[str, int]]] = field(default_factory=dict)
    # edges whose residue mod 2K is final
    fixed: set[Edge] = field(default_factory=set)
    step: int = 0
    check: bool = False

    @property
    def two_k(self) -> int:
        return 2 * self.params.k_val

    def sum_at(self, v: int) -> int:
        return sum(self.color[edge_key(v, u)] for u in self.graph.adj[v])

    def set_color(self, e: Edge, c: int, phase: str) -> None:
        if not 1 <= c <= self.params.palette_max:
            raise InfeasibleStep(
                f"colour {c} for edge {e} leaves [1, {self.params.palette_max}]", self.dump()
            )
        self.color[e] = c
        self.touches.setdefault(e, []).append((phase, self.step))

    def dump(self) -> dict:
        return {
            "step": self.step,
            "r": self.r,
            "params": self.params,
            "sequence": self.ordering.sequence,
            "root_pair": self.ordering.root_pair,
            "edges": list(self.graph.edges),
            "color": dict(self.color),
            "sums": {v: self.sum_at(v) for v in range(self.graph.n)},
            "pairsets": {v: p.members for v, p in self.pairsets.items()},
        }

    def check_invariants(self) -> None:
        g, two_k = self.graph, self.two_k
        for e, c in self.color.items():
            assert 1 <= c <= self.params.palette_max, (e, c)
        for v, ps in self.pairsets.items():
            assert self.sum_at(v) in ps, (v, self.sum_at(v), ps)
        for v in range(g.n):
            res = [self.color[e] % two_k for e in g.incident(v) if e in self.fixed]
            assert len(res) == len(set(res)), f"residue clash at {v}: {res}"
        for e, t in self.touches.items():
            assert len(t) <= 2, (e, t)


# --- preprocessing ----------------------------------------------------------


def reduce_degree_two(g: Graph) -> tuple[int, int, int] | None:
    """Lowest vertex of degree 2 whose neighbours both have degree <= 3, with its neighbours."""
    for v in range(g.n):
        if g.degree(v) == 2:
            u1, u2 = g.adj[v]
            if g.degree(u1) <= 3 and g.degree(u2) <= 3:
                return v, u1, u2
    return None


def build_ordering(g: Graph, root: str = "higher") -> Ordering:
    """BFS ordering from the adjacent pair of degree >= 2 with the largest degree sum.

    ``root`` picks which endpoint of that pair becomes ``v_n``: the one of
    higher degree (default) or of lower degree; equal degrees go to the
    smaller index.
    """
    best = None
    for u, v in g.edges:
        du, dv = g.degree(u), g.degree(v)
        if du >= 2 and dv >= 2 and (best is None or du + dv > best[0]):
            best = (du + dv, u, v)
    if best is None:
        raise ValueError("no adjacent pair of vertices with degree >= 2 (graph is a star)")
    _, u, v = best
    du, dv = g.degree(u), g.degree(v)
    if root == "higher":
        last = v if dv > du else u
    elif root == "lower":
        last = v if dv < du else u
    else:
        raise ValueError(f"root must be 'higher' or 'lower', got {root!r}")
    second = v if last == u else u
    if g.degree(last) + g.degree(second) < 6:
        raise AssertionError(
            f"root pair ({second}, {last}) has degree sum {best[0]} < 6; "
            "degree-2 reduction should have applied"
        )

    bfs = [last]
    parent = {second: last}
    seen = {last, second}
    bfs.append(second)
    for w in g.adj[last]:
        if w not in seen:
            seen.add(w)
            parent[w] = last
            bfs.append(w)
    head = 1
    while head < len(bfs):
        x = bfs[head]
        head += 1
        for w in g.adj[x]:
            if w not in seen:
                seen.add(w)
                parent[w] = x
                bfs.append(w)
    if len(bfs) != g.n:
        raise ValueError("build_ordering needs a connected graph")
    return Ordering(sequence=bfs[::-1], parent=parent, root_pair=(second, last))


def initial_coloring(g: Graph, ordering: Ordering, params: BoundParams, r: int, check: bool = False) -> AlgoState:
    """Tree edges get 2K+1, the rest a Vizing colouring shifted into [2K+1, 2K+Δ]."""
    tree = ordering.tree_edges()
    rest = from_edge_list(g.n, [e for e in g.edges if e not in tree])
    if rest.max_degree > g.max_degree - 1:
        raise AssertionError("removing the spanning tree must lower the maximum degree")
    two_k = 2 * params.k_val
    color = {e: two_k + c for e, c in vizing_color(rest).items()}
    if color and max(color.values()) > two_k + params.delta:
        raise AssertionError("Vizing colours exceed the window [2K+1, 2K+Δ]")
    for e in tree:
        color[e] = two_k + 1
    state = AlgoState(g, ordering, params, r, dict(sorted(color.items())), check=check)
    state.fixed = set(g.edges) - tree
    return state


# --- main phase -------------------------------------------------------------


def run_main_phase(state: AlgoState, stats: RunStats | None = None) -> AlgoState:
    """Settle the sums of ``v_1..v_{n-2}`` one by one."""
    g, order = state.graph, state.ordering
    two_k = state.two_k
    pos = order.position
    for i, x in enumerate(order.sequence[:-2], start=1):
        state.step = i
        p = order.parent[x]
        last = edge_key(x, p)

        blocked_res = set()
        for end in (x, p):
            for e in g.incident(end):
                if e != last and e in state.fixed:
                    blocked_res.add(state.color[e] % two_k)
        c_last = state.color[last]
        shifts_t = [t for t in range(two_k) if (c_last + t) % two_k not in blocked_res]

        ups, downs = [], []
        for w in g.adj[x]:
            if w == p:
                continue
            if pos[w] > i:
                ups.append(w)
            elif state.sum_at(w) == state.pairsets[w].s:
                ups.append(w)
            else:
                downs.append(w)

        forbidden = set()
        for l in r_neighborhood(g, x, state.r):
            if pos[l] < i:
                forbidden.update(state.pairsets[l].members)

        base = state.sum_at(x)
        best = None
        for m in range(-len(downs), len(ups) + 1):
            for t in shifts_t:
                s = base + t + two_k * m
                if s not in forbidden and (best is None or s < best[0]):
                    best = (s, t, m)
        if best is None:
            raise InfeasibleStep(f"no admissible sum for vertex {x} at step {i}", state.dump())
        s, t, m = best

        toggled = set(ups[:m]) if m >= 0 else set(downs[:-m])
        state.set_color(last, c_last + t, "forward-last")
        for w in g.adj[x]:
            if w == p:
                continue
            e = edge_key(x, w)
            delta = 0
            if w in toggled:
                delta = two_k if w in ups else -two_k
            state.set_color(e, state.color[e] + delta, "forward" if pos[w] > i else "backward")
        state.fixed.add(last)
        state.pairsets[x] = PairSet.containing(s, state.params.k_val)
        if stats is not None:
            stats.main_steps += 1
        if state.check:
            state.check_invariants()
            for l in r_neighborhood(g, x, state.r):
                if pos[l] < i:
                    assert not set(state.pairsets[l].members) & set(state.pairsets[x].members)
    return state


# --- final step on the root pair -------------------------------------------


@dataclass
class _Config:
    """A candidate final assignment: colour of the root edge plus toggled backward edges."""

    x: int
    first: frozenset[int]
    second: frozenset[int] = frozenset()


class _RootStep:
    def __init__(self, state: AlgoState):
        self.state = state
        g = state.graph
        self.two_k = two_k = state.two_k
        self.m_quot = state.params.m_quot
        a, b = state.ordering.root_pair
        self.a, self.b = a, b
        self.root_edge = edge_key(a, b)
        self.deg = {a: g.degree(a), b: g.degree(b)}
        self.back = {k: [w for w in g.adj[k] if w not in (a, b)] for k in (a, b)}
        self.common = set(self.back[a]) & set(self.back[b])
        # +1: toggling moves the neighbour from s to s+2K, -1: the reverse
        self.sign = {}
        for w in set(self.back[a]) | set(self.back[b]):
            self.sign[w] = 1 if state.sum_at(w) == state.pairsets[w].s else -1
        self.base = {k: state.sum_at(k) - state.color[self.root_edge] for k in (a, b)}

        blocked_res = set()
        for k in (a, b):
            for e in g.incident(k):
                if e != self.root_edge:
                    blocked_res.add(state.color[e] % two_k)
        avail = [rho for rho in range(two_k) if rho not in blocked_res]
        if len(avail) < 2 * self.m_quot:
            raise InfeasibleStep(f"only {len(avail)} residues left for the root edge", state.dump())
        self.residues = avail[: 2 * self.m_quot]

        near = set(self.back[a]) | set(self.back[b])
        self.blocked = {}
        for k in (a, b):
            out = set()
            for l in r_neighborhood(g, k, state.r):
                if l in (a, b):
                    continue
                if l in near:
                    out.update(state.pairsets[l].members)
                else:
                    out.add(state.sum_at(l))
            self.blocked[k] = out

    def other(self, k: int) -> int:
        return self.b if k == self.a else self.a

    def root_colors(self, rho: int) -> list[int]:
        first = rho if rho > 0 else self.two_k
        return [first, first + self.two_k, first + 2 * self.two_k]

    def attainable(self, k: int, rho: int) -> set[int]:
        """Every sum at ``k`` reachable with a root colour ≡ rho under any admissible joint choice."""
        levels = {0}
        for w in self.back[k]:
            opts = (0, 1, -1) if w in self.common else (0, self.sign[w])
            levels = {l + o for l in levels for o in opts}
        return {
            self.base[k] + x + self.two_k * l for x in self.root_colors(rho) for l in levels
        }

    # sums for a concrete configuration
    def first_sum(self, k: int, x: int, toggled: frozenset[int]) -> int:
        return self.base[k] + x + self.two_k * sum(self.sign[w] for w in toggled)

    def second_signs(self, k: int, first_toggled: frozenset[int]) -> dict[int, int]:
        return {w: (-self.sign[w] if w in first_toggled else self.sign[w]) for w in self.back[k]}

    def first_options(self, k: int, rho: int) -> list[int]:
        """The d(k)+2 sums at ``k`` reachable by its own choices with root colour ≡ rho."""
        ups = sum(1 for w in self.back[k] if self.sign[w] > 0)
        downs = len(self.back[k]) - ups
        out = set()
        for x in self.root_colors(rho):
            for m in range(-downs, ups + 1):
                out.add(self.base[k] + x + self.two_k * m)
        return sorted(out)

    def realizations(self, k: int, rho: int, target: int) -> Iterator[tuple[int, frozenset[int]]]:
        """Configurations (root colour, toggled set) giving sum ``target`` at ``k``.

        The first one yielded toggles only in one direction and prefers
        neighbours not shared with the other root, lowest index first.
        """
        back = self.back[k]
        classes = {
            (s, c): [w for w in back if self.sign[w] == s and (w in self.common) == c]
            for s in (1, -1)
            for c in (False, True)
        }
        seen = set()
        for x in self.root_colors(rho):
            diff = target - self.base[k] - x
            if diff % self.two_k:
                continue
            m = diff // self.two_k
            n_up = len(classes[1, False]) + len(classes[1, True])
            n_down = len(classes[-1, False]) + len(classes[-1, True])
            # canonical first, then every other split of the counts
            splits = []
            for nu in range(max(m, 0), n_up + 1):
                nd = nu - m
                if 0 <= nd <= n_down:
                    splits.append((nu, nd))
            for nu, nd in splits:
                for unc in range(min(nu, len(classes[1, False])), -1, -1):
                    uc = nu - unc
                    if uc > len(classes[1, True]):
                        continue
                    for dnc in range(min(nd, len(classes[-1, False])), -1, -1):
                        dc = nd - dnc
                        if dc > len(classes[-1, True]):
                            continue
                        toggled = frozenset(
                            classes[1, False][:unc]
                            + classes[1, True][:uc]
                            + classes[-1, False][:dnc]
                            + classes[-1, True][:dc]
                        )
                        if (x, toggled) not in seen:
                            seen.add((x, toggled))
                            yield x, toggled

    def complete_second(self, first: int, x: int, toggled: frozenset[int]) -> _Config | None:
        """Choose the other root's toggles so its sum avoids its blocked set and the first sum."""
        second = self.other(first)
        s_first = self.first_sum(first, x, toggled)
        signs = self.second_signs(second, toggled)
        ups = [w for w in self.back[second] if signs[w] > 0]
        downs = [w for w in self.back[second] if signs[w] < 0]
        base = self.base[second] + x
        for m in sorted(range(-len(downs), len(ups) + 1), key=lambda m: base + self.two_k * m):
            s = base + self.two_k * m
            if s == s_first or s in self.blocked[second]:
                continue
            chosen = frozenset(ups[:m] if m >= 0 else downs[:-m])
            return _Config(x, toggled, chosen)
        return None

    def apply(self, first: int, cfg: _Config) -> None:
        st = self.state
        second = self.other(first)
        st.set_color(self.root_edge, cfg.x, "root")
        for w in self.back[first]:
            e = edge_key(first, w)
            delta = self.two_k * self.sign[w] if w in cfg.first else 0
            st.set_color(e, st.color[e] + delta, "backward")
        signs = self.second_signs(second, cfg.first)
        for w in self.back[second]:
            e = edge_key(second, w)
            delta = self.two_k * signs[w] if w in cfg.second else 0
            st.set_color(e, st.color[e] + delta, "backward")
        st.fixed.add(self.root_edge)


def _select_case(ja: int, jb: int, da: int, db: int) -> int | None:
    if ja <= da + 1 and jb <= db - 2:
        return 1
    if ja == da and jb == db - 1 and da in (4, 5) and db == 2:
        return 2
    if ja <= da - 1 and jb <= db - 1:
        return 3
    if ja == da - 1 and jb == db and da == 2 and db in (4, 5):
        return 4
    if ja <= da - 2 and jb <= db + 1:
        return 5
    return None


def finalize_root_pair(state: AlgoState, stats: RunStats | None = None) -> Coloring:
    """Settle ``v_{n-1}`` and ``v_n`` together and return the finished colouring."""
    state.step = state.graph.n - 1
    rs = _RootStep(state)
    a, b = rs.a, rs.b
    da, db = rs.deg[a], rs.deg[b]

    counts = []
    for rho in rs.residues:
        ja = len(rs.blocked[a] & rs.attainable(a, rho))
        jb = len(rs.blocked[b] & rs.attainable(b, rho))
        counts.append((rho, ja, jb))
    # a_t' + b_t' < 1 with a = j/(d+2), kept in integers
    chosen = next(
        ((rho, ja, jb) for rho, ja, jb in counts if ja * (db + 2) + jb * (da + 2) < (da + 2) * (db + 2)),
        None,
    )
    if chosen is None:
        raise InfeasibleStep("no residue passes the averaging bound", {**state.dump(), "j": counts})
    rho, ja, jb = chosen
    case = _select_case(ja, jb, da, db)
    if case is None:
        raise CaseExhaustion(
            f"no case for j=({ja}, {jb}) with degrees ({da}, {db})", {**state.dump(), "j": counts}
        )
    if stats is not None:
        stats.cases[case] += 1

    first = a if case in (1, 2, 3) else b
    unblocked = [s for s in rs.first_options(first, rho) if s not in rs.blocked[first]]
    cfg = None
    if case in (1, 5):
        if unblocked:
            x, tog = next(rs.realizations(first, rho, unblocked[0]))
            cfg = rs.complete_second(first, x, tog)
    else:
        for s in unblocked:
            x, tog = next(rs.realizations(first, rho, s))
            cfg = rs.complete_second(first, x, tog)
            if cfg is not None:
                break
        if cfg is None and case in (2, 4):
            cfg = _exchange(rs, first, rho, unblocked, stats)
    if cfg is None:
        raise InfeasibleStep(f"case {case} produced no admissible final sums", state.dump())
    rs.apply(first, cfg)

    _check_final(state, rs)
    if state.check:
        state.check_invariants()
    return dict(sorted(state.color.items()))


def _exchange(rs: _RootStep, first: int, rho: int, unblocked: list[int], stats: RunStats | None) -> _Config | None:
    """Trade 2K between the root edge and an edge to a neighbour not shared with the other root.

    The first root keeps its sum while the other root's attainable sums move
    by 2K.  Only reached when both candidate sums d1 < d2 failed, which
    forces d2 = d1 + 4K.
    """
    if len(unblocked) < 2 or unblocked[1] != unblocked[0] + 2 * rs.two_k:
        raise InfeasibleStep(
            f"exchange precondition d2 = d1 + 4K fails for sums {unblocked[:2]}", rs.state.dump()
        )
    private = [w for w in rs.back[first] if w not in rs.common]
    top = 3 * rs.two_k
    for target in unblocked[:2]:
        for x, tog in rs.realizations(first, rho, target):
            # low: the edge currently sits at the smaller of its two colours
            low = [w for w in private if (w in tog) != (rs.sign[w] > 0)]
            high = [w for w in private if w not in low]
            moves = []
            if low and x - rs.two_k >= 1:
                moves.append((x - rs.two_k, low[0]))
            if high and x + rs.two_k <= top:
                moves.append((x + rs.two_k, high[0]))
            for new_x, w in moves:
                cfg = rs.complete_second(first, new_x, tog ^ {w})
                if cfg is not None:
                    if stats is not None:
                        stats.exchanges += 1
                    return cfg
    return None


def _check_final(state: AlgoState, rs: _RootStep) -> None:
    a, b = rs.a, rs.b
    sa, sb = state.sum_at(a), state.sum_at(b)
    problems = []
    if sa == sb:
        problems.append("(A) root sums equal")
    for k, s in ((a, sa), (b, sb)):
        if s in rs.blocked[k]:
            problems.append(f"(B/C) sum {s} at root {k} is blocked")
    for v, ps in state.pairsets.items():
        if state.sum_at(v) not in ps:
            problems.append(f"vertex {v} left its pair set")
    if state.color[rs.root_edge] % rs.two_k not in rs.residues:
        problems.append("root edge residue outside R")
    if problems:
        raise InfeasibleStep("; ".join(problems), state.dump())


# --- driver -----------------------------------------------------------------


def _star_coloring(g: Graph) -> Coloring:
    centre = max(range(g.n), key=g.degree)
    return {edge_key(centre, u): i for i, u in enumerate(g.adj[centre], start=1)}


def extend_after_reduction(
    g: Graph,
    v: int,
    u1: int,
    u2: int,
    h_coloring: Coloring,
    r: int,
    params: BoundParams,
    deferred: list[Edge] = (),
) -> Coloring:
    """Add colours for ``v u1`` then ``v u2`` greedily, smallest admissible first.

    ``h_coloring`` colours every edge of ``g`` except those two.  ``deferred``
    lists K_2 components of ``g - v`` whose endpoint sums may still clash.
    """
    col = dict(h_coloring)
    e1, e2 = edge_key(v, u1), edge_key(v, u2)
    sums = [0] * g.n
    for (x, y), c in col.items():
        sums[x] += c
        sums[y] += c
    near = {w: r_neighborhood(g, w, r) for w in (v, u1, u2)}
    top = params.palette_max

    used1 = {col[e] for e in g.incident(u1) if e != e1}
    # v and u2 are still partial here; both are re-checked in the second choice
    others1 = {sums[y] for y in near[u1] if y not in (v, u2)}
    c1 = next(
        (
            c
            for c in range(1, top + 1)
            if c not in used1 and c != sums[u2] and sums[u1] + c not in others1
        ),
        None,
    )
    if c1 is None:
        raise InfeasibleStep(f"no colour for edge {e1}", {"edges": g.edges, "color": col})
    col[e1] = c1
    sums[u1] += c1
    sums[v] += c1

    used2 = {col[e] for e in g.incident(u2) if e != e2} | {c1}
    # v and u2 both gain c2, so their difference (nonzero by the first choice) survives
    others_v = {sums[y] for y in near[v] if y != u2}
    others_u2 = {sums[y] for y in near[u2] if y != v}
    c2 = next(
        (
            c
            for c in range(1, top + 1)
            if c not in used2 and sums[v] + c not in others_v and sums[u2] + c not in others_u2
        ),
        None,
    )
    if c2 is None:
        raise InfeasibleStep(f"no colour for edge {e2}", {"edges": g.edges, "color": col})
    col[e2] = c2
    sums[v] += c2
    sums[u2] += c2

    for x, y in deferred:
        if sums[x] == sums[y]:
            raise InfeasibleStep(f"deferred K_2 conflict on ({x}, {y}) survived", {"color": col})
    return dict(sorted(col.items()))


def _color_after_reduction(
    g: Graph, v: int, u1: int, u2: int, r: int, params: BoundParams, stats: RunStats, check: bool, root: str
) -> Coloring:
    rest = [w for w in range(g.n) if w != v]
    h_col: Coloring = {}
    deferred: list[Edge] = []
    if r <= 3:
        stats.reductions += 1
        h, orig = induced_subgraph(g, rest)
        for comp in connected_components(h):
            sub, sub_orig = induced_subgraph(h, comp)
            back = [orig[i] for i in sub_orig]
            if sub.n == 2:
                # K_2 left behind: colour 1, conflict between its ends settled by the extension
                e = edge_key(back[0], back[1])
                h_col[e] = 1
                deferred.append(e)
                continue
            for (x, y), c in _color_connected(sub, r, params, stats, check, root).items():
                h_col[edge_key(back[x], back[y])] = c
    else:
        # Pairs joined only through v may be at distance <= r when r >= 4, so
        # recurse on g - v plus the edge u1u2, which keeps every such pair close.
        stats.bridged_reductions += 1
        index = {w: i for i, w in enumerate(rest)}
        pairs = [(index[x], index[y]) for x, y in g.edges if v not in (x, y)]
        bridge = edge_key(index[u1], index[u2])
        added = not g.has_edge(u1, u2)
        if added:
            pairs.append(bridge)
        hb = from_edge_list(len(rest), pairs)
        for (x, y), c in _color_connected(hb, r, params, stats, check, root).items():
            if added and (x, y) == bridge:
                continue
            h_col[edge_key(rest[x], rest[y])] = c
    return extend_after_reduction(g, v, u1, u2, h_col, r, params, deferred)


def _color_connected(
    g: Graph, r: int, params: BoundParams, stats: RunStats, check: bool, root: str
) -> Coloring:
    if g.m == 0:
        return {}
    if g.n == 2:
        return {g.edges[0]: 1}
    if is_star(g):
        stats.base_cases["star"] += 1
        return _star_coloring(g)
    if g.n <= 3:
        stats.base_cases["exact"] += 1
        col = color_within(g, r, params.palette_max)
        if col is None:
            raise InfeasibleStep("exact base case found no colouring", {"edges": g.edges})
        return col
    red = reduce_degree_two(g)
    if red is not None:
        return _color_after_reduction(g, *red, r, params, stats, check, root)
    ordering = build_ordering(g, root)
    state = initial_coloring(g, ordering, params, r, check)
    run_main_phase(state, stats)
    return finalize_root_pair(state, stats)


def color_distinguishing(
    g: Graph, r: int, *, stats: RunStats | None = None, check: bool = False, root: str = "higher"
) -> Coloring:
    """Proper colouring with colours in [1, 6K+Δ] whose sums differ for all pairs at distance 1..r.

    Components are coloured independently (vertices in different components
    are at infinite distance).  ``check`` re-validates the internal
    invariants after every step.
    """
    if r < 2:
        raise ValueError(f"radius must be >= 2, got {r}")
    validate_colorable(g)
    stats = stats if stats is not None else RunStats()
    out: Coloring = {}
    for comp in connected_components(g):
        if len(comp) < 3:
            continue
        sub, orig = induced_subgraph(g, comp)
        params = bound_params(sub.max_degree, r)
        for (x, y), c in _color_connected(sub, r, params, stats, check, root).items():
            out[edge_key(orig[x], orig[y])] = c
    return dict(sorted(out.items()))


def run_constructive(g: Graph, r: int, *, check: bool = False, root: str = "higher") -> tuple[AlgoState, RunStats]:
    """Run ordering, initial colouring, main phase and final step on ``g`` directly.

    ``g`` must be connected, not a star, and free of reducible degree-2
    vertices.  Returns the final state for inspection.
    """
    stats = RunStats()
    params = bound_params(g.max_degree, r)
    ordering = build_ordering(g, root)
    state = initial_coloring(g, ordering, params, r, check)
    run_main_phase(state, stats)
    finalize_root_pair(state, stats)
    return state, stats
