"""Simple graphs on positional vertices, standard families, and recognition predicates.

Vertices are the integers ``0..n-1``.  Adjacency is kept as one bitmask per
vertex so that the exhaustive searches elsewhere in the package can work on
plain integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int]


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``edges`` is normalized to a frozenset of ``(u, v)`` pairs with ``u < v``.
    """

    n: int
    edges: frozenset[Edge] = frozenset()
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"vertex count must be non-negative, got {self.n}")
        normalized = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {e} has an endpoint outside 0..{self.n - 1}")
            normalized.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", frozenset(normalized))
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("labels must name every vertex")

    @classmethod
    def from_adjacency(cls, adj: Sequence[int]) -> Graph:
        n = len(adj)
        return cls(n, frozenset((u, v) for u in range(n) for v in bits(adj[u] >> (u + 1) << (u + 1))))

    @cached_property
    def adj(self) -> tuple[int, ...]:
        a = [0] * self.n
        for u, v in self.edges:
            a[u] |= 1 << v
            a[v] |= 1 << u
        return tuple(a)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def __len__(self) -> int:
        return self.n

    def neighbors(self, v: int) -> set[int]:
        return set(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def closed_mask(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.n) if not self.adj[v]]

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph, relabeled to ``0..k-1`` in increasing vertex order."""
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        edges = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        labels = None if self.labels is None else tuple(self.labels[v] for v in keep)
        return Graph(len(keep), frozenset(edges), labels)

    def delete(self, vertices: Iterable[int]) -> Graph:
        drop = set(vertices)
        return self.induced(v for v in range(self.n) if v not in drop)

    def without_isolated(self) -> Graph:
        """The graph with isolated vertices removed (written G-circle in the literature)."""
        return self.induced(v for v in range(self.n) if self.adj[v])

    def complement(self) -> Graph:
        return Graph(self.n, frozenset(
            (u, v) for u, v in combinations(range(self.n), 2) if not self.has_edge(u, v)
        ))

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= nxt
            seen |= comp
            comps.append(list(bits(comp)))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def two_coloring(self) -> list[int] | None:
        """Side labels of a proper 2-colouring (each component starts at 0), or None."""
        side = [-1] * self.n
        for s in range(self.n):
            if side[s] >= 0:
                continue
            side[s] = 0
            stack = [s]
            while stack:
                u = stack.pop()
                for w in bits(self.adj[u]):
                    if side[w] < 0:
                        side[w] = 1 - side[u]
                        stack.append(w)
                    elif side[w] == side[u]:
                        return None
        return side

    def is_bipartite(self) -> bool:
        return self.two_coloring() is not None

    def distances(self) -> list[list[float]]:
        """All-pairs BFS distances; unreachable pairs are ``math.inf``."""
        out = []
        for s in range(self.n):
            d = [math.inf] * self.n
            d[s] = 0
            frontier, seen, k = 1 << s, 1 << s, 0
            while frontier:
                k += 1
                nxt = 0
                for v in bits(frontier):
                    nxt |= self.adj[v]
                nxt &= ~seen
                for v in bits(nxt):
                    d[v] = k
                seen |= nxt
                frontier = nxt
            out.append(d)
        return out

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph(self.n, frozenset((perm[u], perm[v]) for u, v in self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.sorted_edges)})"


@dataclass(frozen=True)
class BipartiteGraph:
    """A graph together with a side label in {0, 1} for every vertex."""

    graph: Graph
    side: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "side", tuple(self.side))
        if len(self.side) != self.graph.n:
            raise ValueError("every vertex needs a side label")
        if any(s not in (0, 1) for s in self.side):
            raise ValueError("side labels must be 0 or 1")
        for u, v in self.graph.edges:
            if self.side[u] == self.side[v]:
                raise ValueError(f"edge {(u, v)} lies inside side {self.side[u]}")

    @classmethod
    def from_graph(cls, g: Graph) -> BipartiteGraph:
        side = g.two_coloring()
        if side is None:
            raise ValueError("graph is not bipartite")
        return cls(g, tuple(side))

    def part(self, i: int) -> list[int]:
        return [v for v in range(self.graph.n) if self.side[v] == i]

    def part_mask(self, i: int) -> int:
        return mask_of(self.part(i))

    def swapped(self) -> BipartiteGraph:
        return BipartiteGraph(self.graph, tuple(1 - s for s in self.side))


# --- families -------------------------------------------------------------

FAMILIES = ("complete", "path", "cycle", "star", "edgeless", "complete-bipartite", "whisker-complete")


def build_family(kind: str, params: Sequence[int] | int) -> Graph:
    """Standard graph families with fixed numbering.

    * ``complete n``: K_n on 0..n-1.
    * ``path n``: P_n, edges i(i+1).
    * ``cycle n``: C_n, the path plus (n-1)0; needs n >= 3.
    * ``star n``: K_{1,n}, centre 0 and leaves 1..n.
    * ``edgeless n``: n isolated vertices.
    * ``complete-bipartite a b``: sides 0..a-1 and a..a+b-1.
    * ``whisker-complete n``: K_n on 0..n-1, pendant n+i attached to i.
    """
    if isinstance(params, int):
        params = [params]
    params = list(params)
    need = 2 if kind == "complete-bipartite" else 1
    if kind not in FAMILIES:
        raise ValueError(f"unknown family {kind!r}; expected one of {', '.join(FAMILIES)}")
    if len(params) != need:
        raise ValueError(f"family {kind!r} takes {need} parameter(s), got {len(params)}")
    if any(p < 1 for p in params) and kind != "edgeless":
        raise ValueError(f"parameters of {kind!r} must be positive, got {params}")
    if kind == "edgeless" and params[0] < 0:
        raise ValueError("vertex count must be non-negative")

    if kind == "complete":
        n = params[0]
        return Graph(n, frozenset(combinations(range(n), 2)))
    if kind == "path":
        n = params[0]
        return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))
    if kind == "cycle":
        n = params[0]
        if n < 3:
            raise ValueError(f"cycle needs at least 3 vertices, got {n}")
        return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))
    if kind == "star":
        n = params[0]
        return Graph(n + 1, frozenset((0, i) for i in range(1, n + 1)))
    if kind == "edgeless":
        return Graph(params[0])
    if kind == "complete-bipartite":
        a, b = params
        return Graph(a + b, frozenset((i, a + j) for i in range(a) for j in range(b)))
    # whisker-complete
    n = params[0]
    edges = set(combinations(range(n), 2)) | {(i, n + i) for i in range(n)}
    return Graph(2 * n, frozenset(edges))


def disjoint_union(*graphs: Graph) -> Graph:
    """Vertices of the k-th graph are shifted by the sizes of the earlier ones."""
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph(offset, frozenset(edges))


def copies(g: Graph, r: int) -> Graph:
    return disjoint_union(*([g] * r))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of g and h (h shifted by |g|) plus every cross edge."""
    u = disjoint_union(g, h)
    cross = {(a, g.n + b) for a in range(g.n) for b in range(h.n)}
    return Graph(u.n, u.edges | cross)


def square(g: Graph) -> Graph:
    """Edges between vertices at distance 1 or 2."""
    edges = set()
    for v in range(g.n):
        reach = g.adj[v]
        for w in bits(g.adj[v]):
            reach |= g.adj[w]
        reach &= ~(1 << v)
        edges.update((v, w) for w in bits(reach) if v < w)
    return Graph(g.n, frozenset(edges))


def subdivision(g: Graph) -> BipartiteGraph:
    """S(G): side 0 keeps vertices 0..n-1; the k-th edge in sorted order becomes vertex n+k."""
    edges = []
    for k, (u, v) in enumerate(g.sorted_edges):
        edges.append((u, g.n + k))
        edges.append((v, g.n + k))
    return BipartiteGraph(Graph(g.n + g.m, frozenset(edges)), (0,) * g.n + (1,) * g.m)


# --- recognition ----------------------------------------------------------

def perfect_elimination_ordering(g: Graph) -> list[int] | None:
    """A perfect elimination ordering, or None when g is not chordal.

    Any simplicial vertex of a chordal graph can be eliminated first, so a
    greedy search either finishes or proves non-chordality.
    """
    alive = g.full_mask
    order = []
    while alive:
        for v in bits(alive):
            nb = g.adj[v] & alive
            if all((g.adj[w] | (1 << w)) & nb == nb for w in bits(nb)):
                order.append(v)
                alive &= ~(1 << v)
                break
        else:
            return None
    return order


def is_chordal(g: Graph) -> bool:
    return perfect_elimination_ordering(g) is not None


def is_cochordal(g: Graph) -> bool:
    return is_chordal(g.complement())


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle; ``math.inf`` for forests."""
    best = math.inf
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = [s]
        for u in queue:
            if 2 * dist[u] + 1 >= best:
                break
            for w in bits(g.adj[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def has_induced_cycle(g: Graph, length: int) -> bool:
    """Whether g contains C_length as an induced subgraph."""
    if length < 3 or g.n < length:
        return False
    for combo in combinations(range(g.n), length):
        m = mask_of(combo)
        if all((g.adj[v] & m).bit_count() == 2 for v in combo):
            sub = g.induced(combo)
            if sub.is_connected():
                return True
    return False


def recognize_subdivision(b: BipartiteGraph) -> Graph | None:
    """Recover G with S(G) isomorphic to b, or None.

    b must be C_4-free with one side made of degree-2 vertices.  The vertices
    of the other side are renumbered in increasing order.
    """
    g = b.graph
    for v in range(g.n):
        for w in range(v + 1, g.n):
            if (g.adj[v] & g.adj[w]).bit_count() >= 2:
                return None
    for i in (1, 0):
        if all(g.degree(v) == 2 for v in b.part(i)):
            base = b.part(1 - i)
            pos = {v: k for k, v in enumerate(base)}
            edges = []
            for e in b.part(i):
                x, y = bits(g.adj[e])
                edges.append((pos[x], pos[y]))
            return Graph(len(base), frozenset(edges))
    return None


# --- canonical forms --------------------------------------------------------

def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = [mask_of(c) for c in cells]
        new: list[list[int]] = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                new.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((adj[v] & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                split = True
            new.extend(groups[k] for k in sorted(groups))
        cells = new
        if not split:
            return cells


def _twin_representatives(adj: Sequence[int], cell: list[int]) -> list[int]:
    reps: list[int] = []
    for v in cell:
        if not any(adj[u] == adj[v] or adj[u] | (1 << u) == adj[v] | (1 << v) for u in reps):
            reps.append(v)
    return reps


def canonical_form(g: Graph, colors: Sequence[int] | None = None) -> tuple:
    """Isomorphism-invariant certificate of g, optionally respecting vertex colours.

    Individualization-refinement with neighbour-count colour refinement;
    twins inside a cell are explored once since swapping them is an
    automorphism.  Intended for graphs up to roughly 20 vertices.
    """
    adj = g.adj
    n = g.n
    best: tuple[int, ...] | None = None

    def search(cells: list[list[int]]) -> None:
        nonlocal best
        cells = _refine(adj, cells)
        target = None
        for i, c in enumerate(cells):
            if len(c) > 1 and (target is None or len(c) < len(cells[target])):
                target = i
        if target is None:
            pos = [0] * n
            for i, c in enumerate(cells):
                pos[c[0]] = i
            cert = [0] * n
            for v in range(n):
                m = 0
                for w in bits(adj[v]):
                    m |= 1 << pos[w]
                cert[pos[v]] = m
            t = tuple(cert)
            if best is None or t < best:
                best = t
            return
        cell = cells[target]
        for v in _twin_representatives(adj, cell):
            rest = [w for w in cell if w != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    if n == 0:
        return (0, (), ())
    if colors is None:
        start = [list(range(n))]
        palette: tuple = ()
    else:
        by_colour: dict = {}
        for v in range(n):
            by_colour.setdefault(colors[v], []).append(v)
        start = [by_colour[c] for c in sorted(by_colour)]
        palette = tuple((c, len(by_colour[c])) for c in sorted(by_colour))
    search(start)
    assert best is not None
    return (n, palette, best)


def canonical_graph(g: Graph) -> Graph:
    return Graph.from_adjacency(canonical_form(g)[2])


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(map(int.bit_count, g.adj)) != sorted(map(int.bit_count, h.adj)):
        return False
    return canonical_form(g) == canonical_form(h)


def is_bipartite_isomorphic(a: BipartiteGraph, b: BipartiteGraph) -> bool:
    """Isomorphism that maps side 0 onto side 0 and side 1 onto side 1."""
    if a.graph.n != b.graph.n or a.graph.m != b.graph.m:
        return False
    return canonical_form(a.graph, a.side) == canonical_form(b.graph, b.side)
