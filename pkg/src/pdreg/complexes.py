"""Clutters and facet-encoded simplicial complexes.

Every vertex set is an int bitmask over ``0..ground-1``.  A complex is kept
only through its facets; faces are produced on demand.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .graphs import BipartiteGraph, Graph, bits, mask_of


def _key(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))


def minimal_sets(family: Iterable[int]) -> list[int]:
    """Inclusion-minimal members of a family of masks, deduplicated, in sorted order."""
    uniq = sorted(set(family), key=lambda m: (m.bit_count(), m))
    out: list[int] = []
    for s in uniq:
        if not any(t & s == t for t in out):
            out.append(s)
    return sorted(out, key=_key)


def maximal_sets(family: Iterable[int]) -> list[int]:
    uniq = sorted(set(family), key=lambda m: (-m.bit_count(), m))
    out: list[int] = []
    for s in uniq:
        if not any(t & s == s for t in out):
            out.append(s)
    return sorted(out, key=_key)


def minimal_transversals(family: Sequence[int]) -> list[int]:
    """Minimal sets meeting every member of ``family`` (Berge's incremental method).

    The empty family has the single transversal ∅; a family containing ∅ has none.
    """
    current = [0]
    for edge in sorted(set(family), key=lambda m: m.bit_count()):
        if edge == 0:
            return []
        grown = set()
        for t in current:
            if t & edge:
                grown.add(t)
            else:
                for v in bits(edge):
                    grown.add(t | (1 << v))
        current = minimal_sets(grown)
    return sorted(current, key=_key)


@dataclass(frozen=True)
class Clutter:
    """Antichain of vertex sets on ``0..ground-1``.

    Singleton edges are rejected unless ``allow_singletons`` is set; the
    closed-neighbourhood clutter of a graph with isolated vertices needs them.
    """

    ground: int
    edges: tuple[int, ...]
    allow_singletons: bool = False

    def __post_init__(self) -> None:
        full = (1 << self.ground) - 1
        edges = sorted(set(self.edges), key=_key)
        for e in edges:
            if e & ~full:
                raise ValueError(f"edge {_key(e)} leaves the ground set 0..{self.ground - 1}")
            if e == 0:
                raise ValueError("empty edge")
            if e.bit_count() == 1 and not self.allow_singletons:
                raise ValueError(f"singleton edge {_key(e)}")
        for a, b in combinations(edges, 2):
            if a & b == a or a & b == b:
                raise ValueError(f"not an antichain: {_key(a)} and {_key(b)} are nested")
        object.__setattr__(self, "edges", tuple(edges))

    @classmethod
    def from_sets(cls, ground: int, sets: Iterable[Iterable[int]], allow_singletons: bool = False) -> Clutter:
        return cls(ground, tuple(mask_of(s) for s in sets), allow_singletons)

    @classmethod
    def from_graph(cls, g: Graph) -> Clutter:
        return cls(g.n, tuple((1 << u) | (1 << v) for u, v in g.edges))

    @property
    def full_mask(self) -> int:
        return (1 << self.ground) - 1

    def edge_sets(self) -> list[tuple[int, ...]]:
        return [_key(e) for e in self.edges]

    def is_independent(self, mask: int) -> bool:
        return not any(e & mask == e for e in self.edges)

    def induced(self, vertices: Iterable[int]) -> Clutter:
        """H[S] relabeled to 0..|S|-1 in increasing order."""
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        s = mask_of(keep)
        new = [mask_of(pos[v] for v in bits(e)) for e in self.edges if e & s == e]
        return Clutter(len(keep), tuple(new), self.allow_singletons)

    def as_graph(self) -> Graph | None:
        if all(e.bit_count() == 2 for e in self.edges):
            return Graph(self.ground, frozenset(tuple(bits(e)) for e in self.edges))
        return None


@dataclass(frozen=True)
class Complex:
    """Simplicial complex on ground set ``0..ground-1`` given by its facets.

    ``facets == ()`` is the void complex; ``facets == (0,)`` is the empty
    complex {∅}.  Construction reduces the input to its maximal members.
    """

    ground: int
    facets: tuple[int, ...]

    def __post_init__(self) -> None:
        full = (1 << self.ground) - 1
        for f in self.facets:
            if f & ~full:
                raise ValueError(f"face {_key(f)} leaves the ground set 0..{self.ground - 1}")
        object.__setattr__(self, "facets", tuple(maximal_sets(self.facets)))

    @classmethod
    def from_sets(cls, ground: int, sets: Iterable[Iterable[int]]) -> Complex:
        return cls(ground, tuple(mask_of(s) for s in sets))

    @classmethod
    def simplex(cls, ground: int) -> Complex:
        return cls(ground, ((1 << ground) - 1,))

    @classmethod
    def void(cls, ground: int) -> Complex:
        return cls(ground, ())

    @property
    def full_mask(self) -> int:
        return (1 << self.ground) - 1

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_simplex(self) -> bool:
        """A single facet (this includes {∅})."""
        return len(self.facets) == 1

    @cached_property
    def vertex_mask(self) -> int:
        m = 0
        for f in self.facets:
            m |= f
        return m

    @property
    def dim(self) -> int:
        if self.is_void:
            raise ValueError("the void complex has no dimension")
        return max(f.bit_count() for f in self.facets) - 1

    def facet_sets(self) -> list[tuple[int, ...]]:
        return [_key(f) for f in self.facets]

    def is_face(self, mask: int) -> bool:
        return any(mask & f == mask for f in self.facets)

    def faces(self) -> Iterator[int]:
        """Every face exactly once, ∅ included (nothing for the void complex)."""
        seen: set[int] = set()
        for f in self.facets:
            sub = f
            while True:
                if sub not in seen:
                    seen.add(sub)
                    yield sub
                if sub == 0:
                    break
                sub = (sub - 1) & f

    def f_vector(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for face in self.faces():
            d = face.bit_count() - 1
            counts[d] = counts.get(d, 0) + 1
        return counts

    def induced(self, s: int) -> Complex:
        """Δ[S] on the same ground set."""
        return Complex(self.ground, tuple(f & s for f in self.facets))

    def cone_points(self) -> int:
        """Mask of vertices lying in every facet."""
        if self.is_void:
            return 0
        m = self.full_mask
        for f in self.facets:
            m &= f
        return m

    def restrict_ground(self) -> tuple[Complex, list[int]]:
        """Relabel onto vert(Δ); returns the new complex and the old labels."""
        keep = list(bits(self.vertex_mask))
        pos = {v: i for i, v in enumerate(keep)}
        new = tuple(mask_of(pos[v] for v in bits(f)) for f in self.facets)
        return Complex(len(keep), new), keep


# --- constructions ----------------------------------------------------------

def _maximal_independent_sets(g: Graph) -> list[int]:
    out: list[int] = []
    nonadj = [g.full_mask & ~g.closed_mask(v) for v in range(g.n)]

    # Bron-Kerbosch with pivoting on the complement graph
    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot = max(bits(p | x), key=lambda u: (nonadj[u] & p).bit_count())
        for v in bits(p & ~nonadj[pivot]):
            expand(r | (1 << v), p & nonadj[v], x & nonadj[v])
            p &= ~(1 << v)
            x |= 1 << v

    expand(0, g.full_mask, 0)
    return out


def independence_complex(h: Clutter | Graph) -> Complex:
    """Ind(H): the sets containing no edge."""
    if isinstance(h, Graph):
        return Complex(h.n, tuple(_maximal_independent_sets(h)))
    full = h.full_mask
    return Complex(h.ground, tuple(full & ~t for t in minimal_transversals(h.edges)))


def minimal_nonfaces(d: Complex) -> list[int]:
    """Minimal non-faces over the whole ground set (ghost vertices are singletons)."""
    full = d.full_mask
    return minimal_transversals([full & ~f for f in d.facets])


def alexander_dual(d: Complex) -> Complex:
    full = d.full_mask
    return Complex(d.ground, tuple(full & ~n for n in minimal_nonfaces(d)))


def helly_number(d: Complex) -> int | None:
    """Largest minimal non-face; None for the full simplex, which has no non-face."""
    nf = minimal_nonfaces(d)
    if not nf:
        return None
    return max(n.bit_count() for n in nf)


def closed_neighbourhood_clutter(g: Graph) -> Clutter:
    """N[G]: the inclusion-minimal closed neighbourhoods."""
    return Clutter(g.n, tuple(minimal_sets(g.closed_mask(v) for v in range(g.n))), allow_singletons=True)


def minimal_dominating_sets(g: Graph) -> list[int]:
    return minimal_transversals([g.closed_mask(v) for v in range(g.n)])


def dominance_complex(g: Graph) -> Complex:
    """Dom(G): facets are complements of minimal dominating sets."""
    full = g.full_mask
    return Complex(g.n, tuple(full & ~d for d in minimal_dominating_sets(g)))


def levi_graph(h: Clutter) -> BipartiteGraph:
    """Side 0 is the ground set; the k-th edge (sorted order) becomes vertex ground+k on side 1."""
    edges = [(v, h.ground + k) for k, e in enumerate(h.edges) for v in bits(e)]
    g = Graph(h.ground + len(h.edges), frozenset(edges))
    return BipartiteGraph(g, (0,) * h.ground + (1,) * len(h.edges))


def b_complement(d: Complex, s: int | None = None) -> BipartiteGraph:
    """B_S(Δ): vertices of S (renumbered 0..|S|-1) versus facets, joined when s ∉ F.

    ``s=None`` means the whole ground set, giving B(Δ).
    """
    if s is None:
        s = d.full_mask
    if s & ~d.full_mask:
        raise ValueError("S must lie inside the ground set")
    verts = list(bits(s))
    k = len(verts)
    edges = [(i, k + j) for i, v in enumerate(verts) for j, f in enumerate(d.facets) if not f >> v & 1]
    g = Graph(k + len(d.facets), frozenset(edges))
    return BipartiteGraph(g, (0,) * k + (1,) * len(d.facets))


def link(d: Complex, a: int) -> Complex:
    if not d.is_face(a):
        raise ValueError(f"{_key(a)} is not a face")
    return Complex(d.ground, tuple(f & ~a for f in d.facets if f & a == a))


def is_s_face(d: Complex, a: int) -> bool:
    """The link of ``a`` is a simplex."""
    return len(link(d, a).facets) == 1


def is_sp_bipartite(b: BipartiteGraph, i: int) -> bool:
    """No two vertices of side i have nested neighbourhoods."""
    adj = b.graph.adj
    side = b.part(i)
    for u in side:
        for v in side:
            if u != v and adj[u] & adj[v] == adj[u]:
                return False
    return True


def side_complex(b: BipartiteGraph, i: int) -> Complex:
    """Complex on side i (renumbered in increasing order) with facets X_i ∖ N(v), v on side 1-i.

    Requires side 1-i to be Sperner so that these complements form an antichain.
    """
    if not is_sp_bipartite(b, 1 - i):
        raise ValueError(f"side {1 - i} is not Sperner: two of its vertices have nested neighbourhoods")
    verts = b.part(i)
    pos = {v: k for k, v in enumerate(verts)}
    full = (1 << len(verts)) - 1
    facets = []
    for v in b.part(1 - i):
        nb = mask_of(pos[w] for w in bits(b.graph.adj[v]))
        facets.append(full & ~nb)
    return Complex(len(verts), tuple(facets))


# --- flowers ----------------------------------------------------------------

@dataclass(frozen=True)
class Flower:
    """Pairs (vertex, facet index); the vertices form a face and x_i ∉ F_j exactly when i = j."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if len(self.pairs) < 3:
            raise ValueError("a flower has at least three petals")

    def validate(self, d: Complex) -> bool:
        xs = mask_of(x for x, _ in self.pairs)
        if not d.is_face(xs):
            return False
        for x, _ in self.pairs:
            for _, j in self.pairs:
                f = d.facets[j]
                missing = not f >> x & 1
                if missing != (j == dict(self.pairs)[x]):
                    return False
        return True


def flower_number(d: Complex) -> tuple[int, Flower | None]:
    """ν(Δ) with a witness: the largest m ≥ 3 admitting an m-flower, else 0.

    A face X carries a flower iff each x ∈ X has a facet containing X - x but
    not x.  That property passes to subsets, so the search grows X one vertex
    at a time and abandons any branch where it fails.
    """
    if d.is_void:
        return 0, None
    facets = d.facets
    candidates = {v: [j for j, f in enumerate(facets) if not f >> v & 1] for v in bits(d.vertex_mask)}
    order = sorted((v for v in candidates if candidates[v]), key=lambda v: (len(candidates[v]), v))
    best: list[int] = []
    best_pairs: list[tuple[int, int]] = []

    def petals(xs: list[int], mask: int) -> list[tuple[int, int]] | None:
        out = []
        for x in xs:
            rest = mask & ~(1 << x)
            j = next((j for j in candidates[x] if facets[j] & rest == rest), None)
            if j is None:
                return None
            out.append((x, j))
        return out

    def grow(start: int, xs: list[int], mask: int) -> None:
        nonlocal best, best_pairs
        if len(xs) + (len(order) - start) <= len(best):
            return
        for k in range(start, len(order)):
            v = order[k]
            m2 = mask | (1 << v)
            if not d.is_face(m2):
                continue
            xs2 = xs + [v]
            got = petals(xs2, m2)
            if got is None:
                continue
            if len(xs2) > len(best):
                best, best_pairs = xs2, got
            grow(k + 1, xs2, m2)

    grow(0, [], 0)
    if len(best) < 3:
        return 0, None
    return len(best), Flower(tuple(sorted(best_pairs)))


# --- random instances and text format ------------------------------------------

def random_clutter(rng: random.Random, ground: int, max_edges: int = 6) -> Clutter:
    """Random antichain of sets of size 2..ground-1 (2 when ground is 2); nested draws are discarded."""
    if ground < 2:
        raise ValueError("a clutter with an edge needs at least two vertices")
    target = rng.randint(1, max_edges)
    top = max(2, ground - 1)
    edges: list[int] = []
    for _ in range(4 * max_edges):
        if len(edges) == target:
            break
        e = mask_of(rng.sample(range(ground), rng.randint(2, top)))
        if all(e & f not in (e, f) for f in edges):
            edges.append(e)
    return Clutter(ground, tuple(edges))


def dump_sets(ground: int, sets: Sequence[int]) -> str:
    lines = [f"{ground} {len(sets)}"]
    lines.extend(" ".join(map(str, _key(s))) for s in sets)
    return "\n".join(lines) + "\n"


def _parse_sets(text: str) -> tuple[int, list[int]]:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ValueError("empty set-system file")
    try:
        ground, k = (int(t) for t in lines[0].split())
    except ValueError:
        raise ValueError(f"bad header line {lines[0]!r}; expected 'ground k'") from None
    body = lines[1:]
    if len(body) != k:
        raise ValueError(f"header announces {k} sets but {len(body)} lines follow")
    sets = []
    for lineno, ln in enumerate(body, start=2):
        try:
            vs = [int(t) for t in ln.split()]
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer vertex in {ln!r}") from None
        if any(not 0 <= v < ground for v in vs):
            raise ValueError(f"line {lineno}: vertex outside 0..{ground - 1}")
        sets.append(mask_of(vs))
    return ground, sets


def parse_clutter(text: str) -> Clutter:
    ground, sets = _parse_sets(text)
    return Clutter(ground, tuple(sets))


def parse_complex(text: str) -> Complex:
    """Facet list; nested input lines are reduced to their maximal members."""
    ground, sets = _parse_sets(text)
    return Complex(ground, tuple(sets))
