"""Projectively prime graphs, prime decompositions, and the gap-graph families."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .budget import tick
from .graphs import Graph, bits, build_family, canonical_form, copies, disjoint_union, mask_of
from .homology import GF2, FieldTag, proj_dim


@lru_cache(maxsize=65536)
def _pd_canonical(cert: tuple, fld: FieldTag) -> int:
    n, _, adj = cert
    return proj_dim(Graph.from_adjacency(adj) if n else Graph(0), fld)


def pd_cached(g: Graph, fld: FieldTag | str = GF2) -> int:
    """proj_dim memoized per isomorphism class and field."""
    fld = FieldTag.parse(fld)
    if g.m == 0:
        return 0
    return _pd_canonical(canonical_form(g), fld)


def is_projectively_prime(g: Graph, fld: FieldTag | str = GF2) -> bool:
    """Connected, and pd drops under every single-vertex deletion."""
    if g.m == 0:
        raise ValueError("primality needs at least one edge")
    if not g.is_connected():
        raise ValueError("primality is defined for connected graphs")
    fld = FieldTag.parse(fld)
    whole = pd_cached(g, fld)
    return all(pd_cached(g.delete([x]), fld) < whole for x in range(g.n))


@dataclass(frozen=True)
class Decomposition:
    """Pairwise disjoint, pairwise non-adjacent vertex sets, each of size at least two."""

    parts: tuple[tuple[int, ...], ...]

    @property
    def union(self) -> int:
        return mask_of(v for p in self.parts for v in p)

    def is_induced_decomposition(self, g: Graph) -> bool:
        """Disjoint parts, no edge between parts, and no edge of g avoids N[union]."""
        seen = 0
        for p in self.parts:
            m = mask_of(p)
            if len(p) < 2 or m & seen:
                return False
            seen |= m
        for i, p in enumerate(self.parts):
            for q in self.parts[i + 1:]:
                if any(g.has_edge(a, b) for a in p for b in q):
                    return False
        return _is_saturated(g, seen)


def _closed_of(g: Graph, s: int) -> int:
    out = s
    for v in bits(s):
        out |= g.adj[v]
    return out


def _is_saturated(g: Graph, u: int) -> bool:
    # no further part fits iff every edge touches N[U]
    rest = g.full_mask & ~_closed_of(g, u)
    return not any(g.adj[v] & rest for v in bits(rest))


def _connected_supports(g: Graph) -> list[int]:
    """Vertex masks of size ≥ 2 inducing a connected subgraph."""
    found: set[int] = set()
    stack = [1 << v for v in range(g.n)]
    seen = set(stack)
    while stack:
        s = stack.pop()
        tick()
        if s.bit_count() >= 2:
            found.add(s)
        border = 0
        for v in bits(s):
            border |= g.adj[v]
        border &= ~s
        for w in bits(border):
            t = s | (1 << w)
            if t not in seen:
                seen.add(t)
                stack.append(t)
    return sorted(found, key=lambda m: (tuple(bits(m))))


def prime_supports(g: Graph, fld: FieldTag | str = GF2) -> list[int]:
    fld = FieldTag.parse(fld)
    return [s for s in _connected_supports(g) if is_projectively_prime(g.induced(bits(s)), fld)]


def prime_decompositions(g: Graph, fld: FieldTag | str = GF2) -> list[Decomposition]:
    """Every maximal induced decomposition into projectively prime parts.

    Parts are added in the order of ``prime_supports``; a family is recorded
    once nothing can be added, which happens exactly when every edge meets
    N[union].
    """
    if g.m == 0:
        raise ValueError("prime decompositions need at least one edge")
    fld = FieldTag.parse(fld)
    supports = prime_supports(g, fld)
    out: list[Decomposition] = []

    def rec(start: int, chosen: list[int], blocked: int) -> None:
        tick()
        if _is_saturated(g, mask_of(v for s in chosen for v in bits(s))):
            out.append(Decomposition(tuple(tuple(bits(s)) for s in chosen)))
            return
        for k in range(start, len(supports)):
            s = supports[k]
            if s & blocked:
                continue
            chosen.append(s)
            rec(k + 1, chosen, blocked | _closed_of(g, s))
            chosen.pop()

    rec(0, [], 0)
    return out


def decomposition_value(g: Graph, d: Decomposition, fld: FieldTag | str = GF2) -> int:
    return sum(pd_cached(g.induced(p), fld) for p in d.parts)


def pd_via_decompositions(g: Graph, fld: FieldTag | str = GF2, check: bool = False) -> tuple[int, Decomposition]:
    """max over prime decompositions of the summed part pd, with a maximizing decomposition.

    With ``check`` set the value is compared against the homology computation.
    """
    fld = FieldTag.parse(fld)
    decs = prime_decompositions(g, fld)
    best = max(decs, key=lambda d: (decomposition_value(g, d, fld), d.parts))
    value = decomposition_value(g, best, fld)
    if check:
        direct = proj_dim(g, fld)
        if direct != value:
            raise AssertionError(f"decomposition value {value} != proj_dim {direct}")
    return value, best


def pd_induct_upper(g: Graph, x: int, fld: FieldTag | str = GF2) -> int:
    """max{pd(G - N[x]) + deg x, pd(G - x) + 1}, an upper bound on pd(G)."""
    fld = FieldTag.parse(fld)
    closed = list(bits(g.closed_mask(x)))
    return max(pd_cached(g.delete(closed), fld) + g.degree(x), pd_cached(g.delete([x]), fld) + 1)


EXACT_LIMIT = 10


@dataclass(frozen=True)
class UpperBound:
    value: int
    method: str


def pd_upper_chain(g: Graph, fld: FieldTag | str = GF2, designated: int | None = None,
                   exact_limit: int = EXACT_LIMIT) -> UpperBound:
    """Upper bound on pd(g) assembled from exact values of small pieces.

    Components are handled separately (pd adds over them).  A component with
    at most ``exact_limit`` vertices is computed exactly; a larger one is
    bounded by the deletion inequality at the designated vertex when it lies
    in that component, otherwise at each vertex of maximum degree, taking the
    smallest result.
    """
    fld = FieldTag.parse(fld)
    total = 0
    methods = set()
    for comp in g.components():
        sub = g.induced(comp)
        if sub.m == 0:
            continue
        if sub.n <= exact_limit:
            total += pd_cached(sub, fld)
            methods.add("exact")
            continue
        if designated is not None and designated in comp:
            pivots = [comp.index(designated)]
        else:
            top = max(sub.degree(v) for v in range(sub.n))
            pivots = [v for v in range(sub.n) if sub.degree(v) == top]
        best = None
        for x in pivots:
            a = pd_upper_chain(sub.delete(list(bits(sub.closed_mask(x)))), fld, None, exact_limit).value + sub.degree(x)
            b = pd_upper_chain(sub.delete([x]), fld, None, exact_limit).value + 1
            cand = max(a, b)
            best = cand if best is None else min(best, cand)
        assert best is not None
        total += best
        methods.add("induction")
    return UpperBound(total, "+".join(sorted(methods)) or "exact")


# --- gap families ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GapGraph:
    """A constructed graph with its documented numbering and closed-form values."""

    name: str
    params: tuple[int, ...]
    graph: Graph
    closed_forms: dict[str, int]
    designated: int
    decomposition: Decomposition
    numbering: str
    notes: dict[str, str] = field(default_factory=dict)

    def metadata(self) -> dict:
        return {
            "family": self.name,
            "params": list(self.params),
            "n": self.graph.n,
            "m": self.graph.m,
            "closed_forms": dict(self.closed_forms),
            "designated_vertex": self.designated,
            "stated_decomposition": [list(p) for p in self.decomposition.parts],
            "numbering": self.numbering,
            "provenance": dict(self.notes),
        }


def _kkk(k: int) -> Graph:
    return build_family("complete-bipartite", [k, k])


def gap_graph_G(k: int, r: int, s: int) -> GapGraph:
    if not (k > r + 1 and r >= 1 and s >= 1):
        raise ValueError(f"need k > r + 1, r >= 1, s >= 1; got k={k}, r={r}, s={s}")
    path = build_family("path", 3 * s + 1)
    base = disjoint_union(_kkk(k), copies(path, r))
    plen = 3 * s + 1
    leaves = [2 * k + i * plen for i in range(r)]
    g = Graph(base.n, base.edges | {(0, x) for x in leaves})
    parts = [tuple(range(2 * k))] + [tuple(range(x + 1, x + plen)) for x in leaves]
    return GapGraph(
        "G", (k, r, s), g,
        {"n": 2 * k + r * plen, "ind_dom": s * r + k, "gamma": s * r + 2, "pd": 2 * k + 2 * r * s - 1},
        0,
        Decomposition(tuple(parts)),
        "K_{k,k} on 0..2k-1 (sides 0..k-1 and k..2k-1), v = 0; path i occupies "
        "2k+i(3s+1) .. 2k+(i+1)(3s+1)-1 with its leaf x_i first; edges x_i-v",
        {"ind_dom": "closed form", "gamma": "closed form", "pd": "closed form"},
    )


def _rz_check(k: int, r: int) -> None:
    if not (k > r + 2 and r >= 1):
        raise ValueError(f"need k > r + 2 and r >= 1; got k={k}, r={r}")


def gap_graph_R(k: int, r: int) -> GapGraph:
    _rz_check(k, r)
    base = copies(_kkk(k), r)
    x = 2 * k * r
    g = Graph(x + 1, base.edges | {(2 * k * c, x) for c in range(r)})
    parts = tuple(tuple(range(2 * k * c, 2 * k * (c + 1))) for c in range(r))
    return GapGraph(
        "R", (k, r), g,
        {"n": 2 * r * k + 1, "gamma": 2 * r, "epsilon": r, "pd": (2 * k - 1) * r},
        0, Decomposition(parts),
        "copy c of K_{k,k} on 2kc..2kc+2k-1 with v_c = 2kc; apex x = 2kr joined to every v_c",
    )


def gap_graph_Z(k: int, r: int) -> GapGraph:
    _rz_check(k, r)
    base = copies(_kkk(k), r + 1)
    first_y = 2 * k * (r + 1)
    edges = set(base.edges)
    for j in range(2, r + 2):
        y = first_y + j - 2
        edges.add((0, y))
        edges.add((2 * k * (j - 1), y))
    g = Graph(first_y + r, frozenset(edges))
    parts = tuple(tuple(range(2 * k * c, 2 * k * (c + 1))) for c in range(r + 1))
    return GapGraph(
        "Z", (k, r), g,
        {"n": 2 * k * (r + 1) + r, "gamma": 2 * (r + 1), "epsilon": r + 1, "pd": (2 * k - 1) * (r + 1)},
        0, Decomposition(parts),
        "copy l (l = 1..r+1) of K_{k,k} on 2k(l-1)..2kl-1 with v_l = 2k(l-1); "
        "y_j = 2k(r+1)+j-2 joined to v_1 and v_j for j = 2..r+1",
    )


def gap_graph_H(k: int, r: int) -> GapGraph:
    _rz_check(k, r)
    rg = gap_graph_R(k, r)
    zg = gap_graph_Z(k, r)
    shift = rg.graph.n
    u = disjoint_union(rg.graph, zg.graph)
    x = 2 * k * r
    v1_z = shift
    g = Graph(u.n, u.edges | {(x, v1_z)})
    parts = rg.decomposition.parts + tuple(tuple(v + shift for v in p) for p in zg.decomposition.parts)
    return GapGraph(
        "H", (k, r), g,
        {"n": 2 * k * (2 * r + 1) + r + 1, "gamma": 2 * (2 * r + 1), "epsilon": 2 * r + 1,
         "pd": (2 * k - 1) * (2 * r + 1)},
        v1_z, Decomposition(parts),
        f"R_(k,r) on 0..{shift - 1} (apex x = {x}), then Z_(k,r) shifted by {shift}; "
        f"extra edge x - v_1 of Z; designated vertex v_1 of Z = {v1_z}",
    )


GAP_FAMILIES = {"G": gap_graph_G, "R": gap_graph_R, "Z": gap_graph_Z, "H": gap_graph_H}


@dataclass(frozen=True)
class Sandwich:
    lower: int
    upper: int
    method: str

    @property
    def tight(self) -> bool:
        return self.lower == self.upper


def pd_sandwich(gap: GapGraph, fld: FieldTag | str = GF2, exact_limit: int = EXACT_LIMIT) -> Sandwich:
    """pd bracketed by the stated decomposition (below) and the deletion inequality chain (above).

    The lower bound holds because pd adds over disjoint unions and cannot grow
    when passing to an induced subgraph.
    """
    fld = FieldTag.parse(fld)
    g = gap.graph
    if not gap.decomposition.is_induced_decomposition(g):
        raise ValueError("stated decomposition is not a maximal induced decomposition")
    lower = decomposition_value(g, gap.decomposition, fld)
    upper = pd_upper_chain(g, fld, gap.designated, exact_limit)
    return Sandwich(lower, upper.value, f"decomposition lower bound; {upper.method} upper bound")
