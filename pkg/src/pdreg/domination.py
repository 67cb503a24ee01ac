"""Exact domination, matching and covering parameters.

All searches are branch and bound over bitmasks.  Cover problems are phrased
as: a set of targets, and for each candidate the mask of targets it covers.
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields
from typing import Callable, Sequence

from .budget import tick
from .graphs import BipartiteGraph, Graph, bits, girth, is_chordal, mask_of, square


class CrossCheckError(AssertionError):
    """Two independent computations of the same quantity disagree."""


def _require_edges(g: Graph, what: str) -> None:
    if g.m == 0:
        raise ValueError(f"{what} is undefined for a graph without edges")


# --- generic cover searches ---------------------------------------------------------

def min_cover(targets: int, cov: Sequence[int], conflict: Sequence[int] | None = None) -> tuple[int, list[int]] | None:
    """Fewest candidates whose masks cover ``targets``; None if impossible.

    With ``conflict`` given, chosen candidates must be pairwise non-conflicting
    (``conflict[c]`` is the mask of candidates excluded by choosing c, c itself
    included).  Branches on the uncovered target with the fewest live candidates.
    """
    n = len(cov)
    by_target: dict[int, list[int]] = {}
    for t in bits(targets):
        by_target[t] = [c for c in range(n) if cov[c] >> t & 1]
    maxcov = max(((c & targets).bit_count() for c in cov), default=0)
    best_size = n + 1
    best: list[int] = []

    def rec(chosen: list[int], covered: int, banned: int) -> None:
        nonlocal best_size, best
        tick()
        uncovered = targets & ~covered
        if not uncovered:
            if len(chosen) < best_size:
                best_size, best = len(chosen), list(chosen)
            return
        if maxcov == 0 or len(chosen) + -(-uncovered.bit_count() // maxcov) >= best_size:
            return
        # branch on the uncovered target with the fewest live candidates
        pick_list = None
        for t in bits(uncovered):
            live = [c for c in by_target[t] if not banned >> c & 1]
            if pick_list is None or len(live) < len(pick_list):
                pick_list = live
                if len(live) <= 1:
                    break
        assert pick_list is not None
        pick_list.sort(key=lambda c: -(cov[c] & uncovered).bit_count())
        local_ban = banned
        for c in pick_list:
            extra = conflict[c] if conflict is not None else 0
            chosen.append(c)
            rec(chosen, covered | cov[c], local_ban | extra | (1 << c))
            chosen.pop()
            local_ban |= 1 << c

    rec([], 0, 0)
    if best_size > n:
        return None
    return best_size, sorted(best)


def max_minimal_cover(targets: int, cov: Sequence[int], conflict: Sequence[int] | None = None) -> tuple[int, list[int]] | None:
    """Largest inclusion-minimal cover of ``targets``.

    Minimality is tracked through private targets: every chosen candidate must
    keep a target no other chosen candidate covers.  Branches include-first
    over candidates in index order; prunes on lost privacy, on infeasibility of
    the remaining candidates, and on the bound |S| + min(useful candidates,
    uncovered targets).
    """
    n = len(cov)
    cov = [c & targets for c in cov]
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] | cov[i]
    if suffix[0] & targets != targets:
        return None
    best_size = -1
    best: list[int] = []

    def rec(i: int, chosen: list[int], priv: list[int], covered: int, banned: int) -> None:
        nonlocal best_size, best
        tick()
        uncovered = targets & ~covered
        if not uncovered:
            if len(chosen) > best_size:
                best_size, best = len(chosen), list(chosen)
            return
        if i == n or suffix[i] & uncovered != uncovered:
            return
        useful = sum(1 for c in range(i, n) if cov[c] & uncovered and not banned >> c & 1)
        if len(chosen) + min(useful, uncovered.bit_count()) <= best_size:
            return
        c = i
        if not banned >> c & 1 and cov[c] & uncovered:
            new_priv = [p & ~cov[c] for p in priv]
            if all(new_priv):
                extra = conflict[c] if conflict is not None else 0
                chosen.append(c)
                rec(i + 1, chosen, new_priv + [cov[c] & uncovered], covered | cov[c], banned | extra)
                chosen.pop()
        rec(i + 1, chosen, priv, covered, banned)

    rec(0, [], [], 0, 0)
    if best_size < 0:
        return None
    return best_size, sorted(best)


def private_targets(members: Sequence[int], cov: Sequence[int], targets: int) -> dict[int, int]:
    """For each member, the targets it covers that no other member covers."""
    out = {}
    for s in members:
        others = 0
        for t in members:
            if t != s:
                others |= cov[t]
        out[s] = cov[s] & targets & ~others
    return out


# --- vertex domination ----------------------------------------------------------------

def _closed(g: Graph) -> list[int]:
    return [g.closed_mask(v) for v in range(g.n)]


def domination_number(g: Graph) -> int:
    return dominating_set(g)[0]


def dominating_set(g: Graph) -> tuple[int, list[int]]:
    res = min_cover(g.full_mask, _closed(g))
    assert res is not None
    return res


def upper_domination(g: Graph) -> int:
    """Γ: largest minimal dominating set."""
    if g.n == 0:
        raise ValueError("upper domination needs at least one vertex")
    res = max_minimal_cover(g.full_mask, _closed(g))
    assert res is not None
    return res[0]


def independent_domination(g: Graph) -> int:
    """i: smallest independent dominating set (equivalently a smallest maximal independent set)."""
    if g.n == 0:
        raise ValueError("independent domination needs at least one vertex")
    closed = _closed(g)
    res = min_cover(g.full_mask, closed, conflict=closed)
    assert res is not None
    return res[0]


def gamma_of_set(y: Sequence[int] | int, g: Graph) -> int:
    """γ(Y, G): fewest vertices X with Y ⊆ N(X) (open neighbourhoods)."""
    ymask = y if isinstance(y, int) else mask_of(y)
    for v in bits(ymask):
        if not g.adj[v]:
            raise ValueError(f"vertex {v} of Y has no neighbour")
    res = min_cover(ymask, list(g.adj))
    assert res is not None
    return res[0]


def unstable_domination(g: Graph) -> int:
    """γ_us: smallest dominating set inducing at least one edge."""
    _require_edges(g, "unstable domination")
    closed = _closed(g)
    best = g.n
    for u, v in g.sorted_edges:
        rest = g.full_mask & ~(closed[u] | closed[v])
        if not rest:
            return 2
        res = min_cover(rest, closed)
        assert res is not None
        best = min(best, 2 + res[0])
    return best


# --- matchings and independence ---------------------------------------------------------

def independence_number(g: Graph) -> int:
    return _mis(g.adj, g.full_mask, {})


def _mis(adj: Sequence[int], s: int, memo: dict[int, int]) -> int:
    if not s:
        return 0
    got = memo.get(s)
    if got is not None:
        return got
    tick()
    pick, deg = -1, -1
    for v in bits(s):
        d = (adj[v] & s).bit_count()
        if d <= 1:
            # some maximum independent set contains a vertex of degree at most one
            val = 1 + _mis(adj, s & ~(adj[v] | (1 << v)), memo)
            memo[s] = val
            return val
        if d > deg:
            pick, deg = v, d
    val = max(_mis(adj, s & ~(1 << pick), memo), 1 + _mis(adj, s & ~(adj[pick] | (1 << pick)), memo))
    memo[s] = val
    return val


def induced_matching(g: Graph) -> int:
    """im: the largest set of edges no two of which are joined by an edge."""
    _require_edges(g, "induced matching number")
    return _im(g.adj, g.full_mask, {})


def induced_matching_witness(g: Graph) -> list[tuple[int, int]]:
    """A maximum induced matching, recovered from the memoized search."""
    _require_edges(g, "induced matching number")
    adj, memo = g.adj, {}
    s = g.full_mask
    out: list[tuple[int, int]] = []
    while True:
        target = _im(adj, s, memo)
        if target == 0:
            return sorted(out)
        s &= ~mask_of(v for v in bits(s) if not adj[v] & s)
        v = max(bits(s), key=lambda w: (adj[w] & s).bit_count())
        closed_v = adj[v] | (1 << v)
        for w in bits(adj[v] & s):
            rest = s & ~(closed_v | adj[w] | (1 << w))
            if 1 + _im(adj, rest, memo) == target:
                out.append((min(v, w), max(v, w)))
                s = rest
                break
        else:
            s &= ~(1 << v)


def _im(adj: Sequence[int], s: int, memo: dict[int, int]) -> int:
    s &= ~mask_of(v for v in bits(s) if not adj[v] & s)
    if not s:
        return 0
    got = memo.get(s)
    if got is not None:
        return got
    tick()
    v = max(bits(s), key=lambda w: (adj[w] & s).bit_count())
    best = _im(adj, s & ~(1 << v), memo)
    closed_v = adj[v] | (1 << v)
    for w in bits(adj[v] & s):
        best = max(best, 1 + _im(adj, s & ~(closed_v | adj[w] | (1 << w)), memo))
    memo[s] = best
    return best


def _edge_index(g: Graph) -> tuple[list[tuple[int, int]], list[int]]:
    edges = list(g.sorted_edges)
    ends = [(1 << u) | (1 << v) for u, v in edges]
    return edges, ends


def min_edge_dominating_set(g: Graph) -> tuple[int, list[int]]:
    edges, ends = _edge_index(g)
    m = len(edges)
    cov = [mask_of(f for f in range(m) if ends[f] & ends[e]) for e in range(m)]
    res = min_cover((1 << m) - 1, cov)
    assert res is not None
    return res


def min_maximal_matching(g: Graph) -> tuple[int, list[int]]:
    """Branches on an undominated edge: some matching edge must touch one of its ends."""
    edges, ends = _edge_index(g)
    m = len(edges)
    best_size = m + 1
    best: list[int] = []

    def rec(chosen: list[int], used: int) -> None:
        nonlocal best_size, best
        tick()
        if len(chosen) >= best_size:
            return
        free = next((e for e in range(m) if not ends[e] & used), None)
        if free is None:
            best_size, best = len(chosen), list(chosen)
            return
        if len(chosen) + 1 >= best_size:
            return
        for f in range(m):
            if ends[f] & ends[free] and not ends[f] & used:
                chosen.append(f)
                rec(chosen, used | ends[f])
                chosen.pop()

    rec([], 0)
    return best_size, sorted(best)


def edge_domination(g: Graph) -> int:
    """γ′, computed as a smallest maximal matching and as a smallest edge dominating set."""
    _require_edges(g, "edge domination number")
    a = min_maximal_matching(g)[0]
    b = min_edge_dominating_set(g)[0]
    if a != b:
        raise CrossCheckError(f"smallest maximal matching {a} != smallest edge dominating set {b}")
    return a


# --- independence domination ------------------------------------------------------------

def _maximal_independent_sets(adj: Sequence[int], s: int) -> list[int]:
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        for v in bits(p):
            nv = adj[v] | (1 << v)
            expand(r | (1 << v), p & ~nv, x & ~nv)
            p &= ~(1 << v)
            x |= 1 << v

    expand(0, s, 0)
    return out


def independence_domination_by_definition(g: Graph) -> int:
    """τ as max γ(A, G°) over independent A ⊆ V(G°); maximal A suffice since γ(·,G°) is monotone."""
    core = g.without_isolated()
    if core.n == 0:
        return 0
    best = 0
    for a in _maximal_independent_sets(core.adj, core.full_mask):
        tick()
        res = min_cover(a, list(core.adj))
        assert res is not None
        best = max(best, res[0])
    return best


def independence_domination_via_square(g: Graph) -> int:
    """α((G°)²); a lower bound for τ that coincides with it on many graphs."""
    core = g.without_isolated()
    return independence_number(square(core)) if core.n else 0


def independence_domination_routes(g: Graph) -> tuple[int, int]:
    """(τ from its definition, α((G°)²)); the first is always ≥ the second."""
    a = independence_domination_by_definition(g)
    b = independence_domination_via_square(g)
    if a < b:
        raise CrossCheckError(f"tau by definition {a} < alpha of the square {b}")
    return a, b


def independence_domination(g: Graph) -> int:
    """τ(G) from its definition.

    The two routes are not asserted equal: they differ on 39 graphs with at
    most 7 vertices (smallest: six vertices, edges 01 02 05 12 13 14 34 45).
    """
    return independence_domination_routes(g)[0]


# --- vertex-wise and edge-wise domination ------------------------------------------------

def _vertexwise_cov(g: Graph) -> list[int]:
    """cov[u] = edges e with an endpoint in N[u], as a mask over sorted edges."""
    edges, ends = _edge_index(g)
    return [mask_of(k for k, e in enumerate(ends) if e & g.closed_mask(u)) for u in range(g.n)]


def upper_vertexwise(g: Graph) -> int:
    """Υ: largest minimal vertex-wise dominating set."""
    return upper_vertexwise_witness(g)[0]


def upper_vertexwise_witness(g: Graph, independent: bool = False) -> tuple[int, list[int]]:
    _require_edges(g, "vertex-wise domination")
    cov = _vertexwise_cov(g)
    targets = (1 << g.m) - 1
    conflict = _closed(g) if independent else None
    res = max_minimal_cover(targets, cov, conflict)
    assert res is not None
    size, members = res
    priv = private_targets(members, cov, targets)
    if not all(priv.values()):
        raise CrossCheckError("a member of the reported minimal set has no vertex-wise private neighbour")
    return size, members


def upper_independent_vertexwise(g: Graph) -> int:
    """β: largest minimal vertex-wise dominating set that is independent."""
    return upper_vertexwise_witness(g, independent=True)[0]


def _edgewise_cov(g: Graph) -> list[int]:
    return [g.closed_mask(u) | g.closed_mask(v) for u, v in g.sorted_edges]


def edgewise_domination(g: Graph) -> int:
    """ε: fewest edges dominating every non-isolated vertex; also found among matchings."""
    _require_edges(g, "edge-wise domination")
    cov = _edgewise_cov(g)
    targets = g.full_mask & ~mask_of(g.isolated_vertices())
    res = min_cover(targets, cov)
    assert res is not None
    _, ends = _edge_index(g)
    conflict = [mask_of(f for f in range(g.m) if ends[f] & ends[e]) for e in range(g.m)]
    res_m = min_cover(targets, cov, conflict)
    if res_m is None or res_m[0] != res[0]:
        raise CrossCheckError("smallest edge-wise dominating matching differs from smallest edge-wise dominating set")
    return res[0]


def h_side(b: BipartiteGraph, i: int) -> int:
    """Fewest S on side i reaching every vertex of the other side within distance 3."""
    g = b.graph
    if g.isolated_vertices():
        raise ValueError("h is defined only without isolated vertices")
    other = b.part_mask(1 - i)
    cov = []
    cands = b.part(i)
    for s in cands:
        reach = 0
        for y in bits(g.adj[s]):
            for z in bits(g.adj[y]):
                reach |= g.adj[z]
        cov.append((reach | g.adj[s]) & other)
    res = min_cover(other, cov)
    assert res is not None
    return res[0]


# --- cochordal covers -----------------------------------------------------------------------

COCHORD_GENERAL_MAX_EDGES = 14


def _maximal_chain_subgraphs(b: Graph, side: Sequence[int]) -> list[int]:
    """Inclusion-maximal 2K2-free edge sets of a bipartite graph, as masks over sorted edges.

    A chain subgraph is fixed by nested sets I_1 ⊋ I_2 ⊋ … on the far side,
    each an intersection of neighbourhoods; every near vertex x keeps the
    largest I_j inside N(x).
    """
    edge_id = {e: k for k, e in enumerate(b.sorted_edges)}
    near = [x for x in range(b.n) if side[x] == 0 and b.adj[x]]
    found: set[int] = set()
    seen: set[tuple[int, ...]] = set()

    def edge_mask(chain: list[int]) -> int:
        m = 0
        for x in near:
            for level in chain:
                if level & b.adj[x] == level:
                    for y in bits(level):
                        m |= 1 << edge_id[(min(x, y), max(x, y))]
                    break
        return m

    def dfs(chain: list[int]) -> None:
        key = tuple(chain)
        if key in seen:
            return
        seen.add(key)
        tick()
        last = chain[-1]
        extended = False
        for x in near:
            nxt = last & b.adj[x]
            if nxt and nxt != last:
                extended = True
                dfs(chain + [nxt])
        if not extended:
            found.add(edge_mask(chain))

    for x in near:
        dfs([b.adj[x]])
    return [m for m in found if not any(o != m and o & m == m for o in found)]


def _maximal_cochordal_general(g: Graph) -> list[int]:
    if g.m > COCHORD_GENERAL_MAX_EDGES:
        raise ValueError(f"cochordal cover of a non-bipartite graph is limited to {COCHORD_GENERAL_MAX_EDGES} edges")
    edges = list(g.sorted_edges)
    good = []
    for mask in range(1, 1 << len(edges)):
        tick()
        chosen = [edges[k] for k in bits(mask)]
        verts = sorted({v for e in chosen for v in e})
        pos = {v: i for i, v in enumerate(verts)}
        sub = Graph(len(verts), frozenset((pos[u], pos[v]) for u, v in chosen))
        if is_chordal(sub.complement()):
            good.append(mask)
    return [m for m in good if not any(o != m and o & m == m for o in good)]


def _min_set_cover_ids(universe: int, sets: list[int]) -> int:
    """Iterative deepening: the smallest k such that k of the sets cover ``universe``."""
    by_elem = {e: [s for s in sets if s >> e & 1] for e in bits(universe)}
    biggest = max(s.bit_count() for s in sets)

    def feasible(k: int, covered: int) -> bool:
        tick()
        unc = universe & ~covered
        if not unc:
            return True
        if k == 0 or k * biggest < unc.bit_count():
            return False
        e = min(bits(unc), key=lambda x: len(by_elem[x]))
        return any(feasible(k - 1, covered | s) for s in by_elem[e])

    k = 1
    while not feasible(k, 0):
        k += 1
    return k


def cochordal_cover(g: Graph) -> int:
    """Fewest cochordal subgraphs whose edges cover E(g)."""
    _require_edges(g, "cochordal cover number")
    coloring = g.two_coloring()
    if coloring is not None:
        cands = _maximal_chain_subgraphs(g, coloring)
    else:
        cands = _maximal_cochordal_general(g)
    value = _min_set_cover_ids((1 << g.m) - 1, cands)
    if girth(g) >= 5:
        alt = edge_domination(g)
        if alt != value:
            raise CrossCheckError(f"cochord {value} != edge domination {alt} on a graph of girth at least 5")
    return value


# --- records ------------------------------------------------------------------------------------

GRAPH_INVARIANTS: dict[str, Callable[[Graph], int]] = {
    "gamma": domination_number,
    "Gamma": upper_domination,
    "ind_dom": independent_domination,
    "edge_dom": edge_domination,
    "tau": independence_domination,
    "gamma_us": unstable_domination,
    "Upsilon": upper_vertexwise,
    "beta_vw": upper_independent_vertexwise,
    "epsilon": edgewise_domination,
    "im": induced_matching,
    "alpha": independence_number,
    "cochord": cochordal_cover,
}


@dataclass
class InvariantRecord:
    """Requested invariants of one graph; None means not requested."""

    gamma: int | None = None
    Gamma: int | None = None
    ind_dom: int | None = None
    edge_dom: int | None = None
    tau: int | None = None
    gamma_us: int | None = None
    Upsilon: int | None = None
    beta_vw: int | None = None
    epsilon: int | None = None
    im: int | None = None
    alpha: int | None = None
    cochord: int | None = None
    h_side: int | None = None
    witness: list[int] | None = None
    errors: dict[str, str] = field(default_factory=dict)

    def to_json(self) -> dict:
        out: dict = {}
        for f in fields(self):
            val = getattr(self, f.name)
            if f.name == "errors":
                if val:
                    out["errors"] = dict(val)
            elif val is not None:
                out[f.name] = val
        return out


def compute_record(g: Graph, selection: Sequence[str]) -> InvariantRecord:
    """Evaluate the selected graph invariants; precondition failures land in ``errors``."""
    rec = InvariantRecord()
    for name in selection:
        fn = GRAPH_INVARIANTS.get(name)
        if fn is None:
            raise KeyError(f"unknown invariant {name!r}")
        try:
            setattr(rec, name, fn(g))
        except ValueError as exc:
            rec.errors[name] = str(exc)
    return rec
