"""Naive reference implementations used only by the tests.

Everything here works from definitions by exhaustive subset search over
plain Python sets, and shares no code with the package beyond the Graph
value type.  Keep inputs small: most functions are exponential in n or m.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import networkx as nx

from pdreg.graphs import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def from_nx(h: nx.Graph) -> Graph:
    idx = {v: i for i, v in enumerate(sorted(h.nodes))}
    return Graph(len(idx), frozenset((idx[u], idx[v]) for u, v in h.edges))


def subsets(items, sizes=None):
    items = list(items)
    for k in sizes if sizes is not None else range(len(items) + 1):
        yield from (frozenset(c) for c in combinations(items, k))


def nbhd(g: Graph, v: int) -> set[int]:
    return {w for e in g.edges for w in e if v in e and w != v}


def closed(g: Graph, v: int) -> set[int]:
    return nbhd(g, v) | {v}


def independent(g: Graph, s) -> bool:
    return not any(u in s and v in s for u, v in g.edges)


# --- vertex domination ------------------------------------------------------------

def dominates(g: Graph, s) -> bool:
    return all(v in s or nbhd(g, v) & set(s) for v in range(g.n))


def minimal_dominating_sets(g: Graph) -> list[frozenset]:
    doms = [s for s in subsets(range(g.n)) if dominates(g, s)]
    return [s for s in doms if not any(dominates(g, s - {x}) for x in s)]


def gamma(g: Graph) -> int:
    return min(len(s) for s in subsets(range(g.n)) if dominates(g, s))


def upper_gamma(g: Graph) -> int:
    return max(len(s) for s in minimal_dominating_sets(g))


def ind_dom(g: Graph) -> int:
    return min(len(s) for s in subsets(range(g.n)) if dominates(g, s) and independent(g, s))


def gamma_us(g: Graph) -> int:
    return min(len(s) for s in subsets(range(g.n))
               if dominates(g, s) and not independent(g, s))


def alpha(g: Graph) -> int:
    return max(len(s) for s in subsets(range(g.n)) if independent(g, s))


def tau(g: Graph) -> int:
    core = [v for v in range(g.n) if nbhd(g, v)]
    if not core:
        return 0
    best = 0
    for a in subsets(core):
        if not a or not independent(g, a):
            continue
        need = min(len(x) for x in subsets(core) if all(nbhd(g, y) & x for y in a))
        best = max(best, need)
    return best


def square_alpha(g: Graph) -> int:
    core = [v for v in range(g.n) if nbhd(g, v)]
    if not core:
        return 0
    h = nx.power(to_nx(g).subgraph(core), 2)
    return alpha(from_nx(h))


# --- edge-based parameters -----------------------------------------------------------

def _edges(g: Graph) -> list[tuple[int, int]]:
    return sorted(g.edges)


def edge_domination(g: Graph) -> int:
    """Fewest edges such that every edge shares an endpoint with one of them."""
    es = _edges(g)
    for k in range(1, len(es) + 1):
        for f in combinations(es, k):
            if all(any(set(e) & set(x) for x in f) for e in es):
                return k
    raise AssertionError("unreachable")


def min_maximal_matching(g: Graph) -> int:
    es = _edges(g)
    best = None
    for k in range(1, len(es) + 1):
        for f in combinations(es, k):
            used = {v for e in f for v in e}
            if len(used) != 2 * k:
                continue
            if all(set(e) & used for e in es):
                return k
    return best


def epsilon(g: Graph) -> int:
    es = _edges(g)
    core = {v for e in es for v in e}
    for k in range(1, len(es) + 1):
        for f in combinations(es, k):
            reach = set().union(*(closed(g, a) | closed(g, b) for a, b in f))
            if core <= reach:
                return k
    raise AssertionError("unreachable")


def _vw_dominates(g: Graph, s) -> bool:
    return all(any(closed(g, x) & {a, b} for x in s) for a, b in g.edges)


def _minimal_vw_sets(g: Graph, need_independent: bool) -> list[frozenset]:
    out = []
    for s in subsets(range(g.n)):
        if not s or not _vw_dominates(g, s):
            continue
        if need_independent and not independent(g, s):
            continue
        if any(_vw_dominates(g, s - {x}) for x in s):
            continue
        out.append(s)
    return out


def upsilon(g: Graph) -> int:
    return max(len(s) for s in _minimal_vw_sets(g, False))


def beta_vw(g: Graph) -> int:
    return max(len(s) for s in _minimal_vw_sets(g, True))


def induced_matching(g: Graph) -> int:
    es = _edges(g)
    best = 0
    for k in range(1, len(es) + 1):
        found = False
        for f in combinations(es, k):
            vs = [v for e in f for v in e]
            if len(set(vs)) != 2 * k:
                continue
            if sum(1 for a, b in es if a in vs and b in vs) == k:
                found = True
                break
        if not found:
            break
        best = k
    return best


def is_chordal(g: Graph) -> bool:
    return nx.is_chordal(to_nx(g))


def cochord(g: Graph) -> int:
    """Fewest edge subsets, each spanning a subgraph with chordal complement, covering E."""
    es = _edges(g)
    if not es:
        raise ValueError("edgeless")

    def cochordal(f) -> bool:
        vs = sorted({v for e in f for v in e})
        h = nx.complement(nx.Graph(list(f)))
        h.add_nodes_from(vs)
        return nx.is_chordal(h)

    good = [frozenset(f) for f in subsets(es) if f and cochordal(f)]
    maximal = [f for f in good if not any(f < h for h in good)]
    target = frozenset(es)
    for k in range(1, len(es) + 1):
        for combo in combinations(maximal, k):
            if frozenset().union(*combo) == target:
                return k
    raise AssertionError("unreachable")


# --- complexes ----------------------------------------------------------------------------

def faces_of(facets) -> set[frozenset]:
    out: set[frozenset] = set()
    for f in facets:
        out.update(subsets(f))
    return out


def independent_sets(g: Graph) -> set[frozenset]:
    return {s for s in subsets(range(g.n)) if independent(g, s)}


def maximal(family) -> set[frozenset]:
    fam = set(family)
    return {s for s in fam if not any(s < t for t in fam)}


def dual_faces(ground: int, faces: set[frozenset]) -> set[frozenset]:
    full = frozenset(range(ground))
    return {s for s in subsets(range(ground)) if full - s not in faces}


def _boundary_rank(faces_k: list[tuple], faces_km1: list[tuple], gf2: bool) -> int:
    if not faces_k or not faces_km1:
        return 0
    idx = {f: i for i, f in enumerate(faces_km1)}
    rows = []
    for f in faces_k:
        row = [Fraction(0)] * len(faces_km1)
        for i in range(len(f)):
            sub = f[:i] + f[i + 1:]
            row[idx[sub]] = Fraction(1 if gf2 or i % 2 == 0 else -1)
        rows.append(row)
    return _rank(rows, 2 if gf2 else 0)


def _rank(rows: list[list[Fraction]], p: int) -> int:
    """Row rank by Gauss-Jordan; entries reduced mod p when p > 0."""

    def nz(x) -> bool:
        return bool(x % p) if p else x != 0

    rows = [r[:] for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if nz(rows[i][c])), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and nz(rows[i][c]):
                f = rows[i][c] / rows[rank][c]
                rows[i] = [(a - f * b) % p if p else a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def reduced_betti(faces: set[frozenset], gf2: bool) -> dict[int, int]:
    """Reduced homology ranks by dense elimination over Q or GF(2); faces must include ∅."""
    by_dim: dict[int, list[tuple]] = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(tuple(sorted(f)))
    for v in by_dim.values():
        v.sort()
    top = max(by_dim)
    ranks = {k: _boundary_rank(by_dim.get(k, []), by_dim.get(k - 1, []), gf2) for k in range(0, top + 2)}
    return {k: len(by_dim.get(k, [])) - ranks.get(k, 0) - ranks.get(k + 1, 0) for k in range(-1, top + 1)}


def induced_faces(faces: set[frozenset], s) -> set[frozenset]:
    return {f for f in faces if f <= s}


def regularity(faces: set[frozenset], ground: int, gf2: bool = True) -> int:
    best = 0
    for s in subsets(range(ground)):
        if not s:
            continue
        h = reduced_betti(induced_faces(faces, s), gf2)
        for k, r in h.items():
            if r:
                best = max(best, k + 1)
    return best


def hochster_pd(faces: set[frozenset], ground: int, gf2: bool = True) -> int:
    """Quotient projective dimension: max |σ| - k - 1 over nonzero H̃_k(Δ[σ])."""
    best = 0
    for s in subsets(range(ground)):
        if not s:
            continue
        h = reduced_betti(induced_faces(faces, s), gf2)
        for k, r in h.items():
            if r:
                best = max(best, len(s) - k - 1)
    return best
