"""Reduced homology, regularity, projective dimension and graded Betti numbers.

Everything is exact: GF(2) ranks by XOR elimination on packed rows, rational
ranks by fraction-free integer elimination.  Induced-subcomplex scans run in
decreasing size and stop as soon as the running optimum cannot be beaten.

Homology of an independence complex goes through a reduction pipeline
(cone detection, joins over components, neighbourhood folds and wedge
splittings) before falling back to a boundary-matrix computation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import combinations
from typing import Callable, Union

from .budget import tick
from .complexes import Clutter, Complex, alexander_dual, independence_complex, minimal_nonfaces
from .graphs import Graph, bits, mask_of
from .linalg import gf2_rank, gf2_transpose, int_rank


class FieldTag(str, Enum):
    GF2 = "gf2"
    RATIONAL = "rational"

    @classmethod
    def parse(cls, text: str | FieldTag) -> FieldTag:
        if isinstance(text, FieldTag):
            return text
        t = text.strip().lower()
        if t in ("gf2", "f2", "z2"):
            return cls.GF2
        if t in ("q", "rational", "rationals", "qq"):
            return cls.RATIONAL
        raise ValueError(f"unknown field {text!r}; use gf2 or q")


GF2 = FieldTag.GF2
RATIONAL = FieldTag.RATIONAL
BOTH_FIELDS = (GF2, RATIONAL)

Homology = dict[int, int]
Input = Union[Complex, Graph, Clutter]


class HomologyAuditError(AssertionError):
    """An internal consistency check on a homology computation failed."""


# --- raw chain complexes ---------------------------------------------------------

def _homology_of_faces(faces: list[int], fld: FieldTag, audit: bool = True) -> Homology:
    """Reduced homology ranks (zeros included) from a full face list containing ∅."""
    by_dim: dict[int, list[int]] = {}
    for f in faces:
        by_dim.setdefault(f.bit_count() - 1, []).append(f)
    top = max(by_dim)
    index = {d: {f: i for i, f in enumerate(sorted(fs))} for d, fs in by_dim.items()}
    ranks = {}
    for d in range(0, top + 1):
        lower = index[d - 1]
        faces_d = sorted(by_dim.get(d, ()))
        if fld is GF2:
            rows = []
            for f in faces_d:
                r = 0
                for v in bits(f):
                    r |= 1 << lower[f & ~(1 << v)]
                rows.append(r)
            rank = gf2_rank(rows)
            if audit and gf2_rank(gf2_transpose(rows, len(lower))) != rank:
                raise HomologyAuditError(f"row and column rank of the boundary in dimension {d} differ")
        else:
            rows_q = []
            for f in faces_d:
                r: dict[int, int] = {}
                for pos, v in enumerate(bits(f)):
                    r[lower[f & ~(1 << v)]] = -1 if pos & 1 else 1
                rows_q.append(r)
            rank = int_rank(rows_q)
        ranks[d] = rank
        tick(len(faces_d))
    out = {}
    for d in range(-1, top + 1):
        out[d] = len(by_dim.get(d, ())) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if out[d] < 0:
            raise HomologyAuditError(f"negative Betti number in dimension {d}")
    euler_faces = sum((-1) ** d * len(fs) for d, fs in by_dim.items())
    euler_hom = sum((-1) ** d * h for d, h in out.items())
    if euler_faces != euler_hom:
        raise HomologyAuditError("Euler characteristic mismatch")
    return out


def _sparse(h: Homology) -> Homology:
    return {d: r for d, r in h.items() if r}


def _complex_homology_raw(d: Complex, fld: FieldTag) -> Homology:
    if d.is_void:
        raise ValueError("the void complex has no reduced homology")
    return _homology_of_faces(list(d.faces()), fld)


# --- independence complexes of graphs ------------------------------------------------

def _join(a: Homology, b: Homology) -> Homology:
    out: Homology = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j + 1] = out.get(i + j + 1, 0) + x * y
    return out


def _components(adj: tuple[int, ...], s: int) -> list[int]:
    comps = []
    rest = s
    while rest:
        low = rest & -rest
        comp = low
        frontier = low
        while frontier:
            v = frontier & -frontier
            frontier ^= v
            new = adj[v.bit_length() - 1] & s & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        rest &= ~comp
    return comps


def _independent_sets(adj: tuple[int, ...], s: int) -> list[int]:
    out = [0]
    stack = [(0, s)]
    while stack:
        cur, avail = stack.pop()
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            avail ^= low
            nxt = cur | low
            out.append(nxt)
            stack.append((nxt, avail & ~adj[v]))
    return out


class IndependenceHomology:
    """Memoized reduced homology of Ind(G[S]) for vertex masks S of one fixed graph."""

    def __init__(self, adj: tuple[int, ...], fld: FieldTag) -> None:
        self.adj = adj
        self.field = fld
        self.memo: dict[int, Homology] = {}
        self.alt_memo: dict[int, int] = {}

    def __call__(self, s: int) -> Homology:
        h = self.memo.get(s)
        if h is None:
            h = self._compute(s)
            self.memo[s] = h
        return h

    def _compute(self, s: int) -> Homology:
        adj = self.adj
        if s == 0:
            return {-1: 1}
        for v in bits(s):
            if not adj[v] & s:
                return {}
        comps = _components(adj, s)
        if len(comps) > 1:
            out: Homology = {-1: 1}
            for c in comps:
                out = _join(out, self(c))
                if not out:
                    return {}
            return out
        verts = list(bits(s))
        nb = {v: adj[v] & s for v in verts}
        for v in verts:
            for u in verts:
                if u != v and nb[u] & ~nb[v] == 0:
                    return self(s & ~(1 << v))
        for v in verts:
            cv = nb[v] | (1 << v)
            for u in bits(nb[v]):
                if (nb[u] | (1 << u)) & ~cv == 0:
                    out = dict(self(s & ~(1 << v)))
                    for d, r in self(s & ~cv).items():
                        out[d + 1] = out.get(d + 1, 0) + r
                    return _sparse(out)
        tick(len(verts))
        return _sparse(_homology_of_faces(_independent_sets(adj, s), self.field))

    def alternating_count(self, s: int) -> int:
        """Σ (-1)^|I| over independent sets I ⊆ S, by vertex deletion/contraction."""
        if s == 0:
            return 1
        got = self.alt_memo.get(s)
        if got is not None:
            return got
        adj = self.adj
        v = max(bits(s), key=lambda w: (adj[w] & s).bit_count())
        val = self.alternating_count(s & ~(1 << v)) - self.alternating_count(s & ~(1 << v) & ~adj[v])
        self.alt_memo[s] = val
        return val

    def checked(self, s: int) -> Homology:
        """Homology of Ind(G[S]) with an Euler-characteristic cross-check against an independent count."""
        h = self(s)
        euler = sum((-1) ** d * r for d, r in h.items())
        if euler != -self.alternating_count(s):
            raise HomologyAuditError(f"Euler characteristic mismatch on vertex set {list(bits(s))}")
        return h


@lru_cache(maxsize=256)
def independence_engine(adj: tuple[int, ...], fld: FieldTag) -> IndependenceHomology:
    return IndependenceHomology(adj, fld)


def graph_homology(g: Graph, fld: FieldTag = GF2) -> Homology:
    """Nonzero reduced homology ranks of Ind(g)."""
    eng = independence_engine(g.adj, fld)
    return dict(eng.checked(g.full_mask))


def _flag_graph(d: Complex) -> Graph | None:
    """The graph G with Δ = Ind(G) on vert(Δ), when Δ is a flag complex."""
    vert = d.vertex_mask
    edges = []
    for nf in minimal_nonfaces(d):
        if nf & ~vert:
            continue
        if nf.bit_count() != 2:
            return None
        edges.append(tuple(bits(nf)))
    return Graph(d.ground, frozenset(edges))


def _full_range(h: Homology, top: int) -> Homology:
    return {d: h.get(d, 0) for d in range(-1, top + 1)}


def reduced_homology(x: Complex | Graph, fld: FieldTag | str = GF2, route: str = "auto") -> Homology:
    """Ranks of reduced homology in every dimension from -1 to dim.

    A graph means its independence complex.  ``route="raw"`` forces the
    boundary-matrix computation even for flag complexes.
    """
    fld = FieldTag.parse(fld)
    if isinstance(x, Graph):
        d = independence_complex(x)
        if route == "raw":
            return _complex_homology_raw(d, fld)
        return _full_range(graph_homology(x, fld), d.dim)
    if x.is_void:
        raise ValueError("the void complex has no reduced homology")
    if route == "auto":
        g = _flag_graph(x)
        if g is not None:
            return _full_range(graph_homology(g.induced(bits(x.vertex_mask)), fld), x.dim)
    return _complex_homology_raw(x, fld)


def fold_reduce(g: Graph) -> Graph:
    """Delete v while some u ≠ v has N(u) ⊆ N(v); Ind keeps its homotopy type.

    Candidates are tried with v ascending, then u ascending.  The result is
    relabeled onto 0..k-1 preserving order.
    """
    adj = g.adj
    s = g.full_mask
    changed = True
    while changed:
        changed = False
        for v in bits(s):
            nv = adj[v] & s
            if any(u != v and (adj[u] & s) & ~nv == 0 for u in bits(s)):
                s &= ~(1 << v)
                changed = True
                break
    return g.induced(bits(s))


# --- induced-subcomplex oracles --------------------------------------------------------

@dataclass(frozen=True)
class ScanResult:
    """Optimum of a subset scan with the subset and homological degree attaining it."""

    value: int
    subset: tuple[int, ...]
    degree: int | None


class _InducedOracle:
    """Homology of Δ[S] for S ⊆ vert(Δ), via the graph pipeline when Δ is flag."""

    def __init__(self, d: Complex, fld: FieldTag, route: str) -> None:
        self.d = d
        self.graph = _flag_graph(d) if route == "auto" else None
        self.engine = independence_engine(self.graph.adj, fld) if self.graph is not None else None
        self.field = fld

    def __call__(self, s: int) -> Homology:
        if self.engine is not None:
            return self.engine(s)
        sub = self.d.induced(s)
        if sub.cone_points():
            return {}
        return _sparse(_complex_homology_raw(sub, self.field))

    def is_cone(self, s: int) -> bool:
        if self.graph is not None:
            adj = self.graph.adj
            return any(not adj[v] & s for v in bits(s))
        return bool(self.d.induced(s).cone_points())


def _as_complex(x: Input) -> Complex:
    if isinstance(x, Complex):
        return x
    return independence_complex(x)


def _graph_reg_component(eng: IndependenceHomology, adj: tuple[int, ...], comp: int) -> tuple[int, int, int | None]:
    verts = list(bits(comp))
    best, wit, deg = 0, 0, None
    for u in verts:
        w = adj[u] & comp
        if w:
            v = w.bit_length() - 1
            best, wit, deg = 1, (1 << u) | (1 << v), 0
            break
    for size in range(len(verts), 1, -1):
        # reg(Ind(H)) is at most the matching number of H
        if size // 2 <= best:
            break
        for combo in combinations(verts, size):
            tick()
            s = mask_of(combo)
            if any(not adj[v] & s for v in combo):
                continue
            h = eng(s)
            if h:
                top = max(h)
                if top + 1 > best:
                    best, wit, deg = top + 1, s, top
    return best, wit, deg


def graph_regularity_scan(g: Graph, fld: FieldTag = GF2) -> ScanResult:
    """reg(Ind(g)), summed over connected components."""
    fld = FieldTag.parse(fld)
    eng = independence_engine(g.adj, fld)
    total, wit = 0, 0
    for comp in _components(g.adj, g.full_mask):
        val, w, _ = _graph_reg_component(eng, g.adj, comp)
        total += val
        wit |= w
    deg = total - 1 if total else None
    return ScanResult(total, tuple(bits(wit)), deg)


def _complex_regularity_scan(d: Complex, fld: FieldTag, route: str) -> ScanResult:
    if d.is_void:
        raise ValueError("regularity of the void complex is undefined")
    oracle = _InducedOracle(d, fld, route)
    if oracle.graph is not None:
        return graph_regularity_scan(oracle.graph, fld)
    verts = list(bits(d.vertex_mask))
    # H̃_k(Δ[S]) vanishes above dim Δ, so no S can beat the largest facet size
    cap = d.dim + 1
    best, wit, deg = 0, 0, None
    for size in range(len(verts), 0, -1):
        # Δ[S] with nonzero top homology in dimension |S|-1 would be the full simplex on S
        if min(size - 1, cap) <= best:
            break
        for combo in combinations(verts, size):
            tick()
            s = mask_of(combo)
            if oracle.is_cone(s):
                continue
            h = oracle(s)
            if h:
                top = max(h)
                if top + 1 > best:
                    best, wit, deg = top + 1, s, top
    return ScanResult(best, tuple(bits(wit)), deg)


def regularity_scan(x: Input, fld: FieldTag | str = GF2, route: str = "auto") -> ScanResult:
    """reg with a witness S and degree k such that H̃_k(Δ[S]) ≠ 0 and reg = k + 1."""
    fld = FieldTag.parse(fld)
    if isinstance(x, Graph) and route == "auto":
        return graph_regularity_scan(x, fld)
    return _complex_regularity_scan(_as_complex(x), fld, route)


def regularity(x: Input, fld: FieldTag | str = GF2, route: str = "auto") -> int:
    """max{ j : H̃_{j-1}(Δ[S]) ≠ 0 for some S }; 0 for a simplex.

    Graphs and clutters are read through their independence complexes.
    """
    return regularity_scan(x, fld, route).value


def _graph_pd_component(eng: IndependenceHomology, adj: tuple[int, ...], comp: int) -> tuple[int, int]:
    verts = list(bits(comp))
    if not any(adj[v] & comp for v in verts):
        return 0, 0
    best, wit = 1, 0
    for size in range(len(verts), 1, -1):
        if size - 1 <= best:
            break
        for combo in combinations(verts, size):
            tick()
            s = mask_of(combo)
            if any(not adj[v] & s for v in combo):
                continue
            h = eng(s)
            if h:
                val = size - min(h) - 1
                if val > best:
                    best, wit = val, s
    return best, wit


def graph_pd_hochster(g: Graph, fld: FieldTag = GF2) -> ScanResult:
    """pd(g) = max |σ| - j - 1 over nonzero H̃_j(Ind(g[σ])), summed over components."""
    fld = FieldTag.parse(fld)
    eng = independence_engine(g.adj, fld)
    total, wit = 0, 0
    for comp in _components(g.adj, g.full_mask):
        val, w = _graph_pd_component(eng, g.adj, comp)
        total += val
        wit |= w
    return ScanResult(total, tuple(bits(wit)), None)


def proj_dim_direct_scan(d: Complex, fld: FieldTag | str = GF2, route: str = "auto") -> ScanResult:
    """Hochster scan: max over σ ⊆ ground of |σ| - j - 1 over nonzero H̃_j(Δ[σ]).

    Vertices of the ground set outside vert(Δ) lie in every optimal σ, so each
    adds exactly one.
    """
    fld = FieldTag.parse(fld)
    if d.is_void:
        raise ValueError("projective dimension of the void complex is undefined")
    ghosts = d.ground - d.vertex_mask.bit_count()
    ghost_mask = d.full_mask & ~d.vertex_mask
    oracle = _InducedOracle(d, fld, route)
    if oracle.graph is not None:
        res = graph_pd_hochster(oracle.graph.induced(bits(d.vertex_mask)), fld)
        labels = list(bits(d.vertex_mask))
        sub = tuple(sorted([labels[i] for i in res.subset] + list(bits(ghost_mask))))
        return ScanResult(res.value + ghosts, sub, None)
    verts = list(bits(d.vertex_mask))
    best, wit = 0, 0
    for size in range(len(verts), 0, -1):
        if size - 1 <= best:
            break
        for combo in combinations(verts, size):
            tick()
            s = mask_of(combo)
            if oracle.is_cone(s):
                continue
            h = oracle(s)
            if h:
                val = size - min(h) - 1
                if val > best:
                    best, wit = val, s
    return ScanResult(best + ghosts, tuple(bits(wit | ghost_mask)), None)


def proj_dim_direct(d: Complex, fld: FieldTag | str = GF2, route: str = "auto") -> int:
    return proj_dim_direct_scan(d, fld, route).value


TERAI_MAX_VERTICES = 8


def proj_dim(x: Graph | Clutter, fld: FieldTag | str = GF2, route: str = "auto") -> int:
    """Projective dimension of the quotient by the edge ideal.

    ``route="terai"`` computes reg(Ind(x)^∨) + 1; ``route="hochster"`` scans
    induced subcomplexes of Ind(x) directly.  ``auto`` uses the dual route up to
    TERAI_MAX_VERTICES vertices.  An input without edges has pd 0.
    """
    fld = FieldTag.parse(fld)
    if isinstance(x, Graph):
        if x.m == 0:
            return 0
        if route == "auto":
            route = "terai" if x.n <= TERAI_MAX_VERTICES else "hochster"
        if route == "hochster":
            return graph_pd_hochster(x, fld).value
        total = 0
        for comp in x.components():
            sub = x.induced(comp)
            if sub.m:
                dual = alexander_dual(independence_complex(sub))
                total += regularity(dual, fld, route="raw") + 1
        return total
    if not x.edges:
        return 0
    ind = independence_complex(x)
    if route == "hochster":
        return proj_dim_direct(ind, fld)
    return regularity(alexander_dual(ind), fld) + 1


# --- Betti tables -------------------------------------------------------------------

@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers β_{i,j} of the Stanley-Reisner quotient; zero entries are omitted."""

    field: FieldTag
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    @property
    def regularity(self) -> int:
        return max(j - i for i, j in self.entries)

    @property
    def projective_dimension(self) -> int:
        return max(i for i, _ in self.entries)

    def to_json(self) -> dict:
        return {
            "field": self.field.value,
            "entries": [[i, j, r] for (i, j), r in sorted(self.entries.items())],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, obj: dict) -> BettiTable:
        return cls(FieldTag.parse(obj["field"]), {(i, j): r for i, j, r in obj["entries"]})


BETTI_CAP = 20


def betti_table(d: Complex, fld: FieldTag | str = GF2, cap: int = BETTI_CAP, route: str = "auto") -> BettiTable:
    """β_{i,j} = Σ_{|σ|=j} dim H̃_{j-i-1}(Δ[σ]) over all σ in the ground set."""
    fld = FieldTag.parse(fld)
    if d.is_void:
        raise ValueError("Betti table of the void complex is undefined")
    if d.ground > cap:
        raise ValueError(f"ground set of {d.ground} vertices exceeds the cap of {cap}")
    oracle = _InducedOracle(d, fld, route)
    vert = d.vertex_mask
    entries: dict[tuple[int, int], int] = {}
    for s in range(1 << d.ground):
        tick()
        j = s.bit_count()
        # ghost vertices in σ do not change Δ[σ]
        core = s & vert
        if core == 0:
            h = {-1: 1}
        else:
            h = {} if oracle.is_cone(core) else oracle(core)
        for k, r in h.items():
            key = (j - k - 1, j)
            entries[key] = entries.get(key, 0) + r
    return BettiTable(fld, entries)


def homology_callable(d: Complex, fld: FieldTag, route: str = "auto") -> Callable[[int], Homology]:
    """Memo-backed S ↦ nonzero H̃(Δ[S]) for use by other modules."""
    return _InducedOracle(d, fld, route)
