"""Registry of universally quantified statements and open questions, run instance by instance.

Each entry takes one instance (a graph, a complex or a clutter) and one field,
and answers holds / fails / skipped.  Skips always carry the violated
precondition.  Budget overruns are turned into "exceeded" by the runner.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterator, Union

from .complexes import (
    Clutter,
    Complex,
    alexander_dual,
    b_complement,
    closed_neighbourhood_clutter,
    dominance_complex,
    dump_sets,
    flower_number,
    helly_number,
    independence_complex,
    is_sp_bipartite,
    levi_graph,
    random_clutter,
    side_complex,
)
from .domination import (
    cochordal_cover,
    domination_number,
    edge_domination,
    edgewise_domination,
    h_side,
    independence_domination_by_definition,
    independence_domination_via_square,
    independence_number,
    independent_domination,
    induced_matching,
    induced_matching_witness,
    upper_domination,
    upper_independent_vertexwise,
    upper_vertexwise,
)
from .formats import to_graph6
from .graphs import BipartiteGraph, Graph, bits, has_induced_cycle, is_chordal, mask_of, square, subdivision
from .homology import (
    FieldTag,
    independence_engine,
    proj_dim,
    proj_dim_direct,
    regularity,
    regularity_scan,
)
from .primes import is_projectively_prime, pd_cached, pd_via_decompositions

Payload = Union[Graph, Complex, Clutter]

# exact reg(B) is attempted up to this many vertices; larger B use the local certificate
EXACT_B_MAX = 14
# reg(S(H)) is only computed exhaustively for n at most this
T15_MAX_N = 5


class Skip(Exception):
    """Precondition of the statement is not met by this instance."""


@dataclass(frozen=True)
class Instance:
    kind: str  # "graph", "complex" or "clutter"
    label: str
    payload: Payload
    origin: dict = field(default_factory=dict)

    def witness(self) -> dict:
        """Everything needed to rebuild this instance without the corpus."""
        out = {"kind": self.kind, "label": self.label, **self.origin}
        p = self.payload
        if isinstance(p, Graph):
            out["graph6"] = to_graph6(p)
        elif isinstance(p, Complex):
            out["facets"] = dump_sets(p.ground, list(p.facets))
        else:
            out["edges"] = dump_sets(p.ground, list(p.edges))
        return out


@dataclass(frozen=True)
class Outcome:
    status: str  # "holds" or "fails"
    detail: dict


def _verdict(ok: bool, **detail) -> Outcome:
    return Outcome("holds" if ok else "fails", detail)


@dataclass(frozen=True)
class Statement:
    id: str
    text: str
    kind: str
    field_sensitive: bool
    run: Callable[[Payload, FieldTag], Outcome]


def _need_edges(g: Graph) -> None:
    if g.m == 0:
        raise Skip("E(G) is non-empty")


def _need_no_isolated(g: Graph) -> None:
    if g.isolated_vertices():
        raise Skip("G has no isolated vertex")


def _need_proper_complex(d: Complex) -> None:
    if d.is_void:
        raise Skip("complex is non-void")
    if d.is_simplex:
        raise Skip("complex is not a simplex")
    if d.vertex_mask != d.full_mask:
        raise Skip("every ground vertex is a vertex of the complex")


def _sub_graph(g: Graph) -> Graph:
    return subdivision(g).graph


def _reg_at_least(g: Graph, fld: FieldTag) -> int:
    """im(g), certified as a regularity lower bound by homology of the matched vertices."""
    if g.m == 0:
        return 0
    matching = induced_matching_witness(g)
    s = mask_of(v for e in matching for v in e)
    k = len(matching)
    if not independence_engine(g.adj, fld)(s).get(k - 1, 0):
        raise AssertionError(f"induced matching {matching} does not certify reg >= {k}")
    return k


# --- B(Δ) lower bounds ---------------------------------------------------------------

def _bip_lower(b: BipartiteGraph, i: int, d: Complex, fld: FieldTag) -> Outcome:
    """reg(d) + 1 ≤ reg(b), where d lives on side i of b and b ≅ B(d) fixing side i."""
    scan = regularity_scan(d, fld)
    need = scan.value + 1
    bg = b.graph
    if bg.n <= EXACT_B_MAX:
        got = regularity(bg, fld)
        return _verdict(got >= need, reg_complex=scan.value, reg_B=got, method="exact")
    if scan.value == 0:
        return _verdict(bg.m > 0, reg_complex=0, B_has_edge=bg.m > 0, method="edge")
    # H̃_k(d[S]) ≠ 0 forces H̃_{k+1}(Ind(b[S ∪ other side])) ≠ 0
    side_i = b.part(i)
    s_mask = mask_of(side_i[v] for v in scan.subset)
    target = s_mask | b.part_mask(1 - i)
    h = independence_engine(bg.adj, fld)(target)
    if h.get(scan.degree + 1, 0):
        return _verdict(True, reg_complex=scan.value, reg_B_at_least=need, method="certificate",
                        subset=list(scan.subset))
    # the certificate is sound but not complete for other S; fall back to the full scan
    got = regularity(bg, fld)
    return _verdict(got >= need, reg_complex=scan.value, reg_B=got, method="exact-fallback")


def t1(d: Complex, fld: FieldTag) -> Outcome:
    _need_proper_complex(d)
    return _bip_lower(b_complement(d), 0, d, fld)


def t2(d: Complex, fld: FieldTag) -> Outcome:
    _need_proper_complex(d)
    nu, _ = flower_number(d)
    h = helly_number(d)
    im = induced_matching(b_complement(d).graph)
    rhs = max(2, nu, h)
    return _verdict(im == rhs, im_B=im, flower=nu, helly=h, rhs=rhs)


def t17(d: Complex, fld: FieldTag) -> Outcome:
    _need_proper_complex(d)
    b = b_complement(d)
    detail: dict = {}
    ok = True
    tested = 0
    for i in (0, 1):
        if not is_sp_bipartite(b, 1 - i):
            detail[f"side{i}"] = f"skipped: side {1 - i} is not Sperner"
            continue
        di = side_complex(b, i)
        if di.is_void or di.is_simplex:
            detail[f"side{i}"] = "skipped: side complex is a simplex"
            continue
        out = _bip_lower(b, i, di, fld)
        detail[f"side{i}"] = out.detail
        ok = ok and out.status == "holds"
        tested += 1
    if not tested:
        raise Skip("B(Δ) has a Sperner side whose side complex is not a simplex")
    return _verdict(ok, **detail)


# --- graph statements --------------------------------------------------------------------

def t3(g: Graph, fld: FieldTag) -> Outcome:
    _need_edges(g)
    r = regularity(g, fld)
    beta = upper_independent_vertexwise(g)
    return _verdict(r <= beta, reg=r, beta_vw=beta)


def _pd_vs_levi(h: Clutter, fld: FieldTag) -> Outcome:
    """pd(h) ≤ reg(L(h)), certified by an induced matching of L(h) or by B(Ind(h)^∨) ≅ L(h)."""
    pd = proj_dim(h, fld)
    low = _reg_at_least(levi_graph(h).graph, fld)
    if pd <= low:
        return _verdict(True, pd=pd, reg_levi_at_least=low, method="induced-matching certificate")
    # B(Ind(H)^∨) is L(H) with edge e renamed to the facet V∖e
    dual = alexander_dual(independence_complex(h))
    out = _bip_lower(b_complement(dual), 0, dual, fld)
    return _verdict(out.status == "holds" and pd <= out.detail["reg_complex"] + 1, pd=pd, **out.detail)


def t4(h: Clutter, fld: FieldTag) -> Outcome:
    if not h.edges:
        raise Skip("clutter has an edge")
    return _pd_vs_levi(h, fld)


def t5(g: Graph, fld: FieldTag) -> Outcome:
    d = dominance_complex(g)
    direct = proj_dim_direct(d, fld)
    dual = regularity(alexander_dual(d), fld, route="raw") + 1
    big_gamma = upper_domination(g)
    return _verdict(direct == big_gamma == dual, pd_hochster=direct, pd_terai=dual, Gamma=big_gamma)


def t6(g: Graph, fld: FieldTag) -> Outcome:
    if g.m == 0:
        return _verdict(True, pd=0, reg_SG=0, method="edgeless")
    return _pd_vs_levi(Clutter.from_graph(g), fld)


def t7(g: Graph, fld: FieldTag) -> Outcome:
    _need_edges(g)
    _need_no_isolated(g)
    im = induced_matching(_sub_graph(g))
    gamma = domination_number(g)
    return _verdict(im == g.n - gamma, im_SG=im, gamma=gamma, n=g.n)


def t8(g: Graph, fld: FieldTag) -> Outcome:
    _need_edges(g)
    pd = pd_cached(g, fld)
    ind = independent_domination(g)
    tau = independence_domination_by_definition(g)
    eps = edgewise_domination(g)
    lo, hi = g.n - ind, g.n - max(tau, eps)
    return _verdict(lo <= pd <= hi, pd=pd, lower=lo, upper=hi, ind_dom=ind, tau=tau, epsilon=eps)


def t9(g: Graph, fld: FieldTag) -> Outcome:
    _need_edges(g)
    _need_no_isolated(g)
    cc = cochordal_cover(_sub_graph(g))
    tau = independence_domination_by_definition(g)
    return _verdict(cc == g.n - tau, cochord_SG=cc, tau=tau, n=g.n)


def t10(g: Graph, fld: FieldTag) -> Outcome:
    _need_edges(g)
    _need_no_isolated(g)
    sg = _sub_graph(g)
    ups = upper_vertexwise(sg)
    beta = upper_independent_vertexwise(sg)
    eps = edgewise_domination(g)
    return _verdict(ups == beta == g.n - eps, Upsilon_SG=ups, beta_SG=beta, epsilon=eps, n=g.n)


def _smallest_side(g: Graph) -> int:
    """Smallest achievable min{|X|, |Y|} over bipartitions of g."""
    colour = g.two_coloring()
    assert colour is not None
    total = 0
    for comp in g.components():
        ones = sum(colour[v] for v in comp)
        total += min(ones, len(comp) - ones)
    return total


def t11(g: Graph, fld: FieldTag) -> Outcome:
    if not g.is_bipartite():
        raise Skip("G is bipartite")
    _need_edges(g)
    r = regularity(g, fld)
    im = induced_matching(g)
    side = _smallest_side(g)
    return _verdict(2 * r <= im + side, reg=r, im=im, min_side=side)


def t12(g: Graph, fld: FieldTag) -> Outcome:
    pd = pd_cached(g, fld)
    gamma = domination_number(g)
    return _verdict(2 * pd <= 2 * g.n - gamma, pd=pd, gamma=gamma, n=g.n)


def t13(g: Graph, fld: FieldTag) -> Outcome:
    if not is_chordal(g):
        raise Skip("G is chordal")
    _need_edges(g)
    sg = _sub_graph(g)
    want = g.n - domination_number(g)
    im = induced_matching(sg)
    if sg.n <= EXACT_B_MAX + 2:
        r = regularity(sg, fld)
        return _verdict(r == want == im, reg_SG=r, im_SG=im, target=want, method="exact")
    # im ≤ reg ≤ cochord pins reg down when the outer two meet
    cc = cochordal_cover(sg) if sg.m else 0
    if im == cc:
        return _verdict(im == want, im_SG=im, cochord_SG=cc, target=want, method="sandwich")
    r = regularity(sg, fld)
    return _verdict(r == want == im, reg_SG=r, im_SG=im, target=want, method="exact")


def t14(g: Graph, fld: FieldTag) -> Outcome:
    terai = proj_dim(g, fld, route="terai")
    direct = proj_dim_direct(independence_complex(g), fld, route="raw")
    return _verdict(terai == direct, pd_terai=terai, pd_hochster=direct)


def t15(g: Graph, fld: FieldTag) -> Outcome:
    if g.n > T15_MAX_N:
        raise Skip(f"|G| <= {T15_MAX_N} (exhaustive induced-subgraph search)")
    pd = pd_cached(g, fld)
    for size in range(g.n, -1, -1):
        for combo in combinations(range(g.n), size):
            h = g.induced(combo)
            if regularity(_sub_graph(h), fld) == pd:
                return _verdict(True, pd=pd, induced=list(combo))
    return _verdict(False, pd=pd)


def t16(g: Graph, fld: FieldTag) -> Outcome:
    _need_edges(g)
    pd = proj_dim(g, fld)
    val, dec = pd_via_decompositions(g, fld)
    return _verdict(val == pd, pd=pd, decomposition_value=val, parts=[list(p) for p in dec.parts])


def t18(g: Graph, fld: FieldTag) -> Outcome:
    _need_edges(g)
    gamma = domination_number(g)
    ind = independent_domination(g)
    if gamma != ind:
        raise Skip("gamma(G) = i(G)")
    im = induced_matching(_sub_graph(g))
    pd = pd_cached(g, fld)
    return _verdict(im <= pd, im_SG=im, pd=pd)


CHECKS: dict[str, Statement] = {s.id: s for s in [
    Statement("T1", "reg(B(D)) >= reg(D) + 1", "complex", True, t1),
    Statement("T2", "im(B(D)) = max{2, flower, helly} for D not a simplex", "complex", False, t2),
    Statement("T3", "reg(G) <= beta(G)", "graph", True, t3),
    Statement("T4", "pd(H) <= reg(L(H))", "clutter", True, t4),
    Statement("T5", "pd(Dom(G)) = Gamma(G)", "graph", True, t5),
    Statement("T6", "pd(G) <= reg(S(G))", "graph", True, t6),
    Statement("T7", "im(S(G)) = |G| - gamma(G)", "graph", False, t7),
    Statement("T8", "|G| - i(G) <= pd(G) <= |G| - max{tau, epsilon}", "graph", True, t8),
    Statement("T9", "cochord(S(G)) = |G| - tau(G)", "graph", False, t9),
    Statement("T10", "Upsilon(S(G)) = beta(S(G)) = |G| - epsilon(G)", "graph", False, t10),
    Statement("T11", "reg(B) <= (im(B) + min{|X|,|Y|}) / 2", "graph", True, t11),
    Statement("T12", "pd(G) <= |G| - gamma(G)/2", "graph", True, t12),
    Statement("T13", "G chordal => reg(S(G)) = im(S(G)) = |G| - gamma(G)", "graph", True, t13),
    Statement("T14", "pd via the dual equals pd via the direct scan", "graph", True, t14),
    Statement("T15", "some induced H has reg(S(H)) = pd(G)", "graph", True, t15),
    Statement("T16", "pd(G) = max over prime decompositions of the sum of part pds", "graph", True, t16),
    Statement("T17", "reg(D_i(B)) + 1 <= reg(B) on Sperner sides", "complex", True, t17),
    Statement("T18", "gamma(G) = i(G) => im(S(G)) <= pd(G)", "graph", True, t18),
]}


# --- open questions ----------------------------------------------------------------------

def h1(g: Graph, fld: FieldTag) -> Outcome:
    d = independence_complex(g)
    r = regularity(g, fld)
    for x in range(g.n):
        if regularity(g.delete([x]), fld) >= r:
            raise Skip("Ind(G) is a prime complex")
    b = b_complement(d).graph
    rb = regularity(b, fld)
    return _verdict(rb == r + 1, reg=r, reg_B=rb)


def h2(g: Graph, fld: FieldTag) -> Outcome:
    if not g.is_bipartite():
        raise Skip("G is bipartite")
    _need_edges(g)
    _need_no_isolated(g)
    b = BipartiteGraph.from_graph(g)
    x, y = len(b.part(0)), len(b.part(1))
    h_x, h_y = h_side(b, 0), h_side(b, 1)
    r = regularity(g, fld)
    bound = max(x - h_y, y - h_x)
    return _verdict(r <= bound, reg=r, bound=bound, h_X=h_x, h_Y=h_y, X=x, Y=y)


def h3(g: Graph, fld: FieldTag) -> Outcome:
    _need_edges(g)
    _need_no_isolated(g)
    ups, beta = upper_vertexwise(g), upper_independent_vertexwise(g)
    return _verdict(ups == beta, Upsilon=ups, beta_vw=beta)


def h4(g: Graph, fld: FieldTag) -> Outcome:
    _need_edges(g)
    if not g.is_connected():
        raise Skip("G is connected")
    for k in range(1, (g.n - 1) // 3 + 1):
        if has_induced_cycle(g, 3 * k + 1):
            raise Skip(f"G has no induced C_{3 * k + 1}")
    if not is_projectively_prime(g, fld):
        raise Skip("G is projectively prime")
    pd = pd_cached(g, fld)
    gamma = domination_number(g)
    return _verdict(pd <= g.n - gamma, pd=pd, gamma=gamma, n=g.n)


HUNTS: dict[str, Statement] = {s.id: s for s in [
    Statement("H1", "prime Ind(G): reg(B(Ind(G))) = reg(G) + 1", "graph", True, h1),
    Statement("H2", "reg(B) <= max{|X| - h_Y(B), |Y| - h_X(B)}", "graph", True, h2),
    Statement("H3", "Upsilon(G) = beta(G)", "graph", False, h3),
    Statement("H4", "C_{3k+1}-free projectively prime G: pd(G) <= |G| - gamma(G)", "graph", True, h4),
]}


# --- instance adapters ---------------------------------------------------------------------

def graph_instances(items: Iterator[tuple[str, Graph]], kind: str) -> Iterator[Instance]:
    """Turn corpus graphs into instances of the requested kind."""
    for label, g in items:
        g6 = to_graph6(g)
        if kind == "graph":
            yield Instance("graph", label, g)
        elif kind == "complex":
            yield Instance("complex", f"{label}:Ind", independence_complex(g), {"graph6": g6, "derived": "Ind"})
            yield Instance("complex", f"{label}:Dom", dominance_complex(g), {"graph6": g6, "derived": "Dom"})
        elif kind == "clutter":
            if g.m:
                yield Instance("clutter", f"{label}:E", Clutter.from_graph(g), {"graph6": g6, "derived": "E"})
            if g.n > 1 and not g.isolated_vertices():
                yield Instance("clutter", f"{label}:N", closed_neighbourhood_clutter(g),
                               {"graph6": g6, "derived": "N"})
        else:
            raise ValueError(f"unknown instance kind {kind!r}")


def facet_complex(h: Clutter) -> Complex:
    """Complex whose facets are the edges of h, on the vertices those edges cover."""
    cover = 0
    for e in h.edges:
        cover |= e
    keep = list(bits(cover))
    pos = {v: i for i, v in enumerate(keep)}
    return Complex(len(keep), tuple(mask_of(pos[v] for v in bits(e)) for e in h.edges))


def random_instances(count: int, seed: int, kind: str, max_ground: int = 6) -> Iterator[Instance]:
    """Seeded random clutters H on 2..max_ground vertices, read as Ind(H) and Fac(H) or as H itself."""
    rng = random.Random(seed)
    for k in range(count):
        h = random_clutter(rng, rng.randint(2, max_ground))
        origin = {"seed": seed, "index": k, "clutter": dump_sets(h.ground, list(h.edges))}
        if kind == "complex":
            yield Instance("complex", f"random#{k}:Ind", independence_complex(h), {**origin, "derived": "Ind"})
            yield Instance("complex", f"random#{k}:Fac", facet_complex(h), {**origin, "derived": "Fac"})
        elif kind == "clutter":
            yield Instance("clutter", f"random#{k}", h, origin)


def evaluate(stmt: Statement, inst: Instance, fld: FieldTag) -> tuple[str, dict]:
    """(status, detail) with Skip mapped to "skipped"; budget overruns propagate."""
    if inst.kind != stmt.kind:
        raise ValueError(f"{stmt.id} takes {stmt.kind} instances, got {inst.kind}")
    try:
        out = stmt.run(inst.payload, fld)
    except Skip as exc:
        return "skipped", {"precondition": str(exc)}
    return out.status, out.detail


def alpha_square_route(g: Graph) -> tuple[int, int]:
    """(τ by definition, α((G°)²)) for reporting the two routes side by side."""
    return independence_domination_by_definition(g), independence_domination_via_square(g)


def square_matching_identity(g: Graph) -> tuple[int, int, int]:
    """(γ′(S(G)), α(G²), |G|); the first two sum to the third for every graph."""
    return edge_domination(_sub_graph(g)), independence_number(square(g)), g.n

