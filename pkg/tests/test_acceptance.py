"""Acceptance criteria, each run at its stated scale and time limit.

Every test records one PASS/FAIL line (see verdicts.py); the lines are
repeated in the terminal summary.  Where a stated criterion is false on
its own corpus the literal form is kept as a strict xfail and the statement
that does hold is asserted next to it.
"""

from __future__ import annotations

import time

import pytest

import oracles
from pdreg.complexes import Complex, alexander_dual, closed_neighbourhood_clutter, dominance_complex, levi_graph
from pdreg.corpus import corpus_graphs
from pdreg.domination import (
    domination_number,
    edge_domination,
    edgewise_domination,
    independence_domination,
    independent_domination,
    induced_matching,
    independence_number,
    cochordal_cover,
    upper_domination,
    upper_independent_vertexwise,
    upper_vertexwise,
)
from pdreg.graphs import build_family, square, subdivision
from pdreg.homology import BOTH_FIELDS, GF2, proj_dim, proj_dim_direct, reduced_homology, regularity
from pdreg.primes import gap_graph_G, gap_graph_H, pd_sandwich
from pdreg.runner import run

from test_homology import RP2_FACETS, snf_homology
from verdicts import record

CONNECTED_2_7 = corpus_graphs("builtin:graphs7, connected, n>=2")
ALL7 = corpus_graphs("builtin:graphs7")
CONNECTED5 = corpus_graphs("builtin:graphs7, connected, n<=5")

# criterion 9 has no time limit; the default 10 s per-instance budget is too
# tight for a few rational-field scans on 20-vertex B(Δ)
SLOW_INSTANCE_SECS = 300.0


def clean(rep) -> bool:
    c = rep.counts()
    return c["fails"] == 0 and c["exceeded"] == 0 and not rep.truncated


def summary(rep) -> str:
    c = rep.counts()
    return (f"{rep.id} on {rep.corpus or 'random'}: {rep.instances_tested} verdicts, holds={c['holds']} "
            f"fails={c['fails']} skipped={c['skipped']} exceeded={c['exceeded']}")


# --- 1 ---------------------------------------------------------------------------------------

def test_criterion_01_small_sharpness_values():
    start = time.perf_counter()
    got = {f.value: (proj_dim(build_family("cycle", [4]), f), regularity(build_family("cycle", [8]), f))
           for f in BOTH_FIELDS}
    took = time.perf_counter() - start
    ok = all(v == (3, 3) for v in got.values()) and took < 1.0
    record("1", ok, f"pd(C4), reg(C8) per field = {got}", took)
    assert ok


# --- 2 ---------------------------------------------------------------------------------------

def _subdivided_paths() -> tuple[dict[int, tuple[int, int]], float]:
    start = time.perf_counter()
    out = {}
    for m in range(2, 7):
        sg = subdivision(build_family("path", [m])).graph
        regs = {regularity(sg, f) for f in BOTH_FIELDS}
        assert len(regs) == 1
        out[m] = (regs.pop(), induced_matching(sg))
    return out, time.perf_counter() - start


@pytest.mark.xfail(strict=True, reason="⌊(2m-1)/3⌋ is wrong at m = 3 and m = 6; the value is ⌊2m/3⌋")
def test_criterion_02_subdivided_paths_literal():
    got, took = _subdivided_paths()
    ok = all(got[m] == ((2 * m - 1) // 3,) * 2 for m in got) and took < 120
    record("2", ok, f"(reg, im) of S(P_m) = {got} against floor((2m-1)/3)", took)
    assert ok


def test_criterion_02_subdivided_paths_corrected():
    got, took = _subdivided_paths()
    ok = all(got[m] == ((2 * m) // 3,) * 2 == (m - domination_number(build_family("path", [m])),) * 2
             for m in got) and took < 120
    record("2 (corrected)", ok, f"(reg, im) of S(P_m) = {got} equals floor(2m/3) = m - gamma(P_m)", took)
    assert ok
    assert [got[m][0] for m in range(2, 7)] == [1, 2, 2, 3, 4]


# --- 3 ---------------------------------------------------------------------------------------

def test_criterion_03_complete_bipartite():
    start = time.perf_counter()
    bad = []
    for a in range(1, 8):
        for b in range(1, 9 - a):
            for f in BOTH_FIELDS:
                if proj_dim(build_family("complete-bipartite", [a, b]), f) != a + b - 1:
                    bad.append((a, b, f.value))
    took = time.perf_counter() - start
    record("3", not bad, f"pd(K_ab) = a+b-1 for 2 <= a+b <= 8, mismatches {bad}", took)
    assert not bad


# --- 4 ---------------------------------------------------------------------------------------

@pytest.mark.xfail(strict=True, reason="T9 fails on 37 graphs and T10 on 184 graphs of the corpus")
def test_criterion_04_literal():
    start = time.perf_counter()
    reps = [run(t, "builtin:graphs7, connected, n>=2", [GF2]) for t in ("T7", "T9", "T10")]
    hk_bad = sum(1 for g in CONNECTED_2_7
                 if edge_domination(subdivision(g).graph) + independence_number(square(g)) != g.n)
    took = time.perf_counter() - start
    ok = all(clean(r) for r in reps) and hk_bad == 0 and took < 900
    record("4", ok, "; ".join(summary(r) for r in reps) + f"; gamma'(S(G)) + alpha(G^2) = |G| misses {hk_bad}", took)
    assert ok


def test_criterion_04_corrected():
    start = time.perf_counter()
    t7 = run("T7", "builtin:graphs7, connected, n>=2", [GF2])
    hk = cc = ups = 0
    for g in CONNECTED_2_7:
        sg = subdivision(g).graph
        a2 = independence_number(square(g))
        hk += edge_domination(sg) + a2 != g.n
        cc += cochordal_cover(sg) != g.n - a2
        u, b = upper_vertexwise(sg), upper_independent_vertexwise(sg)
        ups += not (u == b >= g.n - edgewise_domination(g))
    took = time.perf_counter() - start
    ok = clean(t7) and hk == cc == ups == 0 and took < 900
    record("4 (corrected)", ok,
           f"{summary(t7)}; over {len(CONNECTED_2_7)} graphs: gamma'(S)+alpha(G^2)=|G| misses {hk}, "
           f"cochord(S) = |G| - alpha(G^2) misses {cc}, Upsilon(S) = beta(S) >= |G| - eps misses {ups}", took)
    assert ok


# --- 5 ---------------------------------------------------------------------------------------

def _tau_vs_square() -> tuple[int, int, float]:
    start = time.perf_counter()
    differ = below = 0
    for g in ALL7:
        if not g.m:
            continue
        tau = independence_domination(g)
        a2 = oracles.square_alpha(g) if g.n <= 5 else independence_number(square(g.without_isolated()))
        differ += tau != a2
        below += tau < a2
    return differ, below, time.perf_counter() - start


@pytest.mark.xfail(strict=True, reason="tau > alpha(G^2) on 39 graphs with n <= 7")
def test_criterion_05_literal():
    differ, _, took = _tau_vs_square()
    ok = differ == 0 and took < 300
    record("5", ok, f"tau = alpha(G^2) on graphs n <= 7: {differ} failures", took)
    assert ok


def test_criterion_05_corrected():
    differ, below, took = _tau_vs_square()
    ok = below == 0 and differ == 39 and took < 300
    record("5 (corrected)", ok, f"tau >= alpha(G^2) on graphs n <= 7: {below} failures ({differ} strict)", took)
    assert ok


# --- 6 ---------------------------------------------------------------------------------------

@pytest.mark.xfail(strict=True, reason="pd(Dom(C5)) = 3 > Gamma(C5) = 2")
def test_criterion_06_literal():
    start = time.perf_counter()
    rep = run("T5", "builtin:graphs7, connected, n<=5", BOTH_FIELDS)
    took = time.perf_counter() - start
    ok = clean(rep) and took < 1200
    record("6", ok, summary(rep), took)
    assert ok


def test_criterion_06_corrected():
    start = time.perf_counter()
    bad = []
    for g in CONNECTED5:
        big_gamma = upper_domination(g)
        ups = upper_vertexwise(levi_graph(closed_neighbourhood_clutter(g)).graph)
        d = dominance_complex(g)
        for f in BOTH_FIELDS:
            direct = proj_dim_direct(d, f)
            dual = regularity(alexander_dual(d), f, route="raw") + 1
            if not (direct == dual and big_gamma <= direct <= ups):
                bad.append((g.n, sorted(g.edges), f.value))
    took = time.perf_counter() - start
    ok = not bad and took < 1200
    record("6 (corrected)", ok, f"Gamma <= pd(Dom) <= Upsilon(L(N[G])) on {len(CONNECTED5)} graphs, "
           f"both fields and both pd routes: {len(bad)} failures", took)
    assert ok


# --- 7, 8, 10, 11: registry checks ---------------------------------------------------------------

@pytest.mark.parametrize("criterion,ids,corpus,limit", [
    ("7", ("T8", "T12"), "builtin:graphs7, connected, n<=6", 1800),
    ("8", ("T11",), "builtin:bipartite10", 1800),
    ("10", ("T14",), "builtin:graphs7, n<=6", None),
    ("11", ("T16",), "builtin:graphs7, connected, n<=6", None),
])
def test_registry_criteria(criterion, ids, corpus, limit):
    start = time.perf_counter()
    reps = [run(t, corpus, BOTH_FIELDS) for t in ids]
    took = time.perf_counter() - start
    ok = all(clean(r) for r in reps) and (limit is None or took < limit)
    record(criterion, ok, "; ".join(summary(r) for r in reps), took)
    assert ok


# --- 9 ---------------------------------------------------------------------------------------

def test_criterion_09_complex_statements():
    start = time.perf_counter()
    reps = [run(t, "builtin:graphs7, connected, n<=5", BOTH_FIELDS, random_count=500, seed=2024,
                timeout=SLOW_INSTANCE_SECS) for t in ("T1", "T2", "T17")]
    took = time.perf_counter() - start
    ok = all(clean(r) for r in reps) and all(r.random_instances == 500 for r in reps)
    record("9", ok, "; ".join(summary(r) for r in reps), took)
    assert ok


# --- 12 --------------------------------------------------------------------------------------

def test_criterion_12_gap_families():
    start = time.perf_counter()
    g = gap_graph_G(3, 1, 1).graph
    first = (domination_number(g), independent_domination(g), {proj_dim(g, f) for f in BOTH_FIELDS})
    h = gap_graph_H(4, 1)
    second = (h.graph.n, domination_number(h.graph), edgewise_domination(h.graph))
    sw = pd_sandwich(h)
    took = time.perf_counter() - start
    ok = first == (3, 4, {7}) and second == (26, 6, 3) and sw.lower == sw.upper == 21 == 7 * 3
    record("12", ok, f"G(3,1,1): (gamma, i, pd) = {first}; H(4,1): (|H|, gamma, eps) = {second}, "
           f"pd sandwich [{sw.lower}, {sw.upper}] by {sw.method}", took)
    assert ok


# --- 13 --------------------------------------------------------------------------------------

def test_criterion_13_field_sensitivity():
    start = time.perf_counter()
    rp2 = Complex.from_sets(6, RP2_FACETS)
    snf = snf_homology(RP2_FACETS)
    ours = {f.value: reduced_homology(rp2, f) for f in BOTH_FIELDS}
    regs = {f.value: regularity(rp2, f) for f in BOTH_FIELDS}
    faces = oracles.faces_of({frozenset(f) for f in RP2_FACETS})
    oracle_regs = {"gf2": oracles.regularity(faces, 6, True), "rational": oracles.regularity(faces, 6, False)}
    took = time.perf_counter() - start
    ok = (ours == snf and ours["gf2"] != ours["rational"] and regs == oracle_regs
          and regs["gf2"] > regs["rational"] and took < 10)
    record("13", ok, f"homology {ours} (SNF {snf}); reg {regs} (oracle {oracle_regs})", took)
    assert ok
    assert ours["gf2"] == {-1: 0, 0: 0, 1: 1, 2: 1} and ours["rational"] == {-1: 0, 0: 0, 1: 0, 2: 0}
    assert regs == {"gf2": 3, "rational": 2}


# --- 14 --------------------------------------------------------------------------------------

HUNT_CORPORA = {
    "H1": "builtin:graphs7, connected, n<=5",
    "H2": "builtin:bipartite10, n<=8",
    "H3": "labeled:n<=6",
    "H4": "builtin:graphs7, connected",
}


def test_criterion_14_hunts():
    start = time.perf_counter()
    outcomes = {}
    ok = True
    for ident, corpus in HUNT_CORPORA.items():
        rep = run(ident, corpus, BOTH_FIELDS, mode="hunt")
        data = rep.to_json()
        well_formed = (data["mode"] == "hunt" and data["instances_tested"] == sum(data["counts"].values())
                       and not rep.truncated and rep.counts()["exceeded"] == 0
                       and all(v.witness for v in rep.failures) and len(rep.failures) <= 1)
        ok &= well_formed
        outcomes[ident] = rep.failures[0].witness.get("graph6") if rep.failures else "none found"
    took = time.perf_counter() - start
    record("14", ok, f"hunt outcomes {outcomes}", took)
    assert ok
