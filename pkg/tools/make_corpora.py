"""Regenerate the graph6 corpora shipped in src/pdreg/data.

graphs7.g6      every graph on 1..7 vertices up to isomorphism (networkx atlas)
bipartite10.g6  every connected bipartite graph on 1..10 vertices up to isomorphism

The bipartite list is grown one vertex at a time: a connected bipartite graph
always has a vertex whose removal keeps it connected, so every class on n
vertices arises from a class on n-1 vertices by adding a vertex joined to a
nonempty subset of one colour class.
"""

from __future__ import annotations

import argparse
from pathlib import Path

import networkx as nx

from pdreg.formats import to_graph6
from pdreg.graphs import Graph, bits, canonical_form

EXPECTED_BIPARTITE = [1, 1, 1, 3, 5, 17, 44, 182, 730, 4032]


def atlas_graphs() -> list[Graph]:
    out = []
    for h in nx.graph_atlas_g():
        if 1 <= h.number_of_nodes() <= 7:
            out.append(Graph(h.number_of_nodes(), frozenset(h.edges())))
    return out


def connected_bipartite(max_n: int) -> list[list[Graph]]:
    levels = [[Graph(1)]]
    for n in range(2, max_n + 1):
        seen: dict[tuple, Graph] = {}
        for g in levels[-1]:
            colour = g.two_coloring()
            assert colour is not None
            for side in (0, 1):
                part = [v for v in range(g.n) if colour[v] == side]
                for sub in range(1, 1 << len(part)):
                    nbrs = [part[i] for i in bits(sub)]
                    h = Graph(n, g.edges | {(v, n - 1) for v in nbrs})
                    key = canonical_form(h)
                    if key not in seen:
                        seen[key] = Graph.from_adjacency(key[2])
        levels.append(sorted(seen.values(), key=lambda h: (h.m, to_graph6(h))))
    return levels


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path(__file__).resolve().parents[1] / "src" / "pdreg" / "data")
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    atlas = atlas_graphs()
    (args.out / "graphs7.g6").write_text("".join(to_graph6(g) + "\n" for g in atlas))

    levels = connected_bipartite(10)
    counts = [len(level) for level in levels]
    if counts != EXPECTED_BIPARTITE:
        raise SystemExit(f"bipartite class counts {counts} differ from {EXPECTED_BIPARTITE}")
    lines = [to_graph6(g) + "\n" for level in levels for g in level]
    (args.out / "bipartite10.g6").write_text("".join(lines))
    print(f"graphs7: {len(atlas)} graphs; bipartite10: {sum(counts)} graphs {counts}")


if __name__ == "__main__":
    main()
