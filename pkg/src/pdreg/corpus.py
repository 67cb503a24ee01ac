"""Corpus descriptors: where graphs come from and which of them to keep.

A descriptor is ``source[, filter]*``.  Sources:

``path/to/file.g6``      one graph6 record per line
``path/to/dir``          every file in the directory (sorted) holds one edge list
``labeled:n<=K``         all labeled graphs on 1..K vertices (K at most 6); ``≤`` also accepted
``builtin:NAME``         a packaged corpus (see ``BUILTINS``)
``g6:<record>``          a single graph6 record

Filters: ``connected``, ``no-isolated``, ``chordal``, ``bipartite``, ``n>=K``, ``n<=K``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from itertools import combinations
from pathlib import Path
from typing import Callable, Iterator

from .formats import FormatError, parse_edge_list, parse_graph6, to_graph6
from .graphs import Graph, bits, is_chordal

BUILTINS = {
    "graphs7": "graphs7.g6",
    "bipartite10": "bipartite10.g6",
}

LABELED_MAX = 6


class CorpusError(ValueError):
    pass


@dataclass(frozen=True)
class CorpusItem:
    graph: Graph
    origin: str

    @property
    def g6(self) -> str:
        return to_graph6(self.graph)


@dataclass(frozen=True)
class BadRecord:
    origin: str
    message: str


def _bound(text: str) -> tuple[str, int] | None:
    m = re.fullmatch(r"n\s*(<=|≤|>=|≥|<|>)\s*(\d+)", text.strip())
    if not m:
        return None
    op = {"≤": "<=", "≥": ">="}.get(m.group(1), m.group(1))
    k = int(m.group(2))
    if op == "<":
        op, k = "<=", k - 1
    elif op == ">":
        op, k = ">=", k + 1
    return op, k


FILTERS: dict[str, Callable[[Graph], bool]] = {
    "connected": lambda g: g.n > 0 and g.is_connected(),
    "no-isolated": lambda g: not g.isolated_vertices(),
    "chordal": is_chordal,
    "bipartite": lambda g: g.is_bipartite(),
}


@dataclass(frozen=True)
class CorpusSpec:
    source: str
    filters: tuple[str, ...]
    max_n: int | None = None
    min_n: int | None = None

    @classmethod
    def parse(cls, text: str) -> CorpusSpec:
        pieces = [p.strip() for p in text.split(",")]
        if not pieces or not pieces[0]:
            raise CorpusError(f"empty corpus descriptor {text!r}")
        source, rest = pieces[0], pieces[1:]
        filters: list[str] = []
        lo, hi = None, None
        for p in rest:
            b = _bound(p)
            if b is not None:
                op, k = b
                if op == "<=":
                    hi = k if hi is None else min(hi, k)
                else:
                    lo = k if lo is None else max(lo, k)
            elif p in FILTERS:
                filters.append(p)
            else:
                raise CorpusError(f"unknown corpus filter {p!r}")
        return cls(source, tuple(filters), hi, lo)

    def accepts(self, g: Graph) -> bool:
        if self.max_n is not None and g.n > self.max_n:
            return False
        if self.min_n is not None and g.n < self.min_n:
            return False
        return all(FILTERS[f](g) for f in self.filters)


def labeled_graphs(max_n: int) -> Iterator[Graph]:
    """All labeled graphs on n = 1..max_n vertices; edge subsets in increasing bitmask order."""
    if max_n > LABELED_MAX:
        raise CorpusError(f"labeled enumeration is limited to n <= {LABELED_MAX}")
    for n in range(1, max_n + 1):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            yield Graph(n, frozenset(pairs[k] for k in bits(mask)))


def _graph6_lines(lines: list[str], origin: str, errors: list[BadRecord]) -> Iterator[CorpusItem]:
    for lineno, line in enumerate(lines, start=1):
        text = line.strip()
        if not text:
            continue
        try:
            g = parse_graph6(text)
        except FormatError as exc:
            errors.append(BadRecord(f"{origin}:{lineno}", str(exc)))
            continue
        yield CorpusItem(g, f"{origin}:{lineno}")


def _raw_items(spec: CorpusSpec, errors: list[BadRecord]) -> Iterator[CorpusItem]:
    src = spec.source
    if src.startswith("labeled:"):
        b = _bound(src[len("labeled:"):])
        if b is None or b[0] != "<=":
            raise CorpusError(f"labeled source needs the form labeled:n<=K, got {src!r}")
        k = b[1]
        if spec.max_n is not None:
            k = min(k, spec.max_n)
        for idx, g in enumerate(labeled_graphs(k)):
            yield CorpusItem(g, f"labeled#{idx}")
        return
    if src.startswith("builtin:"):
        name = src[len("builtin:"):]
        if name not in BUILTINS:
            raise CorpusError(f"unknown builtin corpus {name!r}; choose from {sorted(BUILTINS)}")
        text = resources.files("pdreg.data").joinpath(BUILTINS[name]).read_text()
        yield from _graph6_lines(text.splitlines(), src, errors)
        return
    if src.startswith("g6:"):
        yield from _graph6_lines([src[3:]], "g6", errors)
        return
    path = Path(src)
    try:
        if path.is_dir():
            for f in sorted(p for p in path.iterdir() if p.is_file()):
                try:
                    yield CorpusItem(parse_edge_list(f.read_text()), str(f))
                except FormatError as exc:
                    errors.append(BadRecord(str(f), str(exc)))
            return
        text = path.read_text()
    except OSError as exc:
        raise CorpusError(f"cannot read corpus {src!r}: {exc}") from None
    yield from _graph6_lines(text.splitlines(), src, errors)


def enumerate_corpus(descriptor: str | CorpusSpec, errors: list[BadRecord] | None = None) -> Iterator[CorpusItem]:
    """Stream the graphs of a corpus in a deterministic order.

    Malformed records are appended to ``errors`` (when given) and skipped.
    """
    spec = descriptor if isinstance(descriptor, CorpusSpec) else CorpusSpec.parse(descriptor)
    sink = errors if errors is not None else []
    for item in _raw_items(spec, sink):
        if spec.accepts(item.graph):
            yield item


def corpus_graphs(descriptor: str) -> list[Graph]:
    return [item.graph for item in enumerate_corpus(descriptor)]
