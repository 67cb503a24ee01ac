"""Exact matrix rank over GF(2) and over the integers (hence the rationals)."""

from __future__ import annotations

import heapq
from math import gcd
from typing import Iterable


def gf2_rank(rows: Iterable[int]) -> int:
    """Rank of a GF(2) matrix whose rows are packed into ints."""
    basis: dict[int, int] = {}
    for r in rows:
        while r:
            top = r.bit_length() - 1
            b = basis.get(top)
            if b is None:
                basis[top] = r
                break
            r ^= b
    return len(basis)


def gf2_transpose(rows: list[int], ncols: int) -> list[int]:
    cols = [0] * ncols
    for i, r in enumerate(rows):
        while r:
            low = r & -r
            cols[low.bit_length() - 1] |= 1 << i
            r ^= low
    return cols


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    return {k: v // g for k, v in row.items()}


def int_rank(rows: Iterable[dict[int, int]]) -> int:
    """Rank over Q of a sparse integer matrix (rows map column -> entry).

    Fraction-free elimination: a row r with entry q in the pivot column is
    replaced by p*r - q*pivot_row, then divided by its content.  Pivots come
    from the shortest live row, preferring a unit entry in the sparsest
    column, so boundary matrices keep small entries and little fill.  A
    column index limits each step to the rows that actually meet the pivot
    column.
    """
    work: dict[int, dict[int, int]] = {}
    cols: dict[int, set[int]] = {}
    heap: list[tuple[int, int]] = []
    for i, r in enumerate(rows):
        if not r:
            continue
        row = _primitive(dict(r))
        work[i] = row
        for c in row:
            cols.setdefault(c, set()).add(i)
        heap.append((len(row), i))
    heapq.heapify(heap)
    rank = 0
    while heap:
        size, i = heapq.heappop(heap)
        piv = work.get(i)
        if piv is None or len(piv) != size:
            continue  # stale heap entry
        del work[i]
        for c in piv:
            cols[c].discard(i)
        best_c = min(piv, key=lambda c: (abs(piv[c]) != 1, len(cols[c]), abs(piv[c]), c))
        p = piv[best_c]
        rank += 1
        for j in sorted(cols[best_c]):
            r = work[j]
            q = r[best_c]
            combo: dict[int, int] = {k: p * v for k, v in r.items()} if p != 1 else dict(r)
            for k, v in piv.items():
                val = combo.get(k, 0) - q * v
                if val:
                    combo[k] = val
                else:
                    combo.pop(k, None)
            for k in r:
                if k not in combo:
                    cols[k].discard(j)
            if not combo:
                del work[j]
                continue
            combo = _primitive(combo)
            for k in combo:
                if k not in r:
                    cols.setdefault(k, set()).add(j)
            work[j] = combo
            heapq.heappush(heap, (len(combo), j))
    return rank
