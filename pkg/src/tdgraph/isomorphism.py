"""Graph isomorphism by colour refinement and individualisation backtracking.

Both graphs are refined together on their disjoint union so colour names
are comparable across sides.  Loops are part of the initial colour, so
looped vertices only ever map to looped vertices.
"""

from __future__ import annotations

from typing import Sequence

from .errors import CapExceeded
from .graph import Graph, iter_bits

ISO_CAP = 4096


def check_isomorphism(g: Graph, h: Graph, mapping: Sequence[int]) -> bool:
    """True iff ``mapping[v]`` is a bijection V(G) -> V(H) preserving edges and loops."""
    if g.vertex_count != h.vertex_count or len(mapping) != g.vertex_count:
        return False
    if sorted(mapping) != list(range(h.vertex_count)):
        return False
    if g.edge_count != h.edge_count:
        return False
    for v in range(g.vertex_count):
        if (v in g.loops) != (mapping[v] in h.loops):
            return False
        image = 0
        for w in iter_bits(g.rows[v]):
            image |= 1 << mapping[w]
        if image != h.rows[mapping[v]]:
            return False
    return True


def _refine(colours: list[int], nbrs: list[list[int]]) -> list[int]:
    count = len(set(colours))
    while True:
        sigs = [(colours[v], tuple(sorted(colours[w] for w in nbrs[v]))) for v in range(len(colours))]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colours = [rank[s] for s in sigs]
        new_count = len(rank)
        if new_count == count:
            return colours
        count = new_count


def _balanced(colours: list[int], split: int) -> bool:
    left: dict[int, int] = {}
    for c in colours[:split]:
        left[c] = left.get(c, 0) + 1
    right: dict[int, int] = {}
    for c in colours[split:]:
        right[c] = right.get(c, 0) + 1
    return left == right


def is_isomorphic(g: Graph, h: Graph, cap: int = ISO_CAP) -> tuple[bool, list[int] | None]:
    """Exact isomorphism test; returns ``(True, mapping)`` or ``(False, None)``."""
    if max(g.vertex_count, h.vertex_count) > cap:
        raise CapExceeded("isomorphism test", max(g.vertex_count, h.vertex_count), cap)
    if (g.vertex_count, g.edge_count, len(g.loops)) != (h.vertex_count, h.edge_count, len(h.loops)):
        return False, None
    n = g.vertex_count
    nbrs = [list(iter_bits(row)) for row in g.rows]
    nbrs += [[w + n for w in iter_bits(row)] for row in h.rows]
    loops = [v in g.loops for v in range(n)] + [v in h.loops for v in range(n)]
    start = [int(flag) for flag in loops]
    colours = _refine(start, nbrs)
    if not _balanced(colours, n):
        return False, None
    mapping = _search(colours, nbrs, n)
    if mapping is None:
        return False, None
    assert check_isomorphism(g, h, mapping), "isomorphism witness failed verification"
    return True, mapping


def _search(colours: list[int], nbrs: list[list[int]], n: int) -> list[int] | None:
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(colours[v], []).append(v)
    target = None
    for c in sorted(cells, key=lambda c: (len(cells[c]), c)):
        if len(cells[c]) > 1:
            target = c
            break
    if target is None:
        by_colour = {colours[w]: w - n for w in range(n, 2 * n)}
        mapping = [by_colour[colours[v]] for v in range(n)]
        # a discrete equitable colouring still gets checked edge by edge
        for v in range(n):
            if sorted(mapping[w] for w in nbrs[v]) != sorted(w - n for w in nbrs[mapping[v] + n]):
                return None
        return mapping
    v = cells[target][0]
    fresh = max(colours) + 1
    for w in range(n, 2 * n):
        if colours[w] != target:
            continue
        trial = list(colours)
        trial[v] = fresh
        trial[w] = fresh
        trial = _refine(trial, nbrs)
        if not _balanced(trial, n):
            continue
        found = _search(trial, nbrs, n)
        if found is not None:
            return found
    return None
