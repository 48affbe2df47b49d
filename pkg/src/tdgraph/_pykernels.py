"""Pure-Python kernels, used when the compiled extension is unavailable.

Bitsets are Python ints (bit ``v`` set means vertex ``v``).  The search order
of every routine matches ``_ckernels.pyx`` exactly so both backends return
identical witnesses.
"""

from __future__ import annotations

import numpy as np

NAME = "python"

_BLOCK = 256


def orthogonality_rows(coords: np.ndarray, add: np.ndarray, mul: np.ndarray) -> np.ndarray:
    """Packed rows of the relation ``u . v == 0`` over all pairs, diagonal included."""
    V, n = coords.shape
    words = (V + 63) >> 6
    out = np.zeros((V, words * 8), dtype=np.uint8)
    for start in range(0, V, _BLOCK):
        block = coords[start:start + _BLOCK]
        acc = np.zeros((len(block), V), dtype=np.int32)
        for i in range(n):
            acc = add[acc, mul[block[:, i][:, None], coords[:, i][None, :]]]
        packed = np.packbits(acc == 0, axis=1, bitorder="little")
        out[start:start + len(block), :packed.shape[1]] = packed
    return out.view(np.uint64)


def dominating_search(closed: list[int], initial: list[int]) -> tuple[list[int], int]:
    """Exact minimum dominating set by branch and bound.

    ``closed[v]`` is the closed neighbourhood of v.  ``initial`` is a known
    dominating set used as the starting incumbent.  Returns the best set found
    (in choice order) and the number of search nodes.
    """
    V = len(closed)
    best = list(initial)
    chosen: list[int] = []
    nodes = 0

    def search(uncovered: int, excluded: int) -> None:
        nonlocal best, nodes
        nodes += 1
        d = len(chosen)
        need = uncovered.bit_count()
        if need == 0:
            if d < len(best):
                best = list(chosen)
            return
        if d + 1 >= len(best):
            return
        gains = [0 if (excluded >> v) & 1 else (closed[v] & uncovered).bit_count() for v in range(V)]
        top = max(gains)
        hist = [0] * (top + 1)
        for g in gains:
            hist[g] += 1
        k = 0
        g = top
        while g > 0 and need > 0:
            if hist[g] * g >= need:
                k += -(-need // g)
                need = 0
            else:
                k += hist[g]
                need -= hist[g] * g
            g -= 1
        if need > 0 or d + k >= len(best):
            return
        allowed = ~excluded
        pick, pick_count = -1, V + 1
        rest = uncovered
        while rest:
            low = rest & -rest
            u = low.bit_length() - 1
            rest ^= low
            c = (closed[u] & allowed).bit_count()
            if c < pick_count:
                pick, pick_count = u, c
        if pick_count == 0:
            return
        opts = []
        rest = closed[pick] & allowed
        while rest:
            low = rest & -rest
            opts.append(low.bit_length() - 1)
            rest ^= low
        opts.sort(key=lambda w: (-gains[w], w))
        for w in opts:
            chosen.append(w)
            search(uncovered & ~closed[w], excluded)
            chosen.pop()
            excluded |= 1 << w
            if d + 1 >= len(best):
                return

    search((1 << V) - 1, 0)
    return best, nodes


def clique_search(adj: list[int], initial: list[int]) -> tuple[list[int], int]:
    """Maximum clique by branch and bound with a greedy colouring bound.

    ``adj`` is indexed by position (the caller relabels vertices into the
    search order).  Returns positions of the best clique and the node count.
    """
    m = len(adj)
    best = list(initial)
    chosen: list[int] = []
    nodes = 0

    def expand(P: int) -> None:
        nonlocal best, nodes
        nodes += 1
        order: list[int] = []
        colour: list[int] = []
        Q = P
        k = 0
        while Q:
            k += 1
            Qk = Q
            while Qk:
                low = Qk & -Qk
                v = low.bit_length() - 1
                Qk &= ~adj[v] & ~low
                Q &= ~low
                order.append(v)
                colour.append(k)
        d = len(chosen)
        for i in range(len(order) - 1, -1, -1):
            if d + colour[i] <= len(best):
                return
            v = order[i]
            chosen.append(v)
            newP = P & adj[v]
            if newP == 0:
                if d + 1 > len(best):
                    best = list(chosen)
            else:
                expand(newP)
            chosen.pop()
            P &= ~(1 << v)

    if m:
        expand((1 << m) - 1)
    return best, nodes
