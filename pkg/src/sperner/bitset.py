"""Bitmask utilities shared by the hypergraph and graph modules.

Vertex sets are stored as Python ints (bit v set iff vertex position v is
in the set). All enumeration orders are fixed so that every caller is
deterministic.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of ``mask`` in ascending order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def mask_of(positions: Iterable[int]) -> int:
    m = 0
    for p in positions:
        m |= 1 << p
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def submasks(mask: int) -> Iterator[int]:
    """Yield all submasks of ``mask``, descending, ending with 0."""
    s = mask
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & mask


def minimal_masks(masks: Iterable[int]) -> tuple[int, ...]:
    """Inclusion-minimal members of a family of masks (deduplicated, sorted)."""
    pool = sorted(set(masks), key=lambda m: (popcount(m), m))
    keep: list[int] = []
    for m in pool:
        if not any(k & m == k for k in keep):
            keep.append(m)
    return tuple(sorted(keep))


def is_antichain(masks: Iterable[int]) -> bool:
    ms = list(masks)
    for i, a in enumerate(ms):
        for b in ms[i + 1 :]:
            inter = a & b
            if inter == a or inter == b:
                return False
    return True


def maximal_cliques(adj: list[int], n: int) -> list[int]:
    """All maximal cliques of the graph given by adjacency masks.

    Bron-Kerbosch with pivoting. For ``n == 0`` the single maximal clique
    is the empty set. Result is sorted by (size, mask).
    """
    out: list[int] = []
    full = (1 << n) - 1

    def bk(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(r)
            return
        # pivot: vertex of p|x maximizing |p & adj[u]|
        pivot = -1
        best = -1
        pu = p | x
        while pu:
            b = pu & -pu
            u = b.bit_length() - 1
            pu ^= b
            c = popcount(p & adj[u])
            if c > best:
                best = c
                pivot = u
        cand = p & ~adj[pivot]
        while cand:
            b = cand & -cand
            v = b.bit_length() - 1
            cand ^= b
            bk(r | b, p & adj[v], x & adj[v])
            p ^= b
            x |= b

    bk(0, full, 0)
    out.sort(key=lambda m: (popcount(m), m))
    return out


def connected_components(adj: list[int], vertices: int) -> list[int]:
    """Connected components (as masks) of the subgraph induced by ``vertices``."""
    comps = []
    rest = vertices
    while rest:
        b = rest & -rest
        comp = b
        frontier = b
        while frontier:
            grow = 0
            f = frontier
            while f:
                vb = f & -f
                v = vb.bit_length() - 1
                f ^= vb
                grow |= adj[v] & vertices & ~comp
            comp |= grow
            frontier = grow
        comps.append(comp)
        rest &= ~comp
    return comps


def is_connected(adj: list[int], vertices: int) -> bool:
    """Whether the induced subgraph on ``vertices`` is connected (<=1 vertex: yes)."""
    if vertices == 0:
        return True
    return len(connected_components(adj, vertices)) == 1
