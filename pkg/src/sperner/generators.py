"""Seeded random instance generators and exhaustive small-case enumerators.

Randomness comes from ``random.Random`` (Mersenne Twister), which is
stable across platforms, so every generated instance is reproducible from
its seed. Generators used by the verification sweeps:

* random 1-Sperner hypergraphs grown by random gluing trees, resampling
  any gluing whose result fails the 1-Sperner check;
* in-class split graphs / bigraphs / cobigraphs obtained from those
  hypergraphs through the incidence constructions, with rejection on the
  class predicates where membership is not automatic;
* exhaustive enumerators: all labeled graphs on n vertices, all Sperner
  families (antichains) over n vertices, all hyperedge families of bounded
  size, all split/bipartite neighborhood structures (complete up to
  isomorphism), and all 1-Sperner hypergraphs with |V| + |E| bounded.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterator

from .bitset import bits
from .graphs import (Graph, LabeledBigraph, LabeledSplitGraph, bigraph_of,
                     edge_clique_split_of, find_induced, pattern,
                     vertex_clique_split_of)
from .hypergraph import Hypergraph, glue, is_one_sperner


def random_one_sperner(n: int, rng: random.Random, empty_edge_prob: float = 0.6,
                       max_retries: int = 200) -> Hypergraph:
    """A random 1-Sperner hypergraph on vertex ids 0..n-1.

    Grown as a random gluing tree: a hypergraph on n >= 1 vertices is the
    gluing of random left/right parts whose sizes sum to n - 1. Gluings
    that fail the 1-Sperner check (the left part having its full vertex
    set as a hyperedge while the right part has the empty hyperedge) are
    resampled. Zero-vertex leaves carry the empty hyperedge with
    probability ``empty_edge_prob``.
    """

    def gen(lo: int, hi: int) -> Hypergraph:
        nv = hi - lo
        if nv == 0:
            if rng.random() < empty_edge_prob:
                return Hypergraph([], [set()])
            return Hypergraph([], [])
        for _ in range(max_retries):
            n1 = rng.randint(0, nv - 1)
            z = lo + n1
            h1 = gen(lo, z)
            h2 = gen(z + 1, hi)
            h = glue(h1, h2, z)
            if is_one_sperner(h):
                return h
        raise RuntimeError("failed to grow a 1-Sperner gluing")

    return gen(0, n)


def random_graph(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def random_split_h_free(target_n: int, rng: random.Random,
                        max_retries: int = 400) -> LabeledSplitGraph:
    """A random H-free clique-Sperner split graph with at most target_n vertices.

    Edge-clique split graphs of 1-Sperner hypergraphs are exactly this
    class, so no rejection on the class predicates is needed; only the
    size |V| + |E| is controlled by retrying.
    """
    for _ in range(max_retries):
        nv = rng.randint(0, max(0, target_n - 1))
        h = random_one_sperner(nv, rng)
        if 1 <= h.n + h.m <= target_n:
            return edge_clique_split_of(h)
    raise RuntimeError("could not hit the size budget")


def random_split_hbar_free(target_n: int, rng: random.Random) -> LabeledSplitGraph:
    """A random co-H-free independent-Sperner split graph (vertex-clique route)."""
    for _ in range(400):
        nv = rng.randint(0, max(0, target_n - 1))
        h = random_one_sperner(nv, rng)
        if 1 <= h.n + h.m <= target_n:
            return vertex_clique_split_of(h)
    raise RuntimeError("could not hit the size budget")


def random_bigraph_2p3_free(target_n: int, rng: random.Random,
                            max_retries: int = 4000) -> LabeledBigraph:
    """A random 2P3-free right-Sperner bigraph.

    Bigraphs of 1-Sperner hypergraphs are right-Sperner and contain no 2P3
    with middle vertices on the hyperedge side, but can contain one with
    middle vertices on the vertex side; those are rejected.
    """
    two_p3 = pattern("2P3")
    for _ in range(max_retries):
        nv = rng.randint(0, max(0, target_n - 1))
        h = random_one_sperner(nv, rng)
        if not 1 <= h.n + h.m <= target_n:
            continue
        lb = bigraph_of(h)
        if find_induced(lb.g, two_p3) is None:
            return lb
    raise RuntimeError("rejection sampling failed for 2P3-free bigraphs")


def random_cobigraph(target_n: int, rng: random.Random) -> Graph:
    """A random co-2P3-free cobipartite graph whose complement is right-Sperner."""
    lb = random_bigraph_2p3_free(target_n, rng)
    return lb.g.complement()


# ---------------------------------------------------------------------------
# Exhaustive enumerators
# ---------------------------------------------------------------------------

def labeled_graphs(n: int) -> Iterator[Graph]:
    """All 2^C(n,2) labeled graphs on n vertices."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for picks in range(1 << len(pairs)):
        yield Graph(n, [pairs[i] for i in range(len(pairs)) if picks >> i & 1])


def antichains(n: int) -> Iterator[tuple[int, ...]]:
    """All Sperner families over n vertices, as tuples of hyperedge masks.

    Includes the empty family and the family {{}}. DFS over subset masks
    in increasing order with precomputed incomparability bitmaps.
    """
    N = 1 << n
    incomp = [0] * N
    for i in range(N):
        m = 0
        for j in range(i + 1, N):
            if (i & j) != i and (i & j) != j:
                m |= 1 << j
        incomp[i] = m
    stack: list[tuple[int, tuple[int, ...]]] = [(( 1 << N) - 1, ())]
    while stack:
        allowed, chosen = stack.pop()
        yield chosen
        a = allowed
        while a:
            b = a & -a
            i = b.bit_length() - 1
            a ^= b
            stack.append((allowed & incomp[i] & -(b << 1), chosen + (i,)))


def hyperedge_families(n: int, max_m: int) -> Iterator[tuple[int, ...]]:
    """All families of at most max_m distinct hyperedge masks over n vertices."""
    for m in range(max_m + 1):
        yield from itertools.combinations(range(1 << n), m)


def one_sperner_hypergraphs(max_total: int) -> Iterator[Hypergraph]:
    """All 1-Sperner hypergraphs with |V| + |E| <= max_total.

    Every H-free clique-Sperner split graph on at most max_total vertices
    is the edge-clique split graph of exactly one of these, so iterating
    them covers that graph class (and, after rejection, the bigraph and
    cobigraph classes) exhaustively up to isomorphism.
    """
    for n in range(max_total + 1):
        for masks in hyperedge_families(n, max_total - n):
            h = Hypergraph.from_masks(range(n), masks)
            if is_one_sperner(h):
                yield h


def split_graph_structures(n: int) -> Iterator[LabeledSplitGraph]:
    """Split graphs on n vertices via clique-side neighborhood multisets.

    I = {0..i-1}, K = {i..n-1}; every split graph on n vertices is
    isomorphic to at least one emitted structure. Exact duplicates (same
    labeled graph) are skipped.
    """
    seen = set()
    for k in range(n + 1):
        i = n - k
        kverts = list(range(i, n))
        for hoods in itertools.combinations_with_replacement(range(1 << i), k):
            adj = [0] * n
            for kv in kverts:
                for kw in kverts:
                    if kv != kw:
                        adj[kv] |= 1 << kw
            for kv, hood in zip(kverts, hoods):
                adj[kv] |= hood
                for v in bits(hood):
                    adj[v] |= 1 << kv
            key = tuple(adj)
            if key in seen:
                continue
            seen.add(key)
            yield LabeledSplitGraph(Graph.from_adj(adj),
                                    frozenset(kverts), frozenset(range(i)))


def bigraph_structures(n: int) -> Iterator[LabeledBigraph]:
    """Bipartite graphs on n vertices via B-side neighborhood multisets."""
    seen = set()
    for b in range(n + 1):
        a = n - b
        bverts = list(range(a, n))
        for hoods in itertools.combinations_with_replacement(range(1 << a), b):
            adj = [0] * n
            for bv, hood in zip(bverts, hoods):
                adj[bv] |= hood
                for v in bits(hood):
                    adj[v] |= 1 << bv
            key = tuple(adj)
            if key in seen:
                continue
            seen.add(key)
            yield LabeledBigraph(Graph.from_adj(adj),
                                 frozenset(range(a)), frozenset(bverts))
