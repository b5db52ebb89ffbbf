"""Cross-module invariants: the gluing exception, co-occurrence
thresholdness, and the class-coincidence searches."""

import random

from sperner.generators import random_one_sperner
from sperner.graphs import co_occurrence
from sperner.hypergraph import (Hypergraph, glue, is_one_sperner, split_at,
                                transversal)
from sperner.recognition import is_threshold_graph
from sperner.threshold import is_k_asummable, is_threshold_hypergraph


def all_one_sperner(max_n):
    for n in range(max_n + 1):
        for picks in range(1 << (1 << n)):
            masks = tuple(m for m in range(1 << n) if picks >> m & 1)
            h = Hypergraph.from_masks(range(n), masks)
            if is_one_sperner(h):
                yield h


def test_gluing_exception_is_full_left_set_with_empty_right_edge():
    """Gluing two 1-Sperner hypergraphs fails to be 1-Sperner exactly when
    the left part has its whole vertex set as a hyperedge and the right
    part has the empty hyperedge (then {z} + V1 strictly contains V1).

    Frozen from the exhaustive scan over all pairs with at most four
    vertices each: 26244 gluings, 25 failures, all of this shape.
    """
    pool = list(all_one_sperner(4))
    assert len(pool) == 162
    failures = 0
    for h1 in pool:
        v1_full = frozenset(h1.vertices) in h1.edges
        for h2 in pool:
            off = h1.n
            h2r = Hypergraph([v + off for v in h2.vertices],
                             [{v + off for v in e} for e in h2.edges])
            z = h1.n + h2.n
            g = glue(h1, h2r, z)
            expect_bad = v1_full and frozenset() in h2.edges
            assert (not is_one_sperner(g)) == expect_bad, (h1, h2)
            failures += expect_bad
    assert failures == 25


def test_split_of_one_sperner_gluing_recomposes_bit_exactly():
    rng = random.Random(311)
    for _ in range(120):
        h = random_one_sperner(rng.randint(1, 12), rng)
        z = rng.choice(h.vertices)
        from sperner.hypergraph import is_z_decomposable
        if not is_z_decomposable(h, z):
            continue
        h1, h2 = split_at(h, z)
        assert glue(h1, h2, z) == h


def test_co_occurrence_of_one_sperner_is_threshold():
    """Forward direction of the co-occurrence characterization: the
    co-occurrence graph of a 1-Sperner hypergraph is a threshold graph."""
    rng = random.Random(313)
    for _ in range(150):
        h = random_one_sperner(rng.randint(0, 8), rng)
        assert is_threshold_graph(co_occurrence(h))
    for h in all_one_sperner(4):
        assert is_threshold_graph(co_occurrence(h))


def test_no_two_asummable_non_threshold_hypergraph_up_to_four_vertices():
    """Exhaustive search outcome: 2-asummability and thresholdness coincide
    on every hyperedge family with at most four vertices. (Known separating
    examples are larger; none is fabricated here.)"""
    for n in range(5):
        for picks in range(1 << (1 << n)):
            masks = tuple(m for m in range(1 << n) if picks >> m & 1)
            h = Hypergraph.from_masks(range(n), masks)
            if is_k_asummable(h, 2):
                assert is_threshold_hypergraph(h), h


def test_transversal_of_one_sperner_stays_threshold():
    rng = random.Random(317)
    for _ in range(60):
        h = random_one_sperner(rng.randint(0, 7), rng)
        ht = transversal(h)
        assert is_threshold_hypergraph(h) and is_threshold_hypergraph(ht)
