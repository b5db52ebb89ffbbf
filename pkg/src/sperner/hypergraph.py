"""Hypergraphs, Sperner-type predicates, gluing, and recursive decomposition.

A hypergraph is a finite vertex set together with a family of distinct
hyperedges (subsets of the vertices; the empty hyperedge is allowed).
Hyperedges are stored as bitmasks over the sorted vertex sequence, so all
pairwise predicates reduce to word operations.

The central structural facts implemented here:

* a hypergraph is 1-Sperner iff every two distinct hyperedges e, f satisfy
  min(|e \\ f|, |f \\ e|) = 1;
* gluing two vertex-disjoint hypergraphs H1, H2 at a fresh vertex z yields
  the hypergraph with hyperedges {z} + e (e in H1) and V(H1) + e (e in H2);
* every 1-Sperner hypergraph with at least one vertex is a gluing of two
  1-Sperner hypergraphs, which yields a recursive decomposition tree whose
  recomposition reproduces the input bit-exactly.

Transversal (minimal hitting set) machinery and conformality testing live
here as well; both are exact and meant for desk-scale inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .bitset import bits, mask_of, maximal_cliques, popcount


class HypergraphError(ValueError):
    """Invalid hypergraph construction or operation argument."""


class NotOneSpernerError(HypergraphError):
    """Raised when an operation requires a 1-Sperner input.

    Carries a violating pair of hyperedges as frozensets of vertex ids.
    """

    def __init__(self, e: frozenset, f: frozenset):
        super().__init__(f"not 1-Sperner: hyperedges {sorted(e)} and {sorted(f)}")
        self.witness = (e, f)


class Hypergraph:
    """Immutable hypergraph with integer vertex ids.

    ``vertices`` is the sorted tuple of distinct vertex ids and
    ``edge_masks`` the sorted tuple of distinct hyperedge bitmasks (bit i
    refers to ``vertices[i]``). Duplicate hyperedges are rejected: the
    hyperedge family is a set.
    """

    __slots__ = ("vertices", "edge_masks", "_pos")

    def __init__(self, vertices: Iterable[int], edges: Iterable[Iterable[int]] = ()):
        vs = tuple(sorted(vertices))
        if len(set(vs)) != len(vs):
            raise HypergraphError("duplicate vertex ids")
        if any(v < 0 for v in vs):
            raise HypergraphError("vertex ids must be non-negative")
        pos = {v: i for i, v in enumerate(vs)}
        masks = []
        for e in edges:
            m = 0
            for v in e:
                if v not in pos:
                    raise HypergraphError(f"hyperedge vertex {v} not in vertex set")
                m |= 1 << pos[v]
            masks.append(m)
        if len(set(masks)) != len(masks):
            raise HypergraphError("duplicate hyperedges")
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edge_masks", tuple(sorted(masks)))
        object.__setattr__(self, "_pos", pos)

    @classmethod
    def from_masks(cls, vertices: Iterable[int], masks: Iterable[int]) -> "Hypergraph":
        h = cls.__new__(cls)
        vs = tuple(sorted(vertices))
        object.__setattr__(h, "vertices", vs)
        object.__setattr__(h, "edge_masks", tuple(sorted(set(masks))))
        object.__setattr__(h, "_pos", {v: i for i, v in enumerate(vs)})
        return h

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("Hypergraph is immutable")

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edge_masks)

    def position(self, v: int) -> int:
        try:
            return self._pos[v]
        except KeyError:
            raise HypergraphError(f"unknown vertex id {v}") from None

    def edge_set(self, mask: int) -> frozenset:
        return frozenset(self.vertices[i] for i in bits(mask))

    @property
    def edges(self) -> tuple[frozenset, ...]:
        return tuple(self.edge_set(m) for m in self.edge_masks)

    def mask_from_ids(self, ids: Iterable[int]) -> int:
        return mask_of(self.position(v) for v in ids)

    def incidence_matrix(self, row_order: Optional[list[int]] = None,
                         col_order: Optional[list[int]] = None) -> tuple[tuple[int, ...], ...]:
        """0/1 matrix, rows = hyperedges, cols = vertices.

        Defaults: rows in canonical (sorted mask) order, columns in sorted
        vertex order. Explicit orders are given as lists of row indices /
        vertex ids.
        """
        rows = row_order if row_order is not None else list(range(self.m))
        cols = col_order if col_order is not None else list(self.vertices)
        cps = [self.position(v) for v in cols]
        return tuple(
            tuple((self.edge_masks[r] >> p) & 1 for p in cps) for r in rows
        )

    def __eq__(self, other) -> bool:
        return (isinstance(other, Hypergraph)
                and self.vertices == other.vertices
                and self.edge_masks == other.edge_masks)

    def __hash__(self) -> int:
        return hash((self.vertices, self.edge_masks))

    def __repr__(self) -> str:
        es = [sorted(e) for e in self.edges]
        return f"Hypergraph({list(self.vertices)}, {es})"


# ---------------------------------------------------------------------------
# Sperner-type predicates
# ---------------------------------------------------------------------------

def one_sperner_violation(h: Hypergraph) -> Optional[tuple[frozenset, frozenset]]:
    """A pair of hyperedges with min set-difference size != 1, or None."""
    ms = h.edge_masks
    for i, a in enumerate(ms):
        for b in ms[i + 1:]:
            if min(popcount(a & ~b), popcount(b & ~a)) != 1:
                return (h.edge_set(a), h.edge_set(b))
    return None


def is_sperner(h: Hypergraph) -> bool:
    """No hyperedge contains another."""
    ms = h.edge_masks
    for i, a in enumerate(ms):
        for b in ms[i + 1:]:
            inter = a & b
            if inter == a or inter == b:
                return False
    return True


def is_dually_sperner(h: Hypergraph) -> bool:
    """Every two distinct hyperedges have min set-difference size <= 1."""
    ms = h.edge_masks
    for i, a in enumerate(ms):
        for b in ms[i + 1:]:
            if min(popcount(a & ~b), popcount(b & ~a)) > 1:
                return False
    return True


def is_k_sperner(h: Hypergraph, k: int) -> bool:
    """Every two distinct hyperedges e, f satisfy 1 <= min(|e\\f|, |f\\e|) <= k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    ms = h.edge_masks
    for i, a in enumerate(ms):
        for b in ms[i + 1:]:
            d = min(popcount(a & ~b), popcount(b & ~a))
            if d < 1 or d > k:
                return False
    return True


def is_one_sperner(h: Hypergraph) -> bool:
    """min(|e\\f|, |f\\e|) == 1 for every pair; equals Sperner + dually Sperner."""
    ms = h.edge_masks
    for i, a in enumerate(ms):
        for b in ms[i + 1:]:
            if min(popcount(a & ~b), popcount(b & ~a)) != 1:
                return False
    return True


# ---------------------------------------------------------------------------
# Gluing and decomposition
# ---------------------------------------------------------------------------

def glue(h1: Hypergraph, h2: Hypergraph, z: int) -> Hypergraph:
    """Gluing of two vertex-disjoint hypergraphs at a fresh vertex z.

    Vertex set V1 + V2 + {z}; hyperedges {z} + e for e in E1 and V1 + e for
    e in E2. The incidence matrix has block form: an all-ones column at z
    above zeros, the E1 block over V1 above an all-ones block, zeros above
    the E2 block over V2.
    """
    v1 = set(h1.vertices)
    v2 = set(h2.vertices)
    if v1 & v2:
        raise HypergraphError(f"vertex sets overlap: {sorted(v1 & v2)}")
    if z in v1 or z in v2:
        raise HypergraphError(f"gluing vertex {z} already present")
    edges = [{z} | set(e) for e in h1.edges]
    edges += [v1 | set(e) for e in h2.edges]
    return Hypergraph(v1 | v2 | {z}, edges)


def is_z_decomposable(h: Hypergraph, z: int) -> bool:
    """Whether every hyperedge e with z in e\\f satisfies e\\{z} subset of f.

    Equivalently h is the gluing of two hypergraphs at z.
    """
    zp = 1 << h.position(z)
    withz = [m for m in h.edge_masks if m & zp]
    without = [m for m in h.edge_masks if not m & zp]
    for a in withz:
        rest = a ^ zp
        for b in without:
            if rest & ~b:
                return False
    return True


def split_at(h: Hypergraph, z: int) -> tuple[Hypergraph, Hypergraph]:
    """Invert a gluing: (h1, h2) with glue(h1, h2, z) == h.

    V1 is the union of e \\ {z} over hyperedges containing z and V2 holds
    the remaining vertices. (A hypergraph can decompose at z in more than
    one way when no hyperedge avoids z; this choice is the canonical one.)
    """
    if not is_z_decomposable(h, z):
        raise HypergraphError(f"not z-decomposable at vertex {z}")
    zp = 1 << h.position(z)
    v1mask = 0
    for m in h.edge_masks:
        if m & zp:
            v1mask |= m ^ zp
    v1 = frozenset(h.vertices[i] for i in bits(v1mask))
    v2 = frozenset(h.vertices) - v1 - {z}
    e1 = [h.edge_set(m ^ zp) for m in h.edge_masks if m & zp]
    e2 = [h.edge_set(m) - v1 for m in h.edge_masks if not m & zp]
    return Hypergraph(v1, e1), Hypergraph(v2, e2)


@dataclass(frozen=True)
class HLeaf:
    """Decomposition leaf: a hypergraph with no vertices (edges in {[], [{}]})."""
    base: Hypergraph

    def __post_init__(self):
        if self.base.n != 0:
            raise HypergraphError("leaf must have zero vertices")


@dataclass(frozen=True)
class HNode:
    """Gluing node: recompose as glue(recompose(left), recompose(right), z)."""
    z: int
    left: "DecompositionTree"
    right: "DecompositionTree"


DecompositionTree = Union[HLeaf, HNode]


def decompose(h: Hypergraph) -> DecompositionTree:
    """Recursive gluing decomposition of a 1-Sperner hypergraph.

    At every step the lexicographically smallest vertex z at which the
    hypergraph is z-decomposable is used; such a vertex exists for every
    nonempty 1-Sperner hypergraph, and both constituents are again
    1-Sperner. Raises NotOneSpernerError (with a witness pair) otherwise.
    """
    bad = one_sperner_violation(h)
    if bad is not None:
        raise NotOneSpernerError(*bad)
    return _decompose_checked(h)


def _decompose_checked(h: Hypergraph) -> DecompositionTree:
    if h.n == 0:
        return HLeaf(h)
    for z in h.vertices:
        if is_z_decomposable(h, z):
            h1, h2 = split_at(h, z)
            return HNode(z, _decompose_checked(h1), _decompose_checked(h2))
    raise AssertionError("no gluing vertex found in a 1-Sperner hypergraph")


def recompose(tree: DecompositionTree) -> Hypergraph:
    if isinstance(tree, HLeaf):
        return tree.base
    return glue(recompose(tree.left), recompose(tree.right), tree.z)


def tree_depth(tree: DecompositionTree) -> int:
    if isinstance(tree, HLeaf):
        return 0
    return 1 + max(tree_depth(tree.left), tree_depth(tree.right))


# ---------------------------------------------------------------------------
# Transversals
# ---------------------------------------------------------------------------

def dual_masks(masks: Iterable[int], n: int) -> tuple[int, ...]:
    """Minimal transversals of a mask family over n vertex positions.

    Sequential minimal-hitting-set extension: fold hyperedges in one at a
    time, keeping the family of minimal partial transversals. If the empty
    hyperedge is present there is no transversal and the result is empty.
    For the empty family the empty set is the unique minimal transversal.
    """
    edges = sorted(set(masks), key=lambda m: (popcount(m), m))
    if edges and edges[0] == 0:
        return ()
    trs = [0]
    for e in edges:
        hit = []
        miss = []
        for t in trs:
            (hit if t & e else miss).append(t)
        ext = set()
        em = e
        while em:
            b = em & -em
            em ^= b
            for t in miss:
                c = t | b
                if not any(x & c == x for x in hit):
                    ext.add(c)
        keep = []
        for c in sorted(ext, key=lambda m: (popcount(m), m)):
            if not any(k & c == k for k in keep):
                keep.append(c)
        trs = hit + keep
    return tuple(sorted(trs))


def transversal(h: Hypergraph) -> Hypergraph:
    """The hypergraph of inclusion-minimal transversals, on the same vertices.

    Convention: a hypergraph containing the empty hyperedge has no
    transversal at all, and the result has an empty hyperedge family; the
    hypergraph with no hyperedges has the single minimal transversal {}.
    With this convention transversal is involutive on Sperner hypergraphs.
    """
    return Hypergraph.from_masks(h.vertices, dual_masks(h.edge_masks, h.n))


def maximal_independent_masks(h: Hypergraph) -> tuple[int, ...]:
    """Maximal sets containing no hyperedge, as complements of minimal transversals."""
    full = (1 << h.n) - 1
    return tuple(sorted(full ^ t for t in dual_masks(h.edge_masks, h.n)))


# ---------------------------------------------------------------------------
# Co-occurrence and conformality
# ---------------------------------------------------------------------------

def co_occurrence_adjacency(h: Hypergraph) -> list[int]:
    """Adjacency masks (by vertex position) of the co-occurrence graph.

    Two vertices are adjacent iff some hyperedge contains both.
    """
    adj = [0] * h.n
    for m in h.edge_masks:
        vs = list(bits(m))
        for i in vs:
            adj[i] |= m & ~(1 << i)
    return adj


def is_conformal(h: Hypergraph) -> bool:
    """Every clique of the co-occurrence graph lies inside some hyperedge.

    Checked on maximal cliques only, which suffices because any clique
    extends to a maximal one. Cliques include the empty set and all
    singletons, so a conformal hypergraph with vertices must cover each
    vertex, and a conformal hypergraph must have at least one hyperedge.
    """
    adj = co_occurrence_adjacency(h)
    for c in maximal_cliques(adj, h.n):
        if not any(m & c == c for m in h.edge_masks):
            return False
    return True
