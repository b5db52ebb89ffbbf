"""Text formats for hypergraphs, graphs, and certificates.

Hypergraph format: first line "n m", then m lines "k v1 ... vk" with
k >= 0 (k = 0 encodes the empty hyperedge); vertex ids are 0-based and
must be < n.

Graph format: first line "n m", then m lines "u v" with 0 <= u < v < n;
loops and duplicate edges are rejected.

All parse errors carry a 1-based line number. Certificates are printed as
exact fractions "p/q" (or plain integers), never as decimals.
"""

from __future__ import annotations

from fractions import Fraction

from .graphs import Graph
from .hypergraph import Hypergraph
from .threshold import AsummabilityWitness, ThresholdWitness


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 0):
        loc = f"line {line}" + (f", column {column}" if column else "")
        super().__init__(f"{loc}: {message}")
        self.line = line
        self.column = column


def _tokenized_lines(text: str):
    for i, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield i, body.split()


def read_hypergraph(text: str) -> Hypergraph:
    lines = list(_tokenized_lines(text))
    if not lines:
        raise ParseError("empty input, expected 'n m' header", 1)
    ln, head = lines[0]
    if len(head) != 2:
        raise ParseError("header must be 'n m'", ln)
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError("header values must be integers", ln) from None
    if n < 0 or m < 0:
        raise ParseError("header values must be non-negative", ln)
    if len(lines) - 1 != m:
        raise ParseError(f"expected {m} hyperedge lines, found {len(lines) - 1}", ln)
    edges = []
    for ln, toks in lines[1:]:
        try:
            vals = [int(t) for t in toks]
        except ValueError:
            raise ParseError("hyperedge line must contain integers", ln) from None
        if not vals:
            raise ParseError("hyperedge line must start with its size", ln)
        k, vs = vals[0], vals[1:]
        if k != len(vs):
            raise ParseError(f"declared size {k} but {len(vs)} vertices follow", ln)
        if len(set(vs)) != len(vs):
            raise ParseError("repeated vertex inside a hyperedge", ln)
        for v in vs:
            if not 0 <= v < n:
                raise ParseError(f"vertex {v} out of range 0..{n - 1}", ln)
        edges.append(set(vs))
    if len({frozenset(e) for e in edges}) != len(edges):
        raise ParseError("duplicate hyperedges", lines[0][0])
    return Hypergraph(range(n), edges)


def write_hypergraph(h: Hypergraph) -> str:
    if h.vertices != tuple(range(h.n)):
        raise ValueError("text format requires contiguous 0-based vertex ids")
    out = [f"{h.n} {h.m}"]
    for e in h.edges:
        vs = sorted(e)
        out.append(" ".join([str(len(vs))] + [str(v) for v in vs]))
    return "\n".join(out) + "\n"


def read_graph(text: str) -> Graph:
    lines = list(_tokenized_lines(text))
    if not lines:
        raise ParseError("empty input, expected 'n m' header", 1)
    ln, head = lines[0]
    if len(head) != 2:
        raise ParseError("header must be 'n m'", ln)
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError("header values must be integers", ln) from None
    if len(lines) - 1 != m:
        raise ParseError(f"expected {m} edge lines, found {len(lines) - 1}", ln)
    edges = []
    seen = set()
    for ln, toks in lines[1:]:
        if len(toks) != 2:
            raise ParseError("edge line must be 'u v'", ln)
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise ParseError("edge endpoints must be integers", ln) from None
        if u == v:
            raise ParseError(f"loop at vertex {u}", ln)
        if not (0 <= u < v < n):
            raise ParseError(f"edge ({u},{v}) must satisfy 0 <= u < v < n", ln)
        if (u, v) in seen:
            raise ParseError(f"duplicate edge ({u},{v})", ln)
        seen.add((u, v))
        edges.append((u, v))
    return Graph(n, edges)


def write_graph(g: Graph) -> str:
    es = g.edges()
    out = [f"{g.n} {len(es)}"]
    out += [f"{u} {v}" for u, v in es]
    return "\n".join(out) + "\n"


def frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def threshold_witness_to_text(h: Hypergraph, w: ThresholdWitness) -> str:
    out = [f"w {v} {frac(w.weights[i])}" for i, v in enumerate(h.vertices)]
    out.append(f"t {frac(w.threshold)}")
    return "\n".join(out) + "\n"


def asummability_witness_to_text(w: AsummabilityWitness) -> str:
    out = []
    for tag, fam in (("independent", w.independent), ("dependent", w.dependent)):
        for s in fam:
            out.append(f"{tag} {{{', '.join(str(v) for v in sorted(s))}}}")
    return "\n".join(out) + "\n"
