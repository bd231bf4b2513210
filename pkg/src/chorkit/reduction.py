"""Lexicographic products and the coloring <-> chordality translation.

Substituting a two-vertex edgeless graph for every vertex turns a k-coloring
question into a k-chordality question: a proper coloring of the base yields
one split completion per color, and conversely any certificate family for
the doubled graph must, for each base vertex, leave its fiber pair unfilled
in some member (two adjacent fibers fully unfilled in one member would form
a 4-hole there), which reads off a proper coloring.
"""

from __future__ import annotations

from dataclasses import dataclass

from .engine import ChordalityCertificate, verify_certificate
from .graphs import (
    Coloring,
    Graph,
    GraphInputError,
    InternalInvariantError,
    bits,
    coloring_violation,
    maximal_cliques,
)


@dataclass(frozen=True)
class LexProduct:
    """Product on V(base) x V(inner); (x,y) encoded as x*|V(inner)|+y."""

    base: Graph
    inner: Graph
    product: Graph

    def encode(self, x: int, y: int) -> int:
        return x * self.inner.n + y

    def decode(self, idx: int) -> tuple[int, int]:
        return divmod(idx, self.inner.n)


def lex_product(g: Graph, h: Graph) -> LexProduct:
    """(x1,y1) ~ (x2,y2) iff x1x2 is an edge of g, or x1=x2 and y1y2 an edge of h."""
    n = g.n * h.n
    edges = []
    for x1 in range(g.n):
        for y1 in range(h.n):
            a = x1 * h.n + y1
            for x2 in bits(g.adj[x1]):
                for y2 in range(h.n):
                    b = x2 * h.n + y2
                    if a < b:
                        edges.append((a, b))
            for y2 in bits(h.adj[y1]):
                b = x1 * h.n + y2
                if a < b:
                    edges.append((a, b))
    return LexProduct(g, h, Graph.from_edges(n, edges))


def coloring_to_chordality_instance(g: Graph) -> LexProduct:
    """The doubled graph: each vertex v becomes the fiber pair 2v, 2v+1."""
    return lex_product(g, Graph(2, (0, 0)))


def lift_base_coloring(lp: LexProduct, coloring: Coloring) -> Coloring:
    """Copy a proper base coloring onto every fiber; proper on the product."""
    if len(coloring.assignment) != lp.base.n:
        raise GraphInputError("coloring length differs from the base vertex count")
    bad = coloring_violation(lp.base, coloring.assignment)
    if bad is not None:
        raise GraphInputError(f"base coloring is not proper: edge {bad}")
    lifted = tuple(
        coloring.assignment[lp.decode(idx)[0]] for idx in range(lp.product.n)
    )
    return Coloring(lifted, coloring.bound_claimed, "base coloring copied through fibers")


def decode_coloring(g: Graph, cert: ChordalityCertificate) -> Coloring:
    """Proper coloring of g read off a verifying certificate of its double.

    Vertex v gets the smallest index i whose completion misses the fiber
    pair {2v, 2v+1}.
    """
    lp = coloring_to_chordality_instance(g)
    verdict = verify_certificate(lp.product, cert)
    if not verdict:
        raise GraphInputError(
            f"certificate does not verify for the doubled graph: {verdict.reason} {verdict.witness}"
        )
    assignment = []
    for v in range(g.n):
        a, b = lp.encode(v, 0), lp.encode(v, 1)
        choice = next(
            (i for i, tri in enumerate(cert.completions) if not tri.result.has_edge(a, b)),
            None,
        )
        if choice is None:
            raise GraphInputError(
                f"no completion misses the fiber pair of vertex {v}; not a certificate"
            )
        assignment.append(choice)
    bad = coloring_violation(g, assignment)
    if bad is not None:
        raise InternalInvariantError(f"decoded coloring is improper on edge {bad}")
    return Coloring(tuple(assignment), cert.claimed_k, "chordality certificate size")


def is_k_colorable(g: Graph, k: int) -> bool:
    """Backtracking with a maximum clique pre-colored for symmetry breaking."""
    if k < 0:
        raise GraphInputError("color count must be nonnegative")
    if g.n == 0:
        return True
    if k == 0:
        return False
    report = maximal_cliques(g)
    clique = next(c for c in report.maximal_cliques if len(c) == report.omega)
    if report.omega > k:
        return False
    color = [-1] * g.n
    for i, v in enumerate(clique):
        color[v] = i
    rest = sorted((v for v in range(g.n) if color[v] < 0), key=lambda v: (-g.degree(v), v))

    def rec(i: int) -> bool:
        if i == len(rest):
            return True
        v = rest[i]
        used = {color[u] for u in bits(g.adj[v]) if color[u] >= 0}
        cap = min(k, max((color[u] for u in range(g.n) if color[u] >= 0), default=-1) + 2)
        for c in range(cap):
            if c in used:
                continue
            color[v] = c
            if rec(i + 1):
                return True
            color[v] = -1
        return False

    return rec(0)


def chromatic_number_exact(g: Graph) -> int:
    """Exact chromatic number by increasing-k backtracking from omega."""
    if g.n == 0:
        return 0
    lb = maximal_cliques(g).omega
    k = lb
    while not is_k_colorable(g, k):
        k += 1
    return k
