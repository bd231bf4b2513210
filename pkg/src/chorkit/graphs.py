"""Bit-set simple graphs and the set algebra everything else builds on.

Vertices are the integers 0..n-1 and adjacency is one int bitmask per
vertex.  That keeps the intersection-heavy workload cheap at desk scale;
graphs beyond ~64 vertices still work (Python ints are unbounded) but lose
the speed advantage, which is the documented soft cap.

Graph values are immutable: every operation returns a new graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Iterable, Iterator, Sequence


class GraphInputError(ValueError):
    """An operation received a malformed or out-of-contract input."""


class InternalInvariantError(RuntimeError):
    """A structural guarantee failed mid-pipeline; reported, never recovered."""


class BudgetExceededError(RuntimeError):
    """A configured size/node cap was hit before the operation finished."""


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(labels: Iterable[int]) -> int:
    m = 0
    for v in labels:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph on vertices 0..n-1."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphInputError("vertex count must be nonnegative")
        if len(self.adj) != self.n:
            raise GraphInputError("adjacency table length differs from vertex count")
        full = (1 << self.n) - 1
        for v, m in enumerate(self.adj):
            if m & ~full:
                raise GraphInputError(f"neighbor label out of range at vertex {v}")
            if m >> v & 1:
                raise GraphInputError(f"loop at vertex {v}")
        for u in range(self.n):
            for v in bits(self.adj[u]):
                if not self.adj[v] >> u & 1:
                    raise GraphInputError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        adj = [0] * n
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphInputError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge ({u},{v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    @cached_property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    def with_edges(self, extra: Iterable[Sequence[int]]) -> "Graph":
        adj = list(self.adj)
        for u, v in extra:
            if u == v:
                raise GraphInputError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def without_edges(self, drop: Iterable[Sequence[int]]) -> "Graph":
        adj = list(self.adj)
        for u, v in drop:
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj))

    def is_clique(self, members: Iterable[int]) -> bool:
        mem = mask_of(members)
        for v in bits(mem):
            if mem & ~(self.adj[v] | 1 << v):
                return False
        return True


@dataclass(frozen=True)
class CliqueReport:
    """All inclusion-maximal cliques, canonically ordered, plus the clique number."""

    maximal_cliques: tuple[tuple[int, ...], ...]
    omega: int


@dataclass(frozen=True)
class Coloring:
    """A vertex -> color assignment together with its claimed bound provenance."""

    assignment: tuple[int, ...]
    bound_claimed: int
    bound_formula: str

    @property
    def colors_used(self) -> int:
        return max(self.assignment) + 1 if self.assignment else 0


@dataclass(frozen=True)
class Verdict:
    """Outcome of a verification: ok, or a named violation with a witness."""

    ok: bool
    reason: str | None = None
    witness: object = None

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def passed(cls) -> "Verdict":
        return cls(True)

    @classmethod
    def failed(cls, reason: str, witness: object = None) -> "Verdict":
        return cls(False, reason, witness)


def induced_subgraph(g: Graph, members: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``members``; also returns the new->old label map."""
    labels = tuple(sorted(set(members)))
    for v in labels:
        if not 0 <= v < g.n:
            raise GraphInputError(f"vertex label {v} out of range for n={g.n}")
    pos = {v: i for i, v in enumerate(labels)}
    adj = [0] * len(labels)
    mem = mask_of(labels)
    for i, v in enumerate(labels):
        for u in bits(g.adj[v] & mem):
            adj[i] |= 1 << pos[u]
    return Graph(len(labels), tuple(adj)), labels


def graph_intersection(graphs: Sequence[Graph]) -> Graph:
    """Edge present iff present in every input; all inputs share the vertex set."""
    if not graphs:
        raise GraphInputError("intersection of an empty family is undefined")
    n = graphs[0].n
    for g in graphs:
        if g.n != n:
            raise GraphInputError("graphs in an intersection must share the vertex count")
    adj = tuple(reduce(lambda a, b: a & b, (g.adj[v] for g in graphs)) for v in range(n))
    return Graph(n, adj)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~m & ~(1 << v) for v, m in enumerate(g.adj)))


def non_edges(g: Graph) -> list[tuple[int, int]]:
    return [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]


def coloring_violation(g: Graph, assignment: Sequence[int]) -> tuple[int, int] | None:
    """First edge whose ends share a color, or None when the coloring is proper."""
    if len(assignment) != g.n:
        raise GraphInputError("coloring length differs from vertex count")
    for u, v in g.edges():
        if assignment[u] == assignment[v]:
            return (u, v)
    return None


def maximal_cliques(g: Graph) -> CliqueReport:
    """Pivoted Bron-Kerbosch; output canonicalized lexicographically."""
    if g.n == 0:
        return CliqueReport((), 0)
    found: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            found.append(r)
            return
        pivot = max(bits(p | x), key=lambda u: (p & g.adj[u]).bit_count())
        for v in bits(p & ~g.adj[pivot]):
            vb = 1 << v
            expand(r | vb, p & g.adj[v], x & g.adj[v])
            p &= ~vb
            x |= vb

    expand(0, (1 << g.n) - 1, 0)
    cliques = sorted(tuple(bits(m)) for m in found)
    return CliqueReport(tuple(cliques), max(len(c) for c in cliques))
