"""Trees, tree-decompositions, and the predicates defined on them.

A decomposition is a tree plus a bag per node.  Its *completion* is the graph
whose edges are exactly the pairs sharing a bag; a decomposition separates a
non-edge of the host graph when that pair is also a non-edge of the
completion.  Width, completeness, path shape, separating families,
orthogonality, tree pathwidth (by the path-peeling recursion) and tree radius
all live here.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .graphs import (
    Graph,
    GraphInputError,
    Verdict,
    bits,
    mask_of,
    non_edges,
)


@dataclass(frozen=True)
class Tree:
    """Tree on nodes 0..m-1 with canonically sorted edges."""

    m: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.m < 1:
            raise GraphInputError("a tree needs at least one node")
        norm = tuple(sorted((min(a, b), max(a, b)) for a, b in self.edges))
        if norm != self.edges:
            raise GraphInputError("tree edges must be canonically sorted pairs (a<b)")
        if len(set(norm)) != len(norm):
            raise GraphInputError("duplicate tree edge")
        if len(norm) != self.m - 1:
            raise GraphInputError(f"a tree on {self.m} nodes needs {self.m - 1} edges")
        for a, b in norm:
            if a == b or not (0 <= a < self.m and 0 <= b < self.m):
                raise GraphInputError(f"bad tree edge ({a},{b})")
        # connectivity (acyclicity follows from the edge count)
        if self._reach(0) != (1 << self.m) - 1:
            raise GraphInputError("tree is not connected")

    @classmethod
    def from_edges(cls, m: int, edges: Iterable[Sequence[int]]) -> "Tree":
        return cls(m, tuple(sorted((min(a, b), max(a, b)) for a, b in edges)))

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        masks = [0] * self.m
        for a, b in self.edges:
            masks[a] |= 1 << b
            masks[b] |= 1 << a
        return tuple(masks)

    def _reach(self, start: int) -> int:
        seen = 1 << start
        frontier = [start]
        while frontier:
            nxt = []
            for t in frontier:
                fresh = self.neighbor_masks[t] & ~seen
                seen |= fresh
                nxt.extend(bits(fresh))
            frontier = nxt
        return seen

    def degree(self, t: int) -> int:
        return self.neighbor_masks[t].bit_count()

    def is_path(self) -> bool:
        return all(self.degree(t) <= 2 for t in range(self.m))

    def leaves(self) -> list[int]:
        if self.m == 1:
            return [0]
        return [t for t in range(self.m) if self.degree(t) == 1]

    def distances_from(self, root: int) -> list[int]:
        dist = [-1] * self.m
        dist[root] = 0
        frontier = [root]
        while frontier:
            nxt = []
            for t in frontier:
                for u in bits(self.neighbor_masks[t]):
                    if dist[u] < 0:
                        dist[u] = dist[t] + 1
                        nxt.append(u)
            frontier = nxt
        return dist

    def path(self, a: int, b: int) -> tuple[int, ...]:
        """Node sequence of the unique a-b path."""
        parent = {a: a}
        frontier = [a]
        while b not in parent and frontier:
            nxt = []
            for t in frontier:
                for u in bits(self.neighbor_masks[t]):
                    if u not in parent:
                        parent[u] = t
                        nxt.append(u)
            frontier = nxt
        seq = [b]
        while seq[-1] != a:
            seq.append(parent[seq[-1]])
        return tuple(reversed(seq))


@dataclass(frozen=True)
class TreeDecomposition:
    """A tree plus one bag (vertex set of the host graph) per tree node."""

    tree: Tree
    bags: tuple[frozenset[int], ...]
    host_n: int

    def __post_init__(self) -> None:
        if len(self.bags) != self.tree.m:
            raise GraphInputError("one bag per tree node required")

    def nodes_with(self, v: int) -> list[int]:
        return [t for t, bag in enumerate(self.bags) if v in bag]

    def subtree_of(self, v: int) -> frozenset[int]:
        return frozenset(self.nodes_with(v))


@dataclass(frozen=True)
class OrthogonalityReport:
    max_overlap: int
    witness: tuple[int, int]


def verify_td(g: Graph, td: TreeDecomposition) -> Verdict:
    """Check the three decomposition invariants against the host graph."""
    if td.host_n != g.n:
        return Verdict.failed("host-size-mismatch", (td.host_n, g.n))
    for t, bag in enumerate(td.bags):
        for v in bag:
            if not 0 <= v < g.n:
                return Verdict.failed("bag-label-out-of-range", (t, v))
    for v in range(g.n):
        nodes = td.nodes_with(v)
        if not nodes:
            return Verdict.failed("vertex-uncovered", v)
        # connectivity of the nodes holding v
        node_mask = mask_of(nodes)
        seen = 1 << nodes[0]
        frontier = [nodes[0]]
        while frontier:
            nxt = []
            for t in frontier:
                fresh = td.tree.neighbor_masks[t] & node_mask & ~seen
                seen |= fresh
                nxt.extend(bits(fresh))
            frontier = nxt
        if seen != node_mask:
            return Verdict.failed("vertex-disconnected", v)
    for u, v in g.edges():
        if not any(u in bag and v in bag for bag in td.bags):
            return Verdict.failed("edge-uncovered", (u, v))
    return Verdict.passed()


def completion_of(g: Graph, td: TreeDecomposition) -> Graph:
    """The supergraph with an edge wherever two vertices share a bag."""
    verdict = verify_td(g, td)
    if not verdict:
        raise GraphInputError(f"invalid tree-decomposition: {verdict.reason} {verdict.witness}")
    adj = list(g.adj)
    for bag in td.bags:
        members = sorted(bag)
        for i, u in enumerate(members):
            for v in members[i + 1 :]:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(g.n, tuple(adj))


def width(td: TreeDecomposition) -> int:
    return max((len(bag) for bag in td.bags), default=0) - 1


def is_complete(g: Graph, td: TreeDecomposition) -> bool:
    return all(g.is_clique(bag) for bag in td.bags)


def is_path_decomposition(td: TreeDecomposition) -> bool:
    return td.tree.is_path()


def separated_nonedges(g: Graph, td: TreeDecomposition) -> frozenset[tuple[int, int]]:
    h = completion_of(g, td)
    return frozenset(e for e in non_edges(g) if not h.has_edge(*e))


def is_separating_family(
    g: Graph, tds: Sequence[TreeDecomposition]
) -> tuple[bool, tuple[int, int] | None]:
    """True iff every non-edge of g is separated by some member."""
    covered: set[tuple[int, int]] = set()
    for td in tds:
        covered |= separated_nonedges(g, td)
    for e in non_edges(g):
        if e not in covered:
            return False, e
    return True, None


def orthogonality(td1: TreeDecomposition, td2: TreeDecomposition) -> OrthogonalityReport:
    """Exact maximum bag-pair overlap between two decompositions."""
    if td1.host_n != td2.host_n:
        raise GraphInputError("orthogonality needs decompositions of the same host")
    best = -1
    arg = (0, 0)
    for t1, b1 in enumerate(td1.bags):
        for t2, b2 in enumerate(td2.bags):
            k = len(b1 & b2)
            if k > best:
                best, arg = k, (t1, t2)
    return OrthogonalityReport(best, arg)


# -- tree pathwidth by the peel recursion ------------------------------------
#
# For a tree component S with at least one edge, pw(S) <= k iff some
# leaf-to-leaf path Q of S leaves only components of pathwidth <= k-1.
# Removing more can only help, so leaf-to-leaf paths lose no generality.


def _components(neighbor_masks: Sequence[int], comp_mask: int) -> list[int]:
    out = []
    remaining = comp_mask
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        seen = 1 << start
        frontier = [start]
        while frontier:
            nxt = []
            for t in frontier:
                fresh = neighbor_masks[t] & comp_mask & ~seen
                seen |= fresh
                nxt.extend(bits(fresh))
            frontier = nxt
        out.append(seen)
        remaining &= ~seen
    return out


def _path_in_component(neighbor_masks: Sequence[int], comp_mask: int, a: int, b: int) -> int:
    parent = {a: a}
    frontier = [a]
    while b not in parent and frontier:
        nxt = []
        for t in frontier:
            for u in bits(neighbor_masks[t] & comp_mask):
                if u not in parent:
                    parent[u] = t
                    nxt.append(u)
        frontier = nxt
    mask = 0
    t = b
    while True:
        mask |= 1 << t
        if t == a:
            break
        t = parent[t]
    return mask


def _peel(neighbor_masks: Sequence[int], comp_mask: int, memo: dict) -> tuple[int, int]:
    """(pathwidth, best peel-path mask) of a connected node set, memoized."""
    if comp_mask.bit_count() == 1:
        return 0, comp_mask
    cached = memo.get(comp_mask)
    if cached is not None:
        return cached
    leaves = [
        t
        for t in bits(comp_mask)
        if (neighbor_masks[t] & comp_mask).bit_count() <= 1
    ]
    best_val = None
    best_path = 0
    for i, a in enumerate(leaves):
        for b in leaves[i + 1 :]:
            q = _path_in_component(neighbor_masks, comp_mask, a, b)
            val = 1
            for sub in _components(neighbor_masks, comp_mask & ~q):
                sub_val, _ = _peel(neighbor_masks, sub, memo)
                val = max(val, sub_val + 1)
                if best_val is not None and val >= best_val:
                    break
            if best_val is None or val < best_val:
                best_val, best_path = val, q
    memo[comp_mask] = (best_val, best_path)
    return best_val, best_path


def tree_pathwidth(t: Tree) -> int:
    val, _ = _peel(t.neighbor_masks, (1 << t.m) - 1, {})
    return val


def peel_path_of(t: Tree, comp: Iterable[int] | None = None) -> tuple[int, ...]:
    """Optimal peel path (node order along the path) of a component of t."""
    comp_mask = (1 << t.m) - 1 if comp is None else mask_of(comp)
    _, path_mask = _peel(t.neighbor_masks, comp_mask, {})
    members = list(bits(path_mask))
    if len(members) == 1:
        return (members[0],)
    ends = [v for v in members if (t.neighbor_masks[v] & path_mask).bit_count() == 1]
    start = min(ends)
    order = [start]
    seen = 1 << start
    while len(order) < len(members):
        nxt = t.neighbor_masks[order[-1]] & path_mask & ~seen
        step = (nxt & -nxt).bit_length() - 1
        order.append(step)
        seen |= 1 << step
    return tuple(order)


def tree_radius(t: Tree) -> tuple[int, int]:
    """(radius, witness root); the root is the lowest-label center."""
    best = None
    arg = 0
    for r in range(t.m):
        ecc = max(t.distances_from(r))
        if best is None or ecc < best:
            best, arg = ecc, r
    return best, arg
