"""Independent brute-force oracles the test suite checks the library against.

Everything here is deliberately naive: subset scans, full enumerations, and
tiny DPs that share no code path with the implementations under test.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

from chorkit.decomposition import Tree
from chorkit.graphs import Graph, bits, induced_subgraph, maximal_cliques, non_edges

# -- corpus ---------------------------------------------------------------------


@lru_cache(maxsize=None)
def _atlas():
    return graph_atlas_g()


def atlas_graphs(min_n: int, max_n: int, connected_only: bool = False) -> list[Graph]:
    out = []
    for G in _atlas():
        n = G.number_of_nodes()
        if not min_n <= n <= max_n:
            continue
        if connected_only and (n == 0 or not nx.is_connected(G)):
            continue
        out.append(Graph.from_edges(n, G.edges()))
    return out


def to_networkx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


# -- chordality -------------------------------------------------------------------


def brute_find_hole(g: Graph) -> tuple[int, ...] | None:
    """Scan all vertex subsets of size >= 4 for an induced cycle."""
    for size in range(4, g.n + 1):
        for sub in itertools.combinations(range(g.n), size):
            sg, labels = induced_subgraph(g, sub)
            if any(sg.degree(v) != 2 for v in range(sg.n)):
                continue
            seen = 1
            frontier = [0]
            while frontier:
                nxt = []
                for t in frontier:
                    for u in sg.neighbors(t):
                        if not seen >> u & 1:
                            seen |= 1 << u
                            nxt.append(u)
                frontier = nxt
            if seen == (1 << sg.n) - 1:
                return tuple(labels[v] for v in range(sg.n))
    return None


def brute_is_chordal(g: Graph) -> bool:
    return brute_find_hole(g) is None


def brute_chordal_fill_masks(g: Graph) -> tuple[list[tuple[int, int]], list[int]]:
    """All fill subsets (as masks over the non-edge list) that leave g chordal."""
    pairs = non_edges(g)
    masks = []
    for fmask in range(1 << len(pairs)):
        fill = [pairs[i] for i in bits(fmask)]
        if brute_is_chordal(g.with_edges(fill)):
            masks.append(fmask)
    return pairs, masks


def brute_minimal_fill_masks(g: Graph) -> tuple[list[tuple[int, int]], list[int]]:
    pairs, masks = brute_chordal_fill_masks(g)
    minimal = [m for m in masks if not any(m2 & m == m2 and m2 != m for m2 in masks)]
    return pairs, minimal


def brute_chordality(g: Graph, kmax: int = 3) -> int:
    """Minimum family of chordal supergraphs intersecting to g, or kmax+1.

    Families of size 2..kmax range over subset-minimal chordal fills only:
    shrinking a member keeps the fill intersection empty, so nothing is lost.
    """
    pairs, masks = brute_chordal_fill_masks(g)
    if not pairs or 0 in masks:
        return 1
    minimal = [m for m in masks if not any(m2 & m == m2 and m2 != m for m2 in masks)]
    for k in range(2, kmax + 1):
        for combo in itertools.combinations(minimal, k):
            meet = combo[0]
            for m in combo[1:]:
                meet &= m
            if meet == 0:
                return k
    return kmax + 1


# -- interval graphs ---------------------------------------------------------------


def brute_interval_model(g: Graph) -> dict[int, tuple[int, int]] | None:
    """Search all left-endpoint orders; spans close at the last neighbor.

    A graph is interval iff some order makes the canonical spans reproduce
    it exactly (orders coming from a true model do).
    """
    if g.n == 0:
        return {}
    for order in itertools.permutations(range(g.n)):
        pos = {v: i for i, v in enumerate(order)}
        spans = {
            v: (pos[v], max([pos[u] for u in g.neighbors(v)] + [pos[v]]))
            for v in range(g.n)
        }
        ok = True
        for u in range(g.n):
            for v in range(u + 1, g.n):
                overlap = spans[u][0] <= spans[v][1] and spans[v][0] <= spans[u][1]
                if overlap != g.has_edge(u, v):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return spans
    return None


# -- pathwidth ----------------------------------------------------------------------


def completion_from_order(g: Graph, order: tuple[int, ...]) -> Graph:
    """Canonical interval completion of an order: v spans [pos(v), last neighbor]."""
    pos = {v: i for i, v in enumerate(order)}
    spans = {
        v: (pos[v], max([pos[u] for u in g.neighbors(v)] + [pos[v]]))
        for v in range(g.n)
    }
    edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if spans[u][0] <= spans[v][1] and spans[v][0] <= spans[u][1]
    ]
    return Graph.from_edges(g.n, edges)


def brute_pathwidth_all_orders(g: Graph) -> int:
    best = None
    for order in itertools.permutations(range(g.n)):
        w = maximal_cliques(completion_from_order(g, order)).omega - 1
        best = w if best is None else min(best, w)
    return best


def brute_pathwidth_dp(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Exact min over orders of the max prefix boundary, with a witness order.

    The boundary of a placed prefix is the clique count (minus one) of the
    canonical completion at that point, so this minimizes interval
    completions; the witness order's explicit completion is checked by the
    caller.
    """
    n = g.n
    full = (1 << n) - 1
    INF = n + 1
    f = [INF] * (1 << n)
    choice = [0] * (1 << n)
    f[0] = 0
    for s in range(1, 1 << n):
        boundary = sum(1 for v in bits(s) if g.adj[v] & ~s & full)
        best = INF
        arg = 0
        for v in bits(s):
            prev = f[s & ~(1 << v)]
            val = max(prev, boundary)
            if val < best:
                best, arg = val, v
        f[s] = best
        choice[s] = arg
    order: list[int] = []
    s = full
    while s:
        v = choice[s]
        order.append(v)
        s &= ~(1 << v)
    return f[full], tuple(reversed(order))


# -- free trees ----------------------------------------------------------------------


def _canon_tree(edges: tuple[tuple[int, int], ...], m: int) -> str:
    adjacency: dict[int, set[int]] = {v: set() for v in range(m)}
    for a, b in edges:
        adjacency[a].add(b)
        adjacency[b].add(a)

    def encode(root: int) -> str:
        def rec(v: int, parent: int) -> str:
            return "(" + "".join(sorted(rec(u, v) for u in adjacency[v] if u != parent)) + ")"

        return rec(root, -1)

    degree = {v: len(adjacency[v]) for v in range(m)}
    layer = [v for v in range(m) if degree[v] <= 1]
    removed: set[int] = set()
    remaining = m
    while remaining > 2:
        nxt = []
        for v in layer:
            removed.add(v)
            remaining -= 1
            for u in adjacency[v]:
                if u not in removed:
                    degree[u] -= 1
                    if degree[u] == 1:
                        nxt.append(u)
        layer = nxt
    centers = [v for v in range(m) if v not in removed]
    return min(encode(c) for c in centers)


@lru_cache(maxsize=None)
def free_trees(max_n: int) -> dict[int, list[Tree]]:
    """All non-isomorphic trees with 1..max_n nodes, by leaf extension."""
    shapes: dict[int, list[tuple[tuple[int, int], ...]]] = {1: [()]}
    for n in range(2, max_n + 1):
        fresh = []
        codes: set[str] = set()
        for edges in shapes[n - 1]:
            for attach in range(n - 1):
                cand = tuple(sorted(edges + ((attach, n - 1),)))
                code = _canon_tree(cand, n)
                if code not in codes:
                    codes.add(code)
                    fresh.append(cand)
        shapes[n] = fresh
    return {n: [Tree.from_edges(n, e) for e in es] for n, es in shapes.items()}


# -- coloring -----------------------------------------------------------------------


def brute_is_k_colorable(g: Graph, k: int) -> bool:
    if g.n == 0:
        return True
    if k == 0:
        return False

    def rec(v: int, colors: list[int]) -> bool:
        if v == g.n:
            return True
        for c in range(k):
            if all(colors[u] != c for u in g.neighbors(v) if u < v):
                colors[v] = c
                if rec(v + 1, colors):
                    return True
                colors[v] = -1
        return False

    return rec(0, [-1] * g.n)


def brute_chromatic(g: Graph) -> int:
    k = 1 if g.n else 0
    while not brute_is_k_colorable(g, k):
        k += 1
    return k
