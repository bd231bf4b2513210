"""Chordal and interval graph machinery.

Recognition is certificate-producing: a perfect elimination ordering on
success, a hole (induced cycle of length >= 4) on failure.  On top of that
sit the elimination-order coloring, clique trees, interval recognition with
explicit models, and enumeration of inclusion-minimal chordal fills.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .decomposition import Tree, TreeDecomposition
from .graphs import (
    Coloring,
    Graph,
    GraphInputError,
    InternalInvariantError,
    bits,
    mask_of,
    maximal_cliques,
    non_edges,
)


class NotChordalError(GraphInputError):
    def __init__(self, message: str, hole: tuple[int, ...]):
        super().__init__(f"{message}: hole {hole}")
        self.hole = hole


@dataclass(frozen=True)
class ChordalWitness:
    """Either a perfect elimination ordering or a hole; exactly one is set."""

    peo: tuple[int, ...] | None = None
    hole: tuple[int, ...] | None = None

    @property
    def is_chordal(self) -> bool:
        return self.peo is not None


@dataclass(frozen=True)
class Triangulation:
    """A chordal completion recorded as base graph + added fill edges."""

    base: Graph
    fill: tuple[tuple[int, int], ...]
    result: Graph

    @classmethod
    def from_fill(cls, base: Graph, fill: Iterable[Sequence[int]]) -> "Triangulation":
        norm = tuple(sorted((min(u, v), max(u, v)) for u, v in fill))
        for u, v in norm:
            if base.has_edge(u, v):
                raise GraphInputError(f"fill pair ({u},{v}) is already an edge")
        return cls(base, norm, base.with_edges(norm))


@dataclass(frozen=True)
class TriangulationEnumeration:
    triangulations: tuple[Triangulation, ...]
    complete: bool


@dataclass(frozen=True)
class IntervalResult:
    is_interval: bool
    model: tuple[tuple[int, int], ...] | None = None
    hole: tuple[int, ...] | None = None
    asteroidal_triple: tuple[int, int, int] | None = None


def mcs_order(g: Graph) -> tuple[int, ...]:
    """Maximum cardinality search; returns the candidate elimination order."""
    weight = [0] * g.n
    unnumbered = set(range(g.n))
    selection: list[int] = []
    while unnumbered:
        z = max(sorted(unnumbered), key=lambda v: weight[v])
        selection.append(z)
        unnumbered.discard(z)
        for u in bits(g.adj[z]):
            if u in unnumbered:
                weight[u] += 1
    return tuple(reversed(selection))


def peo_violation(g: Graph, order: Sequence[int]) -> tuple[int, int, int] | None:
    """None iff ``order`` is a perfect elimination ordering.

    Otherwise (v, u, w): u and w are later neighbors of v but non-adjacent.
    """
    if sorted(order) != list(range(g.n)):
        raise GraphInputError("elimination order is not a permutation of the vertices")
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    for i, v in enumerate(order):
        later = [u for u in bits(g.adj[v]) if pos[u] > i]
        if len(later) < 2:
            continue
        u = min(later, key=lambda x: pos[x])
        for w in later:
            if w != u and not g.has_edge(u, w):
                return (v, u, w)
    return None


def _bfs_path_avoiding(g: Graph, start: int, goal: int, blocked: int) -> tuple[int, ...] | None:
    """Shortest start-goal path through vertices outside ``blocked``."""
    if blocked >> start & 1 or blocked >> goal & 1:
        return None
    parent = {start: start}
    frontier = [start]
    while frontier and goal not in parent:
        nxt = []
        for t in frontier:
            for u in bits(g.adj[t] & ~blocked):
                if u not in parent:
                    parent[u] = t
                    nxt.append(u)
        frontier = nxt
    if goal not in parent:
        return None
    seq = [goal]
    while seq[-1] != start:
        seq.append(parent[seq[-1]])
    return tuple(reversed(seq))


def _canonical_cycle(cycle: Sequence[int]) -> tuple[int, ...]:
    k = len(cycle)
    i = cycle.index(min(cycle))
    fwd = tuple(cycle[(i + j) % k] for j in range(k))
    bwd = tuple(cycle[(i - j) % k] for j in range(k))
    return min(fwd, bwd)


def _check_hole(g: Graph, cycle: Sequence[int]) -> None:
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k:
        raise InternalInvariantError(f"not a hole: {cycle}")
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = j - i == 1 or (i == 0 and j == k - 1)
            if g.has_edge(cycle[i], cycle[j]) != consecutive:
                raise InternalInvariantError(f"not a hole: {cycle}")


def find_hole(g: Graph) -> tuple[int, ...] | None:
    """A shortest hole of g (canonical rotation), or None when chordal.

    Fast path for 4-holes, then a sweep over paths u-v-w with uw a non-edge,
    closed by a shortest detour avoiding the rest of N[v].
    """
    for u in range(g.n):
        for w in range(u + 1, g.n):
            if g.has_edge(u, w):
                continue
            common = list(bits(g.adj[u] & g.adj[w]))
            for i, a in enumerate(common):
                for b in common[i + 1 :]:
                    if not g.has_edge(a, b):
                        cyc = _canonical_cycle((u, a, w, b))
                        _check_hole(g, cyc)
                        return cyc
    best: tuple[int, ...] | None = None
    for v in range(g.n):
        nbrs = list(bits(g.adj[v]))
        for i, u in enumerate(nbrs):
            for w in nbrs[i + 1 :]:
                if g.has_edge(u, w):
                    continue
                blocked = (g.adj[v] | 1 << v) & ~(1 << u) & ~(1 << w)
                path = _bfs_path_avoiding(g, u, w, blocked)
                if path is None:
                    continue
                cycle = (v,) + path
                if best is None or len(cycle) < len(best):
                    best = cycle
    if best is None:
        return None
    cyc = _canonical_cycle(best)
    _check_hole(g, cyc)
    return cyc


def is_chordal(g: Graph) -> bool:
    return peo_violation(g, mcs_order(g)) is None


def recognize_chordal(g: Graph) -> ChordalWitness:
    """PEO iff chordal, hole otherwise; both sides independently checkable."""
    order = mcs_order(g)
    if peo_violation(g, order) is None:
        return ChordalWitness(peo=order)
    hole = find_hole(g)
    if hole is None:
        raise InternalInvariantError("elimination check failed but no hole found")
    return ChordalWitness(hole=hole)


def peo_coloring(g: Graph, witness: ChordalWitness) -> Coloring:
    """Greedy coloring along the reverse elimination order; uses omega colors."""
    if witness.peo is None:
        raise GraphInputError("coloring needs a perfect elimination ordering witness")
    bad = peo_violation(g, witness.peo)
    if bad is not None:
        raise GraphInputError(
            f"not a perfect elimination ordering: vertex {bad[0]} has "
            f"non-adjacent later neighbors {bad[1]} and {bad[2]}"
        )
    color = [-1] * g.n
    for v in reversed(witness.peo):
        used = {color[u] for u in bits(g.adj[v]) if color[u] >= 0}
        c = 0
        while c in used:
            c += 1
        color[v] = c
    count = max(color) + 1 if color else 0
    return Coloring(tuple(color), count, "omega(G) via reverse elimination greedy")


def clique_tree(g: Graph) -> TreeDecomposition:
    """Complete tree-decomposition whose bags are the maximal cliques.

    Built as a maximum-weight spanning tree of the clique graph, weights
    being pairwise clique intersections (junction-tree construction).
    """
    witness = recognize_chordal(g)
    if not witness.is_chordal:
        raise NotChordalError("clique tree needs a chordal graph", witness.hole)
    if g.n == 0:
        return TreeDecomposition(Tree(1, ()), (frozenset(),), 0)
    cliques = maximal_cliques(g).maximal_cliques
    m = len(cliques)
    sets = [frozenset(c) for c in cliques]
    if m == 1:
        return TreeDecomposition(Tree(1, ()), (sets[0],), g.n)
    weighted = sorted(
        ((-len(sets[i] & sets[j]), i, j) for i in range(m) for j in range(i + 1, m))
    )
    parent = list(range(m))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    chosen: list[tuple[int, int]] = []
    for _, i, j in weighted:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            chosen.append((i, j))
            if len(chosen) == m - 1:
                break
    return TreeDecomposition(Tree.from_edges(m, chosen), tuple(sets), g.n)


# -- interval graphs ----------------------------------------------------------


def _consecutive_clique_order(clique_masks: Sequence[int]) -> list[int] | None:
    """Order the cliques so each vertex's cliques are consecutive, if possible."""
    m = len(clique_masks)
    used = [False] * m
    order: list[int] = []

    def rec(appeared: int, closed: int) -> bool:
        if len(order) == m:
            return True
        for i in range(m):
            if used[i]:
                continue
            cm = clique_masks[i]
            if cm & closed:
                continue
            used[i] = True
            order.append(i)
            if rec(appeared | cm, closed | (appeared & ~cm)):
                return True
            used[i] = False
            order.pop()
        return False

    return order if rec(0, 0) else None


def _find_asteroidal_triple(g: Graph) -> tuple[int, int, int] | None:
    for x in range(g.n):
        for y in range(x + 1, g.n):
            if g.has_edge(x, y):
                continue
            for z in range(y + 1, g.n):
                if g.has_edge(x, z) or g.has_edge(y, z):
                    continue
                ok = True
                for a, b, c in ((x, y, z), (x, z, y), (y, z, x)):
                    blocked = (g.adj[c] | 1 << c) & ~(1 << a) & ~(1 << b)
                    if _bfs_path_avoiding(g, a, b, blocked) is None:
                        ok = False
                        break
                if ok:
                    return (x, y, z)
    return None


def recognize_interval(g: Graph) -> IntervalResult:
    """Interval recognition via chordality plus a consecutive clique order.

    On success the model maps each vertex to an integer interval [lo, hi]
    (its run of clique positions); on failure the witness is a hole or an
    asteroidal triple.
    """
    witness = recognize_chordal(g)
    if not witness.is_chordal:
        return IntervalResult(False, hole=witness.hole)
    if g.n == 0:
        return IntervalResult(True, model=())
    cliques = maximal_cliques(g).maximal_cliques
    masks = [mask_of(c) for c in cliques]
    order = _consecutive_clique_order(masks)
    if order is None:
        at = _find_asteroidal_triple(g)
        if at is None:
            raise InternalInvariantError("chordal, no clique order, and no asteroidal triple")
        return IntervalResult(False, asteroidal_triple=at)
    spans: list[tuple[int, int]] = []
    for v in range(g.n):
        positions = [p for p, ci in enumerate(order) if masks[ci] >> v & 1]
        spans.append((min(positions), max(positions)))
    for u in range(g.n):
        for v in range(u + 1, g.n):
            overlap = spans[u][0] <= spans[v][1] and spans[v][0] <= spans[u][1]
            if overlap != g.has_edge(u, v):
                raise InternalInvariantError("interval model disagrees with the graph")
    return IntervalResult(True, model=tuple(spans))


# -- minimal triangulations ---------------------------------------------------


def _minimalize_fill(g: Graph, fill: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    """Drop fill edges (lowest pair first) while chordality survives."""
    current = sorted(fill)
    h = g.with_edges(current)
    changed = True
    while changed:
        changed = False
        for f in list(current):
            candidate = h.without_edges([f])
            if is_chordal(candidate):
                h = candidate
                current.remove(f)
                changed = True
                break
    return tuple(current)


def minimal_triangulations(
    g: Graph, cap: int, state_cap: int = 2_000_000
) -> TriangulationEnumeration:
    """All inclusion-minimal chordal fills of g, up to ``cap`` many.

    Branch-and-reduce: pick a shortest hole of the current filled graph and
    branch on each of its chords.  Every minimal fill is reached by the
    branch path that stays inside it, so pruning states that strictly
    contain an already-found minimal fill (distinct minimal fills are never
    nested) loses nothing.  The result is flagged complete unless a cap hit
    ended the walk early.
    """
    if cap < 1:
        raise GraphInputError("triangulation cap must be positive")
    pairs = non_edges(g)
    index = {e: i for i, e in enumerate(pairs)}
    found: dict[int, tuple[tuple[int, int], ...]] = {}
    seen: set[int] = set()
    complete = True
    stack = [0]
    while stack:
        fmask = stack.pop()
        if fmask in seen:
            continue
        seen.add(fmask)
        if len(seen) > state_cap:
            complete = False
            break
        if any(mm & fmask == mm for mm in found if mm != fmask):
            continue
        fill = [pairs[i] for i in bits(fmask)]
        h = g.with_edges(fill)
        if is_chordal(h):
            minimal = _minimalize_fill(g, fill)
            key = mask_of(index[e] for e in minimal)
            if key not in found:
                if len(found) >= cap:
                    complete = False
                    break
                found[key] = minimal
            continue
        hole = find_hole(h)
        k = len(hole)
        for i in range(k):
            for j in range(i + 2, k):
                if i == 0 and j == k - 1:
                    continue
                chord = (min(hole[i], hole[j]), max(hole[i], hole[j]))
                stack.append(fmask | 1 << index[chord])
    items = sorted(found.values(), key=lambda f: (len(f), f))
    return TriangulationEnumeration(
        tuple(Triangulation.from_fill(g, f) for f in items), complete
    )
