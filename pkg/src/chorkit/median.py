"""Median graphs realized as Cartesian products of trees.

Product vertices are tuples of factor nodes; distances add per coordinate,
geodesic intervals are products of factor paths, and the median of three
vertices is the coordinatewise tree median.  A median decomposition carries
one bag per product vertex; building one from a family of tree-
decompositions intersects the coordinate bags, which makes every vertex
preimage a box (product of factor subtrees), hence convex.  When the family
separates every non-edge, all bags are cliques and the decomposition is
complete.  Restricting all factors to paths gives the boxicity analogue of
the same machinery.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from math import prod
from typing import Iterable, Sequence

from .decomposition import Tree, TreeDecomposition, verify_td
from .graphs import (
    BudgetExceededError,
    Graph,
    GraphInputError,
    InternalInvariantError,
    Verdict,
)

DEFAULT_PRODUCT_CAP = 100_000


@dataclass(frozen=True)
class GeodesicInterval:
    u: tuple[int, ...]
    w: tuple[int, ...]
    members: frozenset[tuple[int, ...]]


@dataclass(frozen=True)
class TreeProduct:
    """Cartesian product of trees; vertices are coordinate tuples."""

    factors: tuple[Tree, ...]

    def __post_init__(self) -> None:
        if not self.factors:
            raise GraphInputError("a tree product needs at least one factor")

    @property
    def k(self) -> int:
        return len(self.factors)

    @property
    def size(self) -> int:
        return prod(t.m for t in self.factors)

    def vertices(self) -> Iterable[tuple[int, ...]]:
        return itertools.product(*(range(t.m) for t in self.factors))

    def index_of(self, x: Sequence[int]) -> int:
        idx = 0
        for t, c in zip(self.factors, x):
            idx = idx * t.m + c
        return idx

    def check_vertex(self, x: Sequence[int]) -> tuple[int, ...]:
        if len(x) != self.k:
            raise GraphInputError(f"tuple {x} has the wrong arity for a {self.k}-factor product")
        for t, c in zip(self.factors, x):
            if not 0 <= c < t.m:
                raise GraphInputError(f"coordinate {c} out of range in {x}")
        return tuple(x)

    @cached_property
    def _factor_dist(self) -> tuple[tuple[list[int], ...], ...]:
        return tuple(tuple(t.distances_from(r) for r in range(t.m)) for t in self.factors)

    def distance(self, a: Sequence[int], b: Sequence[int]) -> int:
        a, b = self.check_vertex(a), self.check_vertex(b)
        return sum(self._factor_dist[i][a[i]][b[i]] for i in range(self.k))

    def interval_members(self, a: Sequence[int], b: Sequence[int]) -> frozenset[tuple[int, ...]]:
        a, b = self.check_vertex(a), self.check_vertex(b)
        axes = [self.factors[i].path(a[i], b[i]) for i in range(self.k)]
        return frozenset(itertools.product(*axes))

    def neighbors(self, x: Sequence[int]) -> list[tuple[int, ...]]:
        x = self.check_vertex(x)
        out = []
        for i, t in enumerate(self.factors):
            for a, b in t.edges:
                if x[i] == a:
                    out.append(x[:i] + (b,) + x[i + 1 :])
                elif x[i] == b:
                    out.append(x[:i] + (a,) + x[i + 1 :])
        return out


def product_distance(p: TreeProduct, a: Sequence[int], b: Sequence[int]) -> int:
    return p.distance(a, b)


def interval(p: TreeProduct, a: Sequence[int], b: Sequence[int]) -> GeodesicInterval:
    return GeodesicInterval(tuple(a), tuple(b), p.interval_members(a, b))


def median3(
    p: TreeProduct, a: Sequence[int], b: Sequence[int], c: Sequence[int]
) -> tuple[int, ...]:
    """Coordinatewise tree median: the unique common vertex of the three paths."""
    a, b, c = p.check_vertex(a), p.check_vertex(b), p.check_vertex(c)
    out = []
    for i, t in enumerate(p.factors):
        meet = (
            set(t.path(a[i], b[i])) & set(t.path(a[i], c[i])) & set(t.path(b[i], c[i]))
        )
        if len(meet) != 1:
            raise InternalInvariantError(f"tree median not unique on factor {i}")
        out.append(next(iter(meet)))
    return tuple(out)


def is_convex(
    p: TreeProduct, members: Iterable[Sequence[int]]
) -> tuple[bool, tuple | None]:
    """Geodesic convexity; on failure returns (u, w, x) with x on a u-w geodesic."""
    pts = [p.check_vertex(x) for x in members]
    ptset = set(pts)
    for i, u in enumerate(pts):
        for w in pts[i + 1 :]:
            for x in p.interval_members(u, w):
                if x not in ptset:
                    return False, (u, w, x)
    return True, None


@dataclass(frozen=True)
class MedianDecomposition:
    """Tree product plus one bag per product vertex (canonical vertex order)."""

    product: TreeProduct
    bag_list: tuple[frozenset[int], ...]
    host_n: int

    def __post_init__(self) -> None:
        if len(self.bag_list) != self.product.size:
            raise GraphInputError("one bag per product vertex required")

    def bag(self, x: Sequence[int]) -> frozenset[int]:
        return self.bag_list[self.product.index_of(self.product.check_vertex(x))]

    def preimage(self, v: int) -> list[tuple[int, ...]]:
        return [x for x, bag in zip(self.product.vertices(), self.bag_list) if v in bag]


def build_ktmd(
    g: Graph,
    tds: Sequence[TreeDecomposition],
    cap: int = DEFAULT_PRODUCT_CAP,
) -> MedianDecomposition:
    """Median decomposition from a decomposition family.

    The bag of a product vertex is the intersection of its coordinate bags;
    preimages are boxes (hence convex) unconditionally, and bags are cliques
    exactly when the family separates every non-edge.
    """
    if not tds:
        raise GraphInputError("empty decomposition family")
    for td in tds:
        verdict = verify_td(g, td)
        if not verdict:
            raise GraphInputError(f"invalid tree-decomposition: {verdict.reason} {verdict.witness}")
    product = TreeProduct(tuple(td.tree for td in tds))
    if product.size > cap:
        raise BudgetExceededError(
            f"product has {product.size} vertices, above the cap of {cap}"
        )
    bags = []
    for x in product.vertices():
        bag = tds[0].bags[x[0]]
        for i in range(1, len(tds)):
            bag = bag & tds[i].bags[x[i]]
        bags.append(frozenset(bag))
    return MedianDecomposition(product, tuple(bags), g.n)


def verify_complete_ktmd(
    g: Graph, md: MedianDecomposition, require_path_factors: bool = False
) -> Verdict:
    """Complete-decomposition check.

    (a) every vertex preimage is non-empty and convex, (b) every bag is a
    clique of g, (c) the preimages of every edge's ends intersect.  Under
    (a)-(c) the intersection graph of the preimages is exactly g.
    """
    if md.host_n != g.n:
        return Verdict.failed("host-size-mismatch", (md.host_n, g.n))
    if require_path_factors:
        for i, t in enumerate(md.product.factors):
            if not t.is_path():
                return Verdict.failed("factor-not-path", i)
    for bag in md.bag_list:
        for v in bag:
            if not 0 <= v < g.n:
                return Verdict.failed("bag-label-out-of-range", v)
    preimages = {v: md.preimage(v) for v in range(g.n)}
    for v in range(g.n):
        if not preimages[v]:
            return Verdict.failed("empty-preimage", v)
        convex, witness = is_convex(md.product, preimages[v])
        if not convex:
            return Verdict.failed("preimage-not-convex", (v, *witness))
    for x, bag in zip(md.product.vertices(), md.bag_list):
        members = sorted(bag)
        for i, u in enumerate(members):
            for w in members[i + 1 :]:
                if not g.has_edge(u, w):
                    return Verdict.failed("bag-not-clique", (x, u, w))
    for u, w in g.edges():
        pre_w = set(preimages[w])
        if not any(x in pre_w for x in preimages[u]):
            return Verdict.failed("edge-preimages-disjoint", (u, w))
    return Verdict.passed()


def factors_are_paths(p: TreeProduct) -> bool:
    return all(t.is_path() for t in p.factors)
