"""Seeded random instance builders shared by tests and the acceptance suite."""

from __future__ import annotations

import random

from chorkit.decomposition import Tree, TreeDecomposition, tree_pathwidth, tree_radius
from chorkit.formats import random_tree
from chorkit.graphs import Graph, bits


def random_subtree(tree: Tree, rng: random.Random, max_size: int = 3) -> frozenset[int]:
    """Connected node set grown from a random start."""
    members = {rng.randrange(tree.m)}
    target = rng.randint(1, max_size)
    while len(members) < target:
        boundary = sorted(
            u
            for v in members
            for u in bits(tree.neighbor_masks[v])
            if u not in members
        )
        if not boundary:
            break
        members.add(rng.choice(boundary))
    return frozenset(members)


def representation_of_subtrees(
    tree: Tree, n_vertices: int, rng: random.Random, max_size: int = 3
) -> tuple[Graph, TreeDecomposition, list[frozenset[int]]]:
    """Intersection graph of random subtrees plus its (complete) representation."""
    subs = [random_subtree(tree, rng, max_size) for _ in range(n_vertices)]
    bags = tuple(
        frozenset(v for v, s in enumerate(subs) if t in s) for t in range(tree.m)
    )
    edges = [
        (u, v)
        for u in range(n_vertices)
        for v in range(u + 1, n_vertices)
        if subs[u] & subs[v]
    ]
    g = Graph.from_edges(n_vertices, edges)
    return g, TreeDecomposition(tree, bags, n_vertices), subs


def tree_with_pathwidth_at_most(rng: random.Random, nodes: int, k: int) -> Tree:
    while True:
        t = random_tree(nodes, rng)
        if tree_pathwidth(t) <= k:
            return t


def tree_with_radius_at_most(rng: random.Random, nodes: int, k: int) -> Tree:
    while True:
        t = random_tree(nodes, rng)
        if tree_radius(t)[0] <= k:
            return t
