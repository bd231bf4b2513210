"""Hypothesis strategies for small graphs and trees."""

from __future__ import annotations

from hypothesis import strategies as st

from chorkit.decomposition import Tree
from chorkit.graphs import Graph


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.integers(0, (1 << len(pairs)) - 1)) if pairs else 0
    return Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


@st.composite
def trees(draw, min_m: int = 1, max_m: int = 9) -> Tree:
    m = draw(st.integers(min_m, max_m))
    # random attachment: node i>0 hangs off a draw from 0..i-1
    edges = [(draw(st.integers(0, i - 1)), i) for i in range(1, m)]
    return Tree.from_edges(m, edges)
