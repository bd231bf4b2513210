"""Serialization and generators: graph6, edge lists, JSON schemas, families.

graph6 is the interchange format for small-graph sweeps; edge lists are for
hand-written inputs.  Certificates, decompositions, median decompositions,
and colorings all have stable JSON shapes so reports can be re-verified
bit-exactly.
"""

from __future__ import annotations

import heapq
import random
from typing import Any, Sequence

from .chordal import Triangulation
from .decomposition import Tree, TreeDecomposition
from .engine import ChordalityCertificate
from .graphs import Coloring, Graph, GraphInputError
from .median import MedianDecomposition, TreeProduct

GRAPH6_HEADER = ">>graph6<<"


def _g6_size(data: str, offset: int) -> tuple[int, int]:
    if offset >= len(data):
        raise GraphInputError(f"graph6: missing size at byte {offset}")
    c = ord(data[offset])
    if c == 126:  # '~'
        if offset + 4 > len(data):
            raise GraphInputError(f"graph6: truncated long size at byte {offset}")
        if data[offset + 1] == "~":
            raise GraphInputError(f"graph6: sizes above 258047 unsupported (byte {offset})")
        vals = []
        for i in range(1, 4):
            ci = ord(data[offset + i])
            if not 63 <= ci <= 126:
                raise GraphInputError(f"graph6: bad size byte at {offset + i}")
            vals.append(ci - 63)
        return (vals[0] << 12) | (vals[1] << 6) | vals[2], offset + 4
    if not 63 <= c <= 125:
        raise GraphInputError(f"graph6: bad size byte at {offset}")
    return c - 63, offset + 1


def parse_graph6(text: str) -> Graph:
    """One graph6 line -> Graph; malformed bytes are reported by offset."""
    data = text.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER) :]
    if not data:
        raise GraphInputError("graph6: empty input")
    n, offset = _g6_size(data, 0)
    k = n * (n - 1) // 2
    need = (k + 5) // 6
    if len(data) - offset != need:
        raise GraphInputError(
            f"graph6: expected {need} data bytes for n={n}, got {len(data) - offset}"
        )
    bits_list = []
    for i in range(need):
        c = ord(data[offset + i])
        if not 63 <= c <= 126:
            raise GraphInputError(f"graph6: bad data byte at {offset + i}")
        v = c - 63
        bits_list.extend((v >> (5 - j)) & 1 for j in range(6))
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits_list[pos]:
                edges.append((i, j))
            pos += 1
    return Graph.from_edges(n, edges)


def emit_graph6(g: Graph) -> str:
    if g.n <= 62:
        head = chr(g.n + 63)
    elif g.n <= 258047:
        head = "~" + chr(((g.n >> 12) & 63) + 63) + chr(((g.n >> 6) & 63) + 63) + chr((g.n & 63) + 63)
    else:
        raise GraphInputError("graph6: sizes above 258047 unsupported")
    flat = []
    for j in range(1, g.n):
        for i in range(j):
            flat.append(1 if g.has_edge(i, j) else 0)
    while len(flat) % 6:
        flat.append(0)
    body = "".join(
        chr(63 + sum(flat[i + j] << (5 - j) for j in range(6)))
        for i in range(0, len(flat), 6)
    )
    return head + body


def parse_edge_list(text: str) -> Graph:
    """Lines of "u v", optional "n <count>" declaration, '#' comments."""
    n_declared: int | None = None
    edges: list[tuple[int, int]] = []
    consumed = 0
    for raw in text.splitlines(keepends=True):
        line = raw.split("#", 1)[0].strip()
        if line:
            parts = line.split()
            if parts[0] == "n" and len(parts) == 2:
                try:
                    n_declared = int(parts[1])
                except ValueError:
                    raise GraphInputError(f"edge list: bad vertex count at byte {consumed}")
            elif len(parts) == 2:
                try:
                    u, v = int(parts[0]), int(parts[1])
                except ValueError:
                    raise GraphInputError(f"edge list: bad edge at byte {consumed}")
                edges.append((u, v))
            else:
                raise GraphInputError(f"edge list: malformed line at byte {consumed}")
        consumed += len(raw)
    n = n_declared if n_declared is not None else (max((max(e) for e in edges), default=-1) + 1)
    return Graph.from_edges(n, edges)


def emit_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_graph(text: str, fmt: str) -> Graph:
    if fmt == "g6":
        return parse_graph6(text)
    if fmt == "edges":
        return parse_edge_list(text)
    raise GraphInputError(f"unknown graph format {fmt!r}")


def emit_graph(g: Graph, fmt: str) -> str:
    if fmt == "g6":
        return emit_graph6(g) + "\n"
    if fmt == "edges":
        return emit_edge_list(g)
    raise GraphInputError(f"unknown graph format {fmt!r}")


# -- generators ----------------------------------------------------------------


def generate(
    family: str,
    *,
    n: int | None = None,
    p: float | None = None,
    rows: int | None = None,
    cols: int | None = None,
    seed: int | None = None,
) -> Graph:
    """Deterministic graph families; randomized ones require a seed."""
    if family == "cn":
        if n is None or n < 3:
            raise GraphInputError("cycle needs n >= 3")
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if family == "kn":
        if n is None or n < 0:
            raise GraphInputError("complete graph needs n >= 0")
        return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if family == "kn_minus_edge":
        if n is None or n < 2:
            raise GraphInputError("complete-minus-edge needs n >= 2")
        return Graph.from_edges(
            n, [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) != (0, 1)]
        )
    if family == "gnp":
        if n is None or n < 0 or p is None or not 0 <= p <= 1:
            raise GraphInputError("gnp needs n >= 0 and p in [0,1]")
        if seed is None:
            raise GraphInputError("gnp needs a seed")
        rng = random.Random(seed)
        return Graph.from_edges(
            n,
            [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p],
        )
    if family == "random_tree":
        if n is None or n < 1:
            raise GraphInputError("random tree needs n >= 1")
        if seed is None:
            raise GraphInputError("random tree needs a seed")
        return Graph.from_edges(n, random_tree(n, random.Random(seed)).edges)
    if family == "grid":
        if rows is None or cols is None or rows < 1 or cols < 1:
            raise GraphInputError("grid needs rows >= 1 and cols >= 1")
        edges = []
        for r in range(rows):
            for c in range(cols):
                if c + 1 < cols:
                    edges.append((r * cols + c, r * cols + c + 1))
                if r + 1 < rows:
                    edges.append((r * cols + c, (r + 1) * cols + c))
        return Graph.from_edges(rows * cols, edges)
    raise GraphInputError(f"unknown family {family!r}")


def random_tree(n: int, rng: random.Random) -> Tree:
    """Uniform labeled tree by Pruefer decoding."""
    if n == 1:
        return Tree(1, ())
    if n == 2:
        return Tree(2, ((0, 1),))
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Tree.from_edges(n, edges)


# -- JSON shapes ----------------------------------------------------------------


def tree_to_json(t: Tree) -> dict[str, Any]:
    return {"nodes": t.m, "edges": [list(e) for e in t.edges]}


def tree_from_json(obj: dict[str, Any]) -> Tree:
    try:
        return Tree.from_edges(int(obj["nodes"]), [tuple(e) for e in obj["edges"]])
    except (KeyError, TypeError) as exc:
        raise GraphInputError(f"malformed tree object: {exc}")


def td_to_json(td: TreeDecomposition) -> dict[str, Any]:
    return {
        "tree": tree_to_json(td.tree),
        "bags": [sorted(bag) for bag in td.bags],
    }


def td_from_json(obj: dict[str, Any], host_n: int) -> TreeDecomposition:
    try:
        tree = tree_from_json(obj["tree"])
        bags = tuple(frozenset(int(v) for v in bag) for bag in obj["bags"])
    except (KeyError, TypeError) as exc:
        raise GraphInputError(f"malformed decomposition object: {exc}")
    return TreeDecomposition(tree, bags, host_n)


def certificate_to_json(cert: ChordalityCertificate) -> dict[str, Any]:
    return {
        "k": cert.claimed_k,
        "completions": [[list(e) for e in tri.fill] for tri in cert.completions],
    }


def certificate_from_json(g: Graph, obj: dict[str, Any]) -> ChordalityCertificate:
    try:
        fills = [tuple(tuple(int(x) for x in e) for e in fill) for fill in obj["completions"]]
        k = int(obj["k"])
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphInputError(f"malformed certificate object: {exc}")
    return ChordalityCertificate(
        tuple(Triangulation.from_fill(g, fill) for fill in fills), k
    )


def md_to_json(md: MedianDecomposition) -> dict[str, Any]:
    return {
        "factors": [tree_to_json(t) for t in md.product.factors],
        "bags": [
            [list(x), sorted(bag)]
            for x, bag in zip(md.product.vertices(), md.bag_list)
        ],
    }


def md_from_json(obj: dict[str, Any], host_n: int) -> MedianDecomposition:
    try:
        product = TreeProduct(tuple(tree_from_json(t) for t in obj["factors"]))
        by_coord = {tuple(int(c) for c in x): frozenset(int(v) for v in bag) for x, bag in obj["bags"]}
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphInputError(f"malformed median decomposition object: {exc}")
    bags = []
    for x in product.vertices():
        if x not in by_coord:
            raise GraphInputError(f"median decomposition misses the bag of {x}")
        bags.append(by_coord[x])
    return MedianDecomposition(product, tuple(bags), host_n)


def coloring_to_json(col: Coloring) -> dict[str, Any]:
    return {
        "colors_used": col.colors_used,
        "bound_claimed": col.bound_claimed,
        "bound_formula": col.bound_formula,
        "assignment": list(col.assignment),
    }


def interval_model_to_json(model: Sequence[tuple[int, int]]) -> list[list[int]]:
    return [list(span) for span in model]
