"""Exact chordality as a minimum set cover over minimal chordal fills.

Each chordal completion separates the non-edges it leaves unfilled, and a
family of completions witnesses chordality k exactly when its separated
sets cover all non-edges.  Any completion contains an inclusion-minimal one
whose separated set is a superset, so the candidate pool can be the minimal
fills alone without losing optimality; that pool is finite and complete at
desk scale, and a branch-and-bound cover search does the rest.

The constructive upper bound comes from a proper coloring: completing
everything outside one color class yields a split graph (clique plus stable
set), which is chordal, and the completions over all classes intersect back
to the input graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil
from typing import Sequence

from .chordal import (
    Triangulation,
    clique_tree,
    minimal_triangulations,
    recognize_chordal,
)
from .decomposition import (
    TreeDecomposition,
    completion_of,
    is_separating_family,
    verify_td,
)
from .graphs import (
    Coloring,
    Graph,
    GraphInputError,
    Verdict,
    bits,
    coloring_violation,
    graph_intersection,
    mask_of,
    non_edges,
)


@dataclass(frozen=True)
class SearchBudget:
    max_triangulations: int = 20_000
    max_nodes: int = 2_000_000
    time_hint_s: float | None = None

    def __post_init__(self) -> None:
        if self.max_triangulations < 1 or self.max_nodes < 1:
            raise GraphInputError("budget caps must be positive")
        if self.time_hint_s is not None and self.time_hint_s <= 0:
            raise GraphInputError("time hint must be positive")


@dataclass(frozen=True)
class ChordalityCertificate:
    completions: tuple[Triangulation, ...]
    claimed_k: int


@dataclass(frozen=True)
class ChordalityResult:
    k: int
    certificate: ChordalityCertificate
    exact: bool
    reason: str | None = None


def _greedy_coloring(g: Graph) -> Coloring:
    color = [-1] * g.n
    for v in range(g.n):
        used = {color[u] for u in bits(g.adj[v]) if color[u] >= 0}
        c = 0
        while c in used:
            c += 1
        color[v] = c
    count = max(color) + 1 if color else 0
    return Coloring(tuple(color), count, "greedy upper bound")


def chordality_upper_via_coloring(g: Graph, coloring: Coloring) -> ChordalityCertificate:
    """One split-graph completion per color class; certificate size = #colors."""
    if len(coloring.assignment) != g.n:
        raise GraphInputError("coloring length differs from vertex count")
    bad = coloring_violation(g, coloring.assignment)
    if bad is not None:
        raise GraphInputError(f"coloring is not proper: edge {bad} is monochromatic")
    classes = sorted({c for c in coloring.assignment})
    if not classes:
        classes = [0]  # empty graph: one vacuous class
    completions = []
    pairs = non_edges(g)
    for c in classes:
        members = {v for v in range(g.n) if coloring.assignment[v] == c}
        fill = [e for e in pairs if e[0] not in members and e[1] not in members]
        completions.append(Triangulation.from_fill(g, fill))
    return ChordalityCertificate(tuple(completions), len(classes))


def verify_certificate(g: Graph, cert: ChordalityCertificate) -> Verdict:
    """Every completion chordal and a supergraph, intersection exactly g."""
    if cert.claimed_k != len(cert.completions):
        return Verdict.failed("claimed-size-mismatch", (cert.claimed_k, len(cert.completions)))
    if not cert.completions:
        return Verdict.failed("empty-certificate")
    for idx, tri in enumerate(cert.completions):
        if tri.base != g or tri.result.n != g.n:
            return Verdict.failed("wrong-base-graph", idx)
        expected = set(g.edges()) | set(tri.fill)
        if set(tri.result.edges()) != expected:
            return Verdict.failed("inconsistent-completion", idx)
        witness = recognize_chordal(tri.result)
        if not witness.is_chordal:
            return Verdict.failed("completion-not-chordal", (idx, witness.hole))
    meet = graph_intersection([tri.result for tri in cert.completions])
    if meet != g:
        extra = next(e for e in meet.edges() if not g.has_edge(*e))
        return Verdict.failed("intersection-not-exact", extra)
    return Verdict.passed()


def _min_cover(
    cover_masks: Sequence[int], full: int, best_size: int, node_cap: int
) -> tuple[list[int] | None, bool]:
    """Exact minimum cover by branch-and-bound; (best cover, cap hit?)."""
    order = sorted(range(len(cover_masks)), key=lambda i: -cover_masks[i].bit_count())
    max_gain = cover_masks[order[0]].bit_count() if order else 0
    element_sets: dict[int, list[int]] = {}
    for e in bits(full):
        holders = [i for i in order if cover_masks[i] >> e & 1]
        if not holders:
            return None, False
        element_sets[e] = holders
    best: list[int] | None = None
    nodes = 0
    capped = False

    def rec(uncovered: int, chosen: list[int]) -> None:
        nonlocal best, best_size, nodes, capped
        nodes += 1
        if nodes > node_cap:
            capped = True
            return
        if uncovered == 0:
            best = list(chosen)
            best_size = len(chosen)
            return
        if len(chosen) + ceil(uncovered.bit_count() / max_gain) >= best_size:
            return
        pivot = min(bits(uncovered), key=lambda e: len(element_sets[e]))
        for i in element_sets[pivot]:
            if capped:
                return
            chosen.append(i)
            rec(uncovered & ~cover_masks[i], chosen)
            chosen.pop()

    rec(full, [])
    return best, capped


def chordality_exact(g: Graph, budget: SearchBudget | None = None) -> ChordalityResult:
    """Exact chordality with a verifying certificate, or a flagged upper bound.

    Exactness holds when the minimal-fill enumeration finished within budget
    and the cover search ran to completion; otherwise the best certificate
    found is returned with exact=False and the cap named in ``reason``.
    """
    budget = budget or SearchBudget()
    witness = recognize_chordal(g)
    if witness.is_chordal:
        cert = ChordalityCertificate((Triangulation.from_fill(g, ()),), 1)
        return ChordalityResult(1, cert, True)

    pairs = non_edges(g)
    index = {e: i for i, e in enumerate(pairs)}
    full = (1 << len(pairs)) - 1
    enum = minimal_triangulations(g, cap=budget.max_triangulations, state_cap=budget.max_nodes)
    candidates = list(enum.triangulations)
    cover_masks = [full & ~mask_of(index[e] for e in tri.fill) for tri in candidates]

    # greedy cover as the initial upper bound
    greedy: list[int] = []
    uncovered = full
    while uncovered:
        gains = [(uncovered & m).bit_count() for m in cover_masks]
        best_gain = max(gains, default=0)
        if best_gain == 0:
            greedy = []
            break
        pick = gains.index(best_gain)
        greedy.append(pick)
        uncovered &= ~cover_masks[pick]

    chi_cert = chordality_upper_via_coloring(g, _greedy_coloring(g))
    ub = min(len(greedy) if greedy else chi_cert.claimed_k, chi_cert.claimed_k)

    # ties prefer the cover certificate: it is the canonical triangulation-based one
    options: list[tuple[int, ChordalityCertificate]] = []
    cover, capped = _min_cover(cover_masks, full, ub + 1, budget.max_nodes)
    if cover is not None:
        tris = tuple(sorted((candidates[i] for i in cover), key=lambda t: t.fill))
        options.append((len(tris), ChordalityCertificate(tris, len(tris))))
    if greedy:
        tris = tuple(sorted((candidates[i] for i in greedy), key=lambda t: t.fill))
        options.append((len(tris), ChordalityCertificate(tris, len(tris))))
    options.append((chi_cert.claimed_k, chi_cert))
    k, cert = min(options, key=lambda kc: kc[0])

    if enum.complete and not capped:
        return ChordalityResult(k, cert, True)
    reason = "triangulation cap reached" if not enum.complete else "search node cap reached"
    return ChordalityResult(k, cert, False, reason)


def certificate_to_td_family(g: Graph, cert: ChordalityCertificate) -> list[TreeDecomposition]:
    """Clique trees of the completions; always a separating family of g."""
    verdict = verify_certificate(g, cert)
    if not verdict:
        raise GraphInputError(f"invalid certificate: {verdict.reason} {verdict.witness}")
    return [clique_tree(tri.result) for tri in cert.completions]


def td_family_to_certificate(
    g: Graph, tds: Sequence[TreeDecomposition]
) -> ChordalityCertificate:
    """Certificate from a separating family; completions read off the bags."""
    if not tds:
        raise GraphInputError("empty decomposition family")
    for td in tds:
        verdict = verify_td(g, td)
        if not verdict:
            raise GraphInputError(f"invalid tree-decomposition: {verdict.reason} {verdict.witness}")
    separating, missing = is_separating_family(g, tds)
    if not separating:
        raise GraphInputError(f"family does not separate non-edge {missing}")
    completions = []
    for td in tds:
        h = completion_of(g, td)
        fill = [e for e in h.edges() if not g.has_edge(*e)]
        completions.append(Triangulation.from_fill(g, fill))
    return ChordalityCertificate(tuple(completions), len(tds))
