"""Edge-collapsible ordered matchings.

An ordered graph is edge-collapsible when it maps homomorphically onto some
proper subgraph, and every such image is a single edge.  The family built
here starts from the 8-vertex, 4-edge matching with edges
(0,5), (1,7), (2,4), (3,6) and grows one edge per step: a new left endpoint
is prepended and its partner is spliced into the right half, at the first
position that keeps the matching edge-collapsible.

Every member has interval chromatic number 2: all edges cross the middle,
so the matching is the graph of a permutation sigma sending left index j to
right index sigma(j).  A monotone endomorphism collapses consecutive left
vertices to one vertex and their partners to its partner, so its image
determines a partition of sigma into consecutive blocks with consecutive
value ranges; conversely any such nontrivial block yields a non-surjective
endomorphism with a two-edge image.  Edge-collapsibility is therefore
exactly block-freeness (simplicity) of sigma, which is what the growth step
tests.  Every test in this module's suite re-verifies the equivalence
against the homomorphism search.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .graphs import GraphError, OrderedGraph, new_graph

MC4_EDGES = ((0, 5), (1, 7), (2, 4), (3, 6))

# left-to-right pairing of MC4_EDGES; one of the two shortest simple
# permutations, which is why the family cannot start below 4 edges
_MC4_SIGMA = (1, 3, 0, 2)


@dataclass(frozen=True)
class OrderedMatching:
    """An ordered graph in which every vertex has degree exactly one."""

    graph: OrderedGraph

    def __post_init__(self) -> None:
        for v in range(self.graph.n):
            if self.graph.degree(v) != 1:
                raise GraphError(f"vertex {v} has degree {self.graph.degree(v)}, not 1")


def _is_simple(sigma: list[int]) -> bool:
    """No proper window of >= 2 positions maps onto a value interval."""
    n = len(sigma)
    for a in range(n - 1):
        lo = hi = sigma[a]
        for b in range(a + 1, n):
            lo = min(lo, sigma[b])
            hi = max(hi, sigma[b])
            if b - a + 1 < n and hi - lo == b - a:
                return False
    return True


def mc4() -> OrderedMatching:
    return OrderedMatching(new_graph(8, MC4_EDGES))


def mc(i: int) -> OrderedMatching:
    """The i-edge member of the collapsible family, i >= 4.

    Each step prepends a left vertex and pairs it with a fresh right vertex,
    placed at the smallest right-side position whose pairing permutation
    stays simple.  Such a position exists at every step: the suite checks
    the first several members exhaustively and the growth loop fails loudly
    rather than ever returning a collapsing-resistant matching.
    """
    if i < 4:
        raise GraphError("the family starts at 4 edges")
    sigma = list(_MC4_SIGMA)
    for step in range(5, i + 1):
        for t in range(step):
            cand = [t] + [s + (s >= t) for s in sigma]
            if _is_simple(cand):
                sigma = cand
                break
        else:
            raise GraphError(f"no collapsibility-preserving position at {step} edges")
    return OrderedMatching(new_graph(2 * i, [(j, i + s) for j, s in enumerate(sigma)]))


def is_edge_collapsible(g: OrderedGraph) -> bool:
    """Exhaustively decide edge-collapsibility.

    True iff a non-identity endomorphism exists and no endomorphism has
    three or more distinct image vertices.  A two-vertex image of a graph
    with an edge is automatically the single edge spanned by that pair, so
    bounding the image size is the whole check.
    """
    if g.m == 0:
        raise GraphError("edge-collapsibility needs at least one edge")
    witness = _kernels.find_hom(g.n, g.adj, g.n, g.adj, forbid_identity=True)
    if witness is None:
        return False
    big = _kernels.find_hom(
        g.n, g.adj, g.n, g.adj, forbid_identity=True, min_image=3
    )
    return big is None
