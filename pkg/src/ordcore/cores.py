"""Ordered cores and the size-constrained subgraph solvers.

A monotone surjection of an ordered vertex set onto itself is the identity,
so an ordered graph has a non-surjective endomorphism exactly when it has a
non-identity one; the searches below therefore exclude the identity map and
nothing else.  Iterating homomorphic images shrinks the graph to its core,
which is unique up to re-indexing.  The composed collapse map restricted to
the surviving vertices is an endomorphism of the core, hence the identity,
so the composition is itself a retraction of the input onto the induced
subgraph on the surviving vertex set.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from . import _kernels
from .graphs import (
    GraphError,
    MonotoneMap,
    OrderedGraph,
    image_subgraph,
    interval_chromatic_number,
)
from .retraction import decide_retraction


def find_nonsurjective_endomorphism(
    g: OrderedGraph, descending: bool = False
) -> MonotoneMap | None:
    """A non-surjective ordered homomorphism g -> g, or None when g is a core.

    descending flips the backtracking candidate order; the default finds the
    lexicographically smallest witness.
    """
    res = _kernels.find_hom(
        g.n, g.adj, g.n, g.adj, forbid_identity=True, descending=descending
    )
    return MonotoneMap(tuple(res)) if res is not None else None


def is_core(g: OrderedGraph) -> bool:
    return find_nonsurjective_endomorphism(g) is None


@dataclass(frozen=True)
class CoreResult:
    """The core as an induced subgraph, with its embedding and a retraction.

    embedding[i] is the original index of core vertex i; retraction is an
    idempotent homomorphism of the input onto the induced subgraph on the
    embedded vertex set.
    """

    core: OrderedGraph
    embedding: tuple[int, ...]
    retraction: MonotoneMap


def compute_core(g: OrderedGraph, descending: bool = False) -> CoreResult:
    """Shrink g to its core by iterating non-surjective endomorphisms."""
    cur = g
    emb = tuple(range(g.n))
    total = MonotoneMap(tuple(range(g.n)))
    while True:
        f = find_nonsurjective_endomorphism(cur, descending)
        if f is None:
            break
        cur, verts = image_subgraph(cur, f)
        # lift the step to original indices and compose
        lifted = {emb[i]: emb[f(i)] for i in range(len(emb))}
        total = MonotoneMap(tuple(lifted[t] for t in total.image))
        emb = tuple(emb[i] for i in verts)
    return CoreResult(cur, emb, total)


def decide_core_with_k_vertices(
    g: OrderedGraph, k: int
) -> tuple[tuple[int, ...], MonotoneMap] | None:
    """First subset of at most k vertices admitting a retraction, with the map.

    k is a size budget: subsets are tried smallest size first, lexicographic
    within a size, running the polynomial retraction decision on each.  A
    proper retract exists iff one exists on at most n-1 vertices (the core
    itself qualifies), so a budget of n-1 succeeds exactly on non-cores;
    exact-size search lacks that property because retract sizes can skip
    values between the core size and n.  The exponential part is only the
    subset enumeration.
    """
    if not 1 <= k < g.n:
        raise GraphError(f"k={k} outside 1..{g.n - 1}")
    for size in range(1, k + 1):
        for x in combinations(range(g.n), size):
            r = decide_retraction(g, x)
            if r is not None:
                return x, r
    return None


@dataclass(frozen=True)
class CoreHasChiVertices:
    chi: int
    vertices: tuple[int, ...]
    retraction: MonotoneMap


@dataclass(frozen=True)
class InstanceIsCore:
    chi: int


@dataclass(frozen=True)
class Neither:
    chi: int
    core_size: int
    witness: MonotoneMap


CoreVerdict = CoreHasChiVertices | InstanceIsCore | Neither


def decide_core_chi(g: OrderedGraph) -> CoreVerdict:
    """Decide whether the core of g has exactly chi^<(g) vertices.

    Every endomorphic image spans at least chi^< independent intervals, so no
    core is smaller than chi^<; and a retract on exactly chi^< vertices is
    homomorphically equivalent to g, shares its interval chromatic number,
    and admits no non-identity endomorphism, hence is the core.  Computing
    the core therefore answers the question directly, with no need to
    enumerate k-subsets.  Inputs where the core is neither g itself nor of
    size chi^< are reported as Neither with a witness endomorphism.
    """
    k, _ = interval_chromatic_number(g)
    res = compute_core(g)
    if res.core.n == k and k < g.n:
        return CoreHasChiVertices(k, res.embedding, res.retraction)
    if res.core.n == g.n:
        return InstanceIsCore(k)
    return Neither(k, res.core.n, res.retraction)


@dataclass(frozen=True)
class SliceTargets:
    g: int
    h: int


@dataclass(frozen=True)
class DoubleTuple:
    t: tuple[int, ...]
    u: tuple[int, ...]


def _validate_targets(g: OrderedGraph, tgt: SliceTargets) -> None:
    if not 0 < tgt.g < g.n:
        raise GraphError(f"target vertex count {tgt.g} outside 1..{g.n - 1}")
    if not 0 <= tgt.h < g.m:
        raise GraphError(f"target edge count {tgt.h} outside 0..{g.m - 1}")


def _monotone_homs(g: OrderedGraph, verts: Sequence[int]) -> Iterator[tuple[int, ...]]:
    # all ordered homomorphisms from g into the induced subgraph on verts,
    # image written in original vertex indices
    def extend(prefix: list[int], start: int) -> Iterator[tuple[int, ...]]:
        i = len(prefix)
        if i == g.n:
            yield tuple(prefix)
            return
        for pos in range(start, len(verts)):
            t = verts[pos]
            ok = True
            m = g.adj[i] & ((1 << i) - 1)
            while m:
                lsb = m & -m
                u = lsb.bit_length() - 1
                if not g.has_edge(prefix[u], t) or prefix[u] == t:
                    ok = False
                    break
                m ^= lsb
            if ok:
                prefix.append(t)
                yield from extend(prefix, pos)
                prefix.pop()

    return extend([], 0)


def solve_slice(
    g: OrderedGraph, tgt: SliceTargets, strict_hom: bool = False
) -> tuple[tuple[int, ...], frozenset[tuple[int, int]], MonotoneMap] | None:
    """A proper subgraph H on exactly tgt.g vertices and tgt.h edges that g
    maps onto, or None.

    Vertex subsets are enumerated lexicographically.  In the default mode a
    subset X qualifies when a retraction r: g -> g[X] exists and
    |r(E)| <= h <= |E(g[X])|; H is then r(E) padded with further induced
    edges up to h.  With strict_hom the retraction requirement is dropped and
    all ordered homomorphisms into g[X] are tried, which is exploratory and
    much slower.
    """
    _validate_targets(g, tgt)
    for x in combinations(range(g.n), tgt.g):
        xset = set(x)
        induced_edges = sorted(
            e for e in g.edges if e[0] in xset and e[1] in xset
        )
        if len(induced_edges) < tgt.h:
            continue
        if strict_hom:
            r = None
            for image in _monotone_homs(g, x):
                cand = MonotoneMap(image)
                img_edges = {
                    (min(cand(u), cand(v)), max(cand(u), cand(v)))
                    for u, v in g.edges
                }
                if len(img_edges) <= tgt.h:
                    r = cand
                    break
            if r is None:
                continue
        else:
            r = decide_retraction(g, x)
            if r is None:
                continue
        img_edges = {
            (min(r(u), r(v)), max(r(u), r(v))) for u, v in g.edges
        }
        if not len(img_edges) <= tgt.h:
            continue
        h_edges = set(img_edges)
        for e in induced_edges:
            if len(h_edges) == tgt.h:
                break
            h_edges.add(e)
        return x, frozenset(h_edges), r
    return None


def solve_sub(
    g: OrderedGraph, dt: DoubleTuple
) -> tuple[tuple[int, ...], frozenset[tuple[int, int]], MonotoneMap] | None:
    """First success of solve_slice over the deficit grid, t-major order."""
    if not dt.t or not dt.u:
        raise GraphError("doubletuple lists must be nonempty")
    for t in dt.t:
        if not 0 < t < g.n:
            raise GraphError(f"vertex deficit {t} outside 1..{g.n - 1}")
    for u in dt.u:
        if not 0 < u < g.m:
            raise GraphError(f"edge deficit {u} outside 1..{g.m - 1}")
    for t in dt.t:
        for u in dt.u:
            res = solve_slice(g, SliceTargets(g.n - t, g.m - u))
            if res is not None:
                return res
    return None
