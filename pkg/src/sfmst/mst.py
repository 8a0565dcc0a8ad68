"""Minimum weight spanning trees.

`kruskal` is the production algorithm (sort + union-find, the hot path
runs through the kernel backend); `prim` is an independent heap-based
implementation kept for cross-validation; `brute_force_mst` enumerates
every spanning tree of small graphs and serves as the exact oracle.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, NamedTuple

import numpy as np

from . import _kernels
from .graph import (
    Edge,
    EdgeNotInGraphError,
    FileFormatError,
    GraphError,
    WeightedGraph,
    format_number,
    is_connected,
    read_edge_list,
)
from .unionfind import UnionFind

__all__ = [
    "DisconnectedGraphError",
    "GraphTooLargeError",
    "SpanningTree",
    "KruskalStep",
    "VerifyResult",
    "kruskal",
    "kruskal_with_trace",
    "prim",
    "brute_force_mst",
    "is_feasible_extension",
    "verify_spanning_tree",
    "write_tree",
    "read_tree",
]

# Relative tolerance for float weight accumulation comparisons.
WEIGHT_RTOL = 1e-9


class DisconnectedGraphError(GraphError):
    """The graph has no spanning tree; carries the component count."""

    def __init__(self, n_components: int):
        super().__init__(f"graph is disconnected: {n_components} components")
        self.n_components = n_components


class GraphTooLargeError(GraphError):
    """Exhaustive spanning-tree enumeration refused for n_nodes > 10."""


class SpanningTree:
    """Spanning tree given by its edge set and total weight.

    The edge set is exposed both as `edges` (a tuple of `Edge`, built
    lazily) and as raw endpoint arrays; large trees coming out of
    `kruskal` avoid materializing per-edge objects until asked.
    """

    __slots__ = ("n_nodes", "total_weight", "_edges", "_tu", "_tv")

    def __init__(self, n_nodes: int, edges: Iterable[Edge], total_weight: float):
        self.n_nodes = int(n_nodes)
        self.total_weight = float(total_weight)
        self._edges: tuple[Edge, ...] | None = tuple(edges)
        self._tu: np.ndarray | None = None
        self._tv: np.ndarray | None = None

    @classmethod
    def _from_arrays(
        cls, n_nodes: int, tu: np.ndarray, tv: np.ndarray, total_weight: float
    ) -> "SpanningTree":
        t = cls.__new__(cls)
        t.n_nodes = int(n_nodes)
        t.total_weight = float(total_weight)
        t._edges = None
        t._tu = tu
        t._tv = tv
        return t

    @property
    def edges(self) -> tuple[Edge, ...]:
        if self._edges is None:
            from .graph import _edge_unchecked

            self._edges = tuple(
                _edge_unchecked(u, v) for u, v in zip(self._tu.tolist(), self._tv.tolist())
            )
        return self._edges

    @property
    def n_edges(self) -> int:
        return len(self._edges) if self._edges is not None else int(self._tu.size)

    def edge_endpoint_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """Endpoint arrays ``(u, v)`` of the tree edges, canonical order per edge."""
        if self._tu is None:
            self._tu = np.fromiter((e.u for e in self._edges), np.int64, len(self._edges))
            self._tv = np.fromiter((e.v for e in self._edges), np.int64, len(self._edges))
        return self._tu, self._tv

    def __repr__(self) -> str:
        return (
            f"SpanningTree(n_nodes={self.n_nodes}, n_edges={self.n_edges}, "
            f"total_weight={self.total_weight})"
        )


class KruskalStep(NamedTuple):
    edge: Edge
    weight: float
    accepted: bool


@dataclass(frozen=True)
class VerifyResult:
    """Outcome of a spanning-tree check: `ok` plus a short reason code."""

    ok: bool
    reason: str

    def __bool__(self) -> bool:
        return self.ok


def _sorted_edge_order(g: WeightedGraph) -> np.ndarray:
    # Increasing weight; ties broken by canonical edge (u, then v) for
    # deterministic, reproducible runs.
    eu, ev, ew = g.edge_arrays
    return np.lexsort((ev, eu, ew))


def kruskal(g: WeightedGraph) -> SpanningTree:
    """Minimum weight spanning tree via sorted edges + union-find.

    Deterministic for a fixed graph: equal weights are processed in
    canonical edge order. Raises `DisconnectedGraphError` when fewer than
    ``n - 1`` edges get accepted.
    """
    n = g.n_nodes
    if n == 0:
        raise GraphError("cannot span an empty node set")
    if n == 1:
        return SpanningTree(1, (), 0.0)
    eu, ev, ew = g.edge_arrays
    order = _sorted_edge_order(g)
    su, sv, sw = eu[order], ev[order], ew[order]
    accept = _kernels.kruskal_accept(n, np.ascontiguousarray(su), np.ascontiguousarray(sv))
    n_accepted = int(accept.sum())
    if n_accepted < n - 1:
        raise DisconnectedGraphError(n - n_accepted)
    total = float(sw[accept].sum())
    return SpanningTree._from_arrays(n, su[accept], sv[accept], total)


def kruskal_with_trace(g: WeightedGraph) -> tuple[SpanningTree, list[KruskalStep]]:
    """As `kruskal`, but also report the accept/discard decision per edge.

    Intended for small instances; the trace is a Python list over all
    edges in processing order.
    """
    n = g.n_nodes
    if n == 0:
        raise GraphError("cannot span an empty node set")
    eu, ev, ew = g.edge_arrays
    order = _sorted_edge_order(g)
    su, sv, sw = eu[order], ev[order], ew[order]
    accept = _kernels.kruskal_accept(n, np.ascontiguousarray(su), np.ascontiguousarray(sv))
    steps = [
        KruskalStep(Edge(u, v), w, bool(a))
        for u, v, w, a in zip(su.tolist(), sv.tolist(), sw.tolist(), accept.tolist())
    ]
    n_accepted = int(accept.sum())
    if n > 1 and n_accepted < n - 1:
        raise DisconnectedGraphError(n - n_accepted)
    edges = tuple(s.edge for s in steps if s.accepted)
    total = float(sw[accept].sum())
    return SpanningTree(max(n, 1), edges, total), steps


def prim(g: WeightedGraph, start: int = 0) -> SpanningTree:
    """Minimum weight spanning tree via a binary heap with lazy deletion.

    Independent of `kruskal`; used as a cross-check. Matches Kruskal's
    total weight exactly on integer weights and within accumulation
    tolerance otherwise (the edge sets may differ only under weight ties).
    """
    n = g.n_nodes
    if n == 0:
        raise GraphError("cannot span an empty node set")
    g._check_node(start)
    if n == 1:
        return SpanningTree(1, (), 0.0)
    _, _, ew = g.edge_arrays
    in_tree = np.zeros(n, dtype=bool)
    in_tree[start] = True
    heap: list[tuple[float, int, int]] = []

    def push_frontier(i: int) -> None:
        nodes, eids = g.adjacency(i)
        for j, eid in zip(nodes.tolist(), eids.tolist()):
            if not in_tree[j]:
                heapq.heappush(heap, (float(ew[eid]), i, j))

    push_frontier(start)
    edges: list[Edge] = []
    total = 0.0
    while heap and len(edges) < n - 1:
        w, i, j = heapq.heappop(heap)
        if in_tree[j]:
            continue
        in_tree[j] = True
        edges.append(Edge(i, j))
        total += w
        push_frontier(j)
    if len(edges) < n - 1:
        eu, ev, _ = g.edge_arrays
        raise DisconnectedGraphError(int(_kernels.count_components(n, eu, ev)))
    return SpanningTree(n, tuple(edges), total)


def brute_force_mst(g: WeightedGraph) -> tuple[float, list[frozenset[Edge]]]:
    """Exact minimum weight and ALL optimal spanning trees, by enumeration.

    Backtracks over the edge list with cycle and edge-count pruning;
    refuses graphs with more than 10 nodes. This is the test oracle and
    deliberately shares no machinery with `kruskal`/`prim`.
    """
    n = g.n_nodes
    if n > 10:
        raise GraphTooLargeError(f"refusing exhaustive enumeration for n_nodes={n} > 10")
    if n == 0:
        raise GraphError("cannot span an empty node set")
    if not is_connected(g):
        eu, ev, _ = g.edge_arrays
        raise DisconnectedGraphError(int(_kernels.count_components(n, eu, ev)))
    if n == 1:
        return 0.0, [frozenset()]
    triples = [(Edge(u, v), w) for (u, v, w) in zip(*(a.tolist() for a in g.edge_arrays))]
    m = len(triples)
    need = n - 1
    nonneg = all(w >= 0 for _, w in triples)
    best_w = math.inf
    best_trees: list[frozenset[Edge]] = []
    selection: list[Edge] = []

    def root(parent: list[int], i: int) -> int:
        while parent[i] != i:
            i = parent[i]
        return i

    def rec(i: int, taken: int, weight: float, parent: list[int]) -> None:
        nonlocal best_w, best_trees
        if taken == need:
            tol = 1e-12 * max(1.0, abs(best_w)) if best_trees else 0.0
            if weight < best_w - tol:
                best_w = weight
                best_trees = [frozenset(selection)]
            elif abs(weight - best_w) <= tol:
                best_trees.append(frozenset(selection))
            return
        if m - i < need - taken:
            return
        if nonneg and best_trees and weight > best_w + 1e-12 * max(1.0, abs(best_w)):
            return
        e, w = triples[i]
        ru, rv = root(parent, e.u), root(parent, e.v)
        if ru != rv:
            merged = list(parent)
            merged[rv] = ru
            selection.append(e)
            rec(i + 1, taken + 1, weight + w, merged)
            selection.pop()
        rec(i + 1, taken, weight, parent)

    rec(0, 0, 0.0, list(range(n)))
    return best_w, best_trees


def is_feasible_extension(g: WeightedGraph, partial: Iterable[Edge], e: Edge) -> bool:
    """Cut-property check: can ``e`` safely extend the partial tree?

    True iff ``e`` joins two distinct components of ``partial`` and has
    minimum weight among the edges crossing the cut (component of one
    endpoint versus the rest).
    """
    if not g.has_edge(e):
        raise EdgeNotInGraphError(f"edge {(e.u, e.v)} not in graph")
    uf = UnionFind(g.n_nodes)
    for p in partial:
        ru, rv = uf.find(p.u), uf.find(p.v)
        if ru != rv:
            uf.union(ru, rv)
    if uf.same_set(e.u, e.v):
        return False
    root_u = uf.find(e.u)
    in_c = np.fromiter((uf.find(i) == root_u for i in range(g.n_nodes)), dtype=bool)
    eu, ev, ew = g.edge_arrays
    crossing = in_c[eu] != in_c[ev]
    wmin = float(ew[crossing].min())
    return g.edge_weight(e) <= wmin + WEIGHT_RTOL * max(1.0, abs(wmin))


def verify_spanning_tree(g: WeightedGraph, t: SpanningTree) -> VerifyResult:
    """Structural check of ``t`` against ``g``; never raises.

    Reason codes: ``node-count``, ``edge-count``, ``unknown-edge``,
    ``cycle``, ``weight-mismatch``, or ``ok``. With exactly ``n - 1``
    acyclic edges the tree necessarily spans all nodes.
    """
    n = g.n_nodes
    if t.n_nodes != n:
        return VerifyResult(False, "node-count")
    tu, tv = t.edge_endpoint_arrays()
    if tu.size != max(n - 1, 0):
        return VerifyResult(False, "edge-count")
    total = 0.0
    if tu.size:
        try:
            total = float(g.edge_weights(tu, tv).sum())
        except EdgeNotInGraphError:
            return VerifyResult(False, "unknown-edge")
        accept = _kernels.kruskal_accept(n, tu, tv)
        if not accept.all():
            return VerifyResult(False, "cycle")
    if abs(total - t.total_weight) > WEIGHT_RTOL * max(1.0, abs(total)):
        return VerifyResult(False, "weight-mismatch")
    return VerifyResult(True, "ok")


# -- tree files -----------------------------------------------------------


def write_tree(t: SpanningTree, g: WeightedGraph, path: str | Path) -> None:
    """Serialize a tree in edge-list format with a `# tree weight=` header."""
    tu, tv = t.edge_endpoint_arrays()
    weights = g.edge_weights(tu, tv)
    with open(path, "w") as fh:
        fh.write(f"# nodes={t.n_nodes} edges={t.n_edges}\n")
        fh.write(f"# tree weight={format_number(t.total_weight)}\n")
        for u, v, w in zip(tu.tolist(), tv.tolist(), weights.tolist()):
            fh.write(f"{u} {v} {format_number(w)}\n")


def read_tree(path: str | Path) -> SpanningTree:
    """Load a tree file written by `write_tree`."""
    n_nodes, triples, meta = read_edge_list(path)
    if "tree" not in meta or "weight" not in meta:
        raise FileFormatError(f"{path}: missing `# tree weight=` header")
    try:
        total = float(meta["weight"])
    except ValueError:
        raise FileFormatError(f"{path}: bad tree weight {meta['weight']!r}") from None
    edges = tuple(Edge(u, v) for u, v, _ in triples)
    return SpanningTree(n_nodes, edges, total)
