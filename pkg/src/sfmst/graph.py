"""Graph primitives: undirected weighted graphs, cuts, and the edge-list text format.

Node ids are dense 0-based integers. Edges are canonicalized so that
``u < v``; self-edges and parallel edges are rejected at construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

__all__ = [
    "GraphError",
    "SelfEdgeError",
    "DuplicateEdgeError",
    "NodeRangeError",
    "NonFiniteWeightError",
    "EmptyCutSideError",
    "NoCrossingEdgeError",
    "EdgeNotInGraphError",
    "FileFormatError",
    "Edge",
    "WeightedGraph",
    "Cut",
    "build_graph",
    "degree",
    "crosses_cut",
    "candidate_edges",
    "is_connected",
    "read_edge_list",
    "read_graph",
    "write_graph",
    "format_number",
]


class GraphError(Exception):
    """Base class for graph construction and query errors."""


class SelfEdgeError(GraphError):
    """An edge joins a node to itself."""


class DuplicateEdgeError(GraphError):
    """The same unordered node pair appears more than once."""


class NodeRangeError(GraphError):
    """A node id falls outside [0, n_nodes)."""


class NonFiniteWeightError(GraphError):
    """An edge weight is NaN or infinite."""


class EmptyCutSideError(GraphError):
    """A cut must leave both sides of the partition non-empty."""


class NoCrossingEdgeError(GraphError):
    """No edge crosses the given cut."""


class EdgeNotInGraphError(GraphError):
    """The queried edge is not part of the graph."""


class FileFormatError(GraphError):
    """An edge-list file is malformed."""


@dataclass(frozen=True, order=True)
class Edge:
    """Undirected edge; endpoints are stored in canonical order ``u < v``."""

    u: int
    v: int

    def __post_init__(self) -> None:
        if self.u == self.v:
            raise SelfEdgeError(f"self-edge at node {self.u}")
        if self.u > self.v:
            u, v = self.v, self.u
            object.__setattr__(self, "u", u)
            object.__setattr__(self, "v", v)


def _edge_unchecked(u: int, v: int) -> Edge:
    # Fast path for endpoints already known to satisfy u < v.
    e = object.__new__(Edge)
    object.__setattr__(e, "u", u)
    object.__setattr__(e, "v", v)
    return e


class WeightedGraph:
    """Immutable simple undirected graph with per-edge real weights.

    Edges keep their (canonicalized) construction order. Adjacency is a
    CSR-style structure built once; the graph is safe to share across
    concurrent readers afterwards.
    """

    __slots__ = (
        "n_nodes",
        "_eu",
        "_ev",
        "_ew",
        "_indptr",
        "_adj_nodes",
        "_adj_eids",
        "_edge_index",
        "_key_order",
        "_sorted_keys",
    )

    def __init__(self, n_nodes: int, eu: np.ndarray, ev: np.ndarray, ew: np.ndarray):
        self.n_nodes = int(n_nodes)
        self._eu = eu
        self._ev = ev
        self._ew = ew
        for a in (eu, ev, ew):
            a.setflags(write=False)
        self._build_adjacency()
        self._edge_index = None
        self._key_order = None
        self._sorted_keys = None

    @classmethod
    def from_arrays(
        cls,
        n_nodes: int,
        eu: np.ndarray,
        ev: np.ndarray,
        ew: np.ndarray,
        *,
        validate: bool = True,
    ) -> "WeightedGraph":
        """Build a graph from parallel edge arrays (``eu[i] < ev[i]`` once canonicalized).

        With ``validate=False`` the caller guarantees a simple graph with
        in-range endpoints, canonical order, and finite weights.
        """
        eu = np.ascontiguousarray(eu, dtype=np.int64)
        ev = np.ascontiguousarray(ev, dtype=np.int64)
        ew = np.ascontiguousarray(ew, dtype=np.float64)
        if not (eu.shape == ev.shape == ew.shape) or eu.ndim != 1:
            raise GraphError("edge arrays must be 1-d and of equal length")
        if validate:
            n = int(n_nodes)
            if n < 0:
                raise GraphError(f"n_nodes must be non-negative, got {n}")
            if eu.size:
                lo = min(eu.min(), ev.min())
                hi = max(eu.max(), ev.max())
                if lo < 0 or hi >= n:
                    bad = np.flatnonzero((eu < 0) | (eu >= n) | (ev < 0) | (ev >= n))[0]
                    raise NodeRangeError(
                        f"edge {int(eu[bad]), int(ev[bad])} has endpoint outside [0, {n})"
                    )
                selfs = eu == ev
                if selfs.any():
                    i = int(np.flatnonzero(selfs)[0])
                    raise SelfEdgeError(f"self-edge at node {int(eu[i])}")
                swap = eu > ev
                if swap.any():
                    eu, ev = eu.copy(), ev.copy()
                    eu[swap], ev[swap] = ev[swap], eu[swap]
                if not np.isfinite(ew).all():
                    i = int(np.flatnonzero(~np.isfinite(ew))[0])
                    raise NonFiniteWeightError(
                        f"edge {int(eu[i]), int(ev[i])} has non-finite weight {ew[i]!r}"
                    )
                keys = eu * np.int64(n) + ev
                uniq, counts = np.unique(keys, return_counts=True)
                if (counts > 1).any():
                    k = int(uniq[np.flatnonzero(counts > 1)[0]])
                    raise DuplicateEdgeError(f"duplicate edge {(k // n, k % n)}")
        return cls(int(n_nodes), eu, ev, ew)

    def _build_adjacency(self) -> None:
        n, m = self.n_nodes, self._eu.size
        ends = np.concatenate([self._eu, self._ev])
        other = np.concatenate([self._ev, self._eu])
        eids = np.concatenate([np.arange(m), np.arange(m)])
        order = np.argsort(ends, kind="stable")
        counts = np.bincount(ends, minlength=n) if m else np.zeros(n, dtype=np.int64)
        self._indptr = np.concatenate([[0], np.cumsum(counts)]).astype(np.int64)
        self._adj_nodes = other[order]
        self._adj_eids = eids[order]
        self._indptr.setflags(write=False)
        self._adj_nodes.setflags(write=False)
        self._adj_eids.setflags(write=False)

    # -- basic queries ----------------------------------------------------

    @property
    def n_edges(self) -> int:
        return int(self._eu.size)

    @property
    def edge_arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Read-only views ``(u, v, w)`` of the edge list."""
        return self._eu, self._ev, self._ew

    @property
    def total_weight(self) -> float:
        return float(self._ew.sum())

    def edges(self) -> Iterator[tuple[Edge, float]]:
        for u, v, w in zip(self._eu.tolist(), self._ev.tolist(), self._ew.tolist()):
            yield Edge(u, v), w

    def _check_node(self, i: int) -> int:
        i = int(i)
        if not 0 <= i < self.n_nodes:
            raise NodeRangeError(f"node {i} outside [0, {self.n_nodes})")
        return i

    def degrees(self) -> np.ndarray:
        """Degree of every node, as an int64 array."""
        return np.diff(self._indptr)

    def adjacency(self, i: int) -> tuple[np.ndarray, np.ndarray]:
        """Neighbors of node ``i`` and the indices of the connecting edges."""
        i = self._check_node(i)
        lo, hi = self._indptr[i], self._indptr[i + 1]
        return self._adj_nodes[lo:hi], self._adj_eids[lo:hi]

    def _index(self) -> dict[tuple[int, int], int]:
        if self._edge_index is None:
            self._edge_index = {
                (u, v): i for i, (u, v) in enumerate(zip(self._eu.tolist(), self._ev.tolist()))
            }
        return self._edge_index

    def has_edge(self, e: Edge) -> bool:
        return (e.u, e.v) in self._index()

    def edge_weight(self, e: Edge) -> float:
        try:
            return float(self._ew[self._index()[(e.u, e.v)]])
        except KeyError:
            raise EdgeNotInGraphError(f"edge {(e.u, e.v)} not in graph") from None

    def edge_weights(self, us: np.ndarray, vs: np.ndarray) -> np.ndarray:
        """Vectorized weight lookup for many edges; orientation-insensitive."""
        us = np.asarray(us, dtype=np.int64)
        vs = np.asarray(vs, dtype=np.int64)
        if us.size == 0:
            return np.empty(0, dtype=np.float64)
        lo = np.minimum(us, vs)
        hi = np.maximum(us, vs)
        n = self.n_nodes
        if int(lo.min()) < 0 or int(hi.max()) >= n:
            raise EdgeNotInGraphError("edge endpoint outside graph")
        if self._sorted_keys is None:
            keys = self._eu * np.int64(n) + self._ev
            order = np.argsort(keys)
            self._key_order = order
            self._sorted_keys = keys[order]
        want = lo * np.int64(n) + hi
        pos = np.searchsorted(self._sorted_keys, want)
        bad = (pos >= self._sorted_keys.size) | (
            self._sorted_keys[np.minimum(pos, self._sorted_keys.size - 1)] != want
        )
        if bad.any():
            i = int(np.flatnonzero(bad)[0])
            raise EdgeNotInGraphError(f"edge {(int(lo[i]), int(hi[i]))} not in graph")
        return self._ew[self._key_order[pos]]


class Cut:
    """Node partition ``(C, V \\ C)`` with both sides non-empty."""

    __slots__ = ("membership",)

    def __init__(self, membership: Sequence[bool] | np.ndarray):
        arr = np.array(membership, dtype=bool)
        if arr.ndim != 1:
            raise GraphError("cut membership must be a 1-d boolean array")
        if not arr.any() or arr.all():
            raise EmptyCutSideError("both sides of a cut must be non-empty")
        arr.setflags(write=False)
        self.membership = arr

    @classmethod
    def of(cls, n_nodes: int, members: Iterable[int]) -> "Cut":
        arr = np.zeros(int(n_nodes), dtype=bool)
        for i in members:
            i = int(i)
            if not 0 <= i < n_nodes:
                raise NodeRangeError(f"node {i} outside [0, {n_nodes})")
            arr[i] = True
        return cls(arr)

    def __contains__(self, i: int) -> bool:
        return bool(self.membership[i])


def build_graph(
    n_nodes: int, weighted_edge_list: Iterable[tuple[int, int, float]]
) -> WeightedGraph:
    """Validate and build a graph from ``(u, v, w)`` triples.

    Rejects out-of-range endpoints, self-edges, non-finite weights, and
    duplicate edges (after canonicalization) with distinct error kinds.
    """
    triples = list(weighted_edge_list)
    if triples:
        eu = np.array([t[0] for t in triples], dtype=np.int64)
        ev = np.array([t[1] for t in triples], dtype=np.int64)
        ew = np.array([t[2] for t in triples], dtype=np.float64)
    else:
        eu = np.empty(0, dtype=np.int64)
        ev = np.empty(0, dtype=np.int64)
        ew = np.empty(0, dtype=np.float64)
    return WeightedGraph.from_arrays(n_nodes, eu, ev, ew, validate=True)


def degree(g: WeightedGraph, i: int) -> int:
    """Number of neighbors of node ``i``."""
    g._check_node(i)
    return int(g._indptr[i + 1] - g._indptr[i])


def crosses_cut(cut: Cut, e: Edge) -> bool:
    """True iff the endpoints of ``e`` lie on opposite sides of the cut."""
    n = cut.membership.size
    if e.u >= n or e.v >= n:
        raise NodeRangeError(f"edge {(e.u, e.v)} has endpoint outside [0, {n})")
    return bool(cut.membership[e.u] != cut.membership[e.v])


def candidate_edges(g: WeightedGraph, cut: Cut) -> list[Edge]:
    """All minimum-weight edges crossing the cut (plural in case of ties)."""
    if cut.membership.size != g.n_nodes:
        raise GraphError(
            f"cut is over {cut.membership.size} nodes, graph has {g.n_nodes}"
        )
    eu, ev, ew = g.edge_arrays
    crossing = cut.membership[eu] != cut.membership[ev]
    if not crossing.any():
        raise NoCrossingEdgeError("no edge crosses the cut")
    wmin = ew[crossing].min()
    idx = np.flatnonzero(crossing & (ew == wmin))
    return [Edge(int(eu[i]), int(ev[i])) for i in idx]


def is_connected(g: WeightedGraph) -> bool:
    """True iff every node is reachable from node 0 (vacuously for n <= 1)."""
    n = g.n_nodes
    if n <= 1:
        return True
    indptr, adj = g._indptr, g._adj_nodes
    visited = np.zeros(n, dtype=bool)
    visited[0] = True
    frontier = np.array([0], dtype=np.int64)
    n_seen = 1
    while frontier.size:
        starts = indptr[frontier]
        counts = indptr[frontier + 1] - starts
        total = int(counts.sum())
        if total == 0:
            break
        offs = np.repeat(starts, counts) + np.arange(total) - np.repeat(
            np.cumsum(counts) - counts, counts
        )
        neigh = adj[offs]
        new = np.unique(neigh[~visited[neigh]])
        visited[new] = True
        n_seen += new.size
        frontier = new
    return n_seen == n


# -- edge-list text format ----------------------------------------------
#
# One edge per line: `u v w` (0-based ids, decimal weight), preceded by
# comment headers of the form `# key=value [key=value ...]`, at minimum
# `# nodes=N edges=M`.


def format_number(x: float) -> str:
    """Render a float losslessly, dropping a redundant trailing `.0`."""
    f = float(x)
    if f.is_integer() and abs(f) < 1e16:
        return str(int(f))
    return repr(f)


def write_graph(
    g: WeightedGraph, path: str | Path, extra_headers: Sequence[str] = ()
) -> None:
    """Write the edge-list file; ``extra_headers`` are emitted as `# ...` lines."""
    eu, ev, ew = g.edge_arrays
    with open(path, "w") as fh:
        fh.write(f"# nodes={g.n_nodes} edges={g.n_edges}\n")
        for line in extra_headers:
            fh.write(f"# {line}\n")
        for u, v, w in zip(eu.tolist(), ev.tolist(), ew.tolist()):
            fh.write(f"{u} {v} {format_number(w)}\n")


def read_edge_list(
    path: str | Path,
) -> tuple[int, list[tuple[int, int, float]], dict[str, str]]:
    """Parse an edge-list file into ``(n_nodes, triples, header_metadata)``.

    Header tokens of the form ``key=value`` are collected into the metadata
    dict; bare tokens (e.g. ``tree``) map to an empty string.
    """
    meta: dict[str, str] = {}
    triples: list[tuple[int, int, float]] = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                for token in line[1:].split():
                    key, sep, value = token.partition("=")
                    meta[key] = value if sep else ""
                continue
            parts = line.split()
            if len(parts) != 3:
                raise FileFormatError(f"{path}:{lineno}: expected `u v w`, got {line!r}")
            try:
                u, v, w = int(parts[0]), int(parts[1]), float(parts[2])
            except ValueError as exc:
                raise FileFormatError(f"{path}:{lineno}: {exc}") from None
            triples.append((u, v, w))
    if "nodes" not in meta:
        raise FileFormatError(f"{path}: missing `# nodes=N` header")
    try:
        n_nodes = int(meta["nodes"])
    except ValueError:
        raise FileFormatError(f"{path}: bad node count {meta['nodes']!r}") from None
    if "edges" in meta and int(meta["edges"]) != len(triples):
        raise FileFormatError(
            f"{path}: header says {meta['edges']} edges, file has {len(triples)}"
        )
    return n_nodes, triples, meta


def read_graph(path: str | Path) -> WeightedGraph:
    """Load and validate a graph from an edge-list file."""
    n_nodes, triples, _ = read_edge_list(path)
    return build_graph(n_nodes, triples)
