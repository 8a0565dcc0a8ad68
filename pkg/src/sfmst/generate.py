"""Scale-free random graphs by preferential attachment, plus the two
degree-correlated edge-weight models.

The growth rule starts from a complete graph on ``m + 1`` nodes; every
later node attaches ``m`` edges to distinct existing nodes picked with
probability proportional to current degree (flat repeated-endpoint list,
duplicate draws resampled). The resulting degree distribution has a
power-law tail with exponent 3.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import _kernels
from .graph import GraphError, WeightedGraph

__all__ = [
    "RNG_ALGORITHM",
    "GeneratorError",
    "GeneratorParams",
    "DisorderType",
    "expected_edge_count",
    "generate_preferential_attachment",
    "assign_disorder",
]

# Pinned RNG so runs are replayable from recorded seeds.
RNG_ALGORITHM = "PCG64"


class GeneratorError(GraphError):
    """Invalid generator parameters."""


@dataclass(frozen=True)
class GeneratorParams:
    """Size ``n_nodes``, attachment count ``m``, and RNG seed."""

    n_nodes: int
    m: int
    seed: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise GeneratorError(f"m must be >= 1, got {self.m}")
        if self.n_nodes <= self.m + 1:
            raise GeneratorError(
                f"n_nodes must exceed m + 1 = {self.m + 1}, got {self.n_nodes}"
            )
        if not 0 <= self.seed < 2**64:
            raise GeneratorError("seed must fit in 64 unsigned bits")


class DisorderType(Enum):
    """Edge-weight models: products of endpoint degrees, or their reciprocals."""

    TYPE1 = "type1"  # w_ij = k_i * k_j
    TYPE2 = "type2"  # w_ij = 1 / (k_i * k_j)

    @classmethod
    def from_name(cls, name: str) -> "DisorderType":
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise GeneratorError(f"unknown disorder type {name!r}") from None


def expected_edge_count(n_nodes: int, m: int) -> int:
    """Edges of a preferential-attachment graph: m(n - m) + C(m, 2)."""
    return m * (n_nodes - m) + m * (m - 1) // 2


def generate_preferential_attachment(params: GeneratorParams) -> WeightedGraph:
    """Grow a connected simple scale-free graph; all edge weights are 1.

    Deterministic for a fixed seed, bit-identical across kernel backends:
    the uniform variates are pre-drawn from PCG64 and consumed in a fixed
    order by the growth loop. In the (astronomically rare) event the
    buffer runs out, the whole run restarts from the seed with a larger
    buffer, preserving determinism.
    """
    n, m = params.n_nodes, params.m
    m_edges = expected_edge_count(n, m)
    n_grow = n - m - 1
    buf = 2 * m * n_grow + 64
    while True:
        uniforms = np.random.default_rng(params.seed).random(buf)
        eu = np.empty(m_edges, dtype=np.int64)
        ev = np.empty(m_edges, dtype=np.int64)
        consumed = _kernels.pa_fill(eu, ev, uniforms, n, m)
        if consumed >= 0:
            break
        buf *= 4
    return WeightedGraph.from_arrays(n, eu, ev, np.ones(m_edges), validate=False)


def assign_disorder(g: WeightedGraph, d: DisorderType) -> WeightedGraph:
    """Reweight every edge from the FINAL degrees of its endpoints.

    Topology is unchanged; returns a new graph sharing the edge arrays.
    """
    eu, ev, _ = g.edge_arrays
    k = g.degrees().astype(np.float64)
    prod = k[eu] * k[ev]
    w = prod if d is DisorderType.TYPE1 else 1.0 / prod
    return WeightedGraph.from_arrays(g.n_nodes, eu, ev, w, validate=False)
