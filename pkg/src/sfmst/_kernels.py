"""Hot inner loops, JIT-compiled with numba when available.

Backend selection is controlled by the environment variable
``SFMST_BACKEND``:

* ``auto`` (default) — use numba if it imports, else the pure-Python path
* ``numba``          — require numba, fail loudly if missing
* ``numpy``          — force the pure-Python/NumPy fallback

Both paths implement identical arithmetic (including the consumption
order of pre-drawn uniform variates), so results are bit-identical
either way; only speed differs. ``benchmarks/bench_backends.py``
compares them.
"""

from __future__ import annotations

import os

import numpy as np

__all__ = [
    "backend_name",
    "kruskal_accept",
    "kruskal_accept_py",
    "kruskal_accept_nb",
    "pa_fill",
    "pa_fill_py",
    "pa_fill_nb",
    "count_components",
    "count_components_py",
    "count_components_nb",
]

_CHOICE = os.environ.get("SFMST_BACKEND", "auto").strip().lower()
if _CHOICE not in ("auto", "numba", "numpy"):
    raise ValueError(f"SFMST_BACKEND must be auto|numba|numpy, got {_CHOICE!r}")

njit = None
if _CHOICE in ("auto", "numba"):
    try:
        from numba import njit
    except ImportError:
        if _CHOICE == "numba":
            raise RuntimeError("SFMST_BACKEND=numba but numba is not importable")
        njit = None


def kruskal_accept_py(n_nodes, eu, ev):
    """Union-find sweep over weight-sorted edges (pure Python).

    Returns a boolean mask: True where the edge joined two distinct trees.
    """
    us = eu.tolist()
    vs = ev.tolist()
    parent = list(range(n_nodes))
    size = [1] * n_nodes
    out = np.zeros(len(us), dtype=np.bool_)
    for k in range(len(us)):
        u = us[k]
        while parent[u] != u:  # path halving
            parent[u] = parent[parent[u]]
            u = parent[u]
        v = vs[k]
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        if u != v:
            if size[v] > size[u]:
                u, v = v, u
            parent[v] = u
            size[u] += size[v]
            out[k] = True
    return out


def _kruskal_accept_impl(n_nodes, eu, ev):
    parent = np.arange(n_nodes, dtype=np.int64)
    size = np.ones(n_nodes, dtype=np.int64)
    m = eu.shape[0]
    out = np.zeros(m, dtype=np.bool_)
    for k in range(m):
        u = eu[k]
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        v = ev[k]
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        if u != v:
            if size[v] > size[u]:
                u, v = v, u
            parent[v] = u
            size[u] += size[v]
            out[k] = True
    return out


def count_components_py(n_nodes, eu, ev):
    """Number of connected components induced by the given edges."""
    parent = list(range(n_nodes))
    comps = n_nodes
    for u, v in zip(eu.tolist(), ev.tolist()):
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        if u != v:
            parent[v] = u
            comps -= 1
    return comps


def _count_components_impl(n_nodes, eu, ev):
    parent = np.arange(n_nodes, dtype=np.int64)
    comps = n_nodes
    for k in range(eu.shape[0]):
        u = eu[k]
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        v = ev[k]
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        if u != v:
            parent[v] = u
            comps -= 1
    return comps


def pa_fill_py(eu, ev, uniforms, n_nodes, m):
    """Grow a preferential-attachment graph, consuming pre-drawn uniforms.

    Starts from a complete graph on nodes ``0..m`` and attaches each later
    node to ``m`` distinct existing nodes drawn from the repeated-endpoint
    list (one entry per incident edge end); a draw that repeats an already
    chosen target is resampled. Edges are written canonically into
    ``eu``/``ev`` in creation order. Returns the number of uniforms
    consumed, or -1 if the buffer ran out (caller redraws a larger one and
    restarts).
    """
    u = uniforms.tolist()
    nu = len(u)
    rep = []
    eidx = 0
    for a in range(m + 1):
        for b in range(a + 1, m + 1):
            eu[eidx] = a
            ev[eidx] = b
            eidx += 1
            rep.append(a)
            rep.append(b)
    upos = 0
    chosen = [0] * m
    for t in range(m + 1, n_nodes):
        base_len = len(rep)
        cnt = 0
        while cnt < m:
            if upos >= nu:
                return -1
            idx = int(u[upos] * base_len)
            upos += 1
            if idx >= base_len:
                idx = base_len - 1
            cand = rep[idx]
            dup = False
            for q in range(cnt):
                if chosen[q] == cand:
                    dup = True
                    break
            if dup:
                continue
            chosen[cnt] = cand
            cnt += 1
        for q in range(m):
            j = chosen[q]
            eu[eidx] = j
            ev[eidx] = t
            eidx += 1
            rep.append(j)
            rep.append(t)
    return upos


def _pa_fill_impl(eu, ev, uniforms, n_nodes, m):
    m_edges = eu.shape[0]
    rep = np.empty(2 * m_edges, dtype=np.int64)
    rlen = 0
    eidx = 0
    for a in range(m + 1):
        for b in range(a + 1, m + 1):
            eu[eidx] = a
            ev[eidx] = b
            eidx += 1
            rep[rlen] = a
            rep[rlen + 1] = b
            rlen += 2
    upos = 0
    nu = uniforms.shape[0]
    chosen = np.empty(m, dtype=np.int64)
    for t in range(m + 1, n_nodes):
        base_len = rlen
        cnt = 0
        while cnt < m:
            if upos >= nu:
                return -1
            idx = int(uniforms[upos] * base_len)
            upos += 1
            if idx >= base_len:
                idx = base_len - 1
            cand = rep[idx]
            dup = False
            for q in range(cnt):
                if chosen[q] == cand:
                    dup = True
                    break
            if dup:
                continue
            chosen[cnt] = cand
            cnt += 1
        for q in range(m):
            j = chosen[q]
            eu[eidx] = j
            ev[eidx] = t
            eidx += 1
            rep[rlen] = j
            rep[rlen + 1] = t
            rlen += 2
    return upos


if njit is not None:
    kruskal_accept_nb = njit(cache=True)(_kruskal_accept_impl)
    count_components_nb = njit(cache=True)(_count_components_impl)
    pa_fill_nb = njit(cache=True)(_pa_fill_impl)
else:
    kruskal_accept_nb = None
    count_components_nb = None
    pa_fill_nb = None

if njit is not None:
    _BACKEND = "numba"
    kruskal_accept = kruskal_accept_nb
    count_components = count_components_nb
    pa_fill = pa_fill_nb
else:
    _BACKEND = "numpy"
    kruskal_accept = kruskal_accept_py
    count_components = count_components_py
    pa_fill = pa_fill_py


def backend_name() -> str:
    """Active kernel backend, recorded in experiment metadata."""
    return _BACKEND
