"""Disjoint-set forest with union-by-size and optional path compression.

Merging always keeps the root of the larger tree (ties keep the first
argument), so callers must use the returned root rather than assuming
either input survives. Path compression on `find` rewrites parent
pointers but never changes the partition; it can be disabled to expose
the raw union-by-size tree shape.
"""

from __future__ import annotations

__all__ = ["UnionFindError", "UnionFind"]


class UnionFindError(Exception):
    """Misuse of the union-find structure (unknown element, non-root union, ...)."""


class UnionFind:
    """Partition of dense elements ``0..n-1`` into disjoint trees."""

    __slots__ = ("_parent", "_size", "_n_components", "path_compression")

    def __init__(self, n_elements: int = 0, *, path_compression: bool = True):
        """Start with ``n_elements`` singleton trees (equivalent to that many make_set calls)."""
        self._parent = list(range(n_elements))
        self._size = [1] * n_elements
        self._n_components = n_elements
        self.path_compression = path_compression

    # -- operations --------------------------------------------------------

    def make_set(self, i: int) -> None:
        """Add element ``i`` as a new singleton tree; ids must stay dense."""
        n = len(self._parent)
        if i < n:
            raise UnionFindError(f"element {i} already present")
        if i != n:
            raise UnionFindError(f"elements must be dense: expected {n}, got {i}")
        self._parent.append(i)
        self._size.append(1)
        self._n_components += 1

    def find(self, i: int) -> int:
        """Root ("name") of the tree containing ``i``."""
        parent = self._parent
        if not 0 <= i < len(parent):
            raise UnionFindError(f"unknown element {i}")
        root = i
        while parent[root] != root:
            root = parent[root]
        if self.path_compression:
            while parent[i] != root:
                parent[i], i = root, parent[i]
        return root

    def union(self, a: int, b: int) -> int:
        """Merge the trees rooted at ``a`` and ``b``; returns the surviving root.

        The larger tree's root survives; on equal sizes ``a`` survives.
        """
        parent, size = self._parent, self._size
        for r in (a, b):
            if not 0 <= r < len(parent):
                raise UnionFindError(f"unknown element {r}")
            if parent[r] != r:
                raise UnionFindError(f"union argument {r} is not a root")
        if a == b:
            raise UnionFindError(f"cannot union root {a} with itself")
        if size[b] > size[a]:
            a, b = b, a
        parent[b] = a
        size[a] += size[b]
        self._n_components -= 1
        return a

    def same_set(self, i: int, j: int) -> bool:
        """True iff ``i`` and ``j`` are currently in the same tree."""
        return self.find(i) == self.find(j)

    # -- introspection -------------------------------------------------------

    def __len__(self) -> int:
        return len(self._parent)

    @property
    def n_components(self) -> int:
        return self._n_components

    def size_of(self, i: int) -> int:
        """Number of elements in the tree containing ``i``."""
        return self._size[self.find(i)]

    @property
    def parents(self) -> list[int]:
        """Snapshot of the parent pointers (diagnostics and shape tests)."""
        return list(self._parent)

    def roots(self) -> list[int]:
        return [i for i, p in enumerate(self._parent) if p == i]

    def tree_height(self, i: int) -> int:
        """Edges on the longest path from any element down to ``i``'s root.

        Walks raw parent pointers without compressing, so it reflects the
        actual stored tree shape.
        """
        parent = self._parent
        root = i
        while parent[root] != root:
            root = parent[root]
        height = 0
        for j in range(len(parent)):
            steps, k = 0, j
            while parent[k] != k:
                k = parent[k]
                steps += 1
            if k == root:
                height = max(height, steps)
        return height
