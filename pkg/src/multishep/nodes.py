"""Node sets and coverings for the multinode Shepard operator.

Three families are provided: plain equispaced nodes with overlapping
windows, mixed equispaced-Chebyshev nodes, and mixed
equispaced-mock-Chebyshev nodes.  All indices in a :class:`Covering` are
0-based positions into the node array.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class NodeSet:
    """Ordered abscissas ``0 = x_0 < ... < x_{n-1} = T``."""

    nodes: np.ndarray
    T: float = 1.0

    def __post_init__(self):
        nodes = np.asarray(self.nodes, dtype=float)
        object.__setattr__(self, "nodes", nodes)
        if nodes.ndim != 1 or nodes.size < 2:
            raise ValueError("need at least two nodes")
        if np.any(np.diff(nodes) <= 0):
            raise ValueError("nodes must be strictly increasing")
        if nodes[0] != 0.0 or nodes[-1] != self.T:
            raise ValueError("nodes must span [0, T] exactly")

    @property
    def n(self) -> int:
        return self.nodes.size


@dataclass(frozen=True)
class Covering:
    """Family of contiguous index windows whose union is the whole node set."""

    subsets: tuple = ()

    def __post_init__(self):
        subsets = tuple(np.asarray(f, dtype=int) for f in self.subsets)
        object.__setattr__(self, "subsets", subsets)
        for f in subsets:
            if f.size == 0:
                raise ValueError("covering subset must be non-empty")
            if np.any(np.diff(f) != 1):
                raise ValueError("covering subset must be contiguous and increasing")

    @property
    def s(self) -> int:
        return len(self.subsets)

    def sizes(self) -> list[int]:
        return [f.size for f in self.subsets]

    def validate(self, n: int) -> None:
        covered = np.zeros(n, dtype=bool)
        for f in self.subsets:
            if f[0] < 0 or f[-1] >= n:
                raise ValueError("covering index out of range")
            covered[f] = True
        if not covered.all():
            raise ValueError("covering does not cover every node index")


@dataclass(frozen=True)
class IndexSets:
    """For each node index i, the subset indices k with i in F_k."""

    K: tuple = ()


def index_sets(covering: Covering, n: int) -> IndexSets:
    """Invert the covering: K[i] lists the subsets containing node i."""
    K = [[] for _ in range(n)]
    for k, f in enumerate(covering.subsets):
        for i in f:
            K[i].append(k)
    for i, ki in enumerate(K):
        if not ki:
            raise ValueError(f"node index {i} is not covered by any subset")
    return IndexSets(K=tuple(tuple(ki) for ki in K))


def equispaced_nodes(n: int, T: float = 1.0) -> NodeSet:
    """n equispaced points on [0, T]."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return NodeSet(nodes=np.linspace(0.0, T, n), T=T)


def equispaced_covering(n: int, d: int, q: int = 0) -> Covering:
    """Windows of d+1 consecutive indices with overlap parameter q.

    Consecutive windows share q+1 indices (stride d-q).  The last window
    is forced to cover the final d+1 indices, so it may overlap its
    predecessor by more than q+1 points.
    """
    if not 0 <= q < d:
        raise ValueError("require 0 <= q < d")
    if d + 1 > n:
        raise ValueError("require d + 1 <= n")
    stride = d - q
    subsets = []
    start = 0
    while start + d < n - 1:
        subsets.append(np.arange(start, start + d + 1))
        start += stride
    subsets.append(np.arange(n - d - 1, n))
    cov = Covering(subsets=tuple(subsets))
    cov.validate(n)
    return cov


def _chebyshev_offsets(d: int) -> np.ndarray:
    # Chebyshev-Lobatto positions of degree d mapped to [0, 1].
    k = np.arange(d + 1)
    return (1.0 - np.cos(k * np.pi / d)) / 2.0


def _interval_covering(n_e: int, d: int) -> Covering:
    subsets = tuple(np.arange(i * d, (i + 1) * d + 1) for i in range(n_e - 1))
    return Covering(subsets=subsets)


def mixed_ec(n_e: int, d: int, T: float = 1.0) -> tuple[NodeSet, Covering]:
    """Mixed equispaced-Chebyshev nodes: n_e equispaced break points with
    d-1 Chebyshev interior points per break interval.

    Returns n = d*(n_e-1)+1 nodes; each covering subset holds the d+1
    nodes of one break interval, so adjacent subsets share one node.
    """
    if n_e < 2:
        raise ValueError("n_e must be at least 2")
    if d < 1:
        raise ValueError("d must be at least 1")
    breaks = np.linspace(0.0, T, n_e)
    offsets = _chebyshev_offsets(d)
    nodes = [0.0]
    for i in range(n_e - 1):
        left, right = breaks[i], breaks[i + 1]
        interior = left + offsets[1:] * (right - left)
        interior[-1] = right  # keep break points exact
        nodes.extend(interior)
    nodeset = NodeSet(nodes=np.array(nodes), T=T)
    cov = _interval_covering(n_e, d)
    cov.validate(nodeset.n)
    return nodeset, cov


def mixed_emc(
    n_e: int, d: int, n_s: int | None = None, T: float = 1.0
) -> tuple[NodeSet, Covering]:
    """Mixed equispaced-mock-Chebyshev nodes.

    Per break interval, d+1 points are picked from the n_s+2 equispaced
    candidates (endpoints included) so that they best mimic the degree-d
    Chebyshev-Lobatto positions.  Both interval endpoints are always kept.
    Targets are assigned to the nearest unused candidate, processed from
    the endpoints inward, which resolves collisions deterministically.
    """
    if n_e < 2:
        raise ValueError("n_e must be at least 2")
    if d < 1:
        raise ValueError("d must be at least 1")
    if n_s is None:
        n_s = 3 * (d + 1)
    if n_s < d + 1:
        raise ValueError("require n_s >= d + 1")
    breaks = np.linspace(0.0, T, n_e)
    offsets = _chebyshev_offsets(d)
    # target processing order: endpoints first, then inward
    order = []
    lo, hi = 0, d
    while lo <= hi:
        order.append(lo)
        if hi != lo:
            order.append(hi)
        lo += 1
        hi -= 1
    nodes = [0.0]
    for i in range(n_e - 1):
        left, right = breaks[i], breaks[i + 1]
        candidates = np.linspace(left, right, n_s + 2)
        taken = np.zeros(candidates.size, dtype=bool)
        chosen = np.empty(d + 1, dtype=int)
        for t in order:
            target = left + offsets[t] * (right - left)
            dist = np.abs(candidates - target)
            dist[taken] = np.inf
            idx = int(np.argmin(dist))
            taken[idx] = True
            chosen[t] = idx
        picked = candidates[np.sort(chosen)]
        picked[-1] = right
        nodes.extend(picked[1:])
    nodeset = NodeSet(nodes=np.array(nodes), T=T)
    cov = _interval_covering(n_e, d)
    cov.validate(nodeset.n)
    return nodeset, cov
