"""Seeded random instances.

All randomness flows through numpy's PCG64 so that a seed pins down the
output bit for bit across platforms and sessions.
"""

from __future__ import annotations

import heapq

import numpy as np

from .graph import Graph

__all__ = ["rng_from_seed", "gnp_graph", "random_tree"]


def rng_from_seed(seed: int | np.random.Generator) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.Generator(np.random.PCG64(seed))


def gnp_graph(n: int, p: float, seed: int | np.random.Generator) -> Graph:
    """Erdos-Renyi graph: each of the n*(n-1)/2 edges present with probability p."""
    if n < 0:
        raise ValueError("negative vertex count")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability {p} outside [0, 1]")
    rng = rng_from_seed(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if not pairs:
        return Graph(n, [])
    draws = rng.random(len(pairs))
    edges = [pair for pair, d in zip(pairs, draws) if d < p]
    return Graph(n, edges)


def random_tree(n: int, seed: int | np.random.Generator) -> Graph:
    """Uniform random labeled tree, decoded from a random Pruefer sequence."""
    if n < 0:
        raise ValueError("negative vertex count")
    if n <= 1:
        return Graph(n, [])
    if n == 2:
        return Graph(2, [(0, 1)])
    rng = rng_from_seed(seed)
    seq = [int(x) for x in rng.integers(0, n, size=n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    # Standard decoding: repeatedly join the smallest leaf to the next
    # sequence entry.
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    a = heapq.heappop(leaves)
    b = heapq.heappop(leaves)
    edges.append((a, b))
    return Graph(n, edges)
