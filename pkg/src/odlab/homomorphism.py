"""Backtracking graph homomorphism search with forward checking.

The core search works against an implicit target: a candidate pool plus a
neighbor-mask function (bitmask over pool indices).  find_homomorphism
wraps it for an explicit target graph; the algebraic solvers reuse the
core with lazily cached masks so large targets are never materialized as
graphs.

Determinism: vertices are chosen by fewest remaining candidates (ties by
degree, then index) and candidates are tried in pool order, so the first
witness found is a canonical function of the input.
"""

from __future__ import annotations

from typing import Callable, Optional

from .errors import BudgetExceeded, GuardExceeded
from .graphs import Graph


def hom_search_indices(
    g: Graph,
    pool_size: int,
    neighbor_mask: Callable[[int], int],
    *,
    node_limit: Optional[int] = None,
) -> Optional[list]:
    """Map each vertex of g to a pool index such that adjacent vertices get
    mutually compatible images; None after exhaustive search.

    neighbor_mask(t) must return the bitmask of pool indices that may sit
    next to image t (excluding t itself unless self-compatible).
    """
    n = g.n
    if n == 0:
        return []
    if pool_size == 0:
        return None
    adj = [[g.index(u) for u in g.neighbors(v)] for v in g.vertices]
    full = (1 << pool_size) - 1
    cand = [full] * n
    image = [-1] * n
    nodes = 0

    def pick() -> int:
        best, best_key = -1, None
        for i in range(n):
            if image[i] >= 0:
                continue
            key = (cand[i].bit_count(), -len(adj[i]), i)
            if best_key is None or key < best_key:
                best, best_key = i, key
        return best

    def backtrack(done: int) -> bool:
        nonlocal nodes
        if done == n:
            return True
        nodes += 1
        if node_limit is not None and nodes > node_limit:
            raise BudgetExceeded(f"homomorphism search exceeded {node_limit} nodes")
        v = pick()
        mask = cand[v]
        while mask:
            low = mask & -mask
            mask ^= low
            t = low.bit_length() - 1
            image[v] = t
            nm = neighbor_mask(t)
            touched = []
            dead = False
            for u in adj[v]:
                if image[u] >= 0:
                    continue
                new = cand[u] & nm
                if new != cand[u]:
                    touched.append((u, cand[u]))
                    cand[u] = new
                    if not new:
                        dead = True
                        break
            if not dead and backtrack(done + 1):
                return True
            for u, old in touched:
                cand[u] = old
            image[v] = -1
        return False

    return image if backtrack(0) else None


def find_homomorphism(
    g: Graph,
    target: Graph,
    *,
    node_limit: Optional[int] = None,
    max_product: int = 5_000_000,
) -> Optional[dict]:
    """An edge-preserving map from g into an explicit target graph, or None
    if exhaustive search proves none exists."""
    if g.n * target.n > max_product:
        raise GuardExceeded(f"search guard: |V(G)|*|V(T)| = {g.n * target.n} > {max_product}")
    masks = [0] * target.n
    for u, v in target.edges:
        iu, iv = target.index(u), target.index(v)
        masks[iu] |= 1 << iv
        masks[iv] |= 1 << iu
    res = hom_search_indices(g, target.n, masks.__getitem__, node_limit=node_limit)
    if res is None:
        return None
    return {v: target.vertices[t] for v, t in zip(g.vertices, res)}


def is_homomorphism(g: Graph, target: Graph, mapping: dict) -> bool:
    """Check totality and edge preservation."""
    if any(v not in mapping for v in g.vertices):
        return False
    return all(target.has_edge(mapping[u], mapping[v]) for u, v in g.edges)


class LazyMaskCache:
    """neighbor_mask backed by a pairwise compatibility predicate over a
    pool, computed per image on first use and cached."""

    def __init__(self, pool: list, compatible: Callable):
        self.pool = pool
        self.compatible = compatible
        self._masks: dict = {}

    def __call__(self, t: int) -> int:
        m = self._masks.get(t)
        if m is None:
            pt = self.pool[t]
            compatible = self.compatible
            m = 0
            for j, pj in enumerate(self.pool):
                if j != t and compatible(pt, pj):
                    m |= 1 << j
            self._masks[t] = m
        return m
