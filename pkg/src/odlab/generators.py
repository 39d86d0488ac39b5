"""Named graph generators used by the test corpus and the CLI.

All generators label vertices 1..n (or tuples, for Kneser graphs) and are
fully deterministic; random_graph is seeded and stable across runs.
"""

from __future__ import annotations

import itertools
import random

from .graphs import Graph


def complete_graph(n: int) -> Graph:
    return Graph(range(1, n + 1), [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def empty_graph(n: int) -> Graph:
    return Graph(range(1, n + 1))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(range(1, n + 1), [(i, i % n + 1) for i in range(1, n + 1)])


def path_graph(n: int) -> Graph:
    return Graph(range(1, n + 1), [(i, i + 1) for i in range(1, n)])


def kneser_graph(n: int, k: int) -> Graph:
    """Vertices: k-subsets of [n]; edges: disjoint pairs."""
    verts = list(itertools.combinations(range(1, n + 1), k))
    edges = [
        (a, b)
        for a, b in itertools.combinations(verts, 2)
        if not set(a) & set(b)
    ]
    return Graph(verts, edges)


def petersen_graph() -> Graph:
    return kneser_graph(5, 2)


def random_graph(n: int, p: float, seed: int) -> Graph:
    """G(n, p) with a fixed seed; edge decisions are drawn in lexicographic
    pair order so the graph is reproducible."""
    rng = random.Random(seed)
    edges = [
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if rng.random() < p
    ]
    return Graph(range(1, n + 1), edges)


def from_name(name: str) -> Graph:
    """Build a graph from a compact CLI name.

    Supported: K<n>, C<n>, P<n>, E<n> (empty), petersen,
    kneser-<n>-<k>, dshift-<n>, gnp-<n>-<seed>[-<p_percent>].
    """
    name = name.strip()
    low = name.lower()
    if low == "petersen":
        return petersen_graph()
    if low.startswith("kneser-"):
        _, n, k = low.split("-")
        return kneser_graph(int(n), int(k))
    if low.startswith("dshift-"):
        from .realdim import double_shift_graph

        return double_shift_graph(int(low.split("-")[1]))
    if low.startswith("gnp-"):
        parts = low.split("-")
        if len(parts) == 3:
            return random_graph(int(parts[1]), 0.5, int(parts[2]))
        if len(parts) == 4:
            return random_graph(int(parts[1]), int(parts[3]) / 100.0, int(parts[2]))
        raise ValueError(f"bad gnp name {name!r} (want gnp-<n>-<seed>[-<p_percent>])")
    if name[:1] in "KCPE" and name[1:].isdigit():
        n = int(name[1:])
        return {
            "K": complete_graph,
            "C": cycle_graph,
            "P": path_graph,
            "E": empty_graph,
        }[name[0]](n)
    raise ValueError(f"unknown graph name {name!r}")
