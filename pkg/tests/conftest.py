"""Shared corpus and cached solver results for the test suite.

The corpus is fixed by seed so every run (and every acceptance criterion)
sees the same graphs.  Expensive parameters (chi, od, minrank) are cached
per graph across tests.
"""

from __future__ import annotations

import pytest

from odlab.algebraic import minrank, orthogonality_dimension, verify_orth_rep, verify_repr_matrix
from odlab.coloring import chromatic_number, verify_coloring
from odlab.errors import WitnessError
from odlab.generators import complete_graph, cycle_graph, petersen_graph, random_graph

CORPUS_SIZES = (4, 5, 6, 7, 8)
CORPUS_SEED_BASE = 1000


def seeded_corpus(count: int):
    return [
        random_graph(CORPUS_SIZES[i % len(CORPUS_SIZES)], 0.5, CORPUS_SEED_BASE + i)
        for i in range(count)
    ]


def named_corpus():
    return {
        "C5": cycle_graph(5),
        "C7": cycle_graph(7),
        "K3": complete_graph(3),
        "K4": complete_graph(4),
        "K5": complete_graph(5),
        "petersen": petersen_graph(),
    }


class ParamCache:
    """Memoized exact parameters with witness verification on every hit."""

    def __init__(self):
        self._chi = {}
        self._od = {}
        self._mr = {}

    def chi(self, g):
        if g not in self._chi:
            k, col = chromatic_number(g, max_vertices=250)
            assert verify_coloring(g, col) and col.palette == k
            self._chi[g] = k
        return self._chi[g]

    def od(self, g, q):
        key = (g, q)
        if key not in self._od:
            res = orthogonality_dimension(g, q, max(1, self.chi(g)))
            if res is None:
                raise WitnessError("od exceeded its chromatic upper bound")
            k, rep = res
            assert verify_orth_rep(g, rep) and rep.dim == k
            self._od[key] = k
        return self._od[key]

    def minrank_of(self, g, q):
        key = (g, q)
        if key not in self._mr:
            gc = g.complement()
            res = minrank(g, q, max(1, self.od(gc, q)))
            if res is None:
                raise WitnessError("minrank exceeded its od upper bound")
            k, mat = res
            assert verify_repr_matrix(g, mat) and mat.rank == k
            self._mr[key] = k
        return self._mr[key]


@pytest.fixture(scope="session")
def cache():
    return ParamCache()


@pytest.fixture(scope="session")
def corpus100():
    return seeded_corpus(100)


@pytest.fixture(scope="session")
def corpus50(corpus100):
    return corpus100[:50]


@pytest.fixture(scope="session")
def corpus20(corpus100):
    return corpus100[:20]


@pytest.fixture(scope="session")
def named():
    return named_corpus()
