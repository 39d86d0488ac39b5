"""Index codes: verification, the linear construction from a representing
matrix, exhaustive optimal search on tiny instances, and two coloring
extractions.

Decoders are never stored.  A code is valid iff decoding is forced: no two
messages with the same codeword and the same side-information restriction
may differ at the receiver's own coordinate.  When a decoder's value is
needed (the coloring extractions query the all-zero side information), the
forced value is used, and inputs outside the encoder's reach decode to 0;
the constructions only depend on reachable inputs, where the value is
forced.
"""

from __future__ import annotations

import itertools
from typing import Optional

from .coloring import Coloring
from .errors import GuardExceeded, WitnessError
from .gf import _dot, _rref, as_field
from .graphs import Graph


class IndexCode:
    """An encoder over the alphabet {0..s-1}: linear (a k x n matrix over
    GF(s), s prime) or an explicit table keyed by message tuples."""

    def __init__(self, s: int, n: int, k: int, *, matrix=None, table=None):
        if s < 2:
            raise ValueError("alphabet size must be at least 2")
        if (matrix is None) == (table is None):
            raise ValueError("exactly one of matrix/table required")
        if matrix is not None:
            as_field(s)  # linear codes require a prime alphabet
            matrix = tuple(tuple(int(v) % s for v in row) for row in matrix)
            if len(matrix) != k or any(len(row) != n for row in matrix):
                raise ValueError(f"matrix must be {k} x {n}")
        else:
            table = dict(table)
            if len(table) != s**n:
                raise ValueError("table must be total over all s^n messages")
            for x, y in table.items():
                if len(x) != n or len(y) != k:
                    raise ValueError("table entry of wrong shape")
        self.s = s
        self.n = n
        self.k = k
        self.matrix = matrix
        self.table = table

    def encode(self, x: tuple) -> tuple:
        if self.matrix is not None:
            return tuple(_dot(row, x, self.s) for row in self.matrix)
        return self.table[tuple(x)]

    def messages(self):
        return itertools.product(range(self.s), repeat=self.n)

    @classmethod
    def linear(cls, s: int, matrix) -> "IndexCode":
        matrix = tuple(tuple(row) for row in matrix)
        n = len(matrix[0]) if matrix else 0
        return cls(s, n, len(matrix), matrix=matrix)

    def to_json_obj(self) -> dict:
        if self.matrix is not None:
            return {"type": "linear", "s": self.s, "n": self.n, "k": self.k,
                    "matrix": [list(row) for row in self.matrix]}
        words = ["".join(map(str, self.table[x])) for x in self.messages()]
        return {"type": "table", "s": self.s, "n": self.n, "k": self.k, "table": words}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "IndexCode":
        s, n, k = int(obj["s"]), int(obj["n"]), int(obj["k"])
        if obj["type"] == "linear":
            return cls(s, n, k, matrix=obj["matrix"])
        words = obj["table"]
        table = {
            x: tuple(int(ch) for ch in word)
            for x, word in zip(itertools.product(range(s), repeat=n), words)
        }
        return cls(s, n, k, table=table)


def _decoder_tables(g: Graph, code: IndexCode, *, max_messages: int) -> Optional[list]:
    """Per-receiver forced decoding maps (codeword, side info) -> own
    symbol, or None when some receiver has a collision (invalid code)."""
    if code.n != g.n:
        raise ValueError(f"code has {code.n} receivers but graph has {g.n} vertices")
    if code.s**code.n > max_messages:
        raise GuardExceeded(f"{code.s}^{code.n} messages exceeds {max_messages}")
    nbr_idx = [[g.index(u) for u in g.neighbors(v)] for v in g.vertices]
    tables: list = [{} for _ in range(g.n)]
    for x in code.messages():
        y = code.encode(x)
        for i in range(g.n):
            key = (y, tuple(x[j] for j in nbr_idx[i]))
            prev = tables[i].setdefault(key, x[i])
            if prev != x[i]:
                return None
    return tables


def verify_index_code(g: Graph, code: IndexCode, *, max_messages: int = 1 << 20) -> bool:
    """True iff every receiver can decode its own symbol from the codeword
    and its side information, for every message (exhaustive)."""
    return _decoder_tables(g, code, max_messages=max_messages) is not None


def linear_code_from_matrix(g: Graph, m) -> IndexCode:
    """The length-rank(M) linear code of a representing matrix: broadcast k
    independent rows spanning the row space; receiver i reconstructs
    (Mx)_i = M_ii x_i + sum over neighbors and solves for x_i."""
    from .algebraic import verify_repr_matrix

    if not verify_repr_matrix(g, m):
        raise WitnessError("matrix does not represent the graph (or rank claim is wrong)")
    q = m.field.q
    chosen: list = []
    cur_rank = 0
    for row in m.rows:
        r = len(_rref(chosen + [row], q)[0])
        if r > cur_rank:
            chosen.append(row)
            cur_rank = r
        if cur_rank == m.rank:
            break
    return IndexCode.linear(q, chosen)


def optimal_index_code_bruteforce(
    g: Graph, s: int, k_max: Optional[int] = None, *, max_receivers: int = 4
) -> Optional[int]:
    """Least length of any (possibly nonlinear) index code, by exhaustive
    search over encoders with per-receiver decodability pruning.

    The identity encoder always works, so the optimum is at most n; None
    is returned only when k_max < that optimum.
    """
    n = g.n
    if n > max_receivers:
        raise GuardExceeded(f"brute-force guard: {n} > {max_receivers} receivers")
    if n == 0:
        return 0
    if k_max is None:
        k_max = n
    msgs = list(itertools.product(range(s), repeat=n))
    nbr_idx = [[g.index(u) for u in g.neighbors(v)] for v in g.vertices]
    restrictions = [[tuple(x[j] for j in nbr_idx[i]) for x in msgs] for i in range(n)]

    def search(k: int) -> bool:
        words = list(itertools.product(range(s), repeat=k))
        tables: list = [{} for _ in range(n)]

        def assign(t: int) -> bool:
            if t == len(msgs):
                return True
            for y in words:
                added = []
                ok = True
                for i in range(n):
                    key = (y, restrictions[i][t])
                    prev = tables[i].get(key)
                    if prev is None:
                        tables[i][key] = msgs[t][i]
                        added.append((i, key))
                    elif prev != msgs[t][i]:
                        ok = False
                        break
                if ok and assign(t + 1):
                    return True
                for i, key in added:
                    del tables[i][key]
            return False

        return assign(0)

    for k in range(1, k_max + 1):
        if search(k):
            return k
    return None


# ---------------------------------------------------------------------------
# coloring extractions

def _truth_table(tables_i: dict, zero_si: tuple, words) -> tuple:
    return tuple(
        0 if tables_i.get((y, zero_si), 0) == 0 else 1 for y in words
    )


def coloring_from_index_code(g: Graph, code: IndexCode, *, max_messages: int = 1 << 20) -> Coloring:
    """From an index code for the complement of g, color vertex i by the
    {0,1}-profile over codewords of "receiver i decodes 0 under all-zero
    side information".  Proper on g with palette at most 2^(s^k)."""
    gc = g.complement()
    tables = _decoder_tables(gc, code, max_messages=max_messages)
    if tables is None:
        raise WitnessError("code is not a valid index code for the complement graph")
    words = list(itertools.product(range(code.s), repeat=code.k))
    profiles = {}
    for i, v in enumerate(g.vertices):
        zero_si = (0,) * gc.degree(v)
        profiles[v] = _truth_table(tables[i], zero_si, words)
    return _coloring_from_profiles(g, profiles)


def line_coloring_from_index_code(g: Graph, code: IndexCode, *, max_messages: int = 1 << 20) -> Coloring:
    """From an index code for the complement of H (the underlying graph of
    the line digraph of g), color G-vertex v by the profile of "every
    in-arc receiver (u, v) decodes 0 under all-zero side information"."""
    from .graphs import line_digraph, underlying_graph

    h = underlying_graph(line_digraph(g))
    hc = h.complement()
    tables = _decoder_tables(hc, code, max_messages=max_messages)
    if tables is None:
        raise WitnessError("code is not a valid index code for the line-graph complement")
    words = list(itertools.product(range(code.s), repeat=code.k))
    arc_tables = {arc: tables[h.index(arc)] for arc in h.vertices}
    profiles = {}
    for v in g.vertices:
        in_arcs = [arc for arc in h.vertices if arc.head == v]
        prof = []
        for y in words:
            all_zero = all(
                arc_tables[arc].get((y, (0,) * hc.degree(arc)), 0) == 0 for arc in in_arcs
            )
            prof.append(0 if all_zero else 1)
        profiles[v] = tuple(prof)
    return _coloring_from_profiles(g, profiles)


def _coloring_from_profiles(g: Graph, profiles: dict) -> Coloring:
    distinct = sorted(set(profiles.values()))
    ids = {p: i for i, p in enumerate(distinct)}
    coloring = Coloring({v: ids[profiles[v]] for v in g.vertices}, len(distinct))
    for u, v in g.edges:
        if profiles[u] == profiles[v]:
            raise WitnessError(f"extraction produced equal profiles on edge {u},{v}")
    return coloring
