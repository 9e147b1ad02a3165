"""Lusztig data: nonnegative integer vectors attached to reduced words of w0.

A vector n = (n_1, ..., n_m) along a reduced word i encodes the path of
vertices mu_k = sum_{l <= k} n_l beta_l through the polytope, where beta_l are
the positive coroots in word order.  Changing the word by a braid move
transforms n by a piecewise-linear involution; the total coweight sum n_l
beta_l is preserved.
"""

from __future__ import annotations

import numpy as np

from . import _kernels
from .cartan import Coweight
from .weyl import BraidEdge, WeylGroup


def _as_tuple(n) -> tuple[int, ...]:
    return tuple(int(v) for v in n)


def _check_lusztig(group: WeylGroup, word, n) -> tuple[tuple[int, ...], tuple[int, ...]]:
    word = tuple(word)
    n = _as_tuple(n)
    if len(n) != group.m:
        raise ValueError(f"need {group.m} entries, got {len(n)}")
    if any(v < 0 for v in n):
        raise ValueError(f"Lusztig data must be nonnegative, got {n}")
    return word, n


def coweight_of(group: WeylGroup, word, n) -> Coweight:
    """Total coweight sum n_k beta_k; invariant under braid moves."""
    word, n = _check_lusztig(group, word, n)
    data = group.word_data(word)
    total = group.cartan.zero_coweight()
    for c, b in zip(n, data.coroots):
        total = total + c * b
    return total

def vertex_path(group: WeylGroup, word, n) -> tuple[Coweight, ...]:
    """Partial sums mu_k = sum_{l<=k} n_l beta_l, from the zero vertex to the top."""
    word, n = _check_lusztig(group, word, n)
    data = group.word_data(word)
    path = [group.cartan.zero_coweight()]
    for c, b in zip(n, data.coroots):
        path.append(path[-1] + c * b)
    return tuple(path)


def n_to_partial_M(group: WeylGroup, word, n) -> dict[tuple[int, ...], int]:
    """Values M_gamma on the chamber weights seen along the word.

    M at gamma_k = w_k Lambda_{i_k} equals sum_{l<=k} <beta_l, gamma_k> n_l;
    the identity chamber weights Lambda_i carry M = 0 (bottom vertex at the
    origin).
    """
    word, n = _check_lusztig(group, word, n)
    data = group.word_data(word)
    out = {}
    for i in range(1, group.rank + 1):
        out[group.cartan.fundamental_weight(i).coords] = 0
    for k, gamma in enumerate(data.gammas):
        val = 0
        for l in range(k + 1):
            val += n[l] * sum(a * b for a, b in zip(data.coroots[l].coords, gamma.coords))
        if gamma.coords in out and out[gamma.coords] != val:
            raise AssertionError("chamber weight revisited with a different value")
        out[gamma.coords] = val
    return out


def braid_transition(group: WeylGroup, edge: BraidEdge, n) -> tuple[int, ...]:
    """Transport Lusztig data across one braid move of the underlying word."""
    _, n = _check_lusztig(group, edge.src, n)
    k, d = edge.k, edge.d
    window = n[k : k + d]
    if d == 2:
        new = (window[1], window[0])
    elif d == 3:
        t1, t2, t3 = window
        p = min(t1, t3)
        new = (t2 + t3 - p, p, t1 + t2 - p)
    elif d == 4:
        n1, n2, n3, n4 = window
        x, y = edge.i, edge.j
        p1 = min(n1 + n2, n1 + n4, n3 + n4)
        if group.cartan.entry(x, y) == -1:
            p2 = min(n1 + 2 * n2, n1 + 2 * n4, n3 + 2 * n4)
            new = (n2 + n3 + n4 - p1, 2 * p1 - p2, p2 - p1, n1 + 2 * n2 + n3 - p2)
        else:
            p2 = min(2 * n1 + n2, 2 * n1 + n4, 2 * n3 + n4)
            new = (n2 + 2 * n3 + n4 - p2, p2 - p1, 2 * p1 - p2, n1 + n2 + n3 - p1)
    else:  # pragma: no cover
        raise AssertionError(f"unsupported braid window length {d}")
    assert all(v >= 0 for v in new), "braid transition produced a negative entry"
    return n[:k] + new + n[k + d :]


def word_path(group: WeylGroup, src, dst) -> tuple[BraidEdge, ...]:
    """A shortest chain of braid moves from one reduced word to another."""
    src, dst = tuple(src), tuple(dst)
    graph = group.braid_graph()
    if src not in graph.adjacency or dst not in graph.adjacency:
        raise ValueError("both endpoints must be reduced words for w0")
    if src == dst:
        return ()
    parents: dict[tuple[int, ...], BraidEdge] = {src: None}
    frontier = [src]
    while frontier and dst not in parents:
        nxt = []
        for word in frontier:
            for e in graph.adjacency[word]:
                if e.dst not in parents:
                    parents[e.dst] = e
                    nxt.append(e.dst)
        frontier = nxt
    if dst not in parents:
        raise AssertionError("braid graph is not connected")
    path = []
    cur = dst
    while parents[cur] is not None:
        e = parents[cur]
        path.append(e)
        cur = e.src
    return tuple(reversed(path))


def transport(group: WeylGroup, src, dst, n) -> tuple[int, ...]:
    """Move Lusztig data from word ``src`` to word ``dst`` along braid moves."""
    for edge in word_path(group, src, dst):
        n = braid_transition(group, edge, n)
    return _as_tuple(n)


def enumerate_lusztig(group: WeylGroup, word, mu: Coweight) -> list[tuple[int, ...]]:
    """All Lusztig data along ``word`` with total coweight mu, lex ascending."""
    word = tuple(word)
    if mu.cartan != group.cartan:
        raise ValueError("coweight belongs to a different Cartan datum")
    data = group.word_data(word)
    parts = np.array([b.coords for b in data.coroots], dtype=np.int64)
    target = np.array(mu.coords, dtype=np.int64)
    rows = _kernels.enumerate_nonneg_combinations(parts, target)
    return [tuple(int(v) for v in row) for row in rows]
