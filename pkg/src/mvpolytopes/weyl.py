"""Weyl groups, reduced words, chamber weights and 2-faces, in exact integers.

A group element is carried as its integer action matrix on the weight lattice
(column i is w.Lambda_i) together with the contragredient matrix acting on
coweights (column i is w.alpha_i^vee).  The two stay dual, which is what makes
chamber-weight bookkeeping cheap: {w.Lambda_i} and {w.alpha_i^vee} are dual
bases for every w.
"""

from __future__ import annotations

import functools
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .cartan import CartanDatum, Coweight, Weight

Matrix = tuple[tuple[int, ...], ...]


def _identity_mat(r: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(r)) for i in range(r))


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    r = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(r)) for j in range(r)) for i in range(r)
    )


def _mat_vec(a: Matrix, v) -> tuple[int, ...]:
    return tuple(sum(row[k] * v[k] for k in range(len(v))) for row in a)


def _transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def _column(a: Matrix, j: int) -> tuple[int, ...]:
    return tuple(row[j] for row in a)


@dataclass(frozen=True)
class WeylElement:
    """Group element; equality and hashing go through the action matrix."""

    cartan: CartanDatum
    mat: Matrix = field(repr=False)
    comat: Matrix = field(repr=False, compare=False)
    word: tuple[int, ...] = field(compare=False)
    length: int = field(compare=False)

    def __repr__(self) -> str:
        return "W[e]" if not self.word else "W[" + " ".join(map(str, self.word)) + "]"


@dataclass(frozen=True)
class ChamberWeight:
    """A weight in the orbit of some Lambda_i; deduplicated by coordinates."""

    weight: Weight
    level: int


@dataclass(frozen=True)
class Face:
    """2-face of the permutohedron: minimal coset representative plus {i, j}.

    ``kind`` is rectangle/hexagon/octagon according to a_ij * a_ji = 0/1/2;
    octagon faces are oriented so that a_ij = -1 and a_ji = -2.
    """

    w: WeylElement
    i: int
    j: int
    kind: str


@dataclass(frozen=True)
class WordData:
    """Prefix path of a reduced word for w0 and its attached data."""

    word: tuple[int, ...]
    prefixes: tuple[WeylElement, ...]  # w_0 = e, w_1, ..., w_m
    coroots: tuple[Coweight, ...]  # beta_k = w_{k-1} . alpha_{i_k}^vee
    gammas: tuple[Weight, ...]  # gamma_k = w_k . Lambda_{i_k}


@dataclass(frozen=True)
class BraidEdge:
    """Directed braid move: positions k..k+d-1 of ``src`` flip to give ``dst``."""

    src: tuple[int, ...]
    dst: tuple[int, ...]
    k: int
    d: int

    @property
    def i(self) -> int:
        return self.src[self.k]

    @property
    def j(self) -> int:
        return self.src[self.k + 1]


@dataclass(frozen=True)
class BraidGraph:
    words: tuple[tuple[int, ...], ...]
    adjacency: dict[tuple[int, ...], tuple[BraidEdge, ...]] = field(compare=False)

    def edges(self):
        for out in self.adjacency.values():
            yield from out


class WeylGroup:
    """Finite Weyl group of a CartanDatum with cached combinatorial data."""

    def __init__(self, cartan: CartanDatum):
        self.cartan = cartan
        self.rank = cartan.rank
        self._build()
        self._word_data: dict[tuple[int, ...], WordData] = {}
        self._reduced_words: dict[WeylElement, tuple[tuple[int, ...], ...]] = {}
        self._braid_graph: BraidGraph | None = None
        self._chambers: tuple[ChamberWeight, ...] | None = None
        self._faces: tuple[Face, ...] | None = None
        self._kpf: dict[tuple[int, ...], int] = {}
        self._parts: np.ndarray | None = None
        self._mv_cache: dict = {}
        self._catalog = None

    # -- construction -------------------------------------------------

    def _build(self) -> None:
        r = self.rank
        a = self.cartan.a
        gen_mats: list[Matrix] = []
        for i in range(1, r + 1):
            cols = []
            for j in range(1, r + 1):
                col = [1 if k == j else 0 for k in range(1, r + 1)]
                if j == i:
                    col = [c - a[k][i - 1] for k, c in enumerate(col)]
                cols.append(tuple(col))
            gen_mats.append(_transpose(tuple(cols)))
        self._gen_mats = tuple(gen_mats)
        self._gen_comats = tuple(_transpose(m) for m in gen_mats)

        ident = _identity_mat(r)
        info: dict[Matrix, tuple[Matrix, int]] = {ident: (ident, 0)}
        order: list[Matrix] = [ident]
        frontier = [ident]
        while frontier:
            nxt = []
            for mat in frontier:
                comat, length = info[mat]
                for i in range(r):
                    m2 = _mat_mul(mat, gen_mats[i])
                    if m2 not in info:
                        info[m2] = (_mat_mul(comat, self._gen_comats[i]), length + 1)
                        order.append(m2)
                        nxt.append(m2)
            frontier = nxt

        # lexicographically least reduced words, peeling smallest left descents
        canon: dict[Matrix, tuple[int, ...]] = {ident: ()}
        for mat in order[1:]:
            length = info[mat][1]
            for i in range(r):
                m2 = _mat_mul(gen_mats[i], mat)
                if info[m2][1] < length:
                    canon[mat] = (i + 1,) + canon[m2]
                    break

        elements = [
            WeylElement(self.cartan, mat, info[mat][0], canon[mat], info[mat][1])
            for mat in order
        ]
        elements.sort(key=lambda w: (w.length, w.word))
        self._elements = tuple(elements)
        self._by_mat = {w.mat: w for w in elements}
        self._identity = elements[0]
        self._w0 = elements[-1]
        if elements[-2].length == self._w0.length:
            raise AssertionError("longest element is not unique")
        self.m = self._w0.length

        idx = {w: t for t, w in enumerate(elements)}
        self._index = idx
        self._right_table = [
            tuple(self._by_mat[_mat_mul(w.mat, gen_mats[i])] for i in range(r))
            for w in elements
        ]
        self._left_table = [
            tuple(self._by_mat[_mat_mul(gen_mats[i], w.mat)] for i in range(r))
            for w in elements
        ]

    # -- basic group operations ----------------------------------------

    @property
    def identity(self) -> WeylElement:
        return self._identity

    @property
    def w0(self) -> WeylElement:
        return self._w0

    def elements(self) -> tuple[WeylElement, ...]:
        return self._elements

    def simple_reflection(self, i: int) -> WeylElement:
        self.cartan._check_index(i)
        return self._by_mat[self._gen_mats[i - 1]]

    def right(self, w: WeylElement, i: int) -> WeylElement:
        """w * s_i."""
        self.cartan._check_index(i)
        return self._right_table[self._index[w]][i - 1]

    def left(self, i: int, w: WeylElement) -> WeylElement:
        """s_i * w."""
        self.cartan._check_index(i)
        return self._left_table[self._index[w]][i - 1]

    def multiply(self, u: WeylElement, v: WeylElement) -> WeylElement:
        return self._by_mat[_mat_mul(u.mat, v.mat)]

    def inverse(self, w: WeylElement) -> WeylElement:
        # comat = (mat^{-1})^T, so the inverse matrix is free
        return self._by_mat[_transpose(w.comat)]

    def from_word(self, word) -> WeylElement:
        w = self._identity
        for i in word:
            w = self.right(w, i)
        return w

    def apply(self, w: WeylElement, lam: Weight) -> Weight:
        return Weight(self.cartan, _mat_vec(w.mat, lam.coords))

    def apply_coweight(self, w: WeylElement, mu: Coweight) -> Coweight:
        return Coweight(self.cartan, _mat_vec(w.comat, mu.coords))

    def w_lambda(self, w: WeylElement, i: int) -> Weight:
        """The chamber weight w . Lambda_i (column i of the action matrix)."""
        return Weight(self.cartan, _column(w.mat, i - 1))

    def w_coroot(self, w: WeylElement, i: int) -> Coweight:
        """w . alpha_i^vee (column i of the coweight action matrix)."""
        return Coweight(self.cartan, _column(w.comat, i - 1))

    def right_descents(self, w: WeylElement) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.rank + 1) if self.right(w, i).length < w.length)

    def left_descents(self, w: WeylElement) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.rank + 1) if self.left(i, w).length < w.length)

    # -- reduced words and word data ------------------------------------

    def reduced_words(self, w: WeylElement) -> tuple[tuple[int, ...], ...]:
        """All reduced words of w, lexicographically sorted."""
        memo = self._reduced_words
        if w in memo:
            return memo[w]
        stack = [w]
        while stack:
            v = stack[-1]
            if v in memo:
                stack.pop()
                continue
            pending = [self.left(i, v) for i in self.left_descents(v)]
            missing = [u for u in pending if u not in memo]
            if missing:
                stack.extend(missing)
                continue
            stack.pop()
            if v.length == 0:
                memo[v] = ((),)
            else:
                words = []
                for i in self.left_descents(v):
                    for tail in memo[self.left(i, v)]:
                        words.append((i,) + tail)
                memo[v] = tuple(sorted(words))
        return memo[w]

    @property
    def reference_word(self) -> tuple[int, ...]:
        return self._w0.word

    def word_data(self, word) -> WordData:
        word = tuple(word)
        cached = self._word_data.get(word)
        if cached is not None:
            return cached
        if len(word) != self.m:
            raise ValueError(f"need a reduced word for w0 of length {self.m}, got {word}")
        prefixes = [self._identity]
        for i in word:
            self.cartan._check_index(i)
            prefixes.append(self.right(prefixes[-1], i))
        if prefixes[-1] != self._w0:
            raise ValueError(f"{word} is not a word for the longest element")
        coroots = tuple(self.w_coroot(prefixes[k], word[k]) for k in range(self.m))
        gammas = tuple(self.w_lambda(prefixes[k + 1], word[k]) for k in range(self.m))
        if any(not b.is_nonneg() for b in coroots):
            raise ValueError(f"{word} is not reduced")
        if len(set(coroots)) != self.m:
            raise AssertionError("coroot sequence of a reduced word must be distinct")
        data = WordData(word, tuple(prefixes), coroots, gammas)
        self._word_data[word] = data
        return data

    @functools.cached_property
    def positive_coroots(self) -> tuple[Coweight, ...]:
        """All positive coroots, in the order induced by the reference word."""
        return self.word_data(self.reference_word).coroots

    @functools.cached_property
    def positive_roots(self) -> tuple[Weight, ...]:
        data = self.word_data(self.reference_word)
        return tuple(
            self.apply(data.prefixes[k], self.cartan.simple_root(data.word[k]))
            for k in range(self.m)
        )

    @functools.cached_property
    def two_rho(self) -> Coweight:
        """Sum of the positive coroots (twice the Weyl vector of the dual side)."""
        total = self.cartan.zero_coweight()
        for b in self.positive_coroots:
            total = total + b
        return total

    # -- chamber weights -------------------------------------------------

    def chamber_weights(self) -> tuple[ChamberWeight, ...]:
        if self._chambers is None:
            seen: dict[tuple[int, ...], int] = {}
            for i in range(1, self.rank + 1):
                for lam in self.weyl_orbit(self.cartan.fundamental_weight(i)):
                    if lam.coords in seen:
                        raise AssertionError("fundamental-weight orbits must be disjoint")
                    seen[lam.coords] = i
            chambers = tuple(
                ChamberWeight(Weight(self.cartan, coords), level)
                for coords, level in sorted(seen.items(), key=lambda kv: (kv[1], kv[0]))
            )
            self._chambers = chambers
            self._chamber_level = {c.weight.coords: c.level for c in chambers}
            self._chamber_index = {c.weight.coords: t for t, c in enumerate(chambers)}
        return self._chambers

    def chamber_level(self, coords: tuple[int, ...]) -> int:
        self.chamber_weights()
        return self._chamber_level[coords]

    def chamber_index(self, coords: tuple[int, ...]) -> int:
        self.chamber_weights()
        return self._chamber_index[coords]

    def weyl_orbit(self, lam: Weight) -> tuple[Weight, ...]:
        if not isinstance(lam, Weight):
            raise TypeError("weyl_orbit acts on weights; apply_coweight handles coweights")
        seen = {lam.coords}
        queue = deque([lam.coords])
        while queue:
            coords = queue.popleft()
            for i in range(self.rank):
                nxt = _mat_vec(self._gen_mats[i], coords)
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        return tuple(Weight(self.cartan, c) for c in sorted(seen))

    # -- 2-faces ----------------------------------------------------------

    def two_faces(
        self, kinds: tuple[str, ...] = ("rectangle", "hexagon", "octagon")
    ) -> tuple[Face, ...]:
        if self._faces is None:
            faces = []
            for i in range(1, self.rank + 1):
                for j in range(i + 1, self.rank + 1):
                    prod = self.cartan.entry(i, j) * self.cartan.entry(j, i)
                    if prod == 0:
                        kind, pair = "rectangle", (i, j)
                    elif prod == 1:
                        kind, pair = "hexagon", (i, j)
                    else:
                        # orient octagons so that a_ij = -1, a_ji = -2
                        pair = (i, j) if self.cartan.entry(i, j) == -1 else (j, i)
                        kind = "octagon"
                    for w in self._elements:
                        if self.right(w, i).length > w.length and self.right(w, j).length > w.length:
                            faces.append(Face(w, pair[0], pair[1], kind))
            self._faces = tuple(faces)
        return tuple(f for f in self._faces if f.kind in kinds)

    # -- braid graph -------------------------------------------------------

    def braid_order(self, i: int, j: int) -> int:
        """Order of s_i s_j: 2, 3 or 4 for a_ij a_ji = 0, 1, 2."""
        prod = self.cartan.entry(i, j) * self.cartan.entry(j, i)
        return {0: 2, 1: 3, 2: 4}[prod]

    def braid_graph(self) -> BraidGraph:
        if self._braid_graph is None:
            words = self.reduced_words(self._w0)
            node_set = set(words)
            adjacency = {}
            for word in words:
                out = []
                for k in range(self.m - 1):
                    x, y = word[k], word[k + 1]
                    d = self.braid_order(x, y)
                    if k + d > self.m:
                        continue
                    window = word[k : k + d]
                    alt = tuple(x if t % 2 == 0 else y for t in range(d))
                    if window != alt:
                        continue
                    flipped = tuple(y if t % 2 == 0 else x for t in range(d))
                    dst = word[:k] + flipped + word[k + d :]
                    if dst not in node_set:
                        raise AssertionError("braid move left the reduced-word set")
                    out.append(BraidEdge(word, dst, k, d))
                adjacency[word] = tuple(out)
            self._braid_graph = BraidGraph(words, adjacency)
        return self._braid_graph

    # -- numerics ----------------------------------------------------------

    def _parts_matrix(self) -> np.ndarray:
        if self._parts is None:
            self._parts = np.array(
                [b.coords for b in self.positive_coroots], dtype=np.int64
            )
        return self._parts

    def kpf(self, mu: Coweight) -> int:
        """Number of multisets of positive coroots summing to mu."""
        if mu.cartan != self.cartan:
            raise ValueError("coweight belongs to a different Cartan datum")
        key = mu.coords
        if key not in self._kpf:
            if not mu.is_nonneg():
                self._kpf[key] = 0
            else:
                target = np.array(key, dtype=np.int64)
                self._kpf[key] = int(
                    _kernels.count_nonneg_combinations(self._parts_matrix(), target)
                )
        return self._kpf[key]

    def coweight_ge(self, w: WeylElement, mu: Coweight, nu: Coweight) -> bool:
        """Twisted dominance: <mu - nu, w.Lambda_i> >= 0 for every i."""
        diff = (mu - nu).coords
        return all(
            sum(d * c for d, c in zip(diff, _column(w.mat, i))) >= 0
            for i in range(self.rank)
        )


@functools.lru_cache(maxsize=None)
def weyl_group(cartan: CartanDatum) -> WeylGroup:
    return WeylGroup(cartan)
