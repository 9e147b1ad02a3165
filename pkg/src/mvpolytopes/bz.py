"""Integer data on chamber weights, their validity checks, and the bijection
with Lusztig data.

A datum assigns an integer M_gamma to every chamber weight gamma = w.Lambda_i.
It describes a polytope {x : <x, gamma> >= M_gamma} when the edge inequalities
hold, and a polytope with the full tropical structure when additionally every
hexagonal and octagonal 2-face relation holds.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from . import lusztig
from .cartan import CartanDatum, Coweight
from .weyl import Face, WeylElement, WeylGroup, weyl_group


@dataclass(frozen=True)
class BZDatum:
    """Complete integer assignment on chamber weights.

    ``values`` is aligned with ``weyl_group(cartan).chamber_weights()``; the
    tuple form makes data hashable so collections of polytopes deduplicate.
    """

    cartan: CartanDatum
    values: tuple[int, ...]

    def __post_init__(self):
        group = weyl_group(self.cartan)
        if len(self.values) != len(group.chamber_weights()):
            raise ValueError(
                f"expected {len(group.chamber_weights())} values, got {len(self.values)}"
            )
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))

    def value(self, coords) -> int:
        return self.values[weyl_group(self.cartan).chamber_index(tuple(coords))]

    def as_dict(self) -> dict[tuple[int, ...], int]:
        group = weyl_group(self.cartan)
        return {
            c.weight.coords: v for c, v in zip(group.chamber_weights(), self.values)
        }


def make_bz(group: WeylGroup, values: dict) -> BZDatum:
    """Build a datum from a coords -> int mapping; must cover Gamma exactly."""
    chambers = group.chamber_weights()
    known = {c.weight.coords for c in chambers}
    extra = set(map(tuple, values)) - known
    if extra:
        raise ValueError(f"not chamber weights: {sorted(extra)}")
    missing = known - set(map(tuple, values))
    if missing:
        raise ValueError(f"missing chamber weights: {sorted(missing)}")
    return BZDatum(group.cartan, tuple(values[c.weight.coords] for c in chambers))


# -- edge inequalities --------------------------------------------------------


def edge_length(group: WeylGroup, datum: BZDatum, w: WeylElement, i: int) -> int:
    """Lattice length of the polytope edge from vertex mu_w towards mu_{w s_i}.

    Requires l(w s_i) > l(w).  Nonnegative on valid data; the edge inequality
    at (w, i) is exactly "this length is >= 0".
    """
    wsi = group.right(w, i)
    val = -datum.value(group.w_lambda(w, i).coords)
    val -= datum.value(group.w_lambda(wsi, i).coords)
    for j in range(1, group.rank + 1):
        if j != i:
            val -= group.cartan.entry(j, i) * datum.value(group.w_lambda(w, j).coords)
    return val


def edge_pairs(group: WeylGroup) -> tuple[tuple[WeylElement, int], ...]:
    """All (w, i) with l(w s_i) > l(w); one per edge of the vertex path graph."""
    return tuple(
        (w, i)
        for w in group.elements()
        for i in range(1, group.rank + 1)
        if group.right(w, i).length > w.length
    )


# -- 2-face relations ---------------------------------------------------------


def _face_residuals(group: WeylGroup, datum: BZDatum, face: Face) -> tuple[int, ...]:
    """For each min-relation on the face, min(arguments) - lhs; all 0 iff it holds.

    Positive residual means the lhs undershoots the min (strict concavity
    excess); negative means the relation is violated in the convex direction.
    """
    w, i, j = face.w, face.i, face.j
    M = datum.value
    wl = lambda u, t: M(group.w_lambda(u, t).coords)
    wsi = group.right(w, i)
    wsj = group.right(w, j)
    A, B = wl(w, i), wl(w, j)
    C, D = wl(wsi, i), wl(wsj, j)
    if face.kind == "rectangle":
        return ()
    if face.kind == "hexagon":
        E = wl(group.right(wsi, j), j)
        F = wl(group.right(wsj, i), i)
        return (min(A + E, F + B) - (C + D),)
    # octagon, oriented so a_ij = -1 and a_ji = -2
    E = wl(group.right(wsi, j), j)
    F = wl(group.right(wsj, i), i)
    G = wl(group.right(group.right(wsi, j), i), i)
    H = wl(group.right(group.right(wsj, i), j), j)
    r1 = min(2 * E + A, 2 * B + G, B + H + C) - (D + E + C)
    r2 = min(2 * B + 2 * G, 2 * H + 2 * C, G + 2 * E + A) - (F + 2 * E + C)
    return (r1, r2)


def face_relation_holds(group: WeylGroup, datum: BZDatum, face: Face) -> bool:
    return all(r == 0 for r in _face_residuals(group, datum, face))


# -- validation ----------------------------------------------------------------


@dataclass(frozen=True)
class ValidationReport:
    edge_violations: tuple[tuple[tuple[int, ...], int, int], ...]  # (word, i, length)
    face_violations: tuple[tuple[tuple[int, ...], int, int, tuple[int, ...]], ...]
    # (word, i, j, residuals)

    @property
    def is_valid(self) -> bool:
        return not self.edge_violations and not self.face_violations

    def lines(self) -> list[str]:
        out = []
        for word, i, c in self.edge_violations:
            out.append(f"edge (w={list(word)}, i={i}): length {c} < 0")
        for word, i, j, res in self.face_violations:
            out.append(
                f"face (w={list(word)}, i={i}, j={j}): min-relation residuals {list(res)}"
            )
        if not out:
            out.append("valid")
        return out


def validate(group: WeylGroup, datum: BZDatum) -> ValidationReport:
    edge_bad = []
    for w, i in edge_pairs(group):
        c = edge_length(group, datum, w, i)
        if c < 0:
            edge_bad.append((w.word, i, c))
    face_bad = []
    for face in group.two_faces(("hexagon", "octagon")):
        res = _face_residuals(group, datum, face)
        if any(r != 0 for r in res):
            face_bad.append((face.w.word, face.i, face.j, res))
    return ValidationReport(tuple(edge_bad), tuple(face_bad))


def is_valid(group: WeylGroup, datum: BZDatum) -> bool:
    return validate(group, datum).is_valid


# -- Lusztig data <-> datum -----------------------------------------------------


def from_lusztig(group: WeylGroup, word, n) -> BZDatum:
    """Datum of the polytope with Lusztig data ``n`` along ``word``.

    Propagates n across the braid-move graph until every chamber weight has
    received a value, cross-checking every revisited word and every shared
    chamber weight; disagreement is an implementation error, not bad input.
    """
    word = tuple(word)
    graph = group.braid_graph()
    if word not in graph.adjacency:
        raise ValueError(f"{word} is not a reduced word for the longest element")
    total = len(group.chamber_weights())
    values: dict[tuple[int, ...], int] = {}

    def merge(w, nv):
        for coords, val in lusztig.n_to_partial_M(group, w, nv).items():
            if values.setdefault(coords, val) != val:
                raise RuntimeError(
                    f"inconsistent value at chamber weight {coords}: "
                    f"{values[coords]} vs {val} from word {w}"
                )

    n_by_word = {word: lusztig._check_lusztig(group, word, n)[1]}
    merge(word, n_by_word[word])
    queue = deque([word])
    while queue:
        src = queue.popleft()
        for e in graph.adjacency[src]:
            known = e.dst in n_by_word
            if not known and len(values) == total:
                continue
            moved = lusztig.braid_transition(group, e, n_by_word[src])
            if known:
                if n_by_word[e.dst] != moved:
                    raise RuntimeError(
                        f"path-dependent transport: word {e.dst} reached with "
                        f"{moved} but previously {n_by_word[e.dst]}"
                    )
                continue
            n_by_word[e.dst] = moved
            merge(e.dst, moved)
            queue.append(e.dst)
    if len(values) != total:
        raise AssertionError("braid moves did not reach every chamber weight")
    datum = make_bz(group, values)
    report = validate(group, datum)
    if not report.is_valid:
        raise RuntimeError(
            "transported data violates polytope conditions: " + "; ".join(report.lines())
        )
    return datum


def lusztig_data(group: WeylGroup, datum: BZDatum, word) -> tuple[int, ...]:
    """Edge lengths along the vertex path of ``word``; inverts from_lusztig."""
    data = group.word_data(tuple(word))
    return tuple(
        edge_length(group, datum, data.prefixes[k], data.word[k])
        for k in range(group.m)
    )
