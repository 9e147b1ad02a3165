"""Prime polytopes and Minkowski decomposition.

Each hexagonal 2-face relation picks one of 2 minimum arguments and each
octagonal face one of 3 x 3; resolving every minimum turns the piecewise
linear constraints into a rational polyhedral cone in value space (with the
bottom-vertex values pinned to zero).  Cones whose dimension equals the number
of positive coroots are the maximal ones; the Hilbert bases of their
edge-length charts are the prime polytopes, and any polytope decomposes as a
Minkowski sum of primes from the single cluster whose cone contains it.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from fractions import Fraction

from . import bz, cones, lusztig, polytope
from .bz import BZDatum
from .cartan import CartanDatum
from .weyl import Face, WeylGroup

Vec = tuple[int, ...]


@dataclass(frozen=True)
class Relation:
    """One min-equation on a 2-face: lhs = min(args), as value-space rows."""

    face: Face
    index: int  # 0 for hexagons; 0 or 1 for the two octagon equations
    lhs: Vec
    args: tuple[Vec, ...]


@dataclass(frozen=True)
class PrimePolytope:
    label: str
    datum: BZDatum
    coweight: Vec


@dataclass(frozen=True)
class Cluster:
    """A maximal choice cone together with its Hilbert generators."""

    choice: Vec  # chosen argument per relation
    labels: tuple[str, ...]
    gens_n: tuple[Vec, ...]  # generator edge-length vectors, aligned with labels
    rays_m: tuple[Vec, ...]
    eq_rows: tuple[Vec, ...]
    ineq_rows: tuple[Vec, ...]
    ineq_rows_n: tuple[Vec, ...]


@dataclass(frozen=True)
class Catalog:
    cartan: CartanDatum
    n_choices: int
    dims: tuple[int, ...]  # cone dimension per choice, in choice order
    clusters: tuple[Cluster, ...]
    primes: tuple[PrimePolytope, ...]
    relations: tuple[Relation, ...]

    @property
    def n_maximal(self) -> int:
        return len(self.clusters)


def _unit(size: int, idx: int, coef: int = 1) -> list[int]:
    row = [0] * size
    row[idx] = coef
    return row


def _add(size: int, *terms: tuple[int, int]) -> Vec:
    row = [0] * size
    for idx, coef in terms:
        row[idx] += coef
    return tuple(row)


def _sub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def edge_row(group: WeylGroup, w, i: int) -> Vec:
    """Coefficient vector of the edge length at (w, i) over the value tuple."""
    size = len(group.chamber_weights())
    wsi = group.right(w, i)
    terms = [
        (group.chamber_index(group.w_lambda(w, i).coords), -1),
        (group.chamber_index(group.w_lambda(wsi, i).coords), -1),
    ]
    for j in range(1, group.rank + 1):
        if j != i:
            terms.append(
                (
                    group.chamber_index(group.w_lambda(w, j).coords),
                    -group.cartan.entry(j, i),
                )
            )
    return _add(size, *terms)


def face_relations(group: WeylGroup, face: Face) -> tuple[Relation, ...]:
    size = len(group.chamber_weights())
    w, i, j = face.w, face.i, face.j
    ix = lambda u, t: group.chamber_index(group.w_lambda(u, t).coords)
    wsi, wsj = group.right(w, i), group.right(w, j)
    iA, iB = ix(w, i), ix(w, j)
    iC, iD = ix(wsi, i), ix(wsj, j)
    iE = ix(group.right(wsi, j), j)
    iF = ix(group.right(wsj, i), i)
    if face.kind == "hexagon":
        lhs = _add(size, (iC, 1), (iD, 1))
        args = (_add(size, (iA, 1), (iE, 1)), _add(size, (iF, 1), (iB, 1)))
        return (Relation(face, 0, lhs, args),)
    iG = ix(group.right(group.right(wsi, j), i), i)
    iH = ix(group.right(group.right(wsj, i), j), j)
    lhs1 = _add(size, (iD, 1), (iE, 1), (iC, 1))
    args1 = (
        _add(size, (iE, 2), (iA, 1)),
        _add(size, (iB, 2), (iG, 1)),
        _add(size, (iB, 1), (iH, 1), (iC, 1)),
    )
    lhs2 = _add(size, (iF, 1), (iE, 2), (iC, 1))
    args2 = (
        _add(size, (iB, 2), (iG, 2)),
        _add(size, (iH, 2), (iC, 2)),
        _add(size, (iG, 1), (iE, 2), (iA, 1)),
    )
    return (Relation(face, 0, lhs1, args1), Relation(face, 1, lhs2, args2))


def _choice_rows(
    group: WeylGroup, relations, choice
) -> tuple[list[Vec], list[Vec]]:
    size = len(group.chamber_weights())
    eq = [
        tuple(_unit(size, group.chamber_index(group.cartan.fundamental_weight(i).coords)))
        for i in range(1, group.rank + 1)
    ]
    ineq = [edge_row(group, w, i) for w, i in bz.edge_pairs(group)]
    for rel, k in zip(relations, choice):
        eq.append(_sub(rel.args[k], rel.lhs))
        for t, arg in enumerate(rel.args):
            if t != k:
                ineq.append(_sub(arg, rel.args[k]))
    return eq, ineq


def _length_rows(group: WeylGroup) -> list[Vec]:
    data = group.word_data(group.reference_word)
    return [
        edge_row(group, data.prefixes[k], data.word[k]) for k in range(group.m)
    ]


def build_catalog(group: WeylGroup, limit: int = 10_000) -> Catalog:
    """Evaluate every face choice, keep the maximal cones, extract the primes."""
    if group._catalog is not None:
        return group._catalog
    relations = tuple(
        rel
        for face in group.two_faces(("hexagon", "octagon"))
        for rel in face_relations(group, face)
    )
    n_choices = 1
    for rel in relations:
        n_choices *= len(rel.args)
    if n_choices > limit:
        raise ValueError(
            f"{n_choices} face choices exceed the limit of {limit}; "
            "raise the limit to force the computation"
        )
    size = len(group.chamber_weights())
    length_rows = _length_rows(group)
    ref = group.reference_word

    dims: list[int] = []
    maximal = []  # (choice, eq, ineq, P, rays_m)
    nonmax = []  # (choice, rays_m)
    for choice in itertools.product(*[range(len(r.args)) for r in relations]):
        eq, ineq = _choice_rows(group, relations, choice)
        basis = cones.nullspace(eq, size)
        if not basis:
            dims.append(0)
            continue
        q = len(basis)
        chart_rows = [tuple(cones._dot(row, p) for p in basis) for row in ineq]
        rays_x = cones.extreme_rays(chart_rows, q)
        rays_m = [
            cones.primitive(
                [sum(x[j] * basis[j][g] for j in range(q)) for g in range(size)]
            )
            for x in rays_x
        ]
        dim = cones.rank(rays_m) if rays_m else 0
        dims.append(dim)
        if dim == group.m:
            maximal.append((choice, tuple(map(tuple, eq)), tuple(map(tuple, ineq)), basis, rays_m))
        elif dim > 0:
            nonmax.append((choice, rays_m))

    # every lower-dimensional cone should sit inside some maximal one
    for choice, rays_m in nonmax:
        covered = any(
            all(
                all(cones._dot(e, r) == 0 for e in eq)
                and all(cones._dot(s, r) >= 0 for s in ineq)
                for r in rays_m
            )
            for _, eq, ineq, _, _ in maximal
        )
        if not covered:
            warnings.warn(
                f"choice {choice} spans a cone outside every maximal cone",
                stacklevel=2,
            )

    prime_data: dict[tuple[int, ...], BZDatum] = {}
    raw_clusters = []
    for choice, eq, ineq, basis, rays_m in maximal:
        q = len(basis)
        lp = [[Fraction(cones._dot(lrow, p)) for p in basis] for lrow in length_rows]
        lp_inv = cones.invert(lp)
        # chart back-map: value vector = R @ edge-length vector
        R = [
            [
                sum(Fraction(basis[j][g]) * lp_inv[j][k] for j in range(q))
                for k in range(group.m)
            ]
            for g in range(size)
        ]
        rows_n = []
        for row in ineq:
            image = [
                sum(Fraction(row[g]) * R[g][k] for g in range(size))
                for k in range(group.m)
            ]
            if any(image):
                rows_n.append(cones.clear_denominators(image))
        rays_n = []
        for ray in rays_m:
            rn = tuple(cones._dot(lrow, ray) for lrow in length_rows)
            assert all(v >= 0 for v in rn) and cones.primitive(rn) == rn
            rays_n.append(rn)
        gens = cones.hilbert_basis(rays_n, rows_n)
        datums = []
        for g in gens:
            back = [
                sum(R[t][k] * g[k] for k in range(group.m)) for t in range(size)
            ]
            assert all(v.denominator == 1 for v in back)
            datum = bz.from_lusztig(group, ref, g)
            assert datum.values == tuple(int(v) for v in back)
            datums.append(datum)
            prime_data.setdefault(datum.values, datum)
        raw_clusters.append((choice, eq, ineq, tuple(rows_n), tuple(gens), datums))

    def prime_key(values):
        datum = prime_data[values]
        return (polytope.coweight(group, datum).coords, values)

    ordered = sorted(prime_data, key=prime_key)
    labels = {values: f"P{t + 1}" for t, values in enumerate(ordered)}
    primes = tuple(
        PrimePolytope(labels[v], prime_data[v], polytope.coweight(group, prime_data[v]).coords)
        for v in ordered
    )
    clusters = []
    for t, (choice, eq, ineq, rows_n, gens, datums) in enumerate(raw_clusters):
        pairs = sorted(
            zip(gens, datums), key=lambda gd: int(labels[gd[1].values][1:])
        )
        clusters.append(
            Cluster(
                choice=tuple(choice),
                labels=tuple(labels[d.values] for _, d in pairs),
                gens_n=tuple(g for g, _ in pairs),
                rays_m=tuple(maximal[t][4]),
                eq_rows=eq,
                ineq_rows=ineq,
                ineq_rows_n=rows_n,
            )
        )
    catalog = Catalog(
        cartan=group.cartan,
        n_choices=n_choices,
        dims=tuple(dims),
        clusters=tuple(clusters),
        primes=primes,
        relations=relations,
    )
    group._catalog = catalog
    return catalog


def prime_by_label(catalog: Catalog, label: str) -> PrimePolytope:
    for p in catalog.primes:
        if p.label == label:
            return p
    raise KeyError(label)


def decompose(
    group: WeylGroup, datum: BZDatum, catalog: Catalog | None = None
) -> tuple[tuple[PrimePolytope, int], ...]:
    """Write a polytope as a Minkowski sum of primes with multiplicities.

    The datum must be normalized (bottom vertex at the origin) and valid.
    """
    if polytope.mu1(group, datum).coords != group.cartan.zero_coweight().coords:
        raise ValueError("decompose needs a normalized datum (bottom vertex 0)")
    report = bz.validate(group, datum)
    if not report.is_valid:
        raise ValueError("cannot decompose invalid data: " + "; ".join(report.lines()))
    if catalog is None:
        catalog = build_catalog(group)
    M = datum.values
    cluster = None
    for c in catalog.clusters:
        if all(cones._dot(e, M) == 0 for e in c.eq_rows) and all(
            cones._dot(s, M) >= 0 for s in c.ineq_rows
        ):
            cluster = c
            break
    if cluster is None:
        raise RuntimeError("no maximal cone contains the datum")
    target = bz.lusztig_data(group, datum, group.reference_word)
    gens = cluster.gens_n
    rows_n = cluster.ineq_rows_n
    counts = [0] * len(gens)

    def in_cone(vec) -> bool:
        return all(v >= 0 for v in vec) and all(
            sum(r * x for r, x in zip(row, vec)) >= 0 for row in rows_n
        )

    def search(pos: int, rem: tuple[int, ...]) -> bool:
        if all(v == 0 for v in rem):
            return True
        if pos == len(gens):
            return False
        if not in_cone(rem):
            return False
        g = gens[pos]
        cap = min(
            (rem[j] // g[j] for j in range(len(g)) if g[j] > 0), default=0
        )
        for c in range(cap, -1, -1):
            counts[pos] = c
            if search(pos + 1, tuple(r - c * v for r, v in zip(rem, g))):
                return True
        counts[pos] = 0
        return False

    if not search(0, tuple(target)):
        raise RuntimeError("Hilbert generators failed to reach the datum")
    by_label = {p.label: p for p in catalog.primes}
    out = []
    total = [0] * len(M)
    for label, count in zip(cluster.labels, counts):
        if count:
            prime = by_label[label]
            out.append((prime, count))
            total = [t + count * v for t, v in zip(total, prime.datum.values)]
    if tuple(total) != M:
        raise AssertionError("prime multiples do not sum back to the datum")
    return tuple(out)
