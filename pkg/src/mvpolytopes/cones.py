"""Exact rational polyhedral-cone routines: nullspaces, extreme rays by double
description, and Hilbert bases of pointed rational cones with nonnegative rays.

Everything runs over Fractions / Python ints; no floating point ever enters,
so cone membership and ray computations are decisions, not approximations.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import numpy as np

from . import _kernels

Vec = tuple[int, ...]


def primitive(vec) -> Vec:
    """Divide an integer vector by the gcd of its entries; keeps direction."""
    vals = [int(v) for v in vec]
    g = 0
    for v in vals:
        g = gcd(g, abs(v))
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    return tuple(v // g for v in vals)


def clear_denominators(row) -> Vec:
    """Scale a rational vector by a positive rational into a primitive int one."""
    fr = [Fraction(v) for v in row]
    lcm = 1
    for v in fr:
        lcm = lcm * v.denominator // gcd(lcm, v.denominator)
    return primitive([int(v * lcm) for v in fr])


class _Echelon:
    """Incremental row echelon over Q, for ranks and independence tests."""

    def __init__(self):
        self.rows: list[list[Fraction]] = []
        self.pivots: list[int] = []

    def reduce(self, row) -> list[Fraction]:
        row = [Fraction(v) for v in row]
        for prow, p in zip(self.rows, self.pivots):
            if row[p]:
                coef = row[p] / prow[p]
                row = [a - coef * b for a, b in zip(row, prow)]
        return row

    def add(self, row) -> bool:
        """Insert the row; True when it was independent of the current span."""
        red = self.reduce(row)
        for p, v in enumerate(red):
            if v:
                self.rows.append(red)
                self.pivots.append(p)
                return True
        return False

    @property
    def rank(self) -> int:
        return len(self.rows)


def rank(rows) -> int:
    ech = _Echelon()
    for row in rows:
        ech.add(row)
    return ech.rank


def nullspace(rows, width: int) -> list[Vec]:
    """Primitive integer basis of {x : row . x = 0 for all rows}."""
    ech = _Echelon()
    for row in rows:
        if len(row) != width:
            raise ValueError("row width mismatch")
        ech.add(row)
    # full reduction upward so each pivot column is isolated
    rows_ = [r[:] for r in ech.rows]
    order = sorted(range(len(rows_)), key=lambda t: ech.pivots[t])
    rows_ = [rows_[t] for t in order]
    pivots = [ech.pivots[t] for t in order]
    for t, p in enumerate(pivots):
        rows_[t] = [v / rows_[t][p] for v in rows_[t]]
        for s in range(len(rows_)):
            if s != t and rows_[s][p]:
                coef = rows_[s][p]
                rows_[s] = [a - coef * b for a, b in zip(rows_[s], rows_[t])]
    free = [j for j in range(width) if j not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * width
        vec[f] = Fraction(1)
        for t, p in enumerate(pivots):
            vec[p] = -rows_[t][f]
        basis.append(clear_denominators(vec))
    return basis


def invert(mat: list[list[Fraction]]) -> list[list[Fraction]]:
    q = len(mat)
    aug = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(q)]
           for i, row in enumerate(mat)]
    for col in range(q):
        piv = next((t for t in range(col, q) if aug[t][col]), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for t in range(q):
            if t != col and aug[t][col]:
                coef = aug[t][col]
                aug[t] = [a - coef * b for a, b in zip(aug[t], aug[col])]
    return [row[q:] for row in aug]


def det(mat) -> Fraction:
    rows = [[Fraction(v) for v in row] for row in mat]
    q = len(rows)
    out = Fraction(1)
    for col in range(q):
        piv = next((t for t in range(col, q) if rows[t][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            out = -out
        out *= rows[col][col]
        for t in range(col + 1, q):
            if rows[t][col]:
                coef = rows[t][col] / rows[col][col]
                rows[t] = [a - coef * b for a, b in zip(rows[t], rows[col])]
    return out


def _dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


def extreme_rays(ineq_rows: list[Vec], dim: int) -> list[Vec]:
    """Extreme rays of the pointed cone {x in R^dim : A x >= 0}.

    Double description with combinatorial adjacency; zero-sets are tracked
    exactly, which the incremental update formula keeps valid.  Raises when
    the cone is not pointed (rank of A below dim).
    """
    if dim == 0:
        return []
    ech = _Echelon()
    chosen: list[int] = []
    for idx, row in enumerate(ineq_rows):
        if ech.add(row):
            chosen.append(idx)
            if len(chosen) == dim:
                break
    if len(chosen) < dim:
        raise ValueError("cone is not pointed")
    base = [list(ineq_rows[i]) for i in chosen]
    binv = invert(base)
    rays: list[Vec] = []
    zerosets: list[frozenset[int]] = []
    for j in range(dim):
        col = clear_denominators([binv[t][j] for t in range(dim)])
        rays.append(col)
        zerosets.append(frozenset(chosen[t] for t in range(dim) if t != j))
    chosen_set = set(chosen)
    for t, row in enumerate(ineq_rows):
        if t in chosen_set:
            continue
        vals = [_dot(row, r) for r in rays]
        if all(v >= 0 for v in vals):
            zerosets = [
                z | {t} if v == 0 else z for z, v in zip(zerosets, vals)
            ]
            continue
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        zero = [i for i, v in enumerate(vals) if v == 0]
        new_rays: list[Vec] = []
        new_zero: list[frozenset[int]] = []
        for p in pos:
            for n in neg:
                meet = zerosets[p] & zerosets[n]
                adjacent = True
                for o in range(len(rays)):
                    if o != p and o != n and meet <= zerosets[o]:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                combo = [
                    vals[p] * rn - vals[n] * rp
                    for rp, rn in zip(rays[p], rays[n])
                ]
                new_rays.append(primitive(combo))
                new_zero.append(meet | {t})
        rays = (
            [rays[i] for i in pos]
            + [rays[i] for i in zero]
            + new_rays
        )
        zerosets = (
            [zerosets[i] for i in pos]
            + [zerosets[i] | {t} for i in zero]
            + new_zero
        )
    for r in rays:
        if any(_dot(row, r) < 0 for row in ineq_rows):
            raise AssertionError("ray escapes the cone")
    return rays


def hilbert_basis(rays: list[Vec], ineq_rows: list[Vec]) -> list[Vec]:
    """Minimal generating set of the monoid of lattice points of the cone.

    The cone must be pointed with componentwise-nonnegative rays (true in the
    edge-length chart, where coordinates are themselves edge inequalities).
    Simplicial unimodular cones shortcut to their rays; otherwise candidates
    are the lattice points of the box bounded by the ray sum, which contains
    the zonotope where all irreducible elements live.
    """
    if not rays:
        return []
    dim = len(rays[0])
    if any(v < 0 for r in rays for v in r):
        raise ValueError("hilbert_basis needs nonnegative rays")
    if len(rays) == rank(rays) == dim and abs(det(rays)) == 1:
        return sorted(rays)
    bounds = np.array([sum(r[j] for r in rays) for j in range(dim)], dtype=np.int64)
    ineqs = np.array(ineq_rows, dtype=np.int64).reshape(-1, dim)
    pts = _kernels.filter_box_points(bounds, ineqs)
    cands = {tuple(int(v) for v in row) for row in pts}
    cands.discard(tuple([0] * dim))
    basis = []
    for g in sorted(cands):
        reducible = False
        for c in cands:
            if c == g or any(cv > gv for cv, gv in zip(c, g)):
                continue
            if tuple(gv - cv for gv, cv in zip(g, c)) in cands:
                reducible = True
                break
        if not reducible:
            basis.append(g)
    return basis
