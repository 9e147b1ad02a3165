"""Geometry of the polytopes behind validated data: vertices, support values,
translation, Minkowski sums, and exhaustive enumeration by total coweight.
"""

from __future__ import annotations

from . import bz, lusztig
from .bz import BZDatum
from .cartan import Coweight, Weight, pairing
from .weyl import WeylElement, WeylGroup


def vertex(group: WeylGroup, datum: BZDatum, w: WeylElement) -> Coweight:
    """The vertex mu_w = sum_i M_{w Lambda_i} w.alpha_i^vee."""
    total = group.cartan.zero_coweight()
    for i in range(1, group.rank + 1):
        total = total + datum.value(group.w_lambda(w, i).coords) * group.w_coroot(w, i)
    return total


def vertices(group: WeylGroup, datum: BZDatum) -> dict[WeylElement, Coweight]:
    return {w: vertex(group, datum, w) for w in group.elements()}


def mu1(group: WeylGroup, datum: BZDatum) -> Coweight:
    """Bottom vertex (at the identity chamber)."""
    return vertex(group, datum, group.identity)


def mu2(group: WeylGroup, datum: BZDatum) -> Coweight:
    """Top vertex (at the w0 chamber)."""
    return vertex(group, datum, group.w0)


def coweight(group: WeylGroup, datum: BZDatum) -> Coweight:
    """mu2 - mu1, the total coweight spanned by the polytope."""
    return mu2(group, datum) - mu1(group, datum)


def translate(group: WeylGroup, datum: BZDatum, nu: Coweight) -> BZDatum:
    """Shift the polytope by nu: every M_gamma gains <nu, gamma>."""
    chambers = group.chamber_weights()
    return BZDatum(
        group.cartan,
        tuple(
            v + pairing(nu, c.weight) for v, c in zip(datum.values, chambers)
        ),
    )


def normalize(group: WeylGroup, datum: BZDatum) -> BZDatum:
    """Translate so the bottom vertex sits at the origin."""
    return translate(group, datum, -mu1(group, datum))


def minkowski_sum(group: WeylGroup, *data: BZDatum) -> BZDatum:
    """Componentwise sum of the values; support functions of polytopes add."""
    if not data:
        raise ValueError("need at least one datum")
    vals = [0] * len(data[0].values)
    for d in data:
        if d.cartan != group.cartan:
            raise ValueError("datum belongs to a different Cartan datum")
        vals = [a + b for a, b in zip(vals, d.values)]
    return BZDatum(group.cartan, tuple(vals))


def scale(group: WeylGroup, datum: BZDatum, c: int) -> BZDatum:
    if c < 0:
        raise ValueError("scale factor must be nonnegative")
    return BZDatum(group.cartan, tuple(c * v for v in datum.values))


def containing_chambers(group: WeylGroup, alpha: Weight) -> list[WeylElement]:
    """Chambers w with alpha in the nonnegative span of w.Lambda_1..w.Lambda_r."""
    out = []
    for w in group.elements():
        if all(
            pairing(group.w_coroot(w, i), alpha) >= 0 for i in range(1, group.rank + 1)
        ):
            out.append(w)
    return out


def psi(group: WeylGroup, datum: BZDatum, alpha: Weight) -> int:
    """Support minimum of the polytope in direction alpha.

    Evaluated as the minimum over containing chambers of the chamber-linear
    extension; on valid data all containing chambers agree.
    """
    best = None
    for w in containing_chambers(group, alpha):
        val = sum(
            pairing(group.w_coroot(w, i), alpha)
            * datum.value(group.w_lambda(w, i).coords)
            for i in range(1, group.rank + 1)
        )
        if best is None or val < best:
            best = val
    if best is None:
        raise AssertionError("every weight lies in some chamber")
    return best


def weyl_thresholds(group: WeylGroup, lam: Coweight) -> tuple[int, ...]:
    """Per-level lower bounds cutting out the convex hull of the orbit of lam.

    A polytope lies in conv(W.lam) iff M_gamma >= t_{level(gamma)} for all
    gamma, where t_i = <w0.lam, Lambda_i>.
    """
    if not lam.is_dominant():
        raise ValueError(f"coweight {lam.coords} is not dominant")
    return group.apply_coweight(group.w0, lam).coords


def contains_in_weyl(group: WeylGroup, datum: BZDatum, lam: Coweight) -> bool:
    """Whether the polytope sits inside the convex hull of the W-orbit of lam."""
    t = weyl_thresholds(group, lam)
    return all(
        v >= t[c.level - 1] for v, c in zip(datum.values, group.chamber_weights())
    )


def enumerate_mv(group: WeylGroup, mu: Coweight) -> tuple[BZDatum, ...]:
    """All polytopes from the origin to mu, one per Lusztig datum; cached."""
    if mu.cartan != group.cartan:
        raise ValueError("coweight belongs to a different Cartan datum")
    key = mu.coords
    cache = group._mv_cache
    if key not in cache:
        if not mu.is_nonneg():
            cache[key] = ()
        else:
            word = group.reference_word
            out = tuple(
                bz.from_lusztig(group, word, n)
                for n in lusztig.enumerate_lusztig(group, word, mu)
            )
            if len({d.values for d in out}) != len(out):
                raise AssertionError("distinct Lusztig data produced equal polytopes")
            cache[key] = out
    return cache[key]
