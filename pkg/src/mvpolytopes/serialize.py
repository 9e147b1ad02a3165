"""JSON documents for polytopes and prime catalogs.

Values are keyed by chamber-weight coordinates ("c1,c2"); type A documents may
instead use subset digit strings ("13" for {1,3}).  Serialization is
canonical: sorted keys, no whitespace, one trailing newline, so equal objects
produce byte-identical documents.
"""

from __future__ import annotations

import json

from . import bz, polytope, primes, sln
from .bz import BZDatum
from .cartan import build_cartan
from .weyl import WeylGroup, weyl_group


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False) + "\n"


def coords_key(coords) -> str:
    return ",".join(str(int(c)) for c in coords)


def parse_coords_key(key: str, rank: int) -> tuple[int, ...]:
    parts = key.split(",")
    if len(parts) != rank:
        raise ValueError(f"expected {rank} coordinates in {key!r}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"bad coordinate key {key!r}") from None


def word_key(word) -> str:
    return ",".join(str(int(i)) for i in word)


def parse_word_key(key: str) -> tuple[int, ...]:
    if not key:
        return ()
    return tuple(int(p) for p in key.split(","))


def group_doc(group: WeylGroup) -> dict:
    return {"family": group.cartan.family, "rank": group.cartan.rank}


def _value_key(group: WeylGroup, coords, subset_keys: bool) -> str:
    if not subset_keys:
        return coords_key(coords)
    if group.cartan.family != "A":
        raise ValueError("subset keys only make sense in type A")
    return sln.subset_key(sln.subset_of_coords(group.rank + 1, coords))


def datum_to_doc(
    group: WeylGroup,
    datum: BZDatum,
    words=(),
    subset_keys: bool = False,
) -> dict:
    values = {
        _value_key(group, c.weight.coords, subset_keys): v
        for c, v in zip(group.chamber_weights(), datum.values)
    }
    verts = polytope.vertices(group, datum)
    doc = {
        "group": group_doc(group),
        "values": values,
        "mu1": list(polytope.mu1(group, datum).coords),
        "mu2": list(polytope.mu2(group, datum).coords),
        "valid": bz.is_valid(group, datum),
        "vertices": {word_key(w.word): list(v.coords) for w, v in verts.items()},
    }
    if words:
        doc["lusztig"] = {
            word_key(w): list(bz.lusztig_data(group, datum, w)) for w in words
        }
    return doc


def _parse_value_key(group: WeylGroup, key: str):
    chamber_coords = {c.weight.coords for c in group.chamber_weights()}
    try:
        coords = parse_coords_key(key, group.rank)
        if coords in chamber_coords:
            return coords
    except ValueError:
        pass
    if group.cartan.family == "A":
        try:
            subset = sln.subset_from_key(key)
            coords = sln.subset_coords(group.rank + 1, subset)
            if coords in chamber_coords:
                return coords
        except ValueError:
            pass
    raise ValueError(f"{key!r} does not name a chamber weight")


def doc_to_datum(doc) -> tuple[WeylGroup, BZDatum]:
    if not isinstance(doc, dict):
        raise ValueError("document must be a JSON object")
    try:
        family = doc["group"]["family"]
        rank = int(doc["group"]["rank"])
        raw_values = doc["values"]
    except (KeyError, TypeError):
        raise ValueError("document needs group.family, group.rank and values") from None
    if not isinstance(raw_values, dict):
        raise ValueError("values must be an object")
    group = weyl_group(build_cartan(family, rank))
    values = {}
    for key, val in raw_values.items():
        coords = _parse_value_key(group, key)
        if not isinstance(val, int):
            raise ValueError(f"value at {key!r} must be an integer")
        if coords in values and values[coords] != val:
            raise ValueError(f"conflicting values for chamber weight {key!r}")
        values[coords] = val
    return group, bz.make_bz(group, values)


def load_datum(text: str) -> tuple[WeylGroup, BZDatum]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"not valid JSON: {e}") from None
    return doc_to_datum(doc)


def catalog_to_doc(group: WeylGroup, catalog: primes.Catalog) -> dict:
    return {
        "group": group_doc(group),
        "counts": {
            "choices": catalog.n_choices,
            "maximal": catalog.n_maximal,
            "primes": len(catalog.primes),
        },
        "relations": [
            {
                "word": list(rel.face.w.word),
                "i": rel.face.i,
                "j": rel.face.j,
                "kind": rel.face.kind,
                "equation": rel.index,
            }
            for rel in catalog.relations
        ],
        "primes": [
            {
                "label": p.label,
                "coweight": list(p.coweight),
                "values": {
                    coords_key(c.weight.coords): v
                    for c, v in zip(group.chamber_weights(), p.datum.values)
                },
            }
            for p in catalog.primes
        ],
        "clusters": [
            {
                "choice": list(c.choice),
                "generators": list(c.labels),
            }
            for c in catalog.clusters
        ],
    }
