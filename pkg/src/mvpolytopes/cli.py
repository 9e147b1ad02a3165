"""Command line interface.

Exit codes: 0 success (and "valid" for validate), 1 for a failed check
(invalid document, oracle mismatch), 2 for malformed input of any kind.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import bz, lusztig, polytope, primes, rep, serialize, sln
from .cartan import build_cartan
from .draw import render_svg
from .weyl import weyl_group


def _parse_coords(text: str, rank: int) -> tuple[int, ...]:
    return serialize.parse_coords_key(text, rank)


def _group(args):
    return weyl_group(build_cartan(args.family, args.rank))


def _emit(args, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _doc_for_n(family, rank, word, n, words, subset_keys):
    group = weyl_group(build_cartan(family, rank))
    datum = bz.from_lusztig(group, word, n)
    return serialize.datum_to_doc(group, datum, words=words, subset_keys=subset_keys)


def cmd_enumerate(args) -> int:
    group = _group(args)
    mu = group.cartan.coweight(_parse_coords(args.coweight, group.rank))
    if not mu.is_nonneg():
        raise ValueError(f"coweight {mu.coords} has a negative coordinate")
    words = [serialize.parse_word_key(w) for w in args.word or []]
    for w in words:
        group.word_data(w)  # reject bad words before any output
    ref = group.reference_word
    ns = lusztig.enumerate_lusztig(group, ref, mu)
    if args.parallel > 1 and len(ns) > 1:
        with ProcessPoolExecutor(max_workers=args.parallel) as pool:
            docs = list(
                pool.map(
                    _doc_for_n,
                    *zip(*[
                        (group.cartan.family, group.rank, ref, n, tuple(words), args.subset_keys)
                        for n in ns
                    ]),
                    chunksize=max(1, len(ns) // (4 * args.parallel)),
                )
            )
    else:
        docs = [
            _doc_for_n(group.cartan.family, group.rank, ref, n, tuple(words), args.subset_keys)
            for n in ns
        ]
    if args.format == "jsonl":
        _emit(args, "".join(serialize.canonical_json(d) for d in docs))
    else:
        _emit(
            args,
            serialize.canonical_json(
                {
                    "group": serialize.group_doc(group),
                    "coweight": list(mu.coords),
                    "count": len(docs),
                    "polytopes": docs,
                }
            ),
        )
    return 0


def cmd_mult(args) -> int:
    group = _group(args)
    lam = group.cartan.coweight(_parse_coords(args.lam, group.rank))
    mu = group.cartan.coweight(_parse_coords(args.mu, group.rank))
    doc = {
        "group": serialize.group_doc(group),
        "lambda": list(lam.coords),
        "mu": list(mu.coords),
    }
    if args.kind == "weight":
        value = rep.weight_mult_mv(group, lam, mu)
        oracle = rep.kostant_weight_mult(group, lam, mu) if args.check_oracle else None
    else:
        nu = group.cartan.coweight(_parse_coords(args.nu, group.rank))
        doc["nu"] = list(nu.coords)
        value = rep.tensor_mult_mv(group, lam, mu, nu)
        oracle = (
            rep.steinberg_tensor_mult(group, lam, mu, nu) if args.check_oracle else None
        )
    doc["multiplicity"] = value
    if args.check_oracle:
        oracle += args.inject_oracle_error
        if oracle != value:
            print(
                f"oracle mismatch: polytope count {value}, alternating sum {oracle}",
                file=sys.stderr,
            )
            return 1
        doc["oracle"] = oracle
    _emit(args, serialize.canonical_json(doc))
    return 0


def cmd_primes(args) -> int:
    group = _group(args)
    catalog = primes.build_catalog(group, limit=args.limit)
    _emit(args, serialize.canonical_json(serialize.catalog_to_doc(group, catalog)))
    return 0


def cmd_collapse(args) -> int:
    with open(args.picture, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as e:
            raise ValueError(f"picture file is not valid JSON: {e}") from None
    if isinstance(doc, dict):
        try:
            n = int(doc["n"])
            entries = doc["entries"]
        except (KeyError, TypeError):
            raise ValueError('picture object needs "n" and "entries"') from None
    elif isinstance(doc, list):
        entries = doc
        if not entries:
            raise ValueError("cannot infer n from an empty picture list")
        n = max(int(e[1]) for e in entries)
    else:
        raise ValueError("picture must be a list or an object")
    picture = {}
    for e in entries:
        if not (isinstance(e, list) and len(e) == 3):
            raise ValueError(f"picture entry {e!r} is not [a, b, value]")
        a, b, v = (int(x) for x in e)
        picture[(a, b)] = picture.get((a, b), 0) + v
    out = sln.collapse(n, args.k, picture)
    _emit(
        args,
        serialize.canonical_json(
            {
                "n": n,
                "k": args.k,
                "entries": [[a, b, v] for (a, b), v in sorted(out.items())],
            }
        ),
    )
    return 0


def cmd_draw(args) -> int:
    with open(args.document, encoding="utf-8") as fh:
        group, datum = serialize.load_datum(fh.read())
    face = None
    if args.face_word is not None or args.face_i or args.face_j:
        if args.face_word is None or not args.face_i or not args.face_j:
            raise ValueError("a face needs --face-word, --face-i and --face-j")
        face = (serialize.parse_word_key(args.face_word), args.face_i, args.face_j)
        w = group.from_word(face[0])
        for t in (args.face_i, args.face_j):
            group.cartan._check_index(t)
            if group.right(w, t).length < w.length:
                raise ValueError("face word must be minimal in its coset")
    svg = render_svg(group, datum, face=face, unit=args.unit)
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(svg)
    return 0


def cmd_validate(args) -> int:
    with open(args.document, encoding="utf-8") as fh:
        group, datum = serialize.load_datum(fh.read())
    report = bz.validate(group, datum)
    for line in report.lines():
        print(line)
    return 0 if report.is_valid else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mvpoly",
        description="Exact engine for Mirkovic-Vilonen polytopes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_group_args(p):
        p.add_argument("family", choices=["A", "B", "C", "D"], help="Cartan family")
        p.add_argument("rank", type=int, help="rank of the group")

    p = sub.add_parser("enumerate", help="all polytopes with a given total coweight")
    add_group_args(p)
    p.add_argument("--coweight", required=True, help="coordinates, e.g. 1,1")
    p.add_argument(
        "--word",
        action="append",
        help="also report Lusztig data along this reduced word (repeatable)",
    )
    p.add_argument(
        "--subset-keys",
        action="store_true",
        help="key values by subset strings (type A only)",
    )
    p.add_argument("--format", choices=["jsonl", "json"], default="jsonl")
    p.add_argument("-o", "--output")
    p.add_argument("--parallel", type=int, default=1, metavar="N")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("mult", help="weight or tensor multiplicities")
    kind = p.add_subparsers(dest="kind", required=True)
    pw = kind.add_parser("weight", help="weight multiplicity")
    add_group_args(pw)
    pw.add_argument("lam", metavar="LAMBDA", help="dominant coweight, e.g. 1,1")
    pw.add_argument("mu", metavar="MU")
    pt = kind.add_parser("tensor", help="tensor product multiplicity")
    add_group_args(pt)
    pt.add_argument("lam", metavar="LAMBDA")
    pt.add_argument("mu", metavar="MU")
    pt.add_argument("nu", metavar="NU")
    for px in (pw, pt):
        px.add_argument(
            "--check-oracle",
            action="store_true",
            help="cross-check against the alternating-sum formula",
        )
        px.add_argument(
            "--inject-oracle-error", type=int, default=0, help=argparse.SUPPRESS
        )
        px.add_argument("-o", "--output")
        px.set_defaults(func=cmd_mult)

    p = sub.add_parser("primes", help="prime polytope catalog")
    add_group_args(p)
    p.add_argument("--limit", type=int, default=10_000, help="face-choice budget")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_primes)

    p = sub.add_parser("collapse", help="delete an index from a type A picture")
    p.add_argument("picture", help="JSON file of [a, b, value] entries")
    p.add_argument("k", type=int, help="index to delete")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_collapse)

    p = sub.add_parser("draw", help="render a polytope document to SVG")
    p.add_argument("document")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--unit", action="store_true", help="draw the coroot basis arrows")
    p.add_argument("--face-word", help="minimal coset word of the 2-face")
    p.add_argument("--face-i", type=int, default=0)
    p.add_argument("--face-j", type=int, default=0)
    p.set_defaults(func=cmd_draw)

    p = sub.add_parser("validate", help="check a polytope document")
    p.add_argument("document")
    p.set_defaults(func=cmd_validate)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
