"""Command-line entry point.

Exit status: 0 on success, 1 when a verification fails or a computation
cannot be carried out on the given input, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys

from homex import constructions
from homex.complex_core import is_pure
from homex.connectivity import collapse_to_dimension, growth_process, is_strongly_connected, strong_components
from homex.corpus import random_pure_complex
from homex.errors import CapacityError, ConsistencyError, DomainError, PreconditionError, ValidationError
from homex.homology import homology_in_degree, homology_profile, format_group
from homex.io import format_json, format_sc, load_complex, save_complex
from homex.nerve import nerve_max
from homex.search import find_minimal_witness


class UsageError(Exception):
    pass


def _emit(args, payload: dict, lines: list[str]):
    if getattr(args, "json", False):
        print(json.dumps(payload, sort_keys=True))
    else:
        print("\n".join(lines))


def _faces_out(faces, labels):
    return [[labels[v] for v in f] for f in faces]


def cmd_gen(args) -> int:
    if args.kind == "random":
        if args.n is None or args.d is None:
            raise UsageError("gen random needs --n and --d")
        rng = random.Random(args.seed)
        X = random_pure_complex(rng, args.n, args.d, args.facets)
        labels = None
        header = f"random pure complex n={args.n} d={args.d} seed={args.seed}"
    else:
        if args.d is None or args.k is None:
            raise UsageError(f"gen {args.kind} needs --d and --k")
        built = constructions.labeled(args.kind, args.d, args.k, args.m)
        X, labels = built.complex, list(built.labels)
        header = f"{args.kind} d={args.d} k={args.k}" + (f" m={args.m}" if args.m is not None else "")
    if args.output:
        save_complex(X, args.output, labels, header)
    elif args.json:
        sys.stdout.write(format_json(X, labels))
    else:
        sys.stdout.write(format_sc(X, labels, header))
    return 0


def cmd_homology(args) -> int:
    X, _ = load_complex(args.file)
    H = homology_profile(X, reduced=args.reduced)
    lines = [f"H_{i}: {H.describe(i)}" for i in range(len(H.betti))]
    payload = {"command": "homology", **H.to_dict(), "groups": [H.describe(i) for i in range(len(H.betti))]}
    _emit(args, payload, lines or ["(empty complex)"])
    return 0


def cmd_check(args) -> int:
    X, _ = load_complex(args.file)
    d, k, m = args.d, args.k, args.m
    pure = is_pure(X, d)
    b, t = homology_in_degree(X, k)
    nontrivial = b > 0 or bool(t)
    strong = None
    if m is not None:
        strong = pure and is_strongly_connected(X, m)
    bound = constructions.applicable_bound(d, k, m)
    payload = {
        "command": "check",
        "vertices": X.num_vertices,
        "pure": pure,
        "strongly_connected": strong,
        "homology_nontrivial": nontrivial,
        "group": format_group(b, t),
        "bound": bound,
        "meets_bound": X.num_vertices >= bound if (pure and nontrivial and strong is not False) else None,
    }
    lines = [
        f"vertices: {X.num_vertices}",
        f"pure {d}-dimensional: {pure}",
        f"reduced H_{k}: {format_group(b, t)}",
        f"bound: {bound}",
    ]
    if m is not None:
        lines.insert(2, f"strongly connected w.r.t. {m}: {strong}")
    _emit(args, payload, lines)
    if payload["meets_bound"] is False:
        return 1
    return 0


def cmd_components(args) -> int:
    X, labels = load_complex(args.file)
    comps = strong_components(X, args.dim)
    payload = {"command": "components", "m": args.dim, "components": [_faces_out(c, labels) for c in comps]}
    lines = [f"{len(comps)} component(s) w.r.t. dimension {args.dim}"]
    for i, c in enumerate(comps):
        lines.append(f"[{i}] " + ", ".join(" ".join(f) for f in _faces_out(c, labels)))
    _emit(args, payload, lines)
    return 0


def cmd_growth(args) -> int:
    X, labels = load_complex(args.file)
    G = growth_process(X, args.dim)
    payload = {"command": "growth", "m": args.dim, "facets": _faces_out(G.facets, labels)}
    _emit(args, payload, [" ".join(f) for f in _faces_out(G.facets, labels)])
    return 0


def cmd_collapse(args) -> int:
    X, labels = load_complex(args.file)
    res = collapse_to_dimension(X, args.to, exhaustive=args.exhaustive, budget=args.budget)
    payload = {
        "command": "collapse",
        "to": args.to,
        "status": res.status,
        "states_explored": res.states_explored,
        "remaining": _faces_out(res.complex.facets, labels),
    }
    lines = [f"status: {res.status}", "remaining facets:"]
    lines += ["  " + " ".join(f) for f in _faces_out(res.complex.facets, labels)]
    _emit(args, payload, lines)
    return 0


def cmd_nerve(args) -> int:
    X, _ = load_complex(args.file)
    N = nerve_max(X, args.max_dim)
    H = homology_profile(N.complex, reduced=True)
    payload = {
        "command": "nerve",
        "facets": [list(f) for f in N.complex.facets],
        "max_dim": N.max_dim,
        "homology": H.to_dict(),
    }
    lines = ["nerve facets (vertex i = facet i of the input):"]
    lines += ["  " + " ".join(map(str, f)) for f in N.complex.facets]
    lines += [f"H_{i}: {H.describe(i)}" for i in range(len(H.betti))]
    _emit(args, payload, lines)
    return 0


def _maybe(fn, *a):
    try:
        return fn(*a), None
    except DomainError as exc:
        return None, str(exc)


def cmd_bounds(args) -> int:
    d, k, m = args.d, args.k, args.m
    if not 0 <= k <= d:
        raise UsageError(f"bounds need 0 <= k <= d, got d={d}, k={k}")
    pure, _ = _maybe(constructions.bound_pure, d, k)
    strong, _ = _maybe(constructions.bound_strong, d, k)
    threshold, _ = _maybe(constructions.connectivity_threshold, d, k)
    payload = {"command": "bounds", "d": d, "k": k, "pure": pure, "strong": strong, "threshold": threshold}
    lines = [f"pure: {pure if pure is not None else 'n/a'}", f"strong: {strong if strong is not None else 'n/a'}"]
    if m is not None:
        rel, why = _maybe(constructions.bound_rel, d, k, m)
        payload["m"] = m
        payload["rel"] = rel
        lines.append(f"rel(m={m}): {rel if rel is not None else 'n/a (' + why + ')'}")
    lines.append(f"threshold: {threshold if threshold is not None else 'n/a'}")
    _emit(args, payload, lines)
    return 0


def cmd_verify(args) -> int:
    mode = "pure" if args.which == "pure-bound" else "strong"
    m = args.m
    if mode == "strong" and m is None:
        m = args.d
    result = find_minimal_witness(args.d, args.k, mode, m, jobs=args.jobs, max_n=args.max_n, strict=False)
    payload = {"command": "verify", "mode": mode, "d": args.d, "k": args.k, "m": m if mode == "strong" else None}
    payload.update(result.to_dict())
    if not args.json:
        for r in result.reports:
            print(f"n={r.constraint.n}: {r.canonical_classes} classes, {r.complexes_examined} examined, "
                  f"{len(r.witnesses)} witness(es)")
    lines = [f"n_min = {result.n_min} (bound {result.bound}): {'OK' if result.matches_bound else 'MISMATCH'}"]
    _emit(args, payload, lines)
    return 0 if result.matches_bound else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="homex", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write a construction or a random pure complex")
    g.add_argument("kind", choices=["mh", "ms", "rel", "susp", "random"])
    g.add_argument("--d", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--m", type=int)
    g.add_argument("--n", type=int, help="vertex count (random only)")
    g.add_argument("--facets", type=int, default=6, help="facet count (random only)")
    g.add_argument("--seed", type=int, default=0, help="random seed (random only)")
    g.add_argument("-o", "--output")
    g.add_argument("--json", action="store_true")
    g.set_defaults(func=cmd_gen)

    h = sub.add_parser("homology", help="integral homology of a facet file")
    h.add_argument("file")
    h.add_argument("--reduced", action="store_true")
    h.add_argument("--json", action="store_true")
    h.set_defaults(func=cmd_homology)

    c = sub.add_parser("check", help="check a complex against the vertex bounds")
    c.add_argument("file")
    c.add_argument("--d", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--m", type=int)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_check)

    for name, func in (("components", cmd_components), ("growth", cmd_growth)):
        s = sub.add_parser(name)
        s.add_argument("file")
        s.add_argument("--dim", type=int, required=True)
        s.add_argument("--json", action="store_true")
        s.set_defaults(func=func)

    co = sub.add_parser("collapse", help="try to collapse onto a dimension")
    co.add_argument("file")
    co.add_argument("--to", type=int, required=True)
    co.add_argument("--exhaustive", action="store_true")
    co.add_argument("--budget", type=int, default=10**6)
    co.add_argument("--json", action="store_true")
    co.set_defaults(func=cmd_collapse)

    n = sub.add_parser("nerve", help="nerve of the maximal-face cover")
    n.add_argument("file")
    n.add_argument("--max-dim", type=int)
    n.add_argument("--json", action="store_true")
    n.set_defaults(func=cmd_nerve)

    b = sub.add_parser("bounds", help="closed-form vertex bounds")
    b.add_argument("--d", type=int, required=True)
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--m", type=int)
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=cmd_bounds)

    v = sub.add_parser("verify", help="exhaustive check that the bound is tight")
    v.add_argument("which", choices=["pure-bound", "strong-bound"])
    v.add_argument("--d", type=int, required=True)
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--m", type=int)
    v.add_argument("--max-n", type=int)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (UsageError, ValidationError, DomainError, FileNotFoundError) as exc:
        print(f"homex {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except (PreconditionError, CapacityError, ConsistencyError) as exc:
        print(f"homex {args.command}: {exc}", file=sys.stderr)
        return 1


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
