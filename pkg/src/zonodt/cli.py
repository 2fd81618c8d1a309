"""Command-line interface: ``zonodt <subcommand> ...``.

Every subcommand prints one JSON envelope on stdout::

    {"schema": 1, "subcommand": ..., "input_hash": ..., "version": ..., "payload": {...}}

Exit codes: 0 success, 1 a ``verify`` check failed, 2 invalid input, 3 a cap
was exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path
from typing import Any, Callable

from . import __version__
from .cache import ResultCache, content_hash
from .errors import CapExceeded, ValidationError
from .graph import Multigraph

SCHEMA = 1
EXIT_OK, EXIT_FAILED, EXIT_INVALID, EXIT_CAP = 0, 1, 2, 3
SAFE_INT = 2**53

log = logging.getLogger("zonodt")


# input handling ---------------------------------------------------------------


def load_json_arg(value: str, what: str) -> Any:
    """Read a path or inline JSON; malformed JSON reports line and column."""
    source = "inline"
    text = value
    stripped = value.lstrip()
    if not stripped.startswith(("{", "[")):
        path = Path(value)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise ValidationError(f"cannot read {what} file {value!r}: {exc.strerror or exc}") from exc
        source = str(path)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(
            f"malformed {what} JSON ({source}) at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc


def parse_int_list(text: str, what: str) -> tuple[int, ...]:
    try:
        values = tuple(int(t) for t in text.replace(" ", "").split(",") if t)
    except ValueError as exc:
        raise ValidationError(f"{what} must be comma-separated integers, got {text!r}") from exc
    if not values:
        raise ValidationError(f"{what} is empty")
    return values


def _graph(args) -> Multigraph:
    if args.graph is None:
        raise ValidationError("this subcommand needs --graph")
    return Multigraph.from_json(load_json_arg(args.graph, "graph"))


def _quiver(args):
    from .quiver import parse_quiver_json

    if args.quiver is None:
        raise ValidationError("this subcommand needs --quiver")
    return parse_quiver_json(load_json_arg(args.quiver, "quiver"))


def jsonable(obj):
    """Integers beyond 2^53 become decimal strings; tuples become lists."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, float)):
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) >= SAFE_INT else obj
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if hasattr(obj, "to_json"):
        return jsonable(obj.to_json())
    raise TypeError(f"cannot serialize {type(obj).__name__}")


# subcommands ------------------------------------------------------------------


def cmd_dt(args):
    from .divisors import numerical_dt

    Q, gamma = _quiver(args)
    return {"matrix": Q.to_json(), "gamma": list(gamma), "dt": numerical_dt(Q, gamma, threads=args.threads)}


def cmd_quantum_dt(args):
    from .algebra import quantum_dt, sign_isotypic_dt, vandermonde_degree

    Q, gamma = _quiver(args)
    res = quantum_dt(Q, gamma, max_edges=args.max_edges, max_order=args.max_group_order, threads=args.threads)
    out = {"matrix": Q.to_json(), "gamma": list(gamma), **res.to_json()}
    if args.sign:
        out["sign_isotypic"] = sign_isotypic_dt(Q, gamma, max_edges=args.max_edges,
                                                max_order=args.max_group_order, threads=args.threads)
        out["vandermonde_degree"] = vandermonde_degree(gamma)
    return out


def cmd_break_divisors(args):
    from .divisors import enumerate_break_divisors
    from .groups import orbits, young_subgroup

    if args.quiver is not None:
        from .quiver import covering_graph

        Q, gamma = _quiver(args)
        cg = covering_graph(Q, gamma)
        G, blocks = cg.graph, cg.gamma
    else:
        G = _graph(args)
        blocks = parse_int_list(args.blocks, "--blocks") if args.blocks else None
    points = enumerate_break_divisors(G, threads=args.threads)
    out: dict = {"graph": G.to_json(), "count": len(points), "divisors": [list(p) for p in points]}
    if blocks is not None:
        if sum(blocks) != G.n:
            raise ValidationError(f"--blocks {list(blocks)} must add up to {G.n}")
        orb = orbits(points, young_subgroup(blocks))
        out["blocks"] = list(blocks)
        out["orbit_count"] = len(orb)
        out["orbits"] = [o.to_json() for o in orb]
    return out


def cmd_orientable(args):
    from .divisors import enumerate_orientable_divisors, interior_orientable_divisors

    G = _graph(args)
    fn = interior_orientable_divisors if args.interior else enumerate_orientable_divisors
    pts = fn(G, max_edges=args.max_edges)
    return {"graph": G.to_json(), "interior": args.interior, "count": len(pts), "divisors": [list(p) for p in pts]}


def cmd_hilbert(args):
    from .algebra import central_power_ideal, inverse_system_dims, pm_power_ideal, pspace_hilbert
    from .graph import genus, tutte

    G = _graph(args)
    kind = "external" if args.external else "internal" if args.internal else "central"
    out: dict = {"graph": G.to_json(), "ideal": kind}
    if kind == "central":
        dims = pspace_hilbert(G, max_edges=args.max_edges, threads=args.threads)
        out["dims"] = dims
        out["tutte_specialization"] = tutte(G).hilbert_specialization(genus(G))
        out["inverse_system"] = inverse_system_dims(central_power_ideal(G).generators, G.n, args.degree_cap)
    else:
        ideal = pm_power_ideal(G, 1 if kind == "external" else -1)
        out["unit_ideal"] = ideal.unit
        out["dims"] = inverse_system_dims(ideal.generators, G.n, args.degree_cap)
    out["total"] = sum(out["dims"])
    return out


def cmd_tutte(args):
    from .graph import spanning_tree_count, tutte

    G = _graph(args)
    T = tutte(G)
    return {
        "graph": G.to_json(),
        "coefficients": [[i, j, c] for (i, j), c in sorted(T.as_dict().items())],
        "polynomial": str(T),
        "spanning_trees": spanning_tree_count(G),
        "T(1,1)": T(1, 1),
        "T(2,1)": T(2, 1),
        "T(1,2)": T(1, 2),
    }


def cmd_parking(args):
    from .divisors import g_parking_functions, parking_generating_function

    G = _graph(args)
    funcs = g_parking_functions(G, args.root)
    return {"graph": G.to_json(), "root": args.root, "count": len(funcs),
            "functions": [list(f) for f in funcs],
            "generating_function": parking_generating_function(G, args.root)}


def cmd_frobenius(args):
    from .graph import complete_graph
    from .symfunc import convert, frobenius_h, h_dimension

    if args.graph is not None:
        G = _graph(args)
    elif args.m is not None and args.n is not None:
        G = complete_graph(args.n, args.m)
    else:
        raise ValidationError("frobenius needs --graph, or --m and --n for K_n^m")
    f = frobenius_h(G, threads=args.threads)
    return {"graph": G.to_json(), "dimension": h_dimension(f), "frobenius": convert(f, args.basis).to_json()}


def cmd_formula(args):
    from . import closed_form as cf

    kind = args.formula
    if kind == "reineke":
        _need(args, "m", "n")
        value = cf.reineke_dt(args.m, args.n)
        params = {"m": args.m, "n": args.n}
    elif kind == "dt-multipartite":
        _need(args, "m", "partition")
        lam = cf.check_partition(parse_int_list(args.partition, "--lambda"))
        value = cf.dt_multipartite(args.m, lam)
        params = {"m": args.m, "lambda": list(lam)}
    elif kind == "orbit":
        _need(args, "m", "partition", "s")
        lam = cf.check_partition(parse_int_list(args.partition, "--lambda"))
        value = cf.orbit_formula(args.m, lam, args.s)
        params = {"m": args.m, "lambda": list(lam), "s": args.s}
    else:
        _need(args, "d", "b")
        value = cf.ramanujan_sum(args.d, args.b)
        params = {"d": args.d, "b": args.b}
    return {"formula": kind, "params": params, "value": value}


def _need(args, *names):
    flags = {"partition": "--lambda"}
    missing = [flags.get(n, f"--{n}") for n in names if getattr(args, n) is None]
    if missing:
        raise ValidationError(f"formula {args.formula} needs {', '.join(missing)}")


def cmd_verify(args):
    from . import closed_form as cf
    from .algebra import macaulay_check
    from .corpus import graph_corpus
    from .divisors import check_break_vanishing, check_orientable_vanishing, numerical_dt
    from .quiver import multipartite_quiver

    graphs = {"input": _graph(args)} if args.graph is not None else graph_corpus()
    results = []
    for name, G in graphs.items():
        for rep in (macaulay_check(G, max_edges=args.max_edges), check_break_vanishing(G),
                    check_orientable_vanishing(G, max_edges=args.max_edges)):
            results.append({"graph": name, **rep.to_json()})
    triangle = []
    for n in range(2, args.triangle_n + 1):
        for m in range(1, args.triangle_m + 1):
            for lam in cf.partitions(n):
                a = cf.dt_multipartite(m, lam)
                b = numerical_dt(multipartite_quiver(m, len(lam)), lam, threads=args.threads)
                c = cf.dt_via_orbits(m, lam)
                triangle.append({"m": m, "lambda": list(lam), "formula": a, "orbits": b,
                                 "orbit_formula": c, "passed": a == b == c})
    passed = all(r["passed"] for r in results) and all(t["passed"] for t in triangle)
    return {"passed": passed, "checks": results, "consistency_triangle": triangle}


COMMANDS: dict[str, Callable] = {
    "dt": cmd_dt,
    "quantum-dt": cmd_quantum_dt,
    "break-divisors": cmd_break_divisors,
    "orientable-divisors": cmd_orientable,
    "hilbert": cmd_hilbert,
    "tutte": cmd_tutte,
    "parking": cmd_parking,
    "frobenius": cmd_frobenius,
    "formula": cmd_formula,
    "verify": cmd_verify,
}

# flags that change how a result is computed but never what it is
NON_SEMANTIC = {"threads", "no_cache", "cache_dir", "timing", "command", "verbose", "graph", "quiver"}


# argument parsing -------------------------------------------------------------


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    from .algebra import DEFAULT_MAX_EDGES, DEFAULT_MAX_GROUP_ORDER

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph", help="graph JSON file or inline JSON {\"n\":..,\"edges\":[[i,j,m],..]}")
    common.add_argument("--quiver", help="quiver JSON file or inline JSON {\"matrix\":[[..]],\"gamma\":[..]}")
    common.add_argument("--max-edges", type=_positive_int, default=DEFAULT_MAX_EDGES)
    common.add_argument("--max-group-order", type=_positive_int, default=DEFAULT_MAX_GROUP_ORDER)
    common.add_argument("--degree-cap", type=_positive_int, default=64)
    common.add_argument("--threads", type=_positive_int, default=1)
    common.add_argument("--no-cache", action="store_true")
    common.add_argument("--cache-dir")
    common.add_argument("--timing", action="store_true", help="add wall-clock seconds to the envelope")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="zonodt", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"zonodt {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="subcommand")

    sub.add_parser("dt", parents=[common], help="numerical DT invariant of (Q, γ)")
    p = sub.add_parser("quantum-dt", parents=[common], help="quantum DT invariant with grading data")
    p.add_argument("--sign", action="store_true", help="also report the sign-isotypic Hilbert series of P(G⁺)")
    p = sub.add_parser("break-divisors", parents=[common], help="break divisors, optionally with orbits")
    p.add_argument("--blocks", help="block sizes of a Young subgroup, e.g. 2,3")
    p = sub.add_parser("orientable-divisors", parents=[common], help="orientable divisors")
    p.add_argument("--interior", action="store_true")
    p = sub.add_parser("hilbert", parents=[common], help="Hilbert series of a zonotopal algebra")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--central", action="store_true", default=True)
    g.add_argument("--external", action="store_true")
    g.add_argument("--internal", action="store_true")
    sub.add_parser("tutte", parents=[common], help="Tutte polynomial")
    p = sub.add_parser("parking", parents=[common], help="G-parking functions")
    p.add_argument("--root", type=_positive_int, required=True)
    p = sub.add_parser("frobenius", parents=[common], help="Frobenius characteristic for K_n^m")
    p.add_argument("--basis", choices=["h", "m", "s"], default="h")
    p.add_argument("--m", type=_positive_int)
    p.add_argument("--n", type=_positive_int)
    p = sub.add_parser("formula", parents=[common], help="closed-form evaluations")
    p.add_argument("formula", choices=["dt-multipartite", "reineke", "orbit", "ramanujan"])
    p.add_argument("--m", type=_positive_int)
    p.add_argument("--n", type=_positive_int)
    p.add_argument("--lambda", dest="partition", help="partition, e.g. 2,2")
    p.add_argument("--s", type=int)
    p.add_argument("--d", type=_positive_int)
    p.add_argument("--b", type=int)
    p = sub.add_parser("verify", parents=[common], help="run the consistency checks (default: bundled corpus)")
    p.add_argument("--triangle-n", type=int, default=4)
    p.add_argument("--triangle-m", type=int, default=2)
    return parser


def job_key(args) -> dict:
    params = {k: v for k, v in sorted(vars(args).items()) if k not in NON_SEMANTIC}
    inputs = {}
    if getattr(args, "graph", None) is not None:
        inputs["graph"] = Multigraph.from_json(load_json_arg(args.graph, "graph")).to_json()
    if getattr(args, "quiver", None) is not None:
        inputs["quiver"] = load_json_arg(args.quiver, "quiver")
    return {"subcommand": args.command, "inputs": inputs, "params": params}


# which input flags each subcommand reads; at most one may be given
INPUT_SOURCES = {
    "dt": ("quiver",),
    "quantum-dt": ("quiver",),
    "break-divisors": ("graph", "quiver"),
    "orientable-divisors": ("graph",),
    "hilbert": ("graph",),
    "tutte": ("graph",),
    "parking": ("graph",),
    "frobenius": ("graph",),
    "formula": (),
    "verify": ("graph",),
}


def check_input_sources(args) -> None:
    given = [k for k in ("graph", "quiver") if getattr(args, k, None) is not None]
    allowed = INPUT_SOURCES[args.command]
    for k in given:
        if k not in allowed:
            raise ValidationError(f"{args.command} does not take --{k}")
    if len(given) > 1:
        raise ValidationError("give exactly one of --graph and --quiver")
    if args.command == "frobenius" and given and (args.m is not None or args.n is not None):
        raise ValidationError("give either --graph or --m/--n, not both")


def run(args) -> tuple[int, dict]:
    check_input_sources(args)
    key = content_hash(job_key(args))
    cache = ResultCache(args.cache_dir, __version__, enabled=not args.no_cache)
    envelope = cache.get(key)
    start = time.perf_counter()
    if envelope is None:
        payload = jsonable(COMMANDS[args.command](args))
        envelope = {"schema": SCHEMA, "subcommand": args.command, "input_hash": key,
                    "version": __version__, "payload": payload}
        cache.put(key, envelope)
    if args.timing:
        envelope = {**envelope, "timing": {"seconds": round(time.perf_counter() - start, 6),
                                           "cached": cache.hits > 0}}
    code = EXIT_OK
    if args.command == "verify" and not envelope["payload"]["passed"]:
        code = EXIT_FAILED
    return code, envelope


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="zonodt: %(levelname)s: %(message)s", stream=sys.stderr)
    try:
        code, envelope = run(args)
    except ValidationError as exc:
        print(f"zonodt: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except CapExceeded as exc:
        print(f"zonodt: cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    sys.stdout.write(json.dumps(envelope, sort_keys=True, indent=2, ensure_ascii=False) + "\n")
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
