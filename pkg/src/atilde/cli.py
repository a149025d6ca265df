"""Command-line interface: ``atilde <command> --quiver ... [options]``."""

from __future__ import annotations

import argparse
import json
import sys

import jsonschema

from . import io
from .arcs import ArcDiagram, diagram_violations, order_collection
from .families import (count_families, dehn_twist_by, enumerate_collections,
                       families, _canonical)
from .homext import connections, dim_ext, graph_maps
from .render import render_svg
from .strings import is_exceptional, tau, tau_inv

OK, INVALID, VIOLATION = 0, 1, 2


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(message)


def _quiver(args):
    if not args.quiver:
        raise ValueError("--quiver is required")
    return io.parse_quiver(io.load_json(args.quiver))


def _modules(args, Q):
    if not args.modules:
        raise ValueError("--modules is required")
    return io.parse_modules(Q, io.load_json(args.modules))


def _module(arg, name, Q):
    if not arg:
        raise ValueError(f"--{name} is required")
    return io.parse_module(Q, io.load_json(arg))


def _violations_json(D):
    out = []
    for v in diagram_violations(D):
        item = {"kind": v.kind, "modules": [io.module_to_json(M) for M in v.modules]}
        if v.relation is not None:
            item["relation"] = v.relation.value
        out.append(item)
    return out


def cmd_check(args):
    Q = _quiver(args)
    D = ArcDiagram(Q, tuple(_modules(args, Q)))
    viol = _violations_json(D)
    order = None if viol else order_collection(D)
    res = {"exceptional": not viol,
           "order": None if order is None else [io.module_to_json(M) for M in order]}
    if viol:
        res["violations"] = viol
    return res, (OK if not viol else VIOLATION)


def cmd_order(args):
    res, code = cmd_check(args)
    return {"order": res["order"], **({"violations": res["violations"]} if code else {})}, code


def cmd_hom(args):
    Q = _quiver(args)
    M, N = _module(args.from_, "from", Q), _module(args.to, "to", Q)
    maps = graph_maps(M, N)
    basis = [{"quotient": [g.source.x, g.source.y], "submodule": [g.target.x, g.target.y]}
             for g in maps]
    return {"dim": len(maps), "basis": basis}, OK


def cmd_ext(args):
    Q = _quiver(args)
    M, N = _module(args.from_, "from", Q), _module(args.to, "to", Q)
    conns = connections(M, N)
    return {"dim": dim_ext(M, N), "connections": [c.arrow for c in conns]}, OK


def cmd_tau(args):
    Q = _quiver(args)
    mods = [_module(args.from_, "from", Q)] if args.from_ else _modules(args, Q)

    def js(X):
        return None if X is None else io.module_to_json(X)

    rows = [{"module": js(M), "tau": js(tau(M)), "tau_inv": js(tau_inv(M))} for M in mods]
    return {"results": rows}, OK


def cmd_twist(args):
    Q = _quiver(args)
    D = ArcDiagram(Q, tuple(_modules(args, Q)))
    t = args.times if args.direction == "cw" else -args.times
    return {"diagram": io.diagram_to_json(dehn_twist_by(D, t)), "twists": t}, OK


def _family_json(F):
    return {"canonical": io.diagram_to_json(F.canonical), "z": F.z}


def cmd_families(args):
    Q = _quiver(args)
    if args.modules:
        D = ArcDiagram(Q, tuple(_modules(args, Q)))
        viol = _violations_json(D)
        if viol:
            return {"violations": viol}, VIOLATION
        K, z = _canonical(D)
        return {"canonical": io.diagram_to_json(K), "z": z}, OK
    fams = families(Q)
    return {"families": len(fams), "family_list": [_family_json(F) for F in fams]}, OK


def cmd_enumerate(args):
    Q = _quiver(args)
    cols = enumerate_collections(Q, args.lambda_max)
    return {"collections": [io.diagram_to_json(D) for D in cols],
            "count": len(cols), "families": count_families(Q),
            "lambda_max": args.lambda_max}, OK


def cmd_render(args):
    Q = _quiver(args)
    mods = _modules(args, Q) if args.modules else []
    return render_svg(ArcDiagram(Q, tuple(mods)), size=args.size), OK


COMMANDS = {
    "check": cmd_check, "order": cmd_order, "hom": cmd_hom, "ext": cmd_ext,
    "tau": cmd_tau, "twist": cmd_twist, "families": cmd_families,
    "enumerate": cmd_enumerate, "render": cmd_render,
}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="atilde", description="Exceptional collections of type A-tilde.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        s = sub.add_parser(name)
        s.add_argument("--quiver", help="quiver JSON text or file")
        s.add_argument("--modules", help="module list or diagram JSON text or file")
        s.add_argument("--output", "-o", help="write the result here instead of stdout")
        s.add_argument("--seed", type=int, default=0,
                       help="seed for randomized harnesses (no listed command is randomized)")
        if name in ("hom", "ext", "tau"):
            s.add_argument("--from", dest="from_", help="module JSON")
        if name in ("hom", "ext"):
            s.add_argument("--to", help="module JSON")
        if name == "twist":
            s.add_argument("--direction", choices=["cw", "ccw"], default="cw")
            s.add_argument("--times", type=int, default=1)
        if name == "enumerate":
            s.add_argument("--lambda-max", type=int, default=0)
        if name == "render":
            s.add_argument("--size", type=int, default=400)
    return p


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        result, code = COMMANDS[args.command](args)
    except _Usage as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return INVALID
    except jsonschema.ValidationError as exc:
        print(f"invalid input: {exc.message}", file=sys.stderr)
        return INVALID
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return INVALID
    text = result if isinstance(result, str) else io.emit_report(result)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
