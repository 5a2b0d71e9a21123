"""Command-line front end. Every command prints one JSON document on stdout.

Exit codes: 0 success, 1 reproduce-paper mismatch, 2 invalid matroid or
operation error (JSON error object with a stable code), 3 unreadable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bits
from .activity import activities, tutte_polynomial
from .complexes import (
    ShellingReport,
    check_orders,
    euler_characteristic,
    external_activity_complex,
    h_vector,
    independence_complex,
    shelling_check,
    strip_cone,
)
from .errors import MatroidError
from .matroid import OrderedMatroid, circuits, coloops, from_bases, from_graph, loops, uniform
from .orders import KINDS, build_poset, hasse, linear_extensions
from .topology import classify_topology

EPILOG = """\
Matroid descriptors (JSON, element ids are 1-based):
  {"type": "bases", "n": 5, "order": [1,2,3,4,5], "bases": [[1,2,4], ...]}
  {"type": "graph", "vertices": 4, "edges": [[1,2], [2,3], ...]}
  {"type": "uniform", "n": 3, "k": 1}
"order" is optional and lists the ground set from smallest to largest.

Vertices of the external activity complex are printed as integers: e for the
plain copy and -e for the barred copy.

Euler characteristic: "chi" is the alternating count of nonempty faces
(f_1 - f_2 + f_3 - ...); "reduced_chi" is chi - 1.
"""


class InputError(Exception):
    pass


def load_matroid(path: str) -> OrderedMatroid:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
        desc = json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(str(exc)) from exc
    if not isinstance(desc, dict):
        raise InputError("descriptor must be a JSON object")
    try:
        kind = desc["type"]
        order = desc.get("order")
        if kind == "bases":
            return from_bases(int(desc["n"]), desc["bases"], order)
        if kind == "graph":
            return from_graph(int(desc["vertices"]), desc["edges"], order)
        if kind == "uniform":
            return uniform(int(desc["n"]), int(desc["k"]), order)
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed descriptor: {exc!r}") from exc
    raise InputError(f"unknown descriptor type {kind!r}")


def _complex(M: OrderedMatroid, which: str, reduced: bool):
    K = independence_complex(M) if which == "in" else external_activity_complex(M)
    return strip_cone(K) if reduced else K


def _sample_kind(order: str) -> tuple[str, int] | None:
    for prefix, kind in (("sample-extint:", "extint"), ("sample-int:", "int")):
        if order.startswith(prefix):
            try:
                return kind, int(order[len(prefix) :])
            except ValueError as exc:
                raise InputError(f"bad sample count in {order!r}") from exc
    return None


def cmd_validate(M, args):
    return {
        "valid": True,
        "n": M.size,
        "rank": M.rank,
        "order": list(M.order),
        "bases": len(M.bases),
        "loops": bits.elements(loops(M)),
        "coloops": bits.elements(coloops(M)),
        "circuits": [bits.elements(c) for c in circuits(M)],
    }


def cmd_activity(M, args):
    return [a.to_json() for a in activities(M)]


def cmd_tutte(M, args):
    return tutte_polynomial(M).to_json()


def cmd_orders(M, args):
    P = build_poset(M, args.kind)
    if args.extensions:
        exts = linear_extensions(P, args.extensions, args.seed)
        return {"kind": args.kind, "extensions": [list(o) for o in exts]}
    return {
        "kind": args.kind,
        "bases": [bits.elements(B) for B in M.bases],
        "hasse": [list(p) for p in hasse(P)],
    }


def cmd_complex(M, args):
    K = _complex(M, args.which, args.reduced)
    chi, rchi = euler_characteristic(K)
    out = K.to_json()
    out["euler"] = {"chi": chi, "reduced_chi": rchi}
    return out


def _read_order_file(M: OrderedMatroid, path: str) -> list[int]:
    try:
        listed = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(str(exc)) from exc
    out = []
    for B in listed:
        m = bits.mask(B)
        M.check_basis(m)
        out.append(M.basis_index[m])
    return out


def cmd_shell_check(M, args):
    K = _complex(M, args.which, args.reduced)
    sample = _sample_kind(args.order)
    if sample is not None:
        kind, count = sample
        orders = linear_extensions(build_poset(M, kind), count, args.seed)
        fail, _ = check_orders(K, orders)
        failures = [{"order": list(o), "failure_index": int(f)} for o, f in zip(orders, fail) if f >= 0]
        return {"checked": len(orders), "all_shellings": not failures, "failures": failures}
    if args.order == "lex":
        order = list(range(len(M.bases)))
    elif args.order.startswith("file:"):
        order = _read_order_file(M, args.order[len("file:") :])
    else:
        raise InputError(f"unknown --order value {args.order!r}")
    report: ShellingReport = shelling_check(K, order)
    return report.to_json(K)


def cmd_hvector(M, args):
    return h_vector(_complex(M, args.which, args.reduced))


def cmd_topology(M, args):
    return classify_topology(M).to_json()


COMMANDS = {
    "validate": cmd_validate,
    "activity": cmd_activity,
    "tutte": cmd_tutte,
    "orders": cmd_orders,
    "complex": cmd_complex,
    "shell-check": cmd_shell_check,
    "hvector": cmd_hvector,
    "topology": cmd_topology,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", default="-", help="matroid descriptor file ('-' for stdin)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--which", choices=["in", "act"], default="act")
    common.add_argument("--reduced", action="store_true", help="remove cone points")
    common.add_argument("--kind", choices=KINDS, default="extint")
    common.add_argument("--extensions", type=int, default=0, metavar="N")
    common.add_argument("--order", default="lex", help="lex | file:PATH | sample-extint:N | sample-int:N")

    parser = argparse.ArgumentParser(
        prog="actshell",
        description=__doc__.splitlines()[0],
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in list(COMMANDS) + ["reproduce-paper"]:
        sub.add_parser(name, parents=[common], epilog=EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter)
    return parser


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, separators=(",", ":")) + "\n")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "reproduce-paper":
        from .reproduce import run_checks

        checks = run_checks()
        ok = all(c["ok"] for c in checks)
        rows = [c if not c["ok"] else {"name": c["name"], "ok": True} for c in checks]
        _emit({"ok": ok, "checks": rows})
        return 0 if ok else 1
    try:
        M = load_matroid(args.input)
        result = COMMANDS[args.command](M, args)
    except InputError as exc:
        _emit({"error": {"code": "ParseError", "message": str(exc)}})
        return 3
    except MatroidError as exc:
        _emit({"error": exc.to_json()})
        return 2
    _emit(result)
    return 0


if __name__ == "__main__":
    sys.exit(main())
