"""Command-line front end: decomposition queries, branchings, series,
property checks, hash products, vertex operators, formal group laws, and
character tables, with text and JSON output.

Exit codes: 0 success, 1 failed check, 2 parse error, 3 resource bound.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import characters, vertex
from .convolution import (
    antipode_cochain,
    eps1_cochain,
    identity_cochain,
    inner_pairing,
    is_algebra_hom,
    is_cocycle2,
    is_frobenius,
    is_laplace,
    outer_pairing,
    schur_hall_pairing,
    unit_counit_cochain,
    unit_pairing,
    derived_pairing,
)
from .fgl import additive, coproduct_from_fgl, fgl_log, loop_n, multiplicative
from .formats import (
    format_rational,
    format_symfunc,
    parse_rational_label,
    parse_symfunc,
    rational_json,
    symfunc_json,
    term_order,
)
from .hash_products import HashSpec, build_hash, named_spec
from .kronecker import character_table, inner_mul
from .partitions import format_partition, parse_partition, partitions_of
from .schur import SymFunc, outer_mul
from .series import series_degree_term

DEFAULT_MAX_WEIGHT = 20


class ResourceError(Exception):
    pass


def _max_weight(args) -> int:
    if args.max_weight is not None:
        return args.max_weight
    env = os.environ.get("SYMCHAR_MAX_WEIGHT")
    return int(env) if env else DEFAULT_MAX_WEIGHT


def _guard(f: SymFunc, bound: int) -> SymFunc:
    if f.max_degree() > bound:
        raise ResourceError(
            f"input weight {f.max_degree()} exceeds the configured maximum {bound}"
        )
    return f


def _emit(args, text: str, payload=None) -> None:
    if getattr(args, "json", False) and payload is not None:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


# -- subcommand handlers -----------------------------------------------------

def _cmd_decompose(args) -> int:
    bound = _max_weight(args)
    kind_of = {
        "outer": "gl",
        "kronecker": "gl",
        "newell-littlewood-o": "o",
        "newell-littlewood-sp": "sp",
        "thibon": "thibon",
        "reduced": "reduced",
    }
    if args.product == "rational":
        lhs = characters.RationalChar.basis(*parse_rational_label(args.lhs))
        rhs = characters.RationalChar.basis(*parse_rational_label(args.rhs))
        result = characters.rational_mul(lhs, rhs)
        _emit(args, format_rational(result.element), rational_json(result.element))
        return 0
    lhs = _guard(parse_symfunc(args.lhs), bound)
    rhs = _guard(parse_symfunc(args.rhs), bound)
    if args.product == "outer":
        result = outer_mul(lhs, rhs)
    elif args.product == "kronecker":
        result = inner_mul(lhs, rhs)
    elif args.product in ("newell-littlewood-o", "newell-littlewood-sp"):
        result = characters.newell_littlewood(lhs, rhs)
    elif args.product == "thibon":
        result = characters.thibon_inner(lhs, rhs)
    else:
        result = characters.murnaghan_littlewood(lhs, rhs)
    kind = kind_of[args.product]
    _emit(args, format_symfunc(result, kind), symfunc_json(result, kind))
    return 0


def _cmd_branch(args) -> int:
    bound = _max_weight(args)
    f = _guard(parse_symfunc(args.element), bound)
    result = characters.branch(f, args.rule)
    kind = {"gl_to_o": "o", "gl_to_sp": "sp"}.get(args.rule, "gl")
    _emit(args, format_symfunc(result, kind), symfunc_json(result, kind))
    return 0


def _cmd_series(args) -> int:
    if args.cap > _max_weight(args):
        raise ResourceError(f"cap {args.cap} exceeds the configured maximum")
    lines = []
    payload_terms = []
    for d in range(args.cap + 1):
        term = series_degree_term(args.tag, d)
        lines.append(f"degree {d}: {format_symfunc(term)}")
        payload_terms.append(symfunc_json(term, "gl", cap=args.cap)["terms"])
    _emit(args, "\n".join(lines), {"degrees": payload_terms, "meta": {"cap": args.cap}})
    return 0


_PAIRINGS = {
    "inner": inner_pairing,
    "outer": outer_pairing,
    "schur-hall": schur_hall_pairing,
    "e2": unit_pairing,
}

_COCHAINS = {
    "id": identity_cochain,
    "antipode": antipode_cochain,
    "e": unit_counit_cochain,
    "m": eps1_cochain,
}


def _resolve_pairing(name: str):
    if name.startswith("derived:"):
        _, phi_name, base_name = name.split(":", 2)
        return derived_pairing(_PAIRINGS[base_name](), _COCHAINS[phi_name]())
    return _PAIRINGS[name]()


def _cmd_check(args) -> int:
    d = args.max_degree
    if d > _max_weight(args):
        raise ResourceError(f"max degree {d} exceeds the configured maximum")
    witness: list = []
    if args.property == "alghom":
        ok = is_algebra_hom(_COCHAINS[args.name](), d, witness)
    else:
        pairing = _resolve_pairing(args.name)
        if args.property == "laplace":
            ok = is_laplace(pairing, d, witness)
        elif args.property == "cocycle2":
            ok = is_cocycle2(pairing, d, witness)
        else:
            ok = is_frobenius(pairing, d, witness=witness)
    if ok:
        print(f"PASS: {args.name} satisfies {args.property} up to degree {d}")
        return 0
    print(f"FAIL: {args.name} violates {args.property}; witness: {witness[0]!r}")
    return 1


def _cmd_hash(args) -> int:
    bound = _max_weight(args)
    if args.spec.strip().startswith("{"):
        data = json.loads(args.spec)
        stages = tuple(
            (_PAIRINGS[st["pairing"]](), _COCHAINS[st["cocycle"]]())
            for st in data.get("stages", [])
        )
        spec = HashSpec(stages, _COCHAINS[data.get("final", "id")](), "custom")
    else:
        spec = named_spec(args.spec)
    x = _guard(SymFunc.basis(parse_partition(args.lhs)), bound)
    y = _guard(SymFunc.basis(parse_partition(args.rhs)), bound)
    result = build_hash(spec)(x, y)
    _emit(args, format_symfunc(result), symfunc_json(result, "gl"))
    return 0


def _cmd_vertex(args) -> int:
    if args.action == "schur":
        lam = parse_partition(args.partition)
        if sum(lam) > _max_weight(args):
            raise ResourceError("partition weight exceeds the configured maximum")
        built = vertex.schur_via_bernstein(lam)
        expected = SymFunc.basis(lam)
        diff = built - expected
        if diff.is_zero():
            print(f"OK: vertex-operator chain reproduces s[{format_partition(lam)}]")
            return 0
        print(f"MISMATCH: difference {format_symfunc(diff)}")
        return 1
    ok = vertex.check_commutation(args.cap)
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def _poly_text(p) -> str:
    if not p:
        return "0"
    bits = []
    for e, c in sorted(p.items()):
        deg = e[0]
        xpow = "" if deg == 0 else ("X" if deg == 1 else f"X^{deg}")
        if c == 1 and xpow:
            bits.append(f"+ {xpow}")
        elif c == -1 and xpow:
            bits.append(f"- {xpow}")
        else:
            sign = "-" if c < 0 else "+"
            mag = str(abs(c))
            bits.append(f"{sign} {mag}{xpow}" if not xpow else f"{sign} {mag}*{xpow}")
    text = " ".join(bits)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


def _parse_fgl(token: str):
    if token == "ga":
        return additive(cap=8)
    if token == "gm":
        return multiplicative(1, cap=8)
    if token.startswith("gm:"):
        return multiplicative(int(token.split(":", 1)[1]), cap=8)
    raise ValueError(f"unknown formal group law {token!r}")


def _cmd_fgl(args) -> int:
    if args.action == "loop":
        F = _parse_fgl(args.law)
        F = type(F)(F.coeffs, args.cap)
        print(_poly_text(loop_n(F, args.n)))
        return 0
    if args.action == "log":
        F = _parse_fgl(args.law)
        F = type(F)(F.coeffs, args.cap)
        print(_poly_text(fgl_log(F)))
        return 0
    lam = parse_partition(args.partition)
    if sum(lam) > _max_weight(args):
        raise ResourceError("partition weight exceeds the configured maximum")
    result = coproduct_from_fgl(args.law, SymFunc.basis(lam))
    bits = [
        f"{'+' if c >= 0 else '-'} {'' if abs(c) == 1 else str(abs(c)) + '*'}"
        f"s[{format_partition(a)}](x)s[{format_partition(b)}]"
        for (a, b), c in sorted(result.terms.items(), key=lambda kv: (term_order(kv[0][0]), term_order(kv[0][1])))
    ]
    text = " ".join(bits)
    print(text[2:] if text.startswith("+ ") else "-" + text[2:])
    return 0


def _cmd_table(args) -> int:
    n = args.n
    if n > 12:
        raise ResourceError("character tables limited to n <= 12")
    table = None
    cache_file = None
    if args.cache_dir:
        os.makedirs(args.cache_dir, exist_ok=True)
        cache_file = os.path.join(args.cache_dir, f"sn-character-table-{n}.json")
        if os.path.exists(cache_file):
            with open(cache_file) as fh:
                data = json.load(fh)
            if data.get("version") == 1 and data.get("n") == n:
                table = {
                    (tuple(row["lam"]), tuple(row["rho"])): row["value"]
                    for row in data["entries"]
                }
    if table is None:
        table = character_table(n)
        if cache_file:
            payload = {
                "version": 1,
                "n": n,
                "entries": [
                    {"lam": list(lam), "rho": list(rho), "value": v}
                    for (lam, rho), v in table.items()
                ],
            }
            with open(cache_file, "w") as fh:
                json.dump(payload, fh)
    labels = list(partitions_of(n))
    if args.json:
        print(
            json.dumps(
                {
                    "n": n,
                    "classes": [list(rho) for rho in labels],
                    "rows": [
                        {"lam": list(lam), "values": [table[(lam, rho)] for rho in labels]}
                        for lam in labels
                    ],
                }
            )
        )
        return 0
    width = max(len(str(v)) for v in table.values()) + 1
    head = " " * 12 + "".join(f"{format_partition(rho):>{width + 4}}" for rho in labels)
    lines = [head]
    for lam in labels:
        row = "".join(f"{table[(lam, rho)]:>{width + 4}}" for rho in labels)
        lines.append(f"{format_partition(lam):<12}{row}")
    print("\n".join(lines))
    return 0


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="symchar",
        description="Symmetric-function character decompositions and Hopf deformations",
    )
    top.add_argument("--max-weight", type=int, default=None, help="resource guard override")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="decompose a product of characters")
    p.add_argument(
        "--product",
        required=True,
        choices=[
            "outer",
            "kronecker",
            "newell-littlewood-o",
            "newell-littlewood-sp",
            "thibon",
            "reduced",
            "rational",
        ],
    )
    p.add_argument("lhs")
    p.add_argument("rhs")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_decompose)

    p = sub.add_parser("branch", help="apply a branching rule")
    p.add_argument("rule", choices=sorted(characters.BRANCH_SERIES))
    p.add_argument("element")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_branch)

    p = sub.add_parser("series", help="print series terms per degree")
    p.add_argument("tag", choices=list("MLABCD"))
    p.add_argument("--cap", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_series)

    p = sub.add_parser("check", help="run a bounded property check")
    p.add_argument("property", choices=["laplace", "cocycle2", "frobenius", "alghom"])
    p.add_argument("name")
    p.add_argument("--max-degree", type=int, default=4)
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("hash", help="evaluate a hash product on two basis elements")
    p.add_argument("--spec", required=True, help="named spec or inline JSON")
    p.add_argument("lhs")
    p.add_argument("rhs")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_hash)

    p = sub.add_parser("vertex", help="vertex-operator utilities")
    vsub = p.add_subparsers(dest="action", required=True)
    v1 = vsub.add_parser("schur")
    v1.add_argument("partition")
    v1.set_defaults(fn=_cmd_vertex, action="schur")
    v2 = vsub.add_parser("check-commutation")
    v2.add_argument("--cap", type=int, default=4)
    v2.set_defaults(fn=_cmd_vertex, action="check-commutation")

    p = sub.add_parser("fgl", help="formal group law utilities")
    fsub = p.add_subparsers(dest="action", required=True)
    f1 = fsub.add_parser("loop")
    f1.add_argument("law")
    f1.add_argument("n", type=int)
    f1.add_argument("--cap", type=int, default=6)
    f1.set_defaults(fn=_cmd_fgl, action="loop")
    f2 = fsub.add_parser("log")
    f2.add_argument("law")
    f2.add_argument("--cap", type=int, default=6)
    f2.set_defaults(fn=_cmd_fgl, action="log")
    f3 = fsub.add_parser("coproduct")
    f3.add_argument("law", choices=["additive", "multiplicative"])
    f3.add_argument("partition")
    f3.set_defaults(fn=_cmd_fgl, action="coproduct")

    p = sub.add_parser("table", help="print a symmetric-group character table")
    p.add_argument("n", type=int)
    p.add_argument("--cache-dir", default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_table)

    return top


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except ResourceError as exc:
        print(f"resource bound exceeded: {exc}", file=sys.stderr)
        return 3
    except (ValueError, KeyError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
