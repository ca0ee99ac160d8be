"""Command-line front end.

Verbs: describe, series, presentation, galois-exponent, bound, sylow.
Exit codes: 0 success, 2 parse error (group or field text, with byte
offset), 3 unsupported computation.  Output is deterministic: rows and
torsion are emitted in canonical order, JSON objects in fixed key order.
"""

from __future__ import annotations

import argparse
import json
import sys

from ._intmath import is_prime, prime_power_decompose
from .errors import FieldParseError, GroupParseError, UnsupportedError
from .fields import galois_fixed_exponent, parse_field
from .groups import format_group, parse_group_expr, sylow_profile
from .models import (
    chow_model,
    chow_model_localized,
    chow_model_mod_p,
    chow_symmetric_sylow_bound,
)
from .presentations import catalog_presentation
from .tables import ChowTable, DegreeRow, Localization

JSON_SCHEMA_VERSION = 1


def _prime_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if not is_prime(value):
        raise argparse.ArgumentTypeError(f"not a prime: {value}")
    return value


def _positive_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {value}")
    return value


def _nonnegative_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {value}")
    return value


def _add_table_flags(sub: argparse.ArgumentParser, with_group: bool = True) -> None:
    if with_group:
        sub.add_argument("group", help="group expression, e.g. 'O(3)' or 'Z/4 x Z/2'")
    sub.add_argument("--max-degree", type=_nonnegative_arg, default=10)
    sub.add_argument("--field", default="C", help="C, Qbar, Q, Q(mu_p), F_l, F_l(mu_p)")
    loc = sub.add_mutually_exclusive_group()
    loc.add_argument("--prime", type=_prime_arg, help="localize at this prime")
    loc.add_argument("--mod", type=_prime_arg, help="report F_p dimensions at this prime")
    sub.add_argument("--format", choices=("table", "json"), default="table")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chowbg",
        description="Additive structure and presentations of Chow rings of classifying spaces",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    _add_table_flags(sub.add_parser("describe", help="per-degree additive table"))
    _add_table_flags(sub.add_parser("series", help="per-degree numeric series"))

    pres = sub.add_parser("presentation", help="catalog ring presentation")
    pres.add_argument("group")
    pres.add_argument("--format", choices=("table", "json"), default="table")

    gal = sub.add_parser("galois-exponent", help="Galois fixed-subgroup exponent")
    gal.add_argument("--prime", type=_prime_arg, required=True)
    gal.add_argument("--degree", type=_positive_arg, required=True)
    gal.add_argument("--format", choices=("table", "json"), default="table")

    bnd = sub.add_parser("bound", help="generator degree bound")
    bnd.add_argument("group")
    bnd.add_argument("--format", choices=("table", "json"), default="table")

    syl = sub.add_parser("sylow", help="table of the p-Sylow subgroup of S_n")
    syl.add_argument("n", type=_positive_arg)
    syl.add_argument("--prime", type=_prime_arg, required=True)
    syl.add_argument("--max-degree", type=_nonnegative_arg, default=10)
    syl.add_argument("--field", default="C")
    syl.add_argument("--format", choices=("table", "json"), default="table")
    return parser


# ---------------------------------------------------------------------------
# rendering


def render_row_value(row: DegreeRow) -> str:
    parts = []
    if row.free_rank == 1:
        parts.append("Z")
    elif row.free_rank > 1:
        parts.append(f"Z^{row.free_rank}")
    seen: list[tuple[int, int]] = []  # (order, multiplicity), canonical order
    for order in row.torsion:
        if seen and seen[-1][0] == order:
            seen[-1] = (order, seen[-1][1] + 1)
        else:
            seen.append((order, 1))
    for order, mult in seen:
        parts.append(f"Z/{order}" if mult == 1 else f"(Z/{order})^{mult}")
    return " ⊕ ".join(parts) if parts else "0"


def _localization_text(loc: Localization) -> str:
    if loc.kind == "integral":
        return "integral"
    if loc.kind == "at_prime":
        return f"at prime {loc.prime}"
    return f"mod {loc.prime}"


def render_table(table: ChowTable, out) -> None:
    if table.group is not None:
        out.write(f"group: {format_group(table.group)}\n")
    if table.field is not None:
        out.write(f"field: {table.field.name}\n")
    out.write(f"localization: {_localization_text(table.localization)}\n")
    out.write(f"provenance: {', '.join(table.provenance)}\n")
    width = len(str(table.bound))
    for row in table.rows:
        out.write(f"  {row.degree:>{width}}: {render_row_value(row)}\n")


def _torsion_json(torsion: tuple[int, ...]) -> list[dict]:
    grouped: list[dict] = []
    for order in torsion:
        p, e = prime_power_decompose(order)
        if grouped and grouped[-1]["prime"] == p and grouped[-1]["exponent"] == e:
            grouped[-1]["multiplicity"] += 1
        else:
            grouped.append({"prime": p, "exponent": e, "multiplicity": 1})
    return grouped


def _localization_json(loc: Localization) -> dict:
    obj = {"kind": loc.kind}
    if loc.prime is not None:
        obj["prime"] = loc.prime
    return obj


def table_to_json_obj(table: ChowTable) -> dict:
    return {
        "schema": JSON_SCHEMA_VERSION,
        "group": format_group(table.group) if table.group is not None else None,
        "field": (
            {"char": table.field.characteristic, "name": table.field.name}
            if table.field is not None
            else None
        ),
        "localization": _localization_json(table.localization),
        "bound": table.bound,
        "degrees": [
            {
                "degree": row.degree,
                "free_rank": row.free_rank,
                "torsion": _torsion_json(row.torsion),
            }
            for row in table.rows
        ],
        "provenance": list(table.provenance),
    }


def table_from_json_obj(obj: dict) -> ChowTable:
    """Inverse of table_to_json_obj, for round-tripping emitted JSON."""
    if obj.get("schema") != JSON_SCHEMA_VERSION:
        raise ValueError(f"unsupported schema version {obj.get('schema')!r}")
    rows = []
    for entry in obj["degrees"]:
        torsion = []
        for t in entry["torsion"]:
            torsion.extend([t["prime"] ** t["exponent"]] * t["multiplicity"])
        rows.append(DegreeRow(entry["degree"], entry["free_rank"], tuple(torsion)))
    loc = obj["localization"]
    return ChowTable(
        rows=tuple(rows),
        bound=obj["bound"],
        group=parse_group_expr(obj["group"]) if obj["group"] is not None else None,
        field=parse_field(obj["field"]["name"]) if obj["field"] is not None else None,
        localization=Localization(loc["kind"], loc.get("prime")),
        provenance=tuple(obj["provenance"]),
    )


def _emit_json(obj: dict, out) -> None:
    json.dump(obj, out, indent=2)
    out.write("\n")


# ---------------------------------------------------------------------------
# verbs


def _compute_table(group_text: str, args) -> ChowTable:
    g = parse_group_expr(group_text)
    k = parse_field(args.field)
    if args.prime is not None:
        return chow_model_localized(g, k, args.max_degree, args.prime)
    if args.mod is not None:
        return chow_model_mod_p(g, k, args.max_degree, args.mod)
    return chow_model(g, k, args.max_degree)


def _run_describe(args, out) -> int:
    table = _compute_table(args.group, args)
    if args.format == "json":
        _emit_json(table_to_json_obj(table), out)
    else:
        render_table(table, out)
    return 0


def _run_series(args, out) -> int:
    table = _compute_table(args.group, args)
    kind = "mod-p-dimension" if args.mod is not None else "free-rank"
    values = [row.free_rank for row in table.rows]
    if args.format == "json":
        obj = table_to_json_obj(table)
        _emit_json(
            {
                "schema": JSON_SCHEMA_VERSION,
                "group": obj["group"],
                "field": obj["field"],
                "localization": obj["localization"],
                "kind": kind,
                "values": values,
            },
            out,
        )
    else:
        out.write(f"group: {format_group(table.group)}\n")
        out.write(f"kind: {kind}\n")
        out.write("series: " + " ".join(str(v) for v in values) + "\n")
    return 0


def _run_presentation(args, out) -> int:
    pres = catalog_presentation(parse_group_expr(args.group))
    if args.format == "json":
        _emit_json(
            {
                "schema": JSON_SCHEMA_VERSION,
                "group": format_group(pres.group),
                "completeness": pres.completeness,
                "generators": [{"name": n, "degree": d} for n, d in pres.generators],
                "relations": [
                    {"coefficient": m, "generator": n} for m, n in pres.torsion_relations
                ],
            },
            out,
        )
    else:
        out.write(f"group: {format_group(pres.group)}\n")
        out.write(f"completeness: {pres.completeness}\n")
        gens = " ".join(f"{n}:{d}" for n, d in pres.generators)
        out.write(f"generators: {gens}\n")
        if pres.torsion_relations:
            rels = ", ".join(f"{m}*{n} = 0" for m, n in pres.torsion_relations)
            out.write(f"relations: {rels}\n")
        elif pres.completeness == "exact":
            out.write("relations: none\n")
    return 0


def _run_galois_exponent(args, out) -> int:
    spec = galois_fixed_exponent(args.prime, args.degree)
    if args.format == "json":
        _emit_json(
            {
                "schema": JSON_SCHEMA_VERSION,
                "prime": spec.prime,
                "degree": spec.codegree,
                "kind": "zero" if spec.is_zero() else "ker",
                "exponent": spec.exponent,
            },
            out,
        )
    else:
        out.write("0\n" if spec.is_zero() else f"ker {spec.prime}^{spec.exponent}\n")
    return 0


def _run_bound(args, out) -> int:
    from .groups import generator_bound

    g = parse_group_expr(args.group)
    value = generator_bound(g)
    if args.format == "json":
        _emit_json(
            {"schema": JSON_SCHEMA_VERSION, "group": format_group(g), "bound": value}, out
        )
    else:
        out.write(f"{value}\n")
    return 0


def _run_sylow(args, out) -> int:
    k = parse_field(args.field)
    table = chow_symmetric_sylow_bound(args.n, args.prime, args.max_degree, field=k)
    if args.format == "json":
        _emit_json(table_to_json_obj(table), out)
    else:
        profile = sylow_profile(args.n, args.prime)
        out.write(
            f"{args.prime}-Sylow subgroup of S_{args.n}: {format_group(profile.group())}\n"
        )
        render_table(table, out)
    return 0


_VERBS = {
    "describe": _run_describe,
    "series": _run_series,
    "presentation": _run_presentation,
    "galois-exponent": _run_galois_exponent,
    "bound": _run_bound,
    "sylow": _run_sylow,
}


def run(argv: list[str], out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _VERBS[args.verb](args, out)
    except (GroupParseError, FieldParseError) as exc:
        err.write(f"parse error: {exc}\n")
        return 2
    except UnsupportedError as exc:
        err.write(f"unsupported: {exc}\n")
        return 3


def main() -> None:
    for stream in (sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8")
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
