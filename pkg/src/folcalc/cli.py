"""Command-line front end: JSON documents in, JSON (or a table) out.

Exact rationals travel as lowest-terms strings, output keys are sorted, and
identical inputs always produce identical bytes. Exit status 0 means success,
2 a validation problem (malformed input, bad flags), 1 a domain failure
propagated from the library (degenerate configuration, inconsistent samples,
and so on); failures carry a machine-readable {code, message, location}
object on stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bounds as bounds_mod
from . import contributions as contrib_mod
from . import jouanolou as jouanolou_mod
from . import lattice as lattice_mod
from . import zariski as zariski_mod
from .cyclic import CyclicType, hj_expansion, wunram_degrees
from .errors import FolcalcError, ValidationError
from .rationals import format_rational, parse_integer, parse_rational


class _Parser(argparse.ArgumentParser):
    """argparse that reports problems through the shared error object."""

    def error(self, message):
        raise ValidationError(message)


def _load_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"malformed JSON: {exc}", location=path) from exc
    except OSError as exc:
        raise ValidationError(str(exc), location=path) from exc


def _cyclic_from_args(args) -> CyclicType:
    if args.n is None or args.q is None:
        raise ValidationError("this operation needs --n and --q")
    return CyclicType(args.n, args.q)


def _datum_from_kind(args) -> contrib_mod.SingularityDatum:
    kind = args.kind
    if kind == "terminal":
        return contrib_mod.Terminal(_cyclic_from_args(args))
    if kind == "dihedral":
        return contrib_mod.Dihedral(a_exp=1, l=1, m_odd=1, p=1)
    if kind == "cusp":
        return contrib_mod.Cusp()
    if kind == "gorenstein":
        return contrib_mod.GorensteinCanonical()
    raise ValidationError(f"unknown singularity kind {kind!r}")


# --- handlers ---------------------------------------------------------------


def _cmd_hj(args):
    expansion = hj_expansion(CyclicType(args.n, args.q))
    return {"b": list(expansion.entries)}


def _cmd_wunram(args):
    data = wunram_degrees(CyclicType(args.n, args.q), args.i, reduce_mod_n=args.reduce)
    expansion = hj_expansion(CyclicType(args.n, args.q))
    return {"b": list(expansion.entries), "s": list(data.s), "d": list(data.d)}


def _cmd_contrib(args):
    if args.kind == "terminal":
        value = contrib_mod.a_terminal(_cyclic_from_args(args), args.m)
    elif args.kind == "dihedral":
        value = contrib_mod.a_dihedral(args.m)
    elif args.kind == "cusp":
        value = contrib_mod.a_cusp(args.m)
    else:
        value = contrib_mod.contribution(_datum_from_kind(args), args.m)
    return {"a": format_rational(value)}


def _cmd_chi_local(args):
    if args.kind is None:
        value = contrib_mod.chi_fchain(_cyclic_from_args(args), args.m)
        return {"chi": format_rational(value)}
    value = contrib_mod.chi_partial_crepant(_datum_from_kind(args), args.m)
    return {"chi": format_rational(value)}


def _cmd_pullback(args):
    graph = lattice_mod.graph_from_json(_load_json(args.graph))
    profile = lattice_mod.profile_from_json(graph, _load_json(args.profile))
    solution = lattice_mod.solve_pullback(graph, profile)
    return {label: format_rational(solution.coefficient(label)) for label in graph.labels}


def _cmd_zariski(args):
    graph = lattice_mod.graph_from_json(_load_json(args.graph))
    divisor = lattice_mod.divisor_from_json(graph, _load_json(args.divisor))
    result = zariski_mod.zariski_decompose(graph, divisor)
    return {
        "P": lattice_mod.divisor_to_json(result.positive),
        "N": lattice_mod.divisor_to_json(result.negative),
        "support": list(result.support),
    }


def _samples_from_json(obj) -> bounds_mod.HilbertSamples:
    if not isinstance(obj, dict) or "values" not in obj or not isinstance(obj["values"], dict):
        raise ValidationError('samples JSON must be an object with a "values" map')
    values = {parse_integer(k): parse_rational(v) for k, v in obj["values"].items()}
    hint = obj.get("period_hint")
    if hint is not None:
        hint = parse_integer(hint)
    return bounds_mod.HilbertSamples(values=values, period_hint=hint)


def _invariants_to_json(inv: bounds_mod.ModelInvariants) -> dict:
    return {
        "K2": format_rational(inv.k2),
        "K_dot_KY": format_rational(inv.k_dot_ky),
        "chi_O": inv.chi_o,
        "contribution_sum": format_rational(inv.contribution_sum),
        "cusp_count": inv.cusp_count,
    }


def _config_to_json(cfg: bounds_mod.SingularityConfiguration) -> dict:
    return {
        "terminal_orders": list(cfg.terminal_orders),
        "dihedral_count": cfg.dihedral_count,
        "cusp_count": cfg.cusp_count,
    }


def _cmd_bounds(args):
    raw_bound = os.environ.get("FOLCALC_LMAX", str(bounds_mod.DEFAULT_PERIOD_BOUND))
    try:
        period_bound = int(raw_bound)
    except ValueError:
        raise ValidationError(f"FOLCALC_LMAX must be an integer, got {raw_bound!r}") from None
    samples = _samples_from_json(_load_json(args.samples))
    mode = bounds_mod.WEAK_NEF if args.mode == "weak-nef" else bounds_mod.CANONICAL
    report = bounds_mod.pipeline(samples, mode, period_bound=period_bound)
    per_config = [
        {
            "index": report.index_candidates[k],
            "gamma": format_rational(r.gamma),
            "N1": r.n1,
            "square_threshold_holds": r.square_threshold_holds,
            "curve_threshold_holds": r.curve_threshold_holds,
        }
        for k, r in enumerate(report.results)
    ]
    return {
        "mode": report.mode,
        "invariants": _invariants_to_json(report.invariants),
        "configurations": [_config_to_json(c) for c in report.configurations],
        "index_candidates": list(report.index_candidates),
        "max_terminal_order": report.max_terminal_order,
        "per_config": per_config,
        "N1_worst": report.n1_worst,
        "note": "index candidates are lcm-based upper bounds; |mK| is birational for every m >= N1_worst",
    }


def _cmd_jouanolou(args):
    report = jouanolou_mod.accumulation_report(args.dmax)
    return {
        "entries": [
            {
                "d": e.d,
                "volume": format_rational(e.volume),
                "aut_order": e.aut_order,
                "one_minus_volume": format_rational(1 - e.volume),
            }
            for e in report.entries
        ],
        "strictly_increasing": report.strictly_increasing,
        "all_below_one": report.all_below_one,
        "minimum": format_rational(report.minimum),
        "gap_identity_holds": report.gap_identity_holds,
        "converges": report.converges,
    }


def _cmd_dihedral_verify(args):
    datum = contrib_mod.Dihedral(
        a_exp=args.a, l=args.l, m_odd=args.modd, p=args.p, variant=args.variant
    )
    report = contrib_mod.dihedral_sum_verify(datum)
    z = report.sum_value
    return {
        "sum_value": f"{z.real:.15g}{z.imag:+.15g}j",
        "sum_exact": format_rational(report.sum_exact),
        "expected_n": report.expected_n,
        "pass": report.passed,
        "a": format_rational(report.a_value),
    }


def _cmd_relate(args):
    def table(path):
        obj = _load_json(path)
        if not isinstance(obj, dict):
            raise ValidationError("chi table JSON must map multiples to integers", location=path)
        return {parse_integer(k): parse_rational(v) for k, v in obj.items()}

    match = bounds_mod.relate_models(table(args.weak), table(args.canonical), args.cusps)
    return {"match": match}


# --- rendering --------------------------------------------------------------


def _render_json(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _rows_to_table(rows: list[dict], columns: list[str]) -> list[str]:
    widths = {c: max(len(c), *(len(str(r[c])) for r in rows)) for c in columns}
    header = "  ".join(c.ljust(widths[c]) for c in columns)
    sep = "  ".join("-" * widths[c] for c in columns)
    lines = [header, sep]
    for r in rows:
        lines.append("  ".join(str(r[c]).ljust(widths[c]) for c in columns))
    return lines


def _render_table(command: str, doc) -> str:
    lines: list[str] = []
    if command == "jouanolou":
        lines += _rows_to_table(doc["entries"], ["d", "volume", "aut_order", "one_minus_volume"])
        for key in ("strictly_increasing", "all_below_one", "minimum", "gap_identity_holds", "converges"):
            lines.append(f"{key} = {doc[key]}")
    elif command == "bounds":
        for key, value in sorted(doc["invariants"].items()):
            lines.append(f"{key} = {value}")
        rows = [
            {
                "configuration": _describe_config(cfg),
                "index": pc["index"],
                "gamma": pc["gamma"],
                "N1": pc["N1"],
            }
            for cfg, pc in zip(doc["configurations"], doc["per_config"])
        ]
        lines.append("")
        lines += _rows_to_table(rows, ["configuration", "index", "gamma", "N1"])
        lines.append("")
        lines.append(f"max_terminal_order = {doc['max_terminal_order']}")
        lines.append(f"N1_worst = {doc['N1_worst']}")
    elif command == "zariski":
        for part in ("P", "N"):
            body = ", ".join(f"{k}: {v}" for k, v in sorted(doc[part].items())) or "0"
            lines.append(f"{part} = {body}")
        lines.append(f"support = {', '.join(doc['support']) or '(empty)'}")
    else:
        for key, value in sorted(doc.items()):
            if isinstance(value, dict):
                body = ", ".join(f"{k}: {v}" for k, v in sorted(value.items()))
                lines.append(f"{key} = {{{body}}}")
            else:
                lines.append(f"{key} = {value}")
    return "\n".join(lines) + "\n"


def _describe_config(cfg: dict) -> str:
    parts = []
    if cfg["terminal_orders"]:
        parts.append("terminal" + str(tuple(cfg["terminal_orders"])))
    if cfg["dihedral_count"]:
        parts.append(f"dihedral x{cfg['dihedral_count']}")
    if cfg["cusp_count"]:
        parts.append(f"cusp x{cfg['cusp_count']}")
    return " + ".join(parts) or "smooth"


# --- parser -----------------------------------------------------------------


def build_parser() -> _Parser:
    parser = _Parser(prog="folcalc", description=__doc__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hj", parents=[common], help="continued-fraction expansion of n/q")
    p.add_argument("n", type=int)
    p.add_argument("q", type=int)
    p.set_defaults(handler=_cmd_hj)

    p = sub.add_parser("wunram", parents=[common], help="sheaf-transform degrees of index i")
    p.add_argument("n", type=int)
    p.add_argument("q", type=int)
    p.add_argument("i", type=int)
    p.add_argument("--reduce", action="store_true", help="reduce i mod n instead of range-checking")
    p.set_defaults(handler=_cmd_wunram)

    p = sub.add_parser("contrib", parents=[common], help="local contribution a(y, mK)")
    p.add_argument("--kind", required=True, choices=("terminal", "dihedral", "cusp", "gorenstein"))
    p.add_argument("--m", required=True, type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--q", type=int)
    p.set_defaults(handler=_cmd_contrib)

    p = sub.add_parser("chi-local", parents=[common], help="local Euler defect tables")
    p.add_argument("--m", required=True, type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--q", type=int)
    p.add_argument(
        "--kind",
        choices=("terminal", "dihedral", "cusp", "gorenstein"),
        help="partial-crepant table instead of the contracted-string value",
    )
    p.set_defaults(handler=_cmd_chi_local)

    p = sub.add_parser("pullback", parents=[common], help="solve prescribed intersection numbers")
    p.add_argument("graph")
    p.add_argument("profile")
    p.set_defaults(handler=_cmd_pullback)

    p = sub.add_parser("zariski", parents=[common], help="decompose a divisor on a configuration")
    p.add_argument("graph")
    p.add_argument("divisor")
    p.set_defaults(handler=_cmd_zariski)

    p = sub.add_parser("bounds", parents=[common], help="pluricanonical bound from Hilbert samples")
    p.add_argument("--mode", required=True, choices=("weak-nef", "canonical"))
    p.add_argument("samples")
    p.set_defaults(handler=_cmd_bounds)

    p = sub.add_parser("jouanolou", parents=[common], help="quotient volumes of the plane family")
    p.add_argument("--dmax", required=True, type=int)
    p.set_defaults(handler=_cmd_jouanolou)

    p = sub.add_parser("dihedral-verify", parents=[common], help="certify the dihedral sum = n")
    p.add_argument("--variant", required=True, choices=("e1", "e2"))
    p.add_argument("--a", required=True, type=int, help="exponent of 2 in 2n")
    p.add_argument("--l", required=True, type=int)
    p.add_argument("--modd", required=True, type=int)
    p.add_argument("--p", required=True, type=int)
    p.set_defaults(handler=_cmd_dihedral_verify)

    p = sub.add_parser("relate", parents=[common], help="compare weak nef and canonical chi tables")
    p.add_argument("weak")
    p.add_argument("canonical")
    p.add_argument("--cusps", required=True, type=int)
    p.set_defaults(handler=_cmd_relate)

    return parser


def _emit_error(err: FolcalcError) -> None:
    doc = {"code": err.code, "message": err.message, "location": err.location}
    sys.stderr.write(json.dumps(doc, sort_keys=True) + "\n")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        doc = args.handler(args)
    except ValidationError as err:
        _emit_error(err)
        return 2
    except FolcalcError as err:
        _emit_error(err)
        return 1
    if args.format == "table":
        sys.stdout.write(_render_table(args.command, doc))
    else:
        sys.stdout.write(_render_json(doc))
    return 0


if __name__ == "__main__":
    sys.exit(main())
