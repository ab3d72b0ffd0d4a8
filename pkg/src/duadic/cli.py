"""Command-line front end.

Commands: construct, catalog, table, verify-lemmas, mindist. Output formats:
text (default), json (byte-deterministic for a fixed config: sorted keys),
csv (a flattened projection of the json rows). DUADIC_THREADS caps worker
processes for table rows and exact enumerations.
"""

import argparse
import csv
import json
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import gf2poly
from .bounds import LEMMA_IDS, SIDES, HypothesisError, best_certificate, lemma_window, verify_lemma_membership
from .code import dual, extend, from_defining_set, is_doubly_even, is_self_dual
from .cyclotomic import WeightClassSpec, complement_spec, defining_set
from .gf2m import field
from .mindist import ENUM_BUDGET_K, bounded_min_distance, exact_min_distance
from .pairs import R8_REFERENCE_SETS, classify, enumerate_catalog, is_duadic

# Offset tables: theorem -> (offset when m = t mod 2r, offset when m = t+r mod 2r),
# where the bound reads d >= 2^((m-1)/2) + offset. Dual offsets are one higher,
# extended codes are bounded at offset 4 whenever a theorem applies.
_D_OFFSETS = {"T4": (3, 3), "T7": (1, 1), "T8": (3, 1), "T9": (1, 3)}

CONSTRUCT_COLUMNS = [
    "r", "m", "S", "t", "unchecked", "n", "k", "duadic", "theorem", "residue_case",
    "predicted_d_lower", "predicted_d_dual_lower", "predicted_d_ext_lower",
    "certified_d_lower", "bch_v", "bch_l", "bch_run_length",
    "dual_k", "dual_certified_d_lower", "ext_n", "ext_k", "self_dual", "doubly_even",
    "generator_hex",
]
CATALOG_COLUMNS = [
    "r", "t", "S", "S_complement", "theorem",
    "d_offset_case_t", "d_offset_case_t_plus_r",
    "d_dual_offset_case_t", "d_dual_offset_case_t_plus_r", "d_ext_offset",
]
TABLE_COLUMNS = [
    "r", "m", "S", "n", "k", "duadic", "theorem", "residue_case",
    "predicted_d_lower", "certified_d_lower", "exact_d", "min_odd_weight",
    "dual_k", "dual_certified_d_lower", "dual_exact_d",
    "ext_n", "ext_k", "predicted_d_ext_lower", "ext_exact_d",
    "self_dual", "doubly_even", "error",
]
LEMMA_COLUMNS = ["r", "m", "S", "lemma", "side", "status", "v", "window", "detail"]
MINDIST_COLUMNS = [
    "r", "m", "S", "code", "n", "k", "method", "lower", "upper", "exact",
    "min_odd_weight", "seed", "effort", "witness_hex",
]

_EPILOG = """\
csv columns per command:
  construct:     %s
  catalog:       %s
  table:         %s
  verify-lemmas: %s
  mindist:       %s

catalog offset columns report d >= 2^((m-1)/2) + offset for the two residue
classes of m mod 2r (m = t and m = t + r); dual offsets are analogous and
extended codes carry offset 4 whenever a theorem applies.
""" % tuple(", ".join(c) for c in (CONSTRUCT_COLUMNS, CATALOG_COLUMNS, TABLE_COLUMNS, LEMMA_COLUMNS, MINDIST_COLUMNS))


class UsageError(ValueError):
    pass


def _parse_residues(text, r):
    try:
        vals = [int(p) for p in text.split(",")]
    except ValueError:
        raise UsageError(f"-S expects comma-separated integers, got {text!r}") from None
    if any(not 0 <= v < r for v in vals):
        raise UsageError(f"-S residues must lie in 0..{r - 1}, got {text!r}")
    if any(b <= a for a, b in zip(vals, vals[1:])):
        raise UsageError(f"-S residues must be strictly increasing, got {text!r}")
    return tuple(vals)


def _parse_int_list(text, flag):
    if text.strip() == "":
        return []
    try:
        return [int(p) for p in text.split(",")]
    except ValueError:
        raise UsageError(f"{flag} expects comma-separated integers, got {text!r}") from None


def _make_spec(r, m, s_text, unchecked):
    s = _parse_residues(s_text, r)
    try:
        return WeightClassSpec(r=r, m=m, S=s, unchecked=unchecked)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _parse_v_candidates(text, n):
    if text is None:
        return None
    if n < 3:
        raise UsageError("--v needs a code length of at least 3")
    vs = _parse_int_list(text, "--v")
    for v in vs:
        if math.gcd(v % n, n) != 1:
            raise UsageError(f"--v candidate {v} is not a unit mod {n}")
    return vs


def _workers():
    return max(1, int(os.environ.get("DUADIC_THREADS", "1") or 1))


def _fmt_seq(seq):
    return ",".join(str(x) for x in seq)


def _spec_json(spec):
    return {
        "r": spec.r,
        "m": spec.m,
        "S": list(spec.S),
        "S_complement": list(complement_spec(spec).S),
        "t": spec.t,
        "unchecked": spec.unchecked,
    }


def _construct_report(spec, v_candidates):
    fld = field(spec.m)
    t_set = defining_set(spec)
    c = from_defining_set(fld, t_set)
    verdict = classify(spec)
    cert = best_certificate(t_set, v_candidates)
    d = dual(c)
    dual_cert = best_certificate(d.T, v_candidates)
    e = extend(c)
    report = {
        "spec": _spec_json(spec),
        "field": {"m": fld.m, "modulus_hex": gf2poly.to_hex(fld.modulus)},
        "n": c.n,
        "k": c.k,
        "generator_hex": gf2poly.to_hex(c.g),
        "generator_degree": c.n - c.k,
        "defining_set_leaders": t_set.coset_leaders(),
        "duadic": is_duadic(spec),
        "theorem": verdict.to_json(),
        "bch": cert.to_json(),
        "dual": {
            "n": d.n,
            "k": d.k,
            "generator_hex": gf2poly.to_hex(d.g),
            "defining_set_leaders": d.T.coset_leaders(),
            "bch": dual_cert.to_json(),
        },
        "extended": {
            "n": e.n,
            "k": e.k,
            "self_dual": is_self_dual(e),
            "doubly_even": is_doubly_even(e),
        },
    }
    return report


def _construct_row(report):
    spec, verdict, cert = report["spec"], report["theorem"], report["bch"]
    return {
        "r": spec["r"], "m": spec["m"], "S": _fmt_seq(spec["S"]), "t": spec["t"],
        "unchecked": spec["unchecked"], "n": report["n"], "k": report["k"],
        "duadic": report["duadic"], "theorem": verdict["theorem"],
        "residue_case": verdict["residue_case"],
        "predicted_d_lower": verdict["d_lower"],
        "predicted_d_dual_lower": verdict["d_dual_lower"],
        "predicted_d_ext_lower": verdict["d_ext_lower"],
        "certified_d_lower": cert["d_lower"], "bch_v": cert["v"], "bch_l": cert["l"],
        "bch_run_length": cert["run_length"],
        "dual_k": report["dual"]["k"],
        "dual_certified_d_lower": report["dual"]["bch"]["d_lower"],
        "ext_n": report["extended"]["n"], "ext_k": report["extended"]["k"],
        "self_dual": report["extended"]["self_dual"],
        "doubly_even": report["extended"]["doubly_even"],
        "generator_hex": report["generator_hex"],
    }


def _construct_text(report):
    spec = report["spec"]
    verdict = report["theorem"]
    cert = report["bch"]
    lines = [
        f"spec       r={spec['r']} m={spec['m']} S={_fmt_seq(spec['S'])} "
        f"(t={spec['t']}, S'={_fmt_seq(spec['S_complement'])})",
        f"code       [{report['n']},{report['k']}] cyclic over GF(2^{spec['m']})",
    ]
    gen = f"generator  degree {report['generator_degree']}, {report['generator_hex']}"
    if report["generator_degree"] <= 24:
        gen += f"  ({gf2poly.pretty(gf2poly.from_hex(report['generator_hex']))})"
    lines.append(gen)
    lines.append(f"duadic     {'yes (odd-like splitting, multiplier -1)' if report['duadic'] else 'no'}")
    if verdict["theorem"] == "none":
        lines.append("theorem    none")
    else:
        case = f", case m={verdict['residue_case']} (mod {2 * spec['r']})" if verdict["residue_case"] is not None else ""
        lines.append(
            f"theorem    {verdict['theorem']}{case}: d >= {verdict['d_lower']}, "
            f"dual d >= {verdict['d_dual_lower']}, extended d >= {verdict['d_ext_lower']}"
        )
    lines.append(f"bch        v={cert['v']} l={cert['l']} run={cert['run_length']} => d >= {cert['d_lower']}")
    dc = report["dual"]["bch"]
    lines.append(
        f"dual       [{report['dual']['n']},{report['dual']['k']}] "
        f"bch v={dc['v']} run={dc['run_length']} => d >= {dc['d_lower']}"
    )
    ext = report["extended"]
    lines.append(
        f"extended   [{ext['n']},{ext['k']}] self_dual={_yn(ext['self_dual'])} doubly_even={_yn(ext['doubly_even'])}"
    )
    return "\n".join(lines)


def _yn(b):
    return "yes" if b else "no"


def cmd_construct(args):
    spec = _make_spec(args.r, args.m, args.S, args.unchecked)
    v_candidates = _parse_v_candidates(args.v, spec.n)
    report = _construct_report(spec, v_candidates)
    payload = {"command": "construct", "report": report}
    return 0, payload, [_construct_row(report)], CONSTRUCT_COLUMNS, _construct_text(report)


def _catalog_rows(r, t):
    rows = []
    m_probe = t if t >= 3 else t + r  # smallest valid odd m with m = t mod r
    for s in enumerate_catalog(r, t):
        comp = tuple(c for c in range(r) if c not in set(s))
        verdict = classify(WeightClassSpec(r=r, m=m_probe, S=s))
        offs = _D_OFFSETS.get(verdict.theorem)
        rows.append({
            "r": r, "t": t, "S": _fmt_seq(s), "S_complement": _fmt_seq(comp),
            "theorem": verdict.theorem,
            "d_offset_case_t": offs[0] if offs else None,
            "d_offset_case_t_plus_r": offs[1] if offs else None,
            "d_dual_offset_case_t": offs[0] + 1 if offs else None,
            "d_dual_offset_case_t_plus_r": offs[1] + 1 if offs else None,
            "d_ext_offset": 4 if offs else None,
        })
    return rows


def cmd_catalog(args):
    try:
        rows = _catalog_rows(args.r, args.t)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    exit_code = 0
    notes = []
    if args.r == 8:
        found = {row["S"] for row in rows}
        missing = [s for s in R8_REFERENCE_SETS[args.t] if _fmt_seq(s) not in found]
        if missing:
            exit_code = 1
            notes.append(f"reference sets missing from enumeration: {missing}")
        else:
            notes.append("all 8 reference sets for r=8 are present")
    payload = {
        "command": "catalog",
        "r": args.r,
        "t": args.t,
        "count": len(rows),
        "sets": [row["S"] for row in rows],
        "rows": rows,
        "notes": notes,
    }
    text = _render_table(CATALOG_COLUMNS, rows)
    text += f"\ncount: {len(rows)}"
    for note in notes:
        text += f"\nnote: {note}"
    return exit_code, payload, rows, CATALOG_COLUMNS, text


def _table_row(task):
    r, m, s, unchecked, v_candidates = task
    base = {col: None for col in TABLE_COLUMNS}
    base.update({"r": r, "m": m, "S": _fmt_seq(s)})
    try:
        spec = WeightClassSpec(r=r, m=m, S=s, unchecked=unchecked)
        t_set = defining_set(spec)
        verdict = classify(spec)
        cert = best_certificate(t_set, v_candidates)
        fld = field(m)
        c = from_defining_set(fld, t_set)
        d = dual(c)
        dual_cert = best_certificate(d.T, v_candidates)
        e = extend(c)
        base.update({
            "n": c.n, "k": c.k, "duadic": is_duadic(spec),
            "theorem": verdict.theorem, "residue_case": verdict.residue_case,
            "predicted_d_lower": verdict.d_lower,
            "certified_d_lower": cert.d_lower,
            "dual_k": d.k, "dual_certified_d_lower": dual_cert.d_lower,
            "ext_n": e.n, "ext_k": e.k,
            "predicted_d_ext_lower": verdict.d_ext_lower,
            "self_dual": is_self_dual(e), "doubly_even": is_doubly_even(e),
        })
        if c.k <= ENUM_BUDGET_K:
            found = exact_min_distance(c, workers=1)
            base["exact_d"] = found.lower
            base["min_odd_weight"] = found.min_odd_weight
            ext_found = exact_min_distance(e, workers=1)
            base["ext_exact_d"] = ext_found.lower
        if d.k <= ENUM_BUDGET_K:
            base["dual_exact_d"] = exact_min_distance(d, workers=1).lower
    except Exception as exc:  # noqa: BLE001 - per-row errors are reported inline
        base["error"] = str(exc)
    return base


def cmd_table(args):
    m_list = _parse_int_list(args.m, "-m")
    tasks = []
    for m in m_list:
        v_candidates = _parse_v_candidates(args.v, (1 << m) - 1)
        if args.S.strip().lower() == "all":
            try:
                sets = enumerate_catalog(args.r, m % args.r)
            except ValueError as exc:
                tasks.append((args.r, m, (), args.unchecked, None, str(exc)))
                continue
            tasks.extend((args.r, m, s, args.unchecked, v_candidates, None) for s in sets)
        else:
            tasks.append((args.r, m, _parse_residues(args.S, args.r), args.unchecked, v_candidates, None))
    rows = []
    runnable = [t[:5] for t in tasks if t[5] is None]
    workers = _workers()
    if workers > 1 and len(runnable) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            computed = list(pool.map(_table_row, runnable))
    else:
        computed = [_table_row(t) for t in runnable]
    it = iter(computed)
    for task in tasks:
        if task[5] is None:
            rows.append(next(it))
        else:
            row = {col: None for col in TABLE_COLUMNS}
            row.update({"r": task[0], "m": task[1], "S": _fmt_seq(task[2]), "error": task[5]})
            rows.append(row)
    payload = {"command": "table", "r": args.r, "S": args.S, "m_list": m_list, "rows": rows}
    return 0, payload, rows, TABLE_COLUMNS, _render_table(TABLE_COLUMNS, rows)


def cmd_verify_lemmas(args):
    m_list = _parse_int_list(args.m, "-m")
    rows = []
    failures = 0
    for m in m_list:
        if m % 2 == 0:
            raise UsageError(f"-m values must be odd, got {m}")
        try:
            sets = enumerate_catalog(args.r, m % args.r)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        for s in sets:
            spec = WeightClassSpec(r=args.r, m=m, S=s)
            for lemma in LEMMA_IDS:
                for side in SIDES:
                    row = {"r": args.r, "m": m, "S": _fmt_seq(s), "lemma": lemma,
                           "side": side, "v": None, "window": None, "detail": None}
                    try:
                        ok = verify_lemma_membership(spec, lemma, side)
                        v, window = lemma_window(lemma, m, args.r, side)
                        row.update({"status": "pass" if ok else "fail", "v": v, "window": window})
                        if not ok:
                            failures += 1
                    except HypothesisError as exc:
                        row.update({"status": "skip", "detail": str(exc)})
                    rows.append(row)
    payload = {
        "command": "verify-lemmas", "r": args.r, "m_list": m_list,
        "rows": rows, "failures": failures,
    }
    checked = sum(1 for row in rows if row["status"] != "skip")
    text = _render_table(LEMMA_COLUMNS, rows)
    text += f"\nchecked: {checked}, failures: {failures}, skipped: {len(rows) - checked}"
    return (1 if failures else 0), payload, rows, LEMMA_COLUMNS, text


def cmd_mindist(args):
    spec = _make_spec(args.r, args.m, args.S, args.unchecked)
    v_candidates = _parse_v_candidates(args.v, spec.n)
    fld = field(spec.m)
    c = from_defining_set(fld, defining_set(spec))
    if args.code == "dual":
        c = dual(c)
    elif args.code == "extended":
        c = extend(c)
    if c.k <= ENUM_BUDGET_K:
        bound = exact_min_distance(c, workers=_workers())
    else:
        bound = bounded_min_distance(c, effort=args.effort, seed=args.seed, v_candidates=v_candidates)
    payload = {
        "command": "mindist",
        "spec": _spec_json(spec),
        "code": args.code,
        "n": c.n,
        "k": c.k,
        "bound": bound.to_json(),
    }
    row = {
        "r": spec.r, "m": spec.m, "S": _fmt_seq(spec.S), "code": args.code,
        "n": c.n, "k": c.k, "method": bound.method, "lower": bound.lower,
        "upper": bound.upper, "exact": bound.exact,
        "min_odd_weight": bound.min_odd_weight, "seed": bound.seed,
        "effort": bound.effort, "witness_hex": bound.to_json()["witness_hex"],
    }
    text = (
        f"[{c.n},{c.k}] {args.code}: d in [{bound.lower}, {bound.upper}]"
        f"{' (exact)' if bound.exact else ''} via {bound.method}"
    )
    if bound.min_odd_weight is not None:
        text += f", min odd weight {bound.min_odd_weight}"
    return 0, payload, [row], MINDIST_COLUMNS, text


def _render_table(columns, rows):
    def cell(v):
        return "" if v is None else str(v)

    widths = [max(len(col), *(len(cell(row.get(col))) for row in rows)) if rows else len(col) for col in columns]
    lines = ["  ".join(col.ljust(w) for col, w in zip(columns, widths)).rstrip()]
    for row in rows:
        lines.append("  ".join(cell(row.get(col)).ljust(w) for col, w in zip(columns, widths)).rstrip())
    return "\n".join(lines)


def _emit(args, payload, rows, columns, text):
    fmt = args.format
    if fmt == "json":
        body = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    elif fmt == "csv":
        import io

        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow(["" if row.get(c) is None else row.get(c) for c in columns])
        body = buf.getvalue()
    else:
        body = text + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)


def _add_common(sub, *, fmt=True):
    if fmt:
        sub.add_argument("--format", choices=("text", "json", "csv"), default="text")
        sub.add_argument("--out", default=None, help="write output to a file instead of stdout")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="duadic",
        description="Binary duadic codes from 2-weight residue classes: "
        "construction, BCH certification, duals, extensions, distances.",
        epilog=_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("construct", help="build one code and report its structure")
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-S", required=True, help="comma-separated residues, strictly increasing")
    p.add_argument("--v", default=None, help="comma-separated BCH difference candidates")
    p.add_argument("--unchecked", action="store_true", help="allow even m or |S| != r/2")
    _add_common(p)
    p.set_defaults(handler=cmd_construct)

    p = sub.add_parser("catalog", help="enumerate all duadic S for (r, t)")
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-t", type=int, required=True)
    _add_common(p)
    p.set_defaults(handler=cmd_catalog)

    p = sub.add_parser("table", help="parameter table across a list of m")
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-S", required=True, help="residues or 'all' for the whole catalog per m")
    p.add_argument("-m", required=True, help="comma-separated list of m values")
    p.add_argument("--v", default=None)
    p.add_argument("--unchecked", action="store_true")
    _add_common(p)
    p.set_defaults(handler=cmd_table)

    p = sub.add_parser("verify-lemmas", help="run-membership checks for L3-L6 over the catalog")
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-m", required=True, help="comma-separated list of odd m values")
    _add_common(p)
    p.set_defaults(handler=cmd_verify_lemmas)

    p = sub.add_parser("mindist", help="exact (k <= 24) or certified/searched distance bounds")
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-S", required=True)
    p.add_argument("--code", choices=("primal", "dual", "extended"), default="primal")
    p.add_argument("--effort", type=int, default=0, help="information-set trials above the enumeration budget")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--v", default=None)
    p.add_argument("--unchecked", action="store_true")
    _add_common(p)
    p.set_defaults(handler=cmd_mindist)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, "handler", None):
        parser.print_help()
        return 2
    try:
        exit_code, payload, rows, columns, text = args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(args, payload, rows, columns, text)
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
