"""Command-line front end: compute, tabulate, and self-verify.

Subcommands
-----------
hj        expand / eval / classify / grow / enum / discrepancies
tables    T1 | T2 | T3 | strata | hj | chains | topology  (text / csv / json)
verify    run the cross-path checks, optionally for one subsystem

Exit codes: 0 success, 1 domain error or failed verification (the message
names the violated precondition or the first failing cell), 2 usage errors.
No configuration files, no environment variables; everything is a flag, so
identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from math import gcd

from . import checks, hj, lattice, moduli, systems
from .errors import DomainError, InvariantError

EMPTY_TEXT_DEFAULT = "∅"


# ----------------------------------------------------------------------
# small helpers
# ----------------------------------------------------------------------

def _parse_range(text: str, what: str) -> tuple[int, int]:
    try:
        if ":" in text:
            lo, hi = text.split(":", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise DomainError(f"cannot parse {what} range {text!r} (use A or A:B)")
    if hi < lo:
        raise DomainError(f"empty {what} range {text!r}")
    return lo, hi


def _classification_text(cls: hj.ChainClassification) -> str:
    if cls.kind is hj.ChainKind.T:
        tail = "  2-Gorenstein" if cls.two_gorenstein else ""
        return f"T delta={cls.delta} m={cls.m} a={cls.a}{tail}"
    return cls.kind.value


def _chain_from_args(entries: list[int]) -> hj.Chain:
    return hj.Chain(tuple(entries))


def _emit_rows(rows: list[dict], columns: list[str], args, table_id: str) -> None:
    # None means an empty stratum in T1/strata (rendered per --print-empty-as)
    # but an undefined / non-reduced cell in T2/T3 (always rendered "x").
    if table_id in ("T2", "T3"):
        empty_as = "x"
    else:
        empty_as = getattr(args, "print_empty_as", EMPTY_TEXT_DEFAULT)
    if args.format == "json":
        print(json.dumps({"table": table_id, "rows": rows}, indent=2))
        return
    rendered = [
        [empty_as if row.get(c) is None else str(row.get(c)) for c in columns]
        for row in rows
    ]
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        writer.writerows(rendered)
        sys.stdout.write(buf.getvalue())
        return
    widths = [
        max(len(columns[k]), max((len(r[k]) for r in rendered), default=0))
        for k in range(len(columns))
    ]
    print("  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip())
    for r in rendered:
        print("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip())
    if not rows:
        print("(no admissible rows in the requested range)")


# ----------------------------------------------------------------------
# hj subcommands
# ----------------------------------------------------------------------

def cmd_hj(args) -> int:
    if args.hj_op == "expand":
        sing = hj.CyclicQuotientSingularity(args.n, args.q)
        chain = hj.hj_expand(sing)
        print(f"{chain}  {_classification_text(hj.classify_chain(chain))}")
    elif args.hj_op == "eval":
        print(hj.hj_eval(_chain_from_args(args.entries)))
    elif args.hj_op == "classify":
        if len(args.spec) == 1 and "/" in args.spec[0]:
            num, _, den = args.spec[0].partition("/")
            try:
                n, q = int(num), int(den)
            except ValueError:
                raise DomainError(f"cannot parse singularity {args.spec[0]!r}")
            cls = hj.classify_singularity(hj.CyclicQuotientSingularity(n, q))
            print(f"1/{n}(1,{q})  {_classification_text(cls)}")
        else:
            try:
                entries = [int(e) for e in args.spec]
            except ValueError:
                raise DomainError(f"cannot parse chain entries {args.spec!r}")
            chain = _chain_from_args(entries)
            print(f"{chain}  {_classification_text(hj.classify_chain(chain))}")
    elif args.hj_op == "grow":
        grown = hj.grow_chain(_chain_from_args(args.entries), args.side)
        print(grown)
    elif args.hj_op == "enum":
        for chain in hj.enumerate_t_chains(
            args.max_len, only_two_gorenstein=args.two_gorenstein,
            dedupe_reversals=args.dedupe,
        ):
            print(f"{chain}  {_classification_text(hj.classify_chain(chain))}")
    elif args.hj_op == "discrepancies":
        disc = lattice.discrepancies(_chain_from_args(args.entries))
        print(" ".join(str(a) for a in disc))
    return 0


# ----------------------------------------------------------------------
# tables
# ----------------------------------------------------------------------

def _t1_rows(n_lo, n_hi, d_sel) -> list[dict]:
    rows = []
    for n in range(n_lo, n_hi + 1):
        for d in moduli.admissible_d_range(moduli.FIRST, n):
            if d_sel is not None and not (d_sel[0] <= d <= d_sel[1]):
                continue
            for rec in moduli.d_strata(n, d):
                empty = moduli.is_empty(rec.dim)
                rows.append({
                    "n": n, "d": d, "which": rec.tag, "regime": rec.regime,
                    "value": None if empty else rec.dim,
                    "formula": None if empty else rec.formula,
                    "component": rec.is_component, "nu": rec.nu,
                    "anchor": f"T1[{rec.regime}]",
                })
    return rows


def _t2_rows(n_lo, n_hi, d_sel) -> list[dict]:
    rows = []
    for n in range(n_lo, n_hi + 1):
        for d in systems.admissible_d_range(n):
            if d_sel is not None and not (d_sel[0] <= d <= d_sel[1]):
                continue
            regime = systems.regime_of(n, d)
            dims = {}
            for i in (0, 1):
                if i == 1 and d == 0:
                    dims[i] = None
                    continue
                analysis = systems.analyze_system(systems.BlowupConfig(d, i, 0), n)
                dims[i] = analysis.dim if analysis.reduced else None
            rows.append({
                "n": n, "d": d, "regime": regime,
                "dim_L00": dims[0], "dim_L10": dims[1],
                "formula_L00": systems.table2_formula(regime, 0),
                "formula_L10": systems.table2_formula(regime, 1),
                "anchor": f"T2[{regime}]",
            })
    return rows


def _t3_rows(n_lo, n_hi, d_sel) -> list[dict]:
    rows = []
    for n in range(n_lo, n_hi + 1):
        for d in systems.admissible_d_range(n):
            if d_sel is not None and not (d_sel[0] <= d <= d_sel[1]):
                continue
            regime = systems.regime_of(n, d)
            row = {"n": n, "d": d, "regime": regime}
            for i in (0, 1):
                for j in (0, 1):
                    key = f"Z{i}{j}"
                    if i == 1 and d == 0:
                        row[key] = None
                        continue
                    cfg = systems.BlowupConfig(d, i, j)
                    row[key] = (
                        systems.TABLE3[regime][(i, j)]
                        if systems.is_reduced(cfg, regime) else None
                    )
            row["anchor"] = f"T3[{regime}]"
            rows.append(row)
    return rows


def _strata_rows(n_lo, n_hi, d_sel) -> list[dict]:
    rows = []
    for n in range(max(n_lo, 7), n_hi + 1):
        for d in moduli.admissible_d_range(moduli.SECOND, n):
            if d_sel is not None and not (d_sel[0] <= d <= d_sel[1]):
                continue
            rec = moduli.stratum_dim_second(n, d)
            rows.append({
                "n": n, "d": d, "eta": rec.eta, "value": rec.dim,
                "formula": rec.formula, "dense": rec.dense,
                "component": rec.is_component, "nu": rec.nu,
                "anchor": f"strata[{rec.regime}]",
            })
    return rows


def _hj_rows(n_lo, n_hi, du_val_as_t: bool) -> list[dict]:
    rows = []
    for n in range(max(n_lo, 2), n_hi + 1):
        for q in range(1, n):
            if gcd(n, q) != 1:
                continue
            sing = hj.CyclicQuotientSingularity(n, q)
            cls = hj.classify_singularity(sing)
            if cls.kind is hj.ChainKind.NOT_T:
                continue
            chain = hj.hj_expand(sing)
            if cls.kind is hj.ChainKind.DU_VAL:
                # the m = 1 point of the T-form: delta = n, a = 1, gain 0
                kind = "T" if du_val_as_t else "DuVal"
                delta, m, a = (n, 1, 1) if du_val_as_t else (None, None, None)
                gain = 0 if du_val_as_t else None
                two_g = False
            else:
                kind = "T"
                delta, m, a = cls.delta, cls.m, cls.a
                gain = hj.k2_contribution(chain)
                two_g = cls.two_gorenstein
            rows.append({
                "n": n, "q": q, "chain": str(chain), "kind": kind,
                "delta": delta, "m": m, "a": a, "two_gorenstein": two_g,
                "k2_gain": gain, "anchor": "hj[T-forms]",
            })
    return rows


def _chains_rows(max_len: int, two_g: bool, dedupe: bool) -> list[dict]:
    rows = []
    for chain in hj.enumerate_t_chains(max_len, two_g, dedupe):
        cls = hj.classify_chain(chain)
        value = hj.hj_eval(chain)
        rows.append({
            "length": len(chain), "chain": str(chain), "delta": cls.delta,
            "m": cls.m, "a": cls.a, "two_gorenstein": cls.two_gorenstein,
            "k2_gain": hj.k2_contribution(chain),
            "n": value.numerator, "q": value.denominator,
            "anchor": "chains[growth-closure]",
        })
    return rows


def _topology_rows(n_lo, n_hi, kinds) -> list[dict]:
    rows = []
    for n in range(max(n_lo, 3), n_hi + 1):
        for kind in kinds:
            for tag in moduli.component_tags(kind, n):
                form = moduli.intersection_form(kind, n, tag)
                rows.append({
                    "kind": kind, "n": n, "tag": tag, "rank": form.rank,
                    "signature": form.signature, "parity": form.parity,
                    "even_class": form.even_class, "form": form.standard_form,
                    "anchor": "topology[rank-signature-parity]",
                })
    return rows


TABLE_COLUMNS = {
    "T1": ["n", "d", "which", "regime", "value", "formula", "component", "nu", "anchor"],
    "T2": ["n", "d", "regime", "dim_L00", "dim_L10", "formula_L00", "formula_L10", "anchor"],
    "T3": ["n", "d", "regime", "Z00", "Z01", "Z10", "Z11", "anchor"],
    "strata": ["n", "d", "eta", "value", "formula", "dense", "component", "nu", "anchor"],
    "hj": ["n", "q", "chain", "kind", "delta", "m", "a", "two_gorenstein", "k2_gain", "anchor"],
    "chains": ["length", "chain", "delta", "m", "a", "two_gorenstein", "k2_gain", "n", "q", "anchor"],
    "topology": ["kind", "n", "tag", "rank", "signature", "parity", "even_class", "form", "anchor"],
}


def cmd_tables(args) -> int:
    n_lo, n_hi = _parse_range(args.n, "n")
    d_sel = None if args.d == "auto" else _parse_range(args.d, "d")
    if args.table == "T1":
        rows = _t1_rows(n_lo, n_hi, d_sel)
    elif args.table == "T2":
        rows = _t2_rows(n_lo, n_hi, d_sel)
    elif args.table == "T3":
        rows = _t3_rows(n_lo, n_hi, d_sel)
    elif args.table == "strata":
        rows = _strata_rows(n_lo, n_hi, d_sel)
    elif args.table == "hj":
        rows = _hj_rows(n_lo, n_hi, args.du_val_counts_as_t)
    elif args.table == "chains":
        rows = _chains_rows(args.max_len, args.two_gorenstein, args.dedupe_chains)
    else:
        kinds = [moduli.FIRST, moduli.SECOND] if args.kind == "both" else [args.kind]
        rows = _topology_rows(n_lo, n_hi, kinds)
    columns = TABLE_COLUMNS[args.table]
    if args.eval:
        columns = [c for c in columns if not c.startswith("formula")]
        rows = [{k: v for k, v in row.items() if not k.startswith("formula")}
                for row in rows]
    _emit_rows(rows, columns, args, args.table)
    return 0


# ----------------------------------------------------------------------
# verify
# ----------------------------------------------------------------------

def cmd_verify(args) -> int:
    try:
        results = checks.run_checks(
            scope=args.scope, n_max=args.n_max,
            chain_max_len=args.chain_max_len,
        )
    except ValueError as exc:
        raise DomainError(str(exc))
    ran = [r for r in results if r.status == "run"]
    all_passed = all(r.passed for r in ran)
    if args.format == "json":
        print(json.dumps({
            "scope": args.scope, "n_max": args.n_max, "passed": all_passed,
            "checks": [
                {
                    "name": r.name, "scope": r.scope, "status": r.status,
                    "passed": r.passed if r.status == "run" else None,
                    "cases": r.cases, "first_failure": r.first_failure,
                    "note": r.note,
                }
                for r in results
            ],
        }, indent=2))
    else:
        for r in results:
            if r.status == "skipped":
                print(f"{r.name:24s} SKIPPED (scope {args.scope})")
                continue
            verdict = "PASS" if r.passed else "FAIL"
            print(f"{r.name:24s} {verdict}  cases={r.cases}  {r.note}")
            if not r.passed:
                print(f"    first failing cell: {r.first_failure}")
        print(f"verification {'PASSED' if all_passed else 'FAILED'} "
              f"({len(ran)} checks run, {len(results) - len(ran)} skipped)")
    return 0 if all_passed else 1


# ----------------------------------------------------------------------
# parser
# ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tstrata",
        description="Exact T-chain calculus and moduli-stratum tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_hj = sub.add_parser("hj", help="continued-fraction and T-chain calculus")
    hj_sub = p_hj.add_subparsers(dest="hj_op", required=True)
    p = hj_sub.add_parser("expand", help="chain of the singularity 1/n (1, q)")
    p.add_argument("n", type=int)
    p.add_argument("q", type=int)
    p = hj_sub.add_parser("eval", help="exact value of a chain")
    p.add_argument("entries", type=int, nargs="+")
    p = hj_sub.add_parser("classify", help="classify a chain or n/q")
    p.add_argument("spec", nargs="+", help="chain entries, or a single n/q")
    p = hj_sub.add_parser("grow", help="apply one growth move")
    p.add_argument("--side", choices=["left", "right"], required=True)
    p.add_argument("entries", type=int, nargs="+")
    p = hj_sub.add_parser("enum", help="enumerate T-chains")
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--two-gorenstein", action="store_true")
    p.add_argument("--dedupe", action="store_true",
                   help="keep one of each chain/reversal pair")
    p = hj_sub.add_parser("discrepancies", help="resolution discrepancies of a chain")
    p.add_argument("entries", type=int, nargs="+")
    p_hj.set_defaults(func=cmd_hj)

    p_tab = sub.add_parser("tables", help="emit one of the tables")
    p_tab.add_argument("table", choices=sorted(TABLE_COLUMNS))
    p_tab.add_argument("--n", default="14:20", help="n or n-range A:B")
    p_tab.add_argument("--d", default="auto", help="d, d-range A:B, or 'auto'")
    p_tab.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p_tab.add_argument("--max-len", type=int, default=8,
                       help="chain length bound (chains table)")
    p_tab.add_argument("--two-gorenstein", action="store_true",
                       help="restrict the chains table to the seeds")
    p_tab.add_argument("--kind", choices=["first", "second", "both"],
                       default="both", help="family (topology table)")
    p_tab.add_argument("--dedupe-chains", action="store_true")
    p_tab.add_argument("--du-val-counts-as-t", action="store_true",
                       help="report Du Val rows as the m = 1 T-form")
    p_tab.add_argument("--print-empty-as", choices=[EMPTY_TEXT_DEFAULT, "-1"],
                       default=EMPTY_TEXT_DEFAULT,
                       help="text/csv rendering of empty cells")
    p_tab.add_argument("--eval", action="store_true",
                       help="numeric values only, no closed-form columns")
    p_tab.set_defaults(func=cmd_tables)

    p_ver = sub.add_parser("verify", help="run cross-path verification checks")
    p_ver.add_argument("scope", nargs="?", default="all",
                       help="all, or a subsystem (hj, lattice, systems, moduli, tangent)")
    p_ver.add_argument("--n-max", type=int, default=200)
    p_ver.add_argument("--chain-max-len", type=int, default=8)
    p_ver.add_argument("--format", choices=["text", "json"], default="text")
    p_ver.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InvariantError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
