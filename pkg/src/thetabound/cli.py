"""Command-line entry point.

Exit codes: 0 success, 1 a scan found a negative coefficient, 2 usage error.

JSON reports look like {"command", "params": {r, s, k, case}, "result", "version"};
integers wider than 53 bits and all exact rationals are written as strings
("p/q" for rationals).  CSV reports have the fixed columns
command,r,s,k,case,field,value with one row per result field, nested
fields joined with dots.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Any, Dict, List, Optional

import mpmath

from . import __version__
from . import asymptotics, bounds, merca
from .errors import ThetaBoundError, UsageError

SERIES_CHOICES = {
    "full": merca.FULL,
    "four": merca.FOUR,
    "three-plus": merca.THREE_PLUS,
    "three-minus": merca.THREE_MINUS,
    "h": merca.H,
    "general": "GENERAL",
}
COMMANDS = ("scan", "bound", "asymptotic", "reproduce", "selftest")
TARGETS = ("example-6.2", "example-5.1", "table-1", "table-2", "table-3", "corollary-5.3")

# printed table cells: (r, s, k) -> value
TABLE_1 = {
    (4, 1, 1): 8382, (4, 1, 100): 5682, (4, 1, 10**4): 98839,
    (10, 3, 1): 1.67e6, (10, 3, 100): 2e5, (20, 3, 1): 5.33e7, (20, 3, 100): 3.5e6,
}
TABLE_2 = {
    (9, 2, 1): 2.22e7, (9, 2, 10): 7769, (9, 2, 100): 0,
    (5, 2, 1): 175910, (5, 2, 10): 12, (11, 4, 1): 4.90e7, (11, 4, 10): 60430,
    (21, 4, 10): 3.67e6,
}
TABLE_3 = {
    (2, 1, 1): 216, (3, 1, 1): 11835, (10, 3, 1): 5.79e7, (10, 3, 10): 48525,
    (20, 3, 10): 4.86e6,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class CommandPlan:
    command: str
    params: Dict[str, Any] = field(default_factory=dict)
    output_format: str = "json"
    scan_budget: int = 200_000
    threads: int = 1


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="thetabound", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("target", nargs="?", help="reproduce target: " + ", ".join(TARGETS))
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--R", type=int)
    p.add_argument("--S", type=int)
    p.add_argument("--series", choices=list(SERIES_CHOICES), default="full")
    p.add_argument("--ell", type=int)
    p.add_argument("--terms", type=int)
    p.add_argument("--scan-budget", type=int, default=200_000)
    p.add_argument("--policy", choices=["formula", "example"], default="formula")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--digits", type=int, default=30)
    p.add_argument("--cell", help="r,s,k of one table cell")
    return p


def parse(args: List[str]) -> CommandPlan:
    ns = _build_parser().parse_args(args)
    if ns.threads < 1:
        raise UsageError("--threads must be >= 1")
    if ns.scan_budget < 0:
        raise UsageError("--scan-budget must be >= 0")
    if ns.digits < 15:
        raise UsageError("--digits must be >= 15")
    if ns.terms is not None and ns.terms < 0:
        raise UsageError("--terms must be >= 0")
    params: Dict[str, Any] = {
        "series": SERIES_CHOICES[ns.series],
        "terms": ns.terms,
        "policy": bounds.EXAMPLE if ns.policy == "example" else bounds.FORMULA,
        "digits": ns.digits,
        "k": ns.k,
    }
    if ns.k < 1:
        raise UsageError("--k must be >= 1")
    if ns.command == "reproduce":
        if ns.target not in TARGETS:
            raise UsageError(f"reproduce needs a target from {', '.join(TARGETS)}")
        params["target"] = ns.target
        if ns.cell:
            try:
                cell = tuple(int(x) for x in ns.cell.split(","))
            except ValueError:
                raise UsageError("--cell must look like r,s,k") from None
            if len(cell) != 3:
                raise UsageError("--cell must look like r,s,k")
            params["cell"] = cell
    elif ns.target is not None:
        raise UsageError(f"unexpected argument {ns.target!r}")
    if ns.command in ("scan", "bound", "asymptotic"):
        raw = ns.R is not None or ns.S is not None
        if raw:
            if ns.R is None or ns.S is None:
                raise UsageError("--R and --S must be given together")
            R, S = ns.R, ns.S
        else:
            if ns.r is None or ns.s is None:
                raise UsageError("--r and --s are required")
            R, S = ns.r, ns.s
        if S < 1 or R <= S:
            raise UsageError("--s must satisfy 1 <= s < r")
        if not raw and gcd(R, S) != 1:
            raise UsageError(f"--r {R} and --s {S} are not coprime (use --R/--S for raw values)")
        params.update(R=R, S=S, raw=raw)
        if ns.command == "scan":
            if params["series"] == "GENERAL":
                if ns.ell is None:
                    raise UsageError("--ell is required for --series general")
                if not (ns.k > ns.ell >= 1 and ns.k >= 4):
                    raise UsageError("--series general needs k > ell >= 1 and k >= 4")
                params["ell"] = ns.ell
            if params["terms"] is None:
                params["terms"] = 1000
        if ns.command == "asymptotic":
            if raw or 2 * S >= R:
                raise UsageError("asymptotic needs coprime --r, --s with s < r/2")
            if params["terms"] is None or params["terms"] < 1:
                raise UsageError("asymptotic needs --terms n >= 1")
        if ns.command in ("scan", "bound") and params.get("series") != "GENERAL":
            try:
                mp = merca.normalize_params(R, S, ns.k) if raw else merca.MercaParams(
                    R, S if 2 * S <= R else R - S, ns.k
                )
            except ThetaBoundError as exc:
                raise UsageError(str(exc)) from None
            params["merca"] = mp
    return CommandPlan(ns.command, params, ns.format, ns.scan_budget, ns.threads)


def _jsonable(x):
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, int):
        return str(x) if abs(x) >= 2**53 else x
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, mpmath.mpf):
        return mpmath.nstr(x, 20)
    if isinstance(x, float):
        return x
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _scan_dict(rep: merca.ScanReport) -> Dict[str, Any]:
    return {
        "lo": rep.lo,
        "hi": rep.hi,
        "min": rep.min_value,
        "min_index": rep.min_index,
        "first_negative": rep.first_negative,
        "negative_count": rep.negative_count,
        "zero_count": rep.zero_count,
    }


def _bound_dict(rep: bounds.BoundReport) -> Dict[str, Any]:
    return {
        "case": rep.case,
        "poly_roots": [
            {
                "id": ri.ident,
                "bracket": None if ri.bracket is None else [[b.numerator, b.denominator] for b in ri.bracket],
                "p_floor": ri.p_floor,
            }
            for ri in rep.poly_roots
        ],
        "z0": [rep.z0.numerator, rep.z0.denominator],
        "p_floor": rep.p_floor,
        "L": rep.L,
        "F": rep.F,
        "N": rep.N,
        "corollary_k": rep.corollary_k,
        "refined_k": rep.refined_k,
        "scan": None if rep.scan_verdict is None else _scan_dict(rep.scan_verdict),
        "certified": rep.certified,
        "notes": rep.notes,
    }


def _params_dict(mp: Optional[merca.MercaParams]) -> Dict[str, Any]:
    if mp is None:
        return {}
    return {"r": mp.r, "s": mp.s, "k": mp.k, "case": mp.case}


def _rel(value, target):
    if target == 0:
        return None
    return float(Fraction(value) / Fraction(target) - 1)


def _reproduce(target: str, cell, plan: CommandPlan) -> Dict[str, Any]:
    if target == "example-6.2":
        mp = merca.MercaParams(12, 1, 1)
        rep = merca.scan(merca.build_series(mp, 5000, merca.FOUR))
        ex = bounds.stage2_constants(mp, bounds.EXAMPLE)
        fo = bounds.stage2_constants(mp, bounds.FORMULA)
        return {
            "scan": _scan_dict(rep),
            "first_negative": rep.first_negative,
            "b_at_first_negative": rep.min_value,
            "example_policy": {"p": ex.p, "F1": ex.F, "N1": ex.N},
            "formula_policy": {"p": fo.p, "F1": fo.F, "N1": fo.N, "flag": "formula_policy_differs_from_example"},
        }
    if target == "example-5.1":
        rows = {}
        for ident in bounds.family_ids("D"):
            row = {}
            for k in (1, 10):
                _, printed = bounds.printed_example_polynomial(ident, k)
                ours = bounds.appendix_polynomial("D", ident, 9, 2, k)
                row[f"k={k}"] = {"printed": list(printed.coeffs), "transcribed": list(ours.coeffs),
                                 "transcribed_scale": ours.scale}
            rows[ident] = row
        return {
            "corollary_k": bounds.corollary_k_threshold((9, 2)),
            "refined_k": bounds.refined_k_threshold(9, 2),
            "printed_refined_k": 19,
            "polynomials": rows,
        }
    if target == "corollary-5.3":
        mp = merca.MercaParams(2, 1, 1)
        rep = merca.scan(merca.build_series(mp, 10000, merca.THREE_MINUS))
        L, _ = bounds.compute_L(mp)
        return {"scan": _scan_dict(rep), "L": L, "printed_L": 216}
    table = {"table-1": TABLE_1, "table-2": TABLE_2, "table-3": TABLE_3}[target]
    cells = [cell] if cell else sorted(table)
    out = []
    for r, s, k in cells:
        mp = merca.MercaParams(r, s, k)
        fam = "E" if target == "table-3" else None
        if target == "table-1":
            fam = None
        L, _ = bounds.compute_L(mp, family=fam)
        printed = table.get((r, s, k))
        out.append({
            "r": r, "s": s, "k": k, "L": L, "printed": printed,
            "relative_delta": None if printed is None else _rel(L, printed),
        })
    return {"cells": out}


def execute(plan: CommandPlan, out=None) -> int:
    out = out or sys.stdout
    p = plan.params
    mp = p.get("merca")
    code = 0
    if plan.command == "scan":
        n = p["terms"]
        if p["series"] == "GENERAL":
            ser = merca.generalized_series(p["R"], p["S"], p["k"], p["ell"], n)
            rep = merca.scan(ser)
            result = _scan_dict(rep)
            result["offset"] = merca.generalized_offset(p["R"], p["S"], p["k"], p["ell"])
            result["series"] = "general"
        else:
            ser = merca.build_series(mp, n, p["series"])
            rep = merca.scan(ser)
            result = _scan_dict(rep)
            result["series"] = p["series"]
        if rep.negative_count:
            code = 1
    elif plan.command == "bound":
        rep = bounds.run_algorithm(mp, plan.scan_budget, p["policy"])
        result = _bound_dict(rep)
        if rep.scan_verdict is not None and rep.scan_verdict.negative_count:
            code = 1
    elif plan.command == "asymptotic":
        a, M, n = p["S"], p["R"], p["terms"]
        est = asymptotics.compare_exact_vs_main(a, M, n, p["digits"])
        cor = asymptotics.g_main_term(a, M, n, p["digits"], asymptotics.CORRECTED)
        result = {
            "n": n,
            "exact": est.exact,
            "main_term": est.main_term,
            "ratio": est.ratio,
            "main_term_corrected": cor,
            "ratio_corrected": mpmath.mpf(est.exact) / cor,
            "lower_env": est.lower_env,
            "upper_env": est.upper_env,
        }
        mp = None
    elif plan.command == "reproduce":
        result = _reproduce(p["target"], p.get("cell"), plan)
        if p["target"] == "example-6.2":
            mp = merca.MercaParams(12, 1, 1)
    else:
        result = selftest()
        if not all(result.values()):
            code = 1
    report = {"command": plan.command, "params": _params_dict(mp), "result": result, "version": __version__}
    out.write(render(report, plan.output_format))
    return code


def _flatten(prefix, x, rows):
    if isinstance(x, dict):
        for k, v in x.items():
            _flatten(f"{prefix}.{k}" if prefix else str(k), v, rows)
    elif isinstance(x, list) and any(isinstance(v, (dict, list)) for v in x):
        for i, v in enumerate(x):
            _flatten(f"{prefix}.{i}", v, rows)
    else:
        rows.append((prefix, x))


def render(report: Dict[str, Any], fmt: str) -> str:
    report = _jsonable(report)
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["command", "r", "s", "k", "case", "field", "value"])
    pr = report["params"]
    rows: list = []
    _flatten("", report["result"], rows)
    for name, value in rows:
        if isinstance(value, list):
            value = json.dumps(value)
        w.writerow([report["command"], pr.get("r", ""), pr.get("s", ""), pr.get("k", ""),
                    pr.get("case", ""), name, "" if value is None else value])
    return buf.getvalue()


def selftest() -> Dict[str, bool]:
    from .series import PochSpec, inverse_truncated, pochhammer

    inv = inverse_truncated(pochhammer([PochSpec(1, 1)], 100))
    four = merca.scan(merca.build_series(merca.MercaParams(12, 1, 1), 5000, merca.FOUR))
    minus = merca.scan(merca.build_series(merca.MercaParams(2, 1, 1), 2000, merca.THREE_MINUS))
    L, _ = bounds.compute_L(merca.MercaParams(4, 1, 1))
    return {
        "partition_numbers": inv[10] == 42 and inv[100] == 190569292,
        "example_negative_at_49": four.first_negative == 49 and four.negative_count == 1,
        "three_minus_2_1_clean": minus.clean,
        "closed_form_L_4_1_1": L == 8382,
        "corollary_k_9_2": bounds.corollary_k_threshold((9, 2)) == 130,
    }


def main(argv: Optional[List[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        plan = parse(argv)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return 2
    return execute(plan)


if __name__ == "__main__":
    sys.exit(main())
