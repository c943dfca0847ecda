"""Command-line front end: ``eoptd design|verify|table|compare-rotatable``.

Rationals are printed as ``p/q`` throughout; ``--float`` switches reports to
decimals.  Every command exits 0 iff its internal checks pass.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from fractions import Fraction

from . import ball as _ball
from . import cube as _cube
from .certify import GRID_DIM_LIMIT, certificate_for, verify_design, verify_optimal
from .design import (design_to_dict, design_from_dict, information_matrix)
from .errors import InvalidArgument
from .exact import fmt, sqrt_exact, to_exact
from .spectrum import lambda_min_symmetric, matrix_lambda_min, symmetric_spectrum

# explicit point lists are written only up to this many support points
MAX_EXPANDED_POINTS = 200_000
DEFAULT_KMAX = 24

TABLE1_COLUMNS = ["k", "r1", "r2", "r3", "xi1", "xi2", "xi3", "N", "lambda_min"]
TABLE2_COLUMNS = ["k", "q", "l", "s", "xi_E0", "xi_Es", "xi_Ek", "N", "lambda_min"]
DIOPHANTINE_COLUMNS = ["k", "s", "t", "xi_Es", "xi_Et", "N", "lambda_min"]


class CliError(Exception):
    def __init__(self, message: str, code: int = 2):
        super().__init__(message)
        self.code = code


def _num(x, use_float: bool):
    return float(x) if use_float else fmt(x)


def kmax() -> int:
    raw = os.environ.get("EOPTD_KMAX")
    if raw is None:
        return DEFAULT_KMAX
    try:
        value = int(raw)
    except ValueError as exc:
        raise CliError(f"EOPTD_KMAX must be an integer, got {raw!r}") from exc
    if value < 1:
        raise CliError("EOPTD_KMAX must be positive")
    return value


def parse_k_range(text: str) -> list[int]:
    """``"5"`` or ``"1..24"`` (inclusive)."""
    try:
        if ".." in text:
            lo, hi = (int(t) for t in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError as exc:
        raise CliError(f"bad k range {text!r}; use K or K1..K2") from exc
    if lo < 1 or hi < lo:
        raise CliError(f"bad k range {text!r}")
    cap = kmax()
    if hi > cap:
        raise CliError(f"k={hi} exceeds the cap {cap} (set EOPTD_KMAX to raise it)")
    return list(range(lo, hi + 1))


def _single_k(args) -> int:
    if args.k is None:
        raise CliError("--k is required")
    ks = parse_k_range(args.k)
    if len(ks) != 1:
        raise CliError("this command takes a single k")
    return ks[0]


def _parse_rational(text: str):
    try:
        value = to_exact(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(f"cannot parse number {text!r}") from exc
    return value


def _write(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_text(columns, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    writer.writerows(rows)
    return buf.getvalue()


# ---------------------------------------------------------------------------
# design


def _table1_row(sol: _cube.TripleSolution, use_float=False) -> list[str]:
    """Depths in the slots of the ``(E_0, E_s, E_k)`` pattern; missing slots blank."""
    depths, masses = list(sol.support_depths), list(sol.support_masses)
    if len(depths) == 2:
        if depths[0] == 0:
            depths, masses = depths + [None], masses + [None]
        else:
            depths, masses = [None] + depths, [None] + masses
    lam, _ = lambda_min_symmetric(sol.moments(), sol.k)
    return ([str(sol.k)] + ["" if r is None else str(r) for r in depths]
            + ["" if w is None else _num(w, use_float) for w in masses]
            + [str(sol.support_count), _num(lam, use_float)])


def _cube_solution(k: int, triple: str | None) -> _cube.TripleSolution:
    if triple is None:
        return _cube.minimal_support_design(k)
    try:
        depths = tuple(int(t) for t in triple.split(","))
    except ValueError as exc:
        raise CliError(f"bad --triple {triple!r}; use r1,r2,r3") from exc
    feasible = _cube.enumerate_feasible_triples(k)
    listing = "; ".join(f"({','.join(map(str, s.support_depths))}) N={s.support_count}"
                        for s in feasible)
    try:
        if len(depths) == 3:
            sol = _cube.solve_triple(k, *depths)
        elif len(depths) == 2:
            sol = _cube.solve_pair(k, *depths)
        else:
            raise CliError("--triple needs two or three depths")
    except InvalidArgument as exc:
        raise CliError(f"{exc}; feasible designs for k={k}: {listing}", 3) from exc
    except ArithmeticError as exc:
        raise CliError(f"depths {depths} give a singular system; "
                       f"feasible designs for k={k}: {listing}", 3) from exc
    if sol is None:
        raise CliError(f"depths {depths} admit no nonnegative E-optimal masses for k={k}; "
                       f"feasible designs: {listing}", 3)
    return sol


def cmd_design(args) -> int:
    space = args.space_pos or args.space
    k = _single_k(args)
    use_float = args.float
    doc: dict = {"space": space, "k": k}
    if space == "cube":
        sol = _cube_solution(k, args.triple)
        mom = sol.moments()
        n_points = sol.support_count
        doc["classes"] = [{"depth": r, "mass": _num(w, use_float),
                           "size": _cube.BarycenterClass(k, r).cardinality}
                          for r, w in zip(sol.depths, sol.masses)]
        target = _cube.LAMBDA_MIN
        ok = sol.is_optimal()
        build = (lambda: _cube.expand_design(k, sol))
    else:
        if args.triple is not None:
            raise CliError("--triple applies to the cube only")
        mom = _ball.optimal_moments(k)
        masses = _ball.optimal_masses(k)
        sizes = (2 ** k, 2 * k, 1)
        n_points = 2 ** k + 2 * k + 1 if k > 1 else 3
        doc["classes"] = [{"set": name, "mass": _num(w, use_float), "size": size}
                          for name, w, size in zip(("vertices", "face_centers", "center"),
                                                   masses, sizes)]
        target = Fraction(1, k * k + 2 * k + 2)
        ok = True
        build = (lambda: _ball.optimal_ball_design(k))
    spectrum = symmetric_spectrum(mom, k)
    lam, mult = spectrum.lambda_min
    ok = ok and lam == target and mult == (k * (k + 1) // 2 if k > 1 else 1)
    doc["N"] = n_points
    doc["moments"] = {"a": _num(mom.a, use_float)}
    if mom.b is not None:
        doc["moments"]["b"] = _num(mom.b, use_float)
    doc["moments"]["c"] = _num(mom.c, use_float)
    doc["lambda_min"] = _num(lam, use_float)
    doc["multiplicity"] = mult
    doc["spectrum"] = [[_num(v, use_float), n] for v, n in spectrum.eigenvalues]
    if n_points <= MAX_EXPANDED_POINTS:
        design = build()
        mlam, mmult, exact = matrix_lambda_min(information_matrix(k, design))
        ok = ok and exact and mlam == lam and mmult == mult
        doc["design"] = design_to_dict(design)
        doc["check"] = "information matrix of the expanded design"
    else:
        doc["check"] = "closed-form spectrum of the moment matrix"
    doc["pass"] = bool(ok)

    if args.format == "json":
        text = json.dumps(doc, indent=1) + "\n"
    elif args.format == "csv":
        if space != "cube":
            raise CliError("csv output is available for cube designs only")
        text = _csv_text(TABLE1_COLUMNS, [_table1_row(sol, use_float)])
    else:
        lines = [f"space: {space}", f"k: {k}"]
        for cl in doc["classes"]:
            label = f"E{cl['depth']}" if "depth" in cl else cl["set"]
            lines.append(f"  {label}: mass {cl['mass']} on {cl['size']} point{'' if cl['size'] == 1 else 's'}")
        mo = doc["moments"]
        lines.append("moments: " + ", ".join(f"{key} = {val}" for key, val in mo.items()))
        lines.append(f"N: {n_points}")
        lines.append(f"lambda_min: {doc['lambda_min']} (multiplicity {mult})")
        lines.append(f"check: {doc['check']}: {'pass' if ok else 'FAIL'}")
        text = "\n".join(lines) + "\n"
    _write(text, args.out)
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# verify


def _load_design_file(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot read design file {path!r}: {exc}") from exc
    if isinstance(doc, dict) and "design" in doc and "points" not in doc:
        doc = doc["design"]
    try:
        return design_from_dict(doc)
    except (InvalidArgument, KeyError, TypeError, ValueError) as exc:
        raise CliError(f"invalid design file {path!r}: {exc}") from exc


def cmd_verify(args) -> int:
    if args.file:
        design = _load_design_file(args.file)
        space = args.space_pos or args.space
        if (args.space_pos or args.space_given) and space != design.space:
            raise CliError(f"design file is on the {design.space}, not the {space}")
        if args.k is not None and _single_k(args) != design.k:
            raise CliError(f"design file has k={design.k}, not {args.k}")
        cert = certificate_for(design.space, design.k)
        report = verify_design(design.k, design, cert, grid_per_axis=args.grid, tol=args.tol,
                               n_random=args.probes, seed=args.seed)
    else:
        space = args.space_pos or args.space
        k = _single_k(args)
        if k > GRID_DIM_LIMIT:
            report = verify_optimal(space, k)
        else:
            design = (_cube.expand_design(k, _cube.minimal_support_design(k)) if space == "cube"
                      else _ball.optimal_ball_design(k))
            report = verify_design(k, design, certificate_for(space, k), grid_per_axis=args.grid,
                                   tol=args.tol, n_random=args.probes, seed=args.seed)
    doc = report.to_dict()
    if args.format == "text":
        lines = [f"{key}: {val}" for key, val in doc.items()]
        text = "\n".join(lines) + "\n"
    elif args.format == "csv":
        keys = ["lambda_min", "multiplicity", "max_d", "gap", "support_equality_max_err", "pass"]
        text = _csv_text(keys, [[doc[key] for key in keys]])
    else:
        text = json.dumps(doc, indent=1) + "\n"
    _write(text, args.out)
    return 0 if report.passed else 1


# ---------------------------------------------------------------------------
# tables


def table1_rows(ks, use_float=False) -> list[list[str]]:
    return [_table1_row(_cube.minimal_support_design(k), use_float) for k in ks]


def table2_rows(ks, use_float=False) -> list[list[str]]:
    rows = []
    for k in ks:
        if k == 3:
            continue
        sol = _cube.conjecture_design(k)
        q, l, s = _cube._table2_params(k)
        lam, _ = lambda_min_symmetric(sol.moments(), k)
        rows.append([str(k), str(q), str(l), str(s)]
                    + [_num(w, use_float) for w in sol.masses]
                    + [str(sol.support_count), _num(lam, use_float)])
    return rows


def diophantine_rows(ks, use_float=False) -> list[list[str]]:
    rows = []
    for k in ks:
        for s, t in _cube.diophantine_pairs(k):
            sol = _cube.solve_pair(k, s, t)
            if sol is None:
                continue
            lam, _ = lambda_min_symmetric(sol.moments(), k)
            rows.append([str(k), str(s), str(t), _num(sol.masses[0], use_float),
                         _num(sol.masses[1], use_float), str(sol.support_count),
                         _num(lam, use_float)])
    return rows


def cmd_table(args) -> int:
    ks = parse_k_range(args.k or f"1..{kmax()}")
    if args.which == "table1":
        columns, rows = TABLE1_COLUMNS, table1_rows(ks, args.float)
    elif args.which == "table2":
        columns, rows = TABLE2_COLUMNS, table2_rows(ks, args.float)
    else:
        columns, rows = DIOPHANTINE_COLUMNS, diophantine_rows(ks, args.float)
    if args.format == "json":
        text = json.dumps([dict(zip(columns, row)) for row in rows], indent=1) + "\n"
    elif args.format == "text":
        widths = [max(len(c), *(len(r[i]) for r in rows)) if rows else len(c)
                  for i, c in enumerate(columns)]
        lines = ["  ".join(c.rjust(w) for c, w in zip(columns, widths))]
        lines += ["  ".join(v.rjust(w) for v, w in zip(row, widths)) for row in rows]
        text = "\n".join(lines) + "\n"
    else:
        text = _csv_text(columns, rows)
    _write(text, args.out)
    return 0


# ---------------------------------------------------------------------------
# rotatable comparison


def _common_denominator(x: Fraction, y: Fraction) -> tuple[str, str]:
    den = math.lcm(x.denominator, y.denominator)
    return (f"{x.numerator * den // x.denominator}/{den}",
            f"{y.numerator * den // y.denominator}/{den}")


def _rotatability_verdict(mom) -> tuple[bool, str]:
    rot = _ball.is_rotatable(mom)
    if mom.b is None:
        return True, "rotatable (k = 1)"
    if isinstance(mom.c, Fraction) and isinstance(mom.b, Fraction):
        c_txt, b3_txt = _common_denominator(mom.c, 3 * mom.b)
    else:
        c_txt, b3_txt = fmt(mom.c), fmt(3 * mom.b)
    if rot:
        return True, f"rotatable: c = {c_txt} = 3b"
    return False, f"not rotatable: c = {c_txt} ≠ 3b = {b3_txt}"


def cmd_compare_rotatable(args) -> int:
    k = _single_k(args)
    if k < 2:
        raise CliError("compare-rotatable needs k >= 2")
    if args.r2 is not None:
        r2 = _parse_rational(args.r2)
        r = sqrt_exact(r2) if isinstance(r2, Fraction) else math.sqrt(r2)
    else:
        r = _parse_rational(args.r)
        r2 = r * r
    if r2 <= 0:
        raise CliError("radius must be positive")
    use_float = args.float
    rot = _ball.rotatable_optimal(k, r)
    lam_rot, _ = lambda_min_symmetric(rot.moments, k)
    alpha = rot.alpha
    # both branches of the mass formula at the switch point r^2 = k + 2
    branch_lo, branch_hi = _ball.rotatable_alpha_branches(k, k + 2)
    opt_mom = _ball.optimal_moments(k)
    lam_opt, _ = lambda_min_symmetric(opt_mom, k)
    rot_ok, rot_txt = _rotatability_verdict(rot.moments)
    opt_rot, opt_txt = _rotatability_verdict(opt_mom)
    checks = [rot_ok, not opt_rot, branch_lo == branch_hi]
    doc = {"k": k, "r2": _num(r2, use_float), "alpha": _num(alpha, use_float),
           "lambda_rot": _num(lam_rot, use_float)}
    if r2 == 1:
        lam_rot_closed, _, ratio = _ball.rotatable_gap(k)
        checks += [lam_rot == lam_rot_closed, lam_rot < lam_opt]
        doc.update({"lambda_opt": _num(lam_opt, use_float),
                    "efficiency": _num(ratio, use_float)})
    doc.update({"rotatable_design": rot_txt, "optimal_ball_design": opt_txt,
                "alpha_branches_agree": branch_lo == branch_hi,
                "pass": all(checks)})
    if args.format == "json":
        text = json.dumps(doc, indent=1) + "\n"
    elif args.format == "csv":
        text = _csv_text(list(doc), [[str(v) for v in doc.values()]])
    else:
        text = "\n".join(f"{key}: {val}" for key, val in doc.items()) + "\n"
    _write(text, args.out)
    return 0 if all(checks) else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eoptd", description="E-optimal response-surface designs")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt_default):
        p.add_argument("--k", help="dimension, or a range K1..K2 for tables")
        p.add_argument("--format", choices=("json", "csv", "text"), default=fmt_default)
        p.add_argument("--out", help="write output to this file instead of stdout")
        p.add_argument("--float", action="store_true", help="print decimals instead of p/q")

    def space_args(p):
        p.add_argument("space_pos", nargs="?", choices=("cube", "ball"), metavar="space")
        p.add_argument("--space", choices=("cube", "ball"), default=None)

    p = sub.add_parser("design", help="construct an E-optimal design")
    space_args(p)
    p.add_argument("--triple", help="cube depths r1,r2,r3 (or s,t)")
    common(p, "text")
    p.set_defaults(func=cmd_design)

    p = sub.add_parser("verify", help="check the equivalence theorem for a design")
    p.add_argument("file", nargs="?", help="design JSON file")
    p.add_argument("--space", choices=("cube", "ball"), default=None)
    p.add_argument("--grid", type=int, default=21, help="grid points per axis (>= 3)")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--seed", type=int, default=0, help="seed for random probe points")
    p.add_argument("--probes", type=int, default=1000, help="random probe points")
    common(p, "json")
    p.set_defaults(func=cmd_verify, space_pos=None)

    p = sub.add_parser("table", help="reproduce the design tables as CSV")
    p.add_argument("which", choices=("table1", "table2", "diophantine"))
    common(p, "csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("compare-rotatable", help="rotatable versus E-optimal ball design")
    p.add_argument("--r", default="1", help="sphere radius (p/q or decimal)")
    p.add_argument("--r2", default=None, help="squared sphere radius (overrides --r)")
    common(p, "text")
    p.set_defaults(func=cmd_compare_rotatable)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command in ("design", "verify"):
        args.space_given = args.space is not None
        if args.space is None:
            args.space = "cube"
        if args.command == "design" and args.space_pos and args.space_given \
                and args.space_pos != args.space:
            parser.error("conflicting space arguments")
    if getattr(args, "grid", 3) < 3:
        parser.error("--grid must be at least 3")
    if getattr(args, "tol", 1.0) <= 0:
        parser.error("--tol must be positive")
    try:
        return args.func(args)
    except CliError as exc:
        print(f"eoptd: error: {exc}", file=sys.stderr)
        return exc.code
    except InvalidArgument as exc:
        print(f"eoptd: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
