"""Command-line entry point.

Every command prints one document (JSON by default, CSV on request).
Exact rationals are written as ``{"num": "..", "den": ".."}`` in JSON and
as ``num/den`` text in CSV.  Exit status: 0 when the result is definitive,
2 when it is inconclusive, 1 on errors or failed reproductions.

Settings are taken from flags first, then ``LNEWTON_<NAME>`` environment
variables (``LNEWTON_P``, ``LNEWTON_BUDGET``, ...), then defaults.
"""

import argparse
import csv
import io
import json
import os
import sys
import time
from fractions import Fraction

from . import __version__, congruence, gauss, oracle, reproduce, slopes, tables
from .errors import InvalidArgument, LNewtonError
from .ffield import degeneracy_witness_search, is_nondegenerate_1var, is_prime
from .poly import parse_poly
from .polygon import NewtonPolygon

SCHEMA_VERSION = "1"

EXIT_OK, EXIT_ERROR, EXIT_INCONCLUSIVE = 0, 1, 2


# -- documents ----------------------------------------------------------------------

def encode(obj):
    """Replace Fractions by ``{"num", "den"}`` string pairs, recursively."""
    if isinstance(obj, Fraction):
        return {"num": str(obj.numerator), "den": str(obj.denominator)}
    if isinstance(obj, dict):
        return {k: encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode(v) for v in obj]
    return obj


def decode(obj):
    if isinstance(obj, dict):
        if set(obj) == {"num", "den"}:
            return Fraction(int(obj["num"]), int(obj["den"]))
        return {k: decode(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [decode(v) for v in obj]
    return obj


def dumps(doc):
    return json.dumps(encode(doc), indent=2, sort_keys=True) + "\n"


def loads(text):
    return decode(json.loads(text))


def _rat(x):
    return x if isinstance(x, Fraction) else Fraction(x)


def polygon_section(poly):
    return {
        "vertices": [[Fraction(x), _rat(y)] for x, y in poly.vertices],
        "slopes": [{"slope": s, "multiplicity": n} for s, n in poly.slope_counts()],
    }


def _csv_value(v):
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, (list, tuple)):
        return " ".join(_csv_value(x) for x in v)
    return "" if v is None else str(v)


def to_csv(doc):
    """Flat ``section,key,value`` rows; slopes and coefficients get one row each."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["section", "key", "value"])
    for k in sorted(doc):
        v = doc[k]
        if k == "polygon" and v:
            for x, y in v["vertices"]:
                w.writerow(["vertex", _csv_value(x), _csv_value(y)])
            for s in v["slopes"]:
                w.writerow(["slope", _csv_value(s["slope"]), s["multiplicity"]])
        elif isinstance(v, list) and v and isinstance(v[0], dict):
            for i, row in enumerate(v):
                for kk in sorted(row):
                    w.writerow([f"{k}[{i}]", kk, _csv_value(row[kk])])
        elif isinstance(v, dict):
            for kk in sorted(v):
                w.writerow([k, kk, _csv_value(v[kk])])
        else:
            w.writerow(["meta", k, _csv_value(v)])
    return buf.getvalue()


# -- configuration ------------------------------------------------------------------

def _env(name, cast, default=None):
    raw = os.environ.get(f"LNEWTON_{name.upper()}")
    if raw is None or raw == "":
        return default
    try:
        return cast(raw)
    except ValueError:
        raise InvalidArgument(f"bad value {raw!r} for LNEWTON_{name.upper()}")


def resolve(args):
    """Fill unset flags from the environment, then from defaults."""
    defaults = {"p": None, "a": 1, "precision": None, "budget": oracle.DEFAULT_BUDGET,
                "threads": None, "format": "json"}
    casts = {"p": int, "a": int, "precision": int, "budget": int, "threads": int, "format": str}
    for name, default in defaults.items():
        if getattr(args, name, None) is None:
            setattr(args, name, _env(name, casts[name], default))
    if args.threads:
        os.environ["LNEWTON_THREADS"] = str(args.threads)
    return args


def _need_p(args):
    if args.p is None:
        raise InvalidArgument("a prime is required (--p or LNEWTON_P)")
    if not is_prime(args.p):
        raise InvalidArgument(f"{args.p} is not prime")
    return args.p


def _poly(args, warnings):
    p = _need_p(args)
    return parse_poly(args.poly, p, args.a, warnings)


def _base(args, f, method, warnings):
    return {
        "schema_version": SCHEMA_VERSION,
        "command": args.command,
        "f": f.text() if f is not None else None,
        "p": args.p,
        "a": args.a,
        "method": method,
        "warnings": list(dict.fromkeys(warnings)),
    }


# -- commands -------------------------------------------------------------------------

def _oracle_doc(args, f):
    if f.is_polynomial_1var:
        series = oracle.l_function(f, budget=args.budget)
        poly = oracle.series_polygon(series, f.a, f.degree - 1)
        which = "L"
    else:
        series = oracle.lfunction_star(f, budget=args.budget)
        poly = oracle.series_polygon(series, f.a, f.normalized_volume())
        which = "L*"
    vals = series.ord_p()
    coeffs = [{"s": i, "ord_p": (None if not isinstance(v, Fraction) else v)}
              for i, v in enumerate(vals)]
    return poly, which, coeffs


def _nondegeneracy(f):
    """What is known about nondegeneracy; the n >= 2 scan is evidence only."""
    if f.is_polynomial_1var:
        return {"method": "degree criterion", "certified": True,
                "nondegenerate": is_nondegenerate_1var(f, f.p)}
    try:
        hit = degeneracy_witness_search(f)
    except LNewtonError as exc:
        return {"method": "witness search", "certified": False, "nondegenerate": None,
                "note": exc.code}
    if hit is None:
        return {"method": "witness search", "certified": False, "nondegenerate": None}
    face, e, point = hit
    return {"method": "witness search", "certified": True, "nondegenerate": False,
            "witness": {"face": [list(v) for v in face], "e": e, "point": list(point)}}


def cmd_oracle(args, warnings):
    f = _poly(args, warnings)
    poly, which, coeffs = _oracle_doc(args, f)
    doc = _base(args, f, "oracle", warnings)
    doc.update(status="proved", series=which, polygon=polygon_section(poly), coefficients=coeffs,
               nondegeneracy=_nondegeneracy(f))
    return doc, EXIT_OK


def _report_row(r):
    return {"s": r.s, "R": r.R, "lambda": r.lambda_s, "status": r.status,
            "residue": r.residue, "lower_bound": r.lower_bound}


def _slopes_path(f):
    """``(polygon or None, reports)`` from the factorial-sum method."""
    d = f.degree
    if 3 <= d <= 6:
        poly = slopes.full_np_small_d(f, oracle_fallback=False)
        ok = poly.source == "slopes"
        return (NewtonPolygon(poly.vertices) if ok else None), list(poly.reports)
    g, _ = slopes.normalize_shift(f)
    reps = []
    s = 1
    while (s - 2) * (s - 1) < 2 * d and s <= -(-(d + 1) // 2):
        reps.append(slopes.lambda_s(g, s))
        s += 1
    return None, reps


def cmd_slopes(args, warnings):
    f = _poly(args, warnings)
    poly, reps = _slopes_path(f)
    doc = _base(args, f, "slopes", warnings)
    doc["certificates"] = [_report_row(r) for r in reps]
    definitive = poly is not None or (reps and all(r.status == "proved" for r in reps))
    doc["status"] = "proved" if definitive else "inconclusive"
    doc["polygon"] = polygon_section(poly) if poly is not None else None
    return doc, EXIT_OK if definitive else EXIT_INCONCLUSIVE


def _table_rows(res):
    out = []
    for t in res.tables[:20]:
        out.append({"blocks": [[list(row) for row in b.rows] for b in t.blocks],
                    "weight": t.weight})
    return out


def cmd_tables(args, warnings):
    f = _poly(args, warnings)
    smax = args.s_max or min(f.normalized_volume(), 4)
    rows = []
    definitive = True
    for s in range(1, smax + 1):
        res = tables.min_weight_ord(f, s)
        definitive &= res.status == "proved"
        rows.append({"s": s, "status": res.status, "ord_p": res.ord_p, "ord_q": res.ord_q,
                     "weight": res.weight, "min_weight": res.min_weight,
                     "unit_sum": res.unit_sum, "cancelled_weights": res.cancelled,
                     "lower_bound": res.lower_bound, "tables": _table_rows(res)})
    doc = _base(args, f, "tables", warnings)
    doc.update(status="proved" if definitive else "inconclusive", coefficients=rows)
    return doc, EXIT_OK if definitive else EXIT_INCONCLUSIVE


def cmd_auto(args, warnings):
    f = _poly(args, warnings)
    found = {}
    notes = []
    if f.is_polynomial_1var and f.a == 1 and 3 <= f.degree <= 6:
        try:
            poly, reps = _slopes_path(f)
            if poly is not None:
                found["slopes"] = poly
            else:
                notes.append("slopes path inconclusive")
        except LNewtonError as exc:
            notes.append(f"slopes path skipped: {exc.code}")
    try:
        if f.n > 2:
            raise LNewtonError("too many variables")
        poly, which, _ = _oracle_doc(args, f)
        found["oracle"] = poly
    except LNewtonError as exc:
        notes.append(f"oracle skipped: {exc.code}")
    doc = _base(args, f, "auto", warnings)
    doc["paths"] = sorted(found)
    doc["notes"] = notes
    if not found:
        doc.update(status="inconclusive", polygon=None)
        return doc, EXIT_INCONCLUSIVE
    polys = list(found.values())
    if any(pp.vertices != polys[0].vertices for pp in polys[1:]):
        doc.update(status="disagreement", polygon=None,
                   candidates={k: polygon_section(v) for k, v in found.items()})
        return doc, EXIT_ERROR
    doc.update(status="proved", polygon=polygon_section(polys[0]),
               agreement=len(found) > 1)
    return doc, EXIT_OK


def cmd_gauss_check(args, warnings):
    q = args.q
    p, a = None, None
    for cand in range(2, q + 1):
        if q % cand == 0:
            p = cand
            break
    if p is None:
        raise InvalidArgument("q must be a prime power")
    a, t = 0, q
    while t % p == 0:
        t //= p
        a += 1
    if t != 1:
        raise InvalidArgument("q must be a prime power")
    args.p, args.a = p, a
    doc = _base(args, None, "gauss", warnings)
    if args.kind == "gk":
        rows = gauss.gross_koblitz_check(p, a, M=args.precision)
        doc["rows"] = [{k: r[k] for k in ("k", "valuation", "sigma", "unit", "gamma_product", "ok")}
                       for r in rows]
    elif args.kind == "hd":
        doc["rows"] = [gauss.hasse_davenport_check(p, a, args.d, args.k, M=args.precision)]
    else:
        doc["rows"] = [gauss.interpolation_check(p, a, M=args.precision)]
    doc["status"] = "proved"
    return doc, EXIT_OK


def cmd_congruence(args, warnings):
    f = _poly(args, warnings)
    V = f.exponent_columns()
    q = f.q
    doc = _base(args, f, "congruence", warnings)
    rows = []
    for d in range(1, args.level + 1):
        cc = congruence.count_check(V, q, d, args.budget)
        reps = congruence.level_orbit_reps(V, q, d, args.budget)
        rows.append({"d": d, "H": congruence.kernel_size(V, q**d - 1),
                     "S": cc["enumerated"], "formula": cc["formula"],
                     "formula_applies": cc["hypothesis"], "orbits": int(reps.shape[0])})
    doc.update(status="proved", levels=rows)
    return doc, EXIT_OK


def cmd_reproduce(args, warnings):
    rows = []
    for sid in args.suite:
        rows.extend(reproduce.run_suite(sid))
    doc = {"schema_version": SCHEMA_VERSION, "command": "reproduce",
           "suites": list(args.suite), "rows": rows,
           "passed": sum(r["ok"] for r in rows), "failed": sum(not r["ok"] for r in rows)}
    doc["status"] = "pass" if doc["failed"] == 0 else "fail"
    return doc, EXIT_OK if doc["failed"] == 0 else EXIT_ERROR


# -- parser ------------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, help="the prime p")
    common.add_argument("--a", type=int, help="extension degree, q = p^a (default 1)")
    common.add_argument("--precision", type=int, help="p-adic precision in pi-units")
    common.add_argument("--budget", type=int, help="point budget for brute-force sums")
    common.add_argument("--threads", type=int, help="worker threads for the oracle")
    common.add_argument("--format", choices=("json", "csv"), help="output format")
    common.add_argument("--out", help="write the document to this path")

    ap = argparse.ArgumentParser(prog="lnewton", description="Newton polygons of L-functions of exponential sums")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    for name, helptext in (("oracle", "exact polygon from brute-force sums"),
                           ("slopes", "factorial-sum method for one variable, degree <= 6"),
                           ("auto", "slopes method with oracle cross-check")):
        sp = sub.add_parser(name, parents=[common], help=helptext)
        sp.add_argument("poly")
    sp = sub.add_parser("tables", parents=[common], help="minimal-weight digit tables")
    sp.add_argument("poly")
    sp.add_argument("--s-max", type=int, dest="s_max", help="largest coefficient index")
    sp = sub.add_parser("gauss-check", parents=[common], help="Gauss-sum identities")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--kind", choices=("gk", "hd", "interp"), default="gk")
    sp.add_argument("--d", type=int, default=1)
    sp.add_argument("--k", type=int, default=2)
    sp = sub.add_parser("congruence", parents=[common], help="solution counts and orbits")
    sp.add_argument("poly")
    sp.add_argument("--level", type=int, default=2)
    sp = sub.add_parser("reproduce", parents=[common], help="pinned reproduction suites")
    sp.add_argument("suite", nargs="+")
    return ap


COMMANDS = {
    "oracle": cmd_oracle, "slopes": cmd_slopes, "tables": cmd_tables, "auto": cmd_auto,
    "gauss-check": cmd_gauss_check, "congruence": cmd_congruence, "reproduce": cmd_reproduce,
}


def _emit(doc, args):
    text = to_csv(doc) if args.format == "csv" else dumps(doc)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    warnings = []
    start = time.perf_counter()
    try:
        args = resolve(args)
        doc, code = COMMANDS[args.command](args, warnings)
    except LNewtonError as exc:
        doc = {"schema_version": SCHEMA_VERSION, "command": args.command, "status": "error",
               "error": {"code": exc.code, "message": str(exc)}}
        print(f"lnewton: {exc.code}: {exc}", file=sys.stderr)
        code = EXIT_ERROR
    doc["runtime_seconds"] = f"{time.perf_counter() - start:.3f}"
    if args.format not in ("json", "csv"):
        args.format = "json"
    _emit(doc, args)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
