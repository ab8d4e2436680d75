"""Command-line front end: compute, correction, validate, gedeon.

stdout carries exactly the result document (text or canonical JSON); progress
and machine-readable errors go to stderr.  Exit codes: 0 success, 1
validation or computation failure, 2 usage error.
"""

import argparse
import json
import os
import sys

from . import equivariant
from .chartab import load_table, validate_table
from .groups import EnumerationBoundError, PermGroup
from .matroid import (
    Matroid,
    MatroidError,
    load_matroid,
    matroid_from_json,
    steiner_from_json,
    vamos,
)
from .perms import parse_perm, popcount
from .symrep import correction_p, correction_q, correction_r, correction_z

ASSET_DIR = os.path.join(os.path.dirname(__file__), "assets")


class UsageError(ValueError):
    pass


def _resolve_path(path: str):
    """Accept real paths, and spec-style asset paths like assets/m11.json."""
    if os.path.exists(path):
        return path
    base = os.path.basename(path)
    packaged = os.path.join(ASSET_DIR, base)
    if os.path.exists(packaged):
        return packaged
    raise UsageError(f"no such file: {path}")


def load_matroid_arg(spec: str) -> Matroid:
    if spec == "vamos":
        return vamos()
    if spec.lstrip().startswith("{"):
        return matroid_from_json(json.loads(spec))
    return load_matroid(_resolve_path(spec))


def load_group_arg(spec: str, degree: int) -> PermGroup:
    if spec == "trivial":
        return PermGroup.trivial(degree)
    if spec.lstrip().startswith("{"):
        obj = json.loads(spec)
    else:
        with open(_resolve_path(spec)) as fh:
            obj = json.load(fh)
    n = int(obj["degree"])
    gens = [parse_perm(s, n) for s in obj["generators"]]
    return PermGroup(n, gens)


def result_document(which, poly, decomposition, method) -> dict:
    coeffs = []
    for c in poly.coeffs:
        vals = []
        for v in c.values:
            f = v.as_fraction()
            vals.append(int(f) if f.denominator == 1 else str(f))
        coeffs.append({"class_values": vals})
    dec_json = None
    if decomposition is not None:
        dec_json = [
            [{"irreducible": nm, "multiplicity": m} for nm, m in sorted(d.items())]
            for d in decomposition
        ]
    return {
        "polynomial": which,
        "dimensions": poly.dims(),
        "coefficients": coeffs,
        "decomposition": dec_json,
        "method": method,
    }


def render_json(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def render_text(doc) -> str:
    lines = [f"{doc['polynomial']} via {doc['method']}",
             "dimensions: " + " ".join(map(str, doc["dimensions"]))]
    if doc.get("decomposition"):
        for i, terms in enumerate(doc["decomposition"]):
            body = " + ".join(
                (f"{t['multiplicity']}*{t['irreducible']}"
                 if t["multiplicity"] != 1 else t["irreducible"])
                for t in terms) or "0"
            lines.append(f"t^{i}: {body}")
    return "\n".join(lines) + "\n"


def progress(msg):
    print(msg, file=sys.stderr)


def cmd_compute(args) -> int:
    matroid = load_matroid_arg(args.matroid)
    n = popcount(matroid.ground_mask)
    group = load_group_arg(args.group, n)
    table = load_table(_resolve_path(args.table)) if args.table else None
    if args.bound:
        os.environ["EQKL_ENUM_BOUND"] = str(args.bound)
    if group.degree != n:
        raise UsageError(f"group degree {group.degree} does not match ground set size {n}")
    if not matroid.preserved_by(group):
        raise MatroidError("group does not preserve the matroid")
    method = args.method
    if method == "auto":
        method = "paving" if matroid.is_paving() else "brute"
    if method == "uniform":
        if matroid._uniform is False and len(matroid.bases) != _binom(n, matroid.rank):
            raise UsageError("--method uniform needs a uniform matroid input")
        method = "paving"  # uniform matroids have no long stressed hyperplanes
    if method == "paving":
        poly, dec = equivariant.fast_paving(
            matroid, group, args.poly, table=table,
            threads=args.threads, progress=progress)
        used = "uniform" if matroid._uniform else "paving"
    elif method == "brute":
        poly = equivariant.Brute().compute(matroid, group, args.poly)
        dec = None
        if table is not None:
            poly = equivariant.equiv_on_table_ctx(poly, group, table)
            from .chartab import decompose

            dec = [decompose(c, table) for c in poly.coeffs]
        used = "brute"
    else:
        raise UsageError(f"unknown method {args.method}")
    doc = result_document(args.poly, poly, dec, used)
    out = render_json(doc) if args.format == "json" else render_text(doc)
    sys.stdout.write(out)
    return 0


def _binom(n, k):
    from math import comb

    return comb(n, k)


def cmd_correction(args) -> int:
    kind = {"p": correction_p, "q": correction_q,
            "z": correction_z, "r": correction_r}[args.kind]
    poly = kind(args.k, args.h)
    if args.format == "json":
        sys.stdout.write(render_json(
            {"kind": args.kind, "k": args.k, "h": args.h, "poly": str(poly)}))
    else:
        sys.stdout.write(str(poly) + "\n")
    return 0


def cmd_validate(args) -> int:
    ok = True
    lines = []
    if args.target == "steiner":
        with open(_resolve_path(args.path)) as fh:
            system = steiner_from_json(json.load(fh))
        ok, report, _ = system.validate()
        lines = [f"{'PASS' if good else 'FAIL'} {name}: {detail}"
                 for name, good, detail in report]
    elif args.target == "table":
        table = load_table(_resolve_path(args.path))
        report = validate_table(table)
        ok = report.ok
        lines = report.lines()
    elif args.target == "group":
        with open(_resolve_path(args.path)) as fh:
            obj = json.load(fh)
        n = int(obj["degree"])
        gens = [parse_perm(s, n) for s in obj["generators"]]
        lines = [f"PASS parsed {len(gens)} generators of degree {n}"]
        if args.blocks:
            with open(_resolve_path(args.blocks)) as fh:
                blocks_obj = json.load(fh)
            blocks = {sum(1 << (p - 1) for p in b) for b in blocks_obj["blocks"]}
            good = all(all(g.act_mask(b) in blocks for b in blocks) for g in gens)
            ok = ok and good
            lines.append(f"{'PASS' if good else 'FAIL'} generators map blocks to blocks")
    elif args.target == "matroid":
        matroid = load_matroid_arg(args.path)
        lines = [f"PASS matroid on {popcount(matroid.ground_mask)} points, "
                 f"rank {matroid.rank}, {len(matroid.bases)} bases"]
    else:
        raise UsageError(f"unknown validation target {args.target}")
    sys.stdout.write("\n".join(lines) + "\n")
    return 0 if ok else 1


def cmd_gedeon(args) -> int:
    matroid = load_matroid_arg(args.matroid)
    n = popcount(matroid.ground_mask)
    group = load_group_arg(args.group, n)
    table = load_table(_resolve_path(args.table))
    report = equivariant.gedeon_check(matroid, group, table)
    sys.stdout.write("\n".join(report.lines()) + "\n")
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eqkl",
        description="Equivariant Kazhdan-Lusztig, inverse KL and Z-polynomials "
                    "of matroids, exactly.")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="compute P, Q or Z for a matroid")
    c.add_argument("--poly", choices=["P", "Q", "Z"], required=True)
    c.add_argument("--matroid", required=True,
                   help="file, inline JSON, or the built-in name 'vamos'")
    c.add_argument("--group", default="trivial",
                   help="group file, inline JSON, or 'trivial'")
    c.add_argument("--table", help="character table file for decompositions")
    c.add_argument("--method", choices=["auto", "brute", "paving", "uniform"],
                   default="auto")
    c.add_argument("--format", choices=["text", "json"], default="text")
    c.add_argument("--threads", type=int, default=1)
    c.add_argument("--bound", type=int, help="group enumeration bound override")
    c.set_defaults(fn=cmd_compute)

    r = sub.add_parser("correction", help="print a correction polynomial")
    r.add_argument("kind", choices=["p", "q", "z", "r"])
    r.add_argument("k", type=int)
    r.add_argument("h", type=int)
    r.add_argument("--format", choices=["text", "json"], default="text")
    r.set_defaults(fn=cmd_correction)

    v = sub.add_parser("validate", help="run a validator on a data file")
    v.add_argument("target", choices=["steiner", "table", "group", "matroid"])
    v.add_argument("path")
    v.add_argument("--blocks", help="with target=group: block file the "
                                    "generators must preserve")
    v.set_defaults(fn=cmd_validate)

    g = sub.add_parser("gedeon", help="uniform-minus-matroid honesty check")
    g.add_argument("--matroid", required=True)
    g.add_argument("--group", required=True)
    g.add_argument("--table", required=True)
    g.set_defaults(fn=cmd_gedeon)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except UsageError as exc:
        print(json.dumps({"error": "usage", "detail": str(exc)}), file=sys.stderr)
        return 2
    except (MatroidError, EnumerationBoundError, ValueError, OSError) as exc:
        print(json.dumps({"error": type(exc).__name__, "detail": str(exc)}),
              file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
