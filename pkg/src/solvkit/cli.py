"""Command-line interface.

Exit codes: 0 all checks pass, 1 failed checks, 2 usage error,
3 unusable input (malformed file or data violating a documented
precondition). Reports are JSON on stdout with deterministic field order;
only the "timings" block varies between runs.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from fractions import Fraction
from typing import List, Optional

from . import catalog, cohomology, cxstruct, expforms, jsonio, lattices, report
from .errors import (BoundTooLarge, NoGroupLaw, NotIntegrable, ParamOutOfRange,
                     SchemaError, SolvkitError, UnknownName)
from .pkforms import classify

USAGE_ERROR = 2
INPUT_ERROR = 3


def _print(doc) -> None:
    sys.stdout.write(jsonio.dumps_canonical(doc) + "\n")


def _digest_file(path: str) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        h.update(fh.read())
    return h.hexdigest()


def _parse_param_value(text: str):
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return Fraction(text)
    except ValueError:
        return text


def _collect_params(pairs: Optional[List[str]]) -> dict:
    out = {}
    for pair in pairs or []:
        if "=" not in pair:
            raise SchemaError("--params expects key=value, got %r" % pair)
        key, _, val = pair.partition("=")
        out[key.strip()] = _parse_param_value(val.strip())
    return out


def cmd_catalog(args) -> int:
    if args.action == "list":
        _print({"command": "catalog list", "names": catalog.list_names()})
        return 0
    try:
        entry = catalog.get(args.name, **_collect_params(args.params))
    except (UnknownName, ParamOutOfRange) as e:
        sys.stderr.write("error: %s\n" % e)
        return USAGE_ERROR
    if args.action == "show":
        _print(jsonio.dump_algebra(entry.algebra, entry.j))
        return 0
    # crosscheck
    try:
        rep = catalog.brackets_from_group_law(entry, step=args.step,
                                              rank_tol=args.rank_tol, seed=0)
    except NoGroupLaw as e:
        sys.stderr.write("error: %s\n" % e)
        return USAGE_ERROR
    ok = rep.invariants_match and rep.assoc_residual <= 1e-9
    _print({
        "command": "catalog crosscheck",
        "entry": entry.name,
        "invariants": rep.invariants,
        "expected": rep.expected,
        "invariants_match": rep.invariants_match,
        "assoc_residual": rep.assoc_residual,
        "status": "pass" if ok else "fail",
    })
    return 0 if ok else 1


def cmd_verify_integrable(args) -> int:
    doc = jsonio.load_document(args.file)
    alg = jsonio.algebra_from_document(doc, validate=not args.no_validate)
    j = jsonio.j_from_document(doc)
    if j is None:
        raise SchemaError("%s: no \"J\" matrix in the document" % args.file)
    rep = cxstruct.is_integrable(alg, j)
    out = {
        "command": "verify-integrable",
        "input_digest": _digest_file(args.file),
        "integrable": rep.ok,
    }
    if not rep.ok:
        out["witness_pair"] = [rep.witness[0] + 1, rep.witness[1] + 1]
        out["nijenhuis_value"] = [str(x) for x in rep.value]
    _print(out)
    return 0 if rep.ok else 1


def cmd_h1(args) -> int:
    alg = jsonio.load_algebra(args.file, validate=not args.no_validate)
    gens = jsonio.load_holonomy(args.holonomy) if args.holonomy else []
    action = cohomology.HolonomyAction(gens)
    result = cohomology.winkelmann_h1(alg, action)
    _print({"h1": result["h1"], "h1_lie": result["h1_lie"],
            "dimW": result["dimW"]})
    return 0


def cmd_classify_form(args) -> int:
    alg = jsonio.load_algebra(args.file, validate=not args.no_validate)
    j = jsonio.load_j_matrix(args.j_file, alg.dim)
    omega = jsonio.load_two_form(args.omega, alg.dim)
    try:
        verdict = classify(alg, j, omega)
    except NotIntegrable as e:
        _print({"command": "classify-form", "tag": "not_integrable",
                "error": str(e)})
        return 1
    _print({
        "command": "classify-form",
        "tag": verdict.tag,
        "signature": list(verdict.signature) if verdict.signature else None,
    })
    return 0


def cmd_verify_theorem9(args) -> int:
    omega_c = expforms.omega_coordinate()
    omega_m = expforms.omega_mc()
    checks = {}
    checks["presentations_equal"] = omega_c == omega_m
    checks["d_omega_zero"] = (expforms.ext_d(omega_c).is_zero()
                              and expforms.ext_d(omega_m).is_zero())
    inv = True
    for k in (-2, -1, 0, 1, 2):
        t = expforms.LatticeTranslation(
            w1_re=Fraction(1), w1_im_pi=Fraction(k),
            w2_re=Fraction(1, 3), w3_re=Fraction(-2))
        inv = inv and expforms.pullback_translation(omega_c, t) == omega_c
    checks["invariance_k1"] = inv
    half = expforms.LatticeTranslation(
        w1_re=Fraction(0), w1_im_pi=Fraction(1, 2),
        w2_re=Fraction(0), w3_re=Fraction(0))
    checks["negative_half_integer"] = \
        expforms.pullback_translation(omega_c, half) != omega_c
    ok = all(checks.values())
    _print({
        "command": "verify-theorem9",
        "verdicts": [{"check_id": name, "status": "pass" if val else "fail"}
                     for name, val in checks.items()],
    })
    return 0 if ok else 1


def _load_int_matrix(path: str) -> List[List[int]]:
    try:
        with open(path, "r") as fh:
            doc = json.load(fh)
    except OSError as e:
        raise SchemaError("cannot read %s: %s" % (path, e))
    except json.JSONDecodeError as e:
        raise SchemaError("%s is not valid JSON: %s" % (path, e))
    raw = doc.get("matrix") if isinstance(doc, dict) else doc
    if not isinstance(raw, list) or \
            any(not isinstance(row, list) for row in raw):
        raise SchemaError("%s: expected a matrix (list of rows)" % path)
    for row in raw:
        for x in row:
            if not isinstance(x, int) or isinstance(x, bool):
                raise SchemaError("%s: integer entries required" % path)
    return raw


def cmd_lattice(args) -> int:
    if args.action == "search":
        if args.bound < 0:
            raise ParamOutOfRange("bound must be nonnegative")
        entries = lattices.search_palindromic(args.bound)
        payload = jsonio.dump_search_entries(entries)
        counts = {"3a": 0, "3b": 0, "excluded": 0}
        for e in entries:
            counts[e.classification] += 1
        out = {"command": "lattice search", "bound": args.bound,
               "counts": counts, "entries": payload}
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(jsonio.dumps_canonical(out) + "\n")
            _print({"command": "lattice search", "bound": args.bound,
                    "counts": counts, "out": args.out})
        else:
            _print(out)
        return 0
    # build
    matrix = _load_int_matrix(args.matrix)
    if args.kind == "nilpotent":
        spec = lattices.build_lattice_nilpotent(matrix)
    elif args.kind == "nonnilpotent":
        b = _load_int_matrix(args.b) if args.b else None
        if b is None and args.k is None:
            raise SchemaError("nonnilpotent build needs --b or --k")
        spec = lattices.build_lattice_nonnilpotent(matrix, b=b, k=args.k)
    else:
        if args.k is None:
            raise SchemaError("nakamura build needs --k")
        spec = lattices.nakamura_lattice(matrix, Fraction(args.eps_im), args.k)
    _print(jsonio.dump_lattice_spec(spec))
    return 0


def cmd_paper_report(args) -> int:
    started = time.time()
    verdicts = report.run_all()
    elapsed = time.time() - started
    names = catalog.list_names()
    digest = hashlib.sha256(
        json.dumps(names).encode("utf-8")).hexdigest()
    out = {
        "command": "paper-report",
        "inputs_digest": digest,
        "verdicts": verdicts,
        "timings": {"total_seconds": elapsed},
    }
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(jsonio.dumps_canonical(out) + "\n")
    _print(out)
    return 0 if all(v["status"] == "pass" for v in verdicts) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="solvkit",
        description="Exact toolkit for invariant complex and pseudo-Kahler "
                    "structures on low-dimensional solvable Lie algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("catalog", help="built-in algebra table")
    pcs = pc.add_subparsers(dest="action", required=True)
    pcs.add_parser("list")
    show = pcs.add_parser("show")
    show.add_argument("name")
    show.add_argument("--params", action="append", metavar="KEY=VALUE")
    cross = pcs.add_parser("crosscheck")
    cross.add_argument("name")
    cross.add_argument("--params", action="append", metavar="KEY=VALUE")
    cross.add_argument("--step", type=float, default=1e-4)
    cross.add_argument("--rank-tol", type=float, default=1e-6)
    pc.set_defaults(func=cmd_catalog)

    vi = sub.add_parser("verify-integrable",
                        help="Nijenhuis check of the J stored in a file")
    vi.add_argument("file")
    vi.add_argument("--no-validate", action="store_true")
    vi.set_defaults(func=cmd_verify_integrable)

    h1p = sub.add_parser("h1", help="first cohomology via the h1 formula")
    h1p.add_argument("file")
    h1p.add_argument("--holonomy")
    h1p.add_argument("--no-validate", action="store_true")
    h1p.set_defaults(func=cmd_h1)

    cf = sub.add_parser("classify-form",
                        help="classify an invariant 2-form against a J")
    cf.add_argument("file")
    cf.add_argument("--J", dest="j_file", required=True)
    cf.add_argument("--omega", required=True)
    cf.add_argument("--no-validate", action="store_true")
    cf.set_defaults(func=cmd_classify_form)

    t9 = sub.add_parser("verify-theorem9",
                        help="coordinate-calculus pipeline checks")
    t9.set_defaults(func=cmd_verify_theorem9)

    lat = sub.add_parser("lattice", help="lattice search and builders")
    lats = lat.add_subparsers(dest="action", required=True)
    search = lats.add_parser("search")
    search.add_argument("--bound", type=int, required=True)
    search.add_argument("--out")
    build = lats.add_parser("build")
    build.add_argument("--kind", required=True,
                       choices=["nilpotent", "nonnilpotent", "nakamura"])
    build.add_argument("--matrix", required=True)
    build.add_argument("--b")
    build.add_argument("--k", type=int)
    build.add_argument("--eps-im", default="1")
    lat.set_defaults(func=cmd_lattice)

    pr = sub.add_parser("paper-report",
                        help="run the full acceptance suite")
    pr.add_argument("--out")
    pr.set_defaults(func=cmd_paper_report)

    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UnknownName, ParamOutOfRange, BoundTooLarge) as e:
        sys.stderr.write("error: %s\n" % e)
        return USAGE_ERROR
    except SchemaError as e:
        sys.stderr.write("input error: %s\n" % e)
        return INPUT_ERROR
    except SolvkitError as e:
        sys.stderr.write("input error: %s\n" % e)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
