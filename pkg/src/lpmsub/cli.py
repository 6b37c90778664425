"""Command-line front end.

Exit codes: 0 success, 1 a requested check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import reproduce
from .dissection import check_dissection, dissection_minors
from .dressian import first_violation
from .fan import build_lpmfan, dual_fan_check, enumerate_hypersimplex_splits, enumerate_lpm_splits, subdivision_dual_graph_dot
from .lattice_paths import as_lpm, is_snake, lpm_bases
from .matroid import DegenerateMinor, MalformedInput, Matroid, is_connected, is_series_parallel, uniform
from .positroid import decorated_permutation_lpm, grassmann_necklace, is_positroid
from .subdivision import (
    NotASplit,
    basis_key,
    classify_cells,
    regular_subdivision,
    weights_from_map,
    weights_from_vector,
)

OK, CHECK_FAILED, BAD_INPUT = 0, 1, 2


class BadInput(Exception):
    pass


def rational_str(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _ints(text: str) -> list:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise BadInput(f"expected a comma-separated list of integers, got {text!r}") from None


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise BadInput(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise BadInput(f"{path} is not valid JSON: {exc}") from None


def _emit(obj, fmt: str, text: str | None = None, dot: str | None = None):
    if fmt == "json":
        sys.stdout.write(json.dumps(obj, indent=2) + "\n")
    elif fmt == "dot":
        if dot is None:
            raise BadInput("this command has no DOT output")
        sys.stdout.write(dot)
    else:
        sys.stdout.write((text if text is not None else json.dumps(obj, indent=2)) + "\n")


# --- ambient matroid and weights ---------------------------------------------

def _add_ambient(p):
    g = p.add_argument_group("ambient matroid")
    g.add_argument("--uniform", metavar="K,N", help="the uniform matroid U_{K,N}")
    g.add_argument("--P", metavar="P", help="lower bounding path of an LPM, e.g. 1,2")
    g.add_argument("--Q", metavar="Q", help="upper bounding path of an LPM, e.g. 3,4")
    g.add_argument("--n", type=int, help="ground set size for --P/--Q")
    g.add_argument("--matroid", metavar="FILE", help="matroid JSON {n, bases} or LPM JSON {n, P, Q}")


def _matroid_from_json(data) -> Matroid:
    if not isinstance(data, dict):
        raise BadInput("matroid JSON must be an object")
    if "P" in data and "Q" in data and "bases" not in data:
        return lpm_bases(data["P"], data["Q"], data.get("n")).matroid
    return Matroid.from_json(data)


def _ambient(args, fallback=None) -> Matroid | None:
    if args.uniform:
        kn = _ints(args.uniform)
        if len(kn) != 2 or not 0 <= kn[0] <= kn[1] or kn[1] < 1:
            raise BadInput("--uniform needs K,N with 0 <= K <= N and N >= 1")
        return uniform(*kn)
    if args.P is not None or args.Q is not None:
        if args.P is None or args.Q is None:
            raise BadInput("--P and --Q go together")
        return lpm_bases(_ints(args.P), _ints(args.Q), args.n).matroid
    if args.matroid:
        return _matroid_from_json(_load_json(args.matroid))
    if fallback is not None:
        return _matroid_from_json(fallback)
    return None


def _add_weights(p):
    g = p.add_argument_group("weights")
    g.add_argument("--weights", metavar="FILE",
                   help='weight JSON: {"weights": {"1,2,3": "p/q", ...}} or {"order": "lex", "vector": [...]}')
    g.add_argument("--vector", metavar="W1,W2,...", help="flat weight list (needs --basis-order lex)")
    g.add_argument("--basis-order", choices=["lex", "keys"], help="how to read flat weight lists")


def _weights(args, M: Matroid | None):
    """Returns (matroid, weights)."""
    doc = None
    if args.weights:
        doc = _load_json(args.weights)
        if not isinstance(doc, dict):
            raise BadInput("weight JSON must be an object")
    M = M or _ambient(args, doc.get("ambient") if doc else None)
    if M is None:
        raise BadInput("no ambient matroid given")
    if args.vector is not None:
        if args.basis_order != "lex":
            raise BadInput("flat vectors need --basis-order lex")
        vals = [x for x in args.vector.replace(" ", "").split(",") if x]
        return M, weights_from_vector(M, vals, "lex")
    if doc is None:
        raise BadInput("give --weights FILE or --vector")
    if "weights" in doc:
        if not isinstance(doc["weights"], dict):
            raise BadInput("'weights' must map basis keys to rationals")
        return M, weights_from_map(M, doc["weights"])
    if "vector" in doc:
        order = doc.get("order") or args.basis_order
        if order != "lex":
            raise BadInput("flat vectors need an explicit lex basis order")
        return M, weights_from_vector(M, doc["vector"], "lex")
    raise BadInput("weight JSON needs 'weights' or 'vector'")


def _relation_json(rel, w, M):
    if rel is None:
        return None
    vals = rel.values(w, M)
    d = rel.to_json()
    d["terms"] = [
        {"bases": [basis_key(x), basis_key(y)], "value": None if v is None else rational_str(v)}
        for (x, y), v in zip(rel.terms, vals)
    ]
    return d


def _dressian_json(w, M) -> dict:
    trop = first_violation(w, M)
    pos = first_violation(w, M, positive=True)
    return {
        "tropical": trop is None,
        "positive": pos is None,
        "tropical_witness": _relation_json(trop, w, M),
        "positive_witness": _relation_json(pos, w, M),
    }


# --- commands ---------------------------------------------------------------------

def cmd_lpm(args) -> int:
    if args.input:
        doc = _load_json(args.input)
        if not isinstance(doc, dict) or "P" not in doc or "Q" not in doc:
            raise BadInput("LPM JSON needs 'P' and 'Q'")
        L = lpm_bases(doc["P"], doc["Q"], doc.get("n"))
    else:
        if args.P is None or args.Q is None:
            raise BadInput("give --P and --Q, or --input FILE")
        L = lpm_bases(_ints(args.P), _ints(args.Q), args.n)
    M = L.matroid
    perm = decorated_permutation_lpm(L)
    out = {
        "n": L.n,
        "k": L.k,
        "P": list(L.P),
        "Q": list(L.Q),
        "bases": [list(b) for b in M.sorted_bases()],
        "num_bases": len(M.bases),
        "connected": is_connected(M),
        "snake": is_snake(L),
        "positroid": is_positroid(M),
        "series_parallel": is_series_parallel(M),
        "decorated_permutation": perm.to_json(),
        "grassmann_necklace": [list(I) for I in grassmann_necklace(M)],
    }
    text = "\n".join([
        f"M[P,Q] with P={L.P} Q={L.Q} on [{L.n}], rank {L.k}",
        f"bases ({len(M.bases)}): " + " ".join("".join(map(str, b)) for b in M.sorted_bases()),
        f"connected={out['connected']} snake={out['snake']} positroid={out['positroid']} "
        f"series_parallel={out['series_parallel']}",
        f"decorated permutation: {perm.pi} colors {dict(perm.colors)}",
        "necklace: " + " ".join("".join(map(str, I)) for I in grassmann_necklace(M)),
    ])
    _emit(out, args.format, text)
    return OK


def cmd_subdivide(args) -> int:
    M, w = _weights(args, _ambient(args))
    S = regular_subdivision(M, w)
    reps = classify_cells(S)
    out = {
        "ambient": M.to_json(),
        "cells": S.to_json()["cells"],
        "classification": [r.to_json() for r in reps],
        "certificates": [
            {"c": [rational_str(v) for v in f.c], "c0": rational_str(f.c0)} for f in S.certificates
        ],
        "dressian": _dressian_json(w, M),
    }
    lines = [f"{len(S)} maximal cells"]
    for i, r in enumerate(reps, start=1):
        tag = "".join([
            "matroid " if r.is_matroid else "non-matroid ",
            "lpm " if r.is_lpm else "",
            "snake " if r.is_snake else "",
            "positroid " if r.is_positroid else "",
        ]).strip()
        lpm = f" P={r.lpm[0]} Q={r.lpm[1]}" if r.lpm else ""
        lines.append(f"  cell {i}: {len(r.bases)} bases, {tag}{lpm}")
    lines.append(f"tropical={out['dressian']['tropical']} positive={out['dressian']['positive']}")
    _emit(out, args.format, "\n".join(lines), subdivision_dual_graph_dot(S))
    return OK


def cmd_dressian(args) -> int:
    M, w = _weights(args, _ambient(args))
    out = _dressian_json(w, M)
    want = out["positive"] if args.positive else out["tropical"]
    lines = [f"tropical={out['tropical']} positive={out['positive']}"]
    for key in ("tropical_witness", "positive_witness"):
        if out[key]:
            terms = ", ".join(f"{'+'.join(t['bases'])}={t['value']}" for t in out[key]["terms"])
            lines.append(f"{key.replace('_', ' ')}: S={out[key]['S']} abcd={out[key]['abcd']} [{terms}]")
    _emit(out, args.format, "\n".join(lines))
    return OK if want else CHECK_FAILED


def cmd_splits(args) -> int:
    M = _ambient(args)
    if M is None:
        raise BadInput("no ambient matroid given")
    if not is_connected(M):
        raise BadInput("split enumeration needs a connected matroid")
    splits = enumerate_lpm_splits(M) if args.lpm_only else enumerate_hypersimplex_splits(M)
    out = {"count": len(splits), "splits": [s.to_json() for s in splits]}
    text = f"{len(splits)} splits\n" + "\n".join(
        f"  {s.label()}  cells of {len(s.minus)} and {len(s.plus)} bases" for s in splits
    )
    _emit(out, args.format, text)
    return OK


def cmd_lpmfan(args) -> int:
    M = _ambient(args)
    if M is None:
        raise BadInput("no ambient matroid given")
    if as_lpm(M) is None:
        raise BadInput("the ambient matroid is not a lattice path matroid")
    fan = build_lpmfan(M, require_compatible=args.compatible)
    out = fan.to_json()
    status = OK
    if args.dual_check:
        out["dual_check"] = dual_fan_check(fan)
        status = OK if out["dual_check"] else CHECK_FAILED
    text = [f"f-vector {fan.f_vector()}"]
    for i, s in enumerate(fan.splits, start=1):
        text.append(f"  S{i} = {s.label()}")
    for c in fan.cones:
        names = ",".join(f"S{i + 1}" for i in c.splits) or "trivial"
        text.append(f"  cone {{{names}}}: {len(c.subdivision)} cells")
    if args.dual_check:
        text.append(f"dual check: {out['dual_check']}")
    _emit(out, args.format, "\n".join(text), fan.to_dot())
    return status


def cmd_dissect(args) -> int:
    doc = _load_json(args.cells)
    if isinstance(doc, dict):
        cells_doc = doc.get("cells")
        amb_doc = doc.get("ambient")
    else:
        cells_doc, amb_doc = doc, None
    if not isinstance(cells_doc, list):
        raise BadInput("dissection JSON needs a list of cells")
    M = _ambient(args, amb_doc)
    if M is None:
        raise BadInput("no ambient matroid given")
    cells = []
    for c in cells_doc:
        if isinstance(c, dict):
            cells.append(_matroid_from_json(c))
        else:
            cells.append(Matroid(M.n, c))
    if args.minor is not None:
        md = dissection_minors(cells, args.minor, M)
        out = md.to_json()
        ok = md.contraction_report.is_dissection and md.deletion_report.is_dissection
        text = (f"contraction: {len(md.contraction)} cells, dissection={md.contraction_report.is_dissection}\n"
                f"deletion: {len(md.deletion)} cells, dissection={md.deletion_report.is_dissection}")
    else:
        rep = check_dissection(cells, M)
        out = rep.to_json()
        ok = rep.is_dissection
        text = "\n".join(f"{k}: {v}" for k, v in out.items())
    _emit(out, args.format, text)
    return OK if ok else CHECK_FAILED


def cmd_reproduce(args) -> int:
    if args.target == "delta36":
        results = reproduce.delta36()
        extra = {}
    elif args.target == "delta48":
        results = reproduce.delta48()
        extra = {}
    else:
        if args.n is None or args.k is None:
            raise BadInput("bcfw needs --n and --k")
        results, cells, report = reproduce.bcfw(args.n, args.k)
        extra = {"cells": [L.to_json() for L in cells], "report": report.to_json()}
    out = {"target": args.target, "results": [r.to_json() for r in results], **extra}
    text = reproduce.table(results)
    if extra:
        text += "\nreport (recorded, not asserted): " + json.dumps(extra["report"])
    _emit(out, args.format, text)
    return OK if all(r.passed for r in results) else CHECK_FAILED


# --- parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lpmsub", description="Lattice path matroid subdivisions.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "text", "dot"], default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lpm", parents=[common], help="bases and invariants of M[P,Q]")
    p.add_argument("--P", help="lower path, e.g. 1,3")
    p.add_argument("--Q", help="upper path, e.g. 3,4")
    p.add_argument("--n", type=int)
    p.add_argument("--input", metavar="FILE", help="LPM JSON {n, P, Q}")
    p.set_defaults(func=cmd_lpm)

    p = sub.add_parser("subdivide", parents=[common], help="regular subdivision of a weight")
    _add_ambient(p)
    _add_weights(p)
    p.set_defaults(func=cmd_subdivide)

    p = sub.add_parser("dressian", parents=[common], help="three-term tropical Plücker checks")
    _add_ambient(p)
    _add_weights(p)
    p.add_argument("--positive", action="store_true", help="fail unless the positive check passes")
    p.set_defaults(func=cmd_dressian)

    p = sub.add_parser("splits", parents=[common], help="hyperplane splits of a matroid polytope")
    _add_ambient(p)
    p.add_argument("--lpm-only", action="store_true", help="only splits with two LPM sides")
    p.set_defaults(func=cmd_splits)

    p = sub.add_parser("lpmfan", parents=[common], help="fan of LPM subdivisions")
    _add_ambient(p)
    p.add_argument("--compatible", action="store_true", help="keep only pairwise compatible split sets")
    p.add_argument("--dual-check", action="store_true", help="also run the duality check")
    p.set_defaults(func=cmd_lpmfan)

    p = sub.add_parser("dissect", parents=[common], help="verify a dissection")
    _add_ambient(p)
    p.add_argument("--cells", metavar="FILE", required=True,
                   help='JSON list of cells (basis lists or matroid objects), or {"ambient": ..., "cells": [...]}')
    p.add_argument("--minor", type=int, metavar="I", help="contract and delete element I first")
    p.set_defaults(func=cmd_dissect)

    p = sub.add_parser("reproduce", parents=[common], help="scripted reproduction runs")
    p.add_argument("target", choices=["delta36", "delta48", "bcfw"])
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (BadInput, MalformedInput, NotASplit, DegenerateMinor) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
