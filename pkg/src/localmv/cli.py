"""Command-line interface.

Every subcommand prints one JSON report with the fields ``command``,
``input``, ``verdict``, ``witness``, ``result`` and ``timing``.  Exit codes:
0 when the verdict is true, 1 when it is false (the witness explains why),
2 for usage and schema errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import List, Optional, Tuple

from . import docs
from .algebra import Chain, Lex
from .errors import MVError
from .finclass import a_loc, classify, decompose_by_booleans, decompose_by_generators, fin_classes
from .lab import check_sequent, parse_sequent_file, sequent_str
from .lab.builtins import phi_formula
from .lab.evaluate import solutions
from .morita import from_mv, to_mv, validate_triple
from .radical import LexRadical, hom_count, is_local, is_simple, radical_set
from .variety import is_local_member, is_member_finite, parse_pair


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _load(spec: str):
    text = spec.strip()
    if not text.startswith(("{", "[")):
        if not os.path.exists(spec):
            raise UsageError(f"no such file: {spec}")
        with open(spec, encoding="utf-8") as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON: {exc}") from None


def _json_value(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid element {text!r}: {exc}") from None


def _pair(text):
    try:
        return parse_pair(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# ---------------------------------------------------------------------------
# subcommands: each returns (verdict, witness, result)
# ---------------------------------------------------------------------------


def cmd_check_variety(args):
    A = docs.algebra_from_doc(_load(args.algebra))
    p = _pair(args.pair)
    if A.is_finite:
        res = is_member_finite(A, p)
        witness = None
        if not res:
            witness = {"equation": res.equation.name, "text": str(res.equation), "x": docs.elem_to_json(A, res.element)}
        return res.member, witness, {"method": "equations", "n": p.n}
    ok = is_local_member(A, p)
    witness = None if ok else {"rank": A.rank, "admissible_ranks": sorted(p.ranks)}
    return ok, witness, {"method": "rank", "n": p.n}


def cmd_radical(args):
    A = docs.algebra_from_doc(_load(args.algebra))
    rad = radical_set(A, args.n)
    if isinstance(rad, LexRadical):
        return True, None, {"closed_form": rad.describe(), "simple": A.group.is_trivial}
    members = [docs.elem_to_json(A, x) for x in rad]
    return True, None, {"members": members, "size": len(members), "is_ideal": rad.is_ideal()}


def cmd_classify(args):
    A = docs.algebra_from_doc(_load(args.algebra))
    x = docs.elem_from_json(A, _json_value(args.elem))
    d = classify(A, x, args.n)
    if d is None:
        return False, {"satisfied_classes": fin_classes(A, x, args.n)}, {"class": None}
    return True, None, {"class": d}


def cmd_decompose(args):
    A = docs.algebra_from_doc(_load(args.algebra))
    raw = _json_value("[" + args.gens + "]") if args.gens.strip() else []
    gens = [docs.elem_from_json(A, g) for g in raw]
    if args.booleans:
        dec, _ = decompose_by_booleans(A, gens)
    else:
        if args.n is None:
            raise UsageError("decompose needs --n unless --booleans is given")
        dec = decompose_by_generators(A, gens, args.n)
    result = dec.to_dict()
    witness = None
    if not dec.success:
        witness = {"non_local_leaves": [leaf.path for leaf in dec.leaves if leaf.label == "non-local"]}
    else:
        result["isomorphism"] = "A = " + " x ".join(l for l in dec.leaf_labels if l != "trivial")
    return dec.success, witness, result


def cmd_morita(args):
    p = _pair(args.pair)
    if args.action == "from-mv":
        if not args.algebra:
            raise UsageError("from-mv needs --algebra")
        A = docs.algebra_from_doc(_load(args.algebra))
        if not isinstance(A, (Lex, Chain)):
            raise UsageError("from-mv needs a lex or chain algebra")
        t = from_mv(A, p)
        return True, None, {"triple": docs.triple_to_doc(t)}
    if not args.triple:
        raise UsageError(f"{args.action} needs --triple")
    t = docs.triple_from_doc(_load(args.triple), p)
    errs = validate_triple(t)
    if errs:
        return False, {"violations": [{"axiom": i, "message": m} for i, m in errs]}, {}
    A = to_mv(t)
    result = {"algebra": docs.algebra_to_doc(A), "local": is_local(A), "simple": is_simple(A)}
    if args.action == "to-mv":
        return True, None, result
    back = from_mv(A, p)
    result["triple"] = docs.triple_to_doc(back)
    same = back == t
    return same, None if same else {"expected": docs.triple_to_doc(t)}, result


def cmd_sequent(args):
    A = docs.algebra_from_doc(_load(args.algebra))
    params = {}
    for item in args.param or []:
        name, _, value = item.partition("=")
        try:
            params[name.strip()] = int(value)
        except ValueError:
            raise UsageError(f"--param expects name=int, got {item!r}") from None
    if not os.path.exists(args.file):
        raise UsageError(f"no such file: {args.file}")
    with open(args.file, encoding="utf-8") as fh:
        seqs = parse_sequent_file(fh.read(), params, args.bound)
    rows = []
    witness = None
    for s in seqs:
        res = check_sequent(A, s)
        row = {"sequent": sequent_str(s), "name": s.name, "status": res.status, "checked": res.checked}
        if res.counterexample is not None:
            row["counterexample"] = {k: docs.elem_to_json(A, v) for k, v in res.counterexample.items()}
            if witness is None:
                witness = {"sequent": row["sequent"], "status": res.status, "assignment": row["counterexample"]}
        rows.append(row)
    return witness is None, witness, {"sequents": rows}


def cmd_homcount(args):
    A = docs.algebra_from_doc(_load(args.source))
    B = docs.algebra_from_doc(_load(args.target))
    count = hom_count(A, B)
    result = {"count": count}
    if isinstance(A, Chain) and A.n >= 1 and B.is_finite:
        result["phi_solutions"] = len(solutions(B, phi_formula(A.n)))
    agree = result.get("phi_solutions", count) == count
    return agree, None if agree else {"routes_disagree": result}, result


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="localmv", description="Local MV-algebras in Komori varieties")
    sub = ap.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("check-variety", help="membership of an algebra in V(I, J)")
    p.add_argument("--algebra", required=True)
    p.add_argument("--pair", required=True, help='e.g. "I=[4];J=[2]"')
    p.set_defaults(run=cmd_check_variety)

    p = sub.add_parser("radical", help="radical of an algebra")
    p.add_argument("--algebra", required=True)
    p.add_argument("--n", type=int)
    p.set_defaults(run=cmd_radical)

    p = sub.add_parser("classify", help="Fin class of an element")
    p.add_argument("--algebra", required=True)
    p.add_argument("--elem", required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(run=cmd_classify)

    p = sub.add_parser("decompose", help="split into local factors")
    p.add_argument("--algebra", required=True)
    p.add_argument("--gens", required=True, help="comma-separated JSON elements")
    p.add_argument("--n", type=int)
    p.add_argument("--booleans", action="store_true", help="split by the given idempotents")
    p.set_defaults(run=cmd_decompose)

    p = sub.add_parser("morita", help="triples and local algebras")
    p.add_argument("action", choices=["to-mv", "from-mv", "roundtrip"])
    p.add_argument("--triple")
    p.add_argument("--algebra")
    p.add_argument("--pair", required=True)
    p.set_defaults(run=cmd_morita)

    p = sub.add_parser("sequent", help="check sequents from a file")
    p.add_argument("--file", required=True)
    p.add_argument("--algebra", required=True)
    p.add_argument("--bound", type=int)
    p.add_argument("--param", action="append", help="name=int, usable as a coefficient")
    p.set_defaults(run=cmd_sequent)

    p = sub.add_parser("homcount", help="number of homomorphisms")
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", dest="target", required=True)
    p.set_defaults(run=cmd_homcount)
    return ap


def run(argv: Optional[List[str]] = None) -> Tuple[int, dict]:
    argv = list(sys.argv[1:] if argv is None else argv)
    report = {"command": argv[0] if argv else None, "input": {"argv": argv}}
    start = time.perf_counter()
    try:
        args = build_parser().parse_args(argv)
        report["input"].update({k: v for k, v in vars(args).items() if k not in ("run",)})
        verdict, witness, result = args.run(args)
        code = 0 if verdict else 1
        report.update(verdict=bool(verdict), witness=witness, result=result)
    except (UsageError, docs.DocError, MVError, ValueError, KeyError) as exc:
        code = 2
        report.update(verdict=None, witness=None, error=f"{type(exc).__name__}: {exc}")
    report["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
    return code, report


def main(argv: Optional[List[str]] = None) -> int:
    code, report = run(argv)
    print(json.dumps(report, sort_keys=True, indent=2, default=str))
    return code


if __name__ == "__main__":
    sys.exit(main())
