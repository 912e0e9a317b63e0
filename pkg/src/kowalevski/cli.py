"""Command-line surface: catalog inspection, exponent reports, the complete
searches, and the claim-ledger verifications, all with deterministic output.

Exit codes: 0 all requested checks pass / searches complete; 1 a verification
failed; 2 usage error; 3 precision exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction

from .exactalg import FieldElem, MPoly
from .numcert import DEFAULT_PRECISION_BITS, PrecisionExhausted, Inconclusive
from .vfield import (
    CATALOG_IDS, ROMAN, make_equation, expected_profile, sufficient_univalence,
    catalog_entry, DegenerateParameters, UnknownEquation, QuadVF,
)
from . import exponents as expo
from . import dioph
from . import riccati as ric
from .fixtures import table1_params, load as load_fixture
from .diffalg import run_ledger, claim_tags

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PRECISION = 0, 1, 2, 3


def _parse_params(text: str | None) -> dict:
    """k=5,m=3/2 -> {"k": Fraction(5), "m": Fraction(3,2)}"""
    if not text:
        return {}
    out = {}
    for item in text.split(","):
        if not item:
            continue
        if "=" not in item:
            raise ValueError(f"bad parameter assignment {item!r}")
        k, v = item.split("=", 1)
        out[k.strip()] = Fraction(v.strip())
    return out


def _emit(args, payload, text_lines=None):
    fmt = getattr(args, "format", "text")
    if fmt == "json" or getattr(args, "json", False):
        body = json.dumps(payload, indent=1, sort_keys=True) + "\n"
    elif fmt == "csv" and "csv" in payload:
        body = payload["csv"]
    else:
        body = "\n".join(text_lines if text_lines is not None else [json.dumps(payload, sort_keys=True)]) + "\n"
    out = getattr(args, "output", None)
    if out:
        with open(out, "w") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)


def _field_str(v) -> str:
    if isinstance(v, FieldElem):
        return str(v)
    return json.dumps(v.to_json()) if hasattr(v, "to_json") else str(v)


def _pair_json(pair):
    if pair is None:
        return None
    def one(w):
        return str(w) if isinstance(w, FieldElem) else w.to_json()
    return [one(pair.u), one(pair.v)]


# -- subcommand handlers ------------------------------------------------------------


def cmd_catalog(args) -> int:
    if args.action == "list":
        lines = []
        for cid in CATALOG_IDS:
            entry = catalog_entry(cid)
            params = ", ".join(n for n in entry.param_names if n != "sqrt_sign") or "-"
            lines.append(f"{cid:16s} params: {params:14s} {entry.notes}")
        _emit(args, {"equations": CATALOG_IDS}, lines)
        return EXIT_OK
    params = _parse_params(args.params)
    X = make_equation(args.equation, params)
    if not isinstance(X, QuadVF):
        payload = {"equation": args.equation, "components": [str(c) for c in X.comps]}
        _emit(args, payload, [f"{v}' = {c}" for v, c in zip(X.vars, X.comps)])
        return EXIT_OK
    payload = X.to_json({k: str(v) for k, v in params.items()})
    payload["equation"] = args.equation
    lines = [f"{v}' = {c}" for v, c in zip(X.vars, X.comps)]
    _emit(args, payload, lines)
    return EXIT_OK


def _load_field(args) -> QuadVF:
    if getattr(args, "field", None):
        with open(args.field) as fh:
            return QuadVF.from_json(json.load(fh))
    return make_equation(args.equation, _parse_params(args.params))


def _orbit_json(orbit, pair):
    def coord(c):
        return str(c) if isinstance(c, FieldElem) else c.to_json()
    row = {
        "direction": [coord(c) for c in orbit.direction],
        "degenerate": orbit.degenerate,
        "multiplicity": orbit.multiplicity,
        "pair": _pair_json(pair),
    }
    if pair is not None:
        row["sum"] = str(pair.sum) if isinstance(pair.sum, FieldElem) else pair.sum.to_json()
        row["product"] = str(pair.prod) if isinstance(pair.prod, FieldElem) else pair.prod.to_json()
    return row


def cmd_exponents(args) -> int:
    X = _load_field(args)
    bits = args.precision_bits
    rows = expo.orbits_with_flags(X, bits)
    degenerate = [o for o, p in rows if o.degenerate]
    payload = {
        "equation": getattr(args, "equation", None),
        "orbits": [_orbit_json(o, p) for o, p in rows],
        "exit": EXIT_FAIL if degenerate else EXIT_OK,
    }
    lines = []
    for o, p in rows:
        flag = " DEGENERATE" if o.degenerate else ""
        lines.append(f"{o}  x{o.multiplicity}{flag}  pair={p}")
    if not degenerate:
        prof = expo.KowalevskiProfile([(o, p) for o, p in rows])
        rel = expo.check_relations(prof)
        payload["relations"] = {
            "R0": "pass" if rel.passed[0] else "fail",
            "R1": "pass" if rel.passed[1] else "fail",
            "R2": "pass" if rel.passed[2] else "fail",
            "exact": rel.exact,
        }
        try:
            payload["family"] = expo.classify_family(prof)
        except Exception:
            payload["family"] = None
        lines.append(f"relations: {rel}")
        lines.append(f"family: {payload['family']}")
    _emit(args, payload, lines)
    return payload["exit"]


def cmd_relations(args) -> int:
    X = _load_field(args)
    prof = expo.kowalevski_profile(X, args.precision_bits)
    rel = expo.check_relations(prof)
    payload = {"R0": rel.passed[0], "R1": rel.passed[1], "R2": rel.passed[2], "exact": rel.exact}
    _emit(args, payload, [repr(rel)])
    return EXIT_OK if rel.all_pass() else EXIT_FAIL


def cmd_family(args) -> int:
    X = _load_field(args)
    prof = expo.kowalevski_profile(X, args.precision_bits)
    fam = expo.classify_family(prof)
    _emit(args, {"family": fam}, [f"family: {fam}"])
    return EXIT_OK


def cmd_search(args) -> int:
    if args.kind == "s421":
        rows = dioph.enumerate_section_421(4, args.n_max)
        csv = "n,xi6,xi7\n" + "".join(f"{n},{a},{b}\n" for n, a, b in rows)
        payload = {"search": "s421", "parameters": {"n_min": 4, "n_max": args.n_max},
                   "cap": None, "complete": True,
                   "results": [[n, a, b] for n, a, b in rows], "count": len(rows), "csv": csv}
        _emit(args, payload, csv.splitlines())
        return EXIT_OK
    if args.kind == "triples-sixth":
        count, triples = dioph.count_triples_sixth()
        payload = {"search": "triples-sixth", "cap": None, "complete": True,
                   "results": [list(t) for t in triples], "count": count}
        _emit(args, payload, [f"count: {count}"] + [str(t) for t in triples])
        return EXIT_OK
    if args.kind == "whichkappa":
        pairs = dioph.whichkappa()
        payload = {"search": "whichkappa", "cap": None, "complete": True,
                   "results": [list(p) for p in pairs], "count": len(pairs)}
        _emit(args, payload, [str(p) for p in pairs])
        return EXIT_OK
    if args.kind == "lemma42":
        rep = dioph.lemma_42_search(args.cap or 500)
        payload = {"search": "lemma42", "cap": rep.cap, "complete": True,
                   "results": [], "count": 0,
                   "max_pair_contribution": str(rep.max_pair_contribution),
                   "counterexamples": rep.counterexamples,
                   "conclusion_holds": rep.conclusion_holds()}
        _emit(args, payload, [f"conclusion holds: {rep.conclusion_holds()}"])
        return EXIT_OK if rep.conclusion_holds() else EXIT_FAIL
    if args.kind == "complete-profile":
        if not args.skeleton:
            raise ValueError("complete-profile needs --skeleton FILE")
        if os.path.exists(args.skeleton):
            with open(args.skeleton) as fh:
                data = json.load(fh)
        else:
            data = load_fixture(args.skeleton)
        skeleton = dioph.ProfileSkeleton.from_json(data)
        recs = dioph.complete_profile(skeleton, args.cap)
        payload = {"search": "complete-profile", "cap": args.cap,
                   "complete": True,
                   "skeleton": skeleton.to_json(),
                   "results": [[list(p) for p in r.pairs] for r in recs],
                   "count": len(recs)}
        _emit(args, payload, [str(r.pairs) for r in recs] or ["(no completions)"])
        return EXIT_OK
    if args.kind == "egyptian":
        problem = dioph.UnitFractionProblem(
            term_count=args.terms, target=Fraction(args.target),
            allow_negative=not args.positive,
            forbidden_values=frozenset(args.forbid or []),
            cap=args.cap)
        recs, fams = dioph.solve_unit_fractions(problem)
        payload = {"search": "egyptian", "cap": args.cap, "complete": True,
                   "parameters": {"terms": args.terms, "target": args.target},
                   "results": [list(r.values) for r in recs],
                   "families": [str(f) for f in fams], "count": len(recs)}
        _emit(args, payload, [str(r.values) for r in recs] + [str(f) for f in fams])
        return EXIT_OK
    raise ValueError(f"unknown search {args.kind}")


def _verify_table1(args) -> tuple[int, dict, list[str]]:
    fixtures = table1_params()
    lines = []
    rows = []
    worst = EXIT_OK
    for eq in ROMAN:
        params = fixtures[eq]
        X = make_equation(eq, params)
        prof = expo.kowalevski_profile(X, args.precision_bits)
        got = prof.integer_multiset()
        want = sorted(tuple(sorted((int(u.rat), int(v.rat)))) for u, v in expected_profile(eq, params))
        ok = got == want
        rows.append({"claim": f"table1:{eq}", "status": "pass" if ok else "fail"})
        lines.append(f"{'PASS' if ok else 'FAIL'} table1:{eq}")
        if not ok:
            worst = EXIT_FAIL
    return worst, {"rows": rows}, lines


def _verify_table2(args) -> tuple[int, dict, list[str]]:
    fixtures = table1_params()
    rows = []
    lines = []
    worst = EXIT_OK
    for eq in ROMAN:
        verdict = sufficient_univalence(eq, fixtures[eq])
        ok = verdict == "Sufficient"
        rows.append({"claim": f"table2:{eq}", "status": "pass" if ok else "fail",
                     "detail": verdict})
        lines.append(f"{'PASS' if ok else 'FAIL'} table2:{eq} ({verdict})")
        if not ok:
            worst = EXIT_FAIL
    return worst, {"rows": rows}, lines


_VERIFY_GROUPS = {
    "first-integral": ("first-integral:",),
    "commuting": ("commutant:", "commutation:", "chazy:weighted-integrals"),
    "halphen": ("halphen:",),
    "projective": ("projective-invariant:",),
    "solution-map": ("solution-map:",),
    "pushforward": ("reduction:",),
    "equivariance": ("equivariance:",),
    "blowup": ("blowup:", "quartic-transforms-to-quadric"),
}


def cmd_verify(args) -> int:
    if args.what == "table1":
        code, payload, lines = _verify_table1(args)
        _emit(args, payload, lines)
        return code
    if args.what == "table2":
        code, payload, lines = _verify_table2(args)
        _emit(args, payload, lines)
        return code
    if args.what == "ledger":
        tags = claim_tags() if (args.all or not args.claims) else args.claims.split(",")
    else:
        prefixes = _VERIFY_GROUPS.get(args.what)
        if prefixes is None:
            raise ValueError(f"unknown verification {args.what}")
        tags = [t for t in claim_tags() if any(
            t.startswith(p) if p.endswith(":") else t == p for p in prefixes)]
        if args.equation:
            tags = [t for t in tags if args.equation in t]
    rows = run_ledger(tags)
    failures = sum(1 for r in rows if not r.ok)
    payload = {"rows": [r.to_json() for r in rows], "failures": failures}
    lines = [f"{'PASS' if r.ok else 'FAIL'} {r.tag} ({r.seconds:.2f}s) {r.detail}" for r in rows]
    lines.append(f"failures: {failures}/{len(rows)}")
    _emit(args, payload, lines)
    return EXIT_OK if failures == 0 else EXIT_FAIL


def cmd_riccati(args) -> int:
    if args.action == "check-first":
        verdict = ric.check_first_riccati(args.m, args.p, args.q, args.r)
        _emit(args, {"kind": "check-first", "verdict": verdict,
                     "parameters": {"m": args.m, "p": args.p, "q": args.q, "r": args.r}},
              [f"sufficient for rational solutions: {verdict}"])
        return EXIT_OK
    if args.action == "check-second":
        verdict = ric.check_second_riccati(args.n, args.q)
        _emit(args, {"kind": "check-second", "verdict": verdict,
                     "parameters": {"n": args.n, "q": args.q}},
              [f"sufficient for meromorphic solutions: {verdict}"])
        return EXIT_OK
    if args.action == "series":
        eq = ric.second_kind_equation(Fraction(args.q), Fraction(args.n), args.q)
        try:
            series = ric.frobenius_formal_solution(eq, args.order)
            payload = {"kind": "series", "verdict": True, "obstruction_index": None,
                       "series": [str(c) for c in series.coeffs],
                       "parameters": {"q": args.q, "n": args.n, "order": args.order}}
            lines = [f"formal solution exists to order {series.order}"]
        except ric.Obstruction as o:
            payload = {"kind": "series", "verdict": False, "obstruction_index": o.index,
                       "parameters": {"q": args.q, "n": args.n, "order": args.order}}
            lines = [f"obstruction at index {o.index}"]
        _emit(args, payload, lines)
        return EXIT_OK
    if args.action == "double-root":
        ok = ric.verify_double_root_solution(args.n)
        _emit(args, {"kind": "double-root", "verdict": ok, "parameters": {"n": args.n}},
              [f"explicit solution verifies: {ok}"])
        return EXIT_OK if ok else EXIT_FAIL
    raise ValueError(args.action)


# -- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="kowalevski",
        description="Exact verification and search toolkit for quadratic "
                    "homogeneous differential equations in three complex variables.")
    ap.add_argument("--precision-bits", type=int,
                    default=int(os.environ.get("KOWALEVSKI_PRECISION_BITS", DEFAULT_PRECISION_BITS)))
    ap.add_argument("--output", help="write the report to a file instead of stdout")
    ap.add_argument("--seed", type=int, default=0, help="seed for spot-check sampling")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="list or print catalog equations")
    p.add_argument("action", choices=["list", "show"])
    p.add_argument("--equation")
    p.add_argument("--params")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_catalog)

    for name, fn in (("exponents", cmd_exponents), ("relations", cmd_relations),
                     ("family", cmd_family)):
        p = sub.add_parser(name)
        p.add_argument("--equation")
        p.add_argument("--params")
        p.add_argument("--field", help="JSON vector-field file")
        p.add_argument("--json", action="store_true")
        p.set_defaults(fn=fn)

    p = sub.add_parser("search", help="the complete Diophantine enumerations")
    p.add_argument("kind", choices=["s421", "triples-sixth", "complete-profile",
                                    "whichkappa", "lemma42", "egyptian"])
    p.add_argument("--n-max", type=int, default=100)
    p.add_argument("--skeleton", help="skeleton JSON file (or a bundled fixture name)")
    p.add_argument("--cap", type=int)
    p.add_argument("--terms", type=int, default=3)
    p.add_argument("--target", default="1")
    p.add_argument("--positive", action="store_true")
    p.add_argument("--forbid", type=int, nargs="*")
    p.add_argument("--csv", dest="format", action="store_const", const="csv")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_search)

    p = sub.add_parser("verify", help="run tabulated claims")
    p.add_argument("what", choices=["table1", "table2", "first-integral", "commuting",
                                    "halphen", "projective", "solution-map", "pushforward",
                                    "equivariance", "blowup", "ledger"])
    p.add_argument("--equation")
    p.add_argument("--all", action="store_true")
    p.add_argument("--claims", help="comma-separated claim tags")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("riccati")
    p.add_argument("action", choices=["check-first", "check-second", "series", "double-root"])
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--p", type=int, default=0)
    p.add_argument("--q", type=int, default=1)
    p.add_argument("--r", type=int, default=0)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--order", type=int, default=30)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_riccati)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else 0
    random.seed(args.seed)
    try:
        return args.fn(args)
    except PrecisionExhausted as e:
        print(f"precision exhausted: {e}", file=sys.stderr)
        return EXIT_PRECISION
    except (DegenerateParameters, UnknownEquation, ValueError, KeyError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
