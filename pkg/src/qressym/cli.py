"""Command-line front end.

Exit codes: 0 accept / success / TRUE, 1 reject / FALSE / invalid symmetry,
2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .calculus import RuleError, TraceError, check_proof, eliminate_symmetry_steps, parse_trace, \
    serialize_trace, step_counts
from .core import QDIMACSError, parse_qdimacs, serialize_qdimacs
from .families import FamilyId, family_symmetries, gen_family
from .oracle import DEFAULT_MAX_VARS, OracleLimitError, evaluate
from .proofs import prove
from .symmetry import SymmetryFileError, breaker_clauses, is_admissible, is_symmetry, \
    parse_symmetries, serialize_symmetries

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as f:
        return f.read()


def _write(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", newline="\n") as f:
        f.write(text)


def cmd_gen(args) -> int:
    f = FamilyId.parse(args.family)
    q = gen_family(f, args.n)
    syms = family_symmetries(f, args.n)
    if args.with_breaker:
        q = q.with_clauses(breaker_clauses(q, syms))
    _write(args.out, serialize_qdimacs(q))
    if args.syms:
        _write(args.syms, serialize_symmetries(syms))
    return EXIT_OK


def cmd_prove(args) -> int:
    q, syms, pf = prove(args.family, args.n, args.strategy)
    _write(args.out, serialize_trace(pf))
    if args.formula_out:
        _write(args.formula_out, serialize_qdimacs(q))
    if args.syms_out:
        _write(args.syms_out, serialize_symmetries(syms))
    return EXIT_OK


def _load(args):
    q = parse_qdimacs(_read(args.formula))
    pf = parse_trace(_read(args.trace))
    syms = parse_symmetries(_read(args.syms)) if getattr(args, "syms", None) else []
    return q, syms, pf


def cmd_check(args) -> int:
    q, syms, pf = _load(args)
    rep = check_proof(q, syms, pf, allow_sym=not args.no_sym)
    if args.json:
        print(json.dumps(rep.to_dict(), sort_keys=True))
    elif rep.accepted:
        c = rep.step_counts
        print("ACCEPT refutation: %d rule steps (resolve %d, reduce %d, symmetry %d), %d axioms"
              % (c["rules"], c["resolve"], c["reduce"], c["symmetry"], c["axiom"]))
    else:
        print("REJECT at step %d: %s (%s)" % (rep.failing_step, rep.reason.value, rep.message))
    return EXIT_OK if rep.accepted else EXIT_FAIL


def cmd_desym(args) -> int:
    q, syms, pf = _load(args)
    try:
        out = eliminate_symmetry_steps(q, syms, pf)
    except (ValueError, KeyError) as e:
        print("desym: %s" % e, file=sys.stderr)
        return EXIT_FAIL
    _write(args.out, serialize_trace(out))
    return EXIT_OK


def cmd_eval(args) -> int:
    q = parse_qdimacs(_read(args.formula))
    result = evaluate(q, args.max_vars)
    print("TRUE" if result else "FALSE")
    return EXIT_OK if result else EXIT_FAIL


def cmd_sym_verify(args) -> int:
    q = parse_qdimacs(_read(args.formula))
    syms = parse_symmetries(_read(args.symfile))
    all_ok = True
    for s in syms:
        try:
            adm = is_admissible(s, q.prefix)
        except ValueError:
            adm = False
        ok = adm and is_symmetry(s, q)
        all_ok &= ok
        if ok:
            verdict = "SYMMETRY"
        elif not adm:
            verdict = "NOT-ADMISSIBLE"
        else:
            verdict = "NOT-SYMMETRY"
        print("%s %s" % (s.name, verdict))
    return EXIT_OK if all_ok else EXIT_FAIL


def cmd_stats(args) -> int:
    pf = parse_trace(_read(args.trace))
    c = step_counts(pf.steps)
    if args.json:
        print(json.dumps(c, sort_keys=True))
    else:
        for k in ("resolve", "reduce", "symmetry", "rules", "axiom", "total"):
            print("%-9s %d" % (k, c[k]))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qressym", description="QBF families, short Q-Res(+S) proofs and a checker")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True
    families = [f.value for f in FamilyId]

    g = sub.add_parser("gen", help="write a family instance as QDIMACS")
    g.add_argument("--family", required=True, choices=families)
    g.add_argument("--n", required=True, type=int)
    g.add_argument("--with-breaker", action="store_true")
    g.add_argument("--out")
    g.add_argument("--syms", help="write the family symmetries to this file")
    g.set_defaults(func=cmd_gen)

    pr = sub.add_parser("prove", help="emit a short refutation trace")
    pr.add_argument("--family", required=True, choices=["kbkf", "quparity"])
    pr.add_argument("--n", required=True, type=int)
    pr.add_argument("--strategy", required=True, choices=["breaker", "symrule"])
    pr.add_argument("--out")
    pr.add_argument("--formula-out")
    pr.add_argument("--syms-out")
    pr.set_defaults(func=cmd_prove)

    c = sub.add_parser("check", help="check a trace against a formula")
    c.add_argument("formula")
    c.add_argument("trace")
    c.add_argument("--syms")
    c.add_argument("--no-sym", action="store_true", help="disable the symmetry rule")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_check)

    d = sub.add_parser("desym", help="eliminate symmetry steps from a trace")
    d.add_argument("formula")
    d.add_argument("trace")
    d.add_argument("--syms", required=True)
    d.add_argument("--out", required=True)
    d.set_defaults(func=cmd_desym)

    e = sub.add_parser("eval", help="brute-force truth value")
    e.add_argument("formula")
    e.add_argument("--max-vars", type=int, default=DEFAULT_MAX_VARS)
    e.set_defaults(func=cmd_eval)

    s = sub.add_parser("sym", help="symmetry utilities")
    ssub = s.add_subparsers(dest="sym_command", parser_class=_Parser)
    ssub.required = True
    sv = ssub.add_parser("verify", help="check each symmetry in a sidecar file")
    sv.add_argument("formula")
    sv.add_argument("symfile")
    sv.set_defaults(func=cmd_sym_verify)

    st = sub.add_parser("stats", help="step tallies of a trace")
    st.add_argument("trace")
    st.add_argument("--json", action="store_true")
    st.set_defaults(func=cmd_stats)
    return p


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print("qressym: error: %s" % e, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as e:  # --help
        return EXIT_OK if not e.code else EXIT_USAGE
    try:
        return args.func(args)
    except OSError as e:
        print("qressym: %s" % e, file=sys.stderr)
        return EXIT_USAGE
    except (QDIMACSError, TraceError, SymmetryFileError, OracleLimitError, RuleError, ValueError) as e:
        print("qressym: %s" % e, file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
