"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 verification
violations found.  Output format comes from --format or the CFASYM_FORMAT
environment variable (text, json, csv); results go to stdout, diagnostics
to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import asymmetry, cf, congruence, continuants, verifier
from .errors import DomainError

USAGE_EXIT = 1
DOMAIN_EXIT = 2
VIOLATION_EXIT = 3

_FORMATS = ("text", "json", "csv")


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits 2; usage errors are 1 here
        self.print_usage(sys.stderr)
        self.exit(USAGE_EXIT, f"{self.prog}: error: {message}\n")


def _parse_sequence(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise DomainError(f"expected comma-separated integers, got {text!r}")


def _seq_str(q) -> str:
    return ",".join(str(e) for e in q)


class _Result:
    def __init__(self, text: str, payload=None, csv_text=None, exit_code: int = 0):
        self.text = text
        self.payload = payload if payload is not None else {"result": text}
        self.csv_text = csv_text
        self.exit_code = exit_code


def _cmd_expand(args) -> _Result:
    if args.from_quotients is not None:
        alpha, beta = cf.evaluate(_parse_sequence(args.from_quotients))
        return _Result(f"{alpha}/{beta}", {"alpha": alpha, "beta": beta})
    if args.alpha is None or args.beta is None:
        raise DomainError("expand needs ALPHA BETA or --from-quotients")
    if args.predict_parity:
        pred = cf.parity_by_inverse(args.alpha, args.beta)
        payload = {"u": pred.u, "v": pred.v, "v_inverse": pred.v_inverse,
                   "same_side": pred.same_side, "predicted_parity": pred.predicted_parity}
        return _Result(pred.predicted_parity, payload)
    if args.parity == "conv":
        q = cf.expand(args.alpha, args.beta)
    else:
        q = cf.expand_with_parity(args.alpha, args.beta, args.parity)
    return _Result(_seq_str(q), {"quotients": list(q)})


def _cmd_continuant(args) -> _Result:
    if args.fib is not None:
        value = continuants.fibonacci(args.fib)
        return _Result(str(value), {"fibonacci": value})
    q = _parse_sequence(args.sequence)
    if args.euler is not None:
        k, l, m, n = (int(t) for t in args.euler.split(","))
        value = continuants.euler_residual(q, k, l, m, n)
        return _Result(str(value), {"euler_residual": value})
    i = 0 if args.i is None else args.i
    j = len(q) - 1 if args.j is None else args.j
    value = continuants.continuant_range(q, i, j)
    return _Result(str(value), {"continuant": value})


def _cmd_anticont(args) -> _Result:
    q = _parse_sequence(args.sequence)
    i = 0 if args.i is None else args.i
    j = len(q) - 1 if args.j is None else args.j
    value = continuants.anticontinuant_range(q, i, j)
    return _Result(str(value), {"anticontinuant": value})


def _cmd_type(args) -> _Result:
    given_type = args.marginal is not None and args.pivot is None and args.sequence is None
    if given_type:
        t = asymmetry.ExtendedAsymmetryType(
            args.marginal, _parse_sequence(args.core) if args.core else (),
            args.sigma or "even")
        value = asymmetry.type_value(t)
        return _Result(str(value), {"value": value})
    if args.marginal is not None:
        dec = asymmetry.AsymmetryDecomposition(
            depth=len(_parse_sequence(args.outer)) if args.outer else 0,
            c=args.marginal,
            core=_parse_sequence(args.core) if args.core else (),
            pivot=args.pivot,
            outer=_parse_sequence(args.outer) if args.outer else ())
        q = asymmetry.compose(dec)
        return _Result(_seq_str(q), {"quotients": list(q)})
    if args.sequence is None:
        raise DomainError("type needs a SEQUENCE, or --marginal/--core/--sigma, "
                          "or --marginal/--core/--pivot/--outer")
    q = _parse_sequence(args.sequence)
    dec = asymmetry.decompose(q)
    payload = {"depth": dec.depth, "marginal": dec.c, "core": list(dec.core),
               "pivot": dec.pivot, "outer": list(dec.outer), "sigma": dec.sigma}
    if dec.c != 0:
        payload["value"] = asymmetry.type_value(asymmetry.extended_type(dec))
    else:
        payload["value"] = 0
    text = (f"depth={dec.depth} marginal={dec.c} core={_seq_str(dec.core)} "
            f"pivot={dec.pivot} sigma={dec.sigma} value={payload['value']}")
    return _Result(text, payload)


def _cmd_enumerate(args) -> _Result:
    catalog = asymmetry.enumerate_types(args.n, args.parity)
    if args.coarse:
        rows = [{"marginal": c, "core": list(core)} for c, core in catalog.coarse_pairs()]
        rows += [{"marginal": f.c, "core": f.display_core()}
                 for f in catalog.coarse_families()]
        lines = [f"{r['marginal']} ; {r['core'] if isinstance(r['core'], str) else _seq_str(r['core'])}"
                 for r in rows]
        csv_text = "marginal,core\n" + "".join(
            f"{r['marginal']},{(r['core'] if isinstance(r['core'], str) else _seq_str(r['core'])).replace(',', '.')}\n"
            for r in rows)
        return _Result("\n".join(lines), {"target": args.n, "coarse": rows}, csv_text)
    rows = [{"marginal": t.c, "core": list(t.core), "sigma": t.sigma}
            for t in catalog.members()]
    rows += [{"marginal": f.c, "core": f.display_core(), "sigma": f.sigma}
             for f in catalog.family_members()]
    lines = [f"{r['marginal']} ; {r['core'] if isinstance(r['core'], str) else _seq_str(r['core'])} ; {r['sigma']}"
             for r in rows]
    csv_text = "marginal,core,sigma\n" + "".join(
        f"{r['marginal']},{(r['core'] if isinstance(r['core'], str) else _seq_str(r['core'])).replace(',', '.')},{r['sigma']}\n"
        for r in rows)
    return _Result("\n".join(lines), {"target": args.n, "types": rows}, csv_text)


def _cmd_solve(args) -> _Result:
    spec = congruence.CongruenceSpec(args.n, args.s)
    roots = congruence.solve_quadratic(spec, args.alpha)
    return _Result(_seq_str(roots) if roots else "",
                   {"alpha": args.alpha, "roots": roots},
                   "root\n" + "".join(f"{r}\n" for r in roots))


def _cmd_exceptional(args) -> _Result:
    spec = congruence.CongruenceSpec(args.n, args.s)
    if args.true_exceptions:
        pairs = congruence.true_exceptions(spec, include_negated=not args.single_sign)
        text = " ".join(f"({a},{b})" for a, b in pairs)
        return _Result(text, {"pairs": [list(p) for p in pairs]},
                       "alpha,beta\n" + "".join(f"{a},{b}\n" for a, b in pairs))
    if args.pairs:
        pairs = congruence.candidate_pairs(spec, include_negated=not args.single_sign)
        text = " ".join(f"({a},{b})" for a, b in pairs)
        return _Result(text, {"pairs": [list(p) for p in pairs]},
                       "alpha,beta\n" + "".join(f"{a},{b}\n" for a, b in pairs))
    cands = congruence.exceptional_candidates(spec)
    if args.certificates:
        payload = {str(m): [{"condition": c.condition, "witness": c.witness}
                            for c in certs]
                   for m, certs in cands.items()}
        text = "\n".join(
            f"{m}: " + "; ".join(
                c.condition + (f"({c.witness})" if c.witness is not None else "")
                for c in certs)
            for m, certs in cands.items())
        return _Result(text, payload)
    moduli = list(cands)
    return _Result(_seq_str(moduli), {"moduli": moduli},
                   "modulus\n" + "".join(f"{m}\n" for m in moduli))


def _cmd_folded(args) -> _Result:
    params = congruence.FoldedParams(args.b, args.n, args.a, args.eps)
    normalized = congruence.folded_normalize(params)
    if args.normalize_only:
        payload = {"b": normalized.b, "n": normalized.n, "a": normalized.a,
                   "epsilon": normalized.epsilon}
        return _Result(f"b={normalized.b} n={normalized.n} a={normalized.a} "
                       f"eps={normalized.epsilon:+d}", payload)
    seq, form = congruence.folded_expand_classify(normalized)
    payload = {"alpha": normalized.alpha, "beta": normalized.beta,
               "quotients": list(seq), "form": form.form, "x": form.x,
               "pivot": form.pivot}
    return _Result(f"{_seq_str(seq)} form={form.form} x={form.x} pivot={form.pivot}",
                   payload)


def _report_result(report) -> _Result:
    payload = report.to_dict()
    lines = [f"checked={report.checked} matches={report.matches} "
             f"violations={len(report.violations)}"]
    for v in report.violations[:20]:
        lines.append(f"  violation {v.kind}: alpha={v.alpha} beta={v.beta} "
                     f"expansion={_seq_str(v.expansion) if v.expansion else '-'}")
    for c in report.coarse_counterexamples:
        lines.append(f"  coarse {c.direction}: alpha={c.alpha} beta={c.beta} "
                     f"type=({c.marginal};{_seq_str(c.core)})")
    csv_text = "kind,alpha,beta,expansion\n" + "".join(
        f"{v.kind},{v.alpha},{v.beta},{_seq_str(v.expansion).replace(',', '.') if v.expansion else ''}\n"
        for v in report.violations)
    code = VIOLATION_EXIT if report.violations else 0
    return _Result("\n".join(lines), payload, csv_text, exit_code=code)


def _cmd_verify(args) -> _Result:
    if args.suite == "identities":
        report = verifier.verify_identities(args.alpha_max, trials=args.trials,
                                            seed=args.seed)
    else:
        spec = congruence.CongruenceSpec(args.n, args.s)
        report = verifier.verify_main_theorem(spec, args.alpha_max, mode=args.mode)
    return _report_result(report)


def _cmd_table(args) -> _Result:
    doc = verifier.build_table(args.n_max)
    payload = {
        "n_max": doc.n_max,
        "rows": [{"value": r.value, "parity": r.parity,
                  "entries": [{"marginal": e.marginal, "core": e.core}
                              for e in r.entries],
                  "exceptions": [list(p) for p in r.exceptions]}
                 for r in doc.rows],
    }
    return _Result(doc.to_text().rstrip("\n"), payload, doc.to_csv())


def build_parser() -> _Parser:
    parser = _Parser(prog="cfasym",
                     description="Exact continued-fraction asymmetry toolkit")
    parser.add_argument("--format", choices=_FORMATS, default=None,
                        help="output format (default: $CFASYM_FORMAT or text)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="expand alpha/beta into quotients")
    p.add_argument("alpha", type=int, nargs="?")
    p.add_argument("beta", type=int, nargs="?")
    p.add_argument("--parity", choices=("conv", "even", "odd"), default="conv")
    p.add_argument("--predict-parity", action="store_true",
                   help="predict the selected length parity from the inverse of beta")
    p.add_argument("--from-quotients", metavar="SEQ",
                   help="evaluate a quotient sequence back to alpha/beta")
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("continuant", help="continuant of a sequence or range")
    p.add_argument("sequence", nargs="?")
    p.add_argument("--i", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--fib", type=int, help="return the k-th Fibonacci number")
    p.add_argument("--euler", metavar="K,L,M,N",
                   help="residual of the continuant product identity")
    p.set_defaults(func=_cmd_continuant)

    p = sub.add_parser("anticont", help="anticontinuant of a sequence or range")
    p.add_argument("sequence")
    p.add_argument("--i", type=int)
    p.add_argument("--j", type=int)
    p.set_defaults(func=_cmd_anticont)

    p = sub.add_parser("type", help="decompose a sequence, or compose/value a type")
    p.add_argument("sequence", nargs="?")
    p.add_argument("--marginal", type=int)
    p.add_argument("--core", default="")
    p.add_argument("--sigma", choices=("even", "odd"))
    p.add_argument("--pivot", type=int)
    p.add_argument("--outer", default="")
    p.set_defaults(func=_cmd_type)

    p = sub.add_parser("enumerate", help="all extended types achieving a value")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--parity", choices=("even", "odd", "both"), default="both")
    p.add_argument("--coarse", action="store_true",
                   help="print the sigma-even slice without sigma")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("solve", help="roots of x^2 + nx + (-1)^s mod alpha")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, choices=(0, 1), required=True)
    p.add_argument("--alpha", type=int, required=True)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("exceptional", help="certified exceptional moduli and pairs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, choices=(0, 1), required=True)
    p.add_argument("--pairs", action="store_true",
                   help="solved pairs over the exceptional moduli")
    p.add_argument("--true-exceptions", action="store_true",
                   help="pairs whose expansions never reach the target value")
    p.add_argument("--single-sign", action="store_true",
                   help="use only the given sign of n, not both")
    p.add_argument("--certificates", action="store_true")
    p.set_defaults(func=_cmd_exceptional)

    p = sub.add_parser("folded", help="normalize and classify b*n^2/(b*a*n - eps)")
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--eps", type=int, choices=(1, -1), default=1)
    p.add_argument("--normalize-only", action="store_true")
    p.set_defaults(func=_cmd_folded)

    p = sub.add_parser("verify", help="run a verification sweep")
    vsub = p.add_subparsers(dest="suite", required=True)
    pi = vsub.add_parser("identities", help="identity sweep over coprime pairs")
    pi.add_argument("--alpha-max", type=int, default=500)
    pi.add_argument("--trials", type=int, default=10000)
    pi.add_argument("--seed", type=int, default=0)
    pi.set_defaults(func=_cmd_verify, suite="identities")
    pm = vsub.add_parser("main", help="roots versus typed expansions per modulus")
    pm.add_argument("--n", type=int, required=True)
    pm.add_argument("--s", type=int, choices=(0, 1), required=True)
    pm.add_argument("--alpha-max", type=int, default=2000)
    pm.add_argument("--mode", choices=("refined", "coarse"), default="refined")
    pm.set_defaults(func=_cmd_verify, suite="main")

    p = sub.add_parser("table", help="types and true exceptions for values 1..n_max")
    p.add_argument("--n-max", type=int, default=6)
    p.set_defaults(func=_cmd_table)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_EXIT

    fmt = args.format or os.environ.get("CFASYM_FORMAT", "text")
    if fmt not in _FORMATS:
        print(f"cfasym: error: bad CFASYM_FORMAT {fmt!r}", file=sys.stderr)
        return USAGE_EXIT

    try:
        result = args.func(args)
    except DomainError as exc:
        print(f"cfasym: domain error: {exc}", file=sys.stderr)
        return DOMAIN_EXIT

    if fmt == "json":
        print(json.dumps(result.payload, sort_keys=True))
    elif fmt == "csv":
        if result.csv_text is None:
            print("cfasym: error: csv output is not available for this subcommand",
                  file=sys.stderr)
            return USAGE_EXIT
        sys.stdout.write(result.csv_text)
    else:
        print(result.text)
    return result.exit_code


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
