"""Command-line front end.

    lrough --input cov.json approx --pair 1 --dir lower --target X --via both
    lrough --input cov.json reduct --format table
    lrough axioms check --counterexample e4-6

Exit codes: 0 success, 2 parse or validation error, 3 domain error,
4 internal invariant violation (direct and matrix evaluation disagree).
"""

from __future__ import annotations

import argparse
import sys

from . import io as lio
from .approx import OPERATORS
from .axioms import (
    BASIC_AXIOMS,
    THEOREMS,
    OperatorTable,
    check_axiom,
    check_duality,
    counterexample,
    counterexample_names,
    lattice_meets,
    round_trip,
)
from .covering import max_beta, relation_sym
from .errors import DomainError, InvariantViolation, LRoughError, ParseError
from .lmatrix import approx_via_matrix, m_covering
from .reduction import core, reduct

EXIT_OK, EXIT_PARSE, EXIT_DOMAIN, EXIT_INVARIANT = 0, 2, 3, 4
JSON_DIGITS, TABLE_DIGITS = 9, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def _global_flags(p, suppress):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--input", "-i", default=d(None), help="covering file (.json or .csv)")
    p.add_argument("--format", "-f", choices=("json", "table", "csv"), default=d("json"))
    p.add_argument("--tolerance", type=float, default=d(None),
                   help="equality tolerance for unit-interval lattices")
    p.add_argument("--beta", default=d(None), help="override the file's beta")
    p.add_argument("--lattice", default=d(None),
                   help="lattice for CSV input: preset name, kind:n, or JSON descriptor")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lrough", description="Lattice-valued covering-based rough approximations.")
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def cmd(name, help_):
        p = sub.add_parser(name, help=help_)
        _global_flags(p, suppress=True)
        return p

    cmd("validate", "check that the file describes a beta-covering")

    p = cmd("approx", "evaluate one approximation operator")
    p.add_argument("--pair", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--dir", dest="direction", choices=("lower", "upper"), required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--via", choices=("direct", "matrix", "both"), default="direct")

    cmd("reduct", "drop members that are joins of other members")
    cmd("core", "drop members that are meets of other members")

    p = cmd("relation", "print the relation induced by the covering")
    p.add_argument("kind", choices=("arrow", "sym"))

    p = cmd("matrix", "matrix views of the covering")
    p.add_argument("action", choices=("dump",))
    p.add_argument("--which", choices=("covering", "relation", "target"), default="covering")
    p.add_argument("--target", default=None)

    p = cmd("axioms", "exhaustive axiom checks on finite instances")
    p.add_argument("action", choices=("check",))
    p.add_argument("--counterexample", default=None, choices=None,
                   help="one of: " + ", ".join(counterexample_names()))
    p.add_argument("--pair", type=int, choices=(1, 2, 3), default=None)
    p.add_argument("--dir", dest="direction", choices=("lower", "upper"), default=None)
    p.add_argument("--no-round-trip", action="store_true",
                   help="skip reconstructing a covering from the operator")

    p = cmd("duality", "check the duality between the lower and upper operators")
    p.add_argument("--pair", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--target", default=None, help="default: every target in the file")
    return parser


# ---------------------------------------------------------------- loading


def _load(args):
    if not args.input:
        raise ParseError(f"{args.command} needs --input")
    lattice = lio.parse_lattice_arg(args.lattice, args.tolerance) if args.lattice else None
    prob = lio.load_problem(args.input, eq_tolerance=args.tolerance, lattice=lattice)
    if args.beta is not None:
        try:
            prob.beta = prob.lattice.parse(args.beta)
        except DomainError as exc:
            raise ParseError(f"--beta: {exc}") from None
    return prob


def _vec(L, U, values, digits):
    return {x: L.format(v, digits) for x, v in zip(U.labels, values)}


# ---------------------------------------------------------------- commands


def _validate(args, out):
    prob = _load(args)
    C = prob.covering()
    L = C.lattice
    report = {
        "valid": True,
        "beta": L.format(C.beta, JSON_DIGITS),
        "max_beta": L.format(max_beta(C.members), JSON_DIGITS),
        "members": list(C.names),
        "universe": list(C.universe.labels),
        "duplicates": [list(p) for p in C.duplicates],
    }
    if args.format == "table":
        out.write(f"valid beta-covering: beta={L.format(C.beta, TABLE_DIGITS)} "
                  f"(largest admissible {L.format(max_beta(C.members), TABLE_DIGITS)})\n")
        out.write(f"members: {', '.join(C.names)}\n")
        for a, b in C.duplicates:
            out.write(f"duplicate: {b} repeats {a}\n")
    else:
        out.write(lio.dump_json(report))
    return EXIT_OK


def _approx(args, out):
    prob = _load(args)
    C = prob.covering()
    X = prob.target(args.target)
    L, U = C.lattice, C.universe
    results = {}
    if args.via in ("direct", "both"):
        results["direct"] = OPERATORS[(args.pair, args.direction)](C, X)
    if args.via in ("matrix", "both"):
        results["matrix"] = approx_via_matrix(C, X, args.pair, args.direction)
    main = results.get("direct", results.get("matrix"))
    status = EXIT_OK
    if args.via == "both" and results["direct"] != results["matrix"]:
        status = EXIT_INVARIANT
    if args.format == "json":
        report = {"pair": args.pair, "direction": args.direction, "target": args.target,
                  "via": args.via, "result": _vec(L, U, main.values, JSON_DIGITS)}
        if args.via == "both":
            report["matrix"] = _vec(L, U, results["matrix"].values, JSON_DIGITS)
            report["agree"] = status == EXIT_OK
        out.write(lio.dump_json(report))
    else:
        names = list(results)
        rows = [[results[k].values[i] for k in names] for i in range(len(U))]
        cols = [f"{args.direction}{args.pair}({args.target})" + ("" if len(names) == 1 else f" {k}")
                for k in names]
        if args.format == "csv":
            out.write(lio.matrix_csv(L, U.labels, cols, rows, digits=JSON_DIGITS))
        else:
            out.write(lio.matrix_table(L, U.labels, cols, rows, digits=TABLE_DIGITS))
    if status != EXIT_OK:
        raise InvariantViolation(f"direct and matrix evaluation disagree for "
                                 f"{args.direction}{args.pair}({args.target})")
    return status


def _reduction(args, out):
    prob = _load(args)
    C = prob.covering()
    rep = reduct(C) if args.command == "reduct" else core(C)
    if args.format == "json":
        out.write(lio.dump_json(rep.to_dict(JSON_DIGITS)))
    elif args.format == "csv":
        out.write("removed,witnesses\n")
        for name, w in rep.removed.items():
            out.write(f"{name},{' '.join(w)}\n")
    else:
        join = "join" if rep.kind == "reduct" else "meet"
        if not rep.removed:
            out.write(f"{rep.kind}: nothing removed\n")
        for name, w in rep.removed.items():
            out.write(f"removed {name} = {join} of {{{', '.join(w)}}}\n")
        out.write(f"surviving: {', '.join(rep.surviving)}\n")
    return EXIT_OK


def _emit_matrix(args, out, L, rows_l, cols_l, rows, corner=""):
    if args.format == "table":
        out.write(lio.matrix_table(L, rows_l, cols_l, rows, digits=TABLE_DIGITS))
    elif args.format == "csv":
        out.write(lio.matrix_csv(L, rows_l, cols_l, rows, corner=corner, digits=JSON_DIGITS))
    else:
        out.write(lio.dump_json({
            "rows": list(rows_l),
            "cols": list(cols_l),
            "matrix": [[L.format(v, JSON_DIGITS) for v in r] for r in rows],
        }))


def _relation(args, out):
    prob = _load(args)
    C = prob.covering()
    M = C.arrow if args.kind == "arrow" else relation_sym(C)
    labels = C.universe.labels
    _emit_matrix(args, out, C.lattice, labels, labels, M.to_rows())
    return EXIT_OK


def _matrix(args, out):
    """Matrices in a form the CLI reads back.

    json and csv dumps of the covering are themselves covering files, so
    dumping the re-ingested file reproduces the same bytes.
    """
    prob = _load(args)
    L, U = prob.lattice, prob.universe
    if args.which == "covering":
        C = prob.covering()
        M = m_covering(C)
        if args.format == "json":
            doc = C.to_dict(JSON_DIGITS)
            if prob.targets:
                doc["targets"] = {k: [L.format(v, JSON_DIGITS) for v in X.values]
                                  for k, X in prob.targets.items()}
            out.write(lio.dump_json(doc))
            return EXIT_OK
        _emit_matrix(args, out, L, U.labels, C.names, M.to_rows())
    elif args.which == "relation":
        C = prob.covering()
        _emit_matrix(args, out, L, U.labels, U.labels, C.arrow.to_rows())
    else:
        if args.target is None:
            raise ParseError("matrix dump --which target needs --target")
        X = prob.target(args.target)
        _emit_matrix(args, out, L, U.labels, [args.target], [[v] for v in X.values])
    return EXIT_OK


def _verdicts(g, beta, axioms):
    U, L = g.universe, g.lattice
    out = {}
    for a in axioms:
        v = check_axiom(g, beta, a)
        out[a] = {"holds": v.holds, "witness": v.describe(U, L)}
    return out


def _axioms(args, out):
    if args.counterexample is not None:
        ce = counterexample(args.counterexample)
        g, beta, (pair, direction) = ce.table, ce.beta, ce.pair
        source = {"counterexample": ce.name, "expected_failure": ce.fails}
    else:
        if args.pair is None or args.direction is None:
            raise ParseError("axioms check needs --counterexample or --pair and --dir")
        prob = _load(args)
        C = prob.covering()
        pair, direction, beta = args.pair, args.direction, C.beta
        g = OperatorTable.from_covering(C, pair, direction)
        source = {"input": str(args.input)}
    L = g.lattice
    theorem_axioms, reqs = THEOREMS[(pair, direction)]
    strict = "L3<" if direction == "lower" else "U3>"
    report = dict(source)
    report.update({
        "pair": pair,
        "direction": direction,
        "beta": L.format(beta),
        "theorem_axioms": list(theorem_axioms),
        "lattice_requirements": list(reqs),
        "lattice_requirements_unmet": lattice_meets(L, reqs),
        "verdicts": _verdicts(g, beta, list(theorem_axioms) + [strict]),
    })
    report["satisfied"] = [a for a in theorem_axioms if report["verdicts"][a]["holds"]]
    report["failed"] = [a for a in theorem_axioms if not report["verdicts"][a]["holds"]]
    others = [a for a in BASIC_AXIOMS if a not in theorem_axioms]
    report["other_axioms_holding"] = [a for a in others if check_axiom(g, beta, a).holds]
    if args.counterexample is None and not args.no_round_trip and not report["failed"] \
            and not report["lattice_requirements_unmet"]:
        ok, Crec, diff = round_trip(g, beta, pair, direction)
        report["round_trip"] = {
            "ok": ok,
            "covering": None if Crec is None else {n: [L.format(v) for v in m.values]
                                                    for n, m in Crec.items()},
            "first_difference": None if diff is None else (
                diff if isinstance(diff, str) else [L.format(v) for v in diff]),
        }
    if args.format == "json":
        out.write(lio.dump_json(report))
    else:
        out.write(f"{direction}{pair} beta={L.format(beta)}\n")
        for a, v in report["verdicts"].items():
            mark = "holds" if v["holds"] else f"FAILS at {v['witness']}"
            out.write(f"  {a}: {mark}\n")
        if report["lattice_requirements_unmet"]:
            out.write(f"  lattice is not {' and '.join(report['lattice_requirements_unmet'])}\n")
        if "round_trip" in report:
            out.write(f"  round trip: {'ok' if report['round_trip']['ok'] else 'FAILED'}\n")
    return EXIT_OK


def _duality(args, out):
    prob = _load(args)
    C = prob.covering()
    names = [args.target] if args.target else list(prob.targets)
    if not names:
        raise ParseError("duality needs a target; the file defines none")
    report = {"pair": args.pair, "targets": {}}
    for name in names:
        v = check_duality(C, prob.target(name), args.pair)
        report["targets"][name] = {"holds": v.holds, "witness": v.witness}
    report["holds"] = all(t["holds"] for t in report["targets"].values())
    if args.format == "json":
        out.write(lio.dump_json(report))
    else:
        for name, t in report["targets"].items():
            out.write(f"{name}: {'holds' if t['holds'] else 'FAILS ' + str(t['witness'])}\n")
    return EXIT_OK


COMMANDS = {
    "validate": _validate,
    "approx": _approx,
    "reduct": _reduction,
    "core": _reduction,
    "relation": _relation,
    "matrix": _matrix,
    "axioms": _axioms,
    "duality": _duality,
}


def run(argv=None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except ParseError as exc:
        err.write(f"lrough: parse error: {exc}\n")
        return EXIT_PARSE
    except InvariantViolation as exc:
        err.write(f"lrough: invariant violation: {exc}\n")
        return EXIT_INVARIANT
    except DomainError as exc:
        err.write(f"lrough: {type(exc).__name__}: {exc}\n")
        return EXIT_DOMAIN
    except (ValueError, LRoughError) as exc:
        err.write(f"lrough: invalid input: {exc}\n")
        return EXIT_PARSE


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
