"""Command-line front end.

    qhs hp --matrix m.json [--method formula|graph] [--q1] [--flat] [--json]
    qhs braid --in b.json [--emit-matrix]
    qhs graphpoly (--signed g.json | --weighted g.json) --method M [--order lex|id|random:SEED]
    qhs recover (--hp TEXT | --w1 TEXT --lk INT [--n N])
    qhs convert (--r TEXT | --p TEXT) --components K --to homflypt|dichromatic
    qhs qlie --form F.json (--bracket "g;h" | --normalize w.json --mode M | --jacobi --random N --seed S)
    qhs verify (--matrix m.json | --graph g.json | --batch --seed S --count N [--out DIR])
    qhs selftest

Exit status: 0 success, 1 failed verification, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import dichromatic, homfly, linkhp, qlie, sgraph, youngdual
from .polyring import HomflyPoly, HPoly, QLaurent, parse, render, render_grouped
from .verify import batch_verify, check_graph, check_matrix

MODE_NAMES = {"symq": "sym_q", "envq": "env_q", "envqz": "env_qz"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except FileNotFoundError:
        raise UsageError(f"no such file: {path}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def _emit(out, text: str) -> None:
    out.write(text + "\n")


def _dump(out, data) -> None:
    _emit(out, json.dumps(data, sort_keys=True))


def _show_hp(p: HPoly, flat: bool) -> str:
    return render(p) if flat else render_grouped(p)


# ----------------------------------------------------------------------
# commands


def cmd_hp(args, out) -> int:
    m = linkhp.load_matrix(_read_json(args.matrix))
    if args.q1:
        p = linkhp.hp_q1(m)
    elif args.method == "graph":
        p = linkhp.hp_via_dichromatic(m)
    else:
        p = linkhp.homotopy_polynomial(m)
    if args.json:
        w = [render(linkhp.coefficient_w(p, k)) for k in range(m.n)]
        _dump(out, {"n": m.n, "hp": render(p), "w": w})
    else:
        _emit(out, _show_hp(p, args.flat))
    return 0


def cmd_braid(args, out) -> int:
    b = linkhp.load_braid(_read_json(args.input))
    m = linkhp.braid_to_linking_matrix(b)
    if args.emit_matrix:
        _dump(out, m.to_json())
        return 0
    p = linkhp.homotopy_polynomial(m)
    if args.json:
        _dump(out, {"n": m.n, "matrix": m.to_json()["matrix"], "hp": render(p)})
    else:
        _emit(out, _show_hp(p, args.flat))
    return 0


def cmd_graphpoly(args, out) -> int:
    if args.signed:
        g = sgraph.load_graph(_read_json(args.signed), "signed")
        method = args.method or "recursion"
        if method == "recursion":
            p = dichromatic.R_recursive(g)
        elif method == "statesum":
            p = dichromatic.R_statesum(g)
        elif method == "doubled":
            p = dichromatic.R2_recursive(sgraph.double(g))
        else:
            raise UsageError(f"method {method!r} needs --weighted (signed graphs take recursion|statesum|doubled)")
    else:
        g = sgraph.load_graph(_read_json(args.weighted), "weighted")
        method = args.method or "recursion"
        if method == "recursion":
            p = dichromatic.R1_recursive(g)
        elif method in ("tree", "forest"):
            order = sgraph.EdgeOrder.from_spec(args.order, g)
            fn = dichromatic.R1_tree_expansion if method == "tree" else dichromatic.R1_forest_expansion
            p = fn(g, order)
        else:
            raise UsageError(f"method {method!r} needs --signed (weighted graphs take recursion|tree|forest)")
    if args.json:
        _dump(out, {"method": method, "poly": render(p)})
    else:
        _emit(out, _show_hp(p, args.flat))
    return 0


def cmd_recover(args, out) -> int:
    if args.hp is not None:
        if args.lk is not None or args.n is not None:
            raise UsageError("--lk and --n go with --w1, not --hp")
        rec = youngdual.recover_linking(parse(args.hp, HPoly))
    else:
        if args.lk is None:
            raise UsageError("--w1 needs --lk")
        rec = youngdual.recover_from_w1(parse(args.w1, QLaurent), args.lk, args.n)
    _dump(out, rec.to_json())
    return 0


def cmd_convert(args, out) -> int:
    m = args.components - 1
    if m < 0:
        raise UsageError("--components must be at least 1")
    if args.to == "homflypt":
        if args.r is None:
            raise UsageError("--to homflypt converts an R polynomial given with --r")
        result = homfly.r_to_homflypt(parse(args.r, HPoly), m)
        _emit(out, render(result))
    else:
        if args.p is None:
            raise UsageError("--to dichromatic converts a HOMFLYPT polynomial given with --p")
        result = homfly.homflypt_to_r(parse(args.p, HomflyPoly), m)
        _emit(out, render_grouped(result) if not args.flat else render(result))
    return 0


def _parse_vector(text: str) -> tuple[int, ...]:
    text = text.strip().strip("()[]")
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"bad vector {text!r}; expected comma-separated integers") from None


def cmd_qlie(args, out) -> int:
    F = qlie.load_form(_read_json(args.form))
    if args.bracket is not None:
        parts = args.bracket.split(";")
        if len(parts) != 2:
            raise UsageError('--bracket expects "g;h", e.g. "1,0;0,1"')
        g, h = (_parse_vector(p) for p in parts)
        result = qlie.qbracket_lie(qlie.GroupAlgElem.basis(g), qlie.GroupAlgElem.basis(h), F)
        if args.json:
            _dump(out, result.to_json())
        else:
            _emit(out, qlie.render_group_elem(result))
        return 0
    if args.normalize is not None:
        words = qlie.load_words(_read_json(args.normalize))
        result = qlie.normal_form(words, F, MODE_NAMES[args.mode])
        if args.json:
            _dump(out, qlie.dump_words(result))
        else:
            _emit(out, qlie.render_words(result))
        return 0
    # --jacobi
    rng = random.Random(args.seed)
    failures = 0
    for _ in range(args.random):
        x, y, z = (qlie.GroupAlgElem.basis(qlie.random_vector(F.r, rng)) for _ in range(3))
        if qlie.jacobi_defect(x, y, z, F):
            failures += 1
    summary = {"triples": args.random, "seed": args.seed, "nonzero_defects": failures}
    if args.json:
        _dump(out, summary)
    else:
        _emit(out, f"jacobi: {args.random - failures}/{args.random} triples with zero defect")
    return 1 if failures else 0


def cmd_verify(args, out) -> int:
    if args.batch:
        report = batch_verify(args.seed, args.count, args.out)
        _emit(out, json.dumps(report, sort_keys=True))
        return 0 if report["passed"] else 1
    if args.matrix:
        results = check_matrix(linkhp.load_matrix(_read_json(args.matrix)), seed=args.seed)
    else:
        results = check_graph(sgraph.load_graph(_read_json(args.graph), "signed"), seed=args.seed)
    if args.json:
        _dump(out, {"checks": [{"name": n, "ok": ok} for n, ok in results], "passed": all(ok for _, ok in results)})
    else:
        for name, ok in results:
            _emit(out, f"{'PASS' if ok else 'FAIL'} {name}")
    return 0 if all(ok for _, ok in results) else 1


def _selftest_cases():
    L2 = linkhp.LinkingMatrix.from_pairs(3, {(0, 1): 2, (0, 2): 3, (1, 2): -2})
    L1 = linkhp.LinkingMatrix.from_pairs(3, {(0, 1): 4, (0, 2): -1})
    hp = lambda m: linkhp.homotopy_polynomial(m)  # noqa: E731
    yield "HP of (2, 3, -2)", render(hp(L2)) == render(parse(
        "q^6 t^3 + (q + 2q^3 + 2q^5 - q^7 - q^9) z t^2 - (q^4 + 2q^6 + q^8) z^2 t"))
    yield "HP of (4, -1, 0)", hp(L1) == parse("q^6 t^3 + (q^-1 + q + q^3 + q^5 - q^7) z t^2 - (1 + q^2 + q^4 + q^6) z^2 t")
    yield "w1 of (2, 3, -2)", youngdual.w1_from_linking(L2) == parse("q + 2q^3 + 2q^5 - q^7 - q^9", QLaurent)
    rec = youngdual.recover_from_w1(parse("-q^3 - q + 2q^-1", QLaurent), 0)
    yield "decode w1 = -q^3 - q + 2q^-1", dict(rec.nonzero) == {1: 2, -2: 1}
    path = linkhp.LinkingMatrix.from_pairs(4, {(0, 1): 1, (1, 2): 1, (2, 3): 1})
    star = linkhp.LinkingMatrix.from_pairs(4, {(0, 1): 1, (0, 2): 1, (0, 3): 1})
    expect = parse("t") * parse("q^2 t + q z") ** 3
    yield "unit-weight path and star trees", hp(path) == expect == hp(star)
    yield "positive Hopf link HOMFLYPT", homfly.r_to_homflypt(parse("q^2 t^2 + q z t"), 1) == parse("(v - v^3) z^-1 + v z", HomflyPoly)


def cmd_selftest(args, out) -> int:
    ok_all = True
    for name, ok in _selftest_cases():
        ok_all &= ok
        _emit(out, f"{'PASS' if ok else 'FAIL'} {name}")
    return 0 if ok_all else 1


# ----------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qhs", description="Homotopy polynomials of links and related graph polynomials.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("hp", help="homotopy polynomial of a linking matrix")
    p.add_argument("--matrix", required=True)
    p.add_argument("--method", choices=("formula", "graph"), default="formula")
    p.add_argument("--q1", action="store_true", help="q = 1 specialisation")
    p.add_argument("--flat", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_hp)

    p = sub.add_parser("braid", help="linking matrix / HP of a closed braid")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--emit-matrix", action="store_true")
    p.add_argument("--flat", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_braid)

    p = sub.add_parser("graphpoly", help="dichromatic polynomial of a graph")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--signed")
    src.add_argument("--weighted")
    p.add_argument("--method", choices=("recursion", "statesum", "doubled", "tree", "forest"))
    p.add_argument("--order", default="lex")
    p.add_argument("--flat", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_graphpoly)

    p = sub.add_parser("recover", help="linking numbers from HP or from w1")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--hp")
    src.add_argument("--w1")
    p.add_argument("--lk", type=int)
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_recover)

    p = sub.add_parser("convert", help="R(G) <-> HOMFLYPT of the matched diagram")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--r")
    src.add_argument("--p")
    p.add_argument("--components", type=int, required=True)
    p.add_argument("--to", choices=("homflypt", "dichromatic"), required=True)
    p.add_argument("--flat", action="store_true")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("qlie", help="q-Lie bracket, q-PBW normal forms, Jacobi check")
    p.add_argument("--form", required=True)
    act = p.add_mutually_exclusive_group(required=True)
    act.add_argument("--bracket")
    act.add_argument("--normalize")
    act.add_argument("--jacobi", action="store_true")
    p.add_argument("--mode", choices=tuple(MODE_NAMES), default="envqz")
    p.add_argument("--random", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_qlie)

    p = sub.add_parser("verify", help="run every cross-oracle check")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--matrix")
    src.add_argument("--graph")
    src.add_argument("--batch", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--out")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("selftest", help="reproduce the reference values")
    p.set_defaults(func=cmd_selftest)
    return parser


def run(argv, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(list(argv))
        return args.func(args, out)
    except (UsageError, ValueError, IndexError, KeyError) as exc:
        msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        err.write(f"qhs: error: {msg}\n")
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
