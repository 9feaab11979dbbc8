"""Command-line front end: ``pasep2 <command> ...``.

Exit status is 0 on success, 1 when backends disagree or a check fails, and 2
on invalid input. Failures print a JSON error object on stdout.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import ansatz, bijections, chain, histories, permutations, states, suites, worked_examples
from .histories import History
from .permutations import PSP
from .qseries import QPoly, parse_rational

OUTPUT_DIR_ENV = "PASEP2_OUTPUT_DIR"
BACKENDS = ("ansatz", "paths", "perms")


class UsageError(Exception):
    pass


class Disagreement(Exception):
    def __init__(self, message: str, details=None):
        super().__init__(message)
        self.details = details


@dataclass
class Result:
    data: dict
    rows: list[dict] = field(default_factory=list)
    text: str = ""
    status: int = 0


def _frac(x: Fraction) -> dict:
    return {"fraction": str(x), "decimal": float(x)}


def _poly(p: QPoly) -> dict:
    return {"coeffs": p.to_json(), "text": str(p)}


def _q(args) -> Fraction:
    try:
        q = parse_rational(args.q)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not 0 <= q <= 1:
        raise UsageError(f"q must lie in [0, 1], got {q}")
    return q


def _word(args) -> str:
    """ADE word from ``--word`` or ``--state``."""
    try:
        if getattr(args, "word", None):
            return states.check_ade(args.word)
        if getattr(args, "state", None):
            return states.ade_of_state(args.state)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    raise UsageError("give --word or --state")


def _nr(args) -> tuple[int, list[int]]:
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    if args.r is None:
        return args.n, list(range(args.n + 1))
    if not 0 <= args.r <= args.n:
        raise UsageError(f"need 0 <= r <= n, got n={args.n}, r={args.r}")
    return args.n, [args.r]


def cmd_prob(args) -> Result:
    X = _word(args)
    q = _q(args)
    N, r = len(X), X.count("A")
    if N == 0:
        raise UsageError("empty state")
    x = states.state_of_ade(X)
    try:
        pi_chain = chain.stationary_exact(chain.build_chain(N, r, q))[x]
    except chain.Reducible as exc:
        raise Disagreement(str(exc), {"closed_classes": exc.classes}) from None
    vals = {
        "chain": pi_chain,
        "ansatz": ansatz.z_poly_ansatz(X)(q) / ansatz.z_total_ansatz(N, r)(q),
        "paths": histories.z_poly_paths(X)(q) / histories.z_total_paths(N, r)(q),
    }
    agree = len(set(vals.values())) == 1
    data = {
        "state": x,
        "word": X,
        "N": N,
        "r": r,
        "q": str(q),
        "backends": {k: _frac(v) for k, v in vals.items()},
        "agree": agree,
    }
    if agree:
        data["probability"] = _frac(pi_chain)
    rows = [{"backend": k, "fraction": str(v), "decimal": float(v)} for k, v in vals.items()]
    text = "\n".join(f"{k:7s} {v}" for k, v in vals.items())
    if agree:
        text = f"P({x}) = {pi_chain} ~ {float(pi_chain):.12g}\n" + text
    if not agree:
        raise Disagreement("backends disagree", data)
    return Result(data, rows, text)


def _compare(polys: dict[str, QPoly], what: str) -> QPoly:
    if len(set(polys.values())) != 1:
        raise Disagreement(f"backends disagree on {what}", {k: _poly(v) for k, v in polys.items()})
    return next(iter(polys.values()))


def cmd_zpoly(args) -> Result:
    X = _word(args)
    fns = {"ansatz": ansatz.z_poly_ansatz, "paths": histories.z_poly_paths, "perms": permutations.z_poly_perms}
    names = BACKENDS if args.backend == "all" else (args.backend,)
    p = _compare({b: fns[b](X) for b in names}, f"Z_{X}")
    data = {"word": X, "state": states.state_of_ade(X), "backends": list(names), "z": _poly(p)}
    rows = [{"k": k, "coeff": c} for k, c in enumerate(p.coeffs)]
    return Result(data, rows, str(p))


def cmd_ztotal(args) -> Result:
    N, rs = _nr(args)
    fns = {"ansatz": ansatz.z_total_ansatz, "paths": histories.z_total_paths, "perms": permutations.z_total_perms}
    names = BACKENDS if args.backend == "all" else (args.backend,)
    table = []
    for r in rs:
        p = _compare({b: fns[b](N, r) for b in names}, f"Z_{{{N},{r}}}")
        table.append({"N": N, "r": r, "z": _poly(p), "z_at_1": p(1)})
    rows = [{"N": t["N"], "r": t["r"], "z": t["z"]["text"], "z_at_1": t["z_at_1"]} for t in table]
    text = "\n".join(f"Z_{{{t['N']},{t['r']}}} = {t['z']['text']}" for t in table)
    return Result({"backends": list(names), "table": table}, rows, text)


def _path(args, large: bool) -> History:
    if not args.path:
        raise UsageError("this operation needs --path")
    try:
        if args.path.lstrip().startswith("["):
            return History.from_json(args.path, large=large)
        return History.parse(args.path, large=large)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"bad path: {exc}") from None


def _perm(args) -> PSP:
    if not args.perm:
        raise UsageError("this operation needs --perm")
    try:
        text = args.perm.strip()
        if text.startswith("{"):
            return PSP.from_json(text)
        return PSP.parse(text)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"bad permutation: {exc}") from None


def _checked(H: History, open_ended: bool = False) -> History:
    v = histories.validate(H, open_ended=open_ended)
    if not v:
        raise UsageError(f"invalid path at step {v.index}: {v.reason}")
    return H


def _path_out(H: History) -> dict:
    return {"path": str(H), "steps": json.loads(H.to_json()), "large": H.large}


def _perm_out(s: PSP) -> dict:
    return {"perm": str(s), **json.loads(s.to_json())}


def _map_iota(args):
    if args.state:
        return {"state": states.iota_state(states.check_state(args.state))}
    return {"word": states.iota_word(_word(args))}


def _map_fv(args):
    s = _perm(args)
    if s.signs:
        raise UsageError("fv takes an unsigned permutation; use marked-fv")
    return _path_out(bijections.fv(s))


def _map_fv_inverse(args):
    H = _path(args, large=False)
    if any(st.marked for st in H.steps):
        raise UsageError("fv-inverse takes an unmarked path; use marked-fv-inverse")
    return _perm_out(PSP(bijections.fv_inverse(_checked(H)), frozenset()))


_MAPS = {
    "iota": _map_iota,
    "fv": _map_fv,
    "fv-inverse": _map_fv_inverse,
    "marked-fv": lambda a: _path_out(bijections.marked_fv(_perm(a))),
    "marked-fv-inverse": lambda a: _perm_out(bijections.marked_fv_inverse(_checked(_path(a, False)))),
    "psi": lambda a: _path_out(bijections.psi(_checked(_path(a, False)))),
    "psi-inverse": lambda a: _path_out(bijections.psi_inverse(_checked(_path(a, True)))),
    "psi-marked": lambda a: _path_out(bijections.psi_marked(_checked(_path(a, False)))),
    "psi-marked-inverse": lambda a: _path_out(bijections.psi_marked_inverse(_checked(_path(a, True)))),
    "iota-llh": lambda a: _path_out(bijections.iota_llh(_checked(_path(a, True)))),
    "induced": lambda a: _path_out(bijections.induced_involution(_checked(_path(a, False)))),
    "gc": lambda a: {"segcomp": str(permutations.gc(_perm(a))), "word": permutations.ade_of_psp(_perm(a))},
    "tw": lambda a: {"tw": permutations.tw_stat(_perm(a))},
    "label": lambda a: {"word": histories.label(_checked(_path(a, False)))},
    "label-large": lambda a: {"word": histories.label_large(_checked(_path(a, True)))},
    "segcomp": lambda a: {"segcomp": str(states.ade_to_segcomp(_word(a)))},
}


def cmd_map(args) -> Result:
    try:
        out = _MAPS[args.op](args)
    except UsageError:
        raise
    except (ValueError, KeyError, IndexError) as exc:
        raise UsageError(f"{args.op}: {exc}") from None
    data = {"op": args.op, "result": out}
    main = next(iter(out.values()))
    return Result(data, [{"op": args.op, "result": main}], str(main))


def cmd_verify(args) -> Result:
    names = list(suites.SUITES) if args.suite == "all" else [args.suite]
    checks = []
    for name in names:
        for c in suites.run_suite(name, args.size):
            checks.append({"suite": name, "check": c.name, "ok": c.ok, "detail": c.detail})
    ok = all(c["ok"] for c in checks)
    text = "\n".join(f"{'PASS' if c['ok'] else 'FAIL'} [{c['suite']}] {c['check']}" for c in checks)
    return Result({"ok": ok, "checks": checks}, checks, text, 0 if ok else 1)


def cmd_reproduce(args) -> Result:
    outcomes = worked_examples.run_all()
    rows = [{"name": o.name, "ok": o.ok, "got": o.got, "expected": o.expected} for o in outcomes]
    ok = all(o.ok for o in outcomes)
    text = "\n".join(
        f"{'PASS' if o.ok else 'FAIL'} {o.name}" + ("" if o.ok else f": got {o.got}, expected {o.expected}")
        for o in outcomes
    )
    return Result({"ok": ok, "examples": rows}, rows, text, 0 if ok else 1)


def _chain(args) -> chain.ChainModel:
    q = _q(args)
    try:
        return chain.build_chain(args.n, args.r, q)
    except chain.InvalidParams as exc:
        raise UsageError(str(exc)) from None


def cmd_chain_solve(args) -> Result:
    M = _chain(args)
    try:
        pi = chain.stationary_exact(M)
    except chain.Reducible as exc:
        raise Disagreement(str(exc), {"closed_classes": exc.classes}) from None
    rows = [{"state": x, "fraction": str(p), "decimal": float(p)} for x, p in pi.items()]
    data = {"N": M.N, "r": M.r, "q": str(M.q), "stationary": rows}
    text = "\n".join(f"{x}  {p}" for x, p in pi.items())
    return Result(data, rows, text)


def cmd_chain_simulate(args) -> Result:
    M = _chain(args)
    if args.steps < 1:
        raise UsageError("--steps must be >= 1")
    if args.start is not None and args.start not in M.states:
        raise UsageError(f"start state {args.start!r} is not in the sector")
    freq = chain.simulate(M, args.steps, args.seed, args.start)
    data = {"N": M.N, "r": M.r, "q": str(M.q), "steps": args.steps, "seed": args.seed}
    try:
        pi = chain.stationary_exact(M)
        data["total_variation"] = chain.total_variation(freq, pi)
    except chain.Reducible:
        pi = None
    rows = []
    for x in M.states:
        row = {"state": x, "frequency": freq[x]}
        if pi is not None:
            row["exact"] = str(pi[x])
        rows.append(row)
    data["frequencies"] = rows
    text = "\n".join(f"{x}  {freq[x]:.6f}" for x in M.states)
    if pi is not None:
        text += f"\nTV distance to exact: {data['total_variation']:.6f}"
    return Result(data, rows, text)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--out", help=f"output file; relative paths resolve against ${OUTPUT_DIR_ENV}")

    p = _Parser(prog="pasep2", description="Exact computations for the two-species PASEP.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("prob", parents=[common], help="stationary probability from three backends")
    s.add_argument("--state")
    s.add_argument("--word")
    s.add_argument("--q", default="1")
    s.set_defaults(func=cmd_prob)

    s = sub.add_parser("zpoly", parents=[common], help="unnormalized weight Z_X(q)")
    s.add_argument("--state")
    s.add_argument("--word")
    s.add_argument("--backend", choices=("all", *BACKENDS), default="all")
    s.set_defaults(func=cmd_zpoly)

    s = sub.add_parser("ztotal", parents=[common], help="partition function Z_{N,r}(q)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--r", type=int)
    s.add_argument("--backend", choices=("all", *BACKENDS), default="all")
    s.set_defaults(func=cmd_ztotal)

    s = sub.add_parser("map", parents=[common], help="apply a bijection or statistic")
    s.add_argument("--op", choices=sorted(_MAPS), required=True)
    s.add_argument("--word")
    s.add_argument("--state")
    s.add_argument("--perm", help='e.g. "2~ 5 7 8 3 6 4~ 1"')
    s.add_argument("--path", help='e.g. "R0 L1* R0 X3* L0 F1 L0 F0" or a JSON step list')
    s.set_defaults(func=cmd_map)

    s = sub.add_parser("verify", parents=[common], help="run an invariant suite")
    s.add_argument("--suite", choices=("all", *suites.SUITES), default="all")
    s.add_argument("--size", type=int)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("reproduce-paper", parents=[common], help="recompute the published worked examples")
    s.set_defaults(func=cmd_reproduce)

    c = sub.add_parser("chain", help="explicit Markov chain")
    csub = c.add_subparsers(dest="chain_command", required=True, parser_class=_Parser)
    for name, func in (("solve", cmd_chain_solve), ("simulate", cmd_chain_simulate)):
        s = csub.add_parser(name, parents=[common])
        s.add_argument("--n", type=int, required=True)
        s.add_argument("--r", type=int, required=True)
        s.add_argument("--q", default="1")
        if name == "simulate":
            s.add_argument("--steps", type=int, default=1_000_000)
            s.add_argument("--seed", type=int, default=0)
            s.add_argument("--start")
        s.set_defaults(func=func)
    return p


def _flatten(v):
    return json.dumps(v) if isinstance(v, (dict, list)) else v


def render(result: Result, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(result.data, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        rows = result.rows or [result.data]
        fields = list(dict.fromkeys(k for row in rows for k in row))
        w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        for row in rows:
            w.writerow({k: _flatten(v) for k, v in row.items()})
        return buf.getvalue()
    return result.text + "\n"


def _error(kind: str, message: str, details=None) -> str:
    obj = {"error": kind, "message": message}
    if details is not None:
        obj["details"] = details
    return json.dumps(obj, default=str)


def _resolve_out(path: str) -> str:
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not os.path.isabs(path):
        return os.path.join(base, path)
    return path


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        result = args.func(args)
    except UsageError as exc:
        print(_error("invalid_input", str(exc)))
        return 2
    except Disagreement as exc:
        print(_error("disagreement", str(exc), exc.details))
        return 1
    text = render(result, args.format)
    if args.out:
        path = _resolve_out(args.out)
        os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return result.status


if __name__ == "__main__":
    sys.exit(main())
