"""Command line front end: ``nakaoka <command> ...``.

Exit codes: 0 success, 1 a check failed, 2 parse error, 3 level or type error,
4 undecided, 5 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import NakaokaError, ParseError, UndecidedError
from .polyalg import is_prime

EXIT_OK = 0
EXIT_FAIL = 1


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(f"{self.prog}: {message}")


def _emit(out, text):
    out.write(text.rstrip("\n") + "\n")


def _dump(obj):
    return json.dumps(obj, sort_keys=True, indent=2)


def _prime_arg(text):
    p = int(text)
    if not is_prime(p):
        raise ParseError(f"p = {p} is not prime")
    return p


def _prime_list(text):
    return [_prime_arg(s) for s in text.split(",") if s.strip()]


def _window(text):
    out = []
    for s in text.split(","):
        s = s.strip()
        if not s:
            continue
        q = int(s)
        if q != 0 and not is_prime(q):
            raise ParseError(f"window entry {q} is neither 0 nor prime")
        out.append(q)
    return out


def _seed(text):
    s = int(text)
    if not 0 <= s < 2**64:
        raise ParseError("seed must be an unsigned 64-bit integer")
    return s


def _trials(text):
    n = int(text)
    if n < 1:
        raise ParseError("trials must be at least 1")
    return n


def _functor(tag, p):
    from .tambara import make_functor

    return make_functor(tag, p)


# ---------------------------------------------------------------- eval

_INPUT_LEVEL = {"nm": "bottom", "tr": "bottom", "conj": "bottom", "res": "top", "phi": "top"}


def _parse_element(T, text, level):
    from .tambara.functor import Level

    if level:
        return T.parse(text, Level.parse(level))
    try:
        return T.parse(text, Level.TOP)
    except ParseError:
        return T.parse(text, Level.BOTTOM)


def cmd_eval(args, out):
    from .tambara.functor import conj, nm, phi, res, tr

    T = _functor(args.functor, args.p)
    level = args.level or _INPUT_LEVEL.get(args.op)
    xs = [_parse_element(T, e, level) for e in args.exprs]
    op = args.op
    arity = 2 if op in ("add", "mul") else 1
    if len(xs) != arity:
        raise ParseError(f"--op {op} takes {arity} expression(s), got {len(xs)}")
    if op == "nm":
        z = nm(T, xs[0])
    elif op == "tr":
        z = tr(T, xs[0])
    elif op == "res":
        z = res(T, xs[0])
    elif op == "conj":
        z = conj(T, xs[0], args.i)
    elif op == "phi":
        _emit(out, str(T.phi_reduce(phi(T, xs[0]))))
        return EXIT_OK
    elif op == "add":
        z = xs[0] + xs[1]
    elif op == "mul":
        z = xs[0] * xs[1]
    else:
        z = xs[0]
    _emit(out, _dump(z.to_json()) if args.format == "json" else str(z))
    return EXIT_OK


# ---------------------------------------------------------------- axioms


def cmd_axioms(args, out):
    from .tambara import catalog
    from .tambara.axioms import check_axioms
    from .tambara.sampling import Bounds

    bounds = Bounds(max_exp=args.degree, max_degree=args.degree, coeff=args.coeff)
    reports = []
    for p in args.p:
        functors = catalog(p) if args.functor == "all" else [_functor(args.functor, p)]
        for T in functors:
            reports.append(check_axioms(T, trials=args.trials, seed=args.seed, bounds=bounds))
    ok = all(r.ok for r in reports)
    if args.format == "json":
        _emit(out, _dump({"ok": ok, "reports": [r.to_json() for r in reports]}))
    else:
        lines = [line for r in reports for line in r.lines()]
        lines.append("ALL PASS" if ok else "FAILURES PRESENT")
        _emit(out, "\n".join(lines))
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------- spec


def _spectrum(args):
    from .spectra import spec_burnside, spec_ru

    tag = args.functor.lower()
    if tag == "burnside":
        return spec_burnside(args.p, args.window)
    if tag == "ru":
        return spec_ru(args.p, args.window)
    raise ParseError(f"spec list/closure supports burnside and ru, not {args.functor!r}")


def cmd_spec(args, out):
    from .spectra import (
        UNKNOWN,
        compare,
        coop_map,
        krull_certificate,
        parse_ghost_prime,
        pullback,
    )

    sub = args.spec_cmd
    if sub == "list":
        S = _spectrum(args)
        if args.format == "dot":
            _emit(out, S.to_dot())
        elif args.format == "json":
            _emit(out, S.to_json_text())
        else:
            _emit(out, S.to_text())
        return EXIT_OK if S.complete else UndecidedError.exit_code
    if sub == "closure":
        S = _spectrum(args)
        labels = [s.strip() for s in args.point]
        try:
            idx = S.closure(labels)
        except KeyError as exc:
            raise ParseError(f"no point labelled {exc.args[0]!r}") from None
        names = [S.nodes[i].label for i in idx]
        _emit(out, _dump({"closure": names}) if args.format == "json" else "\n".join(names))
        return EXIT_OK
    T = _functor(args.functor, args.p)
    if sub == "contains":
        P1 = pullback(parse_ghost_prime(T, args.a))
        P2 = pullback(parse_ghost_prime(T, args.b))
        verdict, ab, ba = compare(P1, P2)
        if args.format == "json":
            _emit(
                out,
                _dump({"a": P1.label, "b": P2.label, "verdict": verdict, "a_in_b": ab.to_json(), "b_in_a": ba.to_json()}),
            )
        else:
            lines = [verdict]
            for name, r in (("a <= b", ab), ("b <= a", ba)):
                detail = f" witness {r.witness} [{r.witness.level.value}]" if r.witness is not None else ""
                lines.append(f"  {name}: {r.status}{detail}")
            _emit(out, "\n".join(lines))
        if verdict == UNKNOWN:
            reason = ab.reason if ab.status == UNKNOWN else ba.reason
            print(f"undecided: {reason}", file=args.err)
            return UndecidedError.exit_code
        return EXIT_OK
    if sub == "dim":
        cert = krull_certificate(T, q=args.q)
        if args.format == "json":
            _emit(out, _dump(cert.to_json()))
        else:
            _emit(out, "\n".join(cert.lines()))
        return EXIT_OK if cert.dim is not None else EXIT_FAIL
    if sub == "coop":
        gp = parse_ghost_prime(T, args.prime)
        image = coop_map(args.which, gp)
        if args.format == "json":
            _emit(out, _dump({"source": gp.to_json(), "image": image.to_json(), "label": image.label}))
        else:
            _emit(out, f"{gp.label} -> {image.label}")
        return EXIT_OK
    raise ParseError(f"unknown spec subcommand {sub!r}")


# ---------------------------------------------------------------- ghost


def cmd_ghost(args, out):
    from .ghost import ghost_element_json, ghost_kernel_probe, ghost_kernel_report, ghost_map
    from .tambara.functor import Level

    T = _functor(args.functor, args.p)
    if args.ghost_cmd == "map":
        z = _parse_element(T, args.expr, args.level)
        _emit(out, _dump(ghost_element_json(ghost_map(T, z))))
        return EXIT_OK
    if args.ghost_cmd == "probe":
        if args.expr is None:
            rep = ghost_kernel_report(T)
            _emit(out, _dump(rep.to_json()))
            return EXIT_OK if rep.ok else EXIT_FAIL
        z = T.parse(args.expr, Level.TOP)
        in_kernel = ghost_kernel_probe(T, z)
        _emit(out, _dump({"element": str(z), "in_kernel": in_kernel}) if args.format == "json" else str(in_kernel).lower())
        return EXIT_OK
    raise ParseError(f"unknown ghost subcommand {args.ghost_cmd!r}")


# ---------------------------------------------------------------- fixedpoint


def _prime_specs(text):
    """'x; x,y; 3,x+1' -> [(0, ['x']), (0, ['x', 'y']), (3, ['x+1'])]."""
    out = []
    for chunk in text.split(";"):
        items = [s.strip() for s in chunk.split(",") if s.strip()]
        if not items:
            continue
        char, gens = 0, []
        for s in items:
            if s.lstrip("-").isdigit():
                char = abs(int(s))
            else:
                gens.append(s)
        out.append((char, gens))
    return out


def cmd_fixedpoint(args, out):
    from .spectra import fixed_point_spec

    primes = _prime_specs(args.primes) if args.primes else [(args.p, [])]
    rep = fixed_point_spec(args.ring, primes, p=args.p, samples=args.trials, seed=args.seed)
    if args.format == "json":
        _emit(out, _dump(rep.to_json()))
    else:
        lines = []
        for row in rep.rows:
            lines.append(f"{row.prime} -> C_p-prime {row.gprime}: {'ok' if row.ok else 'FAILED'}")
        for s in rep.separations:
            lines.append(f"  {s['pair'][0]} vs {s['pair'][1]}: invariant {s['invariant']}")
        if rep.spectrum is not None:
            lines.append(f"spectrum: {len(rep.spectrum)} point(s): " + ", ".join(n.label for n in rep.spectrum.nodes))
        _emit(out, "\n".join(lines))
    return EXIT_OK if rep.ok else EXIT_FAIL


# ---------------------------------------------------------------- express-t


def cmd_express_t(args, out):
    from .tambara import FreeUnderlying
    from .tambara.express import evaluate_expression, express_t_in_generators

    v = tuple(int(s) for s in args.v.split(","))
    expr = express_t_in_generators(args.p, v)
    ok = True
    if args.verify:
        T = FreeUnderlying(args.p)
        ok = evaluate_expression(T, expr) == T.t(*v)
    if args.format == "json":
        _emit(out, _dump({"v": list(v), "expression": str(expr), "verified": ok if args.verify else None}))
    else:
        _emit(out, str(expr) + ("" if not args.verify else f"\nverified: {str(ok).lower()}"))
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------- parser


def build_parser():
    ap = _Parser(prog="nakaoka", description="C_p-Tambara functors, ghosts and Nakaoka spectra")
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    def common(sp, p=True, functor=True, fmt=("text", "json")):
        if functor:
            sp.add_argument("--functor", required=True)
        if p:
            sp.add_argument("--p", type=_prime_arg, required=True)
        sp.add_argument("--format", choices=fmt, default="text")

    ev = sub.add_parser("eval", help="apply one operation and print the normal form")
    common(ev)
    ev.add_argument("--op", required=True, choices=("nm", "tr", "res", "conj", "phi", "add", "mul", "normal"))
    ev.add_argument("--level", choices=("top", "bottom"))
    ev.add_argument("--i", type=int, default=1, help="conjugation power")
    ev.add_argument("exprs", nargs="+")

    ax = sub.add_parser("axioms", help="randomized Tambara axiom suite")
    ax.add_argument("--functor", default="all")
    ax.add_argument("--p", type=_prime_list, required=True)
    ax.add_argument("--trials", type=_trials, default=200)
    ax.add_argument("--seed", type=_seed, required=True)
    ax.add_argument("--degree", type=int, default=3)
    ax.add_argument("--coeff", type=int, default=5)
    ax.add_argument("--format", choices=("text", "json"), default="text")

    sp = sub.add_parser("spec", help="prime spectra")
    ssub = sp.add_subparsers(dest="spec_cmd", required=True, parser_class=_Parser)
    sl = ssub.add_parser("list")
    common(sl, fmt=("text", "json", "dot"))
    sl.add_argument("--window", type=_window, required=True)
    sc = ssub.add_parser("contains")
    common(sc)
    sc.add_argument("--a", required=True)
    sc.add_argument("--b", required=True)
    sd = ssub.add_parser("dim")
    common(sd)
    sd.add_argument("--q", type=_prime_arg)
    so = ssub.add_parser("coop")
    common(so)
    so.add_argument("--which", required=True, choices=("cores", "cotr", "conm", "coc"))
    so.add_argument("--prime", required=True)
    scl = ssub.add_parser("closure")
    common(scl)
    scl.add_argument("--window", type=_window, required=True)
    scl.add_argument("--point", action="append", required=True, help="a point label; repeat for several")

    gh = sub.add_parser("ghost", help="ghost map and kernel probes")
    gsub = gh.add_subparsers(dest="ghost_cmd", required=True, parser_class=_Parser)
    gm = gsub.add_parser("map")
    common(gm)
    gm.add_argument("--level", choices=("top", "bottom"))
    gm.add_argument("expr")
    gp = gsub.add_parser("probe")
    common(gp)
    gp.add_argument("expr", nargs="?")

    fp = sub.add_parser("fixedpoint", help="fixed-point functor prime correspondence")
    fsub = fp.add_subparsers(dest="fp_cmd", required=True, parser_class=_Parser)
    fc = fsub.add_parser("check")
    fc.add_argument("--ring", required=True, choices=("swap", "trivial"))
    fc.add_argument("--p", type=_prime_arg, default=2)
    fc.add_argument("--primes", help="primes of R: 'x; x,y; 3,x+1'")
    fc.add_argument("--trials", type=_trials, default=100)
    fc.add_argument("--seed", type=_seed, required=True)
    fc.add_argument("--format", choices=("text", "json"), default="text")

    ex = sub.add_parser("express-t", help="t_v in terms of n and the low t generators")
    ex.add_argument("--p", type=_prime_arg, required=True)
    ex.add_argument("--v", required=True, help="comma separated exponent vector")
    ex.add_argument("--verify", action="store_true")
    ex.add_argument("--format", choices=("text", "json"), default="text")
    return ap


COMMANDS = {
    "eval": cmd_eval,
    "axioms": cmd_axioms,
    "spec": cmd_spec,
    "ghost": cmd_ghost,
    "fixedpoint": cmd_fixedpoint,
    "express-t": cmd_express_t,
}


def run(argv=None, out=None, err=None):
    """Run one command; returns the exit code instead of exiting."""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        args.err = err
        return COMMANDS[args.cmd](args, out)
    except NakaokaError as exc:
        print(f"error: {exc}", file=err)
        return exc.exit_code
    except ValueError as exc:
        print(f"error: {exc}", file=err)
        return ParseError.exit_code
    except AssertionError as exc:
        print(f"internal check failed: {exc}", file=err)
        return EXIT_FAIL


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
