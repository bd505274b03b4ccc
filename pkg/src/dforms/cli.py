"""Command line front end.

Every command prints one canonical JSON document (sorted keys, compact) tagged
with ``"schema": "dforms/1"``.  Exit codes: 0 success or affirmative verdict,
1 negative verdict, 2 input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .betti import LinearBettiRow, betti_from_m, ek_betti, feasible_linear
from .duality import matteo_dual, murai_dual, shift_to_space
from .ideal import MonomialIdeal
from .macaulay import is_osequence, macaulay_rep
from .monomial import MonomialSpace, format_monomial, parse_monomial
from .oracle import theorem29_census
from .stability import is_block_stable, is_p_borel, is_stable, is_strongly_stable
from .star import YMonomial, phi, psi, star

SCHEMA = "dforms/1"


class InputError(ValueError):
    pass


def _load_json(arg: str) -> dict:
    """Inline JSON, ``-`` for stdin, or a file path."""
    try:
        if arg == "-":
            text = sys.stdin.read()
        elif arg.lstrip().startswith("{"):
            text = arg
        else:
            text = Path(arg).read_text()
        obj = json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read JSON input: {exc}") from exc
    if not isinstance(obj, dict):
        raise InputError("JSON input must be an object")
    if "schema" in obj and obj["schema"] != SCHEMA:
        raise InputError(f"field 'schema': expected {SCHEMA!r}, got {obj['schema']!r}")
    return obj


def _int_field(obj: dict, key: str, minimum: int = 0) -> int:
    if key not in obj:
        raise InputError(f"field {key!r} is missing")
    v = obj[key]
    if not isinstance(v, int) or isinstance(v, bool) or v < minimum:
        raise InputError(f"field {key!r}: expected an integer >= {minimum}")
    return v


def _offset(args) -> int:
    return 1 if args.one_based else 0


def _mono(text: str, args):
    return parse_monomial(text, _offset(args))


def _mono_out(u, args) -> dict:
    off = _offset(args)
    return {"monomial": format_monomial(u, off), "json": u.to_json(off)}


def cmd_check_betti(args):
    obj = _load_json(args.input)
    n = _int_field(obj, "n", 1)
    d = _int_field(obj, "d", 1)
    row = obj.get("row")
    if not isinstance(row, list) or not all(isinstance(b, int) and b >= 0 for b in row):
        raise InputError("field 'row': expected a list of natural numbers")
    if len(row) != n + 1:
        raise InputError(f"field 'row': expected n + 1 = {n + 1} entries, got {len(row)}")
    verdict = feasible_linear(LinearBettiRow(d, tuple(row)))
    out = verdict.to_json()
    out.update(n=n, d=d)
    return out, 0 if verdict else 1


def cmd_witness(args):
    m = args.m
    n = args.n if args.n is not None else len(m)
    if n < len(m):
        raise InputError(f"--n {n} is shorter than the m-sequence")
    m = m + [0] * (n + 1 - len(m))
    row = betti_from_m(m, args.d)
    if not row.valid:
        verdict_json = {"feasible": False, "m": m, "violation": "negative Betti number"}
        return verdict_json, 1
    verdict = feasible_linear(row)
    out = verdict.to_json()
    out.update(n=n, d=args.d, row=list(row.row))
    return out, 0 if verdict else 1


def cmd_ek_betti(args):
    I = MonomialIdeal.from_json(_load_json(args.input))
    return {"ideal": I.to_json(), "betti": ek_betti(I).to_json()}, 0


def cmd_classify(args):
    monos = [_mono(t, args) for t in args.monomials]
    degrees = {u.degree for u in monos}
    if len(degrees) != 1:
        raise InputError("classify needs monomials of one common degree")
    V = MonomialSpace(degrees.pop(), monos)
    out = {
        "stable": is_stable(V),
        "strongly_stable": is_strongly_stable(V),
        "block_stable": is_block_stable(V),
    }
    if args.p:
        out["p_borel"] = {str(p): is_p_borel(V, p) for p in args.p}
    return out, 0


def cmd_star(args):
    u, v = _mono(args.u, args), _mono(args.v, args)
    if args.d is not None and (u.degree != args.d or v.degree != args.d):
        raise InputError(f"both factors must have degree {args.d}")
    return _mono_out(star(u, v), args), 0


def cmd_phi(args):
    w = YMonomial.parse(args.d, args.y)
    return _mono_out(phi(w), args), 0


def cmd_psi(args):
    u = _mono(args.u, args)
    w = psi(u, args.d if args.d is not None else u.degree)
    return {"monomial": str(w), "json": w.to_json()}, 0


def cmd_dual(args):
    I = MonomialIdeal.from_json(_load_json(args.input))
    if I.convention == "y":
        raise InputError("field 'convention': dual expects an x-side ideal")
    if args.side == "matteo":
        m = args.m if args.m is not None else I.nvars - 1
        J = matteo_dual(shift_to_space(I), m)
        extra = {"m": m}
    else:
        J = murai_dual(I)
        extra = {}
    return {"side": args.side, "input": I.to_json(), "dual": J.to_json(), **extra}, 0


def cmd_macaulay(args):
    rep = macaulay_rep(args.a, args.d)
    if args.what == "rep":
        return {"a": args.a, "d": args.d, "ks": list(rep.ks)}, 0
    return {"a": args.a, "d": args.d, "bound": rep.bound()}, 0


def cmd_osequence(args):
    w = args.w
    verdict = is_osequence(w)
    out = {"w": w, "osequence": verdict.ok}
    if not verdict:
        out["index"] = verdict.index
        out["bound"] = verdict.bound
    ok = verdict.ok
    if args.cap is not None:
        capped = len(w) < 2 or w[1] <= args.cap
        out["cap_ok"] = capped
        ok = ok and capped
    return out, 0 if ok else 1


def cmd_census(args):
    report = theorem29_census(args.d, args.max_index, jobs=args.jobs)
    return report.to_json(), 0 if report.sets_equal else 1


def _natural(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"{text} is not a natural number")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dforms", description=__doc__.splitlines()[0])
    parser.add_argument("--pretty", action="store_true", help="human-readable key: value output")
    parser.add_argument("--one-based", action="store_true", help="x-side monomials are x_1, x_2, ...")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-betti", help="decide a one-row Betti table")
    p.add_argument("input", help='inline JSON, "-" or a path: {"n":..,"d":..,"row":[..]}')
    p.set_defaults(func=cmd_check_betti)

    p = sub.add_parser("witness", help="strongly stable ideal realising an m-sequence")
    p.add_argument("m", nargs="+", type=_natural)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("ek-betti", help="Eliahou-Kervaire Betti table of a stable ideal")
    p.add_argument("input")
    p.set_defaults(func=cmd_ek_betti)

    p = sub.add_parser("classify", help="stability flags of a monomial space")
    p.add_argument("monomials", nargs="+")
    p.add_argument("--p", type=int, action="append", help="also test p-Borel (repeatable)")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("star", help="*-product of two degree-d monomials")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--d", type=int)
    p.set_defaults(func=cmd_star)

    p = sub.add_parser("phi", help="image of a y-monomial in S_d")
    p.add_argument("y")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("psi", help="y-monomial of a degree-d monomial")
    p.add_argument("u")
    p.add_argument("--d", type=int)
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("dual", help="matteo or murai dual of a strongly stable ideal")
    p.add_argument("--side", choices=("matteo", "murai"), required=True)
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--m", type=int, help="matteo: ambient max index (default nvars - 1)")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("macaulay", help="Macaulay representation or a^<d>")
    p.add_argument("what", choices=("rep", "bound"))
    p.add_argument("a", type=_natural)
    p.add_argument("d", type=int)
    p.set_defaults(func=cmd_macaulay)

    p = sub.add_parser("osequence", help="O-sequence test, 0-based")
    p.add_argument("w", nargs="+", type=int)
    p.add_argument("--cap", type=int, help="also require w_1 <= CAP")
    p.set_defaults(func=cmd_osequence)

    p = sub.add_parser("census", help="exhaustive w-profile census")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--max-index", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_census)
    return parser


def dumps(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def render_pretty(obj: dict) -> str:
    """One ``key: value`` line per field; ideals printed as generator lists."""
    lines = []
    for key in sorted(obj):
        value = obj[key]
        if isinstance(value, dict) and {"convention", "nvars", "generators"} <= set(value):
            value = str(MonomialIdeal.from_json(value))
        elif isinstance(value, (dict, list)):
            value = dumps(value) if isinstance(value, dict) else " ".join(map(str, value))
        lines.append(f"{key}: {value}")
    return "\n".join(lines)


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        out, code = args.func(args)
    except (InputError, ValueError, KeyError, TypeError) as exc:
        print(f"dforms {args.command}: error: {exc}", file=stderr)
        return 2
    out = {"schema": SCHEMA, "command": args.command, **out}
    print(render_pretty(out) if args.pretty else dumps(out), file=stdout)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
