"""Command-line front end.

Every subcommand prints one JSON document (``enumerate`` prints JSON lines)
with sorted keys, so identical invocations give byte-identical output.

Exit status: 0 success, 2 invalid input, 3 inconclusive at the precision
cap, 4 cap or budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .config import DEFAULT, Config
from .criteria import (
    BZData,
    TowerSpec,
    bz_partial_sum,
    gamma_lower_bound,
    radical_tower_check,
    tame_exponent_check,
    tower_terms,
    verify_silverman,
)
from .enumeration import EnumerationRequest, enumerate_bounded
from .errors import InvalidInput, NorthcottError
from .heights import AlgebraicNumber, mahler_measure, weil_height
from .numfield import NumberField, load_field_file, rel_disc_norm, splitting

EXIT_OK, EXIT_INVALID, EXIT_INCONCLUSIVE, EXIT_CAP = 0, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on usage errors, which is already our invalid-input code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INVALID)


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _json_arg(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise argparse.ArgumentTypeError(f"invalid JSON: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=_fraction, help="relative tolerance of enclosures, e.g. 1/1073741824")
    common.add_argument("--workers", type=int, help="worker processes for enumeration")
    common.add_argument("--format", choices=("json", "table"), help="output format (default json)")
    common.add_argument("--config", help="JSON config file; flags override it")

    p = _Parser(prog="northcott", description="Certified heights, discriminants and Northcott-type criteria.")
    sub = p.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
    sub.required = True

    def field_args(sp, required=True):
        g = sp.add_mutually_exclusive_group(required=required)
        g.add_argument("--poly", help="monic irreducible defining polynomial")
        g.add_argument("--field-file", help="JSON field file")

    s = sub.add_parser("height", parents=[common], help="Mahler measure and Weil height of an algebraic number")
    s.add_argument("--poly", required=True, help="minimal polynomial (made primitive)")

    s = sub.add_parser("field", parents=[common], help="integral basis and discriminant of a number field")
    field_args(s)

    s = sub.add_parser("split", parents=[common], help="factorisation of primes in a number field")
    field_args(s)
    s.add_argument("--p", required=True, type=int, nargs="+", help="primes")

    s = sub.add_parser("reldisc", parents=[common], help="absolute norm of a relative discriminant")
    s.add_argument("--field-file", required=True, help="fields and embeddings")
    s.add_argument("--top", help="label of the extension M (default: last field)")
    s.add_argument("--base", help="label of the base F (default: first field)")

    s = sub.add_parser("silverman", parents=[common], help="check the Silverman lower bound for H(alpha)")
    s.add_argument("--poly", required=True, help="minimal polynomial of alpha over Q")
    s.add_argument("--field-file", help="base field F (default Q)")

    s = sub.add_parser("gamma", parents=[common], help="lower bound for gamma(M/K) from candidate fields")
    s.add_argument("--field-file", required=True, help="fields M and K with an optional embedding K -> M")
    s.add_argument("--top", help="label of M (default: last field)")
    s.add_argument("--base", help="label of K (default: first field)")
    s.add_argument("--candidates-file", required=True, help="candidate fields F with optional embeddings K -> F")

    s = sub.add_parser("tower", parents=[common], help="tower criterion terms")
    s.add_argument("--tower-file", required=True)

    s = sub.add_parser("radical-tower", parents=[common], help="log(p_i)/d_i sequence with a prefix verdict")
    s.add_argument("--data", required=True, type=_json_arg, help='JSON list [[p, d], ...]')
    s.add_argument("--window", type=int, help="window width W")

    s = sub.add_parser("bz-sum", parents=[common], help="ramification sum and its liminf bound")
    s.add_argument("--data", required=True, type=_json_arg, help='JSON list [[p, e, f], ...]')

    s = sub.add_parser("enumerate", parents=[common], help="all algebraic numbers of bounded degree and height")
    s.add_argument("--degree", required=True, type=int)
    s.add_argument("--X", required=True, type=_fraction, dest="X")
    s.add_argument("--mode", choices=("up_to_degree", "exact_degree"), default="up_to_degree")
    s.add_argument("--borderline", choices=("include", "exclude", "flag"), default="flag")
    s.add_argument("--budget", type=float, help="time budget in seconds")

    s = sub.add_parser("tame-check", parents=[common], help="tame ramification indices against an exponent")
    field_args(s)
    s.add_argument("--exponent", required=True, type=int)
    s.add_argument("--primes", required=True, type=int, nargs="+")
    return p


def _config(args) -> Config:
    cfg = Config.from_file(args.config) if args.config else DEFAULT
    return cfg.updated(rel_tol=args.tol, workers=args.workers, output_format=args.format)


def _single_field(args, cfg) -> NumberField:
    if args.poly is not None:
        return NumberField(args.poly, config=cfg)
    fields, _ = load_field_file(args.field_file, cfg)
    if len(fields) != 1:
        raise InvalidInput(f"{args.field_file}: expected exactly one field, found {len(fields)}")
    return fields[0]


def _pick(fields, label, default_index, what):
    if label is None:
        return fields[default_index]
    for f in fields:
        if f.label == label:
            return f
    raise InvalidInput(f"no field labelled {label!r} for {what}")


def _embedding_between(embs, src, tgt):
    for e in embs:
        if e.source.label == src.label and e.target.label == tgt.label:
            return e
    return None


def cmd_height(args, cfg):
    alpha = AlgebraicNumber.from_poly(args.poly)
    return {
        "command": "height",
        "minpoly": str(alpha.minpoly),
        "degree": alpha.degree,
        "mahler": mahler_measure(alpha.minpoly, cfg.rel_tol, irreducible=True).to_json(),
        "height": weil_height(alpha, cfg.rel_tol).to_json(),
    }


def cmd_field(args, cfg):
    return {"command": "field", "field": _single_field(args, cfg).to_json()}


def cmd_split(args, cfg):
    K = _single_field(args, cfg)
    return {"command": "split", "field": K.label, "degree": K.degree, "primes": [splitting(K, p).to_json() for p in args.p]}


def cmd_reldisc(args, cfg):
    fields, embs = load_field_file(args.field_file, cfg)
    M = _pick(fields, args.top, -1, "--top")
    F = _pick(fields, args.base, 0, "--base")
    N = rel_disc_norm(M, F, _embedding_between(embs, F, M))
    return {
        "command": "reldisc",
        "top": M.label,
        "base": F.label,
        "relative_degree": M.degree // F.degree,
        "disc_top": M.disc,
        "disc_base": F.disc,
        "norm_rel_disc": N,
        "verified": not (M.unverified or F.unverified),
    }


def cmd_silverman(args, cfg):
    F = _single_field(argparse.Namespace(poly=None, field_file=args.field_file), cfg) if args.field_file else None
    rep = verify_silverman(args.poly, F, config=cfg)
    out = {"command": "silverman", **rep.to_json()}
    if rep.verdict == "inconclusive":
        return out, EXIT_INCONCLUSIVE
    return out


def cmd_gamma(args, cfg):
    fields, embs = load_field_file(args.field_file, cfg)
    M = _pick(fields, args.top, -1, "--top")
    K = _pick(fields, args.base, 0, "--base")
    cfields, cembs = load_field_file(args.candidates_file, cfg)
    cands = []
    for F in cfields:
        e = None
        for emb in cembs:
            if emb.target.label == F.label and emb.source.defining_poly == K.defining_poly:
                e = emb
        cands.append((F, e) if e else F)
    est = gamma_lower_bound(M, K, cands, _embedding_between(embs, K, M), config=cfg)
    return {"command": "gamma", **est.to_json()}


def cmd_tower(args, cfg):
    with open(args.tower_file, encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InvalidInput(f"{args.tower_file}: {exc}") from None
    return {"command": "tower", **tower_terms(TowerSpec.from_json(obj, cfg), config=cfg).to_json()}


def cmd_radical(args, cfg):
    data = args.data
    if not isinstance(data, list) or any(not isinstance(r, list) or len(r) != 2 for r in data):
        raise InvalidInput("--data must be a JSON list of [p, d] pairs")
    rep = radical_tower_check(data, args.window, config=cfg)
    return {"command": "radical-tower", **rep.to_json()}


def cmd_bz(args, cfg):
    if not isinstance(args.data, list):
        raise InvalidInput("--data must be a JSON list of [p, e, f] triples")
    return {"command": "bz-sum", **bz_partial_sum(BZData(args.data), config=cfg).to_json()}


def cmd_tame(args, cfg):
    M = _single_field(args, cfg)
    return {"command": "tame-check", **tame_exponent_check(M, args.exponent, args.primes).to_json()}


def cmd_enumerate(args, cfg, out):
    req = EnumerationRequest(args.degree, args.X, args.mode, args.borderline)
    res = enumerate_bounded(req, cfg, budget_seconds=args.budget)
    if cfg.output_format == "table":
        out.write(_table({"command": "enumerate", **res.summary()}))
        for rec in res.records():
            out.write(f"{rec['degree']}  {rec['poly']}\n")
    else:
        for line in res.json_lines():
            out.write(line + "\n")
    return EXIT_OK


COMMANDS = {
    "height": cmd_height,
    "field": cmd_field,
    "split": cmd_split,
    "reldisc": cmd_reldisc,
    "silverman": cmd_silverman,
    "gamma": cmd_gamma,
    "tower": cmd_tower,
    "radical-tower": cmd_radical,
    "bz-sum": cmd_bz,
    "tame-check": cmd_tame,
}


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        if set(obj) >= {"kind", "lo", "hi", "decimal"}:
            yield prefix, f"{obj['decimal']}  [{obj['kind']}]"
            return
        for k in sorted(obj):
            yield from _flatten(obj[k], f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(obj, list) and obj and all(isinstance(x, (dict, list)) for x in obj):
        for i, x in enumerate(obj):
            yield from _flatten(x, f"{prefix}[{i}]")
    else:
        yield prefix, obj if isinstance(obj, str) else json.dumps(obj)


def _table(obj) -> str:
    rows = list(_flatten(obj))
    w = max((len(k) for k, _ in rows), default=0)
    return "".join(f"{k.ljust(w)}  {v}\n" for k, v in rows)


def render(obj, fmt: str) -> str:
    if fmt == "table":
        return _table(obj)
    return json.dumps(obj, sort_keys=True, ensure_ascii=False) + "\n"


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = _config(args)
        if args.command == "enumerate":
            return cmd_enumerate(args, cfg, out)
        result = COMMANDS[args.command](args, cfg)
        status = EXIT_OK
        if isinstance(result, tuple):
            result, status = result
        out.write(render(result, cfg.output_format))
        return status
    except NorthcottError as exc:
        err = {"error": exc.code, "message": str(exc)}
        out.write(render(err, "json"))
        return exc.exit_status
    except OSError as exc:
        out.write(render({"error": "io_error", "message": str(exc)}, "json"))
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
