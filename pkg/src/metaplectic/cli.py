"""Command-line front end.

    metaplectic check --unitary u:inf "nu^{1/2} |x omega0"
    metaplectic mu-star -p 3 "nu x eta |x omega0" --format json
    metaplectic verify-lemma --pool-size 6 --max-len 4
    metaplectic hilbert -p 3 -- -1 -1

Exit codes: 0 success (``check``: irreducible), 10 reducible, 1 failed
Lemma verification, 2 parse/usage error, 3 semantic error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import dsl
from .characters import ETA, UnitarySymbolTable
from .formal_ring import GenuinenessError, SpWord
from .irreducibility import canonicalize, decide
from .jacquet import default_pool, genuine_words, jacquet_multiplicity, mu_star, verify_lemma
from .padic_cover import PAdicField, eta_minus1_order, hilbert

FORMAT_ENV = "METAPLECTIC_FORMAT"

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_SEMANTIC = 3
EXIT_REDUCIBLE = 10


class SemanticError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _add_field_opts(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--unitary", action="append", default=[], metavar="NAME:ORDER",
                    help="declare a unitary symbol; ORDER is a positive integer or 'inf'")
    g = sp.add_mutually_exclusive_group()
    g.add_argument("-p", "--prime", type=int, help="work over Q_p")
    g.add_argument("--eta-order", type=int, choices=(1, 2),
                   help="order of x -> (x,-1)_F for an abstract field")
    sp.add_argument("--format", choices=("text", "json"), default=None)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="metaplectic",
                 description="Principal series of metaplectic Sp(2n) and split SO(2n+1).")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("check", help="decide irreducibility")
    _add_field_opts(sp)
    sp.add_argument("series")

    sp = sub.add_parser("canon", help="canonical Weyl-orbit representative")
    _add_field_opts(sp)
    sp.add_argument("series")

    sp = sub.add_parser("mu-star", help="full Jacquet expansion")
    _add_field_opts(sp)
    sp.add_argument("series")

    sp = sub.add_parser("multiplicity", help="multiplicity of left (x) right in mu*")
    _add_field_opts(sp)
    sp.add_argument("series")
    sp.add_argument("--left", required=True, help="GL-side word, e.g. 'nu x nu^{1/2}' ('' for 1)")
    sp.add_argument("--right", required=True, help="induced side, e.g. 'u |x omega0'")

    sp = sub.add_parser("verify-lemma", help="check M*~ = (chi (x) chi) M* chi^-1 exhaustively")
    _add_field_opts(sp)
    sp.add_argument("--pool-size", type=int, default=6)
    sp.add_argument("--max-len", type=int, default=4)

    sp = sub.add_parser("hilbert", help="Hilbert symbol (a, b)_p")
    sp.add_argument("-p", "--prime", type=int, required=True)
    sp.add_argument("a")
    sp.add_argument("b")
    sp.add_argument("--format", choices=("text", "json"), default=None)

    sp = sub.add_parser("eta", help="order of x -> (x,-1)_p")
    sp.add_argument("-p", "--prime", type=int, required=True)
    sp.add_argument("--format", choices=("text", "json"), default=None)
    return ap


def _format(args) -> str:
    fmt = args.format or os.environ.get(FORMAT_ENV, "text")
    if fmt not in ("text", "json"):
        raise SemanticError(f"{FORMAT_ENV} must be 'text' or 'json', got {fmt!r}")
    return fmt


def _eta_orders(args, inputs: list[str]) -> list[int]:
    if args.prime is not None:
        return [eta_minus1_order(PAdicField(args.prime))]
    if args.eta_order is not None:
        return [args.eta_order]
    mentions = any(tok.kind == "ident" and tok.text == ETA
                   for text in inputs for tok in dsl.tokenize(text))
    if mentions:
        raise SemanticError("input uses eta; give -p PRIME or --eta-order {1,2}")
    # eta cannot appear in the result, so its order is unobservable here
    return [2]


def _table(args, eta_order: int) -> UnitarySymbolTable:
    try:
        return UnitarySymbolTable.from_specs(args.unitary, eta_order)
    except ValueError as exc:
        raise SemanticError(str(exc)) from None


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _run(args) -> int:
    fmt = _format(args)
    cmd = args.command

    if cmd == "hilbert":
        try:
            a, b = Fraction(args.a), Fraction(args.b)
            F = PAdicField(args.prime)
        except (ValueError, ZeroDivisionError) as exc:
            raise SemanticError(str(exc)) from None
        if a == 0 or b == 0:
            raise SemanticError("Hilbert symbol arguments must be nonzero")
        value = hilbert(a, b, F)
        _emit(json.dumps({"p": F.p, "a": str(a), "b": str(b), "value": value})
              if fmt == "json" else str(value))
        return EXIT_OK

    if cmd == "eta":
        try:
            order = eta_minus1_order(PAdicField(args.prime))
        except ValueError as exc:
            raise SemanticError(str(exc)) from None
        _emit(json.dumps({"p": args.prime, "eta_order": order}) if fmt == "json" else str(order))
        return EXIT_OK

    if cmd == "verify-lemma":
        return _verify_lemma(args, fmt)

    inputs = [args.series] + ([args.left, args.right] if cmd == "multiplicity" else [])
    (eta_order,) = _eta_orders(args, inputs)
    table = _table(args, eta_order)
    ps = dsl.parse(args.series, table)

    if cmd == "check":
        verdict = decide(ps)
        _emit(dsl.render(verdict, fmt))
        return EXIT_OK if verdict.irreducible else EXIT_REDUCIBLE
    if cmd == "canon":
        _emit(dsl.render(canonicalize(ps), fmt))
        return EXIT_OK
    if cmd == "mu-star":
        _emit(dsl.render(mu_star(ps), fmt))
        return EXIT_OK
    if cmd == "multiplicity":
        left = dsl.parse_word(args.left, table, ps.genuine)
        right = dsl.parse(args.right, table)
        if right.genuine != ps.genuine:
            raise SemanticError("--right must use the same anchor as the series")
        k = jacquet_multiplicity(ps, left, SpWord(right.chars, right.genuine))
        _emit(json.dumps({"multiplicity": k}) if fmt == "json" else str(k))
        return EXIT_OK
    raise AssertionError(cmd)


def _verify_lemma(args, fmt: str) -> int:
    if args.pool_size < 0 or args.max_len < 0:
        raise SemanticError("--pool-size and --max-len must be non-negative")
    if args.prime is not None or args.eta_order is not None:
        orders = _eta_orders(args, [])
    else:
        orders = [1, 2]  # the identity is field-uniform; check both cases
    specs = args.unitary or ["u:inf"]
    failures = []
    total = 0
    for eta_order in orders:
        try:
            table = UnitarySymbolTable.from_specs(specs, eta_order)
            pool = default_pool(table, args.pool_size)
        except ValueError as exc:
            raise SemanticError(str(exc)) from None
        for w in genuine_words(pool, args.max_len):
            total += 1
            report = verify_lemma(w)
            if not report.ok:
                failures.append((eta_order, report))
    if fmt == "json":
        _emit(json.dumps({
            "cases": total,
            "eta_orders": orders,
            "passed": total - len(failures),
            "failures": [{"eta_order": o, "word": str(r.word),
                          "only_genuine": dsl.terms_json(r.only_genuine),
                          "only_linear": dsl.terms_json(r.only_linear)} for o, r in failures],
        }, ensure_ascii=False, sort_keys=True, indent=2))
    elif failures:
        lines = [f"{len(failures)} of {total} cases fail"]
        lines += [f"[eta order {o}] {r.describe()}" for o, r in failures]
        _emit("\n".join(lines))
    else:
        _emit(f"all {total} cases pass")
    return EXIT_FAIL if failures else EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _run(args)
    except dsl.DSLError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (SemanticError, GenuinenessError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC


if __name__ == "__main__":
    sys.exit(main())
