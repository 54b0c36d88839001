"""Command line front end.

    superlie basis   --alphabet "x:odd y:even" --weight 4 [--scheme hall|lyndon|shirshov]
    superlie reduce  --alphabet "x:odd y:even" --expr "[x,x,y]" --weight 3
    superlie collect --alphabet "a:even b:even" --word baba [--stages 1]
    superlie verify  --alphabet "a:even b:even" --weight 4
    superlie dims    --alphabet "x:odd" --weight 3

``--json`` turns any command's output into one JSON document.  Exit codes:
0 success, 1 failed verification, 2 parse error, 3 capacity error.
"""
from __future__ import annotations

import argparse
import json
import sys

from .assoc import collect, is_basic_product, render_collected, render_product, verify_basis
from .core import CapacityError, DomainError, render_term
from .hall import HallSet, scheme_basis, super_basis, term_to_json
from .parse import ParseError, parse_alphabet, parse_expression, parse_word
from .reduce import normal_form

DEFAULT_WEIGHT = 8
SCHEMES = ("hall", "lyndon", "shirshov")


def _basis(args, out):
    alphabet = parse_alphabet(args.alphabet)
    basis = scheme_basis(alphabet, args.weight, args.scheme)
    if args.json:
        json.dump(
            {"basis": basis.fingerprint, "elements": [basis.element_json(e) for e in basis]},
            out,
            ensure_ascii=False,
        )
        out.write("\n")
        return 0
    for e in basis:
        parity = "odd" if e.parity else "even"
        out.write(f"{e.index}\t{e.weight}\t{parity}\t{e.kind}\t{render_term(e.term, alphabet.name)}\n")
    return 0


def _reduce(args, out):
    alphabet = parse_alphabet(args.alphabet)
    p = parse_expression(args.expr, alphabet)
    basis = super_basis(alphabet, args.weight)
    coords = normal_form(p, alphabet, basis)
    if args.json:
        json.dump(coords.to_json(), out, ensure_ascii=False)
        out.write("\n")
    else:
        out.write(coords.render() + "\n")
    return 0


def _collect(args, out):
    alphabet = parse_alphabet(args.alphabet)
    w = parse_word(args.word, alphabet)
    hall = HallSet(alphabet, max(len(w), 1))
    res = collect(w, alphabet, hall, stages=args.stages)
    if args.json:
        doc = {
            "word": args.word,
            "stages": args.stages,
            "collected": all(is_basic_product(s) for s in res),
            "terms": [
                {
                    "coeff": c,
                    "factors": [term_to_json(hall[i].term, alphabet) for i in seq],
                    "text": render_product(seq, hall),
                }
                for seq, c in res.sorted_items()
            ],
        }
        json.dump(doc, out, ensure_ascii=False)
        out.write("\n")
    else:
        out.write(render_collected(res, hall) + "\n")
    return 0


def _verify(args, out):
    alphabet = parse_alphabet(args.alphabet)
    reports = verify_basis(alphabet, args.weight, args.scheme)
    ok = all(r.ok for r in reports)
    if args.json:
        json.dump(
            {"alphabet": alphabet.spec(), "scheme": args.scheme, "ok": ok, "weights": [r.to_json() for r in reports]},
            out,
        )
        out.write("\n")
    else:
        for r in reports:
            line = f"weight {r.weight}: count {r.count} rank {r.rank} independent {'yes' if r.independent else 'NO'}"
            if r.expected is not None:
                line += f" basic products {r.products} rank {r.products_rank} expected {r.expected}"
            out.write(line + "\n")
    return 0 if ok else 1


def _dims(args, out):
    alphabet = parse_alphabet(args.alphabet)
    dims = scheme_basis(alphabet, args.weight, args.scheme).dims()
    if args.json:
        json.dump({"alphabet": alphabet.spec(), "scheme": args.scheme, "dims": dims}, out)
        out.write("\n")
    else:
        out.write(",".join(map(str, dims)) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alphabet", required=True, help='e.g. "a:even b:odd"')
    common.add_argument("--json", action="store_true")

    parser = argparse.ArgumentParser(prog="superlie", description="Bases of free Lie superalgebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("basis", parents=[common], help="list a super basis")
    p.add_argument("--weight", type=int, default=DEFAULT_WEIGHT)
    p.add_argument("--scheme", choices=SCHEMES, default="hall")
    p.set_defaults(func=_basis)

    p = sub.add_parser("reduce", parents=[common], help="coordinates of an expression in the Hall super basis")
    p.add_argument("--expr", required=True)
    p.add_argument("--weight", type=int, default=DEFAULT_WEIGHT)
    p.set_defaults(func=_reduce)

    p = sub.add_parser("collect", parents=[common], help="collect a word into basic products")
    p.add_argument("--word", required=True)
    p.add_argument("--stages", type=int, default=None, help="collect only the first K basic commutators")
    p.set_defaults(func=_collect)

    p = sub.add_parser("verify", parents=[common], help="per-weight rank checks")
    p.add_argument("--weight", type=int, default=DEFAULT_WEIGHT)
    p.add_argument("--scheme", choices=SCHEMES, default="hall")
    p.set_defaults(func=_verify)

    p = sub.add_parser("dims", parents=[common], help="per-weight basis sizes")
    p.add_argument("--weight", type=int, default=DEFAULT_WEIGHT)
    p.add_argument("--scheme", choices=SCHEMES, default="hall")
    p.set_defaults(func=_dims)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args, out)
    except ParseError as e:
        err.write(f"parse error: {e}\n")
        return 2
    except CapacityError as e:
        err.write(f"capacity error: {e}\n")
        return 3
    except DomainError as e:
        err.write(f"error: {e}\n")
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
