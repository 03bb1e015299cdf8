"""Command-line front end.

Words are digit strings (one character per letter, alphabet size at most
10 on the command line).  Output is plain text by default and JSON with
--json; identical invocations produce byte-identical output.  Exit codes:
0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional

from . import complexity, experiments, gf2poly, modular, nfa, words
from .errors import AcxError


def _emit_json(data: dict) -> None:
    print(json.dumps(data, indent=2))


def _parse_word(text: str, alphabet: Optional[int]) -> words.Word:
    w = words.Word.from_text(text, k=alphabet)
    if w.k > 10:
        raise AcxError("command-line words are limited to alphabet size 10")
    return w


def _write_dot(path: Optional[str], automaton: nfa.Nfa) -> None:
    if path:
        with open(path, "w") as handle:
            handle.write(nfa.to_dot(automaton))


def _cmd_compute(args) -> int:
    w = _parse_word(args.word, args.alphabet)
    result = complexity.an_exact(w, jobs=args.jobs)
    _write_dot(args.dot, result.witness)
    if args.json:
        _emit_json({"word": str(w), "k": w.k, **result.to_json_dict()})
    else:
        cert = result.certificate
        print(f"A_N = {result.value}")
        print(
            f"witness: {result.witness.q} states, "
            f"{len(result.witness.transitions)} transitions, "
            f"finals={sorted(result.witness.finals)}"
        )
        print(
            f"certificate: states_ruled_out={cert.states_ruled_out} "
            f"search_nodes={cert.search_nodes} mode={cert.search_mode}"
        )
    return 0


def _cmd_bound(args) -> int:
    w = _parse_word(args.word, args.alphabet)
    result = complexity.power_upper_bound(w)
    _write_dot(args.dot, result.witness)
    hyde = complexity.hyde_bound(len(w))
    if args.json:
        _emit_json({"word": str(w), **result.to_json_dict(), "hyde_bound": hyde})
    else:
        print(f"power bound: {result.bound} (exponent {result.exponent})")
        print(f"hyde bound: {hyde}")
    return 0


def _cmd_classify(args) -> int:
    w = _parse_word(args.word, args.alphabet)
    value = complexity.an_exact(w, jobs=args.jobs).value
    member = value * args.c > len(w)
    if args.json:
        _emit_json(
            {"word": str(w), "k": w.k, "c": args.c, "value": value, "member": member}
        )
    else:
        print(f"A_N = {value}, |w| = {len(w)}, c = {args.c}")
        print(f"member of the high-complexity class: {'true' if member else 'false'}")
    return 0


def _cmd_simple(args) -> int:
    w = _parse_word(args.word, args.alphabet)
    value = complexity.an_exact(w, jobs=args.jobs).value
    bound = complexity.hyde_bound(len(w))
    simple = value < bound
    if args.json:
        _emit_json({"word": str(w), "value": value, "bound": bound, "simple": simple})
    else:
        print(f"A_N-simple: {'true' if simple else 'false'} (A_N = {value}, bound = {bound})")
    return 0


def _cmd_power(args) -> int:
    w = _parse_word(args.word, args.alphabet)
    spec = words.PowerSpec(w, Fraction(args.exp))
    result = words.power(spec)
    if args.json:
        _emit_json({"base": str(w), "exponent": args.exp, "power": str(result)})
    else:
        print(result)
    return 0


def _cmd_squarefree(args) -> int:
    w = _parse_word(args.word, args.alphabet)
    occ = words.contains_square(w)
    if args.json:
        _emit_json(
            {
                "word": str(w),
                "squarefree": occ is None,
                "occurrence": None
                if occ is None
                else {"start": occ.start, "period": occ.period, "length": occ.length},
            }
        )
    elif occ is None:
        print("squarefree")
    else:
        print(f"square occurrence: start={occ.start} period={occ.period} length={occ.length}")
    return 0


def _cmd_overlapfree(args) -> int:
    w = _parse_word(args.word, args.alphabet)
    free = words.is_overlap_free(w)
    if args.json:
        _emit_json({"word": str(w), "overlap_free": free})
    else:
        print("overlap-free" if free else "contains an overlap")
    return 0


def _cmd_shuffle(args) -> int:
    x = _parse_word(args.x, args.alphabet)
    y = _parse_word(args.y, args.alphabet)
    print(words.shuffle(x, y))
    return 0


def _cmd_morphism(args) -> int:
    if args.name != "brandenburg":
        raise AcxError(f"unknown morphism {args.name!r} (available: brandenburg)")
    m = words.brandenburg()
    w = _parse_word(args.word, args.alphabet)
    print(words.apply_morphism(m, w))
    return 0


def _parse_int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise AcxError(f"expected a comma-separated integer list, got {text!r}") from exc


def _cmd_construct(args) -> int:
    positions = _parse_int_list(args.positions)
    bits = _parse_int_list(args.bits)
    constraint = modular.PositionConstraint(
        n=args.n, positions=positions, bits=bits, k=args.alphabet or 2
    )
    mode = "smallest_prime" if args.prime else "smallest_integer"
    witness = modular.build_low_complexity_word(
        constraint, mode, fill=None if args.keep_wildcards else 0
    )
    if args.dot and len(witness.word):
        cycle = complexity.cyclic_witness(
            witness.word, Fraction(constraint.n, witness.modulus)
        )
        _write_dot(args.dot, cycle)
    if args.json:
        _emit_json(witness.to_json_dict())
    else:
        print(f"m = {witness.modulus}")
        print(f"z = {witness.template_text}")
        print(f"x = {witness.word}")
        print(f"bound = {witness.bound}")
    return 0


def _cmd_table(args) -> int:
    table = modular.table_best_bound(args.max_c, args.max_n)
    if args.json:
        _emit_json(
            {
                "max_c": args.max_c,
                "max_n": args.max_n,
                "table": [[v for v in row] for row in table],
            }
        )
    elif args.csv:
        print(modular.table_csv(table), end="")
    else:
        print(modular.format_table(table), end="")
    return 0


def _cmd_primorial(args) -> int:
    print(modular.primorial(args.x))
    return 0


def _cmd_theta(args) -> int:
    print(modular.chebyshev_theta(args.x))
    return 0


def _cmd_gf2(args) -> int:
    if args.operation in ("or", "an1"):
        if args.vars is None:
            raise AcxError(f"gf2 {args.operation} needs --vars")
        if args.operation == "or":
            poly = gf2poly.or_poly(args.vars)
        else:
            poly = gf2poly.constant_indicator_poly(args.vars)
        if args.json:
            _emit_json(
                {
                    "n": poly.n,
                    "degree": gf2poly.degree(poly),
                    "monomials": len(poly.monomials),
                    "poly": gf2poly.format_poly(poly),
                }
            )
        else:
            print(gf2poly.format_poly(poly))
    elif args.operation == "degree":
        if args.poly is None:
            raise AcxError("gf2 degree needs --poly")
        poly = gf2poly.parse_poly(args.poly, n=args.vars)
        deg = gf2poly.degree(poly)
        if args.json:
            _emit_json({"poly": gf2poly.format_poly(poly), "degree": deg})
        else:
            print("zero polynomial" if deg is None else deg)
    elif args.operation == "anf":
        if args.table is None:
            raise AcxError("gf2 anf needs --table")
        poly = gf2poly.anf_from_truth_table(args.table)
        if args.json:
            _emit_json(
                {
                    "table": args.table,
                    "poly": gf2poly.format_poly(poly),
                    "degree": gf2poly.degree(poly),
                }
            )
        else:
            print(gf2poly.format_poly(poly))
    return 0


def _cmd_survey(args) -> int:
    report = experiments.survey(
        n=args.n,
        samples=args.samples,
        seed=args.seed,
        epsilon=Fraction(args.eps),
        k=args.alphabet or 2,
        jobs=args.jobs,
    )
    if args.json:
        _emit_json(report.to_json_dict())
    else:
        print(f"n = {report.n}, k = {report.k}, samples = {report.samples}, seed = {report.seed}")
        print(f"mean ratio = {report.mean}")
        print(f"median ratio = {report.median}")
        print(f"fraction within {report.epsilon} of 1: {report.within_epsilon}")
        for ratio, freq in report.distribution:
            print(f"  {ratio}: {freq}")
    return 0


def _cmd_verify(args) -> int:
    if args.suite == "paper":
        report = experiments.verify_reference_word()
        family = experiments.shuffle_family_check(8)
        data = {"reference_word": report, "shuffle_family": family, "ok": family["ok"]}
        ok = family["ok"]
    elif args.suite == "oracle":
        sweep = experiments.oracle_cross_check(n_max=args.n_max or 6)
        data = sweep.to_json_dict()
        ok = sweep.ok
    else:
        sweep = experiments.sandwich_check(n_max=args.n_max or 6)
        data = sweep.to_json_dict()
        ok = sweep.ok
    if args.json:
        _emit_json(data)
    else:
        print(json.dumps(data, indent=2))
    if not ok:
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="acx",
        description="Exact nondeterministic automatic complexity and friends.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def word_cmd(name, func, help_text, extra=()):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("word", help="word as a digit string")
        p.add_argument("--alphabet", type=int, default=None,
                       help="alphabet size (default: 1 + largest digit)")
        p.add_argument("--json", action="store_true")
        for add in extra:
            add(p)
        p.set_defaults(func=func)
        return p

    def add_jobs(p):
        p.add_argument("--jobs", type=int, default=1,
                       help="worker processes for the search fan-out")

    def add_dot(p):
        p.add_argument("--dot", default=None, metavar="PATH",
                       help="write the witness automaton as Graphviz DOT")

    word_cmd("compute", _cmd_compute, "exact A_N with witness and certificate",
             extra=(add_jobs, add_dot))
    word_cmd("bound", _cmd_bound, "cyclic power upper bound and hyde bound",
             extra=(add_dot,))
    p = word_cmd("classify", _cmd_classify, "is A_N(w) > |w|/c", extra=(add_jobs,))
    p.add_argument("--c", type=int, required=True)
    word_cmd("simple", _cmd_simple, "is A_N(w) below the universal bound",
             extra=(add_jobs,))
    p = word_cmd("power", _cmd_power, "fractional power of a word")
    p.add_argument("--exp", required=True, help="exponent p/q")
    word_cmd("squarefree", _cmd_squarefree, "test squarefreeness")
    word_cmd("overlapfree", _cmd_overlapfree, "test overlap-freeness")

    p = sub.add_parser("shuffle", help="perfect shuffle of two words")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--alphabet", type=int, default=None)
    p.set_defaults(func=_cmd_shuffle)

    p = word_cmd("morphism", _cmd_morphism, "apply a named morphism")
    p.add_argument("--name", default="brandenburg")

    p = sub.add_parser("construct", help="low-complexity word matching position constraints")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--positions", required=True, help="comma-separated positions")
    p.add_argument("--bits", required=True, help="comma-separated letters")
    p.add_argument("--prime", action="store_true", help="use the smallest prime modulus")
    p.add_argument("--alphabet", type=int, default=2)
    p.add_argument("--keep-wildcards", action="store_true",
                   help="render unconstrained cells as a fresh letter instead of 0")
    p.add_argument("--json", action="store_true")
    p.add_argument("--dot", default=None, metavar="PATH")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("table", help="worst-case best bound by constraint count and length")
    p.add_argument("--max-c", type=int, default=6)
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--csv", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("primorial", help="product of primes up to x")
    p.add_argument("x", type=int)
    p.set_defaults(func=_cmd_primorial)

    p = sub.add_parser("theta", help="Chebyshev theta: sum of ln p for primes p <= x")
    p.add_argument("x", type=int)
    p.set_defaults(func=_cmd_theta)

    p = sub.add_parser("gf2", help="multilinear GF(2) polynomial operations")
    p.add_argument("operation", choices=("or", "an1", "degree", "anf"))
    p.add_argument("--vars", type=int, default=None)
    p.add_argument("--poly", default=None)
    p.add_argument("--table", default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_gf2)

    p = sub.add_parser("survey", help="empirical concentration of A_N on random words")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--eps", default="1/3", help="tolerance as p/q")
    p.add_argument("--alphabet", type=int, default=2)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_survey)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=("paper", "oracle", "sandwich"), required=True)
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except AcxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
