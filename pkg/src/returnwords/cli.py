"""Command-line front end.

Exit codes: 0 success (or R_m holds), 1 R_m fails, 2 usage or input error,
3 the prefix could not be certified.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .beta import (BetaSpec, beta_integers, beta_source, gap_word_matches_fixed_point,
                   parse_coefficients)
from .errors import CertificationError, ParameterError, ReturnWordsError
from .factors import (build_factor_table, complexity, delta_complexity, special_factors,
                      table_to_json)
from .returns import build_return_trie, return_set, trie_leaf_identity, trie_to_dot
from .rm import check_rm
from .words import BUILTIN_RULES, WordSource, builtin, parse_substitution

SCHEMA = 1
EXIT_OK, EXIT_FAILS, EXIT_USAGE, EXIT_CERT = 0, 1, 2, 3


def show(word: str) -> str:
    return word if word else "ε"


def _directives(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise ParameterError(f"bad directive list {text!r}") from None


def resolve_source(args) -> WordSource:
    given = [x for x in (args.source, args.sub_file, args.sturmian, args.beta, args.periodic) if x is not None]
    if len(given) != 1:
        raise SystemExit(_usage("give exactly one of --source, --sub-file, --sturmian, --beta, --periodic"))
    if args.sub_file is not None or (args.source is not None and args.source not in BUILTIN_RULES
                                     and os.path.isfile(args.source)):
        path = args.sub_file if args.sub_file is not None else args.source
        with open(path, encoding="utf-8") as fh:
            sub = parse_substitution(fh.read())
        return WordSource.from_substitution(sub, name=os.path.basename(path))
    if args.source is not None:
        return builtin(args.source)
    if args.sturmian is not None:
        return WordSource.sturmian(_directives(args.sturmian))
    if args.beta is not None:
        return beta_source(parse_coefficients(args.beta))
    return WordSource.periodic(args.periodic, args.preperiod or "")


def _usage(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return EXIT_USAGE


def emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps({"schema": SCHEMA, **payload}, indent=2, ensure_ascii=False))
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_gen(args) -> int:
    src = resolve_source(args)
    n = args.len if args.len is not None else args.max_len
    word = src.prefix(n)
    emit(args, {"command": "gen", "source": src.name, "length": n, "word": word}, word)
    return EXIT_OK


def cmd_analyze(args) -> int:
    src = resolve_source(args)
    n = args.max_len
    t = build_factor_table(src, n)
    cs = [complexity(t, k) for k in range(n + 1)]
    ds = [delta_complexity(t, k) for k in range(n + 1)]
    lines = [f"source: {src.name}", f"certificate: prefix lengths {t.certificate.lengths[0]} and "
             f"{t.certificate.lengths[1]} agree on factors of length {t.certificate.window}",
             "", f"{'n':>3} {'C(n)':>6} {'dC(n)':>6}  special factors (B, class)"]
    weak = 0
    for k in range(n + 1):
        specials = special_factors(t, k)
        weak += sum(r.weak for r in specials)
        desc = ", ".join(f"{show(r.factor)}[{r.order:+d} {r.cls}]" for r in specials)
        lines.append(f"{k:>3} {cs[k]:>6} {ds[k]:>6}  {desc}")
    lines.append("")
    lines.append(f"weak bispecial factors up to length {n}: {weak}")
    payload = {"command": "analyze", "source": src.name, "max_length": n,
               "certificate": t.certificate.as_dict(), "complexity": cs, "delta": ds,
               "weak_bispecial": weak, "factors": table_to_json(t)}
    emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_returns(args) -> int:
    src = resolve_source(args)
    w = args.factor
    t = build_factor_table(src, max(len(w), 1))
    rs = return_set(src, w, table=t)
    trie = build_return_trie(t, w, args.depth_cap)
    if trie.complete_return_words() != frozenset(rs.complete):
        raise CertificationError(f"trie and scan disagree on the return words of {w!r}")
    identity = trie_leaf_identity(trie)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(trie_to_dot(trie))
    lines = [f"source: {src.name}", f"factor: {show(w)}", f"return words ({len(rs)}):"]
    lines += [f"  {v}   complete: {v + w}" for v in rs.returns]
    lines.append(f"trie: {len(trie.nodes)} nodes, {len(trie.leaves)} leaves, "
                 f"leaf identity {'holds' if identity else 'FAILS'}")
    if rs.eventually_periodic:
        lines.append("single return word: the word is eventually periodic")
    payload = {"command": "returns", "source": src.name, **rs.as_dict(),
               "trie": {"nodes": len(trie.nodes), "leaves": trie.leaves,
                        "internal": trie.internal, "leaf_identity": identity}}
    emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_check_rm(args) -> int:
    src = resolve_source(args)
    v = check_rm(src, args.m, args.max_len, method=args.method)
    if v.holds:
        text = f"{src.name}: R_{args.m} holds for all factors of length <= {args.max_len} ({args.method})"
    else:
        text = (f"{src.name}: R_{args.m} fails; witness {show(v.witness)} has "
                f"{v.witness_count} return words")
    emit(args, {"command": "check-rm", "source": src.name, **v.as_dict()}, text)
    return EXIT_OK if v.holds else EXIT_FAILS


def cmd_beta(args) -> int:
    t = parse_coefficients(args.coeffs)
    spec = BetaSpec(t)
    payload = {"command": "beta", **spec.as_dict()}
    lines = [f"coefficients: {','.join(map(str, t))}",
             f"beta: {spec.beta:.15g} (residual {spec.residual:.2e})",
             f"simple Parry: {spec.parry_simple}",
             f"R_m conditions: {spec.rm_conditions}",
             f"Arnoux-Rauzy case: {spec.arnoux_rauzy_case}",
             "distances: " + ", ".join(f"{k}:{d:.12g}" for k, d in enumerate(payload["distances"]))]
    code = EXIT_OK
    if args.check_rm:
        v = check_rm(beta_source(t), len(t), args.max_len)
        agree = v.holds == spec.rm_conditions
        payload["check_rm"] = {**v.as_dict(), "agrees_with_conditions": agree}
        lines.append(f"empirical R_{len(t)} up to length {args.max_len}: {v.status}"
                     + ("" if v.holds else f" (witness {show(v.witness)}, {v.witness_count} return words)"))
        lines.append(f"agrees with conditions: {agree}")
        code = EXIT_OK if v.holds else EXIT_FAILS
    if args.gaps:
        ints = beta_integers(t, args.gaps + 1)
        match = gap_word_matches_fixed_point(t, args.gaps)
        payload["gaps"] = {"word": ints.gap_word, "matches_fixed_point": match}
        lines.append(f"gap word: {ints.gap_word}")
        lines.append(f"matches fixed point: {match}")
    emit(args, payload, "\n".join(lines))
    return code


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_argument_group("source (exactly one)")
    src.add_argument("--source", help=f"builtin name ({', '.join(BUILTIN_RULES)}) or substitution file")
    src.add_argument("--sub-file", help="substitution file: 'alphabet: ...', 'a -> word' lines, optional 'seed: a'")
    src.add_argument("--sturmian", metavar="D1,D2,...",
                     help="characteristic Sturmian word; the directive list repeats periodically")
    src.add_argument("--beta", metavar="T1,...,TM", help="fixed point of the beta-substitution")
    src.add_argument("--periodic", metavar="WORD", help="periodic word WORD^inf")
    src.add_argument("--preperiod", metavar="WORD", help="preperiod for --periodic")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--max-len", type=int, help="length bound (default 10; 14 for beta)")

    p = argparse.ArgumentParser(prog="returnwords", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="print a prefix of the word")
    g.add_argument("--len", type=int, help="number of letters (default --max-len)")
    g.set_defaults(func=cmd_gen)

    a = sub.add_parser("analyze", parents=[common], help="complexity and special factors")
    a.set_defaults(func=cmd_analyze)

    r = sub.add_parser("returns", parents=[common], help="return words of one factor")
    r.add_argument("--factor", required=True, help="the factor (may be empty)")
    r.add_argument("--dot", metavar="PATH", help="write the return-word trie in DOT format")
    r.add_argument("--depth-cap", type=int, help="trie depth cap (default 64|w| + 256)")
    r.set_defaults(func=cmd_returns)

    c = sub.add_parser("check-rm", parents=[common], help="check property R_m up to --max-len")
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--method", choices=["full", "bispecial"], default="bispecial")
    c.set_defaults(func=cmd_check_rm)

    b = sub.add_parser("beta", parents=[common], help="beta-substitution report")
    b.add_argument("--coeffs", required=True, metavar="T1,...,TM", help="most significant first")
    b.add_argument("--check-rm", action="store_true", help="also check R_m on the fixed point")
    b.add_argument("--gaps", type=int, metavar="N", help="compare the first N beta-integer gaps with the fixed point")
    b.set_defaults(func=cmd_beta)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.max_len is None:
        args.max_len = 14 if args.command == "beta" else 10
    if args.max_len < 1:
        return _usage("--max-len must be >= 1")
    try:
        return args.func(args)
    except CertificationError as exc:
        print(f"certification failure: {exc}", file=sys.stderr)
        return EXIT_CERT
    except (ReturnWordsError, OSError) as exc:
        return _usage(str(exc))


if __name__ == "__main__":
    sys.exit(main())
