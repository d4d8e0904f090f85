"""Command-line entry point.

Exit codes: 0 on success, 1 on bad input, 2 when a resource cap is hit.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import jsonio
from .analysis import closure_report
from .automata import Dfa, find_counterexample
from .builders import CONSTRUCTIONS, SuccinctAutomaton, construct, language_dfa
from .closures import (
    DEFAULT_CABA_CAP, DEFAULT_CARRIER_CAP, Kind, atom_name, closure,
    closure_dfa, describe, parse_element,
)
from .errors import InputError, ResourceLimitError
from .generators import dependency, validate_generator
from .profiles import build_profiles


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--regex", help="regular expression, e.g. '(a+b)*a'")
    p.add_argument("--alphabet", help="alphabet as a string of single characters")
    p.add_argument("--input", metavar="FILE", help="automaton JSON document")


def _add_output(p: argparse.ArgumentParser, choices, default: str) -> None:
    p.add_argument("--output", choices=choices, default=default)
    p.add_argument("--out", metavar="FILE", help="write to FILE instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="succinct", description="Canonical succinct automata for regular languages.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("build", help="build a canonical succinct automaton")
    p.add_argument("--construction", choices=CONSTRUCTIONS, required=True)
    _add_input(p)
    _add_output(p, ["dot", "json", "table"], "table")
    p.add_argument("--generator", metavar="FILE", help="custom generator JSON document")
    p.add_argument("--basis", choices=["paper-fig6"], help="named basis for the xor construction")
    p.add_argument("--cap", type=int, metavar="N", help="closure carrier size cap")

    p = sub.add_parser("report", help="closure sizes and canonical automaton sizes")
    _add_input(p)
    _add_output(p, ["json", "table"], "table")
    p.add_argument("--generator", metavar="FILE", help="also assess this generator of the xor-CABA")

    p = sub.add_parser("check", help="language equivalence of two automata")
    p.add_argument("--left", metavar="FILE", required=True)
    p.add_argument("--right", metavar="FILE", required=True)
    p.add_argument("--out", metavar="FILE")

    p = sub.add_parser("atoms", help="list the atoms (word profiles) of the language")
    _add_input(p)
    _add_output(p, ["json", "table"], "table")

    p = sub.add_parser("closure", help="the minimal DFA structured by a closure")
    p.add_argument("--kind", choices=[k.value for k in Kind], required=True)
    _add_input(p)
    _add_output(p, ["dot", "json", "table"], "table")
    p.add_argument("--cap", type=int, metavar="N")
    return parser


def _language(args) -> Dfa:
    if (args.regex is None) == (args.input is None):
        raise InputError("give exactly one of --regex or --input")
    if args.regex is not None:
        if not args.alphabet:
            raise InputError("--regex needs --alphabet")
        return language_dfa(args.regex, list(args.alphabet))
    if args.alphabet:
        raise InputError("--alphabet only applies to --regex")
    return language_dfa(jsonio.load_automaton(args.input))


def _generator_elements(ps, path: str) -> list[int]:
    return [parse_element(ps, spec) for spec in jsonio.load_generator(path)]


def _describe_generator(aut: SuccinctAutomaton) -> str:
    gen = aut.generator
    ps = aut.system
    names = ", ".join(aut.labels)
    line = f"generator: {len(gen)} elements ({gen.combination}) [{names}]"
    if gen.is_basis:
        return line + ", basis\n"
    dep = dependency(gen)
    if dep is not None:
        terms = " + ".join(f"y{j}" for j in range(len(gen)) if dep >> j & 1)
        return line + f", NOT a basis: {terms} = 0\n"
    return line + ", NOT a basis\n"


def _cmd_build(args) -> str:
    m = _language(args)
    ps = build_profiles(m)
    options = {}
    if args.cap is not None:
        options["cap"] = args.cap
    if args.basis is not None:
        if args.construction != "xor":
            raise InputError("--basis applies to --construction xor only")
        if args.generator is not None:
            raise InputError("--basis and --generator are exclusive")
        options["basis"] = args.basis
    if args.generator is not None:
        elements = _generator_elements(ps, args.generator)
        options["basis" if args.construction == "xor" else "custom"] = elements
    aut = construct(args.construction, ps, **options)
    if args.output == "json":
        return jsonio.dumps(jsonio.to_json(aut.automaton))
    if args.output == "dot":
        return jsonio.to_dot(aut.automaton, args.construction)
    return f"construction: {args.construction}\n" + _describe_generator(aut) + jsonio.to_table(aut.automaton)


def _cmd_report(args) -> str:
    m = _language(args)
    ps = build_profiles(m)
    report = closure_report(None, ps=ps)
    data = report.as_dict()
    if args.generator is not None:
        gen = construct("xor-caba", ps, custom=_generator_elements(ps, args.generator)).generator
        verdict = validate_generator(gen)
        data["generator"] = {
            "elements": [describe(ps, y) for y in gen.elements],
            "rank": verdict.rank,
            "generator": verdict.generator_law,
            "basis": gen.is_basis,
        }
    if args.output == "json":
        return jsonio.dumps(data)
    rows = [
        ["minimal DFA states", str(report.states)],
        ["atoms", str(report.atoms)],
        ["CSL closure", str(report.csl)],
        ["CDL closure", str(report.cdl)],
        ["VEC closure", str(report.vec)],
        ["VEC dimension", str(report.dim)],
        ["CABA closure", str(report.caba)],
    ]
    rows += [[f"size {name}", str(size)] for name, size in report.sizes.items()]
    rows += [[f"flag {flag}", "yes" if value else "no"] for flag, value in data["flags"].items()]
    if "generator" in data:
        g = data["generator"]
        rows.append(["xor-CABA generator", f"{len(g['elements'])} elements, rank {g['rank']}"])
        rows.append(["  generator law", "yes" if g["generator"] else "no"])
        rows.append(["  basis", "yes" if g["basis"] else "NO (not a basis)"])
    return jsonio.render_rows(["quantity", "value"], rows)


def _cmd_check(args) -> str:
    left = jsonio.load_automaton(args.left)
    right = jsonio.load_automaton(args.right)
    word = find_counterexample(left, right)
    if word is None:
        return "equivalent\n"
    return f"not equivalent: {json.dumps(word)} is accepted by exactly one side\n"


def _cmd_atoms(args) -> str:
    ps = build_profiles(_language(args))
    m = ps.base
    names = m.labels or tuple(str(q) for q in range(m.state_count))
    records = []
    for k in range(len(ps)):
        records.append({
            "atom": atom_name(ps, k),
            "witness": ps.witness[k],
            "profile": [names[q] for q in sorted(ps.states(k))],
            # an atom lies in L iff the initial state belongs to its profile
            "in_language": bool(ps.profiles[k] >> m.initial & 1),
        })
    if args.output == "json":
        return jsonio.dumps(records)
    rows = [[str(k), r["atom"], "{" + ",".join(r["profile"]) + "}", "*" if r["in_language"] else ""]
            for k, r in enumerate(records)]
    return jsonio.render_rows(["index", "atom", "profile", "in L"], rows)


def _cmd_closure(args) -> str:
    ps = build_profiles(_language(args))
    kind = Kind(args.kind)
    if kind is Kind.CABA:
        alg = closure(ps, kind, args.cap or DEFAULT_CABA_CAP)
    else:
        alg = closure(ps, kind, args.cap or DEFAULT_CARRIER_CAP)
    dfa = closure_dfa(alg)
    if args.output == "json":
        return jsonio.dumps(jsonio.to_json(dfa))
    if args.output == "dot":
        return jsonio.to_dot(dfa, kind.value)
    return f"closure: {kind.value}, {dfa.state_count} elements\n" + jsonio.to_table(dfa)


COMMANDS = {
    "build": _cmd_build,
    "report": _cmd_report,
    "check": _cmd_check,
    "atoms": _cmd_atoms,
    "closure": _cmd_closure,
}


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        text = COMMANDS[args.command](args)
        if getattr(args, "out", None):
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return 0
    except _UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 1
    except ResourceLimitError as e:
        print(f"resource limit: {e}", file=sys.stderr)
        return 2
    except InputError as e:
        print(f"input error: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"input error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
