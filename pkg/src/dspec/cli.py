"""Command-line front end.

Verbs: closure | compare | corpus | check | trees | arguments |
activation-sets.  Exit codes: 0 success, 1 corpus mismatch, 2 file or
parse error, 3 not an argument, 4 resource cap exceeded.  Output is
deterministic for identical invocations; set DSPEC_COLOR=0 to disable
styling (non-ttys are plain already).
"""
from __future__ import annotations

import argparse
import os
import random
import sys
from pathlib import Path

from .activation import ActivationDomain, ActivationQuery, minimal_activation_sets
from .arguments import Argument, enumerate_all_arguments, enumerate_arguments
from .closure import contradiction_witness, theory
from .core import Literal, Specification, ground_spec
from .engine import DEFAULT_DOMAIN_CAP
from .errors import (
    ArityError,
    DspecError,
    ForeignRuleError,
    GroundingError,
    NotAnArgumentError,
    ResourceCapError,
    SpecSyntaxError,
)
from .specificity import (
    RelationKind,
    check_theorem_condition,
    compare,
    find_subset_chain_violation,
    find_transitivity_counterexample,
    leq,
)
from .textio import parse_argument, parse_spec, render_outcome
from .trees import derivation_trees, format_tree, paths_of, tree_graph
from . import corpus as corpus_mod

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_PARSE = 2
EXIT_NOT_ARGUMENT = 3
EXIT_RESOURCE = 4

_RELATION_ORDER = (RelationKind.P1, RelationKind.P2, RelationKind.P3, RelationKind.CP)


def _use_color() -> bool:
    if os.environ.get("DSPEC_COLOR") == "0":
        return False
    return sys.stdout.isatty()


def _style(text: str, code: str) -> str:
    if _use_color():
        return f"\033[{code}m{text}\033[0m"
    return text


def _load_spec(path: str) -> Specification:
    text = Path(path).read_text(encoding="utf-8")
    return parse_spec(text, Path(path).name)


def _load_argument(text: str, spec: Specification) -> Argument:
    return parse_argument(text, spec)


def _print_literals(title: str, literals) -> None:
    ordered = sorted(literals, key=Literal.key)
    print(f"{title} ({len(ordered)}):")
    for lit in ordered:
        print(f"  {lit}")


def cmd_closure(args: argparse.Namespace) -> int:
    spec = ground_spec(_load_spec(args.spec))
    _print_literals("strict theory", theory(spec.strict).literals)
    _print_literals("defeasible theory", theory(spec.strict | spec.defeasible).literals)
    # a contradictory strict part is a modeling error; conflicting defaults
    # are the normal, interesting case
    for label, rules in (("strict", spec.strict), ("with defaults", spec.strict | spec.defeasible)):
        witness = contradiction_witness(rules)
        verdict = "none" if witness is None else f"witness {witness}"
        print(f"contradiction ({label}): {verdict}")
    return EXIT_OK


def cmd_compare(args: argparse.Namespace) -> int:
    spec = _load_spec(args.spec)
    a1 = _load_argument(args.arg1, spec)
    a2 = _load_argument(args.arg2, spec)
    kinds = (
        _RELATION_ORDER if args.relation == "all" else (RelationKind(args.relation),)
    )
    for kind in kinds:
        outcome = compare(
            spec, kind, a1, a2, minimal=not args.no_minimal, max_domain=args.max_domain
        )
        print(f"{kind.value.upper()}: {render_outcome(outcome, long=True)}")
    return EXIT_OK


def cmd_corpus(args: argparse.Namespace) -> int:
    manifest = Path(args.manifest) if args.manifest else corpus_mod.shipped_manifest()
    results = corpus_mod.run_corpus(manifest, minimal=not args.no_minimal)
    failures = 0
    for r in results:
        if r.ok:
            print(f"{_style('PASS', '32')} {r.case.spec_name} {r.case.relation} "
                  f"{r.computed}  [{r.case.anchor}]")
        else:
            failures += 1
            print(f"{_style('FAIL', '31')} {r.case.spec_name} {r.case.relation} "
                  f"expected {r.case.expected}, computed {r.computed}  [{r.case.anchor}]")
            print(f"     arg1: {r.case.arg1}")
            if r.case.arg2 != "-":
                print(f"     arg2: {r.case.arg2}")
    print(f"{len(results)} judgments: {len(results) - failures} passed, {failures} failed")
    if args.report_dir:
        outdir = Path(args.report_dir)
        outdir.mkdir(parents=True, exist_ok=True)
        tsv = outdir / "results.tsv"
        tsv.write_text(corpus_mod.results_tsv(results), encoding="utf-8")
        from .viz import save_corpus_figures

        written = save_corpus_figures(results, outdir)
        for path in [tsv, *written]:
            print(f"wrote {path}")
    return EXIT_OK if failures == 0 else EXIT_MISMATCH


def _population(spec: Specification, args: argparse.Namespace) -> tuple[Argument, ...]:
    if args.argument:
        return tuple(_load_argument(text, spec) for text in args.argument)
    population = enumerate_all_arguments(spec, max_args=10**9)
    if len(population) > args.max_args:
        if args.seed is not None:
            rng = random.Random(args.seed)
            population = tuple(sorted(rng.sample(population, args.max_args), key=Argument.key))
        else:
            population = population[: args.max_args]
    return population


def cmd_check(args: argparse.Namespace) -> int:
    spec = _load_spec(args.spec)
    minimal = not args.no_minimal

    if args.property == "theorem-conditions":
        for n in (1, 2, 3, 4):
            try:
                value = str(check_theorem_condition(spec, n)).lower()
            except ResourceCapError:
                value = "unknown (cap exceeded)"
            print(f"condition {n}: {value}")
        return EXIT_OK

    population = _population(spec, args)
    print(f"arguments considered: {len(population)}")

    if args.property == "transitivity":
        kinds = (
            _RELATION_ORDER if args.relation == "all" else (RelationKind(args.relation),)
        )
        for kind in kinds:
            triple = find_transitivity_counterexample(spec, kind, population, minimal=minimal)
            if triple is None:
                print(f"{kind.value.upper()}: no counterexample")
            else:
                a, b, c = triple
                print(f"{kind.value.upper()}: counterexample")
                print(f"  {a}")
                print(f"  {b}")
                print(f"  {c}")
        return EXIT_OK

    if args.property == "subset-chain":
        witness = find_subset_chain_violation(spec, population, minimal=minimal)
        if witness is None:
            print("subset chain holds: p3 within p2 within p1")
        else:
            a, b, finer, coarser = witness
            print(f"violated: {finer.value} holds but {coarser.value} does not for")
            print(f"  {a}")
            print(f"  {b}")
        return EXIT_OK

    if args.property == "cp-quasi-order":
        ok = True
        for a in population:
            if not leq(spec, RelationKind.CP, a, a, minimal=minimal):
                print(f"not reflexive at {a}")
                ok = False
        triple = find_transitivity_counterexample(
            spec, RelationKind.CP, population, minimal=minimal
        )
        if triple is not None:
            ok = False
            print("not transitive:")
            for x in triple:
                print(f"  {x}")
        if ok:
            print("cp is reflexive and transitive on this population")
        return EXIT_OK

    if args.property == "minimality-equivalence":
        mismatches = 0
        for kind in (RelationKind.P3, RelationKind.CP):
            for a in population:
                for b in population:
                    lo = leq(spec, kind, a, b, minimal=True)
                    hi = leq(spec, kind, a, b, minimal=False)
                    if lo != hi:
                        mismatches += 1
                        print(f"{kind.value}: minimal={lo} full={hi} for {a} vs {b}")
        if mismatches == 0:
            print("minimal-only and full quantification agree on all pairs")
        return EXIT_OK

    raise DspecError(f"unknown property {args.property!r}")


def cmd_trees(args: argparse.Namespace) -> int:
    spec = _load_spec(args.spec)
    argument = _load_argument(args.argument, spec)
    forest = derivation_trees(spec, argument)
    print(f"{len(forest)} derivation tree(s) for {argument.conclusion}")
    for i, tree in enumerate(forest, start=1):
        print(f"tree {i}:")
        print(format_tree(tree))
        path_sets = sorted(
            (sorted(p, key=Literal.key) for p in paths_of(tree)),
            key=lambda lits: [l.key() for l in lits],
        )
        rendered = ", ".join("{" + ", ".join(str(l) for l in p) + "}" for p in path_sets)
        print(f"paths: {rendered}")
    if args.render_dir:
        outdir = Path(args.render_dir)
        outdir.mkdir(parents=True, exist_ok=True)
        from .viz import save_tree_figure

        for i, tree in enumerate(forest, start=1):
            png = outdir / f"tree_{i:02d}.png"
            save_tree_figure(tree, png)
            dot = outdir / f"tree_{i:02d}.dot"
            dot.write_text(tree_graph(tree) + "\n", encoding="utf-8")
            print(f"wrote {png}")
            print(f"wrote {dot}")
    return EXIT_OK


def cmd_arguments(args: argparse.Namespace) -> int:
    spec = _load_spec(args.spec)
    if args.conclusion:
        from .textio import _Parser  # shared literal grammar

        parser = _Parser(args.conclusion)
        conclusion = parser.literal()
        parser.take("eof")
        population = enumerate_arguments(spec, conclusion, minimal_only=not args.all)
    else:
        population = enumerate_all_arguments(
            spec, minimal_only=not args.all, max_args=args.max_args
        )
    for argument in population:
        print(argument)
    print(f"{len(population)} argument(s)")
    return EXIT_OK


def cmd_activation_sets(args: argparse.Namespace) -> int:
    spec = _load_spec(args.spec)
    argument = _load_argument(args.argument, spec)
    query = ActivationQuery(
        spec,
        argument,
        ActivationDomain.STRICT if args.domain == "strict" else ActivationDomain.DEFEASIBLE_CLOSURE,
        simplified=not args.plain,
        minimal=not args.no_minimal,
    )
    sets = minimal_activation_sets(query, max_domain=args.max_domain)
    flavor = "activation sets" if args.plain else "simplified activation sets"
    scope = "minimal " if not args.no_minimal else ""
    print(f"{len(sets)} {scope}{flavor} over the {args.domain} domain")
    for hset in sets:
        ordered = ", ".join(str(l) for l in sorted(hset, key=Literal.key))
        print(f"  {{{ordered}}}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dspec",
        description="Decide specificity orderings between arguments of defeasible logic programs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("closure", help="print the strict and defeasible theories")
    p.add_argument("spec")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("compare", help="compare two arguments under one or all relations")
    p.add_argument("spec")
    p.add_argument("arg1")
    p.add_argument("arg2")
    p.add_argument("--relation", choices=["p1", "p2", "p3", "cp", "all"], default="all")
    p.add_argument("--no-minimal", action="store_true",
                   help="quantify over all activation sets, not only minimal ones")
    p.add_argument("--max-domain", type=int, default=DEFAULT_DOMAIN_CAP)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("corpus", help="run a manifest of expected judgments")
    p.add_argument("manifest", nargs="?", default=None,
                   help="manifest path (default: the shipped corpus)")
    p.add_argument("--no-minimal", action="store_true")
    p.add_argument("--report-dir", default=None,
                   help="write results.tsv and report figures here")
    p.set_defaults(func=cmd_corpus)

    p = sub.add_parser("check", help="verify an ordering property on one program")
    p.add_argument("spec")
    p.add_argument("property", choices=[
        "transitivity", "subset-chain", "cp-quasi-order",
        "theorem-conditions", "minimality-equivalence",
    ])
    p.add_argument("--relation", choices=["p1", "p2", "p3", "cp", "all"], default="all")
    p.add_argument("--max-args", type=int, default=64)
    p.add_argument("--seed", type=int, default=None,
                   help="sample the argument population instead of truncating")
    p.add_argument("--no-minimal", action="store_true")
    p.add_argument("--argument", action="append", default=None, metavar="TEXT",
                   help="restrict the population to these arguments (repeatable)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("trees", help="print derivation trees and their path sets")
    p.add_argument("spec")
    p.add_argument("argument")
    p.add_argument("--render-dir", default=None, help="also render PNG and DOT files here")
    p.set_defaults(func=cmd_trees)

    p = sub.add_parser("arguments", help="enumerate arguments of a program")
    p.add_argument("spec")
    p.add_argument("conclusion", nargs="?", default=None)
    p.add_argument("--all", action="store_true", help="include non-minimal supports")
    p.add_argument("--max-args", type=int, default=64)
    p.set_defaults(func=cmd_arguments)

    p = sub.add_parser("activation-sets", help="enumerate activation sets of an argument")
    p.add_argument("spec")
    p.add_argument("argument")
    p.add_argument("--domain", choices=["strict", "defeasible"], default="strict")
    p.add_argument("--plain", action="store_true",
                   help="plain activation sets instead of simplified ones")
    p.add_argument("--no-minimal", action="store_true")
    p.add_argument("--max-domain", type=int, default=DEFAULT_DOMAIN_CAP)
    p.set_defaults(func=cmd_activation_sets)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SpecSyntaxError, ArityError, GroundingError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (NotAnArgumentError, ForeignRuleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_ARGUMENT
    except ResourceCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
