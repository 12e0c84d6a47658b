"""Corpus manifest: expected comparison judgments over shipped rule files.

One judgment per line, fields separated by ";" outside braces:

    spec ; relation ; argument 1 ; argument 2 ; expected ; "anchor"

Relations p1/p2/p3/cp expect an outcome symbol, ``syn`` compares both
directions of the tree-path criterion, and ``trees`` expects the number of
derivation trees of argument 1 (argument 2 is then ``-``).
"""
from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .core import Specification
from .errors import DspecError
from .specificity import ComparisonOutcome, RelationKind, compare
from .textio import parse_argument, parse_spec, render_outcome
from .trees import derivation_trees, syntactic_leq

RELATIONS = ("p1", "p2", "p3", "cp", "syn", "trees")


@dataclass(frozen=True)
class CorpusCase:
    spec_name: str
    relation: str
    arg1: str
    arg2: str
    expected: str
    anchor: str
    line: int


@dataclass(frozen=True)
class CaseResult:
    case: CorpusCase
    computed: str
    ok: bool
    seconds: float


def shipped_manifest() -> Path:
    """The manifest distributed with the package."""
    return Path(str(resources.files("dspec").joinpath("data/manifest.txt")))


def _split_fields(line: str) -> list[str]:
    fields: list[str] = []
    depth = 0
    quoted = False
    current: list[str] = []
    for ch in line:
        if ch == '"':
            quoted = not quoted
        elif ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
        if ch == ";" and depth == 0 and not quoted:
            fields.append("".join(current).strip())
            current = []
        else:
            current.append(ch)
    fields.append("".join(current).strip())
    return fields


def parse_manifest(text: str) -> tuple[CorpusCase, ...]:
    cases: list[CorpusCase] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        fields = _split_fields(line)
        if len(fields) != 6:
            raise DspecError(f"manifest line {lineno}: expected 6 fields, got {len(fields)}")
        spec_name, relation, arg1, arg2, expected, anchor = fields
        if relation not in RELATIONS:
            raise DspecError(f"manifest line {lineno}: unknown relation {relation!r}")
        cases.append(
            CorpusCase(spec_name, relation, arg1, arg2, expected, anchor.strip('"'), lineno)
        )
    return tuple(cases)


def load_manifest(path: Path) -> tuple[CorpusCase, ...]:
    return parse_manifest(path.read_text(encoding="utf-8"))


def evaluate_case(case: CorpusCase, spec: Specification, *, minimal: bool = True) -> CaseResult:
    start = time.perf_counter()
    a1 = parse_argument(case.arg1, spec)
    if case.relation == "trees":
        computed = str(len(derivation_trees(spec, a1)))
    else:
        a2 = parse_argument(case.arg2, spec)
        if case.relation == "syn":
            outcome = ComparisonOutcome.from_directions(
                syntactic_leq(spec, a1, a2), syntactic_leq(spec, a2, a1)
            )
        else:
            outcome = compare(spec, RelationKind(case.relation), a1, a2, minimal=minimal)
        computed = render_outcome(outcome)
    seconds = time.perf_counter() - start
    return CaseResult(case, computed, computed == case.expected, seconds)


def run_corpus(
    manifest_path: Path, *, minimal: bool = True, jobs: int = 4
) -> tuple[CaseResult, ...]:
    """Evaluate every case; results come back in manifest order regardless
    of how the evaluations are scheduled."""
    cases = load_manifest(manifest_path)
    base = manifest_path.parent
    specs: dict[str, Specification] = {}
    for case in cases:
        if case.spec_name not in specs:
            path = base / case.spec_name
            specs[case.spec_name] = parse_spec(path.read_text(encoding="utf-8"), case.spec_name)

    def run_one(case: CorpusCase) -> CaseResult:
        return evaluate_case(case, specs[case.spec_name], minimal=minimal)

    if jobs > 1 and len(cases) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return tuple(pool.map(run_one, cases))
    return tuple(run_one(case) for case in cases)


def results_tsv(results: tuple[CaseResult, ...]) -> str:
    lines = ["spec\trelation\targ1\targ2\texpected\tcomputed\tstatus\tanchor"]
    for r in results:
        status = "pass" if r.ok else "fail"
        c = r.case
        lines.append(
            f"{c.spec_name}\t{c.relation}\t{c.arg1}\t{c.arg2}\t{c.expected}\t{r.computed}\t{status}\t{c.anchor}"
        )
    return "\n".join(lines) + "\n"
