from __future__ import annotations

import itertools
from pathlib import Path

import pytest

from dspec import Argument, RelationKind, Specification, enumerate_all_arguments, leq, parse_spec
from dspec.corpus import shipped_manifest

from genspec import random_spec

CORPUS_NAMES = (
    "birds_strict",
    "birds_default",
    "birds_chain",
    "thirst",
    "drinks",
    "conjunction",
    "conjunction_var1",
    "conjunction_var2",
    "conjunction_var3",
    "grandparents",
    "precision",
    "precision_strict",
    "subsumed_condition",
    "subsumed_condition_facts",
    "two_routes",
    "tree_gap",
)

RANDOM_SEEDS = range(200)


@pytest.fixture(scope="session")
def corpus_dir() -> Path:
    return shipped_manifest().parent


@pytest.fixture(scope="session")
def corpus_specs(corpus_dir) -> dict[str, Specification]:
    out = {}
    for name in CORPUS_NAMES:
        text = (corpus_dir / f"{name}.dspec").read_text(encoding="utf-8")
        out[name] = parse_spec(text, name)
    return out


@pytest.fixture(scope="session")
def random_population() -> tuple[tuple[int, Specification, tuple[Argument, ...]], ...]:
    return tuple(
        (seed, spec, enumerate_all_arguments(spec, max_args=10))
        for seed, spec in ((s, random_spec(s)) for s in RANDOM_SEEDS)
    )


def leq_matrix(
    spec: Specification, args: tuple[Argument, ...], kind: RelationKind
) -> list[list[bool]]:
    return [[leq(spec, kind, a, b) for b in args] for a in args]


def has_cycle(strict_edges: list[list[bool]]) -> bool:
    n = len(strict_edges)
    color = [0] * n  # 0 unvisited, 1 in progress, 2 done

    def visit(i: int) -> bool:
        color[i] = 1
        for j in range(n):
            if strict_edges[i][j]:
                if color[j] == 1 or (color[j] == 0 and visit(j)):
                    return True
        color[i] = 2
        return False

    return any(color[i] == 0 and visit(i) for i in range(n))


def all_pairs(args):
    return itertools.product(args, repeat=2)
