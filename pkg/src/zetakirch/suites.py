"""Named verification suites, shared by the CLI, the tests and the scripts."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Collection

from .checks import Verdict, exact_check
from .derivatives import (
    verify_corollary1,
    verify_hashimoto_northshield,
    verify_specializations,
    verify_theorem13,
    verify_theorems_11_12,
)
from .errors import PreconditionError, SingularError
from .graph import POSITIVE_POOL, WEIGHT_POOL, WeightedGraph, random_graph
from .spanning import brute_force_complexity, weighted_complexity
from .zeta import theorem10_check

GRAPH_SUITES = ("t10", "t11t12", "t13", "hn", "c1")
SUITES = GRAPH_SUITES + ("random", "all")


def _t11t12(g: WeightedGraph, perturb) -> Verdict:
    v = verify_theorems_11_12(g, perturb)
    if weighted_complexity(g) != 0:
        v.extend(verify_specializations(g, perturb))
    return v


_RUNNERS: dict[str, Callable[[WeightedGraph, Collection[str]], Verdict]] = {
    "t10": theorem10_check,
    "t11t12": _t11t12,
    "t13": lambda g, p: verify_theorem13(g, p)[2],
    "hn": lambda g, p: verify_hashimoto_northshield(g, p)[1],
    "c1": verify_corollary1,
}


@dataclass
class SuiteResult:
    suite: str
    verdict: Verdict | None = None
    skipped: str | None = None
    error: Exception | None = None

    @property
    def status(self) -> str:
        if self.skipped is not None:
            return "skipped"
        return "pass" if self.verdict.passed else "fail"


def run_graph_suite(name: str, g: WeightedGraph, perturb: Collection[str] = ()) -> Verdict:
    """Run one suite; precondition and singularity errors propagate."""
    return _RUNNERS[name](g, perturb)


def run_all(g: WeightedGraph, perturb: Collection[str] = ()) -> list[SuiteResult]:
    out = []
    for name in GRAPH_SUITES:
        try:
            out.append(SuiteResult(name, run_graph_suite(name, g, perturb)))
        except (PreconditionError, SingularError) as exc:
            out.append(SuiteResult(name, skipped=str(exc), error=exc))
    return out


def matrix_tree_check(g: WeightedGraph, perturb: Collection[str] = ()) -> Verdict:
    v = Verdict("matrix-tree oracle")
    v.add(exact_check("matrix_tree.brute_force", weighted_complexity(g), brute_force_complexity(g), perturb))
    return v


def case_rng(seed: int, case: int, stream: str = "") -> random.Random:
    """Independent generator per (seed, case, stream); string seeding is stable across runs and platforms."""
    return random.Random(f"zetakirch:{seed}:{case}:{stream}")


def random_weighted_graph(rng: random.Random, n_max: int = 6, m_max: int = 10) -> WeightedGraph:
    """Random connected graph with mixed-sign weights and nonzero weighted complexity."""
    while True:
        g = random_graph(rng, 2, n_max, m_max, WEIGHT_POOL)
        if weighted_complexity(g) != 0:
            return g


def random_cyclic_graph(rng: random.Random, n_max: int = 6, m_max: int = 10) -> WeightedGraph:
    """Random connected graph with positive weights and m >= n."""
    return random_graph(rng, 3, n_max, m_max, POSITIVE_POOL, min_extra=1)


@dataclass
class RandomCase:
    index: int
    graphs: dict[str, WeightedGraph]
    verdict: Verdict = field(default_factory=lambda: Verdict("random case"))

    @property
    def passed(self) -> bool:
        return self.verdict.passed


def random_case(seed: int, index: int, perturb: Collection[str] = ()) -> RandomCase:
    mixed = random_weighted_graph(case_rng(seed, index, "mixed"))
    cyclic = random_cyclic_graph(case_rng(seed, index, "cyclic"))
    case = RandomCase(index, {"mixed": mixed, "cyclic": cyclic})
    case.verdict.extend(theorem10_check(mixed, perturb))
    case.verdict.extend(_t11t12(mixed, perturb))
    case.verdict.extend(matrix_tree_check(mixed, perturb))
    case.verdict.extend(verify_theorem13(cyclic, perturb)[2])
    return case


def random_suite(seed: int, cases: int, perturb: Collection[str] = ()) -> list[RandomCase]:
    return [random_case(seed, i, perturb) for i in range(cases)]
