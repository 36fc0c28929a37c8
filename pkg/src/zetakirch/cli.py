"""zetakirch: command-line front end.

    zetakirch info      --graph G.wgr
    zetakirch kirchhoff --graph G.wgr
    zetakirch zeta      --graph G.wgr [--form edge|vertex]
    zetakirch verify    --graph G.wgr --suite t10|t11t12|t13|hn|c1|all
    zetakirch verify    --suite random --seed N --cases N
    zetakirch cover     --graph G.wgr --voltage A.vlt [--group TOKEN] [--out H.wgr]

Exit codes: 0 success, 1 identity failure, 2 parse/validation error,
3 singular input, 4 unmet precondition, 5 covering construction error.
``--json`` switches the whole report to JSON.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import serialize as ser
from .checks import Verdict
from .covering import (
    parse_voltage,
    theorem15_formula,
    verify_corollaries,
    verify_theorem14,
    verify_theorem15,
    verify_theorem16,
)
from .errors import ParseError, PreconditionError, SingularError, ZetaKirchError
from .graph import WeightedGraph, parse_graph, to_wgr
from .groups import DEFAULT_TOL
from .spanning import kirchhoff_report, weighted_complexity
from .suites import SUITES, SuiteResult, random_suite, run_all, run_graph_suite
from .zeta import ZetaReciprocal, zeta_edge_reciprocal, zeta_vertex_reciprocal

COMMANDS = ("info", "kirchhoff", "zeta", "verify", "cover")
SEED_MAX = 2**64 - 1


@dataclass
class RunConfig:
    command: str
    graph: str | None = None
    voltage: str | None = None
    group: str | None = None
    form: str = "vertex"
    suite: str = "all"
    seed: int = 0
    cases: int = 50
    json: bool = False
    out: str | None = None
    tol: float = DEFAULT_TOL
    numeric: bool = False
    perturb: tuple[str, ...] = field(default_factory=tuple)


class Report:
    """Collects text lines and a JSON document side by side; only one is ever printed."""

    def __init__(self, command: str):
        self.lines: list[str] = []
        self.doc: dict = {"command": command}

    def line(self, text: str = ""):
        self.lines.append(text)

    def verdict(self, v: Verdict):
        self.line(f"-- {v.title}")
        self.lines.extend(v.lines())


def _read_graph(path: str | None) -> WeightedGraph:
    if not path:
        raise ParseError("--graph is required")
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_graph(data)
    except ParseError as exc:
        raise type(exc)(f"{path}: {exc}") from None


# --- commands ---------------------------------------------------------------


def cmd_info(cfg: RunConfig, rep: Report) -> int:
    g = _read_graph(cfg.graph)
    deg, wdeg = g.degrees(), g.weighted_degrees()
    rep.line(f"n={g.n} m={g.m} w(G)={g.total_weight()}")
    rep.line(f"connected: {'yes' if g.is_connected() else 'no'}")
    rep.line(f"betti number: {g.betti_number()}")
    rep.line("vertex degree weighted_degree")
    for v in range(g.n):
        rep.line(f"{v + 1} {deg[v]} {wdeg[v]}")
    rep.line("edge i j w")
    for k, (i, j, w) in enumerate(g.edges):
        rep.line(f"{k + 1} {i + 1} {j + 1} {w}")
    rep.doc.update(
        n=g.n,
        m=g.m,
        total_weight=ser.rational(g.total_weight()),
        connected=g.is_connected(),
        betti_number=g.betti_number(),
        vertices=[{"vertex": v + 1, "degree": deg[v], "weighted_degree": ser.rational(wdeg[v])} for v in range(g.n)],
        edges=[{"i": i + 1, "j": j + 1, "w": ser.rational(w)} for i, j, w in g.edges],
    )
    return 0


def cmd_kirchhoff(cfg: RunConfig, rep: Report) -> int:
    g = _read_graph(cfg.graph)
    k = kirchhoff_report(g)
    rep.line(f"kappa_w = {k.kappa_w}")
    rep.line("p q r_pq")
    for (p, q), r in k.resistances.items():
        rep.line(f"{p + 1} {q + 1} {r}")
    rep.line(f"Kf_w = {k.Kf_w}")
    rep.line(f"Kf*_w = {k.Kf_star_w}")
    rep.line(f"Kf+_w = {k.Kf_plus_w}")
    rep.line(f"Kf^z_w = {k.Kf_z_w}")
    rep.line(f"Kf^z_w(t) = {k.Kf_z_poly}")
    rep.line("Kf^z_w(t) coefficients: " + ", ".join(f"t^{d}: {c}" for d, c in k.Kf_z_poly.terms()))
    rep.doc.update(
        kappa_w=ser.rational(k.kappa_w),
        resistances=[{"p": p + 1, "q": q + 1, "r": ser.rational(r)} for (p, q), r in k.resistances.items()],
        Kf_w=ser.rational(k.Kf_w),
        Kf_star_w=ser.rational(k.Kf_star_w),
        Kf_plus_w=ser.rational(k.Kf_plus_w),
        Kf_z_w=ser.rational(k.Kf_z_w),
        Kf_z_poly=ser.poly(k.Kf_z_poly),
    )
    return 0


def cmd_zeta(cfg: RunConfig, rep: Report) -> int:
    g = _read_graph(cfg.graph)
    if cfg.form == "edge":
        z = ZetaReciprocal(0, zeta_edge_reciprocal(g))
        rep.line("form: edge, det(I_2m - t(B_w - (1-u) J_0))")
    else:
        z = zeta_vertex_reciprocal(g)
        rep.line("form: vertex, (1 - (1-u)^2 t^2)^(m-n) * det(I - tW + (1-u) t^2 (D_w - (1-u) I))")
    rep.line(f"prefactor exponent = {z.prefactor_exponent}")
    rep.line("core terms (du dt coeff):")
    for (du, dt), c in z.core.terms():
        rep.line(f"{du} {dt} {c}")
    rep.doc.update(form=cfg.form, prefactor_exponent=z.prefactor_exponent, core=ser.poly(z.core))
    return 0


def _suite_block(rep: Report, res: SuiteResult) -> dict:
    rep.line(f"== suite {res.suite}: {res.status}" + (f" ({res.skipped})" if res.skipped else ""))
    entry = {"suite": res.suite, "status": res.status}
    if res.skipped is not None:
        entry["reason"] = res.skipped
    else:
        rep.verdict(res.verdict)
        entry["verdict"] = ser.verdict(res.verdict)
    return entry


def cmd_verify(cfg: RunConfig, rep: Report) -> int:
    if cfg.suite == "random":
        return _verify_random(cfg, rep)
    g = _read_graph(cfg.graph)
    if cfg.suite == "all":
        results = run_all(g, cfg.perturb)
    else:
        # a specifically requested suite reports its precondition failure as an error
        results = [SuiteResult(cfg.suite, run_graph_suite(cfg.suite, g, cfg.perturb))]
    blocks = [_suite_block(rep, r) for r in results]
    ran = [r for r in results if r.verdict is not None]
    checks = [c for r in ran for c in r.verdict.checks]
    passed = sum(c.passed for c in checks)
    ok = passed == len(checks)
    rep.line(f"summary: {passed}/{len(checks)} checks passed, {len(results) - len(ran)} suites skipped")
    rep.doc.update(graph=cfg.graph, suite=cfg.suite, suites=blocks, checks=len(checks), passed=ok)
    return 0 if ok else 1


def _verify_random(cfg: RunConfig, rep: Report) -> int:
    cases = random_suite(cfg.seed, cfg.cases, cfg.perturb)
    good = 0
    docs = []
    for case in cases:
        gm, gc = case.graphs["mixed"], case.graphs["cyclic"]
        status = "PASS" if case.passed else "FAIL"
        rep.line(
            f"case {case.index}: {status} {len(case.verdict.checks)} checks; "
            f"mixed n={gm.n} m={gm.m}, cyclic n={gc.n} m={gc.m}"
        )
        if not case.passed:
            rep.lines.extend("  " + c.line() for c in case.verdict.checks if not c.passed)
        good += case.passed
        docs.append({
            "case": case.index,
            "passed": case.passed,
            "graphs": {k: to_wgr(g) for k, g in case.graphs.items()},
            "verdict": ser.verdict(case.verdict),
        })
    rep.line(f"random: {good}/{len(cases)} cases pass (seed {cfg.seed})")
    rep.doc.update(suite="random", seed=cfg.seed, cases=docs, passed=good == len(cases))
    return 0 if good == len(cases) else 1


def _read_spec(cfg: RunConfig, g: WeightedGraph):
    if not cfg.voltage:
        raise ParseError("--voltage is required")
    try:
        data = Path(cfg.voltage).read_bytes()
    except OSError as exc:
        raise ParseError(f"cannot read {cfg.voltage}: {exc.strerror}") from None
    try:
        spec = parse_voltage(data, g, numeric=cfg.numeric)
    except ParseError as exc:
        raise type(exc)(f"{cfg.voltage}: {exc}") from None
    if cfg.group is not None and cfg.group.strip() != spec.group.name:
        raise ParseError(f"--group {cfg.group} does not match the voltage file's group {spec.group.name}")
    return spec


def cmd_cover(cfg: RunConfig, rep: Report) -> int:
    g = _read_graph(cfg.graph)
    spec = _read_spec(cfg, g)
    H = spec.derived
    path = "exact" if spec.irreps.exact else "numeric"
    wgr = to_wgr(H, f"{spec.group.name}-covering of {cfg.graph} by {cfg.voltage}")
    if cfg.out:
        Path(cfg.out).write_text(wgr, encoding="utf-8")
    rep.line(f"derived graph: n={H.n} m={H.m} ({spec.group.name}, {path} path)")
    rep.doc.update(
        group=spec.group.name,
        path=path,
        derived={"n": H.n, "m": H.m, "wgr": wgr, "out": cfg.out},
    )

    steps = [
        ("t14", lambda: verify_theorem14(spec, cfg.seed, cfg.tol, cfg.perturb)),
        ("t15", lambda: verify_theorem15(spec, cfg.tol, cfg.perturb)[2]),
        ("t16", lambda: verify_theorem16(spec, cfg.seed, cfg.tol, cfg.perturb)),
        ("corollaries", lambda: verify_corollaries(spec, cfg.seed, cfg.tol, cfg.perturb)),
    ]
    results = []
    for name, run in steps:
        try:
            results.append(SuiteResult(name, run()))
        except (PreconditionError, SingularError) as exc:
            results.append(SuiteResult(name, skipped=str(exc), error=exc))

    formula = theorem15_formula(spec)
    direct = weighted_complexity(H)
    rep.line(f"kappa_w of the covering: formula {_show(formula)}, direct {_show(direct)}")
    rep.doc["kappa_w"] = {"formula": ser.value(formula), "direct": ser.value(direct)}

    blocks = [_suite_block(rep, r) for r in results]
    checks = [c for r in results if r.verdict is not None for c in r.verdict.checks]
    ok = all(c.passed for c in checks)
    rep.line(f"summary: {sum(c.passed for c in checks)}/{len(checks)} checks passed")
    rep.doc.update(suites=blocks, passed=ok)
    if not cfg.out and not cfg.json:
        # keep stdout a valid .wgr file: the report rides along as comments
        rep.lines = wgr.rstrip("\n").splitlines() + ["# " + ln if ln else "#" for ln in rep.lines]
    return 0 if ok else 1


def _show(x) -> str:
    if isinstance(x, complex):
        return f"{x.real:.15g}{x.imag:+.15g}j"
    return str(x)


HANDLERS = {
    "info": cmd_info,
    "kirchhoff": cmd_kirchhoff,
    "zeta": cmd_zeta,
    "verify": cmd_verify,
    "cover": cmd_cover,
}


# --- argument parsing -------------------------------------------------------------


def _seed(text: str) -> int:
    value = int(text)
    if not 0 <= value <= SEED_MAX:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="zetakirch",
        description="Weighted Bartholdi zeta determinants, Kirchhoff indices and their exact identities.",
    )
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--graph", help=".wgr graph file")
    p.add_argument("--voltage", help=".vlt voltage file (cover)")
    p.add_argument("--group", help="group token; must match the voltage file header")
    p.add_argument("--form", choices=("edge", "vertex"), default="vertex")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--cases", type=_positive, default=50)
    p.add_argument("--json", action="store_true", help="emit the whole report as JSON")
    p.add_argument("--out", help="write the derived graph here instead of stdout (cover)")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL, help="relative tolerance on the numeric path")
    p.add_argument("--numeric", action="store_true", help="force the floating-point covering path")
    p.add_argument(
        "--perturb",
        action="append",
        default=[],
        metavar="CHECK",
        help="negative control: add 1 to the right-hand side of CHECK ('*' for every check)",
    )
    return p


def config_from_args(argv=None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    return RunConfig(
        command=ns.command,
        graph=ns.graph,
        voltage=ns.voltage,
        group=ns.group,
        form=ns.form,
        suite=ns.suite,
        seed=ns.seed,
        cases=ns.cases,
        json=ns.json,
        out=ns.out,
        tol=ns.tol,
        numeric=ns.numeric,
        perturb=tuple(ns.perturb),
    )


def run(cfg: RunConfig, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    rep = Report(cfg.command)
    try:
        code = HANDLERS[cfg.command](cfg, rep)
    except ZetaKirchError as exc:
        print(f"zetakirch: error: {exc}", file=stderr)
        if cfg.json:
            stdout.write(ser.dumps({"command": cfg.command, "error": str(exc), "exit_code": exc.exit_code}))
        return exc.exit_code
    rep.doc["exit_code"] = code
    if cfg.json:
        stdout.write(ser.dumps(rep.doc))
    else:
        stdout.write("\n".join(rep.lines) + "\n")
    return code


def main(argv=None) -> int:
    try:
        cfg = config_from_args(argv)
    except SystemExit as exc:
        # argparse usage errors count as validation failures
        return 2 if exc.code else 0
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
