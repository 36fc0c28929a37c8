"""Voltage assignments, derived graphs (regular coverings) and their factorization identities.

Vertex (v, h) of the derived graph G^alpha gets index h * n + v, and arc
(u, v) of G lifts to ((u, h), (v, h * alpha(u, v))) for every h.  Twisted
matrices use the Kronecker convention rho(g) (x) W_g, the left factor
indexing blocks.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Collection

import numpy as np

from .algebra import T, U, BiPoly, LaurentPoly, polymatrix_det, poly_derivative, rational_det, substitute_curve
from .checks import Verdict, exact_check, numeric_check
from .errors import (
    CoveringError,
    DisconnectedCoverError,
    ParseError,
    PreconditionError,
    SimplicityError,
    SingularError,
    ValidationError,
)
from .graph import WeightedGraph, _content_lines, matrices
from .groups import DEFAULT_TOL, FiniteGroup, IrrepSet, Representation, builtin_group
from .spanning import kirchhoff_report, weighted_complexity
from .zeta import bartholdi_det, f_w_poly

NUMERIC_POINTS = 7


@dataclass(frozen=True)
class VoltageAssignment:
    """Group element on each base edge, for the arc oriented from the smaller to the larger vertex."""

    group: FiniteGroup
    forward: tuple[int, ...]

    def arc(self, e: int) -> int:
        """alpha on arc e (2k forward, 2k+1 reverse); the reverse arc gets the inverse."""
        g = self.forward[e >> 1]
        return self.group.inverse(g) if e & 1 else g


@dataclass(frozen=True)
class CoveringSpec:
    base: WeightedGraph
    irreps: IrrepSet
    alpha: VoltageAssignment

    @property
    def group(self) -> FiniteGroup:
        return self.irreps.group

    @cached_property
    def derived(self) -> WeightedGraph:
        return derived_graph(self.base, self.group, self.alpha)


def make_voltage(g: WeightedGraph, group: FiniteGroup, tokens) -> VoltageAssignment:
    if len(tokens) != g.m:
        raise ValidationError(f"need one voltage per edge: expected {g.m}, got {len(tokens)}")
    idx = tuple(t if isinstance(t, int) else group.index(t) for t in tokens)
    if any(not 0 <= i < group.order for i in idx):
        raise ValidationError("voltage outside the group")
    return VoltageAssignment(group, idx)


def covering_spec(g: WeightedGraph, group_token: str, tokens, numeric: bool = False) -> CoveringSpec:
    group, irreps = builtin_group(group_token)
    if numeric:
        irreps = irreps.as_numeric()
    return CoveringSpec(g, irreps, make_voltage(g, group, list(tokens)))


def parse_voltage(text: str | bytes, g: WeightedGraph, numeric: bool = False) -> CoveringSpec:
    """Parse a ``.vlt`` file against its base graph."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty voltage file")
    lineno, token = lines[0]
    group, irreps = builtin_group(token)
    if numeric:
        irreps = irreps.as_numeric()
    body = lines[1:]
    if len(body) != g.m:
        raise ParseError(f"expected {g.m} voltage lines, found {len(body)}", body[-1][0] if body else lineno)
    idx = []
    for lineno, tok in body:
        try:
            idx.append(group.index(tok))
        except ValidationError:
            raise ParseError(f"{tok!r} is not an element of {group.name}", lineno) from None
    return CoveringSpec(g, irreps, VoltageAssignment(group, tuple(idx)))


def derived_graph(g: WeightedGraph, group: FiniteGroup, alpha: VoltageAssignment) -> WeightedGraph:
    n, r = g.n, group.order
    edges = []
    for k, (i, j, w) in enumerate(g.edges):
        a = alpha.forward[k]
        for h in range(r):
            x, y = h * n + i, group.mul(h, a) * n + j
            edges.append((min(x, y), max(x, y), w))
    parent = list(range(n * r))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x, y, _ in edges:
        parent[find(x)] = find(y)
    if len({find(x) for x in range(n * r)}) > 1:
        raise DisconnectedCoverError(f"the derived {group.name}-covering is disconnected")
    if len({(x, y) for x, y, _ in edges}) != len(edges):
        raise SimplicityError("the lift creates parallel edges")
    return WeightedGraph(n * r, tuple(edges))


def voltage_matrices(g: WeightedGraph, alpha: VoltageAssignment) -> list[list[list[Fraction]]]:
    """W_g for every group element g: W_g[u][v] = w(u, v) when alpha(u, v) = g."""
    n = g.n
    out = [[[Fraction(0)] * n for _ in range(n)] for _ in range(alpha.group.order)]
    for e, (u, v) in enumerate(g.arcs):
        out[alpha.arc(e)][u][v] = g.arc_weight(e)
    return out


def twisted_matrix(g: WeightedGraph, alpha: VoltageAssignment, rho: Representation):
    """sum_g rho(g) (x) W_g, an (f n) x (f n) matrix (Fractions when exact, complex ndarray otherwise)."""
    n, f = g.n, rho.degree
    if rho.exact:
        M = [[Fraction(0)] * (f * n) for _ in range(f * n)]
    else:
        M = np.zeros((f * n, f * n), dtype=complex)
    for e, (u, v) in enumerate(g.arcs):
        R = rho.matrix(alpha.arc(e))
        w = g.arc_weight(e)
        for a in range(f):
            for b in range(f):
                if rho.exact:
                    M[a * n + u][b * n + v] += R[a][b] * w
                else:
                    M[a * n + u, b * n + v] += R[a, b] * float(w)
    return M


def _block_diag_D(g: WeightedGraph, f: int) -> list[list[Fraction]]:
    """I_f (x) D_w."""
    d = g.weighted_degrees()
    size = f * g.n
    D = [[Fraction(0)] * size for _ in range(size)]
    for a in range(f):
        for v in range(g.n):
            D[a * g.n + v][a * g.n + v] = d[v]
    return D


def K_i_poly(g: WeightedGraph, alpha: VoltageAssignment, rho: Representation) -> BiPoly:
    """det(I - t sum rho(g) (x) W_g + (1-u) t^2 I_f (x) (D_w - (1-u) I_n)) as an exact BiPoly."""
    if not rho.exact:
        raise PreconditionError("K_i_poly needs a rational representation; use K_i_numeric")
    return bartholdi_det(twisted_matrix(g, alpha, rho), _block_diag_D(g, rho.degree))


def _K_i_matrices(g: WeightedGraph, alpha: VoltageAssignment, rho: Representation, u: complex, t: complex):
    """(M, dM/dt, dM/du) at (u, t) for the K_i matrix, numerically."""
    S = np.asarray(twisted_matrix(g, alpha, rho.as_numeric()), dtype=complex)
    size = S.shape[0]
    D = np.diag([complex(x) for x in g.weighted_degrees()] * rho.degree)
    eye = np.eye(size)
    s = 1 - u
    M = eye - t * S + s * t * t * (D - s * eye)
    dMt = -S + 2 * s * t * (D - s * eye)
    dMu = t * t * (-D + 2 * s * eye)
    return M, dMt, dMu


def K_i_numeric(g: WeightedGraph, alpha: VoltageAssignment, rho: Representation) -> Callable[[complex, complex], complex]:
    def value(u, t):
        return complex(np.linalg.det(_K_i_matrices(g, alpha, rho, complex(u), complex(t))[0]))

    return value


def twisted_laplacian_det(g: WeightedGraph, alpha: VoltageAssignment, rho: Representation):
    """det(I_f (x) D_w - sum_g rho(g) (x) W_g)."""
    S = twisted_matrix(g, alpha, rho)
    D = _block_diag_D(g, rho.degree)
    if rho.exact:
        return rational_det([[D[i][j] - S[i][j] for j in range(len(S))] for i in range(len(S))])
    return complex(np.linalg.det(np.array(D, dtype=complex) - S))


def _sample_points(rng: random.Random, count: int, with_u: bool):
    pts = []
    while len(pts) < count:
        t = Fraction(rng.randint(-50, 50), 100)
        u = Fraction(rng.randint(-100, 100), 100)
        if t == 0:
            continue
        pts.append((u, t) if with_u else t)
    return pts


def _nontrivial(spec: CoveringSpec):
    return list(spec.irreps.irreps[1:])


# --- factorization of f over the covering ------------------------------------


def verify_theorem14(spec: CoveringSpec, seed: int = 0, tol: float = DEFAULT_TOL, perturb: Collection[str] = ()) -> Verdict:
    g, alpha = spec.base, spec.alpha
    lhs_poly = f_w_poly(spec.derived)
    base = f_w_poly(g)
    v = Verdict("f of the covering = f_w(G) * prod K_i^f_i")
    if spec.irreps.exact:
        prod = BiPoly.const(1)
        for rho in _nontrivial(spec):
            prod = prod * K_i_poly(g, alpha, rho) ** rho.degree
        v.add(exact_check("cover.factorization", lhs_poly, base * prod, perturb))
        v.add(exact_check("cover.divisibility", lhs_poly.exact_div(base), prod, perturb,
                          note="f_w(G) divides f of the covering; quotient is prod K_i^f_i"))
        return v
    rng = random.Random(seed)
    Ks = [(K_i_numeric(g, alpha, rho), rho.degree) for rho in _nontrivial(spec)]
    for k, (u, t) in enumerate(_sample_points(rng, NUMERIC_POINTS, True)):
        lhs = complex(lhs_poly.evaluate(u, t))
        rhs = complex(base.evaluate(u, t))
        for K, f in Ks:
            rhs *= K(u, t) ** f
        v.add(numeric_check(f"cover.factorization@(u={u},t={t})", lhs, rhs, tol, perturb))
    return v


# --- complexity of the covering -----------------------------------------------


def theorem15_formula(spec: CoveringSpec):
    g, alpha = spec.base, spec.alpha
    value = weighted_complexity(g) / spec.group.order
    if not spec.irreps.exact:
        value = complex(value)
    for rho in _nontrivial(spec):
        value = value * twisted_laplacian_det(g, alpha, rho) ** rho.degree
    return value


def verify_theorem15(spec: CoveringSpec, tol: float = DEFAULT_TOL, perturb: Collection[str] = ()):
    formula = theorem15_formula(spec)
    direct = weighted_complexity(spec.derived)
    v = Verdict("weighted complexity of the covering")
    if spec.irreps.exact:
        v.add(exact_check("cover.complexity", direct, formula, perturb))
    else:
        v.add(numeric_check("cover.complexity", direct, formula, tol, perturb))
    return formula, direct, v


# --- Kirchhoff index polynomial of the covering ----------------------------------


@dataclass
class LogDerivatives:
    """sum_i f_i d/dt log K_i and sum_i f_i d/du log K_i on the curve u = 1 - 1/t."""

    d_t: LaurentPoly
    d_u: LaurentPoly
    curve_values: list[LaurentPoly]


def curve_log_derivatives(spec: CoveringSpec) -> LogDerivatives:
    g, alpha = spec.base, spec.alpha
    Lt, Lu = LaurentPoly(), LaurentPoly()
    values = []
    for rho in _nontrivial(spec):
        K = K_i_poly(g, alpha, rho)
        cv = substitute_curve(K)
        if cv.is_zero():
            raise SingularError("a K_i vanishes identically on the curve; its log-derivative is undefined")
        values.append(cv)
        Lt = Lt + substitute_curve(poly_derivative(K, T)).divide_by_monomial(cv) * rho.degree
        Lu = Lu + substitute_curve(poly_derivative(K, U)).divide_by_monomial(cv) * rho.degree
    return LogDerivatives(Lt, Lu, values)


def index_polynomial_forms(r: int, n: int, w, kfz, Lt, Lu, t):
    """The three closed forms for Kf^z of the covering.  Works on LaurentPoly or numbers."""
    v1 = kfz * r - (t * w - n) * 2 * r * ((r - 1) * n * t - t * t * Lt)
    v2 = kfz * r + (n - t * w) * r * ((r - 1) * n * t - t * t * Lt + Lu)
    v3 = kfz * r - (t * w - n) * 2 * r * Lu
    return v1, v2, v3


def corollary_dets(spec: CoveringSpec, unit: bool) -> list[BiPoly]:
    """det(I - t sum rho_i(g) (x) W_g + t^2 (f_i o Q_w)) as polynomials in t, built explicitly.

    With ``unit`` the weights are replaced by 1 (A_g and Q = D - I).
    """
    g = spec.base.with_unit_weights() if unit else spec.base
    out = []
    t = BiPoly.t()
    for rho in _nontrivial(spec):
        S = twisted_matrix(g, spec.alpha, rho)
        D = _block_diag_D(g, rho.degree)
        size = len(S)
        M = [[(1 if i == j else 0) - t * S[i][j] + t * t * (D[i][j] - (i == j)) for j in range(size)] for i in range(size)]
        out.append(polymatrix_det(M))
    return out


def _corollary_value(spec: CoveringSpec, unit: bool) -> Fraction:
    g = spec.base.with_unit_weights() if unit else spec.base
    r, n = spec.group.order, g.n
    w = Fraction(g.m) if unit else g.total_weight()
    kfz = kirchhoff_report(g).Kf_z_w
    total = Fraction(0)
    for rho, P in zip(_nontrivial(spec), corollary_dets(spec, unit)):
        p = P.restrict_u(0)
        val = p(1)
        if val == 0:
            raise SingularError("twisted determinant vanishes at t = 1")
        total += rho.degree * p.derivative()(1) / val
    return r * kfz - 2 * n * (w - n) * (r * r - r) + 2 * r * (w - n) * total


def verify_theorem16(spec: CoveringSpec, seed: int = 0, tol: float = DEFAULT_TOL, perturb: Collection[str] = ()) -> Verdict:
    g = spec.base
    if weighted_complexity(g) == 0:
        raise SingularError("weighted complexity of the base graph is 0")
    r, n, w = spec.group.order, g.n, g.total_weight()
    kfz = kirchhoff_report(g).Kf_z_poly
    lhs = kirchhoff_report(spec.derived).Kf_z_poly
    v = Verdict("Kirchhoff index polynomial of the covering")
    if spec.irreps.exact:
        logs = curve_log_derivatives(spec)
        for rho, cv in zip(_nontrivial(spec), logs.curve_values):
            expected = LaurentPoly.monomial(rho.degree * n, twisted_laplacian_det(g, spec.alpha, rho))
            v.add(exact_check(f"cover.curve_value.deg{rho.degree}", cv, expected, perturb,
                              note="K_i(1 - 1/t, t) = t^(f_i n) det(I (x) D_w - sum rho_i(g) (x) W_g)"))
        t = LaurentPoly.monomial(1)
        for k, rhs in enumerate(index_polynomial_forms(r, n, w, kfz, logs.d_t, logs.d_u, t), start=1):
            v.add(exact_check(f"cover.index_form{k}", lhs, rhs, perturb))
        return v
    rng = random.Random(seed)
    done = 0
    while done < NUMERIC_POINTS:
        t = Fraction(rng.randint(1, 99), 100)
        u = 1 - 1 / t
        Lt = Lu = 0j
        ok = True
        for rho in _nontrivial(spec):
            M, dMt, dMu = _K_i_matrices(g, spec.alpha, rho, complex(u), complex(t))
            if np.linalg.cond(M) > 1e6:
                ok = False
                break
            Lt += rho.degree * np.trace(np.linalg.solve(M, dMt))
            Lu += rho.degree * np.trace(np.linalg.solve(M, dMu))
        if not ok:
            continue
        done += 1
        tf = float(t)
        for k, rhs in enumerate(index_polynomial_forms(r, n, float(w), float(kfz(t)), Lt, Lu, tf), start=1):
            v.add(numeric_check(f"cover.index_form{k}@t={t}", float(lhs(t)), rhs, tol, perturb))
    return v


def verify_corollaries(spec: CoveringSpec, seed: int = 0, tol: float = DEFAULT_TOL, perturb: Collection[str] = ()) -> Verdict:
    """t = 1 forms: the weighted one always, the unit-weight one when every weight is 1."""
    v = Verdict("Kirchhoff index of the covering at t = 1")
    direct = kirchhoff_report(spec.derived).Kf_z_w
    if not spec.irreps.exact:
        c2 = _corollary_value_numeric(spec, unit=False)
        v.add(numeric_check("cover.index_at_1.weighted", float(direct), c2, tol, perturb))
        if spec.base.is_unweighted():
            v.add(numeric_check("cover.index_at_1.unweighted", float(direct), _corollary_value_numeric(spec, unit=True), tol, perturb))
        return v
    c2 = _corollary_value(spec, unit=False)
    v.add(exact_check("cover.index_at_1.weighted", direct, c2, perturb))
    logs = curve_log_derivatives(spec)
    g = spec.base
    v1 = index_polynomial_forms(spec.group.order, g.n, g.total_weight(), kirchhoff_report(g).Kf_z_poly,
                            logs.d_t, logs.d_u, LaurentPoly.monomial(1))[0]
    v.add(exact_check("cover.index_at_1.matches_form1", v1(1), c2, perturb))
    if spec.base.is_unweighted():
        v.add(exact_check("cover.index_at_1.unweighted", direct, _corollary_value(spec, unit=True), perturb))
    return v


def verify_corollary3(spec: CoveringSpec, tol: float = DEFAULT_TOL, perturb: Collection[str] = ()) -> Verdict:
    """The unit-weight t = 1 form on its own; needs every base weight equal to 1."""
    if not spec.base.is_unweighted():
        raise PreconditionError("the unweighted form needs every weight equal to 1")
    v = verify_corollaries(spec, tol=tol, perturb=perturb)
    return Verdict(v.title, [c for c in v.checks if c.name == "cover.index_at_1.unweighted"])


def _corollary_value_numeric(spec: CoveringSpec, unit: bool) -> complex:
    g = spec.base.with_unit_weights() if unit else spec.base
    r, n = spec.group.order, g.n
    w = float(g.m) if unit else float(g.total_weight())
    kfz = float(kirchhoff_report(g).Kf_z_w)
    total = 0j
    for rho in _nontrivial(spec):
        S = np.asarray(twisted_matrix(g, spec.alpha, rho), dtype=complex)
        Q = np.diag([complex(x) - 1 for x in g.weighted_degrees()] * rho.degree)
        M = np.eye(S.shape[0]) - S + Q
        dM = -S + 2 * Q
        total += rho.degree * np.trace(np.linalg.solve(M, dM))
    return r * kfz - 2 * n * (w - n) * (r * r - r) + 2 * r * (w - n) * total


def verify_covering(spec: CoveringSpec, seed: int = 0, tol: float = DEFAULT_TOL, perturb: Collection[str] = ()) -> Verdict:
    v = Verdict(f"{spec.group.name}-covering of a graph with n = {spec.base.n}, m = {spec.base.m}")
    v.extend(verify_theorem14(spec, seed, tol, perturb))
    v.extend(verify_theorem15(spec, tol, perturb)[2])
    v.extend(verify_theorem16(spec, seed, tol, perturb))
    v.extend(verify_corollaries(spec, seed, tol, perturb))
    return v


__all__ = [
    "CoveringError",
    "CoveringSpec",
    "VoltageAssignment",
    "covering_spec",
    "derived_graph",
    "K_i_poly",
    "K_i_numeric",
    "parse_voltage",
    "twisted_matrix",
    "twisted_laplacian_det",
    "verify_theorem14",
    "verify_theorem15",
    "verify_theorem16",
    "verify_corollaries",
    "verify_corollary3",
    "verify_covering",
    "voltage_matrices",
]
