"""Partial derivatives of f_w(u, t) on the curve u = 1 - 1/t and the identities they satisfy.

The central objects are the five curve values

    d_t  = df/dt,   d_u  = df/du,
    d_tt = d2f/dt2, d_tu = d2f/dtdu, d_uu = d2f/du2      at (1 - 1/t, t)

compared, as Laurent polynomials in t, against closed forms in the weighted
complexity kappa_w, the total weight w(G), n and the index polynomial
Kf^z_w(t).  The unit-weight and t = 1 specializations are checked from the
same machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Collection

from .algebra import T, U, BiPoly, LaurentPoly, laurent_quotient_at_one, poly_derivative, substitute_curve
from .checks import Verdict, exact_check
from .errors import PreconditionError, SingularError
from .graph import WeightedGraph
from .spanning import kirchhoff_report, weighted_complexity
from .zeta import bartholdi_poly, f_w_poly, ihara_reciprocal

CURVE_KEYS = ("d_t", "d_u", "d_tt", "d_tu", "d_uu")

_t = LaurentPoly.monomial(1)


def _tp(k: int) -> LaurentPoly:
    return LaurentPoly.monomial(k)


def curve_partials(f: BiPoly) -> dict[str, LaurentPoly]:
    ft = poly_derivative(f, T)
    fu = poly_derivative(f, U)
    return {
        "d_t": substitute_curve(ft),
        "d_u": substitute_curve(fu),
        "d_tt": substitute_curve(poly_derivative(ft, T)),
        "d_tu": substitute_curve(poly_derivative(ft, U)),
        "d_uu": substitute_curve(poly_derivative(fu, U)),
    }


def curve_rhs(n: int, w, kappa, kfz: LaurentPoly) -> dict[str, LaurentPoly]:
    """Closed forms for the five curve partials in terms of n, w(G), kappa_w and Kf^z_w(t)."""
    wt_n = _t * w - n
    return {
        "d_t": _tp(n - 2) * wt_n * (2 * kappa),
        "d_u": _tp(n) * wt_n * (-2 * kappa),
        "d_tt": _tp(n - 4) * (kfz + _t * n * (_t * (2 * w) - 2 * n + 1)) * (2 * kappa),
        "d_tu": _tp(n - 2) * ((n - _t * w) * _t * (n + 1) - kfz) * (2 * kappa),
        "d_uu": _tp(n) * (kfz - _t * n) * (2 * kappa),
    }


def unit_weight_rhs(g: WeightedGraph) -> dict[str, LaurentPoly]:
    """The unweighted closed forms, built from m, the spanning-tree count and Kf, Kf*, Kf+."""
    rep = kirchhoff_report(g.with_unit_weights())
    n, m, kappa = g.n, g.m, rep.kappa_w
    kfz = LaurentPoly({2: rep.Kf_star_w, 1: -2 * rep.Kf_plus_w, 0: 4 * rep.Kf_w})
    mt_n = _t * m - n
    return {
        "d_t": _tp(n - 2) * mt_n * (2 * kappa),
        "d_u": _tp(n) * mt_n * (-2 * kappa),
        "d_tt": _tp(n - 4) * (kfz + _t * n * (_t * (2 * m) - 2 * n + 1)) * (2 * kappa),
        "d_tu": _tp(n - 2) * ((n - _t * m) * _t * (n + 1) - kfz) * (2 * kappa),
        "d_uu": _tp(n) * (kfz - _t * n) * (2 * kappa),
    }


@dataclass
class CurveReport:
    lhs: dict[str, LaurentPoly]
    rhs: dict[str, LaurentPoly]
    verdict: Verdict

    def __getattr__(self, name):
        if name in CURVE_KEYS:
            return self.lhs[name]
        if name.startswith("rhs_") and name[4:] in CURVE_KEYS:
            return self.rhs[name[4:]]
        raise AttributeError(name)


def curve_report(g: WeightedGraph, perturb: Collection[str] = ()) -> CurveReport:
    kappa = weighted_complexity(g)
    if kappa == 0:
        raise SingularError("weighted complexity is 0; Kf^z_w(t) is undefined")
    rep = kirchhoff_report(g)
    lhs = curve_partials(f_w_poly(g))
    rhs = curve_rhs(g.n, g.total_weight(), kappa, rep.Kf_z_poly)
    v = Verdict("first and second partials of f_w on the curve u = 1 - 1/t")
    for key in CURVE_KEYS:
        v.add(exact_check(f"t11t12.{key}", lhs[key], rhs[key], perturb))
    return CurveReport(lhs, rhs, v)


def verify_theorems_11_12(g: WeightedGraph, perturb: Collection[str] = ()) -> Verdict:
    return curve_report(g, perturb).verdict


def curve_vanishes(g: WeightedGraph) -> bool:
    """f_w(1 - 1/t, t) = det(t L) = 0 identically."""
    return substitute_curve(f_w_poly(g)).is_zero()


def verify_specializations(g: WeightedGraph, perturb: Collection[str] = ()) -> Verdict:
    """t = 1 forms for any weights; the unit-weight forms as well when every weight is 1."""
    kappa = weighted_complexity(g)
    if kappa == 0:
        raise SingularError("weighted complexity is 0")
    rep = kirchhoff_report(g)
    n, m, w = g.n, g.m, g.total_weight()
    f0 = f_w_poly(g).restrict_u(0)
    d1 = f0.derivative()(1)
    d2 = f0.derivative().derivative()(1)
    v = Verdict("t = 1 and unit-weight specializations")
    v.add(exact_check("t11t12.at_1.first_derivative", d1, 2 * (w - n) * kappa, perturb))
    v.add(exact_check("t11t12.at_1.second_derivative", d2, 2 * (rep.Kf_z_w + 2 * w * n - 2 * n * n + n) * kappa, perturb))
    if not g.is_unweighted():
        return v
    v.add(exact_check("t11t12.unit.first_derivative_at_1", d1, 2 * (m - n) * kappa, perturb))
    v.add(exact_check("t11t12.unit.second_derivative_at_1", d2, 2 * (rep.Kf_z_w + 2 * m * n - 2 * n * n + n) * kappa, perturb))
    lhs = curve_partials(bartholdi_poly(g))
    rhs = unit_weight_rhs(g)
    for key in ("d_t", "d_u"):
        v.add(exact_check(f"t11t12.unit.{key}", lhs[key], rhs[key], perturb))
    for key in ("d_tt", "d_tu", "d_uu"):
        v.add(exact_check(f"t11t12.unit.{key}", lhs[key], rhs[key], perturb))
    weighted = curve_rhs(n, w, kappa, rep.Kf_z_poly)
    for key in CURVE_KEYS:
        v.add(exact_check(f"t11t12.unit_forms_agree.{key}", weighted[key], rhs[key], perturb))
    return v


def verify_corollary1(g: WeightedGraph, perturb: Collection[str] = ()) -> Verdict:
    """dF/dt(0,1) = -dF/du(0,1) = 2(m - n) kappa(G) for the unweighted Bartholdi determinant."""
    if not g.is_unweighted():
        raise PreconditionError("the unweighted derivative values need every weight equal to 1")
    F = bartholdi_poly(g)
    Ft = poly_derivative(F, T).evaluate(Fraction(0), Fraction(1))
    Fu = poly_derivative(F, U).evaluate(Fraction(0), Fraction(1))
    value = 2 * (g.m - g.n) * weighted_complexity(g)
    v = Verdict("unweighted Bartholdi derivatives at (0, 1)")
    v.add(exact_check("c1.dF_dt", Fraction(Ft), value, perturb))
    v.add(exact_check("c1.minus_dF_du", Fraction(-Fu), value, perturb))
    return v


def theorem13_numerator(g: WeightedGraph) -> LaurentPoly:
    """N(t) = (1+t)^(m-n) f_w(0,t) + 2^(m-n+1) (w(G) - n) kappa_w (1 - t)."""
    e = g.m - g.n
    kappa = weighted_complexity(g)
    f0 = f_w_poly(g).restrict_u(0)
    one_plus_t = LaurentPoly({0: 1, 1: 1})
    return one_plus_t**e * f0 + LaurentPoly({0: 1, 1: -1}) * (2 ** (e + 1) * (g.total_weight() - g.n) * kappa)


def verify_theorem13(g: WeightedGraph, perturb: Collection[str] = ()) -> tuple[Fraction, Fraction, Verdict]:
    """Weighted limit of the zeta reciprocal at t = 1, via N(t) / (1 - t)^2."""
    if g.m < g.n:
        raise PreconditionError(f"needs m >= n (Betti number >= 1); got m = {g.m}, n = {g.n}")
    kappa = weighted_complexity(g)
    if kappa == 0:
        raise SingularError("weighted complexity is 0")
    rep = kirchhoff_report(g)
    n, m, w = g.n, g.m, g.total_weight()
    lhs = laurent_quotient_at_one(theorem13_numerator(g), 2)
    rhs = 2 ** (m - n) * (rep.Kf_z_w + (m + n) * w - (m + n) * n + n) * kappa
    v = Verdict("weighted limit at t = 1")
    check = v.add(exact_check("t13.limit", lhs, rhs, perturb))
    return lhs, check.rhs, v


def verify_hashimoto_northshield(g: WeightedGraph, perturb: Collection[str] = ()) -> tuple[Fraction, Verdict]:
    """(1 - t)^-r Z(G, t)^-1 at t = 1 equals 2^r chi(G) kappa(G), for r > 1 and unit weights."""
    if not g.is_unweighted():
        raise PreconditionError("stated for unit weights")
    r = g.betti_number()
    if r <= 1:
        raise PreconditionError(f"needs Betti number r > 1; got r = {r}")
    core = ihara_reciprocal(g).core.restrict_u(0)
    numerator = LaurentPoly({0: 1, 1: 1}) ** (g.m - g.n) * core
    value = laurent_quotient_at_one(numerator, 1)
    rhs = 2**r * (1 - r) * weighted_complexity(g)
    v = Verdict("Ihara reciprocal over (1 - t)^r at t = 1")
    v.add(exact_check("hn.value_at_1", value, rhs, perturb))
    return value, v
