"""Weighted complexity, resistance distances and the weighted Kirchhoff indices."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

import numpy as np

from .algebra import LaurentPoly, rational_det
from .errors import PositivityError, SingularError, SizeError
from .graph import WeightedGraph, matrices

BRUTE_FORCE_MAX_N = 10


def _minor(M, drop):
    keep = [i for i in range(len(M)) if i not in drop]
    return [[M[i][j] for j in keep] for i in keep]


def laplacian_minor_det(g: WeightedGraph, *drop: int) -> Fraction:
    """det of L with the rows and columns in ``drop`` deleted."""
    return rational_det(_minor(matrices(g).L, set(drop)))


@lru_cache(maxsize=256)
def weighted_complexity(g: WeightedGraph) -> Fraction:
    """kappa_w(G): sum over spanning trees of the product of edge weights (Matrix-Tree)."""
    return laplacian_minor_det(g, 0)


def brute_force_complexity(g: WeightedGraph) -> Fraction:
    """kappa_w(G) by enumerating every (n-1)-edge subset.  Oracle for small graphs only."""
    if g.n > BRUTE_FORCE_MAX_N:
        raise SizeError(f"enumeration limited to n <= {BRUTE_FORCE_MAX_N}, got n = {g.n}")
    total = Fraction(0)
    for subset in combinations(g.edges, g.n - 1):
        parent = list(range(g.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        prod = Fraction(1)
        for i, j, w in subset:
            a, b = find(i), find(j)
            if a == b:
                break
            parent[a] = b
            prod *= w
        else:
            total += prod
    return total


def _require_nonsingular(g: WeightedGraph) -> Fraction:
    kappa = weighted_complexity(g)
    if kappa == 0:
        raise SingularError("weighted complexity is 0, resistance distances are undefined")
    return kappa


def resistance_distance(g: WeightedGraph, p: int, q: int) -> Fraction:
    """r_pq = det(L with rows/cols p, q removed) / kappa_w; r_pp = 0."""
    kappa = _require_nonsingular(g)
    if p == q:
        return Fraction(0)
    return laplacian_minor_det(g, p, q) / kappa


@dataclass(frozen=True)
class KirchhoffReport:
    kappa_w: Fraction
    resistances: dict[tuple[int, int], Fraction]
    weighted_degrees: tuple[Fraction, ...]
    Kf_w: Fraction
    Kf_star_w: Fraction
    Kf_plus_w: Fraction
    Kf_z_w: Fraction
    Kf_z_poly: LaurentPoly

    def r(self, p: int, q: int) -> Fraction:
        if p == q:
            return Fraction(0)
        return self.resistances[(min(p, q), max(p, q))]


@lru_cache(maxsize=256)
def kirchhoff_report(g: WeightedGraph) -> KirchhoffReport:
    kappa = _require_nonsingular(g)
    L = matrices(g).L
    d = g.weighted_degrees()
    res = {}
    kf = kf_star = kf_plus = Fraction(0)
    for p, q in combinations(range(g.n), 2):
        r = rational_det(_minor(L, {p, q})) / kappa
        res[(p, q)] = r
        kf += r
        kf_star += d[p] * d[q] * r
        kf_plus += (d[p] + d[q]) * r
    kf_z = sum(((d[p] - 2) * (d[q] - 2) * r for (p, q), r in res.items()), Fraction(0))
    poly = LaurentPoly({2: kf_star, 1: -2 * kf_plus, 0: 4 * kf})
    return KirchhoffReport(kappa, res, tuple(d), kf, kf_star, kf_plus, kf_z, poly)


def kf_z_poly_direct(g: WeightedGraph) -> LaurentPoly:
    """Kf^z_w(t) summed as (d_p t - 2)(d_q t - 2) r_pq, independent of the index combination."""
    rep = kirchhoff_report(g)
    d = rep.weighted_degrees
    total = LaurentPoly()
    for (p, q), r in rep.resistances.items():
        total = total + LaurentPoly({1: d[p], 0: -2}) * LaurentPoly({1: d[q], 0: -2}) * r
    return total


def spectral_kf_check(g: WeightedGraph) -> tuple[Fraction, float]:
    """(exact Kf_w, n * sum of 1/mu_i over the nonzero Laplacian eigenvalues)."""
    if not g.all_positive():
        raise PositivityError("the spectral formula needs positive weights")
    exact = kirchhoff_report(g).Kf_w
    L = np.array([[float(x) for x in row] for row in matrices(g).L])
    mu = np.sort(np.linalg.eigvalsh(L))
    return exact, float(g.n * np.sum(1.0 / mu[1:]))
