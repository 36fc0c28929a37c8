#!/usr/bin/env python3
"""Print the exact reference values for the small fixture graphs."""

from zetakirch.algebra import T, poly_derivative
from zetakirch.derivatives import verify_corollary1, verify_hashimoto_northshield, verify_theorem13
from zetakirch.graph import complete_graph, path_graph
from zetakirch.spanning import kirchhoff_report
from zetakirch.zeta import f_w_poly


def describe(name, g):
    rep = kirchhoff_report(g)
    f0 = f_w_poly(g).restrict_u(0)
    print(f"{name}: n={g.n} m={g.m} w(G)={g.total_weight()}")
    print(f"  kappa_w={rep.kappa_w} Kf={rep.Kf_w} Kf*={rep.Kf_star_w} Kf+={rep.Kf_plus_w} Kf^z={rep.Kf_z_w}")
    print(f"  df/dt(0,1)={poly_derivative(f_w_poly(g), T).evaluate(0, 1)} f''(1)={f0.derivative().derivative()(1)}")
    if g.m >= g.n:
        print(f"  weighted limit={verify_theorem13(g)[0]}")
    if g.is_unweighted() and g.m >= g.n:
        print(f"  dF/dt(0,1)={verify_corollary1(g).checks[0].lhs}")
        if g.betti_number() > 1:
            print(f"  Ihara limit value={verify_hashimoto_northshield(g)[0]}")


if __name__ == "__main__":
    describe("K3", complete_graph(3))
    describe("K4", complete_graph(4))
    describe("P3 (weights 2, 3)", path_graph(3, [2, 3]))
