#pragma once

#include "gfflab/constants.hpp"
#include "gfflab/errors.hpp"

namespace gfflab::laws {

// Series evaluation control. Both the image (reflection) and the
// eigenfunction (spectral) expansions are implemented for the interval
// kernels; the crossover at t = crossover_ratio * (b+a)^2 picks whichever
// converges faster. Truncation error is bounded by the first omitted term.
struct SeriesControl {
  double abs_tol = 1e-13;
  int max_terms = 64;
  double crossover_ratio = 0.35;
};

enum class Side { lower, upper };  // exit through -a, resp. b

// ---------------------------------------------------------------------------
// Heat kernels for standard Brownian motion (generator (1/2) d^2/dx^2).
// ---------------------------------------------------------------------------

// p(t,x,y) on the whole line.
double heat_kernel_free(double t, double x, double y);

// p_{-a}(t,x,y) on (-a, inf), zero Dirichlet condition at -a. Requires
// x,y >= -a.
double heat_kernel_halfline(double a, double t, double x, double y);

// p_{-a,b}(t,x,y) on (-a,b), zero Dirichlet conditions at -a and b.
// Requires x,y in [-a,b]. The two expansions are exposed separately so tests
// can check their agreement in the overlap region.
double heat_kernel_interval(double a, double b, double t, double x, double y,
                            const SeriesControl& ctrl = {});
double heat_kernel_interval_reflection(double a, double b, double t, double x,
                                       double y, const SeriesControl& ctrl = {});
double heat_kernel_interval_spectral(double a, double b, double t, double x,
                                     double y, const SeriesControl& ctrl = {});

// ---------------------------------------------------------------------------
// Exit and hitting densities.
// ---------------------------------------------------------------------------

// q_{-a}(t): density of the first hitting time of level -a from 0.
double first_hit_density(double a, double t);

// Survival P(T_{-a} > t) = erf(a / sqrt(2 t)).
double first_hit_survival(double a, double t);

// q_{-a,b}(t,c): joint density of (T_{-a,b} in dt, B_T = c), c = -a or b.
double exit_density_interval(double a, double b, double t, Side side,
                             const SeriesControl& ctrl = {});

// beta(t,x): density of the first hitting time of level x>0 by a Bessel(3)
// process started at 0.
double bessel3_hit_density(double x, double t, const SeriesControl& ctrl = {});

// qcheck_0(t) = int_0^t (q_{-2l,2l}(s,2l) + q_{-2l,2l}(s,-2l))
//                       q_{-2l}(t-s) ds,  l = lambda.
// Computed by adaptive quadrature on the convolution.
double cluster_return_density(double t, const SeriesControl& ctrl = {});

// E[exp(-nu T_x)] for the Bessel(3) hitting time T_x of level x from 0:
//   x sqrt(2 nu) / sinh(x sqrt(2 nu))            for nu > 0,
//   x sqrt(2 nub) / sin(x sqrt(2 nub))           for nu = -nub < 0,
// continuous (=1) at nu = 0. The continued branch has a pole at
// nu = -pi^2 / (2 x^2); evaluation at or beyond it throws pole_error.
double bessel3_laplace(double x, double nu);

// ---------------------------------------------------------------------------
// Joint laws of (last-passage time, hitting time), Prop-A1 style products.
// All densities use the last-exit rate 1/(2*gap) so that each joint law has
// the correct total mass (the per-side tau marginals integrate to
// b/(a+b) and a/(a+b) and the hitting-time marginalization identity holds).
// ---------------------------------------------------------------------------

// One-sided pair: (tau_{-a}, T_{-a}) with tau the last visit to -a+gap
// before T. gap defaults to 2*lambda in callers; the cluster leg uses gap=a.
// Density at (t1,t2), 0 < t1 < t2:
//   (1/(2*gap)) p_{-a}(t1, 0, -a+gap) beta(t2-t1, gap).
double joint_density_fps(double a, double t1, double t2, double gap,
                         const SeriesControl& ctrl = {});

// Two-sided pair with exit side: density of
// (tau_{-a,b} in dt1, T_{-a,b} in dt2, B_T = side), continuous part:
//   (1/(4 lambda)) p_{-a,b}(t1, 0, m_side) beta(t2-t1, 2 lambda),
// with m_side = -a+2lambda or b-2lambda. For min(a,b) < 2 lambda the law has
// an extra atom at tau=0 which is not part of this density.
double joint_density_tvs(double a, double b, Side side, double t1, double t2,
                         const SeriesControl& ctrl = {});

// Bridge versions: multiply by p(L-t2, exit, v) / p(L, 0, v), support
// 0 < t1 < t2 < L.
double joint_density_fps_bridge(double a, double v, double L, double t1,
                                double t2, const SeriesControl& ctrl = {});
double joint_density_tvs_bridge(double a, double b, Side side, double v,
                                double L, double t1, double t2,
                                const SeriesControl& ctrl = {});

// Density of the bridge hitting time T^v on the event {T^v < L}:
//   one-sided: q_{-a}(t) p(L-t,-a,v)/p(L,0,v)
//   two-sided: q_{-a,b}(t,side) p(L-t,side,v)/p(L,0,v)
double bridge_hit_density(double a, double v, double L, double t);
double bridge_exit_density(double a, double b, Side side, double v, double L,
                           double t, const SeriesControl& ctrl = {});

// Law of the cluster return time on a bridge (one-dimensional):
//   qcheck_0(t) p(L-t,0,v)/p(L,0,v) on {t < L}.
double cluster_bridge_T_density(double v, double L, double t,
                                const SeriesControl& ctrl = {});

// Atom at tau = 0 of the two-sided pair: P(tau=0, B_T = side). Nonzero only
// when the relevant barrier is closer than 2*lambda.
double tvs_tau_atom(double a, double b, Side side);

}  // namespace gfflab::laws
