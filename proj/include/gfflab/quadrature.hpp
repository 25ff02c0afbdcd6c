#pragma once

#include <cmath>
#include <cstddef>
#include <functional>

#include "gfflab/errors.hpp"

namespace gfflab {

// Adaptive Gauss-Kronrod (7,15) quadrature. Plain recursive bisection with
// the usual |K15 - G7| error estimate; good enough for the smooth,
// exponentially decaying densities in this project.
namespace detail {

// 15-point Kronrod nodes/weights on [-1,1] and the embedded 7-point Gauss
// weights (abscissae 1,3,...,13 of the Kronrod set).
inline constexpr double kXgk[15] = {
    -0.991455371120813, -0.949107912342759, -0.864864423359769,
    -0.741531185599394, -0.586087235467691, -0.405845151377397,
    -0.207784955007898, 0.0,                0.207784955007898,
    0.405845151377397,  0.586087235467691,  0.741531185599394,
    0.864864423359769,  0.949107912342759,  0.991455371120813};
inline constexpr double kWgk[15] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728, 0.204432940075298,
    0.190350578064785, 0.169004726639267, 0.140653259715525,
    0.104790010322250, 0.063092092629979, 0.022935322010529};
inline constexpr double kWg[7] = {0.129484966168870, 0.279705391489277,
                                  0.381830050505119, 0.417959183673469,
                                  0.381830050505119, 0.279705391489277,
                                  0.129484966168870};

template <class F>
inline void gk15(const F& f, double a, double b, double& value, double& err) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double resk = 0.0, resg = 0.0;
  for (int i = 0; i < 15; ++i) {
    const double fx = f(c + h * kXgk[i]);
    resk += kWgk[i] * fx;
    if (i % 2 == 1) resg += kWg[i / 2] * fx;
  }
  value = resk * h;
  err = std::abs((resk - resg) * h);
}

template <class F>
inline double adapt(const F& f, double a, double b, double abs_tol,
                    double rel_tol, int depth, double scale) {
  double v, e;
  gk15(f, a, b, v, e);
  // a panel is accepted when locally converged or negligible on the scale of
  // the whole integral (keeps vanishing tails from forcing deep recursion)
  if (e <= abs_tol || e <= rel_tol * std::abs(v) ||
      e <= 0.01 * rel_tol * scale)
    return v;
  if (depth <= 0)
    throw integration_error("adaptive quadrature: depth limit reached");
  const double c = 0.5 * (a + b);
  return adapt(f, a, c, 0.5 * abs_tol, rel_tol, depth - 1, scale) +
         adapt(f, c, b, 0.5 * abs_tol, rel_tol, depth - 1, scale);
}

}  // namespace detail

// Integrate f over the finite interval [a,b]. Endpoints are never evaluated
// (all Kronrod nodes are interior), so integrable endpoint singularities are
// tolerated.
template <class F>
inline double integrate(const F& f, double a, double b,
                        double abs_tol = 1e-10, double rel_tol = 1e-9,
                        int max_depth = 48) {
  if (!(b >= a)) throw precondition_error("integrate: b < a");
  if (a == b) return 0.0;
  double v0, e0;
  detail::gk15(f, a, b, v0, e0);
  const double scale = std::max(std::abs(v0), abs_tol);
  return detail::adapt(f, a, b, abs_tol, rel_tol, max_depth, scale);
}

// Integrate f over [a,b] with a square-root substitution at the lower end,
// t = a + w^2: removes (t-a)^{-1/2} endpoint singularities exactly.
template <class F>
inline double integrate_sqrt_lower(const F& f, double a, double b,
                                   double abs_tol = 1e-10,
                                   double rel_tol = 1e-9) {
  if (!(b >= a)) throw precondition_error("integrate_sqrt_lower: b < a");
  if (a == b) return 0.0;
  auto g = [&](double w) { return f(a + w * w) * 2.0 * w; };
  return integrate(g, 0.0, std::sqrt(b - a), abs_tol, rel_tol);
}

// Integrate f over [a,b] with a square-root substitution at the upper end,
// t = b - w^2: removes (b-t)^{-1/2} endpoint singularities exactly. Values
// that round onto the endpoint contribute nothing.
template <class F>
inline double integrate_sqrt_upper(const F& f, double a, double b,
                                   double abs_tol = 1e-10,
                                   double rel_tol = 1e-9) {
  if (!(b >= a)) throw precondition_error("integrate_sqrt_upper: b < a");
  if (a == b) return 0.0;
  auto g = [&](double w) {
    const double t = b - w * w;
    if (t >= b || t <= a) return 0.0;
    return f(t) * 2.0 * w;
  };
  return integrate(g, 0.0, std::sqrt(b - a), abs_tol, rel_tol);
}

// Integrate f over [a, infinity) by mapping t = a + (u/(1-u))^2, u in [0,1).
// The quadratic map keeps integrands with t^{-3/2} tails bounded near u = 1.
template <class F>
inline double integrate_to_inf(const F& f, double a, double abs_tol = 1e-10,
                               double rel_tol = 1e-9) {
  auto g = [&](double u) {
    const double om = 1.0 - u;
    const double r = u / om;
    const double t = a + r * r;
    return f(t) * 2.0 * r / (om * om);
  };
  return integrate(g, 0.0, 1.0 - 1e-12, abs_tol, rel_tol);
}

}  // namespace gfflab
