#include "gfflab/laws.hpp"

#include <cmath>
#include <string>

#include "gfflab/quadrature.hpp"

namespace gfflab::laws {

namespace {

constexpr double kSqrt2Pi = 2.50662827463100050242;

double gauss_bump(double t, double z) {
  return std::exp(-z * z / (2.0 * t)) / std::sqrt(2.0 * kPi * t);
}

void require_time(double t, const char* who) {
  if (!(t > 0.0)) throw precondition_error(std::string(who) + ": t must be > 0");
}

}  // namespace

double heat_kernel_free(double t, double x, double y) {
  require_time(t, "heat_kernel_free");
  return gauss_bump(t, y - x);
}

double heat_kernel_halfline(double a, double t, double x, double y) {
  require_time(t, "heat_kernel_halfline");
  if (!(a > 0.0)) throw precondition_error("heat_kernel_halfline: a must be > 0");
  if (x < -a || y < -a)
    throw precondition_error("heat_kernel_halfline: x,y must be >= -a");
  return gauss_bump(t, y - x) - gauss_bump(t, y + x + 2.0 * a);
}

double heat_kernel_interval_reflection(double a, double b, double t, double x,
                                       double y, const SeriesControl& ctrl) {
  require_time(t, "heat_kernel_interval");
  const double period = a + b;
  const double pref = 1.0 / std::sqrt(2.0 * kPi * t);
  auto ring = [&](int k, double& largest) {
    const double shift = 2.0 * k * period;
    const double direct = std::exp(-(y - x + shift) * (y - x + shift) / (2.0 * t));
    const double image =
        std::exp(-(y + x + 2.0 * a + shift) * (y + x + 2.0 * a + shift) / (2.0 * t));
    largest = std::max(largest, std::max(direct, image));
    return direct - image;
  };
  double largest = 0.0;
  double sum = ring(0, largest);
  for (int k = 1; k <= ctrl.max_terms; ++k) {
    largest = 0.0;
    sum += ring(k, largest) + ring(-k, largest);
    if (largest * pref < ctrl.abs_tol) return pref * sum;
  }
  throw truncation_error("heat_kernel_interval_reflection: term cap reached",
                         pref * sum);
}

double heat_kernel_interval_spectral(double a, double b, double t, double x,
                                     double y, const SeriesControl& ctrl) {
  require_time(t, "heat_kernel_interval");
  const double period = a + b;
  const double pref = 2.0 / period;
  double sum = 0.0;
  for (int n = 1; n <= ctrl.max_terms; ++n) {
    const double kn = n * kPi / period;
    const double decay = std::exp(-kn * kn * t / 2.0);
    sum += std::sin(kn * (x + a)) * std::sin(kn * (y + a)) * decay;
    if (pref * decay < ctrl.abs_tol) return pref * sum;
  }
  throw truncation_error("heat_kernel_interval_spectral: term cap reached",
                         pref * sum);
}

double heat_kernel_interval(double a, double b, double t, double x, double y,
                            const SeriesControl& ctrl) {
  require_time(t, "heat_kernel_interval");
  if (!(a > 0.0) || !(b > 0.0))
    throw precondition_error("heat_kernel_interval: a,b must be > 0");
  if (x < -a || x > b || y < -a || y > b)
    throw precondition_error("heat_kernel_interval: x,y must lie in [-a,b]");
  const double period = a + b;
  if (t < ctrl.crossover_ratio * period * period)
    return heat_kernel_interval_reflection(a, b, t, x, y, ctrl);
  return heat_kernel_interval_spectral(a, b, t, x, y, ctrl);
}

double first_hit_density(double a, double t) {
  require_time(t, "first_hit_density");
  if (!(a > 0.0)) throw precondition_error("first_hit_density: a must be > 0");
  return a / std::sqrt(2.0 * kPi * t * t * t) * std::exp(-a * a / (2.0 * t));
}

double first_hit_survival(double a, double t) {
  require_time(t, "first_hit_survival");
  return std::erf(a / std::sqrt(2.0 * t));
}

double exit_density_interval(double a, double b, double t, Side side,
                             const SeriesControl& ctrl) {
  require_time(t, "exit_density_interval");
  if (!(a > 0.0) || !(b > 0.0))
    throw precondition_error("exit_density_interval: a,b must be > 0");
  const double period = a + b;
  const double c = (side == Side::lower) ? a : b;
  if (t < ctrl.crossover_ratio * period * period) {
    // image series: sum over k of (c + 2k(a+b)) exp(-(c+2k(a+b))^2 / 2t)
    const double pref = 1.0 / std::sqrt(2.0 * kPi * t * t * t);
    auto term_at = [&](int k) {
      const double z = c + 2.0 * k * period;
      return z * std::exp(-z * z / (2.0 * t));
    };
    double sum = term_at(0);
    for (int k = 1; k <= ctrl.max_terms; ++k) {
      const double tp = term_at(k);
      const double tm = term_at(-k);
      sum += tp + tm;
      if (std::max(std::abs(tp), std::abs(tm)) * pref < ctrl.abs_tol)
        return pref * sum;
    }
    throw truncation_error("exit_density_interval: term cap reached", pref * sum);
  }
  // spectral flux series at the chosen endpoint
  double sum = 0.0;
  for (int n = 1; n <= ctrl.max_terms; ++n) {
    const double kn = n * kPi / period;
    const double decay = std::exp(-kn * kn * t / 2.0);
    double term = kn / period * std::sin(n * kPi * a / period) * decay;
    if (side == Side::upper && n % 2 == 0) term = -term;
    sum += term;
    if (kn / period * decay < ctrl.abs_tol) return sum;
  }
  throw truncation_error("exit_density_interval: term cap reached", sum);
}

double bessel3_hit_density(double x, double t, const SeriesControl& ctrl) {
  require_time(t, "bessel3_hit_density");
  if (!(x > 0.0)) throw precondition_error("bessel3_hit_density: x must be > 0");
  if (t < 4.0 * ctrl.crossover_ratio * x * x) {
    const double pref = std::sqrt(2.0) * x / std::sqrt(kPi * t * t * t * t * t);
    double sum = 0.0;
    for (int k = 0; k <= ctrl.max_terms; ++k) {
      const double m = (2 * k + 1) * x;
      const double term = (m * m - t) * std::exp(-m * m / (2.0 * t));
      sum += term;
      if (k >= 1 && std::abs(term) * pref < ctrl.abs_tol)
        return std::max(0.0, pref * sum);
    }
    throw truncation_error("bessel3_hit_density: term cap reached", pref * sum);
  }
  // inverse Laplace transform of x*sqrt(2nu)/sinh(x*sqrt(2nu))
  double sum = 0.0;
  for (int n = 1; n <= ctrl.max_terms; ++n) {
    const double rate = n * n * kPi * kPi / (2.0 * x * x);
    const double term = (n % 2 == 1 ? 1.0 : -1.0) * 2.0 * rate * std::exp(-rate * t);
    sum += term;
    if (2.0 * rate * std::exp(-rate * t) < ctrl.abs_tol)
      return std::max(0.0, sum);
  }
  throw truncation_error("bessel3_hit_density: term cap reached", sum);
}

double cluster_return_density(double t, const SeriesControl& ctrl) {
  require_time(t, "cluster_return_density");
  const double l2 = kTwoLambda;
  auto integrand = [&](double s) {
    if (s <= 0.0 || s >= t) return 0.0;
    const double exits = exit_density_interval(l2, l2, s, Side::lower, ctrl) +
                         exit_density_interval(l2, l2, s, Side::upper, ctrl);
    return exits * first_hit_density(l2, t - s);
  };
  // the exit-time factor is negligible beyond s ~ 60 (tail rate pi/4), so
  // cap the convolution range; keeps huge-t evaluations well conditioned
  const double s_hi = std::min(t, 60.0);
  return integrate(integrand, 0.0, s_hi, 1e-14, 1e-9);
}

double bessel3_laplace(double x, double nu) {
  if (!(x > 0.0)) throw precondition_error("bessel3_laplace: x must be > 0");
  if (nu == 0.0) return 1.0;
  if (nu > 0.0) {
    const double z = x * std::sqrt(2.0 * nu);
    if (z < 1e-8) return 1.0 - z * z / 6.0;
    return z / std::sinh(z);
  }
  const double nub = -nu;
  const double pole = kPi * kPi / (2.0 * x * x);
  if (nub >= pole)
    throw pole_error("bessel3_laplace: nu at or beyond the sinh pole");
  const double z = x * std::sqrt(2.0 * nub);
  if (z < 1e-8) return 1.0 + z * z / 6.0;
  return z / std::sin(z);
}

double joint_density_fps(double a, double t1, double t2, double gap,
                         const SeriesControl& ctrl) {
  (void)ctrl;
  if (!(gap > 0.0)) throw precondition_error("joint_density_fps: gap must be > 0");
  if (!(0.0 < t1 && t1 < t2))
    throw precondition_error("joint_density_fps: need 0 < t1 < t2");
  return heat_kernel_halfline(a, t1, 0.0, -a + gap) *
         bessel3_hit_density(gap, t2 - t1, ctrl) / (2.0 * gap);
}

double joint_density_tvs(double a, double b, Side side, double t1, double t2,
                         const SeriesControl& ctrl) {
  if (!(0.0 < t1 && t1 < t2))
    throw precondition_error("joint_density_tvs: need 0 < t1 < t2");
  const double m = (side == Side::lower) ? (-a + kTwoLambda) : (b - kTwoLambda);
  return heat_kernel_interval(a, b, t1, 0.0, m, ctrl) *
         bessel3_hit_density(kTwoLambda, t2 - t1, ctrl) / (4.0 * kLambda);
}

double joint_density_fps_bridge(double a, double v, double L, double t1,
                                double t2, const SeriesControl& ctrl) {
  if (!(L > 0.0)) throw precondition_error("joint_density_fps_bridge: L must be > 0");
  if (!(t2 < L))
    throw precondition_error("joint_density_fps_bridge: need t2 < L");
  return joint_density_fps(a, t1, t2, kTwoLambda, ctrl) *
         heat_kernel_free(L - t2, -a, v) / heat_kernel_free(L, 0.0, v);
}

double joint_density_tvs_bridge(double a, double b, Side side, double v,
                                double L, double t1, double t2,
                                const SeriesControl& ctrl) {
  if (!(L > 0.0)) throw precondition_error("joint_density_tvs_bridge: L must be > 0");
  if (!(t2 < L))
    throw precondition_error("joint_density_tvs_bridge: need t2 < L");
  const double exit = (side == Side::lower) ? -a : b;
  return joint_density_tvs(a, b, side, t1, t2, ctrl) *
         heat_kernel_free(L - t2, exit, v) / heat_kernel_free(L, 0.0, v);
}

double bridge_hit_density(double a, double v, double L, double t) {
  if (!(L > 0.0)) throw precondition_error("bridge_hit_density: L must be > 0");
  if (!(0.0 < t && t < L))
    throw precondition_error("bridge_hit_density: need 0 < t < L");
  return first_hit_density(a, t) * heat_kernel_free(L - t, -a, v) /
         heat_kernel_free(L, 0.0, v);
}

double bridge_exit_density(double a, double b, Side side, double v, double L,
                           double t, const SeriesControl& ctrl) {
  if (!(L > 0.0)) throw precondition_error("bridge_exit_density: L must be > 0");
  if (!(0.0 < t && t < L))
    throw precondition_error("bridge_exit_density: need 0 < t < L");
  const double exit = (side == Side::lower) ? -a : b;
  return exit_density_interval(a, b, t, side, ctrl) *
         heat_kernel_free(L - t, exit, v) / heat_kernel_free(L, 0.0, v);
}

double cluster_bridge_T_density(double v, double L, double t,
                                const SeriesControl& ctrl) {
  if (!(L > 0.0))
    throw precondition_error("cluster_bridge_T_density: L must be > 0");
  if (!(0.0 < t && t < L))
    throw precondition_error("cluster_bridge_T_density: need 0 < t < L");
  return cluster_return_density(t, ctrl) * heat_kernel_free(L - t, 0.0, v) /
         heat_kernel_free(L, 0.0, v);
}

double tvs_tau_atom(double a, double b, Side side) {
  if (!(a > 0.0) || !(b > 0.0))
    throw precondition_error("tvs_tau_atom: a,b must be > 0");
  const double barrier = (side == Side::lower) ? a : b;
  if (barrier >= kTwoLambda) return 0.0;
  // exit through the near barrier without ever visiting the recording level
  return (kTwoLambda - barrier) / kTwoLambda;
}

}  // namespace gfflab::laws
