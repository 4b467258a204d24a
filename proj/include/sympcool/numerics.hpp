#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>

// Small numerical kernels used throughout: adaptive quadrature on a finite
// interval, a bracketing scalar root finder, and a seeded random stream with
// the two impact parameter draws the collision model needs.
namespace sympcool::numerics {

struct QuadratureSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-9;
  int max_depth = 60;
};

struct QuadratureResult {
  double value = 0;
  double error = 0;    // accumulated error bound from the embedded rule
  bool converged = true;
  long evaluations = 0;
};

namespace detail {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1], positive half.
inline constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
inline constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
inline constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

template <class F>
void gk15(F& f, double a, double b, double& kron, double& err, double& resabs,
          long& evals) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double resk = kWgk[7] * fc;
  double resg = kWg[3] * fc;
  double rabs = kWgk[7] * std::abs(fc);
  for (int j = 0; j < 7; ++j) {
    const double x = h * kXgk[j];
    const double fm = f(c - x);
    const double fp = f(c + x);
    resk += kWgk[j] * (fm + fp);
    rabs += kWgk[j] * (std::abs(fm) + std::abs(fp));
    if (j % 2 == 1) resg += kWg[j / 2] * (fm + fp);
  }
  evals += 15;
  kron = resk * h;
  err = std::abs((resk - resg) * h);
  resabs = rabs * h;
}

template <class F>
void adapt(F& f, double a, double b, double tol_share, double min_width,
           int depth, int max_depth, QuadratureResult& out) {
  double kron, err, resabs;
  gk15(f, a, b, kron, err, resabs, out.evaluations);
  // the roundoff floor keeps unreachable tolerances from splitting forever
  const double floor = 50.0 * 2.220446049250313e-16 * resabs;
  if (err <= tol_share || err <= floor || (b - a) <= min_width) {
    out.value += kron;
    out.error += err;
    return;
  }
  if (depth >= max_depth) {
    out.value += kron;
    out.error += err;
    out.converged = false;
    return;
  }
  const double m = 0.5 * (a + b);
  adapt(f, a, m, 0.5 * tol_share, min_width, depth + 1, max_depth, out);
  adapt(f, m, b, 0.5 * tol_share, min_width, depth + 1, max_depth, out);
}

} // namespace detail

// Integrates f over [a, b] by adaptive bisection with a 15 point Kronrod
// rule; the 7 point Gauss subset provides the error estimate. The returned
// error is a bound: panels are accepted when their estimate fits into their
// share of max(abs_tol, rel_tol * |first whole-interval estimate|). When the
// depth cap is hit the best estimate is still returned, with converged
// cleared. a == b integrates to zero; a > b is a usage error.
template <class F>
QuadratureResult integrate(F&& f, double a, double b, QuadratureSpec spec = {}) {
  if (a > b) throw std::invalid_argument("integrate: lower limit above upper limit");
  QuadratureResult out;
  if (a == b) return out;
  double kron, err, resabs;
  detail::gk15(f, a, b, kron, err, resabs, out.evaluations);
  const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(kron));
  if (err <= tol) {
    out.value = kron;
    out.error = err;
    return out;
  }
  const double min_width = 1e-15 * (b - a);
  out.evaluations = 0;
  detail::adapt(f, a, b, tol, min_width, 0, spec.max_depth, out);
  return out;
}

struct RootSpec {
  double lo = 0;
  double hi = 0;
  double x_tol = 1e-12;  // absolute bracket width target
  int max_iter = 200;
};

struct BracketError : std::runtime_error {
  BracketError(const std::string& msg, double flo_, double fhi_)
      : std::runtime_error(msg), f_lo(flo_), f_hi(fhi_) {}
  double f_lo, f_hi;
};

// Finds a root of f in [lo, hi]. Requires a sign change over the bracket
// (BracketError otherwise, carrying both end values). Secant steps are taken
// when they stay inside the current bracket and shrink it; otherwise the
// step falls back to bisection, so convergence is guaranteed.
double find_root(const std::function<double(double)>& f, RootSpec spec);

// Deterministic random stream. The engine is the standard 64 bit Mersenne
// twister; uniforms are built from the raw 64 bit output so that equal seeds
// give bit-identical sequences on every platform. Worker streams for
// parallel ensembles derive from (seed, stream_index).
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : RandomStream(seed, 0) {}
  RandomStream(std::uint64_t seed, std::uint64_t stream_index) {
    std::seed_seq seq{
        static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
        static_cast<std::uint32_t>(stream_index),
        static_cast<std::uint32_t>(stream_index >> 32)};
    eng_.seed(seq);
  }

  double uniform() { // [0, 1)
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  // Impact parameter draw against the thermal single-ion distribution
  // f(b) = (b/sigma^2) exp(-b^2 / 2 sigma^2); inverse CDF with u in (0,1].
  static double impact_single_atom_from_u(double u, double sigma) {
    return sigma * std::sqrt(-2.0 * std::log(u));
  }
  double impact_single_atom(double sigma) {
    return impact_single_atom_from_u(1.0 - uniform(), sigma);
  }

  // Impact parameter draw against the areal crystal distribution
  // f(b) = 8 b / d^2 on [0, d/2]; inverse CDF b = (d/2) sqrt(u).
  static double impact_crystal_from_u(double u, double d) {
    return 0.5 * d * std::sqrt(u);
  }
  double impact_crystal(double d) { return impact_crystal_from_u(uniform(), d); }

 private:
  std::mt19937_64 eng_;
};

} // namespace sympcool::numerics
