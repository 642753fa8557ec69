#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <queue>
#include <string>
#include <type_traits>
#include <vector>

#include "paircorr/error.hpp"

namespace paircorr::quad {

enum class DomainMap { identity, algebraic_infinite };
enum class TailModel { none, exponential, power_law };

struct QuadratureSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_depth = 40;      // bisection depth bound for any single panel
  int max_panels = 4000;   // total panel budget
  DomainMap domain_map = DomainMap::identity;
  TailModel tail_model = TailModel::none;

  void validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
      throw ConfigurationError("quadrature tolerances must be positive");
    if (max_depth < 1 || max_panels < 1)
      throw ConfigurationError("quadrature depth and panel budget must be >= 1");
  }
  double target(double magnitude) const noexcept {
    return std::max(abs_tol, rel_tol * magnitude);
  }
};

template <class T>
struct QuadratureResult {
  T value{};
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
  std::string diagnostic;

  // Throws QuadratureFailure carrying the achieved error when not converged.
  const QuadratureResult &require(const char *what) const {
    if (!converged)
      throw QuadratureFailure(std::string(what) + ": " + diagnostic, error_estimate);
    return *this;
  }
};

namespace detail {

template <class T>
double magnitude(const T &x) {
  using std::abs;
  return static_cast<double>(abs(x));
}

// 7-point Gauss / 15-point Kronrod nodes on [-1, 1] (QUADPACK qk15).
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class T>
struct PanelResult {
  T value;
  double error;
};

// Single GK15 panel; err = |K15 - G7|.
template <class T, class F>
PanelResult<T> gk15(const F &f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const T fc = f(center);
  T kronrod = fc * kWgk[7];
  T gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const T f1 = f(center - dx);
    const T f2 = f(center + dx);
    kronrod += (f1 + f2) * kWgk[j];
    if (j % 2 == 1) gauss += (f1 + f2) * kWg[j / 2];
  }
  kronrod *= half;
  gauss *= half;
  return {kronrod, magnitude(kronrod - gauss)};
}

template <class T>
struct Panel {
  double a, b;
  T value;
  double error;
  int depth;
};

template <class T>
struct PanelOrder {
  // Largest error first; ties broken by leftmost panel for determinism.
  bool operator()(const Panel<T> &l, const Panel<T> &r) const {
    if (l.error != r.error) return l.error < r.error;
    return l.a > r.a;
  }
};

inline double algebraic_map(double t) { return t / (1.0 - t * t); }
inline double algebraic_jacobian(double t) {
  const double d = 1.0 - t * t;
  return (1.0 + t * t) / (d * d);
}

// Global adaptive subdivision on a finite interval.
template <class T, class F>
QuadratureResult<T> adaptive_finite(const F &f, double a, double b,
                                    const QuadratureSpec &spec) {
  QuadratureResult<T> out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  std::size_t evals = 0;
  auto counted = [&](double x) {
    ++evals;
    return static_cast<T>(f(x));
  };
  std::priority_queue<Panel<T>, std::vector<Panel<T>>, PanelOrder<T>> work;
  std::vector<Panel<T>> finished;  // panels at max depth
  {
    auto r = gk15<T>(counted, a, b);
    work.push({a, b, r.value, r.error, 0});
  }
  auto totals = [&]() {
    std::vector<Panel<T>> all(finished);
    auto copy = work;
    while (!copy.empty()) {
      all.push_back(copy.top());
      copy.pop();
    }
    std::sort(all.begin(), all.end(),
              [](const Panel<T> &l, const Panel<T> &r) { return l.a < r.a; });
    T v{};
    double e = 0.0;
    for (const auto &p : all) {
      v += p.value;
      e += p.error;
    }
    return std::pair<T, double>(v, e);
  };
  // Running sums for the stopping test; the reported value is re-summed in
  // panel order at the end.
  T run_value = work.top().value;
  double run_error = work.top().error;
  int panels = 1;
  bool exhausted = false;
  while (!work.empty()) {
    if (run_error <= spec.target(magnitude(run_value))) break;
    if (panels >= spec.max_panels) {
      exhausted = true;
      break;
    }
    Panel<T> worst = work.top();
    work.pop();
    if (worst.depth >= spec.max_depth) {
      finished.push_back(worst);
      exhausted = true;
      continue;
    }
    const double mid = 0.5 * (worst.a + worst.b);
    auto left = gk15<T>(counted, worst.a, mid);
    auto right = gk15<T>(counted, mid, worst.b);
    run_value += left.value + right.value - worst.value;
    run_error += left.error + right.error - worst.error;
    work.push({worst.a, mid, left.value, left.error, worst.depth + 1});
    work.push({mid, worst.b, right.value, right.error, worst.depth + 1});
    ++panels;
  }
  auto [value, error] = totals();
  out.value = value;
  out.error_estimate = error;
  out.evaluations = evals;
  out.converged = error <= spec.target(magnitude(value));
  if (!out.converged)
    out.diagnostic = exhausted ? "subdivision budget exhausted"
                               : "tolerance not reached";
  return out;
}

} // namespace detail

// Adaptive Gauss-Kronrod (7/15) quadrature of f over [a, b]. Either bound
// may be infinite, in which case the algebraic map x = t/(1 - t^2) is used
// regardless of spec.domain_map. Panels are refined largest-error first and
// summed left to right, so results are deterministic.
template <class F>
auto integrate_adaptive(F &&f, double a, double b, const QuadratureSpec &spec = {}) {
  using T = std::decay_t<decltype(f(0.0))>;
  spec.validate();
  if (std::isnan(a) || std::isnan(b)) throw ConfigurationError("NaN integration bound");
  double sign = 1.0;
  if (a > b) {
    std::swap(a, b);
    sign = -1.0;
  }
  const bool lo_inf = std::isinf(a);
  const bool hi_inf = std::isinf(b);
  QuadratureResult<T> r;
  if (!lo_inf && !hi_inf && spec.domain_map == DomainMap::identity) {
    r = detail::adaptive_finite<T>(f, a, b, spec);
  } else if (lo_inf && hi_inf) {
    auto g = [&](double t) -> T {
      return static_cast<T>(f(detail::algebraic_map(t))) * detail::algebraic_jacobian(t);
    };
    r = detail::adaptive_finite<T>(g, -1.0, 1.0, spec);
  } else if (hi_inf) {
    auto g = [&](double t) -> T {
      return static_cast<T>(f(a + detail::algebraic_map(t))) * detail::algebraic_jacobian(t);
    };
    r = detail::adaptive_finite<T>(g, 0.0, 1.0, spec);
  } else if (lo_inf) {
    auto g = [&](double t) -> T {
      return static_cast<T>(f(b + detail::algebraic_map(t))) * detail::algebraic_jacobian(t);
    };
    r = detail::adaptive_finite<T>(g, -1.0, 0.0, spec);
  } else {
    // Finite interval with the algebraic map requested: map [a, b] onto the
    // full line segment [-t0, t0] symmetric around the midpoint.
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    // t0 solves t/(1-t^2) = half
    const double t0 = (std::sqrt(1.0 + 4.0 * half * half) - 1.0) / (2.0 * half);
    auto g = [&](double t) -> T {
      return static_cast<T>(f(mid + detail::algebraic_map(t))) * detail::algebraic_jacobian(t);
    };
    r = detail::adaptive_finite<T>(g, -t0, t0, spec);
  }
  r.value *= sign;
  return r;
}

// int_a^cutoff f plus a modelled tail int_cutoff^inf f. f must be real and
// positive near the cutoff. The tail model comes from spec.tail_model; its
// uncertainty (difference between the estimate made at cutoff and the one
// made at 2*cutoff) is folded into error_estimate.
template <class F>
QuadratureResult<double> integrate_with_tail(F &&f, double a, double cutoff,
                                             const QuadratureSpec &spec) {
  if (!(cutoff > a)) throw ConfigurationError("cutoff must exceed lower bound");
  QuadratureSpec body_spec = spec;
  body_spec.domain_map = DomainMap::identity;
  auto body = integrate_adaptive(f, a, cutoff, body_spec);
  if (spec.tail_model == TailModel::none) return body;

  auto tail_at = [&](double x) -> double {
    const double f1 = f(x);
    if (f1 == 0.0) return 0.0;
    if (spec.tail_model == TailModel::power_law) {
      const double f2 = f(2.0 * x);
      const double k = std::log(f1 / f2) / std::numbers::ln2;
      if (!(k > 1.0))
        throw QuadratureFailure("power-law tail does not decay fast enough", std::abs(f1 * x));
      return f1 * x / (k - 1.0);
    }
    const double h = 1e-3 * std::max(1.0, std::abs(x));
    const double f2 = f(x + h);
    const double kappa = std::log(f1 / f2) / h;
    if (!(kappa > 0.0))
      throw QuadratureFailure("exponential tail does not decay", std::abs(f1));
    return f1 / kappa;
  };
  const double tail = tail_at(cutoff);
  auto ext = integrate_adaptive(f, cutoff, 2.0 * cutoff, body_spec);
  const double tail2 = ext.value + tail_at(2.0 * cutoff);
  QuadratureResult<double> out = body;
  out.value = body.value + tail;
  out.error_estimate = body.error_estimate + std::abs(tail - tail2);
  out.evaluations = body.evaluations + ext.evaluations + 4;
  out.converged = body.converged && out.error_estimate <= spec.target(std::abs(out.value));
  if (!out.converged && out.diagnostic.empty()) out.diagnostic = "tail model uncertainty exceeds tolerance";
  return out;
}

namespace detail {

// Wynn epsilon extrapolation of a sequence of partial sums. Returns the
// estimate from the deepest even column and the gap to the previous one.
template <class T>
std::pair<T, double> wynn_epsilon(const std::vector<T> &sums) {
  const std::size_t n = sums.size();
  if (n < 3) return {sums.back(), std::numeric_limits<double>::infinity()};
  std::vector<T> prev(n + 1, T{});  // column k-1
  std::vector<T> cur(sums.begin(), sums.end());  // column k
  T best = sums.back();
  double best_gap = std::abs(sums[n - 1] - sums[n - 2]);
  for (std::size_t k = 0; cur.size() > 1; ++k) {
    std::vector<T> next(cur.size() - 1);
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      const T diff = cur[i + 1] - cur[i];
      if (diff == T{}) return {cur[i + 1], k % 2 == 0 ? 0.0 : best_gap};
      next[i] = prev[i + 1] + T(1.0) / diff;
    }
    prev = cur;
    cur = next;
    if (k % 2 == 1 && cur.size() >= 2) {
      const double gap = std::abs(cur.back() - cur[cur.size() - 2]);
      if (gap < best_gap) {
        best = cur.back();
        best_gap = gap;
      }
    }
  }
  return {best, best_gap};
}

} // namespace detail

// int_a^inf f(x) e^{-i omega x} dx for f decaying at least algebraically.
// The half line is cut at half-period boundaries; block sums are accumulated
// and accelerated with Wynn's epsilon algorithm. Integrands whose blocks do
// not shrink produce converged == false with a diagnostic.
template <class F>
QuadratureResult<std::complex<double>> oscillatory_half_line(F &&f, double omega, double a,
                                                             const QuadratureSpec &spec = {},
                                                             int max_blocks = 4000) {
  using cplx = std::complex<double>;
  spec.validate();
  auto g = [&](double x) -> cplx {
    return cplx(f(x)) * std::exp(cplx(0.0, -omega * x));
  };
  QuadratureResult<cplx> out;
  if (omega == 0.0) {
    auto r = integrate_adaptive(g, a, std::numeric_limits<double>::infinity(), spec);
    out.value = r.value;
    out.error_estimate = r.error_estimate;
    out.evaluations = r.evaluations;
    out.converged = r.converged;
    out.diagnostic = r.diagnostic;
    return out;
  }
  const double h = std::numbers::pi / std::abs(omega);
  QuadratureSpec block_spec = spec;
  block_spec.domain_map = DomainMap::identity;
  block_spec.abs_tol = spec.abs_tol * 1e-2;
  std::vector<cplx> sums;
  cplx total{};
  double block_err = 0.0;
  double peak_block = std::numeric_limits<double>::min();
  int small_run = 0;
  int window = 0;
  cplx last_estimate{};
  for (int k = 0; k < max_blocks; ++k) {
    auto r = integrate_adaptive(g, a + k * h, a + (k + 1) * h, block_spec);
    out.evaluations += r.evaluations;
    block_err += r.error_estimate;
    total += r.value;
    sums.push_back(total);
    const double mag = std::abs(r.value);
    peak_block = std::max(peak_block, mag);
    const double tol = spec.target(std::abs(total));
    // Exponentially decaying tails terminate directly.
    small_run = mag <= 1e-3 * tol ? small_run + 1 : 0;
    if (small_run >= 4) {
      out.value = total;
      out.error_estimate = block_err + mag;
      out.converged = out.error_estimate <= tol;
      if (!out.converged) out.diagnostic = "block errors exceed tolerance";
      return out;
    }
    // Algebraic tails: extrapolate the partial sums. Only once the blocks
    // have visibly shrunk; Wynn would happily "sum" a periodic sequence.
    if (k >= 12 && k % 2 == 0 && mag <= 0.5 * peak_block) {
      const std::size_t w = std::min<std::size_t>(sums.size(), 24);
      std::vector<cplx> tail(sums.end() - static_cast<std::ptrdiff_t>(w), sums.end());
      auto [estimate, gap] = detail::wynn_epsilon(tail);
      const double change = std::abs(estimate - last_estimate);
      last_estimate = estimate;
      window = (gap <= tol && change <= tol) ? window + 1 : 0;
      if (window >= 3) {
        out.value = estimate;
        out.error_estimate = block_err + std::max(gap, change);
        out.converged = out.error_estimate <= std::max(tol, 10.0 * block_err);
        if (!out.converged) out.diagnostic = "extrapolation error exceeds tolerance";
        return out;
      }
    }
    // Blocks that are not shrinking after many periods: not integrable.
    if (k >= 200 && mag > 0.5 * peak_block) {
      out.value = total;
      out.error_estimate = mag;
      out.converged = false;
      out.diagnostic = "integrand does not decay (block magnitude not shrinking)";
      return out;
    }
  }
  out.value = last_estimate == cplx{} ? total : last_estimate;
  out.error_estimate = std::abs(sums.back() - sums[sums.size() - 2]);
  out.converged = false;
  out.diagnostic = "oscillatory block budget exhausted";
  return out;
}

// Fourier integral  int_{-inf}^{inf} f(x) e^{-i omega x} dx.
template <class F>
QuadratureResult<std::complex<double>> oscillatory_ft(F &&f, double omega,
                                                      const QuadratureSpec &spec = {}) {
  auto right = oscillatory_half_line(f, omega, 0.0, spec);
  auto mirrored = [&](double y) { return f(-y); };
  auto left = oscillatory_half_line(mirrored, -omega, 0.0, spec);
  QuadratureResult<std::complex<double>> out;
  out.value = right.value + left.value;
  out.error_estimate = right.error_estimate + left.error_estimate;
  out.evaluations = right.evaluations + left.evaluations;
  out.converged = right.converged && left.converged;
  if (!right.converged) out.diagnostic = "x > 0: " + right.diagnostic;
  if (!left.converged)
    out.diagnostic += (out.diagnostic.empty() ? "" : "; ") + std::string("x < 0: ") + left.diagnostic;
  return out;
}

// Bisection for a sign change of f on [lo, hi]; deterministic, runs until the
// bracket is below tol or stops shrinking. Returns the final bracket.
struct Bracket {
  double lo;
  double hi;
  double root() const noexcept { return 0.5 * (lo + hi); }
};

template <class F>
Bracket bisect(F &&f, double lo, double hi, double tol = 1e-14) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return {lo, lo};
  if (fhi == 0.0) return {hi, hi};
  if ((flo > 0.0) == (fhi > 0.0))
    throw DomainError("bisect: no sign change on the bracket");
  for (int it = 0; it < 200 && hi - lo > tol * std::max(1.0, std::abs(lo)); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return {mid, mid};
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

} // namespace paircorr::quad
