#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hysir {

namespace detail {

// Gauss-Kronrod 7-15 pair on [-1,1]. Kronrod nodes (ascending |x| order would be
// unusual; these are the standard positive-half nodes, index 7 is the origin).
inline constexpr double kGK15Nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kGK15WeightsK[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

// Embedded 7-point Gauss weights, attached to Kronrod nodes 1, 3, 5, 7.
inline constexpr double kGK15WeightsG[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

}  // namespace detail

// One Gauss-Kronrod 7-15 panel. Returns the Kronrod estimate and an error
// estimate from the Gauss/Kronrod difference (Piessens' scaling).
template <class F>
inline std::pair<double, double> gk15_panel(F&& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double result_k = detail::kGK15WeightsK[7] * fc;
  double result_g = detail::kGK15WeightsG[3] * fc;
  double result_abs = std::abs(result_k);
  for (int i = 0; i < 7; ++i) {
    const double x = h * detail::kGK15Nodes[i];
    const double f1 = f(c - x);
    const double f2 = f(c + x);
    result_k += detail::kGK15WeightsK[i] * (f1 + f2);
    if (i % 2 == 1) result_g += detail::kGK15WeightsG[i / 2] * (f1 + f2);
    result_abs += detail::kGK15WeightsK[i] * (std::abs(f1) + std::abs(f2));
  }
  const double value = result_k * h;
  double err = std::abs((result_k - result_g) * h);
  // Sharpened estimate as in QUADPACK: scale by (200*err/resabs)^1.5.
  const double resabs = result_abs * std::abs(h);
  if (resabs > 0.0 && err > 0.0) {
    const double scale = std::pow(200.0 * err / resabs, 1.5);
    if (scale < 1.0) err = resabs * scale;
  }
  return {value, err};
}

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  bool converged = true;
};

// Globally adaptive Gauss-Kronrod integration on [a, b]. `breakpoints` seeds the
// initial partition (values outside (a,b) are ignored); useful when the
// integrand has known narrow features the first panels would otherwise miss.
template <class F>
inline QuadResult integrate_adaptive(F&& f, double a, double b,
                                     double rel_tol = 1e-10,
                                     double abs_tol = 0.0,
                                     std::vector<double> breakpoints = {},
                                     int max_panels = 4000) {
  if (!(a <= b)) throw std::domain_error("integrate_adaptive: a > b");
  if (a == b) return {0.0, 0.0, true};

  struct Panel {
    double a, b, value, error;
  };
  std::vector<Panel> panels;
  breakpoints.push_back(a);
  breakpoints.push_back(b);
  std::sort(breakpoints.begin(), breakpoints.end());
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    const double lo = std::max(a, breakpoints[i]);
    const double hi = std::min(b, breakpoints[i + 1]);
    if (hi - lo <= 0.0) continue;
    auto [v, e] = gk15_panel(f, lo, hi);
    panels.push_back({lo, hi, v, e});
  }

  auto totals = [&panels]() {
    double v = 0.0, e = 0.0;
    for (const auto& p : panels) {
      v += p.value;
      e += p.error;
    }
    return std::pair{v, e};
  };

  while (static_cast<int>(panels.size()) < max_panels) {
    auto [total, err] = totals();
    const double tol = std::max(abs_tol, rel_tol * std::abs(total));
    if (err <= tol) return {total, err, true};
    std::size_t worst = 0;
    for (std::size_t i = 1; i < panels.size(); ++i)
      if (panels[i].error > panels[worst].error) worst = i;
    Panel p = panels[worst];
    const double mid = 0.5 * (p.a + p.b);
    if (mid <= p.a || mid >= p.b) break;  // interval exhausted in doubles
    auto [v1, e1] = gk15_panel(f, p.a, mid);
    auto [v2, e2] = gk15_panel(f, mid, p.b);
    panels[worst] = {p.a, mid, v1, e1};
    panels.push_back({mid, p.b, v2, e2});
  }
  auto [total, err] = totals();
  return {total, err, err <= std::max(abs_tol, rel_tol * std::abs(total))};
}

struct MaxResult {
  double x = 0.0;
  double value = -std::numeric_limits<double>::infinity();
};

// Golden-section search for the maximum of f on [a, b]; assumes f is unimodal
// on the bracket. `x_tol` is an absolute tolerance on the argument.
template <class F>
inline MaxResult golden_max(F&& f, double a, double b, double x_tol = 1e-10) {
  constexpr double invphi = 0.6180339887498948482;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > x_tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    }
  }
  const double xm = 0.5 * (a + b);
  const double fm = f(xm);
  MaxResult r{xm, fm};
  if (f1 > r.value) r = {x1, f1};
  if (f2 > r.value) r = {x2, f2};
  return r;
}

// Scan a grid of n+1 points, then refine around the best one with golden
// section. Robust for functions that are smooth but not globally unimodal.
template <class F>
inline MaxResult grid_then_golden_max(F&& f, double a, double b, int n,
                                      double x_tol = 1e-12) {
  if (n < 2) n = 2;
  MaxResult best;
  int best_i = 0;
  for (int i = 0; i <= n; ++i) {
    const double x = a + (b - a) * static_cast<double>(i) / n;
    const double v = f(x);
    if (v > best.value) {
      best = {x, v};
      best_i = i;
    }
  }
  const double lo = a + (b - a) * static_cast<double>(std::max(0, best_i - 1)) / n;
  const double hi = a + (b - a) * static_cast<double>(std::min(n, best_i + 1)) / n;
  MaxResult refined = golden_max(f, lo, hi, x_tol);
  return refined.value > best.value ? refined : best;
}

// Cumulative integral of a fixed smooth function on [0,1], precomputed on a
// panel grid. eval(x) = \int_0^x f. Panels must resolve the integrand; callers
// supply feature-aware edges.
class CumulativeTable {
 public:
  CumulativeTable(std::function<double(double)> f, std::vector<double> edges)
      : f_(std::move(f)), edges_(std::move(edges)) {
    if (edges_.size() < 2) throw std::invalid_argument("CumulativeTable: need >= 2 edges");
    prefix_.resize(edges_.size(), 0.0);
    for (std::size_t i = 0; i + 1 < edges_.size(); ++i)
      prefix_[i + 1] = prefix_[i] + gk15_panel(f_, edges_[i], edges_[i + 1]).first;
  }

  double eval(double x) const {
    if (x <= edges_.front()) return 0.0;
    if (x >= edges_.back()) return prefix_.back();
    const auto it = std::upper_bound(edges_.begin(), edges_.end(), x);
    const std::size_t i = static_cast<std::size_t>(it - edges_.begin()) - 1;
    return prefix_[i] + gk15_panel(f_, edges_[i], x).first;
  }

  double total() const { return prefix_.back(); }

 private:
  std::function<double(double)> f_;
  std::vector<double> edges_;
  std::vector<double> prefix_;
};

// Merged, deduplicated edge grid on [lo, hi]: a uniform base plus refined
// windows around the given feature centers.
inline std::vector<double> feature_grid(double lo, double hi, int base_n,
                                        const std::vector<double>& centers,
                                        double half_width, int window_n) {
  std::vector<double> edges;
  edges.reserve(static_cast<std::size_t>(base_n) + centers.size() * window_n + 4);
  for (int i = 0; i <= base_n; ++i)
    edges.push_back(lo + (hi - lo) * static_cast<double>(i) / base_n);
  for (double c : centers) {
    const double wlo = std::max(lo, c - half_width);
    const double whi = std::min(hi, c + half_width);
    if (whi <= wlo) continue;
    for (int i = 0; i <= window_n; ++i)
      edges.push_back(wlo + (whi - wlo) * static_cast<double>(i) / window_n);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

}  // namespace hysir
