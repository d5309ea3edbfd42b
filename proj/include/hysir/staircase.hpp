#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hysir/relay.hpp"

namespace hysir {

enum class Trend { rising, falling, flat };

inline const char* to_string(Trend t) {
  switch (t) {
    case Trend::rising: return "rising";
    case Trend::falling: return "falling";
    case Trend::flat: return "flat";
  }
  return "flat";
}

// Reduced memory of the continuous Preisach operator: the alternating sequence
// of dominant input extrema M1 > M2 > ..., m1 < m2 < ... (interleaved in time
// as M1, m1, M2, m2, ...), plus the running excursion (current, trend).
//
// The induced relay field: relay (a1, a2) is ON iff k_on > k_off, where
// k_on = max{j : M_j >= a2} and k_off = max{j : m_j <= a1} (0 if none), with
// the running excursion counted as the most recent extremum. The ON region
// decomposes into axis-aligned bands plus a triangle at the diagonal corner.
class MemoryStaircase {
 public:
  // Movement at or below this scale neither moves the state nor flips trend;
  // guards against round-off chatter minting spurious extrema.
  static constexpr double kTrendTol = 1e-14;
  // A committed excursion pair (M, m) with M - m at or below this scale is
  // dropped, and two nested pairs closer than this in both coordinates are
  // merged. Keeps the memory depth bounded along damped oscillations; the
  // induced output error is bounded by K times the discarded envelope.
  static constexpr double kCompactTol = 1e-11;

  MemoryStaircase() = default;

  static MemoryStaircase virgin(double I0) {
    if (!(I0 >= 0.0 && I0 <= 1.0))
      throw std::invalid_argument("virgin staircase: I0 must lie in [0,1]");
    MemoryStaircase m;
    m.current_ = I0;
    return m;
  }

  static MemoryStaircase explicit_state(std::vector<double> maxima,
                                        std::vector<double> minima,
                                        double current, Trend trend) {
    MemoryStaircase m;
    m.maxima_ = std::move(maxima);
    m.minima_ = std::move(minima);
    m.current_ = current;
    m.trend_ = trend;
    m.validate();
    return m;
  }

  const std::vector<double>& maxima() const { return maxima_; }
  const std::vector<double>& minima() const { return minima_; }
  double current() const { return current_; }
  Trend trend() const { return trend_; }
  std::size_t depth() const { return maxima_.size(); }

  bool operator==(const MemoryStaircase&) const = default;

  void validate() const {
    auto fail = [](const std::string& what) { throw std::invalid_argument("staircase: " + what); };
    const std::size_t nM = maxima_.size(), nm = minima_.size();
    if (!(current_ >= 0.0 && current_ <= 1.0)) fail("current outside [0,1]");
    for (double v : maxima_)
      if (!(v >= 0.0 && v <= 1.0)) fail("maximum outside [0,1]");
    for (double v : minima_)
      if (!(v >= 0.0 && v <= 1.0)) fail("minimum outside [0,1]");
    for (std::size_t k = 0; k + 1 < nM; ++k)
      if (!(maxima_[k] > maxima_[k + 1])) fail("maxima not strictly decreasing");
    for (std::size_t k = 0; k + 1 < nm; ++k)
      if (!(minima_[k] < minima_[k + 1])) fail("minima not strictly increasing");
    for (std::size_t k = 0; k < nm; ++k) {
      if (k < nM && !(minima_[k] < maxima_[k])) fail("m_k must lie below M_k");
      if (k + 1 < nM && !(minima_[k] < maxima_[k + 1])) fail("m_k must lie below M_{k+1}");
    }
    switch (trend_) {
      case Trend::flat:
        if (nM != 0 || nm != 0) fail("flat trend requires an empty history");
        break;
      case Trend::rising:
        if (nM != nm) fail("rising trend requires equally many maxima and minima");
        if (!maxima_.empty() && !(current_ < maxima_.back())) fail("current exceeds last maximum");
        if (!minima_.empty() && !(current_ > minima_.back())) fail("current below last minimum");
        break;
      case Trend::falling:
        if (nM != nm + 1) fail("falling trend requires one unpaired maximum");
        if (maxima_.empty()) {
          // falling from a blank history is allowed (nothing recorded)
        } else if (!(current_ < maxima_.back())) {
          fail("current exceeds last maximum");
        }
        if (!minima_.empty() && !(current_ > minima_.back())) fail("current below last minimum");
        break;
    }
  }

  // One monotone move of the input. Rising past previous maxima wipes them
  // (with their paired minima); falling past previous minima wipes them (with
  // the maxima that followed them).
  void update(double I_new) {
    if (!(I_new >= 0.0 && I_new <= 1.0))
      throw std::invalid_argument("staircase update: input outside [0,1]");
    if (std::abs(I_new - current_) <= kTrendTol) return;
    if (I_new > current_) {
      if (trend_ == Trend::falling && !maxima_.empty()) {
        minima_.push_back(current_);
        compact_tail();
      }
      while (!maxima_.empty() && maxima_.back() <= I_new) {
        maxima_.pop_back();
        if (minima_.size() > maxima_.size()) minima_.pop_back();
      }
      trend_ = Trend::rising;
    } else {
      if (trend_ == Trend::rising) {
        maxima_.push_back(current_);
        compact_tail();
      }
      while (!minima_.empty() && minima_.back() >= I_new) {
        minima_.pop_back();
        maxima_.pop_back();
      }
      trend_ = Trend::falling;
    }
    current_ = I_new;
  }

  // Induced state of the relay with thresholds th.
  bool relay_on(const Thresholds& th) const {
    // count of effective maxima >= alpha2 (maxima are strictly decreasing)
    std::size_t k_on =
        static_cast<std::size_t>(std::lower_bound(maxima_.begin(), maxima_.end(),
                                                  th.alpha2, std::greater<double>()) -
                                 maxima_.begin());
    if (trend_ == Trend::rising && k_on == maxima_.size() && current_ >= th.alpha2)
      ++k_on;
    // count of effective minima <= alpha1 (minima are strictly increasing)
    std::size_t k_off =
        static_cast<std::size_t>(std::upper_bound(minima_.begin(), minima_.end(),
                                                  th.alpha1) -
                                 minima_.begin());
    if (trend_ == Trend::falling && k_off == minima_.size() && current_ <= th.alpha1)
      ++k_off;
    return k_on > k_off;
  }

  // ON region as bands {alpha1 in [0, a1_hi), alpha2 in (a2_lo, a2_hi]} plus
  // the triangle {alpha1 < alpha2 <= triangle_top}. Bands lie inside Pi.
  struct Band {
    double a1_hi, a2_lo, a2_hi;
  };
  struct OnRegion {
    std::vector<Band> bands;
    double triangle_top = 0.0;
  };

  OnRegion on_region() const {
    OnRegion out;
    if (trend_ == Trend::flat) return out;
    const std::size_t nM = maxima_.size();
    out.bands.reserve(nM);
    if (trend_ == Trend::rising) {
      // effective maxima: maxima_ + current; effective minima: minima_
      for (std::size_t k = 0; k < nM; ++k) {
        const double next_max = (k + 1 < nM) ? maxima_[k + 1] : current_;
        out.bands.push_back({minima_[k], next_max, maxima_[k]});
      }
      out.triangle_top = current_;
    } else {
      // effective maxima: maxima_; effective minima: minima_ + current
      for (std::size_t k = 0; k < nM; ++k) {
        const double m_k = (k < minima_.size()) ? minima_[k] : current_;
        const double next_max = (k + 1 < nM) ? maxima_[k + 1] : current_;
        out.bands.push_back({m_k, next_max, maxima_[k]});
      }
      out.triangle_top = current_;
    }
    return out;
  }

 private:
  void compact_tail() {
    // Drop a degenerate just-closed pair.
    while (maxima_.size() == minima_.size() && !maxima_.empty() &&
           maxima_.back() - minima_.back() <= kCompactTol) {
      maxima_.pop_back();
      minima_.pop_back();
    }
    // Merge the two most recent nested pairs when they nearly coincide.
    while (maxima_.size() == minima_.size() && maxima_.size() >= 2 &&
           maxima_[maxima_.size() - 2] - maxima_.back() <= kCompactTol &&
           minima_.back() - minima_[minima_.size() - 2] <= kCompactTol) {
      maxima_.pop_back();
      minima_.pop_back();
    }
  }

  std::vector<double> maxima_;
  std::vector<double> minima_;
  double current_ = 0.0;
  Trend trend_ = Trend::flat;
};

// Staircase initialization per the operator contract: virgin (all relays OFF)
// or an explicit, validated staircase.
inline MemoryStaircase staircase_init(double I0) { return MemoryStaircase::virgin(I0); }

inline MemoryStaircase staircase_init(std::vector<double> maxima,
                                      std::vector<double> minima, double current,
                                      Trend trend) {
  return MemoryStaircase::explicit_state(std::move(maxima), std::move(minima),
                                         current, trend);
}

}  // namespace hysir
