#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace hysir {

// Threshold pair of a non-ideal relay. Admissible pairs live in the half-plane
// triangle Pi = {0 <= alpha1 < alpha2 <= 1}.
struct Thresholds {
  double alpha1 = 0.0;
  double alpha2 = 1.0;

  bool valid() const {
    return std::isfinite(alpha1) && std::isfinite(alpha2) && alpha1 >= 0.0 &&
           alpha1 < alpha2 && alpha2 <= 1.0;
  }
};

inline void validate_thresholds(const Thresholds& th) {
  if (!th.valid())
    throw std::invalid_argument("thresholds must satisfy 0 <= alpha1 < alpha2 <= 1");
}

// Non-ideal relay transition for one monotone move of the input. Ties follow
// the closed-threshold convention: input == alpha2 switches ON, == alpha1 OFF.
inline bool relay_step(const Thresholds& th, bool on, double input) {
  if (input >= th.alpha2) return true;
  if (input <= th.alpha1) return false;
  return on;
}

// State compatibility with the current input value.
inline bool relay_compatible(const Thresholds& th, bool on, double input) {
  if (input >= th.alpha2) return on;
  if (input <= th.alpha1) return !on;
  return true;
}

struct Relay {
  Thresholds th;
  double weight = 0.0;
  bool on = false;
};

// Finite weighted superposition of non-ideal relays sharing one input.
class RelayBank {
 public:
  std::vector<Relay> relays;

  void validate() const {
    for (const auto& r : relays) {
      validate_thresholds(r.th);
      if (!(r.weight >= 0.0)) throw std::invalid_argument("relay weight must be >= 0");
    }
  }

  bool compatible_with(double input) const {
    for (const auto& r : relays)
      if (!relay_compatible(r.th, r.on, input)) return false;
    return true;
  }

  // One monotone move of the common input.
  void step(double input) {
    for (auto& r : relays) r.on = relay_step(r.th, r.on, input);
  }

  void set_all(bool on) {
    for (auto& r : relays) r.on = on;
  }

  double output(double v_nat) const {
    double s = v_nat;
    for (const auto& r : relays)
      if (r.on) s += r.weight;
    return s;
  }

  double total_weight() const {
    double s = 0.0;
    for (const auto& r : relays) s += r.weight;
    return s;
  }
};

}  // namespace hysir
