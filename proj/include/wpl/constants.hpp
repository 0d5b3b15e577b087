#pragma once

namespace wpl {

// Atomic units: hbar = m_e = e = 1. The speed of light is the one remaining
// run constant; overridable for order-scaling experiments.
struct Constants {
  double c = 137.035999084;

  double c2() const { return c * c; }
  double c3() const { return c * c * c; }
};

// 800 nm carrier, the validity example wavelength.
inline constexpr double kDefaultOmega = 0.056954;

}  // namespace wpl
