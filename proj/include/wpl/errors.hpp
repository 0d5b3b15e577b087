#pragma once

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace wpl {

// Hard violation of the |kz| <= 0.5 expansion domain.
struct validity_domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct quadrature_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct step_size_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct axial_symmetry_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct scaling_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace diag {

// Counts warning-level validity events (|kz| in (0.1, 0.5], |p|/c in (0.1, 0.3)).
// Atomic so concurrent grid evaluation stays safe; callers report the tally once.
std::uint64_t validity_warnings() noexcept;
void reset_validity_warnings() noexcept;
void count_validity_warning() noexcept;

}  // namespace diag
}  // namespace wpl
