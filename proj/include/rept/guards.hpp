#pragma once

#include <stdexcept>

namespace rept {

// Parse/usage problems: CLI exit code 2.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured resource guard tripped: CLI exit code 3.
struct guard_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed: CLI exit code 4.
struct verify_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Conservative defaults; all overridable from the CLI.
struct Guards {
  int max_ambient_width = 20;              // widest diagram allowed during evaluation
  int max_n = 5;                           // largest symmetric group S_n
  long long max_states = 10'000'000;       // tuple-enumeration budget (n!^p)
  long long max_matrix_size = 1'000'000;   // n^width bound for explicit matrices
};

}  // namespace rept
