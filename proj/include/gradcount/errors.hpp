#pragma once

#include <stdexcept>

namespace gradcount {

// Error classes mirror the CLI exit-code contract: parse (bad grammar or
// flags), domain (precondition or bound violations), data (malformed or
// inconsistent input files).  Violations of internal counting invariants
// throw std::logic_error directly.

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct data_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace gradcount
