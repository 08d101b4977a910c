#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

namespace circuitsplit {

// Raised for invalid inputs and violated preconditions. `detail` carries a
// machine-readable witness (offending quadruple, crossing pair, ...) when one
// exists; the CLI prints it verbatim.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what, nlohmann::json detail = nullptr)
      : std::runtime_error(what), detail_(std::move(detail)) {}

  const nlohmann::json& detail() const { return detail_; }

 private:
  nlohmann::json detail_;
};

// Input too large for exhaustive enumeration under the default limits.
class SizeGuardError : public DomainError {
 public:
  using DomainError::DomainError;
};

struct Limits {
  bool unsafe = false;
  std::size_t max_grove_edges = 16;
  int max_ptolemy_n = 9;
  int max_cells_n = 6;
  int max_order_search_n = 9;
};

}  // namespace circuitsplit
