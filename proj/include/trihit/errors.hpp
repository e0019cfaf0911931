#pragma once

#include <stdexcept>
#include <string>

namespace trihit {

// Thrown when a configured resource budget is exhausted (oracle size cap,
// decomposition width budget, enumeration caps). The CLI maps this to exit
// code 2; bad inputs and precondition violations throw
// std::invalid_argument instead and map to exit codes >= 3.
struct resource_limit_error : std::runtime_error {
  explicit resource_limit_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace trihit
