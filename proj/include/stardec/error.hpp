#pragma once

#include <stdexcept>
#include <string>

namespace stardec {

// Thrown when a caller violates a documented precondition (malformed graph,
// non-precentral gamma, parameters outside a family's range, ...).
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace stardec
