#pragma once

#include <stdexcept>
#include <string>

namespace pinloop {

// Domain error carrying a stable machine-readable kind
// ("MalformedPermutation", "NotFourRegular", "BudgetExceeded", ...).
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

}  // namespace pinloop
