#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mde {

enum class ErrorKind {
  Shape,            // dimensions of inputs disagree
  Rank,             // design or Gram matrix numerically rank deficient
  Order,            // autoregressive order incompatible with series length
  InvalidVariant,   // operation not defined for the given measure variant
  DegenerateSeries, // lag Gram matrix singular (e.g. an all-zero series)
  InvalidArgument,
  Campaign,         // Monte Carlo campaign produced no usable replications
};

std::string_view to_string(ErrorKind kind);

/// Single exception type thrown by the library; callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mde
