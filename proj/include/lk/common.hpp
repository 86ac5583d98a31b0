#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace lk {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Endpoint { Zero, Infinity };

// Shortest round-trip decimal; "inf" for +infinity.
std::string format_number(double x);

inline const char* to_string(Endpoint e) { return e == Endpoint::Zero ? "Zero" : "Infinity"; }

// Thrown when caller-supplied data breaks an operation's contract.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class UnsupportedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace lk
