#pragma once
#include <stdexcept>
#include <string>

namespace walg {

// mismatched N / order, wrong tensor rank
struct StructuralError : std::logic_error {
  using std::logic_error::logic_error;
};

// bad user input: indices, heights, schema
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// engine invariant broken (non-divisible commutator, runaway reduction, failed gate)
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace walg
