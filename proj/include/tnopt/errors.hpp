#pragma once

#include <stdexcept>
#include <string>

namespace tnopt {

/// Malformed structure: unknown labels, duplicate labels, bad topology.
struct structure_error : std::runtime_error {
  explicit structure_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Shape/extent mismatch between objects that must agree.
struct dimension_error : std::runtime_error {
  explicit dimension_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid node selection (e.g. copy set containing the output node).
struct selection_error : std::runtime_error {
  explicit selection_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Unparseable or truncated file.
struct format_error : std::runtime_error {
  explicit format_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Non-finite value produced by a numeric operation.
struct numeric_error : std::runtime_error {
  explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Training produced non-finite or collapsed outputs.
struct divergence_error : std::runtime_error {
  explicit divergence_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace tnopt
