#pragma once

#include <stdexcept>
#include <string>

namespace mssc {

// Malformed input: bad dimensions, invalid matrices, unreadable files.
// Mapped to process exit status 2 by the CLI.
class input_error : public std::invalid_argument {
 public:
  explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// A guard refused to run: enumeration budget exceeded, duplicated data
// where the exact solver requires distinct points, perturbation radius
// incompatible with data separation. Mapped to exit status 3 by the CLI.
class refusal_error : public std::runtime_error {
 public:
  explicit refusal_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mssc
