#pragma once

#include <stdexcept>
#include <string>

namespace gpmc {

// Malformed or out-of-range input: bad vertex ids, unknown descriptors,
// unparsable files, violated preconditions.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A faulty edge touches a faulty vertex.
class ConsistencyError : public std::invalid_argument {
 public:
  explicit ConsistencyError(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace gpmc
