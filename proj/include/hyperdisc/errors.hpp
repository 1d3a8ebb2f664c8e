#pragma once

#include <stdexcept>
#include <string>

namespace hyperdisc {

// Malformed caller input: bad vertex lists, mismatched shapes, unparsable
// files.  Maps to CLI exit code 2.
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Structurally valid request whose cost exceeds a hard resource guard.
// Maps to CLI exit code 3.
class capacity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hyperdisc
