#pragma once

#include <stdexcept>
#include <string>

namespace ctc {

/// Malformed or contract-violating input (bad permutation, H not a subgroup, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured desk-scale ceiling was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed object failed validation; results must not be used.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Limits {
  std::size_t max_order = 5000;
  std::size_t max_subgroup_classes = 10000;
};

}  // namespace ctc
