#pragma once

#include <stdexcept>
#include <string>

namespace qaskey {

// Root of the library's exception hierarchy.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An infinite q-product failed to reach its truncation bound within the
// iteration cap (q too close to 1 for the configured cap).
class non_convergence : public error {
 public:
  using error::error;
};

// A parameter violates an admissibility bound or a structural precondition.
class invalid_params : public error {
 public:
  using error::error;
};

// An index pair (j, k) lies outside the valid range of a chain or degree
// vector.
class index_error : public error {
 public:
  using error::error;
};

// Evaluation requested at a point outside the open domain, or a weight
// sample came out non-positive / non-real.
class domain_error : public error {
 public:
  using error::error;
};

// A denominator factor of a terminating series vanished.
class division_by_zero : public error {
 public:
  using error::error;
};

// A tensor-product grid exceeds the configured node budget.
class budget_exceeded : public error {
 public:
  using error::error;
};

}  // namespace qaskey
