#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ptprob {

enum class ErrorKind {
  dimension,           // misaligned universes or shapes
  normalization,       // mass does not sum to 1
  domain,              // value outside its admissible range
  unreachable_label,   // Σ P(y|x)P(x) = 0
  conditioning,        // conditioning on an impossible event
  empty_fuzzy_set,     // zero logical probability under the prior
  support,             // mass on a zero-prior point
  parameter,           // bad parametric form parameter
  argument,            // bad call argument
  unused_label,        // all-zero channel row
  unclassifiable,      // every score is -inf
  form,                // wrong truth-function form for the operation
  iteration_limit,     // fixed-point iteration did not converge
  count,               // empty contingency row
  undefined_measure,   // 0/0 confirmation measure
  inconsistent_input,  // e.g. P(pq) > P(p)
  expression,          // compound-label expression problem
  parse,               // file or schema problem
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Error(ErrorKind kind, const std::string& what, double residual)
      : std::runtime_error(what), kind_(kind), residual_(residual) {}

  ErrorKind kind() const noexcept { return kind_; }
  // Set for iteration_limit errors.
  std::optional<double> residual() const noexcept { return residual_; }

 private:
  ErrorKind kind_;
  std::optional<double> residual_;
};

}  // namespace ptprob
