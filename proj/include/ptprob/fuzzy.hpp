#pragma once

// Fuzzy connectives parameterized by the correlation between predicates, and
// truth functions of compound labels built from atomic ones.
//
//   mode         AND              OR
//   positive     min(a,b)         max(a,b)          (Zadeh)
//   independent  ab               a+b-ab
//   negative     max(0,a+b-1)     min(1,a+b)
//
// NOT is 1-a in every mode. The mode is always explicit.

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ptprob/distribution.hpp"
#include "ptprob/truth_function.hpp"

namespace ptprob {

enum class CorrelationMode { positive, independent, negative };

const char* mode_name(CorrelationMode m);
// Accepts "pos", "ind", "neg" and the full names.
CorrelationMode parse_mode(std::string_view text);

double fuzzy_and(double a, double b, CorrelationMode mode);
double fuzzy_or(double a, double b, CorrelationMode mode);
double fuzzy_not(double a);

TruthFunction fuzzy_and(const TruthFunction& a, const TruthFunction& b, CorrelationMode mode);
TruthFunction fuzzy_or(const TruthFunction& a, const TruthFunction& b, CorrelationMode mode);
TruthFunction fuzzy_not(const TruthFunction& a);

// Compound-label expression. Grammar, loosest binding first:
//
//   expr   := term { "OR"[":"mode] term }
//   term   := factor { "AND"[":"mode] factor }
//   factor := "NOT" factor | name | "(" expr ")"
//
// Connectives without a suffix use the positive (Zadeh) mode. Names are
// letters, digits, '_' and '-', starting with a letter or '_'.
class Expression {
 public:
  static Expression parse(std::string_view text);

  TruthFunction evaluate(const std::map<std::string, TruthFunction>& atomics) const;
  // Names referenced by the expression, sorted.
  std::vector<std::string> atoms() const;
  // Fully parenthesized rendering with explicit modes.
  std::string str() const;

  struct Node;

 private:
  explicit Expression(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
  std::shared_ptr<const Node> root_;
};

// Named compound labels over atomics u (youth), a (adult), e (elder):
//   child           = NOT (u OR a)                 = 1 - max(u, a)
//   youth_not_adult = u AND:neg NOT a              = max(0, u - a)
//   middle_age      = a AND:neg NOT (u OR e)       = max(0, a - max(u, e))
// Any other label is parsed as an expression.
TruthFunction compound_label_truth(const std::map<std::string, TruthFunction>& atomics, std::string_view label);

// The expression a named compound label stands for, or the label itself.
std::string compound_label_expression(std::string_view label);

struct CompoundProbability {
  double t_and;  // T(A∩B)
  double t_or;   // T(A∪B)
};

CompoundProbability compound_logical_probability(const TruthFunction& a, const TruthFunction& b,
                                                 const Distribution& prior, CorrelationMode mode);

}  // namespace ptprob
