#include "ptprob/fuzzy.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>

#include "ptprob/error.hpp"
#include "ptprob/semantic.hpp"

namespace ptprob {

const char* mode_name(CorrelationMode m) {
  switch (m) {
    case CorrelationMode::positive: return "positive";
    case CorrelationMode::independent: return "independent";
    case CorrelationMode::negative: return "negative";
  }
  return "?";
}

CorrelationMode parse_mode(std::string_view text) {
  if (text == "pos" || text == "positive") return CorrelationMode::positive;
  if (text == "ind" || text == "independent") return CorrelationMode::independent;
  if (text == "neg" || text == "negative") return CorrelationMode::negative;
  throw Error(ErrorKind::expression, "unknown correlation mode '" + std::string(text) + "'");
}

namespace {

void check_unit(double v) {
  if (!(v >= 0.0 && v <= 1.0)) throw Error(ErrorKind::domain, "fuzzy operands must lie in [0,1]");
}

template <typename Op>
TruthFunction pointwise(const TruthFunction& a, const TruthFunction& b, Op op) {
  require_same(a.universe(), b.universe(), "fuzzy connective");
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(a[i], b[i]);
  return TruthFunction::tabulated(a.universe(), std::move(out));
}

}  // namespace

double fuzzy_and(double a, double b, CorrelationMode mode) {
  check_unit(a);
  check_unit(b);
  switch (mode) {
    case CorrelationMode::positive: return std::min(a, b);
    case CorrelationMode::independent: return a * b;
    case CorrelationMode::negative: return std::max(0.0, a + b - 1.0);
  }
  return 0.0;
}

double fuzzy_or(double a, double b, CorrelationMode mode) {
  check_unit(a);
  check_unit(b);
  switch (mode) {
    case CorrelationMode::positive: return std::max(a, b);
    case CorrelationMode::independent: return a + b - a * b;
    case CorrelationMode::negative: return std::min(1.0, a + b);
  }
  return 0.0;
}

double fuzzy_not(double a) {
  check_unit(a);
  return 1.0 - a;
}

TruthFunction fuzzy_and(const TruthFunction& a, const TruthFunction& b, CorrelationMode mode) {
  return pointwise(a, b, [mode](double x, double y) { return fuzzy_and(x, y, mode); });
}

TruthFunction fuzzy_or(const TruthFunction& a, const TruthFunction& b, CorrelationMode mode) {
  return pointwise(a, b, [mode](double x, double y) { return fuzzy_or(x, y, mode); });
}

TruthFunction fuzzy_not(const TruthFunction& a) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = 1.0 - a[i];
  return TruthFunction::tabulated(a.universe(), std::move(out));
}

// ---------------------------------------------------------------------------
// Expressions

struct Expression::Node {
  enum class Kind { atom, op_not, op_and, op_or } kind;
  std::string name;
  CorrelationMode mode = CorrelationMode::positive;
  std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse() {
    NodePtr root = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(text_.substr(pos_, 1)) + "'");
    return root;
  }

 private:
  NodePtr expr() {
    NodePtr lhs = term();
    while (auto mode = connective("OR")) lhs = binary(Expression::Node::Kind::op_or, *mode, lhs, term());
    return lhs;
  }

  NodePtr term() {
    NodePtr lhs = factor();
    while (auto mode = connective("AND")) lhs = binary(Expression::Node::Kind::op_and, *mode, lhs, factor());
    return lhs;
  }

  NodePtr factor() {
    skip_space();
    if (pos_ == text_.size()) fail("expression ends early");
    if (text_[pos_] == '(') {
      ++pos_;
      NodePtr inner = expr();
      skip_space();
      if (pos_ == text_.size() || text_[pos_] != ')') fail("missing ')'");
      ++pos_;
      return inner;
    }
    const std::string word = name();
    if (word == "NOT") {
      auto n = std::make_shared<Expression::Node>();
      n->kind = Expression::Node::Kind::op_not;
      n->lhs = factor();
      return n;
    }
    if (word == "AND" || word == "OR") fail("operand expected before '" + word + "'");
    auto n = std::make_shared<Expression::Node>();
    n->kind = Expression::Node::Kind::atom;
    n->name = word;
    return n;
  }

  // Consumes the keyword (and an optional mode suffix) when it comes next.
  std::optional<CorrelationMode> connective(std::string_view keyword) {
    skip_space();
    const std::size_t save = pos_;
    if (pos_ == text_.size() || !is_name_start(text_[pos_])) return std::nullopt;
    if (name() != keyword) {
      pos_ = save;
      return std::nullopt;
    }
    if (pos_ < text_.size() && text_[pos_] == ':') {
      ++pos_;
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return parse_mode(text_.substr(start, pos_ - start));
    }
    return CorrelationMode::positive;
  }

  std::string name() {
    skip_space();
    if (pos_ == text_.size() || !is_name_start(text_[pos_])) fail("name expected");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  static NodePtr binary(Expression::Node::Kind kind, CorrelationMode mode, NodePtr lhs, NodePtr rhs) {
    auto n = std::make_shared<Expression::Node>();
    n->kind = kind;
    n->mode = mode;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
  }

  static bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::expression, what + " at column " + std::to_string(pos_ + 1));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

TruthFunction eval(const Expression::Node& n, const std::map<std::string, TruthFunction>& atomics) {
  using Kind = Expression::Node::Kind;
  switch (n.kind) {
    case Kind::atom: {
      const auto it = atomics.find(n.name);
      if (it == atomics.end()) throw Error(ErrorKind::expression, "unknown atomic label '" + n.name + "'");
      return it->second;
    }
    case Kind::op_not: return fuzzy_not(eval(*n.lhs, atomics));
    case Kind::op_and: return fuzzy_and(eval(*n.lhs, atomics), eval(*n.rhs, atomics), n.mode);
    case Kind::op_or: return fuzzy_or(eval(*n.lhs, atomics), eval(*n.rhs, atomics), n.mode);
  }
  throw Error(ErrorKind::expression, "malformed expression");
}

void collect(const Expression::Node& n, std::set<std::string>& out) {
  if (n.kind == Expression::Node::Kind::atom) {
    out.insert(n.name);
    return;
  }
  collect(*n.lhs, out);
  if (n.rhs) collect(*n.rhs, out);
}

std::string render(const Expression::Node& n) {
  using Kind = Expression::Node::Kind;
  switch (n.kind) {
    case Kind::atom: return n.name;
    case Kind::op_not: return "NOT " + render(*n.lhs);
    case Kind::op_and:
    case Kind::op_or: {
      const std::string op = n.kind == Kind::op_and ? " AND:" : " OR:";
      return "(" + render(*n.lhs) + op + std::string(mode_name(n.mode)).substr(0, 3) + " " + render(*n.rhs) + ")";
    }
  }
  return "?";
}

}  // namespace

Expression Expression::parse(std::string_view text) { return Expression(Parser(text).parse()); }

TruthFunction Expression::evaluate(const std::map<std::string, TruthFunction>& atomics) const {
  return eval(*root_, atomics);
}

std::vector<std::string> Expression::atoms() const {
  std::set<std::string> names;
  collect(*root_, names);
  return {names.begin(), names.end()};
}

std::string Expression::str() const { return render(*root_); }

std::string compound_label_expression(std::string_view label) {
  if (label == "child") return "NOT (u OR a)";
  if (label == "youth_not_adult") return "u AND:neg NOT a";
  if (label == "middle_age") return "a AND:neg NOT (u OR e)";
  return std::string(label);
}

TruthFunction compound_label_truth(const std::map<std::string, TruthFunction>& atomics, std::string_view label) {
  if (atomics.empty()) throw Error(ErrorKind::expression, "no atomic labels given");
  const Universe& u = atomics.begin()->second.universe();
  for (const auto& [name, t] : atomics) require_same(u, t.universe(), "compound label atomics");
  return Expression::parse(compound_label_expression(label)).evaluate(atomics);
}

CompoundProbability compound_logical_probability(const TruthFunction& a, const TruthFunction& b,
                                                 const Distribution& prior, CorrelationMode mode) {
  return {logical_probability(fuzzy_and(a, b, mode), prior), logical_probability(fuzzy_or(a, b, mode), prior)};
}

}  // namespace ptprob
