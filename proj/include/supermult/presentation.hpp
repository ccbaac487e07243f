#pragma once

#include <memory>
#include <string>
#include <vector>

#include "supermult/exactlin.hpp"
#include "supermult/freelie.hpp"

namespace supermult::presentation {

/// Relator expression tree: generator | bracket(e1,e2) | scalar*e | sum(e..).
/// Parities must be consistent under bracketing; sums require equal parities.
class BracketExpr {
 public:
  enum class Kind { Generator, Bracket, Scale, Sum };

  static BracketExpr generator(int index);
  static BracketExpr bracket(BracketExpr left, BracketExpr right);
  static BracketExpr scale(Scalar factor, BracketExpr inner);
  static BracketExpr sum(std::vector<BracketExpr> parts);

  Kind kind() const { return kind_; }
  int generator_index() const { return gen_; }
  const Scalar& factor() const { return factor_; }
  const BracketExpr& left() const { return *children_[0]; }
  const BracketExpr& right() const { return *children_[1]; }
  const BracketExpr& inner() const { return *children_[0]; }
  const std::vector<std::shared_ptr<const BracketExpr>>& parts() const { return children_; }

 private:
  Kind kind_ = Kind::Generator;
  int gen_ = 0;
  Scalar factor_ = Scalar(1);
  std::vector<std::shared_ptr<const BracketExpr>> children_;
};

/// Free presentation data: one free generator per listed generator, relators
/// in the free Lie superalgebra, and a nilpotency class bound for the
/// presented algebra.
struct Presentation {
  freelie::GradedAlphabet alphabet;
  std::vector<BracketExpr> relators;
  int class_bound = 1;
};

/// Structural parity of an expression; ParseError when sums mix parities.
int expr_parity(const BracketExpr& expr, const freelie::GradedAlphabet& alphabet);

/// Evaluates a relator inside the truncated free associative superalgebra.
freelie::SuperPolynomial eval(const BracketExpr& expr, const freelie::TruncatedFrame& frame);

/// JSON schema:
///   {"generators": [{"name": "x1", "parity": 0}, ...],
///    "relators":   [expr, ...],
///    "class":      2}
/// with expr one of {"gen": name} | {"bracket": [e, e]} |
/// {"scale": ["p/q", e]} | {"sum": [e, ...]}.
Presentation presentation_from_json_text(const std::string& text);
std::string presentation_to_json_text(const Presentation& p);
Presentation load_presentation_file(const std::string& path);

}  // namespace supermult::presentation
