#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "supermult/exactlin.hpp"
#include "supermult/superdim.hpp"
#include "supermult/witt.hpp"

namespace supermult::freelie {

struct Generator {
  std::string name;
  int parity = 0;  // 0 even, 1 odd
};

/// Totally ordered Z2-graded generating set. Position order is the total
/// order; constructors produce the canonical even-first listing, but any
/// parity interleaving is accepted (presentations keep their basis order).
class GradedAlphabet {
 public:
  GradedAlphabet() = default;
  explicit GradedAlphabet(std::vector<Generator> gens);
  static GradedAlphabet canonical(int even, int odd);  // x1..xm, y1..yn

  int size() const { return static_cast<int>(gens_.size()); }
  const Generator& gen(int i) const { return gens_[static_cast<std::size_t>(i)]; }
  int parity(int i) const { return gens_[static_cast<std::size_t>(i)].parity; }
  const std::vector<Generator>& generators() const { return gens_; }
  std::vector<int> parities() const;
  witt::ParitySignature signature() const;  // counts only
  int index_of(const std::string& name) const;  // -1 if absent

 private:
  std::vector<Generator> gens_;
};

/// Non-associative monomial: a bracketing tree over generator indices, with
/// its associative word (the bracket-removing image) cached at every node.
class LieMonomial {
 public:
  static LieMonomial leaf(int gen);
  static LieMonomial node(const LieMonomial& left, const LieMonomial& right);

  bool is_leaf() const;
  int generator() const;  // leaves only
  LieMonomial left() const;
  LieMonomial right() const;

  const std::vector<std::uint8_t>& word() const;
  int length() const { return static_cast<int>(word().size()); }
  int parity(const GradedAlphabet& alphabet) const;
  witt::MultiDegree multidegree(int alphabet_size) const;
  std::string str(const GradedAlphabet& alphabet) const;  // "((y1)(x1))" style

 private:
  struct Node;
  explicit LieMonomial(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Associative words are compared in the standard lexicographic order where a
/// proper prefix is LESS than its extensions. The alternate prefix-greater
/// convention also reproduces the Witt counts on every alphabet we check (both
/// recursions generate Hall families); the count check in the test suite is
/// the arbiter and pins this choice down as a regression.
bool word_less(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

/// Regular monomials of the given length, deterministically ordered:
/// u = (u1)(u2) with u1, u2 regular, word(u1) > word(u2), and when
/// u1 = (v)(w) additionally word(w) <= word(u2).
std::vector<LieMonomial> enumerate_regular(const GradedAlphabet& alphabet, int length);

/// Regular monomials plus the squares (v)(v) of odd regular monomials v of
/// half the length. Their images form a basis of the free Lie superalgebra.
std::vector<LieMonomial> enumerate_s_regular(const GradedAlphabet& alphabet, int length);

/// Sparse rational combination of associative words, keyed by encoded words.
using SuperPolynomial = SparseVector;

/// The free associative superalgebra on an alphabet, truncated at word degree
/// N: the computational home of the free Lie superalgebra F, its lower central
/// series F^k, relator ideals R and the series γ_k(R,F), all modulo words of
/// length > N. Immutable after construction.
class TruncatedFrame {
 public:
  static constexpr std::size_t kDefaultWordCap = 2'000'000;

  TruncatedFrame(GradedAlphabet alphabet, int degree, std::size_t word_cap = kDefaultWordCap);

  const GradedAlphabet& alphabet() const { return alphabet_; }
  int degree() const { return degree_; }
  UniverseId universe() const { return universe_; }
  std::size_t universe_size() const { return universe_size_; }
  /// Preflight estimate (saturates at SIZE_MAX on overflow).
  static std::size_t universe_size_for(int alphabet_size, int degree);

  Key encode(std::span<const std::uint8_t> word) const;
  std::vector<std::uint8_t> decode(Key key) const;
  int word_length(Key key) const;
  int word_parity(Key key) const;

  SuperPolynomial generator_poly(int i) const;
  /// Concatenation product, dropping words longer than the truncation degree.
  SuperPolynomial product(const SuperPolynomial& a, const SuperPolynomial& b) const;
  /// ab - (-1)^{|a||b|} ba for parity-homogeneous arguments.
  SuperPolynomial supercommutator(const SuperPolynomial& a, const SuperPolynomial& b) const;
  SuperPolynomial to_associative(const LieMonomial& m) const;
  /// Parity if homogeneous (zero polynomial reports even); nullopt if mixed.
  std::optional<int> parity_of(const SuperPolynomial& p) const;

  /// Degree-d component L_d of the free Lie superalgebra, 1 <= d <= N.
  const Subspace& layer(int d) const;
  SuperDim layer_dims(int d) const;
  /// F^k modulo degree > N, for 1 <= k <= N+1 (F^{N+1} is zero here).
  Subspace lower_central(int k) const;

  /// Parity-split dimensions of a subspace with parity-homogeneous rows.
  SuperDim graded_dims_of(const Subspace& s) const;

 private:
  GradedAlphabet alphabet_;
  int degree_;
  UniverseId universe_;
  std::size_t universe_size_ = 0;
  std::vector<std::uint64_t> offsets_;  // offsets_[d] = first key of length d
  std::vector<Subspace> layers_;
};

/// Smallest subspace containing the seeds and closed under bracketing with the
/// generators (which is closure under bracketing with all of F, since F is
/// generated in degree 1), modulo words of length > N.
Subspace ideal_closure(std::span<const SuperPolynomial> seeds, const TruncatedFrame& frame);

/// γ_k(R,F): γ_1 = R, γ_{j+1} = [γ_j, F]. R must be an ideal subspace (e.g.
/// produced by ideal_closure); then one bracket pass with the generators per
/// step is exact.
Subspace gamma_series(const Subspace& relator_ideal, const TruncatedFrame& frame, int k);

}  // namespace supermult::freelie
