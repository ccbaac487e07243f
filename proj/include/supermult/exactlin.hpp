#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "supermult/errors.hpp"

namespace supermult {

/// Exact arbitrary-precision integer / rational scalars. mpq_class keeps values
/// in lowest terms with positive denominator, which is exactly the Scalar contract.
using Int = mpz_class;
using Scalar = mpq_class;

/// Basis keys are opaque totally ordered tokens. Word universes encode words into
/// keys, structure-constant algebras use basis indices.
using Key = std::uint64_t;

/// Identifies the key universe a vector lives in. 0 is the anonymous shared
/// universe; frames and algebras allocate fresh ids so that vectors from
/// different ambient spaces cannot be mixed silently.
using UniverseId = std::uint32_t;

UniverseId fresh_universe();

/// Sparse vector: strictly sorted (key, coefficient) terms, no zeros stored.
class SparseVector {
 public:
  SparseVector() = default;
  explicit SparseVector(UniverseId universe) : universe_(universe) {}

  static SparseVector unit(Key key, UniverseId universe = 0);
  /// Builds from possibly unsorted/duplicated terms; combines and drops zeros.
  static SparseVector from_terms(std::vector<std::pair<Key, Scalar>> terms,
                                 UniverseId universe = 0);

  UniverseId universe() const { return universe_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<std::pair<Key, Scalar>>& terms() const { return terms_; }

  Scalar coeff(Key key) const;

  /// Leading term = smallest key. Caller must ensure the vector is nonzero.
  Key leading_key() const { return terms_.front().first; }
  const Scalar& leading_coeff() const { return terms_.front().second; }

  /// this += c * v. Universes must match (anonymous 0 matches anything unset).
  SparseVector& axpy(const Scalar& c, const SparseVector& v);
  SparseVector& operator*=(const Scalar& c);
  SparseVector operator+(const SparseVector& v) const;
  SparseVector operator-(const SparseVector& v) const;
  SparseVector scaled(const Scalar& c) const;

  bool operator==(const SparseVector& o) const {
    return universe_ == o.universe_ && terms_ == o.terms_;
  }

  std::string str() const;

 private:
  friend class EchelonBuilder;
  UniverseId universe_ = 0;
  std::vector<std::pair<Key, Scalar>> terms_;
};

/// Incremental forward-reduced echelon: rows keyed by pivot (leading key),
/// pivot coefficients normalized to 1. Rows are reduced against earlier pivots
/// only; finalize() back-substitutes to the canonical reduced form.
class EchelonBuilder {
 public:
  EchelonBuilder() = default;
  explicit EchelonBuilder(UniverseId universe) : universe_(universe), universe_set_(true) {}

  /// Remainder of v after eliminating every pivot key currently present.
  SparseVector reduce(SparseVector v) const;

  /// Inserts reduce(v); returns the stored normalized row if the dimension grew,
  /// nullptr if v was already in the span.
  const SparseVector* insert(SparseVector v);

  int dim() const { return static_cast<int>(rows_.size()); }
  UniverseId universe() const { return universe_; }
  const std::map<Key, SparseVector>& rows() const { return rows_; }

  /// Canonical reduced echelon subspace. Consumes the builder.
  class Subspace finalize() &&;

 private:
  void adopt_universe(const SparseVector& v);
  UniverseId universe_ = 0;
  bool universe_set_ = false;
  std::map<Key, SparseVector> rows_;
};

/// Immutable subspace in canonical reduced echelon form: rows sorted by pivot
/// key, pivot coefficient 1, and no row contains any other row's pivot. The
/// canonical form is unique, so representation equality is subspace equality
/// and the result is independent of the order the spanning set was given in.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(UniverseId universe) : universe_(universe) {}

  static Subspace span(std::span<const SparseVector> vectors);
  static Subspace span(std::span<const SparseVector> vectors, UniverseId universe);

  int dim() const { return static_cast<int>(rows_.size()); }
  UniverseId universe() const { return universe_; }
  const std::vector<SparseVector>& rows() const { return rows_; }

  /// Canonical representative of v modulo this subspace.
  SparseVector reduce(SparseVector v) const;
  bool contains(const SparseVector& v) const;
  bool contains(const Subspace& other) const;

  /// Coefficients of v as a combination of rows(); nullopt if v is outside.
  std::optional<std::vector<Scalar>> coordinates(const SparseVector& v) const;

  bool operator==(const Subspace& o) const {
    return universe_ == o.universe_ && rows_ == o.rows_;
  }

 private:
  friend class EchelonBuilder;
  UniverseId universe_ = 0;
  std::vector<SparseVector> rows_;  // canonical reduced echelon, sorted by pivot
};

Subspace sum(const Subspace& a, const Subspace& b);

/// Zassenhaus intersection. Same-universe subspaces only.
Subspace intersect(const Subspace& a, const Subspace& b);

/// dim a - dim b. Requires b ⊆ a (membership-checked).
int quotient_dim(const Subspace& a, const Subspace& b);

/// Basis of { a : Σ a_i vectors[i] = 0 }, returned over the index universe
/// (key i ↔ vectors[i]).
std::vector<SparseVector> null_combinations(std::span<const SparseVector> vectors,
                                            UniverseId out_universe = 0);

/// Coefficients expressing target in the span of the given (not necessarily
/// independent) vectors; nullopt if target is outside the span.
std::optional<std::vector<Scalar>> solve_in_span(std::span<const SparseVector> vectors,
                                                 const SparseVector& target);

Scalar parse_scalar(const std::string& text);  // "p/q" or "p"
std::string format_scalar(const Scalar& s);

}  // namespace supermult
