#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "supermult/exactlin.hpp"
#include "supermult/superdim.hpp"

namespace supermult::superalg {

struct BasisElement {
  std::string name;
  int parity = 0;
};

struct BracketEntry {
  int i = 0;
  int j = 0;  // i <= j
  std::vector<std::pair<int, Scalar>> coeffs;
};

/// Finite-dimensional Lie superalgebra given by a graded basis and rational
/// structure constants. Brackets are stored for ordered pairs i <= j; the
/// remaining values follow from super skew-symmetry. Immutable.
class StructLSA {
 public:
  StructLSA(std::vector<BasisElement> basis, std::vector<BracketEntry> entries);

  static StructLSA abelian(int even, int odd);
  /// Special Heisenberg H(m,n): basis z, x1..x2m (even), y1..yn (odd) with
  /// [x_i, x_{m+i}] = z and [y_j, y_j] = z. Z(L) = L^2 = <z>, class 2.
  static StructLSA heisenberg_even(int m, int n);
  /// Odd Heisenberg H_m: basis x1..xm (even), y1..ym, z (odd), [x_i, y_i] = z.
  static StructLSA heisenberg_odd(int m);
  static StructLSA direct_sum(const StructLSA& a, const StructLSA& b);

  int dim_total() const { return static_cast<int>(basis_.size()); }
  SuperDim dims() const;
  const std::vector<BasisElement>& basis() const { return basis_; }
  int parity(int i) const { return basis_[static_cast<std::size_t>(i)].parity; }
  UniverseId universe() const { return universe_; }

  SparseVector basis_vector(int i) const;
  SparseVector bracket_basis(int i, int j) const;
  SparseVector bracket(const SparseVector& v, const SparseVector& w) const;

  /// nullopt when the table is a graded Lie superalgebra; otherwise a report
  /// naming the first violated identity and its residual.
  std::optional<std::string> validate_report() const;
  void validate() const;  // throws StructureError on violation

 private:
  std::vector<BasisElement> basis_;
  std::map<std::pair<int, int>, SparseVector> table_;  // i <= j only
  UniverseId universe_;
};

/// Subspace of a StructLSA spanned by parity-homogeneous vectors.
struct GradedSubspace {
  Subspace space;
  SuperDim dims;
};

GradedSubspace graded(const StructLSA& algebra, Subspace space);

GradedSubspace derived_subalgebra(const StructLSA& algebra);
GradedSubspace lower_central(const StructLSA& algebra, int k);  // γ_k(L)
GradedSubspace upper_central(const StructLSA& algebra, int k);  // Z_k(L)
GradedSubspace center(const StructLSA& algebra);

/// Least t with γ_{t+1}(L) = 0; PreconditionError when the series stalls.
int nilpotency_class(const StructLSA& algebra);

bool is_graded_ideal(const StructLSA& algebra, const Subspace& candidate);

/// L/M on the echelon-complement basis with induced brackets. project() maps
/// vectors of L onto quotient coordinates, deterministic via echelon pivots.
class QuotientMap {
 public:
  QuotientMap(const StructLSA& algebra, GradedSubspace ideal);
  const StructLSA& quotient() const { return *quotient_; }
  const Subspace& ideal() const { return ideal_.space; }
  SparseVector project(const SparseVector& v) const;
  GradedSubspace project(const GradedSubspace& sub) const;

 private:
  Subspace reduce_ideal_;  // canonical echelon of the modded ideal
  GradedSubspace ideal_;
  std::vector<int> representative_;  // quotient index -> original basis index
  std::optional<StructLSA> quotient_;
};

/// Family descriptor for algebras with one-dimensional derived subalgebra:
/// L ≅ H(m,n) ⊕ A(a|b) for even L², L ≅ H_m ⊕ A(a|b) for odd L².
struct Dim1Family {
  enum class Kind { HeisenbergEven, HeisenbergOdd };
  Kind kind = Kind::HeisenbergEven;
  int m = 0;
  int n = 0;  // unused for HeisenbergOdd
  int abelian_even = 0;
  int abelian_odd = 0;
  std::string str() const;
};

/// Recovers the decomposition parameters from isomorphism invariants
/// (dim L, parity of L², dim L/Z(L)). Requires nilpotent L with dim L² = 1.
Dim1Family classify_dim1_derived(const StructLSA& algebra);

StructLSA realize(const Dim1Family& family);

}  // namespace supermult::superalg
