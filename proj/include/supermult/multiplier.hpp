#pragma once

#include <memory>
#include <string>

#include "supermult/superalg.hpp"
#include "supermult/superdim.hpp"
#include "supermult/witt.hpp"

namespace supermult::multiplier {

/// Raised when a closed form is requested outside the catalog; the oracle
/// handles everything else.
class UnsupportedFamilyError : public PreconditionError {
 public:
  explicit UnsupportedFamilyError(const std::string& what) : PreconditionError(what) {}
};

struct MultiplierResult {
  SuperDim dims;
  std::string provenance;  // exactly one closed-form source
  int c = 0;
};

/// dim M^(c)(A(m|n)) = Σ_{|α|=c+1} SW(α), parity split.
MultiplierResult abelian_multiplier(int m, int n, int c);

/// The cubic closed form for c = 2:
/// ( (m^3 + 3n^2m - m)/3 | (3m^2n + n^3 - n)/3 ). Always equals
/// abelian_multiplier(m, n, 2).
SuperDim abelian_multiplier2(int m, int n);

/// A(m|n) ⊗ A(r|s) = A(mr+ns | ms+nr).
SuperDim tensor_abelian(int m, int n, int r, int s);
SuperDim tensor_abelian(const SuperDim& a, const SuperDim& b);

/// M²(H(m,n)): (5|0) for (1,0); 0 for (0,1);
/// ( (8m^3+6n^2m-2m)/3 | (n^3+12m^2n-n)/3 ) for m+n >= 2.
SuperDim heisenberg_even_multiplier2(int m, int n);

/// M²(H_m): (2|2) for m = 1; ((4m^3-m)/3 | (4m^3-m)/3) for m >= 2. The two
/// disagree at m = 1 and the explicit computation wins there.
SuperDim heisenberg_odd_multiplier2(int m);

/// Closed-world family catalog usable by the direct-sum decomposition.
class FamilyDesc {
 public:
  enum class Kind { Abelian, HeisenbergEven, HeisenbergOdd, DirectSum };

  static FamilyDesc A(int m, int n);
  static FamilyDesc Heven(int m, int n);
  static FamilyDesc Hodd(int m);
  static FamilyDesc Sum(FamilyDesc left, FamilyDesc right);

  Kind kind() const { return kind_; }
  int m() const { return m_; }
  int n() const { return n_; }
  const FamilyDesc& left() const { return *left_; }
  const FamilyDesc& right() const { return *right_; }

  SuperDim dims() const;     // dimensions of the algebra itself
  SuperDim ab_dims() const;  // dimensions of L / L^2
  std::string name() const;

 private:
  Kind kind_ = Kind::Abelian;
  int m_ = 0, n_ = 0;
  std::shared_ptr<const FamilyDesc> left_, right_;
};

/// "A:m,n", "Heven:m,n", "Hodd:m", or "sum:F1+F2+...".
FamilyDesc parse_family(const std::string& text);
superalg::StructLSA realize(const FamilyDesc& family);

/// M² from the catalog; UnsupportedFamilyError outside it.
MultiplierResult multiplier2_closed(const FamilyDesc& family);

/// M²(L1 ⊕ L2) = M²(L1) ⊕ M²(L2) ⊕ (L2ab ⊗ L1ab ⊗ L1ab) ⊕ (L2ab ⊗ L1ab ⊗ L2ab).
SuperDim direct_sum_multiplier2(const FamilyDesc& a, const FamilyDesc& b);

/// Case formulas for nilpotent L of dim (k|l) with dim L² = 1, keyed by the
/// classified decomposition.
SuperDim dim1_derived_multiplier2(int k, int l, const superalg::Dim1Family& family);

/// T = (k+l)³/3 - (k+l)² + 2(k+l)/3; totals of dim1_derived_multiplier2 land in
/// {T, T+2, T+3} with the offset fixed by the family case.
long long dim1_base_total(int k, int l);
int dim1_total_offset(const superalg::Dim1Family& family);

struct Bound2 {
  long long fine = 0;    // (1/3)(k+l-r-s)[(k+l+2r+2s-2)(k+l-r-s-1)+3(r+s-1)]+3
  long long coarse = 0;  // (1/3)(k+l)(k+l-1)(k+l-2)+3
  bool coarse_equality_attainable = false;
  std::string equality_family;  // the attaining family when the flag is set
};
Bound2 multiplier2_upper_bound(int k, int l, int r, int s);

/// Bound for a generalized Heisenberg algebra of dim (m|n), Z(H)=H² of dim
/// (r|s): Σ_{|α|=c+1}SW(α) over rank (m-r|n-s) + same over rank (r|s)
/// + (m+n-r-s)^c (r+s).
long long gen_heisenberg_bound(int m, int n, int r, int s, int c);

/// true iff m2_total reaches (1/3)(k+l)(k+l+1)(k+l-1): only the abelian
/// algebra attains or exceeds that threshold.
bool abelian_threshold_check(int k, int l, long long m2_total);
long long abelian_threshold(int k, int l);

}  // namespace supermult::multiplier
