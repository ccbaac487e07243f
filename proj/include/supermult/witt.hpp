#pragma once

#include <functional>
#include <vector>

#include "supermult/errors.hpp"
#include "supermult/superdim.hpp"

namespace supermult::witt {

/// Generator counts with the canonical order: positions 0..even-1 are even,
/// even..even+odd-1 are odd.
struct ParitySignature {
  int even = 0;
  int odd = 0;
  int size() const { return even + odd; }
  std::vector<int> parities() const;
};

/// One exponent per alphabet position.
struct MultiDegree {
  std::vector<long long> entries;
  long long total() const;
};

/// Standard Moebius function via trial factorization.
int moebius(long long k);

/// Rank of the multidegree-α component of the free Lie algebra:
/// W(α) = (1/|α|) Σ_{e | gcd(α)} μ(e) (|α|/e)! / Π (α_i/e)!.
/// The rational expression must cancel exactly; anything else is a bug.
long long witt_rank(const MultiDegree& alpha);

/// Super-Witt rank SW(α) = W(α) + β W(α/2) over an alphabet with the given
/// parities (one per position). β = 1 exactly when every α_i is even and the
/// half-degree monomial has odd parity, i.e. (1/2) Σ_{odd positions} α_i is odd.
long long super_witt_rank(const std::vector<int>& parities, const MultiDegree& alpha);
long long super_witt_rank(const ParitySignature& sig, const MultiDegree& alpha);

/// Parity of every monomial of multidegree α: Σ_{odd positions} α_i mod 2.
int multidegree_parity(const std::vector<int>& parities, const MultiDegree& alpha);

struct GradedDims {
  long long dim = 0;
  long long dim_plus = 0;
  long long dim_minus = 0;
  long long sdim = 0;
};

/// Degree-r dimensions of the free Lie superalgebra of rank (m|n):
///   dim L_r       = (1/r) Σ_{a|r} μ(a) (m - (-1)^a n)^{r/a}
///   dim L_{r,±}   = (1/r) Σ_{a|r} μ(a) [(m - (-1)^a n)^{r/a} ± (m-n)^{r/a}] / 2
///   sdim L_r      = (1/r) Σ_{a|r} μ(a) (m-n)^{r/a}
GradedDims graded_dims(const ParitySignature& sig, long long r);

/// Σ_{|α|=n} SW(α), split by monomial parity.
SuperDim layer_dim(const ParitySignature& sig, long long n);
SuperDim layer_dim(const std::vector<int>& parities, long long n);

/// Visits every α ≥ 0 with the given number of parts and |α| = total.
void for_each_multidegree(int parts, long long total,
                          const std::function<void(const MultiDegree&)>& visit);

}  // namespace supermult::witt
