#pragma once

#include "supermult/freelie.hpp"
#include "supermult/multiplier.hpp"
#include "supermult/presentation.hpp"
#include "supermult/superalg.hpp"
#include "supermult/superdim.hpp"

namespace supermult::oracle {

struct OracleOptions {
  std::size_t word_cap = freelie::TruncatedFrame::kDefaultWordCap;
  /// Added to the default truncation degree class+c+1; used by the
  /// truncation-independence checks.
  int extra_degree = 0;
};

struct OracleRun {
  SuperDim dims;
  int truncation_degree = 0;
  std::size_t universe_size = 0;
};

/// Free presentation of a validated nilpotent algebra: one free generator per
/// basis element, one relator [e_i, e_j] - Σ c_{ij}^k e_k per basis pair.
presentation::Presentation present(const superalg::StructLSA& algebra);

/// dim (R ∩ F^{c+1}) / γ_{c+1}(R,F) computed inside the truncated frame at
/// degree class+c+1, which is exact because γ_{c+1}(R,F) ⊇ F^{class+c+1}.
OracleRun multiplier_oracle(const presentation::Presentation& p, int c,
                            const OracleOptions& options = {});
OracleRun multiplier_oracle(const superalg::StructLSA& algebra, int c,
                            const OracleOptions& options = {});

/// γ_k(M,L) inside a structure-constant algebra; M must be a graded ideal.
superalg::GradedSubspace gamma_ML(const superalg::StructLSA& algebra,
                                  const superalg::GradedSubspace& ideal, int k);

/// dim γ_{c+1}(N,F) / γ_{c+1}(R,F) for N the full preimage of the graded
/// ideal M under a free presentation of L.
SuperDim relative_gamma_quotient(const superalg::StructLSA& algebra,
                                 const superalg::GradedSubspace& ideal, int c,
                                 const OracleOptions& options = {});

/// Z_c*(L): the image in L of Z_c(F / γ_{c+1}(R,F)). The bracket grouping in
/// the defining formula is read as γ_{c+1}(R,F), matching how the series is
/// used everywhere else. Vanishes exactly when L is c-capable.
superalg::GradedSubspace z_c_star(const superalg::StructLSA& algebra, int c,
                                  const OracleOptions& options = {});

struct CapabilityCertificate {
  bool capable = false;
  superalg::GradedSubspace z_star;  // the certificate subspace
};

CapabilityCertificate is_capable(const superalg::StructLSA& algebra, int order,
                                 const OracleOptions& options = {});
inline bool is_2_capable(const superalg::StructLSA& algebra) {
  return is_capable(algebra, 2).capable;
}

/// Classification answer for {A, Heven, Hodd} at order 1 or 2, used as the
/// expected value against the oracle. UnsupportedFamilyError for sums.
bool capability_table(const multiplier::FamilyDesc& family, int order);

}  // namespace supermult::oracle
