#include "supermult/oracle.hpp"

namespace supermult::oracle {

using freelie::SuperPolynomial;
using freelie::TruncatedFrame;
using presentation::BracketExpr;
using presentation::Presentation;
using superalg::GradedSubspace;
using superalg::StructLSA;

Presentation present(const StructLSA& algebra) {
  algebra.validate();
  Presentation p;
  p.class_bound = superalg::nilpotency_class(algebra);
  std::vector<freelie::Generator> gens;
  for (const auto& b : algebra.basis()) gens.push_back({b.name, b.parity});
  p.alphabet = freelie::GradedAlphabet(std::move(gens));

  const int d = algebra.dim_total();
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      if (i == j && algebra.parity(i) == 0) continue;  // [x,x] = 0 identically
      std::vector<BracketExpr> parts;
      parts.push_back(BracketExpr::bracket(BracketExpr::generator(i), BracketExpr::generator(j)));
      const SparseVector value = algebra.bracket_basis(i, j);
      for (const auto& [k, c] : value.terms()) {
        parts.push_back(
            BracketExpr::scale(-c, BracketExpr::generator(static_cast<int>(k))));
      }
      p.relators.push_back(parts.size() == 1 ? std::move(parts.front())
                                             : BracketExpr::sum(std::move(parts)));
    }
  }
  return p;
}

namespace {

struct PresentationFrame {
  TruncatedFrame frame;
  Subspace relator_ideal;  // R, including F^{t+1}
};

PresentationFrame build_presentation_frame(const Presentation& p, int c,
                                           const OracleOptions& options) {
  const int degree = p.class_bound + c + 1 + options.extra_degree;
  TruncatedFrame frame(p.alphabet, degree, options.word_cap);
  std::vector<SuperPolynomial> seeds;
  for (const auto& relator : p.relators) seeds.push_back(presentation::eval(relator, frame));
  // Seeding F^{t+1} explicitly makes the truncation bound unconditional even
  // when the relators already generate it.
  const Subspace tail = frame.lower_central(p.class_bound + 1);
  for (const auto& row : tail.rows()) seeds.push_back(row);
  Subspace relator_ideal = freelie::ideal_closure(seeds, frame);
  return {std::move(frame), std::move(relator_ideal)};
}

}  // namespace

OracleRun multiplier_oracle(const Presentation& p, int c, const OracleOptions& options) {
  if (c < 1) throw PreconditionError("multiplier order c must be >= 1");
  if (p.class_bound < 0) throw PreconditionError("class bound must be non-negative");
  if (p.alphabet.size() == 0) {
    return {SuperDim{0, 0}, p.class_bound + c + 1 + options.extra_degree, 0};
  }
  PresentationFrame pf = build_presentation_frame(p, c, options);
  const TruncatedFrame& frame = pf.frame;

  Subspace gamma = freelie::gamma_series(pf.relator_ideal, frame, c + 1);
  Subspace meet = (c >= p.class_bound)
                      ? frame.lower_central(c + 1)  // F^{c+1} ⊆ F^{t+1} ⊆ R
                      : intersect(pf.relator_ideal, frame.lower_central(c + 1));
  if (!meet.contains(gamma)) {
    throw ConsistencyError("gamma series escaped R ∩ F^{c+1}");
  }
  SuperDim dims = frame.graded_dims_of(meet) - frame.graded_dims_of(gamma);
  return {dims, frame.degree(), frame.universe_size()};
}

OracleRun multiplier_oracle(const StructLSA& algebra, int c, const OracleOptions& options) {
  return multiplier_oracle(present(algebra), c, options);
}

GradedSubspace gamma_ML(const StructLSA& algebra, const GradedSubspace& ideal, int k) {
  if (k < 1) throw PreconditionError("gamma series index must be >= 1");
  if (!superalg::is_graded_ideal(algebra, ideal.space)) {
    throw PreconditionError("gamma_ML requires a graded ideal");
  }
  Subspace current = ideal.space;
  for (int j = 2; j <= k; ++j) {
    std::vector<SparseVector> brackets;
    for (const auto& row : current.rows()) {
      for (int b = 0; b < algebra.dim_total(); ++b) {
        brackets.push_back(algebra.bracket(row, algebra.basis_vector(b)));
      }
    }
    current = Subspace::span(brackets, algebra.universe());
  }
  return superalg::graded(algebra, std::move(current));
}

namespace {

// Degree-1 lift of a vector over L's basis universe into the word algebra.
SuperPolynomial lift_to_frame(const TruncatedFrame& frame, const SparseVector& v) {
  SparseVector out(frame.universe());
  for (const auto& [k, c] : v.terms()) {
    out.axpy(c, frame.generator_poly(static_cast<int>(k)));
  }
  return out;
}

}  // namespace

SuperDim relative_gamma_quotient(const StructLSA& algebra, const GradedSubspace& ideal, int c,
                                 const OracleOptions& options) {
  if (c < 1) throw PreconditionError("multiplier order c must be >= 1");
  if (!superalg::is_graded_ideal(algebra, ideal.space)) {
    throw PreconditionError("relative_gamma_quotient requires a graded ideal");
  }
  if (algebra.dim_total() == 0) return {0, 0};
  Presentation p = present(algebra);
  PresentationFrame pf = build_presentation_frame(p, c, options);
  const TruncatedFrame& frame = pf.frame;

  std::vector<SparseVector> lifted;
  for (const auto& row : ideal.space.rows()) lifted.push_back(lift_to_frame(frame, row));
  Subspace preimage = sum(pf.relator_ideal, Subspace::span(lifted, frame.universe()));

  Subspace gamma_n = freelie::gamma_series(preimage, frame, c + 1);
  Subspace gamma_r = freelie::gamma_series(pf.relator_ideal, frame, c + 1);
  if (!gamma_n.contains(gamma_r)) {
    throw ConsistencyError("γ_{c+1}(R,F) escaped γ_{c+1}(N,F)");
  }
  return frame.graded_dims_of(gamma_n) - frame.graded_dims_of(gamma_r);
}

GradedSubspace z_c_star(const StructLSA& algebra, int c, const OracleOptions& options) {
  if (c < 1) throw PreconditionError("capability order must be >= 1");
  if (algebra.dim_total() == 0) {
    return superalg::graded(algebra, Subspace(algebra.universe()));
  }
  Presentation p = present(algebra);
  PresentationFrame pf = build_presentation_frame(p, c, options);
  const TruncatedFrame& frame = pf.frame;

  Subspace gamma = freelie::gamma_series(pf.relator_ideal, frame, c + 1);
  Subspace free_lie = frame.lower_central(1);

  // Q = F / γ_{c+1}(R,F) on the canonical complement of the series inside F.
  std::vector<SparseVector> reduced;
  for (const auto& row : free_lie.rows()) {
    SparseVector r = gamma.reduce(row);
    if (!r.is_zero()) reduced.push_back(std::move(r));
  }
  Subspace complement = Subspace::span(reduced, frame.universe());

  std::vector<superalg::BasisElement> q_basis;
  for (std::size_t t = 0; t < complement.rows().size(); ++t) {
    auto parity = frame.parity_of(complement.rows()[t]);
    if (!parity) throw ConsistencyError("quotient basis row is not parity-homogeneous");
    q_basis.push_back({"q" + std::to_string(t + 1), *parity});
  }
  std::vector<superalg::BracketEntry> q_entries;
  const int qd = static_cast<int>(complement.rows().size());
  for (int i = 0; i < qd; ++i) {
    for (int j = i; j < qd; ++j) {
      if (i == j && q_basis[static_cast<std::size_t>(i)].parity == 0) continue;
      SparseVector w = gamma.reduce(frame.supercommutator(
          complement.rows()[static_cast<std::size_t>(i)],
          complement.rows()[static_cast<std::size_t>(j)]));
      auto coords = complement.coordinates(w);
      if (!coords) throw ConsistencyError("quotient bracket left the complement");
      superalg::BracketEntry entry{i, j, {}};
      for (int k = 0; k < qd; ++k) {
        const Scalar& coeff = (*coords)[static_cast<std::size_t>(k)];
        if (coeff != 0) entry.coeffs.emplace_back(k, coeff);
      }
      if (!entry.coeffs.empty()) q_entries.push_back(std::move(entry));
    }
  }
  StructLSA q(std::move(q_basis), std::move(q_entries));

  GradedSubspace upper = superalg::upper_central(q, c);

  // Push forward along F → L: solve in span of the reduced generator images.
  std::vector<SparseVector> pi_gen;
  for (int g = 0; g < frame.alphabet().size(); ++g) {
    pi_gen.push_back(pf.relator_ideal.reduce(frame.generator_poly(g)));
  }
  std::vector<SparseVector> image_rows;
  for (const auto& row : upper.space.rows()) {
    SparseVector lift(frame.universe());
    for (const auto& [k, coeff] : row.terms()) {
      lift.axpy(coeff, complement.rows()[static_cast<std::size_t>(k)]);
    }
    auto coords = solve_in_span(pi_gen, pf.relator_ideal.reduce(lift));
    if (!coords) throw ConsistencyError("projection of Z_c(Q) left the presented algebra");
    SparseVector image(algebra.universe());
    for (std::size_t g = 0; g < coords->size(); ++g) {
      if ((*coords)[g] != 0) {
        image.axpy((*coords)[g], algebra.basis_vector(static_cast<int>(g)));
      }
    }
    image_rows.push_back(std::move(image));
  }
  return superalg::graded(algebra, Subspace::span(image_rows, algebra.universe()));
}

CapabilityCertificate is_capable(const StructLSA& algebra, int order,
                                 const OracleOptions& options) {
  GradedSubspace star = z_c_star(algebra, order, options);
  bool capable = star.dims.total() == 0;
  return {capable, std::move(star)};
}

bool capability_table(const multiplier::FamilyDesc& family, int order) {
  using Kind = multiplier::FamilyDesc::Kind;
  if (order != 1 && order != 2) throw PreconditionError("capability order must be 1 or 2");
  switch (family.kind()) {
    case Kind::Abelian: {
      int m = family.m(), n = family.n();
      if (order == 1) return (m == 0 && n == 1) || m + n >= 2;
      return m + n >= 2;
    }
    case Kind::HeisenbergEven:
      return family.m() == 1 && family.n() == 0;
    case Kind::HeisenbergOdd:
      return family.m() == 1;
    case Kind::DirectSum:
      throw multiplier::UnsupportedFamilyError(
          "capability classification covers A, Heven, Hodd only");
  }
  throw ConsistencyError("unreachable family kind");
}

}  // namespace supermult::oracle
