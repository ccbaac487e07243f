#include "doctest.h"
#include "supermult/oracle.hpp"

using namespace supermult;
using superalg::StructLSA;

TEST_CASE("presentations of the standard families") {
  StructLSA h1 = StructLSA::heisenberg_odd(1);
  auto p = oracle::present(h1);
  CHECK(p.alphabet.size() == 3);
  CHECK(p.class_bound == 2);

  auto pa = oracle::present(StructLSA::abelian(1, 2));
  CHECK(pa.class_bound == 1);
  // abelian: every pair (and odd square) contributes one relator
  CHECK(pa.relators.size() == 3 + 2);  // pairs i<j plus odd diagonals

  CHECK_THROWS_AS(oracle::present(StructLSA({{"z", 0}, {"x1", 0}, {"x2", 0}},
                                            {{1, 2, {{0, Scalar(1)}}},
                                             {0, 1, {{2, Scalar(1)}}}})),
                  PreconditionError);  // consistent but not nilpotent
}

TEST_CASE("multiplier oracle reproduces the closed values") {
  auto h1 = oracle::multiplier_oracle(StructLSA::heisenberg_odd(1), 2);
  CHECK(h1.dims == SuperDim{2, 2});
  CHECK(h1.truncation_degree == 5);

  CHECK(oracle::multiplier_oracle(StructLSA::heisenberg_even(1, 0), 2).dims == SuperDim{5, 0});
  CHECK(oracle::multiplier_oracle(StructLSA::heisenberg_even(0, 1), 2).dims == SuperDim{0, 0});
  CHECK(oracle::multiplier_oracle(StructLSA::abelian(1, 1), 2).dims == SuperDim{1, 1});
  CHECK(oracle::multiplier_oracle(StructLSA::abelian(0, 0), 2).dims == SuperDim{0, 0});
}

TEST_CASE("the multiplier does not depend on the presentation") {
  // the two-generator presentation of the odd Heisenberg algebra H_1
  presentation::Presentation p;
  p.alphabet = freelie::GradedAlphabet({{"x1", 0}, {"x2", 1}});
  p.relators.push_back(presentation::BracketExpr::bracket(presentation::BracketExpr::generator(1),
                                                          presentation::BracketExpr::generator(1)));
  p.class_bound = 2;
  auto minimal = oracle::multiplier_oracle(p, 2);
  CHECK(minimal.dims == SuperDim{2, 2});

  auto basis_presentation = oracle::multiplier_oracle(StructLSA::heisenberg_odd(1), 2);
  CHECK(basis_presentation.dims == minimal.dims);
}

TEST_CASE("truncation independence") {
  oracle::OracleOptions deeper;
  deeper.extra_degree = 1;
  const std::vector<StructLSA> corpus = {StructLSA::heisenberg_odd(1),
                                         StructLSA::heisenberg_even(1, 0),
                                         StructLSA::abelian(1, 1)};
  for (const auto& algebra : corpus) {
    for (int c = 1; c <= 2; ++c) {
      CHECK(oracle::multiplier_oracle(algebra, c).dims ==
            oracle::multiplier_oracle(algebra, c, deeper).dims);
    }
  }
}

TEST_CASE("schur multiplier specialization c = 1") {
  // classical: dim M(H(1,0)) = 2 for the 3-dim Heisenberg algebra
  CHECK(oracle::multiplier_oracle(StructLSA::heisenberg_even(1, 0), 1).dims == SuperDim{2, 0});
  // abelian: degree-2 layer
  CHECK(oracle::multiplier_oracle(StructLSA::abelian(2, 0), 1).dims ==
        witt::layer_dim(witt::ParitySignature{2, 0}, 2));
}

TEST_CASE("gamma series inside a structure-constant algebra") {
  StructLSA h = StructLSA::heisenberg_even(1, 0);
  auto centre = superalg::center(h);
  CHECK(oracle::gamma_ML(h, centre, 1).dims == centre.dims);
  CHECK(oracle::gamma_ML(h, centre, 2).dims == SuperDim{0, 0});
  auto whole = superalg::upper_central(h, 2);
  CHECK(oracle::gamma_ML(h, whole, 2).dims == superalg::derived_subalgebra(h).dims);
  auto not_ideal = superalg::graded(
      h, Subspace::span(std::vector<SparseVector>{h.basis_vector(1)}, h.universe()));
  CHECK_THROWS_AS(oracle::gamma_ML(h, not_ideal, 2), PreconditionError);
}

TEST_CASE("z_c_star certificates") {
  CHECK(oracle::z_c_star(StructLSA::abelian(2, 0), 2).dims == SuperDim{0, 0});
  CHECK(oracle::z_c_star(StructLSA::heisenberg_even(1, 0), 2).dims == SuperDim{0, 0});
  // the nonzero certificate contains the center
  StructLSA algebra = StructLSA::heisenberg_even(0, 1);
  auto star = oracle::z_c_star(algebra, 2);
  CHECK(star.dims.total() > 0);
  auto centre = superalg::center(algebra);
  CHECK(star.space.contains(centre.space));
}

TEST_CASE("capability certificates and the classification table") {
  CHECK(oracle::is_2_capable(StructLSA::heisenberg_even(1, 0)));
  CHECK(oracle::is_2_capable(StructLSA::heisenberg_odd(1)));
  CHECK_FALSE(oracle::is_2_capable(StructLSA::heisenberg_odd(2)));
  CHECK_FALSE(oracle::is_2_capable(StructLSA::abelian(0, 1)));
  CHECK(oracle::is_capable(StructLSA::abelian(0, 1), 1).capable);
  CHECK_FALSE(oracle::is_capable(StructLSA::abelian(1, 0), 1).capable);

  CHECK(oracle::capability_table(multiplier::parse_family("A:0,1"), 1));
  CHECK_FALSE(oracle::capability_table(multiplier::parse_family("A:0,1"), 2));
  CHECK(oracle::capability_table(multiplier::parse_family("Heven:1,0"), 2));
  CHECK_FALSE(oracle::capability_table(multiplier::parse_family("Hodd:2"), 2));
  CHECK_THROWS_AS(oracle::capability_table(multiplier::parse_family("A:1,0+A:1,0"), 2),
                  multiplier::UnsupportedFamilyError);
}

TEST_CASE("relative gamma quotients feed the dimension identity") {
  // H(1,0), M = Z(L), c = 2: dim M²(L) + dim(M ∩ γ₃(L)) = dim M²(L/M) + dim T₃
  StructLSA h = StructLSA::heisenberg_even(1, 0);
  auto centre = superalg::center(h);
  long long lhs = oracle::multiplier_oracle(h, 2).dims.total() +
                  intersect(centre.space, superalg::lower_central(h, 3).space).dim();
  superalg::QuotientMap quotient(h, centre);
  long long rhs = oracle::multiplier_oracle(quotient.quotient(), 2).dims.total() +
                  oracle::relative_gamma_quotient(h, centre, 2).total();
  CHECK(lhs == rhs);
  CHECK(oracle::relative_gamma_quotient(h, centre, 2).total() == 3);
}

TEST_CASE("resource caps surface the required universe size") {
  oracle::OracleOptions tiny;
  tiny.word_cap = 10;
  CHECK_THROWS_AS(oracle::multiplier_oracle(StructLSA::heisenberg_odd(1), 2, tiny), ResourceError);
}
