#include "doctest.h"
#include "supermult/superalg.hpp"

using namespace supermult;
using superalg::StructLSA;

TEST_CASE("family constructors validate") {
  StructLSA::abelian(2, 1).validate();
  StructLSA::heisenberg_even(1, 0).validate();
  StructLSA::heisenberg_even(0, 2).validate();
  StructLSA::heisenberg_odd(2).validate();
  StructLSA::direct_sum(StructLSA::heisenberg_even(1, 1), StructLSA::abelian(1, 1)).validate();
  CHECK(StructLSA::abelian(0, 0).dim_total() == 0);
  CHECK(StructLSA::abelian(2, 1).dims() == SuperDim{2, 1});
  CHECK(StructLSA::heisenberg_even(1, 1).dims() == SuperDim{3, 1});
  CHECK(StructLSA::heisenberg_odd(2).dims() == SuperDim{2, 3});
  CHECK_THROWS_AS(StructLSA::heisenberg_even(0, 0), PreconditionError);
  CHECK_THROWS_AS(StructLSA::heisenberg_odd(0), PreconditionError);
}

TEST_CASE("a mutation that breaks the super Jacobi identity is reported") {
  // H(1,0) with the extra entry [z, x2] = x2: grading-consistent but
  // [[z,x2],x1] = -z while [z,[x2,x1]] - [x2,[z,x1]] = 0.
  std::vector<superalg::BasisElement> basis = {{"z", 0}, {"x1", 0}, {"x2", 0}};
  std::vector<superalg::BracketEntry> entries = {{1, 2, {{0, Scalar(1)}}},
                                                 {0, 2, {{2, Scalar(1)}}}};
  StructLSA corrupted(std::move(basis), std::move(entries));
  auto report = corrupted.validate_report();
  REQUIRE(report.has_value());
  CHECK(report->find("Jacobi") != std::string::npos);
  CHECK_THROWS_AS(corrupted.validate(), StructureError);
}

TEST_CASE("a mutation that keeps Jacobi but destroys nilpotency is caught downstream") {
  // [z, x1] = x2 added to H(1,0) yields a consistent but non-nilpotent algebra.
  std::vector<superalg::BasisElement> basis = {{"z", 0}, {"x1", 0}, {"x2", 0}};
  std::vector<superalg::BracketEntry> entries = {{1, 2, {{0, Scalar(1)}}},
                                                 {0, 1, {{2, Scalar(1)}}}};
  StructLSA mutated(std::move(basis), std::move(entries));
  CHECK_FALSE(mutated.validate_report().has_value());
  CHECK_THROWS_AS(superalg::nilpotency_class(mutated), PreconditionError);
  CHECK_THROWS_AS(superalg::classify_dim1_derived(mutated), PreconditionError);
}

TEST_CASE("grading violations are reported") {
  std::vector<superalg::BasisElement> basis = {{"z", 0}, {"y", 1}};
  std::vector<superalg::BracketEntry> entries = {{1, 1, {{1, Scalar(1)}}}};  // [y,y] odd? no
  StructLSA bad(std::move(basis), std::move(entries));
  auto report = bad.validate_report();
  REQUIRE(report.has_value());
  CHECK(report->find("grading") != std::string::npos);
}

TEST_CASE("even diagonal brackets are rejected at construction") {
  std::vector<superalg::BasisElement> basis = {{"a", 0}, {"b", 0}};
  std::vector<superalg::BracketEntry> entries = {{0, 0, {{1, Scalar(1)}}}};
  CHECK_THROWS_AS(StructLSA(std::move(basis), std::move(entries)), StructureError);
}

TEST_CASE("series of the standard families") {
  StructLSA h10 = StructLSA::heisenberg_even(1, 0);
  CHECK(superalg::derived_subalgebra(h10).dims == SuperDim{1, 0});
  CHECK(superalg::lower_central(h10, 3).dims == SuperDim{0, 0});
  CHECK(superalg::nilpotency_class(h10) == 2);
  CHECK(superalg::center(h10).dims == SuperDim{1, 0});
  CHECK(superalg::upper_central(h10, 2).dims == h10.dims());

  StructLSA h01 = StructLSA::heisenberg_even(0, 1);
  CHECK(superalg::derived_subalgebra(h01).dims == SuperDim{1, 0});
  CHECK(superalg::center(h01).dims == SuperDim{1, 0});

  for (int m = 1; m <= 4; ++m) {
    StructLSA hm = StructLSA::heisenberg_odd(m);
    CHECK(superalg::center(hm).dims == SuperDim{0, 1});
    CHECK(superalg::derived_subalgebra(hm).dims == SuperDim{0, 1});
    CHECK(superalg::nilpotency_class(hm) == 2);
  }

  StructLSA abelian = StructLSA::abelian(2, 1);
  CHECK(superalg::derived_subalgebra(abelian).dims == SuperDim{0, 0});
  CHECK(superalg::center(abelian).dims == abelian.dims());
  CHECK(superalg::nilpotency_class(abelian) == 1);
  CHECK(superalg::nilpotency_class(StructLSA::abelian(0, 0)) == 0);
}

TEST_CASE("direct sums add dimensions and split series blockwise") {
  StructLSA a = StructLSA::heisenberg_even(1, 0);
  StructLSA b = StructLSA::abelian(1, 0);
  StructLSA sum_ab = StructLSA::direct_sum(a, b);
  CHECK(sum_ab.dims() == SuperDim{4, 0});
  CHECK(superalg::derived_subalgebra(sum_ab).dims ==
        superalg::derived_subalgebra(a).dims + superalg::derived_subalgebra(b).dims);
  StructLSA twice = StructLSA::direct_sum(a, a);  // name clash forces renames
  twice.validate();
  CHECK(twice.dims() == SuperDim{6, 0});
}

TEST_CASE("graded ideals and quotients") {
  StructLSA h = StructLSA::heisenberg_even(1, 0);
  auto centre = superalg::center(h);
  CHECK(superalg::is_graded_ideal(h, centre.space));
  superalg::QuotientMap quotient(h, centre);
  quotient.quotient().validate();
  CHECK(quotient.quotient().dims() == SuperDim{2, 0});
  CHECK(superalg::derived_subalgebra(quotient.quotient()).dims == SuperDim{0, 0});
  // projection kills exactly the ideal
  CHECK(quotient.project(h.basis_vector(0)).is_zero());
  CHECK_FALSE(quotient.project(h.basis_vector(1)).is_zero());
}

TEST_CASE("classification of algebras with one-dimensional derived subalgebra") {
  for (int m = 0; m <= 1; ++m) {
    for (int n = 0; m + n <= 2; ++n) {
      if (m + n < 1) continue;
      for (int a = 0; a <= 2; ++a) {
        for (int b = 0; a + b <= 2; ++b) {
          StructLSA algebra = StructLSA::direct_sum(StructLSA::heisenberg_even(m, n),
                                                    StructLSA::abelian(a, b));
          auto family = superalg::classify_dim1_derived(algebra);
          CHECK(family.kind == superalg::Dim1Family::Kind::HeisenbergEven);
          CHECK(family.m == m);
          CHECK(family.n == n);
          CHECK(family.abelian_even == a);
          CHECK(family.abelian_odd == b);
        }
      }
    }
  }
  for (int m = 1; m <= 2; ++m) {
    StructLSA algebra =
        StructLSA::direct_sum(StructLSA::heisenberg_odd(m), StructLSA::abelian(1, 0));
    auto family = superalg::classify_dim1_derived(algebra);
    CHECK(family.kind == superalg::Dim1Family::Kind::HeisenbergOdd);
    CHECK(family.m == m);
    CHECK(family.abelian_even == 1);
    CHECK(family.abelian_odd == 0);
  }
  // a pure Heisenberg algebra has no abelian complement
  auto family = superalg::classify_dim1_derived(StructLSA::heisenberg_even(1, 0));
  CHECK(family.str() == "H(1,0)+A(0|0)");
  CHECK_THROWS_AS(superalg::classify_dim1_derived(StructLSA::abelian(2, 0)), PreconditionError);
}

TEST_CASE("upper central series recursion on quotients") {
  const std::vector<StructLSA> corpus = {
      StructLSA::heisenberg_even(1, 0),
      StructLSA::heisenberg_odd(1),
      StructLSA::direct_sum(StructLSA::heisenberg_even(0, 1), StructLSA::abelian(0, 1))};
  for (const auto& algebra : corpus) {
    for (int n = 0; n <= 2; ++n) {
      auto z_n = superalg::upper_central(algebra, n);
      auto z_next = superalg::upper_central(algebra, n + 1);
      superalg::QuotientMap quotient(algebra, z_n);
      auto centre = superalg::center(quotient.quotient());
      CHECK(centre.dims == z_next.dims - z_n.dims);
      CHECK(quotient.project(z_next).space == centre.space);
    }
  }
}
