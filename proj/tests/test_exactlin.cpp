#include <vector>

#include "doctest.h"
#include "supermult/exactlin.hpp"

using namespace supermult;

namespace {

SparseVector vec(std::initializer_list<std::pair<Key, int>> terms, UniverseId universe = 0) {
  std::vector<std::pair<Key, Scalar>> ts;
  for (auto& [k, c] : terms) ts.emplace_back(k, Scalar(c));
  return SparseVector::from_terms(std::move(ts), universe);
}

// Deterministic xorshift generator for the property checks.
struct Rng {
  std::uint64_t state;
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  int range(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

SparseVector random_vector(Rng& rng, int keys) {
  std::vector<std::pair<Key, Scalar>> terms;
  for (int k = 0; k < keys; ++k) {
    int c = rng.range(7) - 3;
    if (c != 0) terms.emplace_back(static_cast<Key>(k), Scalar(c));
  }
  return SparseVector::from_terms(std::move(terms));
}

}  // namespace

TEST_CASE("sparse vector arithmetic keeps terms sorted and nonzero") {
  SparseVector v = vec({{3, 2}, {1, 1}});
  CHECK(v.term_count() == 2);
  CHECK(v.leading_key() == 1);
  v.axpy(Scalar(-2), vec({{3, 1}}));
  CHECK(v.coeff(3) == 0);
  CHECK(v.term_count() == 1);
  v.axpy(Scalar(1), vec({{1, -1}}));
  CHECK(v.is_zero());
}

TEST_CASE("span of the empty set has dimension zero") {
  CHECK(Subspace::span(std::vector<SparseVector>{}).dim() == 0);
}

TEST_CASE("span collapses scalar multiples") {
  SparseVector v = vec({{0, 1}, {2, -2}});
  CHECK(Subspace::span(std::vector<SparseVector>{v, v.scaled(Scalar(2))}).dim() == 1);
}

TEST_CASE("span of three dependent vectors has dimension two") {
  // (1,1,0), (0,1,1), (1,0,-1): the third is the first minus the second.
  auto s = Subspace::span(std::vector<SparseVector>{
      vec({{0, 1}, {1, 1}}), vec({{1, 1}, {2, 1}}), vec({{0, 1}, {2, -1}})});
  CHECK(s.dim() == 2);
}

TEST_CASE("echelonization is canonical and idempotent") {
  Rng rng{2024};
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<SparseVector> vs;
    for (int i = 0; i < 5; ++i) vs.push_back(random_vector(rng, 6));
    Subspace a = Subspace::span(vs);
    CHECK(Subspace::span(a.rows()) == a);
    // order independence
    std::vector<SparseVector> reversed(vs.rbegin(), vs.rend());
    CHECK(Subspace::span(reversed) == a);
    for (const auto& v : vs) CHECK(a.contains(v));
  }
}

TEST_CASE("intersection: idempotence, zero, and a generic pair") {
  auto v = Subspace::span(std::vector<SparseVector>{vec({{0, 1}}), vec({{1, 1}, {2, 3}})});
  CHECK(intersect(v, v) == v);
  Subspace zero;
  CHECK(intersect(v, zero).dim() == 0);
  // two 2-dim subspaces of a 3-dim space meeting in a line
  auto a = Subspace::span(std::vector<SparseVector>{vec({{0, 1}}), vec({{1, 1}, {2, 1}})});
  auto b = Subspace::span(std::vector<SparseVector>{vec({{0, 1}, {1, 1}}), vec({{2, 1}})});
  CHECK(intersect(a, b).dim() == 1);
}

TEST_CASE("dimension formula dim(a+b) + dim(a∩b) = dim a + dim b") {
  Rng rng{99};
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<SparseVector> va, vb;
    for (int i = 0; i < 3; ++i) va.push_back(random_vector(rng, 7));
    for (int i = 0; i < 3; ++i) vb.push_back(random_vector(rng, 7));
    Subspace a = Subspace::span(va);
    Subspace b = Subspace::span(vb);
    Subspace meet = intersect(a, b);
    Subspace join = sum(a, b);
    CHECK(join.dim() + meet.dim() == a.dim() + b.dim());
    for (const auto& row : meet.rows()) {
      CHECK(a.contains(row));
      CHECK(b.contains(row));
    }
    CHECK(join.contains(a));
    CHECK(join.contains(b));
  }
}

TEST_CASE("quotient dimensions") {
  auto whole = Subspace::span(
      std::vector<SparseVector>{vec({{0, 1}}), vec({{1, 1}}), vec({{2, 1}})});
  auto line = Subspace::span(std::vector<SparseVector>{vec({{0, 1}, {1, 2}})});
  CHECK(quotient_dim(whole, whole) == 0);
  CHECK(quotient_dim(whole, Subspace{}) == 3);
  CHECK(quotient_dim(whole, line) == 2);
  auto outside = Subspace::span(std::vector<SparseVector>{vec({{5, 1}})});
  CHECK_THROWS_AS(quotient_dim(line, outside), PreconditionError);
}

TEST_CASE("mixed key universes are rejected") {
  UniverseId u1 = fresh_universe();
  UniverseId u2 = fresh_universe();
  auto a = Subspace::span(std::vector<SparseVector>{SparseVector::unit(0, u1)}, u1);
  auto b = Subspace::span(std::vector<SparseVector>{SparseVector::unit(0, u2)}, u2);
  CHECK_THROWS_AS(sum(a, b), StructureError);
  CHECK_THROWS_AS(intersect(a, b), StructureError);
  CHECK_THROWS_AS(quotient_dim(a, b), StructureError);
  SparseVector foreign = SparseVector::unit(1, u2);
  CHECK_THROWS_AS((void)a.contains(foreign), StructureError);
  EchelonBuilder builder(u1);
  builder.insert(SparseVector::unit(0, u1));
  CHECK_THROWS_AS(builder.insert(foreign), StructureError);
}

TEST_CASE("coordinates reconstruct the vector") {
  auto s = Subspace::span(std::vector<SparseVector>{vec({{0, 1}, {1, 1}}), vec({{2, 5}})});
  SparseVector target = vec({{0, 2}, {1, 2}, {2, -5}});
  auto coords = s.coordinates(target);
  REQUIRE(coords.has_value());
  SparseVector rebuilt;
  for (std::size_t i = 0; i < coords->size(); ++i) rebuilt.axpy((*coords)[i], s.rows()[i]);
  CHECK(rebuilt == target);
  CHECK_FALSE(s.coordinates(vec({{3, 1}})).has_value());
}

TEST_CASE("null combinations really annihilate") {
  Rng rng{7};
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<SparseVector> vs;
    for (int i = 0; i < 5; ++i) vs.push_back(random_vector(rng, 4));
    auto kernels = null_combinations(vs);
    Subspace spanned = Subspace::span(vs);
    CHECK(static_cast<int>(kernels.size()) + spanned.dim() == static_cast<int>(vs.size()));
    for (const auto& combo : kernels) {
      SparseVector acc;
      for (const auto& [idx, c] : combo.terms()) {
        acc.axpy(c, vs[static_cast<std::size_t>(idx)]);
      }
      CHECK(acc.is_zero());
    }
  }
}

TEST_CASE("solve_in_span finds exact coefficients") {
  std::vector<SparseVector> vs = {vec({{0, 1}, {1, 1}}), vec({{1, 1}, {2, 1}}),
                                  vec({{0, 1}, {2, -1}})};
  SparseVector target = vec({{0, 3}, {1, 1}, {2, -2}});
  auto coeffs = solve_in_span(vs, target);
  REQUIRE(coeffs.has_value());
  SparseVector acc;
  for (std::size_t i = 0; i < vs.size(); ++i) acc.axpy((*coeffs)[i], vs[i]);
  CHECK(acc == target);
  CHECK_FALSE(solve_in_span(vs, vec({{4, 1}})).has_value());
}

TEST_CASE("rational parsing") {
  CHECK(parse_scalar("3/6") == Scalar(1, 2));
  CHECK(parse_scalar("-2") == Scalar(-2));
  CHECK(parse_scalar("4/-8") == Scalar(-1, 2));
  CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
  CHECK_THROWS_AS(parse_scalar("a/b"), ParseError);
  CHECK_THROWS_AS(parse_scalar(""), ParseError);
  CHECK(format_scalar(Scalar(-1, 2)) == "-1/2");
}
