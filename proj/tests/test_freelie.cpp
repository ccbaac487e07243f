#include <map>

#include "doctest.h"
#include "supermult/freelie.hpp"

using namespace supermult;
using freelie::GradedAlphabet;
using freelie::LieMonomial;
using freelie::TruncatedFrame;

namespace {

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

// Random parity-homogeneous polynomial of the requested parity.
freelie::SuperPolynomial random_homogeneous(Rng& rng, const TruncatedFrame& frame, int parity) {
  std::vector<std::pair<Key, Scalar>> terms;
  for (Key key = 0; key < frame.universe_size(); ++key) {
    if (frame.word_length(key) > 2) break;
    if (frame.word_parity(key) != parity) continue;
    int c = rng.range(5) - 2;
    if (c != 0) terms.emplace_back(key, Scalar(c));
  }
  return SparseVector::from_terms(std::move(terms), frame.universe());
}

}  // namespace

TEST_CASE("regular monomials on two even generators") {
  auto alphabet = GradedAlphabet::canonical(2, 0);
  auto len2 = freelie::enumerate_regular(alphabet, 2);
  REQUIRE(len2.size() == 1);
  CHECK(len2[0].str(alphabet) == "(x2)(x1)");
  CHECK_THROWS_AS(freelie::enumerate_regular(GradedAlphabet{}, 1), PreconditionError);
  CHECK_THROWS_AS(freelie::enumerate_regular(alphabet, 0), PreconditionError);
}

TEST_CASE("squares of odd monomials are s-regular") {
  auto odd = GradedAlphabet::canonical(0, 1);
  CHECK(freelie::enumerate_regular(odd, 2).empty());
  auto s2 = freelie::enumerate_s_regular(odd, 2);
  REQUIRE(s2.size() == 1);
  CHECK(s2[0].str(odd) == "(y1)(y1)");
  CHECK(s2[0].parity(odd) == 0);

  auto even = GradedAlphabet::canonical(1, 0);
  CHECK(freelie::enumerate_s_regular(even, 2).empty());
}

TEST_CASE("mixed alphabet enumeration matches the rank counts") {
  auto mixed = GradedAlphabet::canonical(1, 1);
  auto len3 = freelie::enumerate_regular(mixed, 3);
  CHECK(len3.size() == 2);
  auto len4 = freelie::enumerate_s_regular(mixed, 4);
  REQUIRE(len4.size() == 4);
  SuperDim split;
  for (const auto& mono : len4) (mono.parity(mixed) ? split.odd : split.even)++;
  CHECK(split == SuperDim{2, 2});
}

TEST_CASE("supercommutator basics in the word algebra") {
  TruncatedFrame frame(GradedAlphabet::canonical(1, 1), 4);
  auto x = frame.generator_poly(0);
  auto y = frame.generator_poly(1);
  CHECK(frame.supercommutator(x, x).is_zero());

  auto yy = frame.supercommutator(y, y);
  std::vector<std::uint8_t> word_yy = {1, 1};
  CHECK(yy.term_count() == 1);
  CHECK(yy.coeff(frame.encode(word_yy)) == 2);

  // ((y)(y))(x) expands to 2*yyx - 2*xyy
  auto lhs = frame.supercommutator(yy, x);
  std::vector<std::uint8_t> yyx = {1, 1, 0}, xyy = {0, 1, 1};
  CHECK(lhs.term_count() == 2);
  CHECK(lhs.coeff(frame.encode(yyx)) == 2);
  CHECK(lhs.coeff(frame.encode(xyy)) == -2);
}

TEST_CASE("super skew-symmetry and super Jacobi hold identically") {
  TruncatedFrame frame(GradedAlphabet::canonical(1, 1), 4);
  Rng rng{11};
  for (int trial = 0; trial < 25; ++trial) {
    int pa = rng.range(2), pb = rng.range(2), pc = rng.range(2);
    auto a = random_homogeneous(rng, frame, pa);
    auto b = random_homogeneous(rng, frame, pb);
    auto c = random_homogeneous(rng, frame, pc);

    SparseVector skew = frame.supercommutator(a, b);
    skew.axpy((pa && pb) ? Scalar(-1) : Scalar(1), frame.supercommutator(b, a));
    CHECK(skew.is_zero());

    // [[a,b],c] = [a,[b,c]] - (-1)^{|a||b|}[b,[a,c]]
    SparseVector residual = frame.supercommutator(frame.supercommutator(a, b), c);
    residual.axpy(Scalar(-1), frame.supercommutator(a, frame.supercommutator(b, c)));
    residual.axpy((pa && pb) ? Scalar(-1) : Scalar(1),
                  frame.supercommutator(b, frame.supercommutator(a, c)));
    CHECK(residual.is_zero());
  }
}

TEST_CASE("monomial images: leaf and plain commutator") {
  auto alphabet = GradedAlphabet::canonical(2, 0);
  TruncatedFrame frame(alphabet, 3);
  auto leaf = frame.to_associative(LieMonomial::leaf(0));
  std::vector<std::uint8_t> x1 = {0};
  CHECK(leaf == SparseVector::unit(frame.encode(x1), frame.universe()));

  auto node = frame.to_associative(
      LieMonomial::node(LieMonomial::leaf(1), LieMonomial::leaf(0)));
  std::vector<std::uint8_t> x2x1 = {1, 0}, x1x2 = {0, 1};
  CHECK(node.coeff(frame.encode(x2x1)) == 1);
  CHECK(node.coeff(frame.encode(x1x2)) == -1);
}

TEST_CASE("frame layers have the expected graded dimensions") {
  TruncatedFrame mixed(GradedAlphabet::canonical(1, 1), 4);
  CHECK(mixed.layer_dims(1) == SuperDim{1, 1});
  CHECK(mixed.layer_dims(3) == SuperDim{1, 1});
  CHECK(quotient_dim(mixed.lower_central(3), mixed.lower_central(4)) == 2);

  TruncatedFrame even(GradedAlphabet::canonical(2, 0), 3);
  CHECK(even.layer_dims(1) == SuperDim{2, 0});
  CHECK(even.layer_dims(2) == SuperDim{1, 0});
  CHECK(quotient_dim(even.lower_central(2), even.lower_central(3)) == 1);
}

TEST_CASE("frame resource cap is enforced with a named size") {
  CHECK_THROWS_AS(TruncatedFrame(GradedAlphabet::canonical(2, 0), 10, 100), ResourceError);
  try {
    TruncatedFrame frame(GradedAlphabet::canonical(2, 0), 10, 100);
  } catch (const ResourceError& e) {
    std::string message = e.what();
    CHECK(message.find("2046") != std::string::npos);  // Σ_{d<=10} 2^d
    CHECK(message.find("10") != std::string::npos);
  }
}

TEST_CASE("ideal closure: trivial seeds and the generator ideal") {
  TruncatedFrame frame(GradedAlphabet::canonical(1, 1), 4);
  CHECK(freelie::ideal_closure(std::vector<SparseVector>{}, frame).dim() == 0);
  std::vector<SparseVector> gens = {frame.generator_poly(0), frame.generator_poly(1)};
  Subspace whole = freelie::ideal_closure(gens, frame);
  CHECK(whole == frame.lower_central(1));
}

TEST_CASE("ideal closure is monotone and idempotent") {
  TruncatedFrame frame(GradedAlphabet::canonical(1, 1), 4);
  auto x = frame.generator_poly(0);
  auto y = frame.generator_poly(1);
  std::vector<SparseVector> small = {frame.supercommutator(y, y)};
  std::vector<SparseVector> large = {frame.supercommutator(y, y), frame.supercommutator(x, y)};
  Subspace closed_small = freelie::ideal_closure(small, frame);
  Subspace closed_large = freelie::ideal_closure(large, frame);
  CHECK(closed_large.contains(closed_small));
  CHECK(freelie::ideal_closure(closed_small.rows(), frame) == closed_small);
  for (const auto& seed : small) CHECK(closed_small.contains(seed));
}

TEST_CASE("the two-generator relator ideal of the odd Heisenberg algebra") {
  // generators x1 even, x2 odd; relator [x2,x2]; truncation at degree 4
  GradedAlphabet alphabet({{"x1", 0}, {"x2", 1}});
  TruncatedFrame frame(alphabet, 4);
  std::vector<SparseVector> seeds = {
      frame.supercommutator(frame.generator_poly(1), frame.generator_poly(1))};
  const Subspace f3 = frame.lower_central(3);
  for (const auto& row : f3.rows()) seeds.push_back(row);
  Subspace relator_ideal = freelie::ideal_closure(seeds, frame);

  CHECK(freelie::gamma_series(relator_ideal, frame, 1) == relator_ideal);
  Subspace gamma3 = freelie::gamma_series(relator_ideal, frame, 3);
  CHECK(frame.graded_dims_of(gamma3) == SuperDim{1, 1});

  Subspace f2 = freelie::gamma_series(frame.lower_central(1), frame, 2);
  CHECK(f2 == frame.lower_central(2));
}
