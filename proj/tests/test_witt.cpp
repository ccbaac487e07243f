#include <algorithm>
#include <map>
#include <vector>

#include "doctest.h"
#include "supermult/witt.hpp"

using namespace supermult;
using witt::MultiDegree;
using witt::ParitySignature;

namespace {

// Independent oracle: W(α) counts the Lyndon words of content α (words
// lexicographically smaller than all their proper rotations). Brute force over
// all multiset permutations.
long long lyndon_count(const std::vector<long long>& content) {
  std::vector<int> word;
  for (std::size_t letter = 0; letter < content.size(); ++letter) {
    word.insert(word.end(), static_cast<std::size_t>(content[letter]), static_cast<int>(letter));
  }
  if (word.empty()) return 0;
  std::sort(word.begin(), word.end());
  long long count = 0;
  do {
    bool lyndon = true;
    for (std::size_t r = 1; r < word.size() && lyndon; ++r) {
      std::vector<int> rotated(word.begin() + static_cast<std::ptrdiff_t>(r), word.end());
      rotated.insert(rotated.end(), word.begin(), word.begin() + static_cast<std::ptrdiff_t>(r));
      if (!std::lexicographical_compare(word.begin(), word.end(), rotated.begin(), rotated.end())) {
        lyndon = false;
      }
    }
    if (lyndon) ++count;
  } while (std::next_permutation(word.begin(), word.end()));
  return count;
}

// Naive Moebius via full factorization, as a cross-check.
int moebius_naive(long long n) {
  int factors = 0;
  for (long long p = 2; p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      ++factors;
    }
  }
  return factors % 2 == 0 ? 1 : -1;
}

}  // namespace

TEST_CASE("moebius values") {
  CHECK(witt::moebius(1) == 1);
  CHECK(witt::moebius(4) == 0);
  CHECK(witt::moebius(6) == 1);
  for (long long k = 1; k <= 100; ++k) CHECK(witt::moebius(k) == moebius_naive(k));
  CHECK_THROWS_AS(witt::moebius(0), PreconditionError);
}

TEST_CASE("witt ranks against the Lyndon oracle") {
  CHECK(witt::witt_rank(MultiDegree{{1, 1}}) == 1);
  CHECK(witt::witt_rank(MultiDegree{{3}}) == 0);
  CHECK(witt::witt_rank(MultiDegree{{2, 1}}) == 1);
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) {
      for (int c = 0; c <= 3; ++c) {
        if (a + b + c < 1) continue;
        MultiDegree alpha{{a, b, c}};
        CHECK(witt::witt_rank(alpha) == lyndon_count(alpha.entries));
      }
    }
  }
  CHECK_THROWS_AS(witt::witt_rank(MultiDegree{{0, 0}}), PreconditionError);
}

TEST_CASE("super-witt ranks") {
  CHECK(witt::super_witt_rank(ParitySignature{0, 1}, MultiDegree{{2}}) == 1);
  CHECK(witt::super_witt_rank(ParitySignature{2, 0}, MultiDegree{{2, 2}}) ==
        witt::witt_rank(MultiDegree{{2, 2}}));
  // one even and one odd generator, degree 3: total 2 split (1|1)
  SuperDim layer3 = witt::layer_dim(ParitySignature{1, 1}, 3);
  CHECK(layer3 == SuperDim{1, 1});
  // SW(α) = W(α) whenever some entry is odd
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) {
      if (a + b < 1 || (a % 2 == 0 && b % 2 == 0)) continue;
      MultiDegree alpha{{a, b}};
      CHECK(witt::super_witt_rank(ParitySignature{1, 1}, alpha) == witt::witt_rank(alpha));
    }
  }
  // the square contribution: SW(2,2) on (1|1) picks up W(1,1)
  CHECK(witt::super_witt_rank(ParitySignature{1, 1}, MultiDegree{{2, 2}}) ==
        witt::witt_rank(MultiDegree{{2, 2}}) + witt::witt_rank(MultiDegree{{1, 1}}));
}

TEST_CASE("graded dimension formulas") {
  auto d1 = witt::graded_dims(ParitySignature{0, 1}, 2);
  CHECK(d1.dim == 1);
  CHECK(d1.dim_plus == 1);
  CHECK(d1.dim_minus == 0);
  CHECK(witt::graded_dims(ParitySignature{2, 0}, 3).dim == 2);
  auto d3 = witt::graded_dims(ParitySignature{1, 1}, 1);
  CHECK(d3.dim == 2);
  CHECK(d3.sdim == 0);
  CHECK_THROWS_AS(witt::graded_dims(ParitySignature{1, 0}, 0), PreconditionError);
}

TEST_CASE("layer dimensions") {
  CHECK(witt::layer_dim(ParitySignature{1, 1}, 3) == SuperDim{1, 1});
  CHECK(witt::layer_dim(ParitySignature{1, 1}, 4) == SuperDim{2, 2});
  CHECK(witt::layer_dim(ParitySignature{2, 0}, 2) == SuperDim{1, 0});
  // consistency: Σ_{|α|=r} SW(α) = dim L_r with the parity split, small grid
  for (int m = 0; m <= 4; ++m) {
    for (int n = 0; n <= 4; ++n) {
      if (m + n < 1) continue;
      ParitySignature sig{m, n};
      auto parities = sig.parities();
      for (long long r = 1; r <= 8; ++r) {
        SuperDim split;
        witt::for_each_multidegree(sig.size(), r, [&](const MultiDegree& alpha) {
          long long sw = witt::super_witt_rank(parities, alpha);
          (witt::multidegree_parity(parities, alpha) ? split.odd : split.even) += sw;
        });
        auto dims = witt::graded_dims(sig, r);
        CHECK(split.total() == dims.dim);
        CHECK(split.even == dims.dim_plus);
        CHECK(split.odd == dims.dim_minus);
        CHECK(split == witt::layer_dim(sig, r));
      }
    }
  }
}
