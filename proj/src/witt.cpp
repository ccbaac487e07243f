#include "supermult/witt.hpp"

#include <gmpxx.h>

#include <cstdlib>
#include <numeric>

namespace supermult::witt {

namespace {

long long to_ll_checked(const mpz_class& z, const char* what) {
  if (!z.fits_slong_p()) {
    throw ResourceError(std::string(what) + ": value exceeds 64-bit integer range");
  }
  return z.get_si();
}

mpz_class ipow(long long base, long long exp) {
  mpz_class b(static_cast<long>(base));
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp));
  return r;
}

mpz_class factorial(long long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

// (|α|)! / Π α_i!
mpz_class multinomial(const MultiDegree& alpha) {
  mpz_class num = factorial(alpha.total());
  for (long long a : alpha.entries) {
    mpz_class f = factorial(a);
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), f.get_mpz_t());
  }
  return num;
}

std::vector<long long> divisors(long long n) {
  std::vector<long long> small, large;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

void check_alpha(const MultiDegree& alpha) {
  for (long long a : alpha.entries) {
    if (a < 0) throw PreconditionError("multidegree entries must be non-negative");
  }
  if (alpha.total() < 1) throw PreconditionError("multidegree must have |alpha| >= 1");
}

}  // namespace

std::vector<int> ParitySignature::parities() const {
  if (even < 0 || odd < 0 || even + odd < 1) {
    throw PreconditionError("parity signature requires m, n >= 0 and m + n >= 1");
  }
  std::vector<int> p(static_cast<std::size_t>(even), 0);
  p.insert(p.end(), static_cast<std::size_t>(odd), 1);
  return p;
}

long long MultiDegree::total() const {
  return std::accumulate(entries.begin(), entries.end(), 0LL);
}

int moebius(long long k) {
  if (k < 1) throw PreconditionError("moebius requires k >= 1");
  int factors = 0;
  for (long long p = 2; p * p <= k; ++p) {
    if (k % p == 0) {
      k /= p;
      if (k % p == 0) return 0;
      ++factors;
    }
  }
  if (k > 1) ++factors;
  return (factors % 2 == 0) ? 1 : -1;
}

long long witt_rank(const MultiDegree& alpha) {
  check_alpha(alpha);
  long long g = 0;
  for (long long a : alpha.entries) g = std::gcd(g, a);
  const long long degree = alpha.total();

  mpz_class acc = 0;
  for (long long e : divisors(g)) {
    int mu = moebius(e);
    if (mu == 0) continue;
    MultiDegree scaled;
    scaled.entries.reserve(alpha.entries.size());
    for (long long a : alpha.entries) scaled.entries.push_back(a / e);
    acc += mu * multinomial(scaled);
  }
  if (acc % static_cast<long>(degree) != 0) {
    throw ConsistencyError("witt_rank: Moebius sum is not divisible by |alpha|");
  }
  mpz_class w = acc / static_cast<long>(degree);
  if (w < 0) throw ConsistencyError("witt_rank: negative rank");
  return to_ll_checked(w, "witt_rank");
}

int multidegree_parity(const std::vector<int>& parities, const MultiDegree& alpha) {
  if (parities.size() != alpha.entries.size()) {
    throw PreconditionError("multidegree length must equal alphabet size");
  }
  long long odd_weight = 0;
  for (std::size_t i = 0; i < parities.size(); ++i) {
    if (parities[i]) odd_weight += alpha.entries[i];
  }
  return static_cast<int>(odd_weight % 2);
}

long long super_witt_rank(const std::vector<int>& parities, const MultiDegree& alpha) {
  if (parities.size() != alpha.entries.size()) {
    throw PreconditionError("multidegree length must equal alphabet size");
  }
  check_alpha(alpha);
  long long w = witt_rank(alpha);

  bool all_even = true;
  long long odd_weight = 0;
  for (std::size_t i = 0; i < parities.size(); ++i) {
    if (alpha.entries[i] % 2 != 0) all_even = false;
    if (parities[i]) odd_weight += alpha.entries[i];
  }
  // β = 1 exactly when α/2 is a valid multidegree whose monomials are odd.
  if (!all_even || (odd_weight / 2) % 2 == 0) return w;

  MultiDegree half;
  half.entries.reserve(alpha.entries.size());
  for (long long a : alpha.entries) half.entries.push_back(a / 2);
  return w + witt_rank(half);
}

long long super_witt_rank(const ParitySignature& sig, const MultiDegree& alpha) {
  return super_witt_rank(sig.parities(), alpha);
}

GradedDims graded_dims(const ParitySignature& sig, long long r) {
  if (r < 1) throw PreconditionError("graded_dims requires r >= 1");
  if (sig.even < 0 || sig.odd < 0 || sig.size() < 1) {
    throw PreconditionError("parity signature requires m, n >= 0 and m + n >= 1");
  }
  const long long m = sig.even;
  const long long n = sig.odd;

  mpz_class total = 0, plus2 = 0, minus2 = 0, sdim = 0;
  for (long long a : divisors(r)) {
    int mu = moebius(a);
    if (mu == 0) continue;
    long long mixed_base = (a % 2 == 0) ? m - n : m + n;
    mpz_class mixed = ipow(std::abs(mixed_base), r / a);
    if (mixed_base < 0 && (r / a) % 2 != 0) mixed = -mixed;
    mpz_class diff = ipow(std::abs(m - n), r / a);
    if (m - n < 0 && (r / a) % 2 != 0) diff = -diff;
    total += mu * mixed;
    plus2 += mu * (mixed + diff);
    minus2 += mu * (mixed - diff);
    sdim += mu * diff;
  }
  auto exact = [&](mpz_class v, long long d, const char* what) {
    if (v % static_cast<long>(d) != 0) {
      throw ConsistencyError(std::string("graded_dims: ") + what + " not integral");
    }
    return mpz_class(v / static_cast<long>(d));
  };
  GradedDims out;
  out.dim = to_ll_checked(exact(total, r, "dim"), "graded_dims");
  out.dim_plus = to_ll_checked(exact(plus2, 2 * r, "dim_plus"), "graded_dims");
  out.dim_minus = to_ll_checked(exact(minus2, 2 * r, "dim_minus"), "graded_dims");
  out.sdim = to_ll_checked(exact(sdim, r, "sdim"), "graded_dims");
  if (out.dim != out.dim_plus + out.dim_minus || out.sdim != out.dim_plus - out.dim_minus) {
    throw ConsistencyError("graded_dims: parity split does not sum");
  }
  return out;
}

void for_each_multidegree(int parts, long long total,
                          const std::function<void(const MultiDegree&)>& visit) {
  if (parts <= 0) return;
  MultiDegree alpha;
  alpha.entries.assign(static_cast<std::size_t>(parts), 0);
  // Recursive composition enumeration, leftmost position outermost.
  auto rec = [&](auto&& self, int pos, long long remaining) -> void {
    if (pos == parts - 1) {
      alpha.entries[static_cast<std::size_t>(pos)] = remaining;
      visit(alpha);
      return;
    }
    for (long long v = 0; v <= remaining; ++v) {
      alpha.entries[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, total);
}

SuperDim layer_dim(const std::vector<int>& parities, long long n) {
  if (n < 1) throw PreconditionError("layer_dim requires n >= 1");
  SuperDim out;
  for_each_multidegree(static_cast<int>(parities.size()), n, [&](const MultiDegree& alpha) {
    long long sw = super_witt_rank(parities, alpha);
    if (sw == 0) return;
    if (multidegree_parity(parities, alpha) == 0) {
      out.even += sw;
    } else {
      out.odd += sw;
    }
  });
  return out;
}

SuperDim layer_dim(const ParitySignature& sig, long long n) {
  return layer_dim(sig.parities(), n);
}

}  // namespace supermult::witt
