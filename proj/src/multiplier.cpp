#include "supermult/multiplier.hpp"

#include <sstream>

namespace supermult::multiplier {

namespace {

long long exact_div(long long value, long long divisor, const char* what) {
  if (value % divisor != 0) {
    throw ConsistencyError(std::string(what) + ": expression " + std::to_string(value) +
                           " is not divisible by " + std::to_string(divisor));
  }
  return value / divisor;
}

void require_nonnegative(const SuperDim& d, const char* what) {
  if (d.even < 0 || d.odd < 0) {
    throw ConsistencyError(std::string(what) + ": negative dimension " + d.str());
  }
}

long long cube(long long v) { return v * v * v; }

}  // namespace

MultiplierResult abelian_multiplier(int m, int n, int c) {
  if (m < 0 || n < 0) throw PreconditionError("abelian dimensions must be non-negative");
  if (c < 1) throw PreconditionError("multiplier order c must be >= 1");
  SuperDim dims;
  if (m + n > 0) {
    dims = witt::layer_dim(witt::ParitySignature{m, n}, c + 1);
  }
  return {dims, "abelian-layer-count", c};
}

SuperDim abelian_multiplier2(int m, int n) {
  if (m < 0 || n < 0) throw PreconditionError("abelian dimensions must be non-negative");
  const long long M = m, N = n;
  SuperDim out{exact_div(cube(M) + 3 * N * N * M - M, 3, "abelian_multiplier2"),
               exact_div(3 * M * M * N + cube(N) - N, 3, "abelian_multiplier2")};
  require_nonnegative(out, "abelian_multiplier2");
  return out;
}

SuperDim tensor_abelian(int m, int n, int r, int s) {
  if (m < 0 || n < 0 || r < 0 || s < 0) {
    throw PreconditionError("tensor factors must be non-negative");
  }
  const long long M = m, N = n, R = r, S = s;
  return {M * R + N * S, M * S + N * R};
}

SuperDim tensor_abelian(const SuperDim& a, const SuperDim& b) {
  return {a.even * b.even + a.odd * b.odd, a.even * b.odd + a.odd * b.even};
}

SuperDim heisenberg_even_multiplier2(int m, int n) {
  if (m < 0 || n < 0 || m + n < 1) {
    throw PreconditionError("heisenberg_even requires m, n >= 0 with m + n >= 1");
  }
  if (m == 1 && n == 0) return {5, 0};
  if (m == 0 && n == 1) return {0, 0};
  const long long M = m, N = n;
  SuperDim out{exact_div(8 * cube(M) + 6 * N * N * M - 2 * M, 3, "heisenberg_even_multiplier2"),
               exact_div(cube(N) + 12 * M * M * N - N, 3, "heisenberg_even_multiplier2")};
  require_nonnegative(out, "heisenberg_even_multiplier2");
  return out;
}

SuperDim heisenberg_odd_multiplier2(int m) {
  if (m < 1) throw PreconditionError("heisenberg_odd requires m >= 1");
  if (m == 1) return {2, 2};
  const long long M = m;
  long long v = exact_div(4 * cube(M) - M, 3, "heisenberg_odd_multiplier2");
  return {v, v};
}

FamilyDesc FamilyDesc::A(int m, int n) {
  if (m < 0 || n < 0) throw PreconditionError("A(m|n) requires non-negative dimensions");
  FamilyDesc f;
  f.kind_ = Kind::Abelian;
  f.m_ = m;
  f.n_ = n;
  return f;
}

FamilyDesc FamilyDesc::Heven(int m, int n) {
  if (m < 0 || n < 0 || m + n < 1) throw PreconditionError("Heven requires m + n >= 1");
  FamilyDesc f;
  f.kind_ = Kind::HeisenbergEven;
  f.m_ = m;
  f.n_ = n;
  return f;
}

FamilyDesc FamilyDesc::Hodd(int m) {
  if (m < 1) throw PreconditionError("Hodd requires m >= 1");
  FamilyDesc f;
  f.kind_ = Kind::HeisenbergOdd;
  f.m_ = m;
  return f;
}

FamilyDesc FamilyDesc::Sum(FamilyDesc left, FamilyDesc right) {
  FamilyDesc f;
  f.kind_ = Kind::DirectSum;
  f.left_ = std::make_shared<FamilyDesc>(std::move(left));
  f.right_ = std::make_shared<FamilyDesc>(std::move(right));
  return f;
}

SuperDim FamilyDesc::dims() const {
  switch (kind_) {
    case Kind::Abelian:
      return {m_, n_};
    case Kind::HeisenbergEven:
      return {2 * m_ + 1, n_};
    case Kind::HeisenbergOdd:
      return {m_, m_ + 1};
    case Kind::DirectSum:
      return left().dims() + right().dims();
  }
  throw ConsistencyError("unreachable family kind");
}

SuperDim FamilyDesc::ab_dims() const {
  switch (kind_) {
    case Kind::Abelian:
      return {m_, n_};
    case Kind::HeisenbergEven:
      return {2 * m_, n_};
    case Kind::HeisenbergOdd:
      return {m_, m_};
    case Kind::DirectSum:
      return left().ab_dims() + right().ab_dims();
  }
  throw ConsistencyError("unreachable family kind");
}

std::string FamilyDesc::name() const {
  switch (kind_) {
    case Kind::Abelian:
      return "A:" + std::to_string(m_) + "," + std::to_string(n_);
    case Kind::HeisenbergEven:
      return "Heven:" + std::to_string(m_) + "," + std::to_string(n_);
    case Kind::HeisenbergOdd:
      return "Hodd:" + std::to_string(m_);
    case Kind::DirectSum:
      return left().name() + "+" + right().name();
  }
  throw ConsistencyError("unreachable family kind");
}

namespace {

std::pair<int, int> parse_two_ints(const std::string& text, const std::string& context) {
  auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw ParseError("expected 'm,n' after '" + context + "', got '" + text + "'");
  }
  try {
    std::size_t used = 0;
    int m = std::stoi(text.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(text);
    std::string rest = text.substr(comma + 1);
    int n = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    return {m, n};
  } catch (const std::exception&) {
    throw ParseError("invalid family parameters '" + text + "'");
  }
}

FamilyDesc parse_atom(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw ParseError("family must look like A:m,n | Heven:m,n | Hodd:m, got '" + text + "'");
  }
  std::string head = text.substr(0, colon);
  std::string args = text.substr(colon + 1);
  try {
    if (head == "A") {
      auto [m, n] = parse_two_ints(args, head);
      return FamilyDesc::A(m, n);
    }
    if (head == "Heven") {
      auto [m, n] = parse_two_ints(args, head);
      return FamilyDesc::Heven(m, n);
    }
    if (head == "Hodd") {
      std::size_t used = 0;
      int m = std::stoi(args, &used);
      if (used != args.size()) throw ParseError("invalid Hodd parameter '" + args + "'");
      return FamilyDesc::Hodd(m);
    }
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("invalid family '") + text + "': " + e.what());
  } catch (const std::invalid_argument&) {
    throw ParseError("invalid family parameter in '" + text + "'");
  } catch (const std::out_of_range&) {
    throw ParseError("family parameter out of range in '" + text + "'");
  }
  throw ParseError("unknown family head '" + head + "'");
}

}  // namespace

FamilyDesc parse_family(const std::string& text) {
  std::string body = text;
  if (body.rfind("sum:", 0) == 0) body = body.substr(4);
  std::vector<FamilyDesc> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t plus = body.find('+', start);
    std::string piece =
        (plus == std::string::npos) ? body.substr(start) : body.substr(start, plus - start);
    if (piece.empty()) throw ParseError("empty family component in '" + text + "'");
    parts.push_back(parse_atom(piece));
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  FamilyDesc result = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    result = FamilyDesc::Sum(std::move(result), parts[i]);
  }
  return result;
}

superalg::StructLSA realize(const FamilyDesc& family) {
  switch (family.kind()) {
    case FamilyDesc::Kind::Abelian:
      return superalg::StructLSA::abelian(family.m(), family.n());
    case FamilyDesc::Kind::HeisenbergEven:
      return superalg::StructLSA::heisenberg_even(family.m(), family.n());
    case FamilyDesc::Kind::HeisenbergOdd:
      return superalg::StructLSA::heisenberg_odd(family.m());
    case FamilyDesc::Kind::DirectSum:
      return superalg::StructLSA::direct_sum(realize(family.left()), realize(family.right()));
  }
  throw ConsistencyError("unreachable family kind");
}

MultiplierResult multiplier2_closed(const FamilyDesc& family) {
  switch (family.kind()) {
    case FamilyDesc::Kind::Abelian:
      return {abelian_multiplier2(family.m(), family.n()), "abelian-cubic-formula", 2};
    case FamilyDesc::Kind::HeisenbergEven:
      return {heisenberg_even_multiplier2(family.m(), family.n()), "heisenberg-even-closed-form",
              2};
    case FamilyDesc::Kind::HeisenbergOdd:
      return {heisenberg_odd_multiplier2(family.m()), "heisenberg-odd-closed-form", 2};
    case FamilyDesc::Kind::DirectSum:
      return {direct_sum_multiplier2(family.left(), family.right()), "direct-sum-decomposition",
              2};
  }
  throw UnsupportedFamilyError("no closed form for this family; use the oracle");
}

SuperDim direct_sum_multiplier2(const FamilyDesc& a, const FamilyDesc& b) {
  SuperDim m2a = multiplier2_closed(a).dims;
  SuperDim m2b = multiplier2_closed(b).dims;
  SuperDim ab1 = a.ab_dims();
  SuperDim ab2 = b.ab_dims();
  SuperDim t1 = tensor_abelian(tensor_abelian(ab2, ab1), ab1);
  SuperDim t2 = tensor_abelian(tensor_abelian(ab2, ab1), ab2);
  return m2a + m2b + t1 + t2;
}

SuperDim dim1_derived_multiplier2(int k, int l, const superalg::Dim1Family& family) {
  const long long K = k, L = l;
  SuperDim out;
  if (family.kind == superalg::Dim1Family::Kind::HeisenbergEven) {
    if (2 * family.m + 1 + family.abelian_even != k || family.n + family.abelian_odd != l) {
      throw PreconditionError("family data inconsistent with dim (k|l)");
    }
    long long base_even =
        exact_div(K * (K - 1) * (K + 1), 3, "dim1_derived_multiplier2") + (K - 1) * (L * L - K);
    long long base_odd =
        exact_div(L * (L - 1) * (L + 1), 3, "dim1_derived_multiplier2") + L * (K - 1) * (K - 1);
    // H(0,1) summands follow the base formula: expanding the direct-sum
    // decomposition with M²(H(0,1)) = 0 leaves no constant term, as the
    // oracle confirms on every instance (e.g. H(0,1) itself at (1|1)).
    if (family.m == 1 && family.n == 0) {
      out = {base_even + 3, base_odd};
    } else {
      out = {base_even, base_odd};
    }
  } else {
    if (family.m + family.abelian_even != k || family.m + 1 + family.abelian_odd != l) {
      throw PreconditionError("family data inconsistent with dim (k|l)");
    }
    long long base_even =
        exact_div(K * (K + 1) * (K - 1), 3, "dim1_derived_multiplier2") + K * (L - 1) * (L - 1);
    long long base_odd = exact_div(L * (L - 1) * (L + 1), 3, "dim1_derived_multiplier2") +
                         (L - 1) * (K * K - L);
    if (family.m == 1) {
      out = {base_even + 1, base_odd + 1};
    } else {
      out = {base_even, base_odd};
    }
  }
  require_nonnegative(out, "dim1_derived_multiplier2");
  return out;
}

long long dim1_base_total(int k, int l) {
  // (1/3)t^3 - t^2 + (2/3)t = t(t-1)(t-2)/3, an integer for every t.
  const long long t = k + l;
  return exact_div(t * (t - 1) * (t - 2), 3, "dim1_base_total");
}

int dim1_total_offset(const superalg::Dim1Family& family) {
  if (family.kind == superalg::Dim1Family::Kind::HeisenbergEven) {
    return (family.m == 1 && family.n == 0) ? 3 : 0;
  }
  return family.m == 1 ? 2 : 0;
}

Bound2 multiplier2_upper_bound(int k, int l, int r, int s) {
  if (r + s < 1) {
    throw PreconditionError("upper bound requires r + s >= 1 (abelian case has its own formula)");
  }
  if (k < 0 || l < 0 || r < 0 || s < 0 || r + s > k + l) {
    throw PreconditionError("invalid dimension data for the upper bound");
  }
  const long long K = k, L = l, R = r, S = s;
  const long long d = K + L, rs = R + S;
  Bound2 out;
  out.fine = exact_div((d - rs) * ((d + 2 * rs - 2) * (d - rs - 1) + 3 * (rs - 1)), 3,
                       "multiplier2_upper_bound") +
             3;
  out.coarse = exact_div(d * (d - 1) * (d - 2), 3, "multiplier2_upper_bound") + 3;
  out.coarse_equality_attainable = (r == 1 && s == 0 && k >= 3);
  if (out.coarse_equality_attainable) {
    out.equality_family =
        "Heven:1,0+A:" + std::to_string(k - 3) + "," + std::to_string(l);
  }
  return out;
}

long long gen_heisenberg_bound(int m, int n, int r, int s, int c) {
  if (r < 0 || s < 0 || r > m || s > n) {
    throw PreconditionError("generalized Heisenberg data requires 0 <= r <= m, 0 <= s <= n");
  }
  if (c < 1) throw PreconditionError("multiplier order c must be >= 1");
  auto layer_total = [&](int even, int odd) -> long long {
    if (even + odd == 0) return 0;
    SuperDim d = witt::layer_dim(witt::ParitySignature{even, odd}, c + 1);
    return d.total();
  };
  long long bound = layer_total(m - r, n - s) + layer_total(r, s);
  long long power = 1;
  for (int i = 0; i < c; ++i) power *= (m + n - r - s);
  return bound + power * (r + s);
}

long long abelian_threshold(int k, int l) {
  if (k + l < 3) throw PreconditionError("threshold requires k + l >= 3");
  const long long d = k + l;
  return exact_div(d * (d + 1) * (d - 1), 3, "abelian_threshold");
}

bool abelian_threshold_check(int k, int l, long long m2_total) {
  return m2_total >= abelian_threshold(k, l);
}

}  // namespace supermult::multiplier
