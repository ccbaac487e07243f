#include "supermult/exactlin.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <sstream>

namespace supermult {

namespace {

std::atomic<UniverseId> g_next_universe{1};

void require_same_universe(UniverseId a, UniverseId b, const char* where) {
  if (a != b) {
    throw StructureError(std::string(where) + ": mixed key universes (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
  }
}

// An untyped (id 0) zero object is compatible with anything; otherwise ids must match.
bool untyped_zero(UniverseId u, bool zero) { return u == 0 && zero; }

}  // namespace

UniverseId fresh_universe() { return g_next_universe.fetch_add(1); }

SparseVector SparseVector::unit(Key key, UniverseId universe) {
  SparseVector v(universe);
  v.terms_.emplace_back(key, Scalar(1));
  return v;
}

SparseVector SparseVector::from_terms(std::vector<std::pair<Key, Scalar>> terms,
                                      UniverseId universe) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector v(universe);
  for (auto& [k, c] : terms) {
    if (!v.terms_.empty() && v.terms_.back().first == k) {
      v.terms_.back().second += c;
    } else {
      v.terms_.emplace_back(k, std::move(c));
    }
  }
  std::erase_if(v.terms_, [](const auto& t) { return t.second == 0; });
  return v;
}

Scalar SparseVector::coeff(Key key) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const auto& t, Key k) { return t.first < k; });
  if (it != terms_.end() && it->first == key) return it->second;
  return Scalar(0);
}

SparseVector& SparseVector::axpy(const Scalar& c, const SparseVector& v) {
  if (c == 0 || v.is_zero()) return *this;
  if (untyped_zero(universe_, is_zero())) {
    universe_ = v.universe();
  } else if (!untyped_zero(v.universe(), false)) {
    require_same_universe(universe_, v.universe(), "axpy");
  }
  std::vector<std::pair<Key, Scalar>> merged;
  merged.reserve(terms_.size() + v.terms_.size());
  auto a = terms_.begin();
  auto b = v.terms_.begin();
  while (a != terms_.end() && b != v.terms_.end()) {
    if (a->first < b->first) {
      merged.push_back(std::move(*a++));
    } else if (b->first < a->first) {
      merged.emplace_back(b->first, c * b->second);
      ++b;
    } else {
      Scalar s = a->second + c * b->second;
      if (s != 0) merged.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  for (; a != terms_.end(); ++a) merged.push_back(std::move(*a));
  for (; b != v.terms_.end(); ++b) merged.emplace_back(b->first, c * b->second);
  terms_ = std::move(merged);
  return *this;
}

SparseVector& SparseVector::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, s] : terms_) s *= c;
  return *this;
}

SparseVector SparseVector::operator+(const SparseVector& v) const {
  SparseVector r = *this;
  r.axpy(Scalar(1), v);
  return r;
}

SparseVector SparseVector::operator-(const SparseVector& v) const {
  SparseVector r = *this;
  r.axpy(Scalar(-1), v);
  return r;
}

SparseVector SparseVector::scaled(const Scalar& c) const {
  SparseVector r = *this;
  r *= c;
  return r;
}

std::string SparseVector::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) out << " + ";
    out << c.get_str() << "*[" << k << "]";
    first = false;
  }
  return out.str();
}

void EchelonBuilder::adopt_universe(const SparseVector& v) {
  if (!universe_set_) {
    universe_ = v.universe();
    universe_set_ = true;
  } else if (universe_ != 0 || !rows_.empty() || v.universe() != 0) {
    require_same_universe(universe_, v.universe(), "echelon");
  }
}

SparseVector EchelonBuilder::reduce(SparseVector v) const {
  if (universe_set_ && !v.is_zero() && !rows_.empty()) {
    require_same_universe(universe_, v.universe(), "reduce");
  }
  // Row tails only contain keys larger than their pivot, so positions already
  // scanned as non-pivots stay non-pivots and the sweep resumes in place.
  std::size_t from = 0;
  while (true) {
    bool hit = false;
    const auto& terms = v.terms();
    for (std::size_t i = from; i < terms.size(); ++i) {
      auto it = rows_.find(terms[i].first);
      if (it != rows_.end()) {
        v.axpy(-terms[i].second, it->second);
        from = i;
        hit = true;
        break;
      }
    }
    if (!hit) break;
  }
  return v;
}

const SparseVector* EchelonBuilder::insert(SparseVector v) {
  if (v.is_zero()) return nullptr;
  adopt_universe(v);
  v = reduce(std::move(v));
  if (v.is_zero()) return nullptr;
  v *= Scalar(1) / v.leading_coeff();
  Key pivot = v.leading_key();
  auto [it, fresh] = rows_.emplace(pivot, std::move(v));
  if (!fresh) throw ConsistencyError("echelon: duplicate pivot after reduction");
  return &it->second;
}

Subspace EchelonBuilder::finalize() && {
  Subspace result(universe_);
  result.rows_.reserve(rows_.size());
  // Back-substitute in descending pivot order; each row only meets fully
  // reduced rows with larger pivots, already placed in result.
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    SparseVector row = std::move(it->second);
    std::size_t from = 0;
    while (true) {
      bool hit = false;
      const auto& terms = row.terms();
      for (std::size_t i = from; i < terms.size(); ++i) {
        Key key = terms[i].first;
        if (key == it->first) continue;
        auto done = std::lower_bound(
            result.rows_.begin(), result.rows_.end(), key,
            [](const SparseVector& r, Key k) { return r.leading_key() > k; });
        if (done != result.rows_.end() && done->leading_key() == key) {
          row.axpy(-terms[i].second, *done);
          from = i;
          hit = true;
          break;
        }
      }
      if (!hit) break;
    }
    result.rows_.push_back(std::move(row));
  }
  std::reverse(result.rows_.begin(), result.rows_.end());
  return result;
}

Subspace Subspace::span(std::span<const SparseVector> vectors) {
  EchelonBuilder builder;
  for (const auto& v : vectors) builder.insert(v);
  return std::move(builder).finalize();
}

Subspace Subspace::span(std::span<const SparseVector> vectors, UniverseId universe) {
  EchelonBuilder builder(universe);
  for (const auto& v : vectors) builder.insert(v);
  return std::move(builder).finalize();
}

SparseVector Subspace::reduce(SparseVector v) const {
  if (!v.is_zero() && !rows_.empty()) require_same_universe(universe_, v.universe(), "reduce");
  // Canonical rows contain no other pivot, so one ascending pass suffices.
  std::size_t from = 0;
  while (true) {
    bool hit = false;
    const auto& terms = v.terms();
    for (std::size_t i = from; i < terms.size(); ++i) {
      Key key = terms[i].first;
      auto it = std::lower_bound(rows_.begin(), rows_.end(), key,
                                 [](const SparseVector& r, Key k) { return r.leading_key() < k; });
      if (it != rows_.end() && it->leading_key() == key) {
        v.axpy(-terms[i].second, *it);
        from = i;
        hit = true;
        break;
      }
    }
    if (!hit) break;
  }
  return v;
}

bool Subspace::contains(const SparseVector& v) const { return reduce(v).is_zero(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.dim() == 0) return true;
  require_same_universe(universe_, other.universe_, "contains");
  for (const auto& row : other.rows_) {
    if (!contains(row)) return false;
  }
  return true;
}

std::optional<std::vector<Scalar>> Subspace::coordinates(const SparseVector& v) const {
  std::vector<Scalar> coords(rows_.size(), Scalar(0));
  SparseVector r = v;
  if (!r.is_zero() && !rows_.empty()) require_same_universe(universe_, r.universe(), "coordinates");
  while (!r.is_zero()) {
    Key key = r.leading_key();
    auto it = std::lower_bound(rows_.begin(), rows_.end(), key,
                               [](const SparseVector& row, Key k) { return row.leading_key() < k; });
    if (it == rows_.end() || it->leading_key() != key) return std::nullopt;
    Scalar c = r.leading_coeff();
    coords[static_cast<std::size_t>(it - rows_.begin())] = c;
    r.axpy(-c, *it);
  }
  return coords;
}

namespace {

void require_compatible(const Subspace& a, const Subspace& b, const char* where) {
  if (a.universe() == b.universe()) return;
  if (untyped_zero(a.universe(), a.dim() == 0) || untyped_zero(b.universe(), b.dim() == 0)) return;
  require_same_universe(a.universe(), b.universe(), where);
}

}  // namespace

Subspace sum(const Subspace& a, const Subspace& b) {
  require_compatible(a, b, "sum");
  if (a.dim() == 0) return b;
  if (b.dim() == 0) return a;
  EchelonBuilder builder(a.universe());
  for (const auto& r : a.rows()) builder.insert(r);
  for (const auto& r : b.rows()) builder.insert(r);
  return std::move(builder).finalize();
}

namespace {

// Dense re-indexing of the keys in play, so doubled keys stay within range.
std::vector<Key> collect_keys(const Subspace& a, const Subspace& b) {
  std::vector<Key> keys;
  for (const auto& r : a.rows())
    for (const auto& [k, c] : r.terms()) keys.push_back(k);
  for (const auto& r : b.rows())
    for (const auto& [k, c] : r.terms()) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys;
}

Key mapped(const std::vector<Key>& keys, Key k) {
  auto it = std::lower_bound(keys.begin(), keys.end(), k);
  return static_cast<Key>(it - keys.begin());
}

}  // namespace

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_compatible(a, b, "intersect");
  if (a.dim() == 0) return a;
  if (b.dim() == 0) return b;

  const std::vector<Key> keys = collect_keys(a, b);
  const Key offset = keys.size();
  const UniverseId scratch = fresh_universe();

  EchelonBuilder builder(scratch);
  for (const auto& r : a.rows()) {
    std::vector<std::pair<Key, Scalar>> terms;
    terms.reserve(2 * r.term_count());
    for (const auto& [k, c] : r.terms()) {
      Key m = mapped(keys, k);
      terms.emplace_back(m, c);
      terms.emplace_back(offset + m, c);
    }
    builder.insert(SparseVector::from_terms(std::move(terms), scratch));
  }
  for (const auto& r : b.rows()) {
    std::vector<std::pair<Key, Scalar>> terms;
    terms.reserve(r.term_count());
    for (const auto& [k, c] : r.terms()) terms.emplace_back(mapped(keys, k), c);
    builder.insert(SparseVector::from_terms(std::move(terms), scratch));
  }

  // Rows whose left block vanished carry intersection vectors in the right block.
  std::vector<SparseVector> meet;
  for (const auto& [pivot, row] : builder.rows()) {
    if (pivot < offset) continue;
    std::vector<std::pair<Key, Scalar>> terms;
    terms.reserve(row.term_count());
    for (const auto& [k, c] : row.terms()) terms.emplace_back(keys[k - offset], c);
    meet.push_back(SparseVector::from_terms(std::move(terms), a.universe()));
  }
  return Subspace::span(meet, a.universe());
}

int quotient_dim(const Subspace& a, const Subspace& b) {
  require_compatible(a, b, "quotient_dim");
  if (b.dim() > 0 && !a.contains(b)) {
    throw PreconditionError("quotient_dim: denominator is not contained in numerator");
  }
  return a.dim() - b.dim();
}

std::vector<SparseVector> null_combinations(std::span<const SparseVector> vectors,
                                            UniverseId out_universe) {
  std::vector<Key> keys;
  for (const auto& v : vectors)
    for (const auto& [k, c] : v.terms()) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  const Key offset = keys.size();
  const UniverseId scratch = fresh_universe();

  EchelonBuilder builder(scratch);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    std::vector<std::pair<Key, Scalar>> terms;
    terms.reserve(vectors[i].term_count() + 1);
    for (const auto& [k, c] : vectors[i].terms()) terms.emplace_back(mapped(keys, k), c);
    terms.emplace_back(offset + i, Scalar(1));
    builder.insert(SparseVector::from_terms(std::move(terms), scratch));
  }
  Subspace done = std::move(builder).finalize();

  std::vector<SparseVector> kernel;
  for (const auto& row : done.rows()) {
    if (row.leading_key() < offset) continue;
    std::vector<std::pair<Key, Scalar>> terms;
    for (const auto& [k, c] : row.terms()) terms.emplace_back(k - offset, c);
    kernel.push_back(SparseVector::from_terms(std::move(terms), out_universe));
  }
  return kernel;
}

std::optional<std::vector<Scalar>> solve_in_span(std::span<const SparseVector> vectors,
                                                 const SparseVector& target) {
  std::vector<Key> keys;
  for (const auto& v : vectors)
    for (const auto& [k, c] : v.terms()) keys.push_back(k);
  for (const auto& [k, c] : target.terms()) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  const Key offset = keys.size();
  const UniverseId scratch = fresh_universe();

  EchelonBuilder builder(scratch);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    std::vector<std::pair<Key, Scalar>> terms;
    for (const auto& [k, c] : vectors[i].terms()) terms.emplace_back(mapped(keys, k), c);
    terms.emplace_back(offset + i, Scalar(1));
    builder.insert(SparseVector::from_terms(std::move(terms), scratch));
  }
  std::vector<std::pair<Key, Scalar>> terms;
  for (const auto& [k, c] : target.terms()) terms.emplace_back(mapped(keys, k), c);
  SparseVector residue = builder.reduce(SparseVector::from_terms(std::move(terms), scratch));

  // Data part must vanish; the augmented part then holds the negated coefficients.
  std::vector<Scalar> coeffs(vectors.size(), Scalar(0));
  for (const auto& [k, c] : residue.terms()) {
    if (k < offset) return std::nullopt;
    coeffs[k - offset] = -c;
  }
  return coeffs;
}

Scalar parse_scalar(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  for (char ch : text) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '-' || ch == '+')) {
      throw ParseError("invalid rational literal: '" + text + "'");
    }
  }
  Scalar s;
  try {
    s = Scalar(text);
  } catch (const std::invalid_argument&) {
    throw ParseError("invalid rational literal: '" + text + "'");
  }
  if (s.get_den() == 0) throw ParseError("zero denominator in rational: '" + text + "'");
  s.canonicalize();
  return s;
}

std::string format_scalar(const Scalar& s) { return s.get_str(); }

}  // namespace supermult
