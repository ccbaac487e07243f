#include "supermult/freelie.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace supermult::freelie {

GradedAlphabet::GradedAlphabet(std::vector<Generator> gens) : gens_(std::move(gens)) {
  std::set<std::string> seen;
  for (const auto& g : gens_) {
    if (g.parity != 0 && g.parity != 1) {
      throw StructureError("generator parity must be 0 or 1: " + g.name);
    }
    if (!seen.insert(g.name).second) {
      throw StructureError("duplicate generator name: " + g.name);
    }
  }
}

GradedAlphabet GradedAlphabet::canonical(int even, int odd) {
  if (even < 0 || odd < 0) throw PreconditionError("generator counts must be non-negative");
  std::vector<Generator> gens;
  gens.reserve(static_cast<std::size_t>(even + odd));
  for (int i = 1; i <= even; ++i) gens.push_back({"x" + std::to_string(i), 0});
  for (int i = 1; i <= odd; ++i) gens.push_back({"y" + std::to_string(i), 1});
  return GradedAlphabet(std::move(gens));
}

std::vector<int> GradedAlphabet::parities() const {
  std::vector<int> p;
  p.reserve(gens_.size());
  for (const auto& g : gens_) p.push_back(g.parity);
  return p;
}

witt::ParitySignature GradedAlphabet::signature() const {
  witt::ParitySignature sig;
  for (const auto& g : gens_) (g.parity ? sig.odd : sig.even)++;
  return sig;
}

int GradedAlphabet::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

struct LieMonomial::Node {
  int gen = -1;
  std::shared_ptr<const Node> left, right;
  std::vector<std::uint8_t> word;
};

LieMonomial LieMonomial::leaf(int gen) {
  auto n = std::make_shared<Node>();
  n->gen = gen;
  n->word = {static_cast<std::uint8_t>(gen)};
  return LieMonomial(std::move(n));
}

LieMonomial LieMonomial::node(const LieMonomial& left, const LieMonomial& right) {
  auto n = std::make_shared<Node>();
  n->left = left.node_;
  n->right = right.node_;
  n->word = left.node_->word;
  n->word.insert(n->word.end(), right.node_->word.begin(), right.node_->word.end());
  return LieMonomial(std::move(n));
}

bool LieMonomial::is_leaf() const { return node_->gen >= 0; }

int LieMonomial::generator() const {
  if (!is_leaf()) throw PreconditionError("generator() called on a bracket node");
  return node_->gen;
}

LieMonomial LieMonomial::left() const { return LieMonomial(node_->left); }
LieMonomial LieMonomial::right() const { return LieMonomial(node_->right); }

const std::vector<std::uint8_t>& LieMonomial::word() const { return node_->word; }

int LieMonomial::parity(const GradedAlphabet& alphabet) const {
  int p = 0;
  for (std::uint8_t g : word()) p ^= alphabet.parity(g);
  return p;
}

witt::MultiDegree LieMonomial::multidegree(int alphabet_size) const {
  witt::MultiDegree alpha;
  alpha.entries.assign(static_cast<std::size_t>(alphabet_size), 0);
  for (std::uint8_t g : word()) alpha.entries[g]++;
  return alpha;
}

std::string LieMonomial::str(const GradedAlphabet& alphabet) const {
  if (is_leaf()) return alphabet.gen(node_->gen).name;
  return "(" + left().str(alphabet) + ")(" + right().str(alphabet) + ")";
}

bool word_less(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

bool word_greater(const LieMonomial& a, const LieMonomial& b) {
  return word_less(b.word(), a.word());
}

bool word_leq(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) {
  return !word_less(b, a);
}

// Shape-aware string for deterministic ordering of equal-word monomials.
std::string shape_key(const LieMonomial& m) {
  if (m.is_leaf()) return std::to_string(m.generator());
  return "(" + shape_key(m.left()) + " " + shape_key(m.right()) + ")";
}

void sort_monomials(std::vector<LieMonomial>& ms) {
  std::sort(ms.begin(), ms.end(), [](const LieMonomial& a, const LieMonomial& b) {
    if (a.word() != b.word()) return word_less(a.word(), b.word());
    return shape_key(a) < shape_key(b);
  });
}

std::vector<std::vector<LieMonomial>> regular_table(const GradedAlphabet& alphabet, int length) {
  if (alphabet.size() == 0) throw PreconditionError("enumeration requires a non-empty alphabet");
  if (length < 1) throw PreconditionError("enumeration requires length >= 1");
  std::vector<std::vector<LieMonomial>> table(static_cast<std::size_t>(length) + 1);
  for (int g = 0; g < alphabet.size(); ++g) table[1].push_back(LieMonomial::leaf(g));
  sort_monomials(table[1]);
  for (int len = 2; len <= length; ++len) {
    auto& out = table[static_cast<std::size_t>(len)];
    for (int i = 1; i < len; ++i) {
      for (const auto& a : table[static_cast<std::size_t>(i)]) {
        for (const auto& b : table[static_cast<std::size_t>(len - i)]) {
          if (!word_greater(a, b)) continue;
          if (!a.is_leaf() && !word_leq(a.right().word(), b.word())) continue;
          out.push_back(LieMonomial::node(a, b));
        }
      }
    }
    sort_monomials(out);
  }
  return table;
}

}  // namespace

std::vector<LieMonomial> enumerate_regular(const GradedAlphabet& alphabet, int length) {
  return regular_table(alphabet, length)[static_cast<std::size_t>(length)];
}

std::vector<LieMonomial> enumerate_s_regular(const GradedAlphabet& alphabet, int length) {
  auto table = regular_table(alphabet, length);
  std::vector<LieMonomial> out = table[static_cast<std::size_t>(length)];
  if (length % 2 == 0) {
    for (const auto& v : table[static_cast<std::size_t>(length / 2)]) {
      if (v.parity(alphabet) == 1) out.push_back(LieMonomial::node(v, v));
    }
    sort_monomials(out);
  }
  return out;
}

TruncatedFrame::TruncatedFrame(GradedAlphabet alphabet, int degree, std::size_t word_cap)
    : alphabet_(std::move(alphabet)), degree_(degree), universe_(fresh_universe()) {
  if (degree_ < 1) throw PreconditionError("truncation degree must be >= 1");
  const auto q = static_cast<unsigned __int128>(alphabet_.size());
  unsigned __int128 size = 0;
  unsigned __int128 power = 1;
  offsets_.assign(static_cast<std::size_t>(degree_) + 2, 0);
  for (int d = 1; d <= degree_; ++d) {
    power *= q;
    offsets_[static_cast<std::size_t>(d)] = static_cast<std::uint64_t>(size);
    size += power;
    if (size > word_cap) {
      throw ResourceError("word universe for truncation degree " + std::to_string(degree_) +
                          " needs " + std::to_string(universe_size_for(alphabet_.size(), degree_)) +
                          " words, exceeding the cap of " + std::to_string(word_cap));
    }
  }
  offsets_[static_cast<std::size_t>(degree_) + 1] = static_cast<std::uint64_t>(size);
  universe_size_ = static_cast<std::size_t>(size);

  if (alphabet_.size() == 0) return;
  layers_.reserve(static_cast<std::size_t>(degree_));
  std::vector<SuperPolynomial> units;
  for (int g = 0; g < alphabet_.size(); ++g) units.push_back(generator_poly(g));
  layers_.push_back(Subspace::span(units, universe_));
  for (int d = 2; d <= degree_; ++d) {
    std::vector<SuperPolynomial> brackets;
    for (const auto& row : layers_.back().rows()) {
      for (const auto& unit : units) brackets.push_back(supercommutator(row, unit));
    }
    layers_.push_back(Subspace::span(brackets, universe_));
  }
}

std::size_t TruncatedFrame::universe_size_for(int alphabet_size, int degree) {
  unsigned __int128 size = 0;
  unsigned __int128 power = 1;
  for (int d = 1; d <= degree; ++d) {
    power *= static_cast<unsigned>(alphabet_size);
    size += power;
    if (size > static_cast<unsigned __int128>(SIZE_MAX)) return SIZE_MAX;
  }
  return static_cast<std::size_t>(size);
}

Key TruncatedFrame::encode(std::span<const std::uint8_t> word) const {
  const int len = static_cast<int>(word.size());
  if (len < 1 || len > degree_) throw PreconditionError("word length outside frame range");
  std::uint64_t idx = 0;
  for (std::uint8_t g : word) {
    if (g >= alphabet_.size()) throw PreconditionError("letter outside alphabet");
    idx = idx * static_cast<std::uint64_t>(alphabet_.size()) + g;
  }
  return offsets_[static_cast<std::size_t>(len)] + idx;
}

int TruncatedFrame::word_length(Key key) const {
  for (int d = 1; d <= degree_; ++d) {
    if (key < offsets_[static_cast<std::size_t>(d) + 1]) return d;
  }
  throw PreconditionError("key outside word universe");
}

std::vector<std::uint8_t> TruncatedFrame::decode(Key key) const {
  const int len = word_length(key);
  std::uint64_t idx = key - offsets_[static_cast<std::size_t>(len)];
  std::vector<std::uint8_t> word(static_cast<std::size_t>(len));
  for (int i = len - 1; i >= 0; --i) {
    word[static_cast<std::size_t>(i)] =
        static_cast<std::uint8_t>(idx % static_cast<std::uint64_t>(alphabet_.size()));
    idx /= static_cast<std::uint64_t>(alphabet_.size());
  }
  return word;
}

int TruncatedFrame::word_parity(Key key) const {
  int p = 0;
  for (std::uint8_t g : decode(key)) p ^= alphabet_.parity(g);
  return p;
}

SuperPolynomial TruncatedFrame::generator_poly(int i) const {
  std::uint8_t letter = static_cast<std::uint8_t>(i);
  return SparseVector::unit(encode({&letter, 1}), universe_);
}

SuperPolynomial TruncatedFrame::product(const SuperPolynomial& a, const SuperPolynomial& b) const {
  std::vector<std::pair<Key, Scalar>> terms;
  const auto q = static_cast<std::uint64_t>(alphabet_.size());
  for (const auto& [ka, ca] : a.terms()) {
    const int la = word_length(ka);
    const std::uint64_t ia = ka - offsets_[static_cast<std::size_t>(la)];
    for (const auto& [kb, cb] : b.terms()) {
      const int lb = word_length(kb);
      if (la + lb > degree_) continue;  // truncation
      const std::uint64_t ib = kb - offsets_[static_cast<std::size_t>(lb)];
      std::uint64_t idx = ia;
      for (int t = 0; t < lb; ++t) idx *= q;
      idx += ib;
      terms.emplace_back(offsets_[static_cast<std::size_t>(la + lb)] + idx, ca * cb);
    }
  }
  return SparseVector::from_terms(std::move(terms), universe_);
}

std::optional<int> TruncatedFrame::parity_of(const SuperPolynomial& p) const {
  if (p.is_zero()) return 0;
  int parity = word_parity(p.terms().front().first);
  for (const auto& [k, c] : p.terms()) {
    if (word_parity(k) != parity) return std::nullopt;
  }
  return parity;
}

SuperPolynomial TruncatedFrame::supercommutator(const SuperPolynomial& a,
                                                const SuperPolynomial& b) const {
  if (a.is_zero() || b.is_zero()) return SparseVector(universe_);
  auto pa = parity_of(a);
  auto pb = parity_of(b);
  if (!pa || !pb) {
    throw PreconditionError("supercommutator requires parity-homogeneous arguments");
  }
  SuperPolynomial ab = product(a, b);
  SuperPolynomial ba = product(b, a);
  ab.axpy((*pa && *pb) ? Scalar(1) : Scalar(-1), ba);
  return ab;
}

SuperPolynomial TruncatedFrame::to_associative(const LieMonomial& m) const {
  if (m.is_leaf()) return generator_poly(m.generator());
  return supercommutator(to_associative(m.left()), to_associative(m.right()));
}

const Subspace& TruncatedFrame::layer(int d) const {
  if (d < 1 || d > degree_ || layers_.empty()) {
    throw PreconditionError("layer index outside frame range");
  }
  return layers_[static_cast<std::size_t>(d) - 1];
}

SuperDim TruncatedFrame::layer_dims(int d) const { return graded_dims_of(layer(d)); }

Subspace TruncatedFrame::lower_central(int k) const {
  if (k < 1) throw PreconditionError("lower central index must be >= 1");
  std::vector<SparseVector> rows;
  for (int d = std::max(k, 1); d <= degree_ && !layers_.empty(); ++d) {
    const auto& layer_rows = layer(d).rows();
    rows.insert(rows.end(), layer_rows.begin(), layer_rows.end());
  }
  return Subspace::span(rows, universe_);
}

SuperDim TruncatedFrame::graded_dims_of(const Subspace& s) const {
  SuperDim out;
  for (const auto& row : s.rows()) {
    auto p = parity_of(row);
    if (!p) throw ConsistencyError("subspace row is not parity-homogeneous");
    (*p ? out.odd : out.even)++;
  }
  return out;
}

Subspace ideal_closure(std::span<const SuperPolynomial> seeds, const TruncatedFrame& frame) {
  EchelonBuilder builder(frame.universe());
  std::vector<SparseVector> work;
  for (const auto& seed : seeds) {
    if (const SparseVector* row = builder.insert(seed)) work.push_back(*row);
  }
  std::vector<SuperPolynomial> units;
  for (int g = 0; g < frame.alphabet().size(); ++g) units.push_back(frame.generator_poly(g));
  while (!work.empty()) {
    SparseVector v = std::move(work.back());
    work.pop_back();
    for (const auto& unit : units) {
      if (const SparseVector* row = builder.insert(frame.supercommutator(v, unit))) {
        work.push_back(*row);
      }
    }
  }
  return std::move(builder).finalize();
}

Subspace gamma_series(const Subspace& relator_ideal, const TruncatedFrame& frame, int k) {
  if (k < 1) throw PreconditionError("gamma series index must be >= 1");
  Subspace current = relator_ideal;
  std::vector<SuperPolynomial> units;
  for (int g = 0; g < frame.alphabet().size(); ++g) units.push_back(frame.generator_poly(g));
  for (int j = 2; j <= k; ++j) {
    std::vector<SparseVector> brackets;
    brackets.reserve(current.rows().size() * units.size());
    for (const auto& row : current.rows()) {
      for (const auto& unit : units) brackets.push_back(frame.supercommutator(row, unit));
    }
    current = Subspace::span(brackets, frame.universe());
  }
  return current;
}

}  // namespace supermult::freelie
