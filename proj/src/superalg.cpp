#include "supermult/superalg.hpp"

#include <algorithm>
#include <set>

namespace supermult::superalg {

StructLSA::StructLSA(std::vector<BasisElement> basis, std::vector<BracketEntry> entries)
    : basis_(std::move(basis)), universe_(fresh_universe()) {
  const int d = dim_total();
  std::set<std::string> seen;
  for (const auto& b : basis_) {
    if (b.parity != 0 && b.parity != 1) {
      throw StructureError("basis parity must be 0 or 1: " + b.name);
    }
    if (!seen.insert(b.name).second) throw StructureError("duplicate basis name: " + b.name);
  }
  for (auto& e : entries) {
    if (e.i < 0 || e.j < 0 || e.i >= d || e.j >= d) {
      throw StructureError("bracket entry index outside basis");
    }
    if (e.i > e.j) throw StructureError("bracket entries must be given for i <= j");
    std::vector<std::pair<Key, Scalar>> terms;
    for (auto& [k, c] : e.coeffs) {
      if (k < 0 || k >= d) throw StructureError("structure constant index outside basis");
      terms.emplace_back(static_cast<Key>(k), c);
    }
    SparseVector value = SparseVector::from_terms(std::move(terms), universe_);
    if (value.is_zero()) continue;
    if (e.i == e.j && parity(e.i) == 0) {
      throw StructureError("[x,x] must vanish for even basis element " + basis_[e.i].name);
    }
    if (!table_.emplace(std::make_pair(e.i, e.j), std::move(value)).second) {
      throw StructureError("duplicate bracket entry");
    }
  }
}

SuperDim StructLSA::dims() const {
  SuperDim out;
  for (const auto& b : basis_) (b.parity ? out.odd : out.even)++;
  return out;
}

SparseVector StructLSA::basis_vector(int i) const {
  return SparseVector::unit(static_cast<Key>(i), universe_);
}

SparseVector StructLSA::bracket_basis(int i, int j) const {
  if (i <= j) {
    auto it = table_.find({i, j});
    if (it != table_.end()) return it->second;
    return SparseVector(universe_);
  }
  SparseVector v = bracket_basis(j, i);
  v *= (parity(i) && parity(j)) ? Scalar(1) : Scalar(-1);
  return v;
}

SparseVector StructLSA::bracket(const SparseVector& v, const SparseVector& w) const {
  SparseVector out(universe_);
  for (const auto& [ki, ci] : v.terms()) {
    for (const auto& [kj, cj] : w.terms()) {
      out.axpy(ci * cj, bracket_basis(static_cast<int>(ki), static_cast<int>(kj)));
    }
  }
  return out;
}

std::optional<std::string> StructLSA::validate_report() const {
  const int d = dim_total();
  // Grading: [L_a, L_b] ⊆ L_{a+b}.
  for (const auto& [pair, value] : table_) {
    const int p = (parity(pair.first) + parity(pair.second)) % 2;
    for (const auto& [k, c] : value.terms()) {
      if (parity(static_cast<int>(k)) != p) {
        return "grading violation at [" + basis_[pair.first].name + "," +
               basis_[pair.second].name + "]: component " + basis_[k].name +
               " has the wrong parity";
      }
    }
  }
  // Super Jacobi: [[a,b],c] = [a,[b,c]] - (-1)^{|a||b|} [b,[a,c]].
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      for (int c = 0; c < d; ++c) {
        SparseVector residual = bracket(bracket_basis(a, b), basis_vector(c));
        residual.axpy(Scalar(-1), bracket(basis_vector(a), bracket_basis(b, c)));
        Scalar sign = (parity(a) && parity(b)) ? Scalar(-1) : Scalar(1);
        residual.axpy(sign, bracket(basis_vector(b), bracket_basis(a, c)));
        if (!residual.is_zero()) {
          return "super Jacobi violation at (" + basis_[a].name + "," + basis_[b].name + "," +
                 basis_[c].name + "): residual " + residual.str();
        }
      }
    }
  }
  return std::nullopt;
}

void StructLSA::validate() const {
  if (auto report = validate_report()) throw StructureError(*report);
}

StructLSA StructLSA::abelian(int even, int odd) {
  if (even < 0 || odd < 0) throw PreconditionError("abelian dimensions must be non-negative");
  std::vector<BasisElement> basis;
  for (int i = 1; i <= even; ++i) basis.push_back({"a" + std::to_string(i), 0});
  for (int i = 1; i <= odd; ++i) basis.push_back({"b" + std::to_string(i), 1});
  return StructLSA(std::move(basis), {});
}

StructLSA StructLSA::heisenberg_even(int m, int n) {
  if (m < 0 || n < 0 || m + n < 1) {
    throw PreconditionError("heisenberg_even requires m, n >= 0 with m + n >= 1");
  }
  std::vector<BasisElement> basis;
  basis.push_back({"z", 0});
  for (int i = 1; i <= 2 * m; ++i) basis.push_back({"x" + std::to_string(i), 0});
  for (int j = 1; j <= n; ++j) basis.push_back({"y" + std::to_string(j), 1});
  std::vector<BracketEntry> entries;
  for (int i = 1; i <= m; ++i) {
    entries.push_back({i, m + i, {{0, Scalar(1)}}});
  }
  for (int j = 1; j <= n; ++j) {
    entries.push_back({2 * m + j, 2 * m + j, {{0, Scalar(1)}}});
  }
  return StructLSA(std::move(basis), std::move(entries));
}

StructLSA StructLSA::heisenberg_odd(int m) {
  if (m < 1) throw PreconditionError("heisenberg_odd requires m >= 1");
  std::vector<BasisElement> basis;
  for (int i = 1; i <= m; ++i) basis.push_back({"x" + std::to_string(i), 0});
  for (int i = 1; i <= m; ++i) basis.push_back({"y" + std::to_string(i), 1});
  basis.push_back({"z", 1});
  std::vector<BracketEntry> entries;
  for (int i = 0; i < m; ++i) {
    entries.push_back({i, m + i, {{2 * m, Scalar(1)}}});
  }
  return StructLSA(std::move(basis), std::move(entries));
}

StructLSA StructLSA::direct_sum(const StructLSA& a, const StructLSA& b) {
  std::set<std::string> names;
  std::vector<BasisElement> basis;
  for (const auto& e : a.basis_) {
    names.insert(e.name);
    basis.push_back(e);
  }
  for (const auto& e : b.basis_) {
    std::string name = e.name;
    int suffix = 2;
    while (names.count(name)) name = e.name + "_" + std::to_string(suffix++);
    names.insert(name);
    basis.push_back({name, e.parity});
  }
  const int off = a.dim_total();
  std::vector<BracketEntry> entries;
  for (const auto& [pair, value] : a.table_) {
    BracketEntry e{pair.first, pair.second, {}};
    for (const auto& [k, c] : value.terms()) e.coeffs.emplace_back(static_cast<int>(k), c);
    entries.push_back(std::move(e));
  }
  for (const auto& [pair, value] : b.table_) {
    BracketEntry e{pair.first + off, pair.second + off, {}};
    for (const auto& [k, c] : value.terms()) e.coeffs.emplace_back(static_cast<int>(k) + off, c);
    entries.push_back(std::move(e));
  }
  return StructLSA(std::move(basis), std::move(entries));
}

GradedSubspace graded(const StructLSA& algebra, Subspace space) {
  SuperDim dims;
  for (const auto& row : space.rows()) {
    int p = algebra.parity(static_cast<int>(row.leading_key()));
    for (const auto& [k, c] : row.terms()) {
      if (algebra.parity(static_cast<int>(k)) != p) {
        throw ConsistencyError("subspace row is not parity-homogeneous");
      }
    }
    (p ? dims.odd : dims.even)++;
  }
  return {std::move(space), dims};
}

namespace {

Subspace bracket_span(const StructLSA& algebra, const Subspace& left) {
  std::vector<SparseVector> brackets;
  for (const auto& row : left.rows()) {
    for (int b = 0; b < algebra.dim_total(); ++b) {
      brackets.push_back(algebra.bracket(row, algebra.basis_vector(b)));
    }
  }
  return Subspace::span(brackets, algebra.universe());
}

Subspace whole_space(const StructLSA& algebra) {
  std::vector<SparseVector> units;
  for (int i = 0; i < algebra.dim_total(); ++i) units.push_back(algebra.basis_vector(i));
  return Subspace::span(units, algebra.universe());
}

}  // namespace

GradedSubspace lower_central(const StructLSA& algebra, int k) {
  if (k < 1) throw PreconditionError("lower central index must be >= 1");
  Subspace current = whole_space(algebra);
  for (int j = 2; j <= k && current.dim() > 0; ++j) {
    current = bracket_span(algebra, current);
  }
  return graded(algebra, std::move(current));
}

GradedSubspace derived_subalgebra(const StructLSA& algebra) { return lower_central(algebra, 2); }

int nilpotency_class(const StructLSA& algebra) {
  Subspace current = whole_space(algebra);
  int k = 0;  // current == γ_{k+1}
  while (current.dim() > 0) {
    Subspace next = bracket_span(algebra, current);
    if (next.dim() == current.dim()) {
      throw PreconditionError("algebra is not nilpotent: lower central series stalls at dim " +
                              std::to_string(next.dim()));
    }
    current = std::move(next);
    ++k;
  }
  return k;
}

namespace {

// Parity-p part of { x : [x, L] ⊆ prev }, solved as a kernel over stacked
// per-basis blocks.
std::vector<SparseVector> central_step_part(const StructLSA& algebra, const Subspace& prev,
                                            int parity) {
  const int d = algebra.dim_total();
  std::vector<int> indices;
  for (int i = 0; i < d; ++i) {
    if (algebra.parity(i) == parity) indices.push_back(i);
  }
  if (indices.empty()) return {};
  const UniverseId scratch = fresh_universe();
  std::vector<SparseVector> stacked;
  stacked.reserve(indices.size());
  for (int i : indices) {
    std::vector<std::pair<Key, Scalar>> terms;
    for (int b = 0; b < d; ++b) {
      SparseVector r = prev.reduce(algebra.bracket_basis(i, b));
      for (const auto& [k, c] : r.terms()) {
        terms.emplace_back(static_cast<Key>(b) * static_cast<Key>(d) + k, c);
      }
    }
    stacked.push_back(SparseVector::from_terms(std::move(terms), scratch));
  }
  std::vector<SparseVector> out;
  for (const auto& combo : null_combinations(stacked)) {
    SparseVector x(algebra.universe());
    for (const auto& [t, c] : combo.terms()) {
      x.axpy(c, algebra.basis_vector(indices[static_cast<std::size_t>(t)]));
    }
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace

GradedSubspace upper_central(const StructLSA& algebra, int k) {
  if (k < 0) throw PreconditionError("upper central index must be >= 0");
  Subspace z(algebra.universe());
  for (int step = 1; step <= k; ++step) {
    std::vector<SparseVector> generators = central_step_part(algebra, z, 0);
    auto odd_part = central_step_part(algebra, z, 1);
    generators.insert(generators.end(), odd_part.begin(), odd_part.end());
    Subspace next = Subspace::span(generators, algebra.universe());
    if (next.dim() == z.dim()) break;  // series stabilized
    z = std::move(next);
  }
  return graded(algebra, std::move(z));
}

GradedSubspace center(const StructLSA& algebra) { return upper_central(algebra, 1); }

bool is_graded_ideal(const StructLSA& algebra, const Subspace& candidate) {
  for (const auto& row : candidate.rows()) {
    int p = algebra.parity(static_cast<int>(row.leading_key()));
    for (const auto& [k, c] : row.terms()) {
      if (algebra.parity(static_cast<int>(k)) != p) return false;
    }
    for (int b = 0; b < algebra.dim_total(); ++b) {
      if (!candidate.contains(algebra.bracket(row, algebra.basis_vector(b)))) return false;
    }
  }
  return true;
}

QuotientMap::QuotientMap(const StructLSA& algebra, GradedSubspace ideal)
    : reduce_ideal_(ideal.space), ideal_(std::move(ideal)) {
  if (!is_graded_ideal(algebra, ideal_.space)) {
    throw PreconditionError("quotient requires a graded ideal");
  }
  std::set<Key> pivots;
  for (const auto& row : ideal_.space.rows()) pivots.insert(row.leading_key());
  std::vector<BasisElement> basis;
  for (int i = 0; i < algebra.dim_total(); ++i) {
    if (!pivots.count(static_cast<Key>(i))) {
      representative_.push_back(i);
      basis.push_back(algebra.basis()[static_cast<std::size_t>(i)]);
    }
  }
  std::map<Key, int> position;
  for (std::size_t t = 0; t < representative_.size(); ++t) {
    position[static_cast<Key>(representative_[t])] = static_cast<int>(t);
  }
  std::vector<BracketEntry> entries;
  for (std::size_t ti = 0; ti < representative_.size(); ++ti) {
    for (std::size_t tj = ti; tj < representative_.size(); ++tj) {
      SparseVector value =
          reduce_ideal_.reduce(algebra.bracket_basis(representative_[ti], representative_[tj]));
      if (value.is_zero()) continue;
      BracketEntry e{static_cast<int>(ti), static_cast<int>(tj), {}};
      for (const auto& [k, c] : value.terms()) e.coeffs.emplace_back(position.at(k), c);
      entries.push_back(std::move(e));
    }
  }
  quotient_.emplace(std::move(basis), std::move(entries));
}

SparseVector QuotientMap::project(const SparseVector& v) const {
  SparseVector r = reduce_ideal_.reduce(v);
  std::vector<std::pair<Key, Scalar>> terms;
  for (const auto& [k, c] : r.terms()) {
    auto it = std::lower_bound(representative_.begin(), representative_.end(), static_cast<int>(k));
    if (it == representative_.end() || static_cast<Key>(*it) != k) {
      throw ConsistencyError("quotient projection hit a pivot key");
    }
    terms.emplace_back(static_cast<Key>(it - representative_.begin()), c);
  }
  return SparseVector::from_terms(std::move(terms), quotient_->universe());
}

GradedSubspace QuotientMap::project(const GradedSubspace& sub) const {
  std::vector<SparseVector> rows;
  for (const auto& row : sub.space.rows()) rows.push_back(project(row));
  return graded(*quotient_, Subspace::span(rows, quotient_->universe()));
}

std::string Dim1Family::str() const {
  std::string head = (kind == Kind::HeisenbergEven)
                         ? "H(" + std::to_string(m) + "," + std::to_string(n) + ")"
                         : "H_" + std::to_string(m);
  return head + "+A(" + std::to_string(abelian_even) + "|" + std::to_string(abelian_odd) + ")";
}

Dim1Family classify_dim1_derived(const StructLSA& algebra) {
  GradedSubspace derived = derived_subalgebra(algebra);
  if (derived.dims.total() != 1) {
    throw PreconditionError("classification requires dim L^2 = 1, got " + derived.dims.str());
  }
  nilpotency_class(algebra);  // nilpotency is part of the contract
  const SuperDim dim = algebra.dims();
  const SuperDim z = center(algebra).dims;
  const SuperDim quotient = dim - z;  // dims of L / Z(L)

  Dim1Family family;
  if (derived.dims.even == 1) {
    family.kind = Dim1Family::Kind::HeisenbergEven;
    if (quotient.even % 2 != 0) {
      throw PreconditionError("inconsistent invariants: dim(L/Z) even part is odd");
    }
    family.m = static_cast<int>(quotient.even / 2);
    family.n = static_cast<int>(quotient.odd);
    family.abelian_even = static_cast<int>(dim.even - 2 * family.m - 1);
    family.abelian_odd = static_cast<int>(dim.odd - family.n);
  } else {
    family.kind = Dim1Family::Kind::HeisenbergOdd;
    if (quotient.even != quotient.odd || quotient.even < 1) {
      throw PreconditionError("inconsistent invariants for an odd-derived algebra");
    }
    family.m = static_cast<int>(quotient.even);
    family.abelian_even = static_cast<int>(dim.even - family.m);
    family.abelian_odd = static_cast<int>(dim.odd - family.m - 1);
  }
  if (family.m + family.n < 1 || family.abelian_even < 0 || family.abelian_odd < 0) {
    throw PreconditionError("inconsistent invariants: no Heisenberg-plus-abelian decomposition");
  }
  return family;
}

StructLSA realize(const Dim1Family& family) {
  StructLSA heis = (family.kind == Dim1Family::Kind::HeisenbergEven)
                       ? StructLSA::heisenberg_even(family.m, family.n)
                       : StructLSA::heisenberg_odd(family.m);
  if (family.abelian_even == 0 && family.abelian_odd == 0) return heis;
  return StructLSA::direct_sum(heis, StructLSA::abelian(family.abelian_even, family.abelian_odd));
}

}  // namespace supermult::superalg
