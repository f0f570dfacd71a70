#include "skewminor/witness.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "elimination.hpp"
#include "skewminor/clans.hpp"
#include "skewminor/errors.hpp"

namespace skewminor {

namespace {

class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // The smaller root survives, so every root is the minimum of its class.
  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (y < x) std::swap(x, y);
    parent_[y] = x;
  }

 private:
  std::vector<std::size_t> parent_;
};

void require_compatible(const SkewMatrix& a, const SkewMatrix& b) {
  if (a.labels() != b.labels()) throw DomainError("matrices carry different labels");
  if (!(a.spec() == b.spec())) throw DomainError("matrices live over different fields");
}

void require_dense(const SkewMatrix& a, const char* what) {
  if (auto d = density(a); !d.dense) {
    throw DensityError(std::string(what) + " is not dense: zero at (" + a.labels()[d.zero_pair->first] + "," +
                           a.labels()[d.zero_pair->second] + ")",
                       d.zero_pair);
  }
}

std::string pair_text(const SkewMatrix& a, std::size_t i, std::size_t j) {
  return "(" + a.labels()[i] + "," + a.labels()[j] + ")";
}

}  // namespace

SignPartition equivalence_classes(const SkewMatrix& a, const SkewMatrix& b, SignRelation mode) {
  require_compatible(a, b);
  require_dense(a, "A");
  const std::size_t n = a.size();
  DisjointSet dsu(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      const bool same = a(x, y) == b(x, y);
      const bool opposite = a(x, y) == -b(x, y);
      if (!same && !opposite) {
        throw PreconditionError("entry " + pair_text(a, x, y) + " of B is not +-a", std::make_pair(x, y));
      }
      if ((mode == SignRelation::E && same) || (mode == SignRelation::D && opposite)) dsu.unite(x, y);
    }
  }
  std::vector<Subset> by_root(n);
  for (std::size_t x = 0; x < n; ++x) by_root[dsu.find(x)] = by_root[dsu.find(x)].with(x);
  SignPartition out{mode, {}};
  for (const Subset& s : by_root) {
    if (!s.empty()) out.classes.push_back(s);
  }
  return out;
}

bool check_lopez(const SkewMatrix& a, const SkewMatrix& b) {
  require_compatible(a, b);
  if (a.size() < 3) throw PreconditionError("check_lopez needs at least three labels");
  require_dense(a, "A");
  require_dense(b, "B");
  const auto verdict = hl_equivalent(extend_infinity(a), extend_infinity(b), 4);
  if (!verdict.equivalent) throw PreconditionError("A^inf and B^inf are not (<=4)-HL-equivalent");
  for (SignRelation mode : {SignRelation::E, SignRelation::D}) {
    for (Subset c : equivalence_classes(a, b, mode).classes) {
      if (!is_clan(a, c) || !is_clan(b, c)) return false;
    }
  }
  return true;
}

Witness recover_witness(const SkewMatrix& a, const SkewMatrix& b, RecoverOptions options) {
  require_compatible(a, b);
  const std::size_t n = a.size();
  if (n < 4) throw DomainError("witness recovery needs at least four labels");
  require_dense(a, "A");
  if (auto hl = hl_indecomposable(a); hl.kind == ClanKind::hl_clan) {
    throw HypothesisError("A is HL-decomposable", hl.subset->bits(), std::nullopt);
  }
  if (options.verify_input) {
    if (auto v = hl_equivalent(a, b, 4); !v.equivalent) {
      throw HypothesisError("A and B are not (<=4)-HL-equivalent", v.witness_subset->bits(), std::nullopt);
    }
  }

  constexpr std::size_t u = 0;
  for (std::size_t z = 1; z < n; ++z) {
    if (!(b(u, z) == a(u, z)) && !(b(u, z) == -a(u, z))) {
      throw HypothesisError("entry " + pair_text(a, u, z) + " of B is not +-a", std::nullopt, std::make_pair(u, z));
    }
  }

  // Normalised entries on W = V - {u}: x^_jk = x_jk / (x_uj x_uk).
  auto normalised = [&](const SkewMatrix& m, std::size_t j, std::size_t k) { return m(j, k) / (m(u, j) * m(u, k)); };

  std::optional<bool> transposed;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      const FieldElement ah = normalised(a, j, k);
      const FieldElement bh = normalised(b, j, k);
      bool branch = false;
      if (bh == ah) {
        branch = false;
      } else if (bh == -ah) {
        branch = true;
      } else {
        throw HypothesisError("normalised entry " + pair_text(a, j, k) + " of B is not +-a", std::nullopt,
                              std::make_pair(j, k));
      }
      if (!transposed) {
        transposed = branch;
      } else if (*transposed != branch) {
        throw HypothesisError("normalised B is neither A nor A^t (mixed at " + pair_text(a, j, k) + ")",
                              std::nullopt, std::make_pair(j, k));
      }
    }
  }

  Witness w;
  w.transposed = transposed.value_or(false);
  w.signs.assign(n, 1);
  for (std::size_t z = 1; z < n; ++z) {
    const bool same = b(u, z) == a(u, z);
    w.signs[z] = (same != w.transposed) ? 1 : -1;
  }

  const SkewMatrix image = apply_witness(a, w);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!(image(i, j) == b(i, j))) {
        throw HypothesisError("recovered witness does not reproduce B at " + pair_text(a, i, j), std::nullopt,
                              std::make_pair(i, j));
      }
    }
  }
  return w;
}

std::optional<Witness> diag_similar_up_to_transposition(const SkewMatrix& a, const SkewMatrix& b) {
  require_compatible(a, b);
  require_dense(a, "A");
  const std::size_t n = a.size();
  if (n == 0) return Witness{};
  const FieldElement one = FieldElement::one(a.spec());
  for (bool transposed : {false, true}) {
    // Target entry t_ij = b_ij, or b_ji when transposed; we need t = DAD.
    auto target = [&](std::size_t i, std::size_t j) -> const FieldElement& { return transposed ? b(j, i) : b(i, j); };
    Witness w{std::vector<int>(n, 1), transposed};
    bool ok = true;
    for (std::size_t z = 1; z < n && ok; ++z) {
      const FieldElement ratio = target(0, z) / a(0, z);
      if (ratio == one) {
        w.signs[z] = 1;
      } else if (ratio == -one) {
        w.signs[z] = -1;
      } else {
        ok = false;
      }
    }
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = 0; j < n && ok; ++j) {
        const FieldElement expected = w.signs[i] * w.signs[j] > 0 ? a(i, j) : -a(i, j);
        ok = target(i, j) == expected;
      }
    }
    if (ok) return w;
  }
  return std::nullopt;
}

namespace {

// Sign search for reconstruction. Entry x_ij (i < j) is a_0j when i == 0,
// otherwise eps_ij * m_ij with eps_ij an unknown sign.
class SignSearch {
 public:
  SignSearch(const MinorTable& table, std::vector<FieldElement> first_row, std::vector<FieldElement> magnitudes)
      : table_(table), n_(table.size()), spec_(table.spec()), first_row_(std::move(first_row)),
        magnitudes_(std::move(magnitudes)) {
    var_index_.assign(n_ * n_, kFixed);
    for (std::size_t j = 1; j < n_; ++j) {
      for (std::size_t k = j + 1; k < n_; ++k) {
        var_index_[j * n_ + k] = vars_.size();
        vars_.push_back({j, k});
      }
    }
    values_.assign(vars_.size(), 0);
    var_constraints_.resize(vars_.size());
    // Root subsets first so that propagation meets them early.
    std::vector<Subset> quads = combinations(n_, 4);
    std::stable_partition(quads.begin(), quads.end(), [](Subset s) { return s.contains(0); });
    for (Subset s : quads) {
      const auto m = s.members();
      Constraint c{s, table_.value(s), {}};
      for (std::size_t p = 0; p < 4; ++p) {
        for (std::size_t q = p + 1; q < 4; ++q) {
          const std::size_t v = var_index_[m[p] * n_ + m[q]];
          if (v != kFixed) c.vars.push_back(v);
        }
      }
      for (std::size_t v : c.vars) var_constraints_[v].push_back(constraints_.size());
      constraints_.push_back(std::move(c));
    }
  }

  std::vector<SkewMatrix> solve() {
    search();
    if (solutions_.empty()) {
      throw InconsistencyError("no sign assignment matches the minors", first_conflict_.value_or(Subset{}).bits());
    }
    return std::move(solutions_);
  }

 private:
  static constexpr std::size_t kFixed = static_cast<std::size_t>(-1);

  struct Constraint {
    Subset subset;
    FieldElement value;
    std::vector<std::size_t> vars;
  };

  FieldElement entry(std::size_t i, std::size_t j) const {
    if (i == 0) return first_row_[j];
    const std::size_t v = var_index_[i * n_ + j];
    return values_[v] > 0 ? magnitudes_[i * n_ + j] : -magnitudes_[i * n_ + j];
  }

  bool satisfied(const Constraint& c) const {
    const auto m = c.subset.members();
    const FieldElement pf = entry(m[0], m[1]) * entry(m[2], m[3]) - entry(m[0], m[2]) * entry(m[1], m[3]) +
                            entry(m[0], m[3]) * entry(m[1], m[2]);
    return pf * pf == c.value;
  }

  void note_conflict(Subset s) {
    if (!first_conflict_) first_conflict_ = s;
  }

  // Unit propagation from newly assigned variables. Returns false on conflict.
  bool propagate(std::vector<std::size_t> queue) {
    while (!queue.empty()) {
      const std::size_t v = queue.back();
      queue.pop_back();
      for (std::size_t ci : var_constraints_[v]) {
        const Constraint& c = constraints_[ci];
        std::size_t open = kFixed;
        std::size_t open_count = 0;
        for (std::size_t w : c.vars) {
          if (values_[w] == 0) {
            open = w;
            ++open_count;
          }
        }
        if (open_count == 0) {
          if (!satisfied(c)) {
            note_conflict(c.subset);
            return false;
          }
        } else if (open_count == 1) {
          std::array<bool, 2> feasible{};
          for (int s : {0, 1}) {
            values_[open] = s == 0 ? 1 : -1;
            feasible[s] = satisfied(c);
          }
          values_[open] = 0;
          if (!feasible[0] && !feasible[1]) {
            note_conflict(c.subset);
            return false;
          }
          if (feasible[0] != feasible[1]) {
            values_[open] = feasible[0] ? 1 : -1;
            trail_.push_back(open);
            queue.push_back(open);
          }
        }
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      values_[trail_.back()] = 0;
      trail_.pop_back();
    }
  }

  void search() {
    auto it = std::find(values_.begin(), values_.end(), 0);
    if (it == values_.end()) {
      record();
      return;
    }
    const std::size_t v = static_cast<std::size_t>(it - values_.begin());
    for (int sign : {1, -1}) {
      const std::size_t mark = trail_.size();
      values_[v] = sign;
      trail_.push_back(v);
      if (propagate({v})) search();
      undo(mark);
    }
  }

  void record() {
    LabeledMatrix m = LabeledMatrix(spec_, table_.labels());
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        const FieldElement x = entry(i, j);
        m.set(i, j, x);
        m.set(j, i, -x);
      }
    }
    // Constraints cover order 4; anything higher in the table is checked here.
    const detail::MinorKernel kernel(m);
    for (const auto& e : table_.entries()) {
      if (e.subset.size() <= 4) continue;
      if (!(kernel.minor(e.subset) == e.value)) {
        note_conflict(e.subset);
        return;
      }
    }
    solutions_.emplace_back(std::move(m));
  }

  const MinorTable& table_;
  std::size_t n_;
  FieldSpec spec_;
  std::vector<FieldElement> first_row_;
  std::vector<FieldElement> magnitudes_;
  std::vector<std::size_t> var_index_;
  std::vector<std::pair<std::size_t, std::size_t>> vars_;
  std::vector<int> values_;
  std::vector<Constraint> constraints_;
  std::vector<std::vector<std::size_t>> var_constraints_;
  std::vector<std::size_t> trail_;
  std::vector<SkewMatrix> solutions_;
  std::optional<Subset> first_conflict_;
};

}  // namespace

std::vector<SkewMatrix> reconstruct_from_minors(const MinorTable& table, const FieldSpec& spec) {
  if (!(table.spec() == spec)) throw SpecMismatchError("minor table is over " + table.spec().to_string());
  if (table.max_order() < 4) throw DomainError("reconstruction needs minors up to order 4");
  const std::size_t n = table.size();
  for (const auto& e : table.entries()) {
    if (e.subset.size() % 2 == 1 && !e.value.is_zero()) {
      throw InconsistencyError("odd-order principal minor is nonzero", e.subset.bits());
    }
  }
  const auto& labels = table.labels();
  std::vector<FieldElement> magnitudes(n * n, FieldElement::zero(spec));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const FieldElement& m2 = table.value(Subset{i, j});
      const std::string where = "{" + labels[i] + "," + labels[j] + "}";
      if (m2.is_zero()) throw DensityError("order-2 minor " + where + " is zero", std::make_pair(i, j));
      auto roots = square_roots(m2);
      if (roots.empty()) throw FieldError("order-2 minor " + where + " = " + m2.to_string() + " is not a square");
      magnitudes[i * n + j] = roots.front();
    }
  }
  std::vector<FieldElement> first_row(n, FieldElement::zero(spec));
  for (std::size_t z = 1; z < n; ++z) first_row[z] = magnitudes[z];
  return SignSearch(table, std::move(first_row), std::move(magnitudes)).solve();
}

}  // namespace skewminor
