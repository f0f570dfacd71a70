#include "skewminor/matrix.hpp"

#include <algorithm>
#include <set>

#include "skewminor/errors.hpp"

namespace skewminor {

namespace {

void check_unique(const std::vector<std::string>& labels) {
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw IndexError("duplicate label '" + l + "'");
  }
}

void check_positions(Subset s, std::size_t n) {
  if (!s.is_subset_of(Subset::full(n))) throw IndexError("subset refers to a position outside the matrix");
}

}  // namespace

LabeledMatrix::LabeledMatrix(FieldSpec spec, std::vector<std::string> labels)
    : spec_(spec), row_labels_(labels), col_labels_(std::move(labels)) {
  check_unique(row_labels_);
  entries_.assign(rows() * cols(), FieldElement::zero(spec_));
}

LabeledMatrix::LabeledMatrix(FieldSpec spec, std::vector<std::string> labels, std::vector<FieldElement> entries)
    : LabeledMatrix(spec, labels, labels, std::move(entries)) {}

LabeledMatrix::LabeledMatrix(FieldSpec spec, std::vector<std::string> row_labels, std::vector<std::string> col_labels,
                             std::vector<FieldElement> entries)
    : spec_(spec), row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)), entries_(std::move(entries)) {
  check_unique(row_labels_);
  check_unique(col_labels_);
  if (entries_.size() != rows() * cols()) {
    throw DomainError("expected " + std::to_string(rows() * cols()) + " entries, got " +
                      std::to_string(entries_.size()));
  }
  for (const auto& e : entries_) {
    if (!(e.spec() == spec_)) throw SpecMismatchError("entry over " + e.spec().to_string() + " in a " + spec_.to_string() + " matrix");
  }
}

LabeledMatrix LabeledMatrix::numbered(FieldSpec spec, std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return LabeledMatrix(spec, std::move(labels));
}

LabeledMatrix LabeledMatrix::from_rows(FieldSpec spec, const std::vector<std::vector<long>>& rows) {
  LabeledMatrix m = numbered(spec, rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw DomainError("row " + std::to_string(i + 1) + " has the wrong length");
    for (std::size_t j = 0; j < rows.size(); ++j) m.set(i, j, FieldElement(spec, rows[i][j]));
  }
  return m;
}

std::size_t LabeledMatrix::index_of(const std::string& label) const {
  auto it = std::find(row_labels_.begin(), row_labels_.end(), label);
  if (it == row_labels_.end()) throw IndexError("unknown label '" + label + "'");
  return static_cast<std::size_t>(it - row_labels_.begin());
}

Subset LabeledMatrix::subset_of(const std::vector<std::string>& labels) const {
  Subset s;
  for (const auto& l : labels) s = s.with(index_of(l));
  return s;
}

std::vector<std::string> LabeledMatrix::labels_of(Subset s) const {
  std::vector<std::string> out;
  for (std::size_t i : s.members()) {
    if (i >= rows()) throw IndexError("position " + std::to_string(i) + " out of range");
    out.push_back(row_labels_[i]);
  }
  return out;
}

const FieldElement& LabeledMatrix::at(const std::string& row, const std::string& col) const {
  const std::size_t i = index_of(row);
  auto it = std::find(col_labels_.begin(), col_labels_.end(), col);
  if (it == col_labels_.end()) throw IndexError("unknown column label '" + col + "'");
  return (*this)(i, static_cast<std::size_t>(it - col_labels_.begin()));
}

void LabeledMatrix::set(std::size_t i, std::size_t j, FieldElement value) {
  if (i >= rows() || j >= cols()) throw IndexError("entry position out of range");
  if (!(value.spec() == spec_)) throw SpecMismatchError("entry field does not match matrix field");
  entries_[i * cols() + j] = std::move(value);
}

LabeledMatrix LabeledMatrix::transpose() const {
  std::vector<FieldElement> t;
  t.reserve(entries_.size());
  for (std::size_t j = 0; j < cols(); ++j) {
    for (std::size_t i = 0; i < rows(); ++i) t.push_back((*this)(i, j));
  }
  return LabeledMatrix(spec_, col_labels_, row_labels_, std::move(t));
}

LabeledMatrix LabeledMatrix::operator-() const {
  LabeledMatrix out = *this;
  for (auto& e : out.entries_) e = -e;
  return out;
}

bool operator==(const LabeledMatrix& a, const LabeledMatrix& b) {
  return a.spec_ == b.spec_ && a.row_labels_ == b.row_labels_ && a.col_labels_ == b.col_labels_ &&
         a.entries_ == b.entries_;
}

bool is_skew_symmetric(const LabeledMatrix& a) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a(i, i).is_zero()) return false;
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (!(a(i, j) == -a(j, i))) return false;
    }
  }
  return true;
}

bool is_symmetric(const LabeledMatrix& a) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (!(a(i, j) == a(j, i))) return false;
    }
  }
  return true;
}

SkewMatrix::SkewMatrix(LabeledMatrix m) : m_(std::move(m)) {
  if (!m_.is_square()) throw InvariantError("skew-symmetric matrix must be square");
  for (std::size_t i = 0; i < m_.size(); ++i) {
    if (!m_(i, i).is_zero()) throw InvariantError("nonzero diagonal entry at '" + m_.labels()[i] + "'");
    for (std::size_t j = i + 1; j < m_.size(); ++j) {
      if (!(m_(i, j) == -m_(j, i))) {
        throw InvariantError("a(" + m_.labels()[i] + "," + m_.labels()[j] + ") != -a(" + m_.labels()[j] + "," +
                             m_.labels()[i] + ")");
      }
    }
  }
}

SkewMatrix SkewMatrix::from_upper(FieldSpec spec, std::size_t n, const std::vector<FieldElement>& upper) {
  if (upper.size() != n * (n - (n > 0 ? 1 : 0)) / 2) throw DomainError("wrong number of upper-triangle entries");
  LabeledMatrix m = LabeledMatrix::numbered(spec, n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++k) {
      m.set(i, j, upper[k]);
      m.set(j, i, -upper[k]);
    }
  }
  return SkewMatrix(std::move(m));
}

SkewMatrix SkewMatrix::from_upper(FieldSpec spec, std::size_t n, const std::vector<long>& upper) {
  std::vector<FieldElement> values;
  values.reserve(upper.size());
  for (long v : upper) values.emplace_back(spec, v);
  return from_upper(spec, n, values);
}

SkewMatrix SkewMatrix::transpose() const { return SkewMatrix(m_.transpose()); }

DensityReport density(const LabeledMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j && a(i, j).is_zero()) return DensityReport{false, std::make_pair(i, j)};
    }
  }
  return DensityReport{};
}

LabeledMatrix submatrix(const LabeledMatrix& a, Subset rows, Subset cols) {
  check_positions(rows, a.rows());
  check_positions(cols, a.cols());
  if (rows.empty() || cols.empty()) throw DomainError("submatrix index sets must be nonempty");
  const auto r = rows.members();
  const auto c = cols.members();
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  for (std::size_t i : r) row_labels.push_back(a.row_labels()[i]);
  for (std::size_t j : c) col_labels.push_back(a.col_labels()[j]);
  std::vector<FieldElement> entries;
  entries.reserve(r.size() * c.size());
  for (std::size_t i : r) {
    for (std::size_t j : c) entries.push_back(a(i, j));
  }
  return LabeledMatrix(a.spec(), std::move(row_labels), std::move(col_labels), std::move(entries));
}

LabeledMatrix principal_submatrix(const LabeledMatrix& a, Subset x) {
  if (x.empty()) return LabeledMatrix(a.spec(), {});
  return submatrix(a, x, x);
}

SkewMatrix principal_submatrix(const SkewMatrix& a, Subset x) {
  return SkewMatrix(principal_submatrix(a.matrix(), x));
}

SkewMatrix extend_infinity(const SkewMatrix& a, const std::string& infinity_label) {
  const auto& labels = a.labels();
  if (std::find(labels.begin(), labels.end(), infinity_label) != labels.end()) {
    throw IndexError("label '" + infinity_label + "' already present");
  }
  const std::size_t n = a.size();
  std::vector<std::string> ext_labels = labels;
  ext_labels.push_back(infinity_label);
  LabeledMatrix m(a.spec(), ext_labels);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, a(i, j));
    m.set(n, i, FieldElement::one(a.spec()));
    m.set(i, n, -FieldElement::one(a.spec()));
  }
  return SkewMatrix(std::move(m));
}

bool is_irreducible(const LabeledMatrix& a) {
  const std::size_t n = a.size();
  if (n <= 1) return true;
  auto reach = [&](bool forward) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < n; ++w) {
        const auto& e = forward ? a(v, w) : a(w, v);
        if (!seen[w] && !e.is_zero()) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  };
  return reach(true) && reach(false);
}

}  // namespace skewminor
