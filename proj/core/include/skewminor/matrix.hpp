#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewminor/field.hpp"
#include "skewminor/subset.hpp"

namespace skewminor {

/// A matrix over an exact field whose rows and columns are addressed by
/// ordered string labels. Square matrices share one label list; rectangular
/// ones come out of submatrix().
class LabeledMatrix {
 public:
  /// Zero square matrix.
  LabeledMatrix(FieldSpec spec, std::vector<std::string> labels);
  /// Square matrix from row-major entries; throws DomainError on a size or
  /// field mismatch and IndexError on duplicate labels.
  LabeledMatrix(FieldSpec spec, std::vector<std::string> labels, std::vector<FieldElement> entries);
  /// General (possibly rectangular) matrix.
  LabeledMatrix(FieldSpec spec, std::vector<std::string> row_labels, std::vector<std::string> col_labels,
                std::vector<FieldElement> entries);

  /// Square zero matrix labelled "1".."n".
  static LabeledMatrix numbered(FieldSpec spec, std::size_t n);
  /// Square matrix labelled "1".."n" from integer rows.
  static LabeledMatrix from_rows(FieldSpec spec, const std::vector<std::vector<long>>& rows);

  const FieldSpec& spec() const noexcept { return spec_; }
  std::size_t rows() const noexcept { return row_labels_.size(); }
  std::size_t cols() const noexcept { return col_labels_.size(); }
  /// Order of a square matrix.
  std::size_t size() const noexcept { return row_labels_.size(); }
  bool is_square() const noexcept { return row_labels_ == col_labels_; }

  /// Labels of a square matrix (its row labels).
  const std::vector<std::string>& labels() const noexcept { return row_labels_; }
  const std::vector<std::string>& row_labels() const noexcept { return row_labels_; }
  const std::vector<std::string>& col_labels() const noexcept { return col_labels_; }

  /// Position of a row label; throws IndexError when absent.
  std::size_t index_of(const std::string& label) const;
  /// Label positions of a label list; throws IndexError on unknown labels.
  Subset subset_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(Subset s) const;

  const FieldElement& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols() + j]; }
  const FieldElement& at(const std::string& row, const std::string& col) const;
  void set(std::size_t i, std::size_t j, FieldElement value);

  const std::vector<FieldElement>& entries() const noexcept { return entries_; }

  LabeledMatrix transpose() const;
  LabeledMatrix operator-() const;

  friend bool operator==(const LabeledMatrix& a, const LabeledMatrix& b);

 private:
  FieldSpec spec_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
  std::vector<FieldElement> entries_;
};

/// A square matrix with zero diagonal and a_ij = -a_ji.
class SkewMatrix {
 public:
  /// Throws InvariantError unless `m` is square and skew-symmetric.
  explicit SkewMatrix(LabeledMatrix m);
  /// Builds from the strictly-upper entries, row by row
  /// (a_12, a_13, ..., a_1n, a_23, ...), labels "1".."n".
  static SkewMatrix from_upper(FieldSpec spec, std::size_t n, const std::vector<long>& upper);
  static SkewMatrix from_upper(FieldSpec spec, std::size_t n, const std::vector<FieldElement>& upper);

  const LabeledMatrix& matrix() const noexcept { return m_; }
  operator const LabeledMatrix&() const noexcept { return m_; }  // NOLINT(google-explicit-constructor)

  const FieldSpec& spec() const noexcept { return m_.spec(); }
  std::size_t size() const noexcept { return m_.size(); }
  const std::vector<std::string>& labels() const noexcept { return m_.labels(); }
  const FieldElement& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  SkewMatrix transpose() const;

  friend bool operator==(const SkewMatrix& a, const SkewMatrix& b) { return a.m_ == b.m_; }

 private:
  LabeledMatrix m_;
};

bool is_skew_symmetric(const LabeledMatrix& a);
bool is_symmetric(const LabeledMatrix& a);

struct DensityReport {
  bool dense = true;
  /// First off-diagonal zero in row-major order.
  std::optional<std::pair<std::size_t, std::size_t>> zero_pair;
};

DensityReport density(const LabeledMatrix& a);
inline bool is_dense(const LabeledMatrix& a) { return density(a).dense; }

/// A[X, Y] with label order inherited from A. Throws IndexError when a
/// position lies outside the matrix and DomainError when X or Y is empty.
LabeledMatrix submatrix(const LabeledMatrix& a, Subset rows, Subset cols);
/// A[X] = A[X, X].
LabeledMatrix principal_submatrix(const LabeledMatrix& a, Subset x);
SkewMatrix principal_submatrix(const SkewMatrix& a, Subset x);

/// Exact determinant of a square matrix. The empty matrix has determinant 1.
FieldElement determinant(const LabeledMatrix& a);
/// det(A[X]) without materialising the labelled submatrix.
FieldElement principal_minor(const LabeledMatrix& a, Subset x);
/// Rank by exact elimination; rectangular input allowed.
std::size_t rank(const LabeledMatrix& a);
/// rank(A[X, Y]) <= 1, decided by 2x2 cross products.
bool block_rank_at_most_one(const LabeledMatrix& a, Subset rows, Subset cols);

/// Pfaffian by expansion along the first row, memoised over subsets, so the
/// cost is O(2^n n) instead of (n-1)!!. Odd order yields zero. Intended for
/// n <= 24. Sign convention: pf([[0,a],[-a,0]]) = a.
FieldElement pfaffian(const SkewMatrix& a);

/// Label used for the point at infinity in extend_infinity.
inline const std::string kInfinityLabel = "inf";

/// A^inf over V + {inf} (inf placed last): a_{inf,j} = 1, a_{j,inf} = -1.
/// Throws IndexError when `infinity_label` already labels A.
SkewMatrix extend_infinity(const SkewMatrix& a, const std::string& infinity_label = kInfinityLabel);

/// Irreducible: A[X, V-X] and A[V-X, X] are nonzero for every proper
/// nonempty X, i.e. the digraph of nonzero entries is strongly connected.
bool is_irreducible(const LabeledMatrix& a);

}  // namespace skewminor
