#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "skewminor/matrix.hpp"

namespace skewminor {

/// Worker count for subset sweeps. Results never depend on it.
struct SweepOptions {
  unsigned threads = 1;
};

/// det(A[X]) for every X with |X| <= max_order, stored in enumeration order
/// (size, then lexicographic). The entry for the empty set is 1.
class MinorTable {
 public:
  struct Entry {
    Subset subset;
    FieldElement value;
  };

  /// Entries may come in any order; they are stored sorted. Throws
  /// DomainError if the table is not total on subsets of size <= max_order,
  /// has duplicates, or the empty-set entry is not 1.
  MinorTable(FieldSpec spec, std::vector<std::string> labels, std::size_t max_order, std::vector<Entry> entries);

  const FieldSpec& spec() const noexcept { return spec_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t max_order() const noexcept { return max_order_; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }

  /// Throws IndexError when |X| > max_order or X is out of range.
  const FieldElement& value(Subset x) const;

  friend bool operator==(const MinorTable& a, const MinorTable& b);

 private:
  FieldSpec spec_;
  std::vector<std::string> labels_;
  std::size_t max_order_;
  std::vector<Entry> entries_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

/// Principal minors of order <= k. Throws DomainError unless 0 <= k <= |V|.
MinorTable principal_minors(const LabeledMatrix& a, std::size_t k, SweepOptions options = {});

struct EquivalenceVerdict {
  bool equivalent = true;
  /// First subset (enumeration order) where the minors differ.
  std::optional<Subset> witness_subset;
  std::size_t order_checked = 0;
  /// Number of differing subsets; only counted under full comparison.
  std::size_t mismatches = 0;
};

struct EquivalenceOptions {
  /// Compare every subset instead of stopping at the first mismatch.
  bool full = false;
  unsigned threads = 1;
};

/// (<= k)-HL-equivalence: det(A[X]) == det(B[X]) for all |X| <= k.
/// Throws DomainError on label or field mismatch, or k > |V|.
EquivalenceVerdict hl_equivalent(const LabeledMatrix& a, const LabeledMatrix& b, std::size_t k,
                                 EquivalenceOptions options = {});

/// Compares two precomputed tables up to the smaller of their orders.
EquivalenceVerdict hl_equivalent(const MinorTable& a, const MinorTable& b);

/// Largest order accepted by is_principally_unimodular.
inline constexpr std::size_t kMaxUnimodularOrder = 20;

/// True iff every principal minor lies in {-1, 0, 1}. Entries must already
/// lie in {-1, 0, 1} (DomainError otherwise); refuses n > 20.
bool is_principally_unimodular(const LabeledMatrix& a, SweepOptions options = {});

/// Dense skew sign matrices: true iff every order-4 principal minor is 1.
/// Throws DomainError for non-dense input or entries outside {-1, 0, 1}.
/// Vacuously true below order 4.
bool wesp_check(const SkewMatrix& a);

}  // namespace skewminor
