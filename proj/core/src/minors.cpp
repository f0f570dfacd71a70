#include "skewminor/minors.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

#include "elimination.hpp"
#include "parallel.hpp"
#include "skewminor/errors.hpp"

namespace skewminor {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::size_t table_size(std::size_t n, std::size_t k) {
  std::size_t total = 0;
  std::size_t binom = 1;
  for (std::size_t s = 0; s <= k && s <= n; ++s) {
    total += binom;
    binom = binom * (n - s) / (s + 1);
  }
  return total;
}

bool is_sign_value(const FieldElement& e) {
  return e.is_zero() || e.is_one() || (-e).is_one();
}

void require_sign_entries(const LabeledMatrix& a) {
  for (const auto& e : a.entries()) {
    if (!is_sign_value(e)) throw DomainError("entry " + e.to_string() + " is not in {-1, 0, 1}");
  }
}

}  // namespace

MinorTable::MinorTable(FieldSpec spec, std::vector<std::string> labels, std::size_t max_order,
                       std::vector<Entry> entries)
    : spec_(spec), labels_(std::move(labels)), max_order_(max_order), entries_(std::move(entries)) {
  const std::size_t n = labels_.size();
  if (max_order_ > n) throw DomainError("max_order exceeds the number of labels");
  if (n > Subset::kMaxLabels) throw DomainError("too many labels");
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& x, const Entry& y) { return enumeration_less(x.subset, y.subset); });
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const Entry& e = entries_[i];
    if (!e.subset.is_subset_of(Subset::full(n)) || e.subset.size() > max_order_) {
      throw DomainError("minor table entry outside the declared range");
    }
    if (!(e.value.spec() == spec_)) throw SpecMismatchError("minor value in the wrong field");
    if (!index_.emplace(e.subset.bits(), i).second) throw DomainError("duplicate subset in minor table");
  }
  if (entries_.size() != table_size(n, max_order_)) throw DomainError("minor table is not total on subsets");
  if (!entries_.front().value.is_one()) throw DomainError("minor of the empty set must be 1");
}

const FieldElement& MinorTable::value(Subset x) const {
  auto it = index_.find(x.bits());
  if (it == index_.end()) throw IndexError("subset not covered by the minor table");
  return entries_[it->second].value;
}

bool operator==(const MinorTable& a, const MinorTable& b) {
  if (!(a.spec_ == b.spec_) || a.labels_ != b.labels_ || a.max_order_ != b.max_order_) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    if (!(a.entries_[i].subset == b.entries_[i].subset) || !(a.entries_[i].value == b.entries_[i].value)) return false;
  }
  return true;
}

MinorTable principal_minors(const LabeledMatrix& a, std::size_t k, SweepOptions options) {
  if (!a.is_square()) throw DomainError("principal minors need a square matrix");
  if (k > a.size()) throw DomainError("order exceeds matrix size");
  const detail::MinorKernel kernel(a);
  const auto subsets = subsets_in_order(a.size(), 0, k);
  std::vector<FieldElement> values(subsets.size(), FieldElement::zero(a.spec()));
  detail::parallel_chunks(subsets.size(), options.threads, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) values[i] = kernel.minor(subsets[i]);
  });
  std::vector<MinorTable::Entry> entries;
  entries.reserve(subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i) entries.push_back({subsets[i], std::move(values[i])});
  return MinorTable(a.spec(), a.labels(), k, std::move(entries));
}

EquivalenceVerdict hl_equivalent(const LabeledMatrix& a, const LabeledMatrix& b, std::size_t k,
                                 EquivalenceOptions options) {
  if (!a.is_square() || !b.is_square()) throw DomainError("HL-equivalence needs square matrices");
  if (a.labels() != b.labels()) throw DomainError("matrices carry different labels");
  if (!(a.spec() == b.spec())) throw DomainError("matrices live over different fields");
  if (k > a.size()) throw DomainError("order exceeds matrix size");
  const detail::MinorKernel ka(a);
  const detail::MinorKernel kb(b);
  const auto subsets = subsets_in_order(a.size(), 0, k);

  std::atomic<std::size_t> first{kNone};
  std::atomic<std::size_t> count{0};
  detail::parallel_chunks(subsets.size(), options.threads, [&](std::size_t begin, std::size_t end) {
    std::size_t local = 0;
    for (std::size_t i = begin; i < end; ++i) {
      if (!options.full && i > first.load(std::memory_order_relaxed)) break;
      if (!(ka.minor(subsets[i]) == kb.minor(subsets[i]))) {
        ++local;
        detail::atomic_min(first, i);
        if (!options.full) break;
      }
    }
    count += local;
  });

  EquivalenceVerdict v;
  v.order_checked = k;
  if (first.load() != kNone) {
    v.equivalent = false;
    v.witness_subset = subsets[first.load()];
    v.mismatches = options.full ? count.load() : 0;
  }
  return v;
}

EquivalenceVerdict hl_equivalent(const MinorTable& a, const MinorTable& b) {
  if (a.labels() != b.labels()) throw DomainError("tables carry different labels");
  if (!(a.spec() == b.spec())) throw DomainError("tables live over different fields");
  EquivalenceVerdict v;
  v.order_checked = std::min(a.max_order(), b.max_order());
  for (const auto& e : a.entries()) {
    if (e.subset.size() > v.order_checked) break;
    if (!(e.value == b.value(e.subset))) {
      v.equivalent = false;
      v.witness_subset = e.subset;
      break;
    }
  }
  return v;
}

bool is_principally_unimodular(const LabeledMatrix& a, SweepOptions options) {
  if (!a.is_square()) throw DomainError("principal unimodularity needs a square matrix");
  if (a.size() > kMaxUnimodularOrder) {
    throw DomainError("principal unimodularity check refuses n > " + std::to_string(kMaxUnimodularOrder));
  }
  require_sign_entries(a);
  const detail::MinorKernel kernel(a);
  const std::size_t count = std::size_t{1} << a.size();
  std::atomic<bool> ok{true};
  detail::parallel_chunks(count, options.threads, [&](std::size_t b, std::size_t e) {
    for (std::size_t bits = b; bits < e && ok.load(std::memory_order_relaxed); ++bits) {
      if (!is_sign_value(kernel.minor(Subset(bits)))) ok = false;
    }
  });
  return ok.load();
}

bool wesp_check(const SkewMatrix& a) {
  require_sign_entries(a);
  if (auto d = density(a); !d.dense) {
    throw DomainError("wesp_check needs a dense matrix; zero at (" + a.labels()[d.zero_pair->first] + "," +
                      a.labels()[d.zero_pair->second] + ")");
  }
  const detail::MinorKernel kernel(a);
  for (Subset x : combinations(a.size(), 4)) {
    if (!kernel.minor(x).is_one()) return false;
  }
  return true;
}

}  // namespace skewminor
