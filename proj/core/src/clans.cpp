#include "skewminor/clans.hpp"

#include "skewminor/errors.hpp"

namespace skewminor {

namespace {

void require_square(const LabeledMatrix& a) {
  if (!a.is_square()) throw DomainError("clan analysis needs a square matrix");
}

void require_exhaustive_size(std::size_t n) {
  if (n > kMaxExhaustiveOrder) {
    throw DomainError("exhaustive subset search refuses n > " + std::to_string(kMaxExhaustiveOrder));
  }
}

// True when outside label x distinguishes members i and j.
bool distinguishes(const LabeledMatrix& a, std::size_t x, std::size_t i, std::size_t j) {
  return !(a(x, i) == a(x, j)) || !(a(i, x) == a(j, x));
}

// Calls fn(X) for every X containing position 0 with lo <= |X| <= hi, in
// enumeration order, until fn returns true.
template <class Fn>
bool search_anchored(std::size_t n, std::size_t lo, std::size_t hi, Fn&& fn) {
  for (std::size_t k = std::max<std::size_t>(lo, 1); k <= hi && k <= n; ++k) {
    for (Subset rest : combinations(n - 1, k - 1)) {
      const Subset x = Subset(rest.bits() << 1U).with(0);
      if (fn(x)) return true;
    }
  }
  return false;
}

}  // namespace

std::string to_string(ClanKind kind) {
  switch (kind) {
    case ClanKind::clan: return "clan";
    case ClanKind::hl_clan: return "hl-clan";
    case ClanKind::clan_partition: return "clan-partition";
    case ClanKind::indecomposable: return "indecomposable";
    case ClanKind::hl_indecomposable: return "hl-indecomposable";
    case ClanKind::separable: return "separable";
    case ClanKind::inseparable: return "inseparable";
  }
  return "unknown";
}

bool is_trivial_clan(Subset x, std::size_t n) noexcept {
  return x.size() <= 1 || x == Subset::full(n);
}

bool is_trivial_hl_clan(Subset x, std::size_t n) noexcept {
  return x.size() <= 1 || x.size() + 1 >= n;
}

bool is_clan(const LabeledMatrix& a, Subset x) {
  require_square(a);
  const std::size_t n = a.size();
  if (!x.is_subset_of(Subset::full(n))) throw IndexError("subset refers to a position outside the matrix");
  if (x.size() <= 1) return true;
  const auto members = x.members();
  const std::size_t first = members.front();
  for (std::size_t v : x.complement(n).members()) {
    for (std::size_t i : members) {
      if (distinguishes(a, v, first, i)) return false;
    }
  }
  return true;
}

Subset clan_closure(const LabeledMatrix& a, Subset s) {
  require_square(a);
  const std::size_t n = a.size();
  if (s.empty()) throw DomainError("clan closure of the empty set");
  if (!s.is_subset_of(Subset::full(n))) throw IndexError("subset refers to a position outside the matrix");
  // An outside label that distinguishes two members of C distinguishes the
  // first member from some other, so comparing against one anchor suffices.
  Subset c = s;
  const std::size_t anchor = c.lowest();
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t v : c.complement(n).members()) {
      for (std::size_t i : c.members()) {
        if (distinguishes(a, v, anchor, i)) {
          c = c.with(v);
          grew = true;
          break;
        }
      }
    }
  }
  return c;
}

std::optional<FieldElement> block_constant(const LabeledMatrix& a, Subset x, Subset y) {
  if (x.empty() || y.empty()) return std::nullopt;
  const FieldElement& alpha = a(x.lowest(), y.lowest());
  for (std::size_t i : x.members()) {
    for (std::size_t j : y.members()) {
      if (!(a(i, j) == alpha)) return std::nullopt;
    }
  }
  return alpha;
}

ClanReport find_nontrivial_clan(const LabeledMatrix& a) {
  require_square(a);
  const std::size_t n = a.size();
  if (n < 2) throw PreconditionError("clan search needs at least two labels");
  const Subset all = Subset::full(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Subset c = clan_closure(a, Subset{i, j});
      if (!(c == all)) return ClanReport{ClanKind::clan, c, std::nullopt, std::nullopt};
    }
  }
  return ClanReport{ClanKind::indecomposable, std::nullopt, std::nullopt, std::nullopt};
}

namespace {

bool hl_clan_with(const LabeledMatrix& a, Subset x, bool skew) {
  const std::size_t n = a.size();
  if (x.empty() || x == Subset::full(n)) return true;
  const Subset rest = x.complement(n);
  if (!block_rank_at_most_one(a, x, rest)) return false;
  return skew || block_rank_at_most_one(a, rest, x);
}

}  // namespace

bool is_hl_clan(const LabeledMatrix& a, Subset x) {
  require_square(a);
  if (!x.is_subset_of(Subset::full(a.size()))) throw IndexError("subset refers to a position outside the matrix");
  return hl_clan_with(a, x, is_skew_symmetric(a));
}

ClanReport hl_indecomposable(const LabeledMatrix& a) {
  require_square(a);
  const std::size_t n = a.size();
  ClanReport report{ClanKind::hl_indecomposable, std::nullopt, std::nullopt, std::nullopt};
  if (n < 4) return report;
  require_exhaustive_size(n);
  const bool skew = is_skew_symmetric(a);
  search_anchored(n, 2, n - 2, [&](Subset x) {
    if (!hl_clan_with(a, x, skew)) return false;
    report.kind = ClanKind::hl_clan;
    report.subset = x;
    return true;
  });
  return report;
}

ClanReport is_separable(const SkewMatrix& a) {
  const std::size_t n = a.size();
  if (n < 2) throw PreconditionError("separability needs at least two labels");
  require_exhaustive_size(n);
  ClanReport report{ClanKind::inseparable, std::nullopt, std::nullopt, std::nullopt};
  search_anchored(n, 1, n - 1, [&](Subset x) {
    const Subset y = x.complement(n);
    if (!is_clan(a, x) || !is_clan(a, y)) return false;
    report.kind = ClanKind::separable;
    report.subset = x;
    report.partition = std::make_pair(x, y);
    report.constant = block_constant(a, x, y);
    return true;
  });
  return report;
}

std::size_t peel_inseparable(const SkewMatrix& a) {
  const std::size_t n = a.size();
  if (n < 5) throw PreconditionError("peeling needs at least five labels");
  if (is_separable(a).kind == ClanKind::separable) throw PreconditionError("matrix is separable");
  const Subset all = Subset::full(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (is_separable(principal_submatrix(a, all.without(x))).kind == ClanKind::inseparable) return x;
  }
  // Unreachable for inseparable input with n >= 5.
  throw InvariantError("no peelable label found for an inseparable matrix");
}

}  // namespace skewminor
