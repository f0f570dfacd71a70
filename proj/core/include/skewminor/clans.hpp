#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "skewminor/matrix.hpp"

namespace skewminor {

enum class ClanKind { clan, hl_clan, clan_partition, indecomposable, hl_indecomposable, separable, inseparable };

std::string to_string(ClanKind kind);

/// Outcome of a clan search. `subset` is set when a set was found,
/// `partition` for clan-partitions, and `constant` is the common value
/// A_(X,Y) between the two disjoint clans of a partition.
struct ClanReport {
  ClanKind kind = ClanKind::indecomposable;
  std::optional<Subset> subset;
  std::optional<std::pair<Subset, Subset>> partition;
  std::optional<FieldElement> constant;
};

/// Trivial clans: empty, singletons, V.
bool is_trivial_clan(Subset x, std::size_t n) noexcept;
/// Trivial HL-clans: the trivial clans plus complements of singletons.
bool is_trivial_hl_clan(Subset x, std::size_t n) noexcept;

/// Every label outside X sees all members of X identically, in both
/// directions: a_xi = a_xj and a_ix = a_jx for i, j in X, x outside.
bool is_clan(const LabeledMatrix& a, Subset x);

/// The unique smallest clan containing s. Throws DomainError for empty s.
Subset clan_closure(const LabeledMatrix& a, Subset s);

/// A_(X,Y): the common value of a_xy over x in X, y in Y, if there is one.
std::optional<FieldElement> block_constant(const LabeledMatrix& a, Subset x, Subset y);

/// First nontrivial clan found by closing pairs {i, j} in lexicographic
/// order; kind indecomposable when every pair closes to V.
ClanReport find_nontrivial_clan(const LabeledMatrix& a);

/// rank A[X, V-X] <= 1 and rank A[V-X, X] <= 1. For skew-symmetric input
/// only one side is examined (the other is its negated transpose).
bool is_hl_clan(const LabeledMatrix& a, Subset x);

/// Searches X with 2 <= |X| <= n-2 containing the first label, in
/// enumeration order. Matrices with n < 4 are vacuously HL-indecomposable.
ClanReport hl_indecomposable(const LabeledMatrix& a);

/// Looks for a clan-partition {X, V-X} with the first label in X
/// (1 <= |X| <= n-1), in enumeration order. Partitions into trivial clans
/// such as {{x}, V-{x}} count.
ClanReport is_separable(const SkewMatrix& a);

/// Some x (first in label order) with A[V-{x}] inseparable. Throws
/// PreconditionError when n < 5 or A is separable.
std::size_t peel_inseparable(const SkewMatrix& a);

/// Largest order accepted by the exhaustive subset searches.
inline constexpr std::size_t kMaxExhaustiveOrder = 22;

}  // namespace skewminor
