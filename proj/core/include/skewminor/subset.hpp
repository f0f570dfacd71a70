#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace skewminor {

/// A set of label positions, encoded as a bitmask over the label order
/// (bit i set iff position i is a member). At most 64 labels.
class Subset {
 public:
  static constexpr std::size_t kMaxLabels = 64;

  constexpr Subset() noexcept = default;
  constexpr explicit Subset(std::uint64_t bits) noexcept : bits_(bits) {}
  Subset(std::initializer_list<std::size_t> positions) noexcept {
    for (std::size_t i : positions) bits_ |= bit(i);
  }

  static Subset from_positions(const std::vector<std::size_t>& positions) noexcept {
    Subset s;
    for (std::size_t i : positions) s.bits_ |= bit(i);
    return s;
  }
  static constexpr Subset full(std::size_t n) noexcept {
    return Subset(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr Subset singleton(std::size_t i) noexcept { return Subset(bit(i)); }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t i) const noexcept { return (bits_ & bit(i)) != 0; }
  constexpr bool is_subset_of(Subset other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  /// Smallest member; undefined for the empty set.
  constexpr std::size_t lowest() const noexcept { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  constexpr Subset with(std::size_t i) const noexcept { return Subset(bits_ | bit(i)); }
  constexpr Subset without(std::size_t i) const noexcept { return Subset(bits_ & ~bit(i)); }
  constexpr Subset complement(std::size_t n) const noexcept { return Subset(full(n).bits_ & ~bits_); }

  /// Members in increasing order.
  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }

  friend constexpr Subset operator|(Subset a, Subset b) noexcept { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) noexcept { return Subset(a.bits_ & b.bits_); }
  friend constexpr Subset operator-(Subset a, Subset b) noexcept { return Subset(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(Subset a, Subset b) noexcept = default;

 private:
  static constexpr std::uint64_t bit(std::size_t i) noexcept { return std::uint64_t{1} << i; }

  std::uint64_t bits_ = 0;
};

/// Canonical enumeration order: by size, then lexicographically on the
/// increasing member sequence ({0,3} before {1,2}).
bool enumeration_less(Subset a, Subset b) noexcept;

/// All subsets of {0..n-1} with min_size <= |X| <= max_size in enumeration order.
std::vector<Subset> subsets_in_order(std::size_t n, std::size_t min_size, std::size_t max_size);

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<Subset> combinations(std::size_t n, std::size_t k);

}  // namespace skewminor
