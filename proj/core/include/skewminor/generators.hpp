#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "skewminor/matrix.hpp"

namespace skewminor {

/// splitmix64 (Steele, Lea, Flood). Fixed so that generated fixtures are
/// reproducible across implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish value in [0, bound) by plain reduction.
  std::uint64_t below(std::uint64_t bound) noexcept { return next() % bound; }

 private:
  std::uint64_t state_;
};

enum class CycleVariant { A, B };

/// The signed cycle pair on n >= 6 (even) labels: a_{i,i+1} = 1 = -a_{i+1,i},
/// closing entry a_{n,1} = 1 for A and -1 for B. Their proper principal
/// minors agree while det A = 0 and det B = 4.
SkewMatrix skew_cycle(std::size_t n, CycleVariant variant, FieldSpec spec = FieldSpec::rationals());

/// The symmetric cycle pair on n >= 4 labels: a_{i,i+1} = a_{i+1,i} = 1,
/// closing entries 1 for A and -1 for B, zero diagonal.
LabeledMatrix sym_cycle(std::size_t n, CycleVariant variant, FieldSpec spec = FieldSpec::rationals());

/// Random dense skew-symmetric matrix, labels "1".."n". Upper entries are
/// drawn row by row (a_12, a_13, ..., a_23, ...) from SplitMix64(seed):
///  - GF(p): r = next() mod p, redrawn while r == 0;
///  - Q:     r = (next() mod 19) - 9, redrawn while r == 0.
SkewMatrix random_dense(FieldSpec spec, std::size_t n, std::uint64_t seed);

/// Negates every entry a_ij with both i and j in X.
SkewMatrix flip_on_set(const SkewMatrix& a, Subset x);

/// A sign diagonal D (d_i = +-1) plus a transposition flag, asserting
/// B = DAD (transposed == false) or B^t = DAD (transposed == true).
struct Witness {
  std::vector<int> signs;
  bool transposed = false;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// DAD with d_i = signs[i], transposed afterwards when w.transposed.
/// Throws DomainError unless signs has one +-1 per label.
SkewMatrix apply_witness(const SkewMatrix& a, const Witness& w);

}  // namespace skewminor
