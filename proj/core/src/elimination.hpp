#pragma once

// Internal elimination kernels shared by linalg.cpp and the minor sweeps.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "skewminor/matrix.hpp"

namespace skewminor::detail {

/// Determinant of an n x n residue matrix (row-major), destroying `m`.
std::uint64_t det_mod_p(std::span<std::uint64_t> m, std::size_t n, std::uint64_t p);

/// Bareiss fraction-free determinant of an n x n integer matrix, destroying `m`.
mpz_class det_bareiss(std::span<mpz_class> m, std::size_t n);

/// Fraction-free rank of a rows x cols integer matrix, destroying `m`.
std::size_t rank_integer(std::span<mpz_class> m, std::size_t rows, std::size_t cols);

/// Rank of a residue matrix, destroying `m`.
std::size_t rank_mod_p(std::span<std::uint64_t> m, std::size_t rows, std::size_t cols, std::uint64_t p);

/// Pre-extracted entries of a square matrix so that repeated principal
/// minors avoid variant access and rational scaling.
class MinorKernel {
 public:
  explicit MinorKernel(const LabeledMatrix& a);

  FieldElement minor(Subset x) const;

 private:
  FieldSpec spec_;
  std::size_t n_;
  std::vector<std::uint64_t> residues_;  // prime field
  std::vector<mpz_class> scaled_;        // rationals: entries times common_den_
  mpz_class common_den_;
};

}  // namespace skewminor::detail
