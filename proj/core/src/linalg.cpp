#include <algorithm>
#include <unordered_map>

#include "elimination.hpp"
#include "skewminor/errors.hpp"
#include "skewminor/matrix.hpp"

namespace skewminor {

namespace detail {

std::uint64_t det_mod_p(std::span<std::uint64_t> m, std::size_t n, std::uint64_t p) {
  std::uint64_t det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot * n + col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t k = col; k < n; ++k) std::swap(m[pivot * n + k], m[col * n + k]);
      det = modp::sub(0, det, p);
    }
    const std::uint64_t pv = m[col * n + col];
    det = modp::mul(det, pv, p);
    const std::uint64_t inv = modp::inv(pv, p);
    for (std::size_t r = col + 1; r < n; ++r) {
      const std::uint64_t f = modp::mul(m[r * n + col], inv, p);
      if (f == 0) continue;
      for (std::size_t k = col + 1; k < n; ++k) {
        m[r * n + k] = modp::sub(m[r * n + k], modp::mul(f, m[col * n + k], p), p);
      }
    }
  }
  return det;
}

mpz_class det_bareiss(std::span<mpz_class> m, std::size_t n) {
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k * n + k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot * n + k] == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m[pivot * n + c], m[k * n + c]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j];
        mpz_divexact(m[i * n + j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k * n + k];
  }
  mpz_class det = m[(n - 1) * n + (n - 1)];
  if (sign < 0) det = -det;
  return det;
}

std::size_t rank_integer(std::span<mpz_class> m, std::size_t rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot * cols + col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(m[pivot * cols + c], m[rank * cols + c]);
    }
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r * cols + col] == 0) continue;
      const mpz_class f = m[r * cols + col];
      const mpz_class pv = m[rank * cols + col];
      for (std::size_t c = col; c < cols; ++c) m[r * cols + c] = m[r * cols + c] * pv - f * m[rank * cols + c];
      // Keep rows primitive so coefficients stay small.
      mpz_class g = 0;
      for (std::size_t c = col; c < cols; ++c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m[r * cols + c].get_mpz_t());
      if (g > 1) {
        for (std::size_t c = col; c < cols; ++c) mpz_divexact(m[r * cols + c].get_mpz_t(), m[r * cols + c].get_mpz_t(), g.get_mpz_t());
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_mod_p(std::span<std::uint64_t> m, std::size_t rows, std::size_t cols, std::uint64_t p) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot * cols + col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(m[pivot * cols + c], m[rank * cols + c]);
    }
    const std::uint64_t inv = modp::inv(m[rank * cols + col], p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const std::uint64_t f = modp::mul(m[r * cols + col], inv, p);
      if (f == 0) continue;
      for (std::size_t c = col; c < cols; ++c) {
        m[r * cols + c] = modp::sub(m[r * cols + c], modp::mul(f, m[rank * cols + c], p), p);
      }
    }
    ++rank;
  }
  return rank;
}

namespace {

// Integer lift of the rationals in `entries`: returns L with L*e integral
// for every e.
mpz_class common_denominator(const std::vector<FieldElement>& entries) {
  mpz_class l = 1;
  for (const auto& e : entries) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.rational().get_den().get_mpz_t());
  return l;
}

mpz_class scale(const FieldElement& e, const mpz_class& l) {
  const mpq_class& q = e.rational();
  return mpz_class(q.get_num() * (l / q.get_den()));
}

}  // namespace

MinorKernel::MinorKernel(const LabeledMatrix& a) : spec_(a.spec()), n_(a.size()) {
  if (!a.is_square()) throw DomainError("principal minors need a square matrix");
  if (spec_.is_prime()) {
    residues_.reserve(n_ * n_);
    for (const auto& e : a.entries()) residues_.push_back(e.residue());
  } else {
    common_den_ = common_denominator(a.entries());
    scaled_.reserve(n_ * n_);
    for (const auto& e : a.entries()) scaled_.push_back(scale(e, common_den_));
  }
}

FieldElement MinorKernel::minor(Subset x) const {
  if (!x.is_subset_of(Subset::full(n_))) throw IndexError("subset refers to a position outside the matrix");
  const auto idx = x.members();
  const std::size_t k = idx.size();
  if (spec_.is_prime()) {
    std::vector<std::uint64_t> m(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) m[i * k + j] = residues_[idx[i] * n_ + idx[j]];
    }
    return FieldElement::from_residue(spec_, det_mod_p(m, k, spec_.modulus()));
  }
  std::vector<mpz_class> m(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i * k + j] = scaled_[idx[i] * n_ + idx[j]];
  }
  mpz_class scale_k;
  mpz_pow_ui(scale_k.get_mpz_t(), common_den_.get_mpz_t(), static_cast<unsigned long>(k));
  return FieldElement(spec_, mpq_class(det_bareiss(m, k), scale_k));
}

}  // namespace detail

FieldElement determinant(const LabeledMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("determinant of a non-square matrix");
  // Off-diagonal blocks such as A[X, Y] with |X| = |Y| carry two label lists.
  if (!a.is_square()) {
    return determinant(LabeledMatrix(a.spec(), a.row_labels(), a.row_labels(), a.entries()));
  }
  return detail::MinorKernel(a).minor(Subset::full(a.size()));
}

FieldElement principal_minor(const LabeledMatrix& a, Subset x) { return detail::MinorKernel(a).minor(x); }

std::size_t rank(const LabeledMatrix& a) {
  const std::size_t r = a.rows();
  const std::size_t c = a.cols();
  if (r == 0 || c == 0) return 0;
  if (a.spec().is_prime()) {
    std::vector<std::uint64_t> m;
    m.reserve(r * c);
    for (const auto& e : a.entries()) m.push_back(e.residue());
    return detail::rank_mod_p(m, r, c, a.spec().modulus());
  }
  // Scaling rows by nonzero constants preserves rank.
  std::vector<mpz_class> m;
  m.reserve(r * c);
  for (std::size_t i = 0; i < r; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < c; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).rational().get_den().get_mpz_t());
    for (std::size_t j = 0; j < c; ++j) {
      const mpq_class& q = a(i, j).rational();
      m.push_back(q.get_num() * (l / q.get_den()));
    }
  }
  return detail::rank_integer(m, r, c);
}

bool block_rank_at_most_one(const LabeledMatrix& a, Subset rows, Subset cols) {
  const auto r = rows.members();
  const auto c = cols.members();
  // Anchor on the first nonzero entry; rank <= 1 iff every 2x2 minor through
  // the anchor vanishes.
  for (std::size_t i0 : r) {
    for (std::size_t j0 : c) {
      const FieldElement& pivot = a(i0, j0);
      if (pivot.is_zero()) continue;
      for (std::size_t i : r) {
        if (i == i0) continue;
        for (std::size_t j : c) {
          if (j == j0) continue;
          if (!(a(i, j) * pivot == a(i, j0) * a(i0, j))) return false;
        }
      }
      return true;
    }
  }
  return true;
}

FieldElement pfaffian(const SkewMatrix& a) {
  const std::size_t n = a.size();
  const FieldSpec& spec = a.spec();
  if (n % 2 == 1) return FieldElement::zero(spec);
  if (n > Subset::kMaxLabels - 1) throw DomainError("pfaffian supports at most 63 labels");
  std::unordered_map<std::uint64_t, FieldElement> memo;
  // pf(S) = sum_{j in S, j > i} (-1)^{t} a_ij pf(S - {i, j}),  i = min S,
  // t = number of members of S strictly between i and j.
  auto pf = [&](auto&& self, Subset s) -> FieldElement {
    if (s.empty()) return FieldElement::one(spec);
    if (auto it = memo.find(s.bits()); it != memo.end()) return it->second;
    const std::size_t i = s.lowest();
    const Subset rest = s.without(i);
    FieldElement total = FieldElement::zero(spec);
    bool positive = true;
    for (std::size_t j : rest.members()) {
      const FieldElement& aij = a(i, j);
      if (!aij.is_zero()) {
        FieldElement term = aij * self(self, rest.without(j));
        total = positive ? total + term : total - term;
      }
      positive = !positive;
    }
    memo.emplace(s.bits(), total);
    return total;
  };
  return pf(pf, Subset::full(n));
}

}  // namespace skewminor
