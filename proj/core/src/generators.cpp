#include "skewminor/generators.hpp"

#include "skewminor/errors.hpp"

namespace skewminor {

SkewMatrix skew_cycle(std::size_t n, CycleVariant variant, FieldSpec spec) {
  if (n < 6 || n % 2 != 0) throw DomainError("skew cycle needs an even order >= 6");
  LabeledMatrix m = LabeledMatrix::numbered(spec, n);
  const FieldElement one = FieldElement::one(spec);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    m.set(i, i + 1, one);
    m.set(i + 1, i, -one);
  }
  const FieldElement corner = variant == CycleVariant::A ? one : -one;
  m.set(n - 1, 0, corner);
  m.set(0, n - 1, -corner);
  return SkewMatrix(std::move(m));
}

LabeledMatrix sym_cycle(std::size_t n, CycleVariant variant, FieldSpec spec) {
  if (n < 4) throw DomainError("symmetric cycle needs order >= 4");
  LabeledMatrix m = LabeledMatrix::numbered(spec, n);
  const FieldElement one = FieldElement::one(spec);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    m.set(i, i + 1, one);
    m.set(i + 1, i, one);
  }
  const FieldElement corner = variant == CycleVariant::A ? one : -one;
  m.set(n - 1, 0, corner);
  m.set(0, n - 1, corner);
  return m;
}

SkewMatrix random_dense(FieldSpec spec, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw DomainError("random dense matrix needs n >= 1");
  SplitMix64 rng(seed);
  std::vector<FieldElement> upper;
  upper.reserve(n * (n - 1) / 2);
  for (std::size_t k = 0; k < n * (n - 1) / 2; ++k) {
    if (spec.is_prime()) {
      std::uint64_t r = 0;
      while (r == 0) r = rng.below(spec.modulus());
      upper.push_back(FieldElement::from_residue(spec, r));
    } else {
      long r = 0;
      while (r == 0) r = static_cast<long>(rng.below(19)) - 9;
      upper.emplace_back(spec, r);
    }
  }
  return SkewMatrix::from_upper(spec, n, upper);
}

SkewMatrix flip_on_set(const SkewMatrix& a, Subset x) {
  if (!x.is_subset_of(Subset::full(a.size()))) throw IndexError("flip set refers to a position outside the matrix");
  LabeledMatrix m = a.matrix();
  for (std::size_t i : x.members()) {
    for (std::size_t j : x.members()) {
      if (i != j) m.set(i, j, -a(i, j));
    }
  }
  return SkewMatrix(std::move(m));
}

SkewMatrix apply_witness(const SkewMatrix& a, const Witness& w) {
  const std::size_t n = a.size();
  if (w.signs.size() != n) throw DomainError("witness must carry one sign per label");
  for (int s : w.signs) {
    if (s != 1 && s != -1) throw DomainError("witness signs must be +1 or -1");
  }
  LabeledMatrix m = a.matrix();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (w.signs[i] * w.signs[j] < 0) m.set(i, j, -a(i, j));
    }
  }
  SkewMatrix out(std::move(m));
  return w.transposed ? out.transpose() : out;
}

}  // namespace skewminor
