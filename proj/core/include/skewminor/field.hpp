#pragma once

// Exact arithmetic over the rationals and over prime fields GF(p), p odd.

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace skewminor {

enum class FieldKind { rational, prime };

/// Identifies the ambient field. Prime moduli are odd primes below 2^32 so
/// that products of residues fit in 64 bits.
class FieldSpec {
 public:
  static FieldSpec rationals() noexcept { return FieldSpec(FieldKind::rational, 0); }
  /// Throws DomainError unless `p` is an odd prime below 2^32.
  static FieldSpec prime(std::uint64_t p);

  FieldKind kind() const noexcept { return kind_; }
  bool is_prime() const noexcept { return kind_ == FieldKind::prime; }
  /// Zero for the rationals.
  std::uint64_t modulus() const noexcept { return modulus_; }

  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(FieldKind kind, std::uint64_t modulus) noexcept : kind_(kind), modulus_(modulus) {}

  FieldKind kind_;
  std::uint64_t modulus_;
};

bool is_prime_number(std::uint64_t n) noexcept;

/// An immutable field element. Rationals are kept in lowest terms with a
/// positive denominator, residues in [0, p), so equality is structural.
class FieldElement {
 public:
  /// Zero of the rationals.
  FieldElement() : FieldElement(FieldSpec::rationals(), 0) {}
  FieldElement(const FieldSpec& spec, long value);
  FieldElement(const FieldSpec& spec, const mpz_class& value);
  /// Maps a rational into the field; throws DomainError when the
  /// denominator vanishes modulo p.
  FieldElement(const FieldSpec& spec, const mpq_class& value);

  static FieldElement zero(const FieldSpec& spec) { return FieldElement(spec, 0L); }
  static FieldElement one(const FieldSpec& spec) { return FieldElement(spec, 1L); }
  /// Builds a prime-field element from a residue already in [0, p).
  static FieldElement from_residue(const FieldSpec& spec, std::uint64_t residue);

  /// Parses "n", "num/den" (rationals) or a decimal integer reduced mod p.
  /// Throws DomainError on malformed text.
  static FieldElement parse(const FieldSpec& spec, std::string_view text);
  /// Inverse of parse: "n" or "num/den", or the residue in decimal.
  std::string to_string() const;

  const FieldSpec& spec() const noexcept { return spec_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Rational value; throws DomainError for prime-field elements.
  const mpq_class& rational() const;
  /// Residue in [0, p); throws DomainError for rationals.
  std::uint64_t residue() const;

  FieldElement inverse() const;

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator-(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator*(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator/(const FieldElement& x, const FieldElement& y);
  FieldElement& operator+=(const FieldElement& y) { return *this = *this + y; }
  FieldElement& operator-=(const FieldElement& y) { return *this = *this - y; }
  FieldElement& operator*=(const FieldElement& y) { return *this = *this * y; }
  FieldElement& operator/=(const FieldElement& y) { return *this = *this / y; }

  friend bool operator==(const FieldElement& x, const FieldElement& y);

 private:
  FieldSpec spec_;
  std::variant<std::uint64_t, mpq_class> value_;
};

/// Every r with r*r == x. At most two roots; two roots are negatives of each
/// other. Rationals list the positive root first, prime fields list roots in
/// ascending residue order. An empty result means x is not a square.
std::vector<FieldElement> square_roots(const FieldElement& x);

/// First element of square_roots(x); throws FieldError when x is not a square.
FieldElement canonical_sqrt(const FieldElement& x);

// Plain modular helpers used by the fast elimination paths.
namespace modp {

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
  const std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
  return a >= b ? a - b : a + p - b;
}
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept { return (a * b) % p; }
std::uint64_t pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) noexcept;
/// Requires a != 0 mod p.
inline std::uint64_t inv(std::uint64_t a, std::uint64_t p) noexcept { return pow(a, p - 2, p); }
/// Square roots of a mod p in ascending order (0, 1 or 2 of them).
std::vector<std::uint64_t> sqrt(std::uint64_t a, std::uint64_t p);

}  // namespace modp

}  // namespace skewminor
