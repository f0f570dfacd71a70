#include "skewminor/field.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "skewminor/errors.hpp"

namespace skewminor {

namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 32;
constexpr std::uint64_t kExhaustiveSqrtBound = std::uint64_t{1} << 16;

std::uint64_t reduce(const mpz_class& value, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(p));
  return r.get_ui();
}

void require_same(const FieldElement& x, const FieldElement& y) {
  if (!(x.spec() == y.spec())) {
    throw SpecMismatchError("field mismatch: " + x.spec().to_string() + " vs " + y.spec().to_string());
  }
}

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

mpz_class parse_integer(std::string_view s) {
  if (!is_integer_text(s)) throw DomainError("malformed integer '" + std::string(s) + "'");
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return mpz_class(digits, 10);
}

}  // namespace

bool is_prime_number(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p == 2) throw DomainError("characteristic 2 is not supported");
  if (p >= kMaxModulus || !is_prime_number(p)) {
    throw DomainError("modulus " + std::to_string(p) + " is not an odd prime below 2^32");
  }
  return FieldSpec(FieldKind::prime, p);
}

std::string FieldSpec::to_string() const {
  return is_prime() ? "GF(" + std::to_string(modulus_) + ")" : "Q";
}

namespace modp {

std::uint64_t pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) noexcept {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = mul(result, base, p);
    base = mul(base, base, p);
    exp >>= 1U;
  }
  return result;
}

std::vector<std::uint64_t> sqrt(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return {0};
  if (p < kExhaustiveSqrtBound) {
    std::vector<std::uint64_t> roots;
    for (std::uint64_t r = 1; r < p && roots.size() < 2; ++r) {
      if (mul(r, r, p) == a) roots.push_back(r);
    }
    return roots;
  }
  // Euler's criterion, then Tonelli-Shanks.
  if (pow(a, (p - 1) / 2, p) != 1) return {};
  std::uint64_t q = p - 1;
  std::uint64_t s = 0;
  while ((q & 1U) == 0) {
    q >>= 1U;
    ++s;
  }
  std::uint64_t z = 2;
  while (pow(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t m = s;
  std::uint64_t c = pow(z, q, p);
  std::uint64_t t = pow(a, q, p);
  std::uint64_t r = pow(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0;
    std::uint64_t t2 = t;
    while (t2 != 1) {
      t2 = mul(t2, t2, p);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mul(b, b, p);
    m = i;
    c = mul(b, b, p);
    t = mul(t, c, p);
    r = mul(r, b, p);
  }
  const std::uint64_t other = p - r;
  return {std::min(r, other), std::max(r, other)};
}

}  // namespace modp

FieldElement::FieldElement(const FieldSpec& spec, long value) : spec_(spec) {
  if (spec.is_prime()) {
    const auto p = static_cast<long long>(spec.modulus());
    long long r = static_cast<long long>(value) % p;
    if (r < 0) r += p;
    value_ = static_cast<std::uint64_t>(r);
  } else {
    value_ = mpq_class(value);
  }
}

FieldElement::FieldElement(const FieldSpec& spec, const mpz_class& value) : spec_(spec) {
  if (spec.is_prime()) {
    value_ = reduce(value, spec.modulus());
  } else {
    value_ = mpq_class(value);
  }
}

FieldElement::FieldElement(const FieldSpec& spec, const mpq_class& value) : spec_(spec) {
  if (spec.is_prime()) {
    const std::uint64_t p = spec.modulus();
    const std::uint64_t den = reduce(value.get_den(), p);
    if (den == 0) throw DomainError("denominator vanishes in " + spec.to_string());
    value_ = modp::mul(reduce(value.get_num(), p), modp::inv(den, p), p);
  } else {
    mpq_class q(value);
    q.canonicalize();
    value_ = std::move(q);
  }
}

FieldElement FieldElement::from_residue(const FieldSpec& spec, std::uint64_t residue) {
  FieldElement e(spec, 0L);
  e.value_ = residue % spec.modulus();
  return e;
}

FieldElement FieldElement::parse(const FieldSpec& spec, std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return FieldElement(spec, parse_integer(text));
  const mpz_class num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw DomainError("denominator must be unsigned in '" + std::string(text) + "'");
  }
  const mpz_class den = parse_integer(den_text);
  if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  return FieldElement(spec, mpq_class(num, den));
}

std::string FieldElement::to_string() const {
  if (spec_.is_prime()) return std::to_string(std::get<std::uint64_t>(value_));
  const auto& q = std::get<mpq_class>(value_);
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool FieldElement::is_zero() const noexcept {
  if (spec_.is_prime()) return std::get<std::uint64_t>(value_) == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool FieldElement::is_one() const noexcept {
  if (spec_.is_prime()) return std::get<std::uint64_t>(value_) == 1;
  return std::get<mpq_class>(value_) == 1;
}

const mpq_class& FieldElement::rational() const {
  if (spec_.is_prime()) throw DomainError("prime-field element has no rational value");
  return std::get<mpq_class>(value_);
}

std::uint64_t FieldElement::residue() const {
  if (!spec_.is_prime()) throw DomainError("rational element has no residue");
  return std::get<std::uint64_t>(value_);
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  if (spec_.is_prime()) {
    return from_residue(spec_, modp::inv(std::get<std::uint64_t>(value_), spec_.modulus()));
  }
  return FieldElement(spec_, mpq_class(1 / std::get<mpq_class>(value_)));
}

FieldElement FieldElement::operator-() const {
  if (spec_.is_prime()) return from_residue(spec_, modp::sub(0, std::get<std::uint64_t>(value_), spec_.modulus()));
  return FieldElement(spec_, mpq_class(-std::get<mpq_class>(value_)));
}

FieldElement operator+(const FieldElement& x, const FieldElement& y) {
  require_same(x, y);
  if (x.spec_.is_prime()) {
    return FieldElement::from_residue(
        x.spec_, modp::add(std::get<std::uint64_t>(x.value_), std::get<std::uint64_t>(y.value_), x.spec_.modulus()));
  }
  return FieldElement(x.spec_, mpq_class(std::get<mpq_class>(x.value_) + std::get<mpq_class>(y.value_)));
}

FieldElement operator-(const FieldElement& x, const FieldElement& y) {
  require_same(x, y);
  if (x.spec_.is_prime()) {
    return FieldElement::from_residue(
        x.spec_, modp::sub(std::get<std::uint64_t>(x.value_), std::get<std::uint64_t>(y.value_), x.spec_.modulus()));
  }
  return FieldElement(x.spec_, mpq_class(std::get<mpq_class>(x.value_) - std::get<mpq_class>(y.value_)));
}

FieldElement operator*(const FieldElement& x, const FieldElement& y) {
  require_same(x, y);
  if (x.spec_.is_prime()) {
    return FieldElement::from_residue(
        x.spec_, modp::mul(std::get<std::uint64_t>(x.value_), std::get<std::uint64_t>(y.value_), x.spec_.modulus()));
  }
  return FieldElement(x.spec_, mpq_class(std::get<mpq_class>(x.value_) * std::get<mpq_class>(y.value_)));
}

FieldElement operator/(const FieldElement& x, const FieldElement& y) {
  require_same(x, y);
  return x * y.inverse();
}

bool operator==(const FieldElement& x, const FieldElement& y) {
  if (!(x.spec_ == y.spec_)) return false;
  if (x.spec_.is_prime()) return std::get<std::uint64_t>(x.value_) == std::get<std::uint64_t>(y.value_);
  return std::get<mpq_class>(x.value_) == std::get<mpq_class>(y.value_);
}

std::vector<FieldElement> square_roots(const FieldElement& x) {
  const FieldSpec& spec = x.spec();
  std::vector<FieldElement> out;
  if (spec.is_prime()) {
    for (std::uint64_t r : modp::sqrt(x.residue(), spec.modulus())) out.push_back(FieldElement::from_residue(spec, r));
    return out;
  }
  const mpq_class& q = x.rational();
  if (sgn(q) == 0) return {FieldElement::zero(spec)};
  if (sgn(q) < 0) return {};
  if (mpz_perfect_square_p(q.get_num().get_mpz_t()) == 0 || mpz_perfect_square_p(q.get_den().get_mpz_t()) == 0) {
    return {};
  }
  mpz_class num;
  mpz_class den;
  mpz_sqrt(num.get_mpz_t(), q.get_num().get_mpz_t());
  mpz_sqrt(den.get_mpz_t(), q.get_den().get_mpz_t());
  FieldElement root(spec, mpq_class(num, den));
  out.push_back(root);
  out.push_back(-root);
  return out;
}

FieldElement canonical_sqrt(const FieldElement& x) {
  auto roots = square_roots(x);
  if (roots.empty()) throw FieldError(x.to_string() + " is not a square in " + x.spec().to_string());
  return roots.front();
}

}  // namespace skewminor
