#include "grassdt/exact.hpp"

#include <limits>
#include <ostream>

namespace grassdt {

Integer::Integer(const std::string& decimal) {
  try {
    v_ = Rep(decimal);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not an integer: '" + decimal + "'");
  }
}

Integer& Integer::operator/=(const Integer& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

Integer& Integer::operator%=(const Integer& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ %= o.v_;
  return *this;
}

std::int64_t Integer::to_int64() const {
  if (v_ > std::numeric_limits<std::int64_t>::max() ||
      v_ < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("integer does not fit in 64 bits: " + str());
  return v_.convert_to<std::int64_t>();
}

std::size_t Integer::hash() const {
  std::size_t h = static_cast<std::size_t>(v_.sign() + 1);
  const auto& backend = v_.backend();
  for (unsigned i = 0; i < backend.size(); ++i)
    h ^= std::hash<std::uint64_t>{}(backend.limbs()[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.rep(); }

Integer pow(const Integer& base, unsigned exponent) {
  return Integer(Integer::Rep(boost::multiprecision::pow(base.rep(), exponent)));
}

Integer gcd(const Integer& a, const Integer& b) {
  return Integer(Integer::Rep(boost::multiprecision::gcd(a.rep(), b.rep())));
}

Integer divide_exact(const Integer& num, const Integer& den) {
  if (den.is_zero()) throw std::domain_error("division by zero");
  Integer::Rep q, r;
  boost::multiprecision::divide_qr(num.rep(), den.rep(), q, r);
  if (!r.is_zero()) throw std::domain_error("inexact integer division");
  return Integer(std::move(q));
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  v_ = Rep(num.rep(), den.rep());
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

bool Rational::is_integer() const { return boost::multiprecision::denominator(v_) == 1; }

Integer Rational::numerator() const {
  return Integer(Integer::Rep(boost::multiprecision::numerator(v_)));
}

Integer Rational::denominator() const {
  return Integer(Integer::Rep(boost::multiprecision::denominator(v_)));
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.str(); }

}  // namespace grassdt
