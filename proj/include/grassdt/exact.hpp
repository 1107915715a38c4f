#pragma once

// Exact scalar types usable as Eigen scalars.
//
// Boost.Multiprecision numbers cannot be dropped into Eigen 3.4 directly (their
// converting constructors are too greedy for Eigen's expression types), so
// both types below are thin value wrappers with a closed operator set.

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace grassdt {

class Integer {
 public:
  using Rep = boost::multiprecision::cpp_int;

  Integer() = default;
  Integer(int v) : v_(v) {}
  Integer(long v) : v_(v) {}
  Integer(long long v) : v_(v) {}
  Integer(unsigned v) : v_(v) {}
  Integer(unsigned long v) : v_(v) {}
  Integer(unsigned long long v) : v_(v) {}
  explicit Integer(Rep v) : v_(std::move(v)) {}
  explicit Integer(const std::string& decimal);

  const Rep& rep() const { return v_; }

  Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
  Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
  Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }
  // Truncating division, as for built-in integers.
  Integer& operator/=(const Integer& o);
  Integer& operator%=(const Integer& o);

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  friend Integer operator/(Integer a, const Integer& b) { return a /= b; }
  friend Integer operator%(Integer a, const Integer& b) { return a %= b; }
  Integer operator-() const { return Integer(Rep(-v_)); }

  friend bool operator==(const Integer& a, const Integer& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    const int c = a.v_.compare(b.v_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  int sign() const { return v_.sign(); }
  bool is_zero() const { return v_.is_zero(); }

  // Throws std::overflow_error when the value does not fit.
  std::int64_t to_int64() const;
  std::string str() const { return v_.str(); }
  std::size_t hash() const;

 private:
  Rep v_;
};

std::ostream& operator<<(std::ostream& os, const Integer& v);

inline Integer abs(const Integer& v) { return v.sign() < 0 ? -v : v; }
inline Integer positive_part(const Integer& v) { return v.sign() > 0 ? v : Integer(0); }
Integer pow(const Integer& base, unsigned exponent);
Integer gcd(const Integer& a, const Integer& b);

// Exact quotient; throws std::domain_error when `den` does not divide `num`.
Integer divide_exact(const Integer& num, const Integer& den);

class Rational {
 public:
  using Rep = boost::multiprecision::cpp_rational;

  Rational() = default;
  Rational(int v) : v_(v) {}
  Rational(long v) : v_(v) {}
  Rational(long long v) : v_(v) {}
  Rational(const Integer& v) : v_(v.rep()) {}
  Rational(const Integer& num, const Integer& den);
  explicit Rational(Rep v) : v_(std::move(v)) {}

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  // Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(Rep(-v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = a.v_.compare(b.v_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  int sign() const { return v_.sign(); }
  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const;
  Integer numerator() const;
  Integer denominator() const;
  std::string str() const { return v_.str(); }

 private:
  Rep v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& v);
inline Rational abs(const Rational& v) { return v.sign() < 0 ? -v : v; }

}  // namespace grassdt

template <>
struct std::hash<grassdt::Integer> {
  std::size_t operator()(const grassdt::Integer& v) const { return v.hash(); }
};

namespace Eigen {

template <>
struct NumTraits<grassdt::Integer> : GenericNumTraits<grassdt::Integer> {
  using Real = grassdt::Integer;
  using NonInteger = grassdt::Integer;
  using Literal = grassdt::Integer;
  using Nested = grassdt::Integer;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 8,
    MulCost = 16
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<grassdt::Rational> : GenericNumTraits<grassdt::Rational> {
  using Real = grassdt::Rational;
  using NonInteger = grassdt::Rational;
  using Literal = grassdt::Rational;
  using Nested = grassdt::Rational;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
