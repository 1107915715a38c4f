#pragma once

// Sparse multivariate (Laurent) polynomials with exact integer coefficients.
//
// Terms are kept in a map ordered by total degree, then by descending
// exponents at the first differing variable (so y1*y2 precedes y1*y3, and
// y3*y7 precedes y7*y8). The order is a group order on exponent vectors,
// which is what makes leading-term division exact for Laurent exponents too.

#include "grassdt/exact.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace grassdt {

class InexactDivision : public std::domain_error {
 public:
  InexactDivision() : std::domain_error("inexact division") {}
};

template <class Exp>
struct MonomialOrder {
  bool operator()(const std::vector<Exp>& a, const std::vector<Exp>& b) const {
    long long da = 0, db = 0;
    for (Exp e : a) da += e;
    for (Exp e : b) db += e;
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] > b[i];
    return false;
  }
};

template <class Exp>
class BasicPoly {
 public:
  using Exponents = std::vector<Exp>;
  using Terms = std::map<Exponents, Integer, MonomialOrder<Exp>>;

  BasicPoly() = default;
  explicit BasicPoly(int num_vars) : num_vars_(num_vars) {}

  static BasicPoly constant(int num_vars, const Integer& c) {
    BasicPoly p(num_vars);
    if (!c.is_zero()) p.terms_.emplace(Exponents(num_vars, 0), c);
    return p;
  }
  static BasicPoly one(int num_vars) { return constant(num_vars, Integer(1)); }
  /// The monomial coeff * prod y_i^{e_i}.
  static BasicPoly monomial(Exponents e, const Integer& coeff = Integer(1)) {
    BasicPoly p(static_cast<int>(e.size()));
    if (!coeff.is_zero()) p.terms_.emplace(std::move(e), coeff);
    return p;
  }
  /// The variable y_i (1-based).
  static BasicPoly variable(int num_vars, int i) {
    Exponents e(num_vars, 0);
    e.at(i - 1) = 1;
    return monomial(std::move(e));
  }

  int num_vars() const { return num_vars_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  Integer coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
  }
  Integer constant_term() const { return coefficient(Exponents(num_vars_, 0)); }

  /// Adds `c` to the coefficient of `e`, dropping the term if it cancels.
  void add_term(const Exponents& e, const Integer& c) {
    if (c.is_zero()) return;
    check_vars(static_cast<int>(e.size()));
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  BasicPoly& operator+=(const BasicPoly& o) {
    check_vars(o.num_vars_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  BasicPoly& operator-=(const BasicPoly& o) {
    check_vars(o.num_vars_);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
  friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }

  friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
    if (a.num_vars_ != b.num_vars_) throw std::invalid_argument("polynomials over different variable sets");
    BasicPoly out(a.num_vars_);
    Exponents e(a.num_vars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (int i = 0; i < a.num_vars_; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  BasicPoly& operator*=(const BasicPoly& o) { return *this = *this * o; }

  friend bool operator==(const BasicPoly& a, const BasicPoly& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  BasicPoly pow(unsigned n) const {
    BasicPoly result = one(num_vars_), base = *this;
    while (n) {
      if (n & 1u) result *= base;
      n >>= 1u;
      if (n) base *= base;
    }
    return result;
  }

  /// Exact quotient s with s * d == *this. Throws InexactDivision otherwise.
  /// For Laurent exponents a non-divisible input may not terminate on its own,
  /// so `max_steps` bounds the number of quotient terms produced.
  BasicPoly divide_exact(const BasicPoly& d, std::size_t max_steps = 1'000'000) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    check_vars(d.num_vars_);
    BasicPoly quotient(num_vars_), rem = *this;
    const auto& [lead_e, lead_c] = *d.terms_.rbegin();
    Exponents e(num_vars_);
    std::size_t steps = 0;
    while (!rem.is_zero()) {
      if (++steps > max_steps) throw InexactDivision();
      const auto& [re, rc] = *rem.terms_.rbegin();
      for (int i = 0; i < num_vars_; ++i) {
        e[i] = re[i] - lead_e[i];
        if constexpr (std::is_unsigned_v<Exp>)
          if (re[i] < lead_e[i]) throw InexactDivision();
      }
      Integer::Rep q, r;
      boost::multiprecision::divide_qr(rc.rep(), lead_c.rep(), q, r);
      if (!r.is_zero()) throw InexactDivision();
      const BasicPoly t = monomial(e, Integer(std::move(q)));
      quotient += t;
      rem -= t * d;
    }
    return quotient;
  }

  /// Every coefficient is strictly positive.
  bool has_positive_coefficients() const {
    for (const auto& [e, c] : terms_)
      if (c.sign() <= 0) return false;
    return true;
  }

 private:
  void check_vars(int n) const {
    if (n != num_vars_) throw std::invalid_argument("polynomials over different variable sets");
  }

  int num_vars_ = 0;
  Terms terms_;
};

using Poly = BasicPoly<std::uint32_t>;
using LaurentPoly = BasicPoly<std::int32_t>;

/// Canonical text: terms in map order joined by " + ", monomials like
/// "y3*y7^2", coefficients other than 1 written as "2*y1", zero as "0".
/// `var` is the variable stem ("y" or "x").
template <class Exp>
std::string to_string(const BasicPoly<Exp>& p, std::string_view var = "y");

/// Parses the canonical text form back (Poly only; exponents must be >= 0).
Poly parse_poly(std::string_view text, int num_vars);

extern template std::string to_string(const BasicPoly<std::uint32_t>&, std::string_view);
extern template std::string to_string(const BasicPoly<std::int32_t>&, std::string_view);

}  // namespace grassdt
