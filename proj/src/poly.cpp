#include "grassdt/poly.hpp"

#include <cctype>
#include <sstream>

namespace grassdt {

template <class Exp>
std::string to_string(const BasicPoly<Exp>& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first_term) os << " + ";
    first_term = false;
    bool has_var = false;
    for (Exp x : e) has_var = has_var || x != 0;
    if (!has_var) {
      os << c;
      continue;
    }
    bool first_factor = true;
    if (c == Integer(-1)) {
      os << '-';
    } else if (!(c == Integer(1))) {
      os << c;
      first_factor = false;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!first_factor) os << '*';
      first_factor = false;
      os << var << (i + 1);
      if (e[i] != 1) os << '^' << static_cast<long long>(e[i]);
    }
  }
  return os.str();
}

template std::string to_string(const BasicPoly<std::uint32_t>&, std::string_view);
template std::string to_string(const BasicPoly<std::int32_t>&, std::string_view);

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

unsigned parse_unsigned(std::string_view s, std::string_view context) {
  if (s.empty() || s.size() > 9) throw std::invalid_argument("bad number in term '" + std::string(context) + "'");
  unsigned v = 0;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw std::invalid_argument("bad number in term '" + std::string(context) + "'");
    v = v * 10 + static_cast<unsigned>(ch - '0');
  }
  return v;
}

}  // namespace

Poly parse_poly(std::string_view text, int num_vars) {
  Poly out(num_vars);
  text = trim(text);
  if (text == "0") return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(" + ", pos);
    std::string_view term = trim(text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (term.empty()) throw std::invalid_argument("empty term in polynomial text");
    Integer coeff(1);
    Poly::Exponents e(num_vars, 0);
    if (term[0] == '-' && term.size() > 1 && term[1] == 'y') {
      coeff = Integer(-1);
      term.remove_prefix(1);
    }
    std::size_t fpos = 0;
    bool first = true;
    while (fpos <= term.size()) {
      std::size_t star = term.find('*', fpos);
      std::string_view factor = term.substr(fpos, star == std::string_view::npos ? std::string_view::npos : star - fpos);
      if (first && is_integer_text(factor)) {
        coeff = coeff * Integer(std::string(factor));
      } else {
        if (factor.size() < 2 || factor[0] != 'y') throw std::invalid_argument("bad factor '" + std::string(factor) + "'");
        std::size_t caret = factor.find('^');
        unsigned var = parse_unsigned(factor.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1), term);
        unsigned exp = caret == std::string_view::npos ? 1 : parse_unsigned(factor.substr(caret + 1), term);
        if (var < 1 || static_cast<int>(var) > num_vars)
          throw std::invalid_argument("variable index out of range in '" + std::string(term) + "'");
        e[var - 1] += exp;
      }
      first = false;
      if (star == std::string_view::npos) break;
      fpos = star + 1;
    }
    out.add_term(e, coeff);
    if (next == std::string_view::npos) break;
    pos = next + 3;
  }
  return out;
}

}  // namespace grassdt
