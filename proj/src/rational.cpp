#include "algforge/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace algforge {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("Rat: division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num_part = text.substr(0, slash);
  const std::string_view den_part =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num_part) || !is_integer_literal(den_part) || den_part[0] == '-' ||
      den_part[0] == '+') {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  const std::string n(num_part[0] == '+' ? num_part.substr(1) : num_part);
  const mpz_class num(n, 10);
  const mpz_class den(std::string(den_part), 10);
  return Rat(num, den);
}

std::string Rat::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str(10);
  return v_.get_num().get_str(10) + "/" + v_.get_den().get_str(10);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace algforge
