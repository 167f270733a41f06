#include "halfspec/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace halfspec {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  if (text.find('/') != std::string::npos) {
    Rational q;
    if (q.set_str(text, 10) != 0 || q.get_den() == 0) throw std::invalid_argument("bad rational '" + text + "'");
    q.canonicalize();
    return q;
  }
  // Decimal with optional exponent.
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') negative = text[pos++] == '-';
  Integer digits = 0;
  long scale = 0;
  bool seen_digit = false;
  bool after_point = false;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits = digits * 10 + (c - '0');
      if (after_point) --scale;
      seen_digit = true;
    } else if (c == '.' && !after_point) {
      after_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw std::invalid_argument("bad rational '" + text + "'");
  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E') throw std::invalid_argument("bad rational '" + text + "'");
    const std::string exp = text.substr(pos + 1);
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(exp, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad exponent in '" + text + "'");
    }
    if (used != exp.size() || e > 1000 || e < -1000) throw std::invalid_argument("bad exponent in '" + text + "'");
    scale += e;
  }
  Rational q(digits);
  Integer ten = 10;
  Integer p;
  mpz_pow_ui(p.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(scale < 0 ? -scale : scale));
  if (scale < 0)
    q /= p;
  else
    q *= p;
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_decimal(const Rational& q, int decimals) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(decimals));
  Integer num = q.get_num() * scale;
  Integer floored;
  mpz_fdiv_q(floored.get_mpz_t(), num.get_mpz_t(), q.get_den_mpz_t());
  const bool negative = floored < 0;
  Integer mag = abs(floored);
  std::string digits = mag.get_str();
  if (static_cast<int>(digits.size()) <= decimals) digits.insert(0, decimals + 1 - digits.size(), '0');
  std::string out = digits.substr(0, digits.size() - decimals);
  if (decimals > 0) out += "." + digits.substr(digits.size() - decimals);
  return negative ? "-" + out : out;
}

Rational pow2(long e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e < 0) return Rational(Integer(1), p);
  return Rational(p);
}

}  // namespace halfspec
