#include "qsr/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace qsr {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  auto digits_only = [](const std::string& s, std::size_t from) {
    if (from >= s.size()) return false;
    for (std::size_t i = from; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  const bool negative = text[0] == '-';

  if (auto slash = text.find('/'); slash != std::string::npos) {
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!digits_only(num, start) || !digits_only(den, 0))
      throw std::invalid_argument("malformed rational '" + text + "'");
    mpz_class d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    Rational q(mpz_class(num), d);
    q.canonicalize();
    return q;
  }
  if (auto dot = text.find('.'); dot != std::string::npos) {
    const std::string whole = text.substr(start, dot - start);
    const std::string frac = text.substr(dot + 1);
    if ((!whole.empty() && !digits_only(whole, 0)) || !digits_only(frac, 0))
      throw std::invalid_argument("malformed decimal '" + text + "'");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class num(whole.empty() ? std::string("0") : whole);
    num = num * scale + mpz_class(frac);
    Rational q(negative ? mpz_class(-num) : num, scale);
    q.canonicalize();
    return q;
  }
  if (!digits_only(text, start)) throw std::invalid_argument("malformed rational '" + text + "'");
  return Rational(mpz_class(text));
}

std::string rational_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string decimal_string(const Rational& q, int digits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const bool negative = q < 0;
  Rational mag = negative ? Rational(-q) : q;
  // round half up on the magnitude
  Rational scaled = mag * scale + Rational(1, 2);
  mpz_class rounded = scaled.get_num() / scaled.get_den();
  mpz_class whole = rounded / scale;
  mpz_class frac = rounded % scale;
  std::string frac_str = frac.get_str();
  if (static_cast<int>(frac_str.size()) < digits)
    frac_str.insert(0, static_cast<std::size_t>(digits) - frac_str.size(), '0');
  std::string out = (negative && rounded != 0) ? "-" : "";
  out += whole.get_str();
  if (digits > 0) out += "." + frac_str;
  return out;
}

Rational abs_value(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace qsr
