#include "lie/rational.hpp"

#include <cctype>

#include "lie/errors.hpp"

namespace lie {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool valid_integer_token(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational rational_from_string(const std::string& text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    if (!valid_integer_token(text)) throw Error("malformed rational: '" + text + "'");
    return Rational(Integer(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!valid_integer_token(num) || !valid_integer_token(den))
    throw Error("malformed rational: '" + text + "'");
  return make_rational(Integer(num), Integer(den));
}

std::string rational_to_string(const Rational& value) {
  return value.get_str();  // canonical "p" or "p/q"
}

Rational rational_pow(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (base == 0 && exp < 0) throw Error("negative power of zero");
  const unsigned long k = static_cast<unsigned long>(exp < 0 ? -exp : exp);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), k);
  return exp > 0 ? make_rational(num, den) : make_rational(den, num);
}

}  // namespace lie
