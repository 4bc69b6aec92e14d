#include "adjstat/algebra/rational.hpp"

#include <stdexcept>

namespace adjstat {

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw std::domain_error("BigRational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_token(num)) {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) return BigRational(parse_integer(num));
  const std::string_view den = text.substr(slash + 1);
  if (!is_integer_token(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
  const BigInt d = parse_integer(den);
  if (sgn(d) == 0) {
    throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  }
  return BigRational(parse_integer(num), d);
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
  value_ /= o.value_;
  return *this;
}

BigRational BigRational::operator-() const { return BigRational(mpq_class(-value_)); }

BigRational BigRational::inverse() const { return BigRational(1) / *this; }

BigRational BigRational::pow(long exp) const {
  if (exp < 0) return inverse().pow(-exp);
  BigInt n;
  BigInt d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exp));
  mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exp));
  return BigRational(n, d);
}

std::optional<BigRational> BigRational::exact_sqrt() const {
  if (sign() < 0) return std::nullopt;
  const BigInt n = numerator();
  const BigInt d = denominator();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) {
    return std::nullopt;
  }
  BigInt rn;
  BigInt rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return BigRational(rn, rd);
}

std::string BigRational::to_string() const {
  if (is_integer()) return value_.get_num().get_str(10);
  return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

}  // namespace adjstat
