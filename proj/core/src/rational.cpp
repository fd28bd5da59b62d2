#include "rcsep/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace rcsep {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("rational: empty literal");
  auto slash = text.find('/');
  auto check_int = [&](const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '+' || s[0] == '-')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](const std::string& s) { return s[0] == '+' ? s.substr(1) : s; };
  if (slash == std::string::npos) {
    if (!check_int(text, true)) throw std::invalid_argument("rational: bad literal '" + text + "'");
    return Rational(mpq_class(mpz_class(strip_plus(text))));
  }
  std::string ns = text.substr(0, slash);
  std::string ds = text.substr(slash + 1);
  if (!check_int(ns, true) || !check_int(ds, false))
    throw std::invalid_argument("rational: bad literal '" + text + "'");
  ns = strip_plus(ns);
  mpz_class den(ds);
  if (den == 0) throw std::invalid_argument("rational: zero denominator in '" + text + "'");
  mpq_class q(mpz_class(ns), den);
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("rational: division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

mpz_class floor_int(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return q;
}

mpz_class ceil_int(const Rational& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return q;
}

Rational round_down(const Rational& r, const mpz_class& max_den) {
  if (max_den < 1) throw std::domain_error("round_down: denominator cap must be >= 1");
  mpz_class k = floor_int(Rational(mpq_class(r.raw() * mpq_class(max_den))));
  return Rational(mpq_class(k, max_den));
}

Rational round_up(const Rational& r, const mpz_class& max_den) {
  if (max_den < 1) throw std::domain_error("round_up: denominator cap must be >= 1");
  mpz_class k = ceil_int(Rational(mpq_class(r.raw() * mpq_class(max_den))));
  return Rational(mpq_class(k, max_den));
}

mpz_class least_n_with_inverse_below(const Rational& r) {
  if (r.sign() <= 0) throw std::domain_error("least_n_with_inverse_below: needs a positive bound");
  // 1/n < r  <=>  n > 1/r.
  mpz_class n = floor_int(Rational(1) / r) + 1;
  if (n < 1) n = 1;
  return n;
}

mpz_class least_n_at_least(const Rational& r) {
  mpz_class n = ceil_int(r);
  if (n < 1) n = 1;
  return n;
}

}  // namespace rcsep
