#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace rcsep {

// Exact rational scalar. Always canonical: positive denominator, reduced to
// lowest terms. All geometric predicates in this project are decided on these
// (or on one-square-root extensions of them); no floating point is involved.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}           // NOLINT(google-explicit-constructor)
  Rational(int n) : v_(n) {}            // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class v);

  // Parses "p/q" or "p" with an optional leading sign. Throws std::invalid_argument.
  static Rational parse(const std::string& text);

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  Rational abs() const;

  std::string str() const;
  double approx() const { return v_.get_d(); }  // views/plots only, never predicates

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

inline Rational min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a >= b ? a : b; }
inline Rational sq(const Rational& a) { return a * a; }

// floor(r) as an arbitrary-precision integer.
mpz_class floor_int(const Rational& r);
mpz_class ceil_int(const Rational& r);

// Largest rational <= r (resp. smallest >= r) with denominator <= max_den.
// Uses the grid k/max_den; sufficient for capping coefficient growth.
Rational round_down(const Rational& r, const mpz_class& max_den);
Rational round_up(const Rational& r, const mpz_class& max_den);

// Smallest positive integer n with 1/n < r (requires r > 0).
mpz_class least_n_with_inverse_below(const Rational& r);

// Smallest positive integer n with n >= r (at least 1).
mpz_class least_n_at_least(const Rational& r);

}  // namespace rcsep
