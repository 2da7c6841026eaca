#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "momentforge/errors.hpp"

namespace momentforge {

// Exact rational, always canonical: lowest terms, positive denominator.
class Rat {
public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}
  Rat(long n, long d) : v_(n, d) { normalize(); }
  explicit Rat(const mpq_class& q) : v_(q) { normalize(); }
  explicit Rat(const mpz_class& n) : v_(n) {}
  Rat(const mpz_class& n, const mpz_class& d) : v_(n, d) { normalize(); }

  static Rat parse(const std::string& s);

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rat operator-() const { return Rat(mpq_class(-v_), NoNorm{}); }
  Rat abs() const { return sign() < 0 ? -*this : *this; }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_), NoNorm{}); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_), NoNorm{}); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_), NoNorm{}); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw InternalError("rational division by zero");
    return Rat(mpq_class(a.v_ / b.v_), NoNorm{});
  }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  Rat squared() const { return *this * *this; }
  Rat pow(unsigned e) const;

  double to_double() const { return v_.get_d(); }
  mpz_class floor() const;

  // "p/q", or "p" when the denominator is 1.
  std::string str() const;
  // Always "p/q", for schema fields.
  std::string str_slash() const;
  // Fixed-point decimal with `digits` fractional digits, round-half-away.
  std::string decimal(int digits) const;

private:
  struct NoNorm {};
  Rat(mpq_class q, NoNorm) : v_(std::move(q)) {}
  void normalize() {
    if (v_.get_den() == 0) throw InternalError("rational with zero denominator");
    v_.canonicalize();
  }
  mpq_class v_;
};

}  // namespace momentforge
