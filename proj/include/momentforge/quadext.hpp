#pragma once

#include <string>
#include <vector>

#include "momentforge/rational.hpp"

namespace momentforge {

// Real quadratic extension element a + b*sqrt(d).
//
// Canonical form: d is a square-free non-negative integer, d == 0 implies
// b == 0 (the rational embedding), d == 1 never occurs. Signs and orderings
// are decided exactly by rational case analysis; comparing values from two
// different fields isolates one radical and squares with sign tracking.
class QuadExt {
public:
  QuadExt() : a_(0), b_(0), d_(0) {}
  QuadExt(Rat a) : a_(std::move(a)), b_(0), d_(0) {}
  QuadExt(long n) : a_(n), b_(0), d_(0) {}
  QuadExt(Rat a, Rat b, unsigned long d);

  // sqrt of a non-negative rational, as an exact QuadExt.
  static QuadExt sqrt_of(const Rat& radicand);
  static QuadExt parse(const std::string& s);

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  unsigned long d() const { return d_; }
  bool is_rational() const { return d_ == 0; }
  Rat as_rational() const;

  int sign() const;
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }
  friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
  QuadExt inverse() const;

  double to_double() const;
  // Floating value at `prec` bits, error well below one ulp of the result.
  mpf_class to_mpf(unsigned prec) const;

  std::string str() const;
  std::string decimal(int digits) const;

private:
  Rat a_, b_;
  unsigned long d_;
};

// -1 / 0 / +1 comparison of two values from possibly different fields.
int quad_cmp(const QuadExt& x, const QuadExt& y);
int quad_sign(const QuadExt& x);

inline bool quad_lt(const QuadExt& x, const QuadExt& y) { return quad_cmp(x, y) < 0; }
inline bool quad_eq(const QuadExt& x, const QuadExt& y) { return quad_cmp(x, y) == 0; }

// Largest integer <= x, computed exactly.
mpz_class quad_floor(const QuadExt& x);

// Some rational strictly between lo and hi (requires lo < hi).
Rat rational_between(const QuadExt& lo, const QuadExt& hi);
Rat rational_below(const QuadExt& x);
Rat rational_above(const QuadExt& x);

// Square-free factorization helper: n = s^2 * f with f square-free
// (best effort for huge cofactors; exact for all desk-scale inputs).
void extract_square(const mpz_class& n, mpz_class& square_root_part, mpz_class& free_part);

}  // namespace momentforge
