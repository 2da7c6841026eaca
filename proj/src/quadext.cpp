#include "momentforge/quadext.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <vector>

namespace momentforge {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t");
  size_t e = s.find_last_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

mpz_class parse_int(const std::string& s) {
  std::string t = trim(s);
  if (t.empty()) throw ParseError("empty integer literal");
  size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (start == t.size()) throw ParseError("bad integer literal '" + t + "'");
  for (size_t i = start; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i])))
      throw ParseError("bad integer literal '" + t + "'");
  return mpz_class(t);
}

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    const unsigned long limit = 10000;
    std::vector<bool> composite(limit + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long p = 2; p <= limit; ++p) {
      if (composite[p]) continue;
      out.push_back(p);
      for (unsigned long q = p * p; q <= limit; q += p) composite[q] = true;
    }
    return out;
  }();
  return primes;
}

}  // namespace

Rat Rat::parse(const std::string& s) {
  std::string t = trim(s);
  size_t slash = t.find('/');
  if (slash == std::string::npos) return Rat(parse_int(t));
  mpz_class n = parse_int(t.substr(0, slash));
  mpz_class d = parse_int(t.substr(slash + 1));
  if (d == 0) throw ParseError("zero denominator in '" + t + "'");
  return Rat(n, d);
}

Rat Rat::pow(unsigned e) const {
  Rat out(1);
  Rat base = *this;
  while (e) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

mpz_class Rat::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
  return q;
}

std::string Rat::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

std::string Rat::str_slash() const { return num().get_str() + "/" + den().get_str(); }

std::string Rat::decimal(int digits) const {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  mpz_class t = num() * scale * 2 + (sign() >= 0 ? den() : -den());
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), t.get_mpz_t(), mpz_class(den() * 2).get_mpz_t());
  bool neg = q < 0;
  mpz_class absq = neg ? mpz_class(-q) : q;
  std::string ds = absq.get_str();
  if ((int)ds.size() <= digits) ds.insert(0, digits + 1 - ds.size(), '0');
  ds.insert(ds.size() - digits, ".");
  return (neg ? "-" : "") + ds;
}

void extract_square(const mpz_class& n, mpz_class& square_root_part, mpz_class& free_part) {
  if (n < 0) throw InternalError("extract_square of negative number");
  square_root_part = 1;
  free_part = 1;
  if (n == 0) {
    free_part = 0;
    return;
  }
  mpz_class m = n;
  for (unsigned long p : small_primes()) {
    if (m == 1) break;
    mpz_class p2 = mpz_class(p) * p;
    while (mpz_divisible_p(m.get_mpz_t(), p2.get_mpz_t())) {
      m /= p2;
      square_root_part *= p;
    }
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      m /= p;
      free_part *= p;
    }
  }
  if (m > 1) {
    if (mpz_perfect_square_p(m.get_mpz_t())) {
      mpz_class r;
      mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
      square_root_part *= r;
    } else {
      free_part *= m;
    }
  }
}

QuadExt::QuadExt(Rat a, Rat b, unsigned long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d_ == 0 || b_.is_zero()) {
    b_ = Rat(0);
    d_ = 0;
    return;
  }
  mpz_class s, f;
  extract_square(mpz_class(d_), s, f);
  if (s != 1) {
    b_ = b_ * Rat(s);
    d_ = f.get_ui();
  }
  if (d_ == 1) {
    a_ += b_;
    b_ = Rat(0);
    d_ = 0;
  }
}

QuadExt QuadExt::sqrt_of(const Rat& radicand) {
  if (radicand.sign() < 0) throw InternalError("sqrt of negative rational");
  if (radicand.is_zero()) return QuadExt();
  mpz_class nm = radicand.num() * radicand.den();
  mpz_class s, f;
  extract_square(nm, s, f);
  if (f == 1) return QuadExt(Rat(s, radicand.den()));
  return QuadExt(Rat(0), Rat(s, radicand.den()), f.get_ui());
}

Rat QuadExt::as_rational() const {
  if (!is_rational()) throw MixedFieldError("value " + str() + " is irrational");
  return a_;
}

namespace {

// sign of a + b*sqrt(d), d > 0
int sign_one_radical(const Rat& a, const Rat& b, unsigned long d) {
  int sa = a.sign(), sb = b.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  Rat lhs = a.squared();
  Rat rhs = b.squared() * Rat((long)d);
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

// sign of A + B*sqrt(d1) + C*sqrt(d2), d1 != d2 both positive, B,C != 0
int sign_two_radicals(const Rat& A, const Rat& B, unsigned long d1, const Rat& C,
                      unsigned long d2) {
  int st = sign_one_radical(A, B, d1);
  int su = C.sign();
  if (st == 0) return su;
  if (st == su) return st;
  // |A + B sqrt(d1)| vs |C sqrt(d2)|: square both, compare in Q(sqrt(d1)).
  Rat ta = A.squared() + B.squared() * Rat((long)d1) - C.squared() * Rat((long)d2);
  Rat tb = Rat(2) * A * B;
  int s = sign_one_radical(ta, tb, d1);
  if (s == 0) return 0;
  return s > 0 ? st : su;
}

}  // namespace

int QuadExt::sign() const {
  if (d_ == 0) return a_.sign();
  return sign_one_radical(a_, b_, d_);
}

int quad_sign(const QuadExt& x) { return x.sign(); }

int quad_cmp(const QuadExt& x, const QuadExt& y) {
  if (x.d() == y.d() || y.d() == 0) {
    QuadExt diff(x.a() - y.a(), x.b() - y.b(), x.d());
    return diff.sign();
  }
  if (x.d() == 0) {
    QuadExt diff(x.a() - y.a(), -y.b(), y.d());
    return diff.sign();
  }
  return sign_two_radicals(x.a() - y.a(), x.b(), x.d(), -y.b(), y.d());
}

namespace {

std::pair<QuadExt, unsigned long> unify(const QuadExt& x, const QuadExt& y) {
  if (x.d() == y.d()) return {x, x.d()};
  if (x.d() == 0) return {QuadExt(x.a(), Rat(0), y.d()), y.d()};
  if (y.d() == 0) return {x, x.d()};
  throw MixedFieldError("incompatible quadratic fields sqrt(" + std::to_string(x.d()) +
                        ") and sqrt(" + std::to_string(y.d()) + ")");
}

}  // namespace

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
  auto [xu, d] = unify(x, y);
  Rat yb = (y.d() == 0) ? Rat(0) : y.b();
  return QuadExt(xu.a() + y.a(), xu.b() + yb, d);
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) { return x + (-y); }

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
  auto [xu, d] = unify(x, y);
  Rat yb = (y.d() == 0) ? Rat(0) : y.b();
  Rat a = xu.a() * y.a() + xu.b() * yb * Rat((long)d);
  Rat b = xu.a() * yb + xu.b() * y.a();
  return QuadExt(a, b, d);
}

QuadExt QuadExt::inverse() const {
  Rat denom = a_.squared() - b_.squared() * Rat((long)d_);
  if (denom.is_zero()) throw InternalError("inverse of zero");
  return QuadExt(a_ / denom, -b_ / denom, d_);
}

double QuadExt::to_double() const {
  return a_.to_double() + b_.to_double() * std::sqrt((double)d_);
}

mpf_class QuadExt::to_mpf(unsigned prec) const {
  mpf_class a(a_.raw(), prec);
  if (d_ == 0) return a;
  mpf_class root(0, prec);
  mpf_sqrt_ui(root.get_mpf_t(), d_);
  mpf_class b(b_.raw(), prec);
  return a + b * root;
}

mpz_class quad_floor(const QuadExt& x) {
  if (x.is_rational()) return x.a().floor();
  unsigned prec = 128;
  for (;;) {
    mpf_class v = x.to_mpf(prec);
    mpf_class fl;
    mpf_floor(fl.get_mpf_t(), v.get_mpf_t());
    mpz_class n(fl);
    // verify n <= x < n+1 exactly
    if (quad_cmp(QuadExt(Rat(n)), x) <= 0 && quad_cmp(x, QuadExt(Rat(mpz_class(n + 1)))) < 0) return n;
    if (quad_cmp(x, QuadExt(Rat(n))) < 0) {
      n -= 1;
      if (quad_cmp(QuadExt(Rat(n)), x) <= 0 && quad_cmp(x, QuadExt(Rat(mpz_class(n + 1)))) < 0) return n;
    } else if (quad_cmp(QuadExt(Rat(mpz_class(n + 1))), x) <= 0) {
      n += 1;
      if (quad_cmp(QuadExt(Rat(n)), x) <= 0 && quad_cmp(x, QuadExt(Rat(mpz_class(n + 1)))) < 0) return n;
    }
    prec *= 2;
    if (prec > 1u << 20) throw InternalError("quad_floor failed to converge");
  }
}

Rat rational_between(const QuadExt& lo, const QuadExt& hi) {
  if (quad_cmp(lo, hi) >= 0) throw InternalError("rational_between: empty interval");
  mpz_class two_k(1);
  for (int k = 0; k <= 4096; ++k) {
    // smallest grid point strictly above lo at spacing 1/2^k
    mpz_class n = mpz_class(quad_floor(lo * QuadExt(Rat(two_k))) + 1);
    Rat cand(n, two_k);
    QuadExt c(cand);
    if (quad_cmp(lo, c) < 0 && quad_cmp(c, hi) < 0) return cand;
    two_k *= 2;
  }
  throw InternalError("rational_between failed to converge");
}

Rat rational_below(const QuadExt& x) { return Rat(mpz_class(quad_floor(x) - 1)); }

Rat rational_above(const QuadExt& x) { return Rat(mpz_class(quad_floor(x) + 2)); }

std::string QuadExt::str() const {
  if (d_ == 0) return a_.str();
  std::string out = a_.str();
  out += b_.sign() < 0 ? " - " : " + ";
  out += b_.abs().str();
  out += "*sqrt(" + std::to_string(d_) + ")";
  return out;
}

std::string QuadExt::decimal(int digits) const {
  if (d_ == 0) return a_.decimal(digits);
  unsigned prec = 256 + 8 * (unsigned)digits;
  mpf_class v = to_mpf(prec);
  mpf_class scale(0, prec);
  mpf_set_ui(scale.get_mpf_t(), 10);
  mpf_pow_ui(scale.get_mpf_t(), scale.get_mpf_t(), digits);
  mpf_class scaled = v * scale;
  // round half away from zero
  mpf_class half(scaled >= 0 ? 0.5 : -0.5, prec);
  mpf_class shifted = scaled + half;
  mpf_class fl;
  mpf_floor(fl.get_mpf_t(), shifted.get_mpf_t());
  mpz_class q(fl);
  return Rat(q, mpz_class(Rat(10).pow(digits).num())).decimal(digits);
}

QuadExt QuadExt::parse(const std::string& s) {
  std::string t = trim(s);
  size_t sq = t.find("*sqrt(");
  if (sq == std::string::npos) return QuadExt(Rat::parse(t));
  size_t close = t.find(')', sq);
  if (close == std::string::npos) throw ParseError("unterminated sqrt in '" + t + "'");
  mpz_class d = parse_int(t.substr(sq + 6, close - sq - 6));
  if (d < 0) throw ParseError("negative radicand in '" + t + "'");
  // split "<a> +|- <b>" before "*sqrt(d)"
  std::string head = t.substr(0, sq);
  size_t op = std::string::npos;
  int opsign = +1;
  for (size_t i = 1; i + 1 < head.size(); ++i) {
    if ((head[i] == '+' || head[i] == '-') && head[i - 1] == ' ' && head[i + 1] == ' ') {
      op = i;
      opsign = head[i] == '-' ? -1 : +1;
    }
  }
  Rat a(0), b(0);
  if (op == std::string::npos) {
    b = Rat::parse(head);
  } else {
    a = Rat::parse(head.substr(0, op));
    b = Rat::parse(head.substr(op + 1));
    if (opsign < 0) b = -b;
  }
  return QuadExt(a, b, d.get_ui());
}

}  // namespace momentforge
