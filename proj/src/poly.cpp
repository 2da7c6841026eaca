#include "momentforge/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace momentforge {

bool Poly::TermOrder::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Poly Poly::constant(std::vector<std::string> variables, const Rat& c) {
  Poly p(std::move(variables));
  p.add_term(std::vector<int>(p.arity(), 0), c);
  return p;
}

Poly Poly::variable(std::vector<std::string> variables, size_t index) {
  Poly p(std::move(variables));
  std::vector<int> e(p.arity(), 0);
  e.at(index) = 1;
  p.add_term(e, Rat(1));
  return p;
}

void Poly::add_term(const std::vector<int>& exponents, const Rat& coeff) {
  if (exponents.size() != arity()) throw InternalError("exponent arity mismatch");
  if (coeff.is_zero()) return;
  auto it = terms_.find(exponents);
  if (it == terms_.end()) {
    terms_.emplace(exponents, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int Poly::total_degree() const {
  if (terms_.empty()) return 0;
  auto& e = terms_.rbegin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

Poly operator+(const Poly& p, const Poly& q) {
  if (p.vars_ != q.vars_) throw InternalError("polynomial variable lists differ");
  Poly out = p;
  for (auto& [e, c] : q.terms_) out.add_term(e, c);
  return out;
}

Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }

Poly Poly::operator-() const {
  Poly out(vars_);
  for (auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Poly operator*(const Poly& p, const Poly& q) {
  if (p.vars_ != q.vars_) throw InternalError("polynomial variable lists differ");
  Poly out(p.vars_);
  for (auto& [ea, ca] : p.terms_) {
    for (auto& [eb, cb] : q.terms_) {
      std::vector<int> e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

void Poly::check_arity(size_t point_arity) const {
  if (point_arity != arity()) throw InternalError("evaluation point arity mismatch");
}

Rat Poly::eval(const std::vector<Rat>& point) const {
  check_arity(point.size());
  Rat acc(0);
  for (auto& [e, c] : terms_) {
    Rat term = c;
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) term *= point[i].pow((unsigned)e[i]);
    acc += term;
  }
  return acc;
}

QuadExt Poly::eval(const std::vector<QuadExt>& point) const {
  check_arity(point.size());
  unsigned long field = 0;
  for (auto& p : point) {
    if (p.d() == 0 || p.d() == field) continue;
    if (field != 0)
      throw MixedFieldError("point coordinates lie in incompatible quadratic fields");
    field = p.d();
  }
  QuadExt acc;
  for (auto& [e, c] : terms_) {
    QuadExt term(c);
    for (size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) term = term * point[i];
    acc = acc + term;
  }
  return acc;
}

double Poly::eval(const std::vector<double>& point) const {
  check_arity(point.size());
  double acc = 0;
  for (auto& [e, c] : terms_) {
    double term = c.to_double();
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) term *= std::pow(point[i], e[i]);
    acc += term;
  }
  return acc;
}

std::vector<Poly> Poly::grad() const {
  std::vector<Poly> out;
  out.reserve(arity());
  for (size_t k = 0; k < arity(); ++k) {
    Poly d(vars_);
    for (auto& [e, c] : terms_) {
      if (e[k] == 0) continue;
      std::vector<int> e2 = e;
      e2[k] -= 1;
      d.add_term(e2, c * Rat(e[k]));
    }
    out.push_back(std::move(d));
  }
  return out;
}

Poly Poly::reindex(std::vector<std::string> new_variables,
                   const std::vector<size_t>& positions) const {
  if (positions.size() != arity()) throw InternalError("reindex position arity mismatch");
  Poly out(std::move(new_variables));
  for (auto& [e, c] : terms_) {
    std::vector<int> e2(out.arity(), 0);
    for (size_t i = 0; i < e.size(); ++i) e2.at(positions[i]) = e[i];
    out.add_term(e2, c);
  }
  return out;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : terms_) {
    Rat coeff = c;
    if (first) {
      first = false;
      if (coeff.sign() < 0) {
        os << "-";
        coeff = -coeff;
      }
    } else {
      os << (coeff.sign() < 0 ? " - " : " + ");
      coeff = coeff.abs();
    }
    bool has_vars = std::any_of(e.begin(), e.end(), [](int x) { return x > 0; });
    if (!has_vars) {
      os << coeff.str();
      continue;
    }
    os << coeff.str();
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "*" << vars_[i];
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

namespace {

struct Tokenized {
  int sign;
  std::string body;
};

std::vector<Tokenized> split_terms(const std::string& text) {
  std::vector<Tokenized> out;
  std::string t = text;
  size_t pos = 0;
  int next_sign = +1;
  while (pos < t.size() && t[pos] == ' ') ++pos;
  if (pos < t.size() && t[pos] == '-') {
    next_sign = -1;
    ++pos;
  }
  std::string cur;
  while (pos < t.size()) {
    if (pos + 2 < t.size() && t[pos] == ' ' && (t[pos + 1] == '+' || t[pos + 1] == '-') &&
        t[pos + 2] == ' ') {
      out.push_back({next_sign, cur});
      next_sign = t[pos + 1] == '-' ? -1 : +1;
      cur.clear();
      pos += 3;
      continue;
    }
    cur += t[pos++];
  }
  out.push_back({next_sign, cur});
  return out;
}

}  // namespace

Poly Poly::parse(const std::string& text, std::vector<std::string> variables) {
  Poly out(std::move(variables));
  std::string t = text;
  if (t.find_first_not_of(" \t") == std::string::npos) throw ParseError("empty polynomial");
  if (t == "0") return out;
  for (auto& tok : split_terms(t)) {
    std::vector<std::string> factors;
    std::string cur;
    for (char ch : tok.body) {
      if (ch == '*') {
        factors.push_back(cur);
        cur.clear();
      } else if (ch != ' ') {
        cur += ch;
      }
    }
    factors.push_back(cur);
    if (factors.empty() || factors[0].empty())
      throw ParseError("bad term '" + tok.body + "'");
    Rat coeff(1);
    size_t fi = 0;
    if (std::isdigit(static_cast<unsigned char>(factors[0][0]))) {
      coeff = Rat::parse(factors[0]);
      fi = 1;
    }
    if (tok.sign < 0) coeff = -coeff;
    std::vector<int> e(out.arity(), 0);
    for (; fi < factors.size(); ++fi) {
      std::string f = factors[fi];
      int exp = 1;
      size_t caret = f.find('^');
      if (caret != std::string::npos) {
        exp = std::stoi(f.substr(caret + 1));
        f = f.substr(0, caret);
      }
      auto it = std::find(out.vars_.begin(), out.vars_.end(), f);
      if (it == out.vars_.end()) throw ParseError("unknown variable '" + f + "'");
      e[it - out.vars_.begin()] += exp;
    }
    out.add_term(e, coeff);
  }
  return out;
}

}  // namespace momentforge
