#pragma once

#include <map>
#include <string>
#include <vector>

#include "momentforge/quadext.hpp"
#include "momentforge/rational.hpp"

namespace momentforge {

// Sparse multivariate polynomial with exact rational coefficients.
//
// Terms are stored under the canonical order used for serialization:
// ascending total degree, ties broken by descending lexicographic exponent
// vector (earlier variables weigh more). No zero coefficients are kept.
class Poly {
public:
  struct TermOrder {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
  };
  using TermMap = std::map<std::vector<int>, Rat, TermOrder>;

  Poly() = default;
  explicit Poly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

  static Poly constant(std::vector<std::string> variables, const Rat& c);
  static Poly variable(std::vector<std::string> variables, size_t index);
  static Poly parse(const std::string& text, std::vector<std::string> variables);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  size_t arity() const { return vars_.size(); }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;

  void add_term(const std::vector<int>& exponents, const Rat& coeff);

  friend Poly operator+(const Poly& p, const Poly& q);
  friend Poly operator-(const Poly& p, const Poly& q);
  friend Poly operator*(const Poly& p, const Poly& q);
  Poly operator-() const;

  Rat eval(const std::vector<Rat>& point) const;
  QuadExt eval(const std::vector<QuadExt>& point) const;
  double eval(const std::vector<double>& point) const;

  // Component k is the partial derivative in variable k.
  std::vector<Poly> grad() const;

  // Same polynomial over a wider variable list; `positions[i]` is where
  // variable i now lives.
  Poly reindex(std::vector<std::string> new_variables, const std::vector<size_t>& positions) const;

  std::string str() const;

private:
  void check_arity(size_t point_arity) const;
  std::vector<std::string> vars_;
  TermMap terms_;
};

}  // namespace momentforge
