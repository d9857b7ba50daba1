#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "evpoly/cyclotomic.hpp"
#include "evpoly/errors.hpp"

namespace evpoly {

/// Exponent vector of a monomial, one entry per variable.
using Exponent = std::vector<unsigned>;

inline bool is_zero_coeff(const Rational& c) { return c == 0; }
inline bool is_zero_coeff(const Scalar& c) { return c.is_zero(); }

/// Sparse multivariate polynomial with exact coefficients. Zero coefficients
/// are never stored, so two polynomials are equal iff their term maps are.
template <class C>
class Polynomial {
 public:
  explicit Polynomial(std::size_t num_vars = 1) : num_vars_(num_vars) {}

  static Polynomial constant(std::size_t num_vars, const C& c) {
    Polynomial p(num_vars);
    p.add_term(Exponent(num_vars, 0), c);
    return p;
  }

  static Polynomial variable(std::size_t num_vars, std::size_t index) {
    Polynomial p(num_vars);
    Exponent e(num_vars, 0);
    e.at(index) = 1;
    p.add_term(std::move(e), C(1));
    return p;
  }

  std::size_t num_vars() const { return num_vars_; }
  const std::map<Exponent, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Exponent e, const C& c) {
    if (e.size() != num_vars_) throw ArityError("monomial arity mismatch");
    if (is_zero_coeff(c)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  C coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C(0) : it->second;
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
      unsigned s = 0;
      for (unsigned x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  /// True if the only variables that occur are those flagged in `allowed`.
  bool uses_only(const std::vector<bool>& allowed) const {
    for (const auto& [e, c] : terms_)
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0 && !allowed[i]) return false;
    return true;
  }

  C evaluate(std::span<const long long> point) const {
    if (point.size() != num_vars_) throw ArityError("evaluation point arity mismatch");
    C acc(0);
    for (const auto& [e, c] : terms_) {
      mpz_class mono = 1;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        mpz_class p;
        mpz_class base(static_cast<long>(point[i]));
        mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), e[i]);
        mono *= p;
      }
      acc += c * C(Rational(mono));
    }
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Polynomial& operator*=(const C& s) {
    if (is_zero_coeff(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const C& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check(b);
    Polynomial r(a.num_vars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e(ea);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        r.add_term(std::move(e), ca * cb);
      }
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

 private:
  void check(const Polynomial& o) const {
    if (o.num_vars_ != num_vars_) throw ArityError("polynomial arity mismatch");
  }

  std::size_t num_vars_;
  std::map<Exponent, C> terms_;
};

using PolynomialQ = Polynomial<Rational>;
using PolynomialC = Polynomial<Scalar>;

/// binom(n - b + e - 1, e - 1) as a polynomial in variable `var`; e >= 1.
/// Agrees with the coefficient of x^n in x^b/(1-x)^e for every n >= b.
PolynomialQ binomial_polynomial(std::size_t num_vars, std::size_t var, unsigned b, unsigned e);

/// Univariate polynomial from dense coefficients (constant term first).
PolynomialQ univariate(const std::vector<Rational>& coeffs);
/// Dense coefficients of a univariate polynomial, constant term first.
std::vector<Rational> dense_coefficients(const PolynomialQ& p);

PolynomialC to_scalar_polynomial(const PolynomialQ& p);

/// Default variable names: "n" for one variable, "n1".."nl" otherwise.
std::vector<std::string> default_variable_names(std::size_t num_vars);

/// Graded rendering, lowest degree first: "1 + 2n + n^2", "1 + n1 + 2 n2".
std::string format_polynomial(const PolynomialQ& p);
std::string format_polynomial(const PolynomialC& p);

/// Every coefficient is an integer.
bool has_integer_coefficients(const PolynomialQ& p);

}  // namespace evpoly
