#include "evpoly/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace evpoly {

PolynomialQ binomial_polynomial(std::size_t num_vars, std::size_t var, unsigned b, unsigned e) {
  if (e == 0) throw PreconditionError("binomial_polynomial needs e >= 1");
  // prod_{j=1}^{e-1} (n - b + j) / (e-1)!
  PolynomialQ p = PolynomialQ::constant(num_vars, Rational(1));
  Rational fact = 1;
  for (unsigned j = 1; j < e; ++j) {
    PolynomialQ factor = PolynomialQ::variable(num_vars, var);
    factor += PolynomialQ::constant(num_vars, make_rational(static_cast<long long>(j) - b));
    p = p * factor;
    fact *= j;
  }
  return p * Rational(1 / fact);
}

PolynomialQ univariate(const std::vector<Rational>& coeffs) {
  PolynomialQ p(1);
  for (unsigned i = 0; i < coeffs.size(); ++i) p.add_term({i}, coeffs[i]);
  return p;
}

std::vector<Rational> dense_coefficients(const PolynomialQ& p) {
  if (p.num_vars() != 1) throw ArityError("dense_coefficients needs a univariate polynomial");
  std::vector<Rational> out(p.total_degree() + 1, Rational(0));
  for (const auto& [e, c] : p.terms()) out[e[0]] = c;
  if (p.is_zero()) out.assign(1, Rational(0));
  return out;
}

PolynomialC to_scalar_polynomial(const PolynomialQ& p) {
  PolynomialC out(p.num_vars());
  for (const auto& [e, c] : p.terms()) out.add_term(e, Scalar(c));
  return out;
}

std::vector<std::string> default_variable_names(std::size_t num_vars) {
  if (num_vars == 1) return {"n"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < num_vars; ++i) names.push_back("n" + std::to_string(i + 1));
  return names;
}

namespace {

struct RenderedTerm {
  bool negative;
  std::string coeff;  // absolute value, empty when it is 1 and a monomial follows
  std::string monomial;
};

std::string monomial_text(const Exponent& e, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += names[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

// Graded order: total degree ascending, then earlier variables first.
std::vector<Exponent> graded_order(std::vector<Exponent> es) {
  std::sort(es.begin(), es.end(), [](const Exponent& a, const Exponent& b) {
    unsigned da = 0, db = 0;
    for (unsigned x : a) da += x;
    for (unsigned x : b) db += x;
    if (da != db) return da < db;
    return a > b;
  });
  return es;
}

std::string join(const std::vector<RenderedTerm>& terms, bool compact) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    if (i == 0) {
      if (t.negative) out += "-";
    } else {
      out += t.negative ? " - " : " + ";
    }
    out += t.coeff;
    if (!t.coeff.empty() && !t.monomial.empty() && !compact) out += ' ';
    out += t.monomial;
  }
  return out;
}

template <class C, class Render>
std::string format_generic(const Polynomial<C>& p, Render render) {
  auto names = default_variable_names(p.num_vars());
  const bool compact = p.num_vars() == 1;
  std::vector<Exponent> es;
  for (const auto& [e, c] : p.terms()) es.push_back(e);
  std::vector<RenderedTerm> terms;
  for (const auto& e : graded_order(es)) {
    RenderedTerm t = render(p.terms().at(e));
    t.monomial = monomial_text(e, names);
    if (t.monomial.empty() && t.coeff.empty()) t.coeff = "1";
    terms.push_back(std::move(t));
  }
  return join(terms, compact);
}

RenderedTerm render_rational(const Rational& c, bool allow_elide) {
  RenderedTerm t{c < 0, "", ""};
  Rational a = abs(c);
  if (a == 1 && allow_elide) return t;
  if (is_integer(a))
    t.coeff = a.get_str();
  else
    t.coeff = "(" + a.get_str() + ")";
  return t;
}

}  // namespace

std::string format_polynomial(const PolynomialQ& p) {
  return format_generic(p, [](const Rational& c) { return render_rational(c, true); });
}

std::string format_polynomial(const PolynomialC& p) {
  return format_generic(p, [](const Scalar& c) {
    if (auto q = c.as_rational()) return render_rational(*q, true);
    return RenderedTerm{false, "(" + c.to_string() + ")", ""};
  });
}

bool has_integer_coefficients(const PolynomialQ& p) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [](const auto& kv) { return is_integer(kv.second); });
}

}  // namespace evpoly
