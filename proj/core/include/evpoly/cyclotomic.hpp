#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace evpoly {

/// Arbitrary precision rational, always kept in lowest terms by GMP.
using Rational = mpq_class;

Rational make_rational(long long num, long long den = 1);
/// Parses "p", "-p" or "p/q". Throws PreconditionError on malformed text or a
/// zero denominator.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);
bool is_integer(const Rational& q);

/// Euler's totient.
unsigned totient(unsigned m);

/// Integer coefficients (constant term first) of the m-th cyclotomic
/// polynomial. Results are memoized; safe to call concurrently.
const std::vector<long long>& cyclotomic_polynomial(unsigned m);

/// An element of Q(zeta_m) written as a polynomial in zeta_m of degree
/// < phi(m), reduced modulo the m-th cyclotomic polynomial. The
/// representation is canonical, so equality is coefficientwise.
///
/// Order 1 is the rational context. Binary operations require equal orders,
/// except that an order-1 operand is promoted into the other operand's field.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(const Rational& q);  // NOLINT(google-explicit-constructor)
  Cyclotomic(long long v);        // NOLINT(google-explicit-constructor)
  Cyclotomic(int v) : Cyclotomic(static_cast<long long>(v)) {}  // NOLINT

  /// Reduces an arbitrary-length coefficient list modulo Phi_m.
  static Cyclotomic from_coeffs(unsigned order, std::vector<Rational> coeffs);
  /// zeta_m^exponent; negative exponents allowed.
  static Cyclotomic root_of_unity(unsigned order, long long exponent);

  unsigned order() const { return order_; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  bool is_zero() const;
  std::optional<Rational> as_rational() const;

  /// Re-expresses the element in Q(zeta_n); requires order() | n.
  Cyclotomic embed(unsigned n) const;

  /// Smallest t in [0, order) with *this == zeta^t, if any.
  std::optional<unsigned> root_exponent() const;

  Cyclotomic inverse() const;
  Cyclotomic pow(long long e) const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

  /// Structural equality; an order-1 value compares equal to its embedding.
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// "p/q" for rationals, otherwise "c0 + c1*z + ... (z^m=1)"-style text.
  std::string to_string() const;

 private:
  Cyclotomic(unsigned order, std::vector<Rational> coeffs, bool reduced);
  static unsigned common_order(const Cyclotomic& a, const Cyclotomic& b);

  unsigned order_ = 1;
  std::vector<Rational> coeffs_;
};

using Scalar = Cyclotomic;

/// Binomial coefficient C(n, r) as a rational, 0 when r < 0 or r > n.
Rational binomial(long long n, long long r);

}  // namespace evpoly
