#include "evpoly/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "evpoly/errors.hpp"

namespace evpoly {

Rational make_rational(long long num, long long den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  Rational q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  auto bad = [&]() { return PreconditionError("malformed rational '" + text + "'"); };
  if (text.empty()) throw bad();
  auto slash = text.find('/');
  auto check_int = [&](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw bad();
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') throw bad();
  };
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  check_int(num);
  check_int(den);
  if (!den.empty() && den[0] == '-') throw bad();
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw PreconditionError("rational with zero denominator: '" + text + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

unsigned totient(unsigned m) {
  unsigned result = m;
  unsigned n = m;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials where the divisor is monic.
std::vector<long long> divide_monic(std::vector<long long> num, const std::vector<long long>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<long long> quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    long long c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return quot;
}

std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  if (a.size() < b.size()) return {Poly{}, a};
  const long long db = static_cast<long long>(b.size()) - 1;
  Poly q(a.size() - b.size() + 1, Rational(0));
  for (long long i = static_cast<long long>(a.size()) - 1; i >= db; --i) {
    if (a[i] == 0) continue;
    Rational c = a[i] / b.back();
    q[i - db] = c;
    for (long long j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  trim(a);
  return {q, a};
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(unsigned m) {
  static std::mutex mu;
  static std::map<unsigned, std::vector<long long>> cache;
  if (m == 0) throw PreconditionError("cyclotomic order must be positive");
  std::lock_guard<std::mutex> lock(mu);
  // Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e, built over the divisors of
  // m in increasing order so every factor is already cached.
  for (unsigned d = 1; d <= m; ++d) {
    if (m % d != 0 || cache.count(d)) continue;
    std::vector<long long> q(d + 1, 0);
    q[0] = -1;
    q[d] = 1;
    for (unsigned e = 1; e < d; ++e)
      if (d % e == 0) q = divide_monic(q, cache.at(e));
    cache.emplace(d, std::move(q));
  }
  return cache.at(m);
}

Cyclotomic::Cyclotomic() : order_(1), coeffs_{Rational(0)} {}

Cyclotomic::Cyclotomic(const Rational& q) : order_(1), coeffs_{q} {}

Cyclotomic::Cyclotomic(long long v) : order_(1), coeffs_{make_rational(v)} {}

Cyclotomic::Cyclotomic(unsigned order, std::vector<Rational> coeffs, bool reduced)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (order_ == 0) throw PreconditionError("cyclotomic order must be positive");
  const std::size_t phi = totient(order_);
  if (!reduced) {
    const auto& cp = cyclotomic_polynomial(order_);
    for (std::size_t i = coeffs_.size(); i-- > phi;) {
      if (coeffs_[i] == 0) continue;
      Rational c = coeffs_[i];
      for (std::size_t j = 0; j <= phi; ++j) coeffs_[i - phi + j] -= c * static_cast<long>(cp[j]);
    }
  }
  coeffs_.resize(phi, Rational(0));
}

Cyclotomic Cyclotomic::from_coeffs(unsigned order, std::vector<Rational> coeffs) {
  return Cyclotomic(order, std::move(coeffs), false);
}

Cyclotomic Cyclotomic::root_of_unity(unsigned order, long long exponent) {
  if (order == 0) throw PreconditionError("cyclotomic order must be positive");
  long long e = exponent % static_cast<long long>(order);
  if (e < 0) e += order;
  std::vector<Rational> c(static_cast<std::size_t>(e) + 1, Rational(0));
  c[static_cast<std::size_t>(e)] = 1;
  return from_coeffs(order, std::move(c));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

std::optional<Rational> Cyclotomic::as_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return std::nullopt;
  return coeffs_[0];
}

Cyclotomic Cyclotomic::embed(unsigned n) const {
  if (n == 0 || n % order_ != 0)
    throw ContextError("cannot embed Q(zeta_" + std::to_string(order_) + ") into Q(zeta_" +
                       std::to_string(n) + ")");
  if (n == order_) return *this;
  const std::size_t step = n / order_;
  std::vector<Rational> c((coeffs_.size() - 1) * step + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * step] = coeffs_[i];
  return from_coeffs(n, std::move(c));
}

std::optional<unsigned> Cyclotomic::root_exponent() const {
  for (unsigned t = 0; t < order_; ++t)
    if (*this == root_of_unity(order_, t)) return t;
  return std::nullopt;
}

unsigned Cyclotomic::common_order(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.order_;
  if (a.order_ == 1) return b.order_;
  if (b.order_ == 1) return a.order_;
  throw ContextError("mixed cyclotomic contexts: orders " + std::to_string(a.order_) + " and " +
                     std::to_string(b.order_));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  const unsigned m = common_order(*this, o);
  if (order_ != m) *this = embed(m);
  if (o.order_ != m) return *this += o.embed(m);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  const unsigned m = common_order(*this, o);
  if (m == 1) {
    coeffs_[0] *= o.coeffs_[0];
    return *this;
  }
  if (o.order_ == 1) {
    for (auto& c : coeffs_) c *= o.coeffs_[0];
    return *this;
  }
  if (order_ == 1) {
    Rational s = coeffs_[0];
    *this = o;
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  *this = from_coeffs(m, poly_mul(coeffs_, o.coeffs_));
  return *this;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw PreconditionError("division by zero in Q(zeta_m)");
  if (order_ == 1 || as_rational()) {
    Cyclotomic r = *this;
    Rational c = 1 / coeffs_[0];
    r.coeffs_.assign(r.coeffs_.size(), Rational(0));
    r.coeffs_[0] = c;
    return r;
  }
  // Extended Euclid on (a, Phi_m); the field property guarantees gcd 1.
  const auto& cp = cyclotomic_polynomial(order_);
  Poly r0;
  for (long long c : cp) r0.emplace_back(static_cast<long>(c));
  Poly r1(coeffs_.begin(), coeffs_.end());
  trim(r1);
  Poly s0, s1{Rational(1)};
  while (!r1.empty() && !(r1.size() == 1)) {
    auto [q, r] = divmod(r0, r1);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw VerificationError("non-invertible cyclotomic element");
  Rational c = 1 / r1[0];
  for (auto& x : s1) x *= c;
  return from_coeffs(order_, std::move(s1));
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

Cyclotomic Cyclotomic::pow(long long e) const {
  Cyclotomic base = e < 0 ? inverse() : *this;
  unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  Cyclotomic result = Cyclotomic(1).embed(order_);
  while (n > 0) {
    if (n & 1ULL) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  if (a.order_ == 1) return a.embed(b.order_).coeffs_ == b.coeffs_;
  if (b.order_ == 1) return a.coeffs_ == b.embed(a.order_).coeffs_;
  return false;
}

std::string Cyclotomic::to_string() const {
  if (order_ == 1) return coeffs_[0].get_str();
  std::ostringstream os;
  os << "[m=" << order_ << ":";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? ", " : " ") << coeffs_[i].get_str();
  os << "]";
  return os.str();
}

Rational binomial(long long n, long long r) {
  if (r < 0 || n < 0 || r > n) return Rational(0);
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return Rational(out);
}

}  // namespace evpoly
