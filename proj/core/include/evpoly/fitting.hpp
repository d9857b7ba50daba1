#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "evpoly/cyclotomic.hpp"
#include "evpoly/polynomial.hpp"
#include "evpoly/rational_gf.hpp"

namespace evpoly {

using GridPoint = std::vector<long long>;

struct Sample {
  GridPoint point;
  Rational value;
};

using RationalOracle = std::function<Rational(std::span<const long long>)>;
using ScalarOracle = std::function<Scalar(std::span<const long long>)>;

/// Exponents of total degree <= degree in the flagged variables, in graded
/// order. An empty mask means all variables.
std::vector<Exponent> monomials_up_to(std::size_t num_vars, unsigned degree, const std::vector<bool>& mask = {});

/// Exact interpolation over the monomials of total degree <= degree (in the
/// variables flagged by `mask`). Every sample must be fitted. Throws
/// FitError when the samples do not determine the polynomial or contradict
/// each other.
PolynomialQ fit_polynomial(const std::vector<Sample>& samples, std::size_t num_vars, unsigned degree,
                           const std::vector<bool>& mask = {});

/// f(n) = constituents[n mod period](n).
struct Quasipolynomial {
  unsigned period = 1;
  std::vector<PolynomialQ> constituents;

  Rational evaluate(long long n) const;
};

/// Fits each residue class on its first degree+1 sample points in [0, last]
/// and checks the remaining ones.
Quasipolynomial fit_quasipolynomial(const std::function<Rational(long long)>& oracle, unsigned period,
                                    unsigned degree, long long last);

struct FitSepOptions {
  unsigned degree = 1;
  /// Smallest threshold tried. Thresholds are positive integers by default.
  unsigned min_threshold = 1;
  unsigned max_threshold = 8;
};

/// Smallest threshold c in [min, max] for which every word of V(l, c) admits
/// a polynomial fit on the free coordinates in (c, c+D+3] that also holds on
/// the held-out shell (c+D+3, c+D+5]. Throws InconclusiveError otherwise.
SEPDescription fit_sep(const RationalOracle& oracle, std::size_t arity, const FitSepOptions& options);

struct FitExpPolyOptions {
  unsigned degree = 0;
  /// The fit is made at points with every coordinate above this value.
  unsigned threshold = 0;
};

/// Solves for polynomials p_t with oracle(n) = sum_t p_t(n) zeta_m^{<t,n>}
/// over Q(zeta_m), for the candidate exponent vectors `roots`. Zero
/// summands are dropped.
ExpPolyDescription fit_exp_poly(const ScalarOracle& oracle, std::size_t arity, unsigned order,
                                const std::vector<std::vector<unsigned>>& roots, const FitExpPolyOptions& options);

struct Mismatch {
  GridPoint point;
  Scalar expected;
  Scalar actual;
};

struct FitReport {
  std::size_t checked = 0;
  std::vector<Mismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Compares `fit` with `oracle` on every grid point.
FitReport verify_fit(const ScalarOracle& fit, const ScalarOracle& oracle, const std::vector<GridPoint>& grid);
FitReport verify_fit(const SEPDescription& fit, const RationalOracle& oracle, const std::vector<GridPoint>& grid);
FitReport verify_fit(const ExpPolyDescription& fit, const ScalarOracle& oracle, const std::vector<GridPoint>& grid);
FitReport verify_fit(const Quasipolynomial& fit, const std::function<Rational(long long)>& oracle,
                     const std::vector<GridPoint>& grid);

/// All points of [lo, hi]^arity, first coordinate most significant.
std::vector<GridPoint> box_grid(std::size_t arity, long long lo, long long hi);

/// Integrality flags; not errors.
bool has_integer_coefficients(const SEPDescription& sep);
bool has_integer_coefficients(const Quasipolynomial& q);

}  // namespace evpoly
