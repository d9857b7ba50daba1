#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "evpoly/colorings.hpp"
#include "evpoly/cyclotomic.hpp"
#include "evpoly/fitting.hpp"

namespace evpoly {

using LatticePoint = std::vector<long long>;

/// Convex hull of finitely many rational points.
class RationalPolytope {
 public:
  explicit RationalPolytope(std::vector<std::vector<Rational>> vertices);

  std::size_t dimension() const { return k_; }
  const std::vector<std::vector<Rational>>& vertices() const { return vertices_; }
  /// Least common denominator of the vertex coordinates.
  long long denominator() const { return m_; }
  bool is_lattice() const { return m_ == 1; }
  bool in_nonnegative_orthant() const;

 private:
  std::size_t k_;
  std::vector<std::vector<Rational>> vertices_;
  long long m_ = 1;
};

/// nP intersected with Z^k, sorted.
std::vector<LatticePoint> lattice_points(const RationalPolytope& p, unsigned n);

/// Number of lattice points in nP as a quasipolynomial of period
/// denominator(P); period 1 means a polynomial. Throws VerificationError if
/// the fit disagrees with direct counts on the extra points.
Quasipolynomial ehrhart_fit(const RationalPolytope& p);

/// First point of the symmetric difference of
/// nP and (n-k)*(P n Z^k) + (kP n Z^k), if any. Lattice P, n >= k.
std::optional<LatticePoint> verify_decomposition_identity(const RationalPolytope& p, unsigned n);

/// The same for rational P of denominator m, n >= mk, with
/// ((n-mk-r)/m)*(mP n Z^k) + ((mk+r)P n Z^k), r = n mod m.
std::optional<LatticePoint> verify_rational_decomposition(const RationalPolytope& p, unsigned n);

/// Number of distinct colors on nP n Z^k.
std::size_t color_count(const RationalPolytope& p, const AdditiveColoring& chi, unsigned n);

struct ColorCountOptions {
  /// Degree bound; defaults to the dimension.
  std::optional<unsigned> degree;
  unsigned max_start = 12;
  /// Held-out points per residue class.
  unsigned held_out = 4;
};

struct ColorCountFit {
  /// The fit matches every sampled n >= start.
  unsigned start = 0;
  Quasipolynomial fit;
  FitReport verification;
  /// The sumset reduction was cross-checked (associated colorings only).
  bool reduction_checked = false;
};

/// Throws InconclusiveError if no start up to max_start passes the held-out
/// points, VerificationError if the sumset reduction disagrees with the counts.
ColorCountFit color_count_fit(const RationalPolytope& p, const AdditiveColoring& chi,
                              const ColorCountOptions& options = {});

}  // namespace evpoly
